#include "gw/counting.hpp"

#include <limits>
#include <map>
#include <stdexcept>

namespace gw {

namespace {

long long to_long_checked(const Integer& v, const char* what) {
  if (v > std::numeric_limits<long long>::max() ||
      v < std::numeric_limits<long long>::min()) {
    throw std::overflow_error(std::string(what) + ": count exceeds int64");
  }
  return v.convert_to<long long>();
}

// Counts {J : |J| = k, 0 <= j_i <= m_i} by convolving the bounded strings.
Integer bounded_composition_count(const WeightVector& m, long long k) {
  if (k < 0 || k > m.total()) return 0;
  std::vector<Integer> counts(static_cast<size_t>(k) + 1, 0);
  counts[0] = 1;
  long long reach = 0;
  for (int i = 0; i < m.n(); ++i) {
    reach = std::min<long long>(k, reach + m.m(i));
    std::vector<Integer> next(static_cast<size_t>(k) + 1, 0);
    for (long long total = 0; total <= reach; ++total) {
      Integer acc = 0;
      const long long low = std::max<long long>(0, total - m.m(i));
      for (long long prev = low; prev <= total; ++prev) {
        acc += counts[static_cast<size_t>(prev)];
      }
      next[static_cast<size_t>(total)] = std::move(acc);
    }
    counts = std::move(next);
  }
  return counts[static_cast<size_t>(k)];
}

void check_sing_level(const WeightVector& m, int k, const char* what) {
  if (k < 0 || 2LL * k > m.total()) {
    throw std::invalid_argument(std::string(what) +
                                ": level must satisfy 0 <= k <= |M|/2");
  }
}

}  // namespace

Integer binomial(long long a, long long b) {
  if (b < 0) throw std::invalid_argument("binomial: negative lower index");
  if (a < b) return 0;
  Integer result = 1;
  for (long long i = 1; i <= b; ++i) {
    result *= a - b + i;
    result /= i;
  }
  return result;
}

long long dim_sing_formula(const WeightVector& m, int k) {
  const int n = m.n();
  if (n < 2) {
    throw std::domain_error(
        "dim_sing_formula: unsupported for fewer than two factors");
  }
  check_sing_level(m, k, "dim_sing_formula");
  Integer total = 0;
  // Subsets of factors via bitmask; n <= 5 at desk scale keeps this tiny.
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    long long subset_sum = 0;
    int q = 0;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) {
        subset_sum += m.m(i);
        ++q;
      }
    }
    const Integer term = binomial(k + n - 2 - subset_sum - q, n - 2);
    total += (q % 2 == 0) ? term : -term;
  }
  return to_long_checked(total, "dim_sing_formula");
}

long long dim_sing_bruteforce(const WeightVector& m, int k) {
  check_sing_level(m, k, "dim_sing_bruteforce");
  Integer count = bounded_composition_count(m, k);
  if (k > 0) count -= bounded_composition_count(m, k - 1);
  return to_long_checked(count, "dim_sing_bruteforce");
}

long long cg_multiplicity(const std::vector<int>& q, int r) {
  if (r < 0) throw std::invalid_argument("cg_multiplicity: negative weight");
  std::map<int, Integer> spectrum;
  spectrum[0] = 1;  // the trivial module; L_0 x L_b = L_b
  for (int qi : q) {
    if (qi < 0) throw std::invalid_argument("cg_multiplicity: negative class");
    std::map<int, Integer> next;
    for (const auto& [a, mult] : spectrum) {
      for (int c = std::abs(a - qi); c <= a + qi; c += 2) {
        next[c] += mult;
      }
    }
    spectrum = std::move(next);
  }
  auto it = spectrum.find(r);
  return it == spectrum.end() ? 0 : to_long_checked(it->second,
                                                    "cg_multiplicity");
}

long long schubert_special_intersection(const std::vector<int>& q, int d) {
  if (d < 1) {
    throw std::invalid_argument("schubert_special_intersection: d must be >= 1");
  }
  long long codim = 0;
  bool out_of_range = false;
  for (int qi : q) {
    if (qi < 0) {
      throw std::invalid_argument(
          "schubert_special_intersection: negative class");
    }
    out_of_range = out_of_range || qi > d - 1;
    codim += qi;
  }
  if (codim != 2LL * d - 2) {
    throw std::invalid_argument(
        "schubert_special_intersection: codimensions must sum to 2d-2");
  }
  if (out_of_range) return 0;  // zero class in G_2(d+1)
  return cg_multiplicity(q, 0);
}

long long schubert_formula(const std::vector<int>& q, int d) {
  const int s = static_cast<int>(q.size());
  const int n = s - 1;
  if (n < 2) {
    throw std::domain_error(
        "schubert_formula: unsupported for fewer than three classes");
  }
  if (d < 1) throw std::invalid_argument("schubert_formula: d must be >= 1");
  long long codim = 0;
  for (int qi : q) {
    if (qi < 0 || qi > d - 1) {
      throw std::invalid_argument("schubert_formula: class out of range");
    }
    codim += qi;
  }
  if (codim != 2LL * d - 2) {
    throw std::invalid_argument(
        "schubert_formula: codimensions must sum to 2d-2");
  }
  Integer total = 0;
  // The sum runs over nonempty subsets of the FIRST n classes only.
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    long long subset_sum = 0;
    int l = 0;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) {
        subset_sum += q[static_cast<size_t>(i)];
        ++l;
      }
    }
    const Integer term = binomial(subset_sum + l - d - 1, n - 2);
    total += ((n - l) % 2 == 0) ? term : -term;
  }
  return to_long_checked(total, "schubert_formula");
}

}  // namespace gw
