#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace gw {

using Complex = std::complex<double>;
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Coefficient comparisons for floating polynomials: relative tolerance with
// an absolute floor, matching the solver residual targets.
inline constexpr double kCoeffRelTol = 1e-9;
inline constexpr double kCoeffAbsTol = 1e-12;

inline bool approx_equal(double a, double b, double rel = kCoeffRelTol,
                         double abs = kCoeffAbsTol) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return std::abs(a - b) <= std::max(abs, rel * scale);
}

inline bool approx_equal(const Complex& a, const Complex& b,
                         double rel = kCoeffRelTol, double abs = kCoeffAbsTol) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return std::abs(a - b) <= std::max(abs, rel * scale);
}

/// Per-scalar-kind glue: exactness flag, zero tests, conversions.
template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Complex> {
  static constexpr bool exact = false;
  static Complex zero() { return Complex(0.0, 0.0); }
  static Complex one() { return Complex(1.0, 0.0); }
  static Complex from_int(long long v) { return Complex(double(v), 0.0); }
  static Complex from_integer(const Integer& v) {
    return Complex(v.convert_to<double>(), 0.0);
  }
  static Complex from_rational(const Rational& v) {
    return Complex(v.convert_to<double>(), 0.0);
  }
  static double magnitude(const Complex& x) { return std::abs(x); }
  static bool is_zero(const Complex& x, double tol = 0.0) {
    return std::abs(x) <= tol;
  }
  static bool equal(const Complex& a, const Complex& b) {
    return approx_equal(a, b);
  }
};

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static Rational from_int(long long v) { return Rational(v); }
  static Rational from_integer(const Integer& v) { return Rational(v); }
  static Rational from_rational(const Rational& v) { return v; }
  static double magnitude(const Rational& x) {
    return std::abs(x.convert_to<double>());
  }
  static bool is_zero(const Rational& x, double = 0.0) { return x == 0; }
  static bool equal(const Rational& a, const Rational& b) { return a == b; }
};

inline Complex to_complex(const Rational& x) {
  return Complex(x.convert_to<double>(), 0.0);
}
inline Complex to_complex(const Integer& x) {
  return Complex(x.convert_to<double>(), 0.0);
}

/// Parses "a", "bi", or "a+bi" / "a-bi" (also accepts "j" for the unit).
Complex parse_complex(const std::string& text);

/// Formats like the parser reads, mainly for log lines.
std::string format_complex(const Complex& z);

}  // namespace gw
