#pragma once

#include <boost/rational.hpp>

#include <cmath>
#include <complex>

namespace sb {

using cplx = std::complex<double>;
using Rational = boost::rational<long long>;

// Coefficient ring interface used by SElement and the supermatrix code.
template <class S>
struct Ring;

template <>
struct Ring<cplx> {
  static cplx zero() { return {0.0, 0.0}; }
  static cplx one() { return {1.0, 0.0}; }
  static bool is_zero(const cplx& a) { return a.real() == 0.0 && a.imag() == 0.0; }
  static cplx ratio(long long num, long long den) {
    return {static_cast<double>(num) / static_cast<double>(den), 0.0};
  }
  static double magnitude(const cplx& a) { return std::abs(a); }
  static cplx divide(const cplx& a, const cplx& b) { return a / b; }
};

template <>
struct Ring<double> {
  static double zero() { return 0.0; }
  static double one() { return 1.0; }
  static bool is_zero(double a) { return a == 0.0; }
  static double ratio(long long num, long long den) {
    return static_cast<double>(num) / static_cast<double>(den);
  }
  static double magnitude(double a) { return std::abs(a); }
  static double divide(double a, double b) { return a / b; }
};

template <>
struct Ring<Rational> {
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static bool is_zero(const Rational& a) { return a.numerator() == 0; }
  static Rational ratio(long long num, long long den) { return Rational(num, den); }
  static double magnitude(const Rational& a) { return a.numerator() == 0 ? 0.0 : 1.0; }
  static Rational divide(const Rational& a, const Rational& b) { return a / b; }
};

}  // namespace sb
