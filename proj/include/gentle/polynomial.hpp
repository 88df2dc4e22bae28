#pragma once

#include <gentle/rational.hpp>

#include <complex>
#include <string>
#include <vector>

namespace gentle {

/// Dense univariate polynomial with exact integer coefficients, lowest degree
/// first.  The zero polynomial has an empty coefficient list.
class IntegerPolynomial {
public:
  IntegerPolynomial() = default;
  explicit IntegerPolynomial(std::vector<Integer> coeffs);
  static IntegerPolynomial constant(const Integer& c);
  static IntegerPolynomial monomial(const Integer& c, int degree);
  /// t^n - c
  static IntegerPolynomial binomial(int n, const Integer& c);

  const std::vector<Integer>& coefficients() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Integer& leading() const { return c_.back(); }
  Integer coeff(int i) const;

  IntegerPolynomial operator+(const IntegerPolynomial& o) const;
  IntegerPolynomial operator-(const IntegerPolynomial& o) const;
  IntegerPolynomial operator*(const IntegerPolynomial& o) const;
  IntegerPolynomial operator-() const;
  bool operator==(const IntegerPolynomial& o) const { return c_ == o.c_; }

  IntegerPolynomial pow(int e) const;
  IntegerPolynomial derivative() const;

  /// Exact quotient; returns false (leaving q untouched) when the division
  /// leaves a remainder or is not integral.
  bool divide_exact(const IntegerPolynomial& d, IntegerPolynomial& q) const;

  std::complex<long double> eval(std::complex<long double> z) const;
  Integer eval(const Integer& x) const;

  /// Human readable form in the variable t, highest degree first.
  std::string to_string() const;

private:
  void trim();
  std::vector<Integer> c_;
};

/// gcd over Q, returned primitive with positive leading coefficient.
IntegerPolynomial poly_gcd(const IntegerPolynomial& a, const IntegerPolynomial& b);

/// p / gcd(p, p'), primitive with positive leading coefficient.
IntegerPolynomial squarefree_part(const IntegerPolynomial& p);

/// n-th cyclotomic polynomial.
IntegerPolynomial cyclotomic(int n);

/// True when every root of p is a root of unity (p nonzero with nonzero
/// constant term and all irreducible factors cyclotomic).
bool is_cyclotomic_product(const IntegerPolynomial& p);

/// Numerical roots of the squarefree part, polished by Newton iteration in
/// extended precision.  Multiplicities are dropped.
std::vector<std::complex<long double>> distinct_roots(const IntegerPolynomial& p);

}  // namespace gentle
