#pragma once

// Exact integer/rational primitives. Every ceiling, floor and comparison used by the
// bound formulas goes through here; nothing on the certified path touches floating point.

#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "genusgaps/errors.hpp"

namespace genusgaps {

using Integer = mpz_class;
using Rational = mpq_class;

/// floor(sqrt(n)); throws DomainError for n < 0.
Integer isqrt(const Integer& n);

Integer floor(const Rational& x);
Integer ceil(const Rational& x);

/// Canonical num/den; throws DomainError for den == 0.
Rational ratio(const Integer& num, const Integer& den);

/// Exact value of num/den when den divides num, otherwise IntegrityError naming `what`.
Integer exact_quotient(const Integer& num, const Integer& den, std::string_view what);

/// The real number base + sqrt(radicand).
struct QuadraticExpr {
  Rational base;
  Rational radicand;
};

/// Sign of (x.base + sqrt(x.radicand)) - k, decided exactly.
int compare(const QuadraticExpr& x, const Integer& k);

Integer floor_quadratic(const QuadraticExpr& x);
Integer ceil_quadratic(const QuadraticExpr& x);

/// Dense univariate polynomial over Q, coefficients lowest degree first.
/// The zero polynomial has no coefficients and degree -1.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> coeffs);

  static RationalPolynomial constant(const Rational& c);
  static RationalPolynomial monomial(const Rational& c, int degree);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  /// Coefficient of x^i (zero past the degree).
  Rational coefficient(int i) const;
  const Rational& leading() const;

  Rational operator()(const Rational& x) const;

  RationalPolynomial derivative() const;
  /// p(a*x + b) as a polynomial in x.
  RationalPolynomial compose_linear(const Rational& a, const Rational& b) const;

  friend RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b);
  friend RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b);
  friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b);
  friend RationalPolynomial operator*(const Rational& c, const RationalPolynomial& p);
  friend RationalPolynomial operator-(const RationalPolynomial& p);
  friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) = default;

  std::string to_string(std::string_view var = "x") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

struct DivMod {
  RationalPolynomial quotient;
  RationalPolynomial remainder;
};
DivMod divmod(const RationalPolynomial& a, const RationalPolynomial& b);
/// Monic gcd; zero only when both inputs are zero.
RationalPolynomial gcd(const RationalPolynomial& a, const RationalPolynomial& b);

/// Strict upper bound on |root| for every complex root: 1 + max |c_i / c_n|.
Rational cauchy_root_bound(const RationalPolynomial& p);

/// c3 x^3 + c2 x^2 + c1 x + c0 with c3 != 0.
class RationalCubic {
 public:
  RationalCubic(Rational c3, Rational c2, Rational c1, Rational c0);
  const RationalPolynomial& polynomial() const noexcept { return poly_; }
  Rational operator()(const Rational& x) const { return poly_(x); }

 private:
  RationalPolynomial poly_;
};

/// Closed rational interval [lo, hi] holding exactly one root; lo == hi for exact roots.
struct RootBracket {
  Rational lo;
  Rational hi;
  bool exact() const { return lo == hi; }
  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / 2; }
};

/// Disjoint brackets, one per distinct positive real root, ascending, each of width <= precision.
/// Sturm counting on the square-free part followed by bisection.
std::vector<RootBracket> isolate_positive_roots(const RationalPolynomial& p, const Rational& precision);
std::vector<RootBracket> isolate_positive_roots(const RationalCubic& c, const Rational& precision);

/// Number of distinct real roots of p in the open interval (a, b); a, b must not be roots.
int count_roots(const RationalPolynomial& p, const Rational& a, const Rational& b);

std::string to_string(const Integer& x);
std::string to_string(const Rational& x);
/// Decimal rendering rounded half away from zero to `places` digits; display only.
std::string to_decimal_string(const Rational& x, int places);

/// Parses "a", "-a" or "a/b" (b != 0); throws DomainError.
Rational parse_rational(std::string_view text);
/// Parses a base-10 integer; throws DomainError.
Integer parse_integer(std::string_view text);

}  // namespace genusgaps
