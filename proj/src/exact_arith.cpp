#include "genusgaps/exact_arith.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace genusgaps {

Integer isqrt(const Integer& n) {
  if (sgn(n) < 0) throw DomainError("isqrt: negative argument " + n.get_str());
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

Integer floor(const Rational& x) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return r;
}

Integer ceil(const Rational& x) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return r;
}

Rational ratio(const Integer& num, const Integer& den) {
  if (sgn(den) == 0) throw DomainError("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Integer exact_quotient(const Integer& num, const Integer& den, std::string_view what) {
  if (sgn(den) == 0) throw DomainError(std::string(what) + ": zero divisor");
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) {
    throw IntegrityError(std::string(what) + ": " + num.get_str() + "/" + den.get_str() +
                         " is not an integer");
  }
  Integer q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

namespace {

void require_radicand(const QuadraticExpr& x) {
  if (sgn(x.radicand) < 0) {
    throw DomainError("negative radicand " + x.radicand.get_str());
  }
}

// floor(sqrt(a/b)) = floor(isqrt(a*b) / b) for b > 0.
Integer floor_sqrt(const Rational& r) {
  Integer nd = r.get_num() * r.get_den();
  Integer s = isqrt(nd);
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), s.get_mpz_t(), r.get_den_mpz_t());
  return q;
}

}  // namespace

int compare(const QuadraticExpr& x, const Integer& k) {
  require_radicand(x);
  // base + sqrt(r) - k = sqrt(r) - t
  Rational t = Rational(k) - x.base;
  if (sgn(t) < 0) return 1;
  if (sgn(t) == 0) return sgn(x.radicand);
  return sgn(Rational(x.radicand - t * t));
}

Integer floor_quadratic(const QuadraticExpr& x) {
  require_radicand(x);
  Integer k = floor(x.base + Rational(floor_sqrt(x.radicand)));
  while (compare(x, k + 1) >= 0) ++k;
  while (compare(x, k) < 0) --k;
  return k;
}

Integer ceil_quadratic(const QuadraticExpr& x) {
  Integer k = floor_quadratic(x);
  return compare(x, k) == 0 ? k : Integer(k + 1);
}

// ---------------------------------------------------------------------------
// RationalPolynomial

RationalPolynomial::RationalPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

RationalPolynomial RationalPolynomial::constant(const Rational& c) {
  return RationalPolynomial({c});
}

RationalPolynomial RationalPolynomial::monomial(const Rational& c, int degree) {
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1, Rational(0));
  v.back() = c;
  return RationalPolynomial(std::move(v));
}

void RationalPolynomial::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational RationalPolynomial::coefficient(int i) const {
  if (i < 0 || i > degree()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(i)];
}

const Rational& RationalPolynomial::leading() const {
  if (coeffs_.empty()) throw DomainError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Rational RationalPolynomial::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RationalPolynomial RationalPolynomial::derivative() const {
  if (degree() < 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return RationalPolynomial(std::move(d));
}

RationalPolynomial RationalPolynomial::compose_linear(const Rational& a, const Rational& b) const {
  RationalPolynomial lin({b, a});
  RationalPolynomial acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * lin + constant(*it);
  return acc;
}

RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b) {
  std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
  return RationalPolynomial(std::move(v));
}

RationalPolynomial operator-(const RationalPolynomial& p) { return Rational(-1) * p; }

RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b) {
  return a + (-b);
}

RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return RationalPolynomial(std::move(v));
}

RationalPolynomial operator*(const Rational& c, const RationalPolynomial& p) {
  std::vector<Rational> v = p.coeffs_;
  for (auto& x : v) x *= c;
  return RationalPolynomial(std::move(v));
}

std::string RationalPolynomial::to_string(std::string_view var) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (out.empty()) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    bool unit = mag == 1 && i > 0;
    if (!unit) out += mag.get_str();
    if (i > 0) {
      if (!unit) out += "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

DivMod divmod(const RationalPolynomial& a, const RationalPolynomial& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<Rational> rem = a.coefficients();
  const int db = b.degree();
  const Rational& lb = b.leading();
  std::vector<Rational> quot(a.degree() >= db ? static_cast<std::size_t>(a.degree() - db + 1) : 0,
                             Rational(0));
  for (int i = a.degree(); i >= db; --i) {
    Rational c = rem[static_cast<std::size_t>(i)] / lb;
    if (sgn(c) == 0) continue;
    quot[static_cast<std::size_t>(i - db)] = c;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= c * b.coefficient(j);
  }
  return {RationalPolynomial(std::move(quot)), RationalPolynomial(std::move(rem))};
}

RationalPolynomial gcd(const RationalPolynomial& a, const RationalPolynomial& b) {
  RationalPolynomial x = a, y = b;
  while (!y.is_zero()) {
    RationalPolynomial r = divmod(x, y).remainder;
    x = std::move(y);
    y = std::move(r);
  }
  if (x.is_zero()) return x;
  return Rational(1) / x.leading() * x;
}

Rational cauchy_root_bound(const RationalPolynomial& p) {
  if (p.degree() < 1) throw DomainError("root bound of a constant polynomial");
  Rational m(0);
  const Rational lead = abs(p.leading());
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, Rational(abs(p.coefficient(i)) / lead));
  return m + 1;
}

RationalCubic::RationalCubic(Rational c3, Rational c2, Rational c1, Rational c0) {
  if (sgn(c3) == 0) throw DomainError("cubic with zero leading coefficient");
  poly_ = RationalPolynomial({std::move(c0), std::move(c1), std::move(c2), std::move(c3)});
}

// ---------------------------------------------------------------------------
// Sturm-based isolation

namespace {

RationalPolynomial square_free_part(const RationalPolynomial& p) {
  RationalPolynomial g = gcd(p, p.derivative());
  if (g.degree() <= 0) return p;
  return divmod(p, g).quotient;
}

std::vector<RationalPolynomial> sturm_sequence(const RationalPolynomial& p) {
  std::vector<RationalPolynomial> seq{p, p.derivative()};
  while (!seq.back().is_zero() && seq.back().degree() > 0) {
    RationalPolynomial r = divmod(seq[seq.size() - 2], seq.back()).remainder;
    if (r.is_zero()) break;
    seq.push_back(-r);
  }
  if (seq.back().is_zero()) seq.pop_back();
  return seq;
}

int sign_changes(const std::vector<RationalPolynomial>& seq, const Rational& x) {
  int changes = 0;
  int prev = 0;
  for (const auto& s : seq) {
    int v = sgn(s(x));
    if (v == 0) continue;
    if (prev != 0 && v != prev) ++changes;
    prev = v;
  }
  return changes;
}

class Isolator {
 public:
  explicit Isolator(RationalPolynomial p) : p_(std::move(p)), seq_(sturm_sequence(p_)) {}

  int count(const Rational& a, const Rational& b) const {
    return sign_changes(seq_, a) - sign_changes(seq_, b);
  }

  // Shrinks a single-root interval (a, b) with p(a), p(b) != 0 to width <= precision.
  RootBracket refine(Rational a, Rational b, const Rational& precision) const {
    int sa = sgn(p_(a));
    while (b - a > precision) {
      Rational m = (a + b) / 2;
      int sm = sgn(p_(m));
      if (sm == 0) return {m, m};
      if (sm != sa) {
        b = m;
      } else {
        a = m;
        sa = sm;
      }
    }
    // Snap to an integer root when the bracket holds one.
    if (b - a <= 1) {
      for (Integer k = ceil(a); k <= floor(b); ++k) {
        if (sgn(p_(Rational(k))) == 0) return {Rational(k), Rational(k)};
      }
    }
    return {a, b};
  }

  void isolate(const Rational& a, const Rational& b, const Rational& precision,
               std::vector<RootBracket>& out) const {
    std::vector<std::pair<Rational, Rational>> work{{a, b}};
    while (!work.empty()) {
      auto [lo, hi] = work.back();
      work.pop_back();
      int n = count(lo, hi);
      if (n == 0) continue;
      if (n == 1) {
        out.push_back(refine(lo, hi, precision));
        continue;
      }
      Rational mid = (lo + hi) / 2;
      if (sgn(p_(mid)) != 0) {
        work.emplace_back(lo, mid);
        work.emplace_back(mid, hi);
        continue;
      }
      out.push_back({mid, mid});
      Rational eps = (hi - lo) / 4;
      while (sgn(p_(mid - eps)) == 0 || sgn(p_(mid + eps)) == 0 ||
             count(mid - eps, mid + eps) != 1) {
        eps /= 2;
      }
      work.emplace_back(lo, mid - eps);
      work.emplace_back(mid + eps, hi);
    }
  }

 private:
  RationalPolynomial p_;
  std::vector<RationalPolynomial> seq_;
};

}  // namespace

int count_roots(const RationalPolynomial& p, const Rational& a, const Rational& b) {
  if (p.is_zero()) throw DomainError("count_roots: zero polynomial");
  if (!(a < b)) throw DomainError("count_roots: empty interval");
  if (sgn(p(a)) == 0 || sgn(p(b)) == 0) throw DomainError("count_roots: endpoint is a root");
  if (p.degree() == 0) return 0;
  return Isolator(square_free_part(p)).count(a, b);
}

std::vector<RootBracket> isolate_positive_roots(const RationalPolynomial& p, const Rational& precision) {
  if (sgn(precision) <= 0) throw DomainError("isolate_positive_roots: precision must be positive");
  if (p.is_zero()) throw DomainError("isolate_positive_roots: zero polynomial");
  if (p.degree() == 0) return {};
  RationalPolynomial q = square_free_part(p);
  // Roots at zero are not positive; drop the factor x (square-free, so at most once).
  if (sgn(q.coefficient(0)) == 0) {
    std::vector<Rational> c(q.coefficients().begin() + 1, q.coefficients().end());
    q = RationalPolynomial(std::move(c));
  }
  std::vector<RootBracket> out;
  if (q.degree() < 1) return out;
  Isolator(q).isolate(Rational(0), cauchy_root_bound(q), precision, out);
  std::sort(out.begin(), out.end(), [](const RootBracket& x, const RootBracket& y) { return x.lo < y.lo; });
  return out;
}

std::vector<RootBracket> isolate_positive_roots(const RationalCubic& c, const Rational& precision) {
  return isolate_positive_roots(c.polynomial(), precision);
}

// ---------------------------------------------------------------------------
// Text conversions

std::string to_string(const Integer& x) { return x.get_str(); }
std::string to_string(const Rational& x) { return x.get_str(); }

std::string to_decimal_string(const Rational& x, int places) {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(places));
  Rational scaled = abs(x) * Rational(scale) + Rational(1, 2);
  Integer digits = floor(scaled);
  std::string s = digits.get_str();
  if (places > 0) {
    if (s.size() <= static_cast<std::size_t>(places)) s.insert(0, places - s.size() + 1, '0');
    s.insert(s.size() - places, ".");
  }
  if (sgn(x) < 0 && sgn(digits) != 0) s.insert(0, "-");
  return s;
}

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

Integer parse_integer(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  if (!all_digits(body)) throw DomainError("not an integer: '" + std::string(text) + "'");
  std::string s(text);
  if (s.front() == '+') s.erase(0, 1);
  return Integer(s, 10);
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  std::string_view den_text = text.substr(slash + 1);
  if (!all_digits(den_text)) throw DomainError("not a rational: '" + std::string(text) + "'");
  Integer den(std::string(den_text), 10);
  if (sgn(den) == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace genusgaps
