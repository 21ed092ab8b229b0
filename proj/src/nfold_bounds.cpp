#include "genusgaps/nfold_bounds.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include "genusgaps/errors.hpp"

namespace genusgaps {

namespace {

Integer integral_value(const RationalPolynomial& p, const Integer& x, const char* what) {
  Rational v = p(Rational(x));
  if (v.get_den() != 1) {
    throw IntegrityError(std::string(what) + "(" + x.get_str() + ") = " + v.get_str() + " is not an integer");
  }
  return v.get_num();
}

Integer power(const Integer& base, int exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exp));
  return r;
}

}  // namespace

void validate(const HilbertData& h) {
  if (h.dim < 2) throw DomainError("dimension must be >= 2");
  if (h.q < 0 || h.pg < 0) throw DomainError("q and p_g must be >= 0");
  if (h.plin_valid_from < 1) throw DomainError("plin-valid-from must be >= 1");
  if (h.p_can.degree() != h.dim || h.p_lin.degree() != h.dim) {
    throw CertificationError("certification impossible: both Hilbert polynomials must have degree " +
                             std::to_string(h.dim));
  }
  if (sgn(h.p_lin.leading()) <= 0) {
    throw CertificationError("certification impossible: non-positive leading coefficient");
  }
  if (h.p_can.leading() != h.p_lin.leading()) {
    throw CertificationError("certification impossible: leading coefficients differ (" +
                             h.p_can.leading().get_str() + " vs " + h.p_lin.leading().get_str() + ")");
  }
  // Integer-valued on dim + 1 consecutive integers implies integer-valued everywhere.
  for (int m = 1; m <= h.dim + 1; ++m) {
    integral_value(h.p_can, Integer(m), "P_can");
    integral_value(h.p_lin, Integer(m), "P_lin");
  }
}

Integer genus_pm(const HilbertData& h, const Integer& m) {
  if (m < 1) throw PreconditionError("p_m needs m >= 1");
  return integral_value(h.p_can, m, "P_can") + h.q - h.pg;
}

Integer delta_m(const HilbertData& h, const Integer& m) {
  if (m < 2) throw PreconditionError("delta_m needs m >= 2");
  return genus_pm(h, m) - genus_pm(h, Integer(m - 1)) - 1;
}

bool separation_condition(const HilbertData& h, const Integer& m) {
  const Integer n = h.dim;
  if (m < n) throw PreconditionError("separation condition needs m >= n = " + n.get_str());
  Integer nu = m / n;
  if (nu < h.plin_valid_from) {
    throw PreconditionError("nu = " + nu.get_str() + " is below plin-valid-from = " + h.plin_valid_from.get_str());
  }
  return delta_m(h, m) <= integral_value(h.p_lin, nu, "P_lin") - 1 - n;
}

bool asymptotic_condition(int dim, const Integer& m) {
  if (dim < 1) throw DomainError("dimension must be >= 1");
  Integer nu = m / dim;
  return dim * power(m, dim - 1) < power(nu, dim);
}

Integer tail_certificate(const HilbertData& h) {
  validate(h);
  const int n = h.dim;
  Integer M = n;
  for (int mu = 0; mu < n; ++mu) {
    // delta_{n nu + mu} = P_can(n nu + mu) - P_can(n nu + mu - 1) - 1
    RationalPolynomial delta = h.p_can.compose_linear(Rational(n), Rational(mu)) -
                               h.p_can.compose_linear(Rational(n), Rational(mu - 1)) -
                               RationalPolynomial::constant(Rational(1));
    RationalPolynomial diff = h.p_lin - RationalPolynomial::constant(Rational(1 + n)) - delta;
    if (diff.degree() < 1 || sgn(diff.leading()) <= 0) {
      throw CertificationError("certification impossible: difference polynomial for residue " +
                               std::to_string(mu) + " is not eventually positive");
    }
    Integer nu_mu = std::max({ceil(cauchy_root_bound(diff)), h.plin_valid_from, Integer(1)});
    M = std::max(M, Integer(n * (nu_mu - 1) + mu + 1));
  }
  return M;
}

NfoldBoundResult find_threshold(const HilbertData& h) {
  NfoldBoundResult r;
  r.tail_certified_from = tail_certificate(h);
  const Integer start = std::max(Integer(h.dim), Integer(h.dim * h.plin_valid_from));
  r.m_XL = start;
  for (Integer m = r.tail_certified_from - 1; m >= start; --m) {
    if (!separation_condition(h, m)) {
      r.m_XL = m + 1;
      break;
    }
  }
  r.p_XL = genus_pm(h, Integer(r.m_XL - 1));
  return r;
}

namespace {

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  for (std::string t; ss >> t;) out.push_back(t);
  return out;
}

}  // namespace

HilbertData parse_hilbert_data(std::istream& in) {
  std::map<std::string, std::pair<int, std::vector<std::string>>> fields;
  std::string line;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto tok = tokens(line);
    if (tok.empty()) continue;
    static const char* const known[] = {"dim", "pcan", "plin", "q", "pg", "plin-valid-from"};
    if (std::find(std::begin(known), std::end(known), tok[0]) == std::end(known)) {
      throw ParseError("unknown key '" + tok[0] + "'", lineno);
    }
    if (fields.count(tok[0])) throw ParseError("duplicate key '" + tok[0] + "'", lineno);
    std::string key = tok[0];
    tok.erase(tok.begin());
    if (tok.empty()) throw ParseError("key '" + key + "' has no value", lineno);
    fields[key] = {lineno, std::move(tok)};
  }
  for (const char* k : {"dim", "pcan", "plin", "q", "pg", "plin-valid-from"}) {
    if (!fields.count(k)) throw ParseError(std::string("missing key '") + k + "'", 0);
  }
  auto scalar = [&](const std::string& key) {
    const auto& [lineno, vals] = fields.at(key);
    if (vals.size() != 1) throw ParseError("key '" + key + "' takes exactly one value", lineno);
    try {
      return parse_integer(vals[0]);
    } catch (const DomainError& e) {
      throw ParseError(e.what(), lineno);
    }
  };
  auto poly = [&](const std::string& key) {
    const auto& [lineno, vals] = fields.at(key);
    std::vector<Rational> c;
    try {
      for (const auto& v : vals) c.push_back(parse_rational(v));
    } catch (const DomainError& e) {
      throw ParseError(e.what(), lineno);
    }
    return RationalPolynomial(std::move(c));
  };
  HilbertData h;
  Integer dim = scalar("dim");
  if (dim < 2 || dim > 64) throw ParseError("dim must be between 2 and 64", fields.at("dim").first);
  h.dim = static_cast<int>(dim.get_si());
  h.p_can = poly("pcan");
  h.p_lin = poly("plin");
  h.q = scalar("q");
  h.pg = scalar("pg");
  h.plin_valid_from = scalar("plin-valid-from");
  for (const char* k : {"pcan", "plin"}) {
    const auto& [lineno, vals] = fields.at(k);
    if (vals.size() != static_cast<std::size_t>(h.dim) + 1) {
      throw ParseError(std::string(k) + " needs dim + 1 = " + std::to_string(h.dim + 1) + " coefficients", lineno);
    }
  }
  return h;
}

std::string format_hilbert_data(const HilbertData& h) {
  std::ostringstream out;
  out << "dim " << h.dim << "\n";
  auto coeffs = [&](const char* key, const RationalPolynomial& p) {
    out << key;
    for (int i = 0; i <= h.dim; ++i) out << ' ' << p.coefficient(i).get_str();
    out << "\n";
  };
  coeffs("pcan", h.p_can);
  coeffs("plin", h.p_lin);
  out << "q " << h.q.get_str() << "\n";
  out << "pg " << h.pg.get_str() << "\n";
  out << "plin-valid-from " << h.plin_valid_from.get_str() << "\n";
  return out.str();
}

}  // namespace genusgaps
