#include "ntazrp/qscalar.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace ntazrp {

QPoly::QPoly(long c) {
  if (c != 0) coeffs_.emplace_back(c);
}

QPoly::QPoly(const BigInt& c) {
  if (c != 0) coeffs_.push_back(c);
}

QPoly::QPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPoly QPoly::monomial(const BigInt& c, int exponent) {
  if (exponent < 0) throw std::invalid_argument("QPoly::monomial: negative exponent");
  QPoly p;
  if (c == 0) return p;
  p.coeffs_.assign(static_cast<std::size_t>(exponent) + 1, BigInt(0));
  p.coeffs_.back() = c;
  return p;
}

void QPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

int QPoly::low_degree() const {
  for (std::size_t e = 0; e < coeffs_.size(); ++e)
    if (coeffs_[e] != 0) return static_cast<int>(e);
  return -1;
}

BigInt QPoly::coeff(int exponent) const {
  if (exponent < 0 || exponent > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(exponent)];
}

BigInt QPoly::content() const {
  BigInt g = 0;
  for (const auto& c : coeffs_) {
    if (c == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

QPoly QPoly::primitive_part() const {
  if (is_zero()) return *this;
  BigInt g = content();
  if (leading() < 0) g = -g;
  QPoly r = *this;
  return r.divide_exact(g);
}

BigInt QPoly::evaluate(const BigInt& q) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + *it;
  return acc;
}

QPoly QPoly::substitute_power(int k) const {
  if (k < 1) throw std::invalid_argument("QPoly::substitute_power: k must be positive");
  if (is_zero() || k == 1) return *this;
  QPoly r;
  r.coeffs_.assign(static_cast<std::size_t>(degree() * k) + 1, BigInt(0));
  for (std::size_t e = 0; e < coeffs_.size(); ++e) r.coeffs_[e * static_cast<std::size_t>(k)] = coeffs_[e];
  return r;
}

QPoly QPoly::shifted(int e) const {
  if (e < 0) throw std::invalid_argument("QPoly::shifted: negative shift");
  if (is_zero() || e == 0) return *this;
  QPoly r;
  r.coeffs_.assign(static_cast<std::size_t>(e), BigInt(0));
  r.coeffs_.insert(r.coeffs_.end(), coeffs_.begin(), coeffs_.end());
  return r;
}

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), BigInt(0));
  for (std::size_t e = 0; e < o.coeffs_.size(); ++e) coeffs_[e] += o.coeffs_[e];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), BigInt(0));
  for (std::size_t e = 0; e < o.coeffs_.size(); ++e) coeffs_[e] -= o.coeffs_[e];
  trim();
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  QPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      mpz_addmul(r.coeffs_[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
  }
  r.trim();
  return r;
}

QPoly& QPoly::operator*=(const QPoly& o) { return *this = *this * o; }

QPoly& QPoly::operator*=(const BigInt& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

QPoly& QPoly::divide_exact(const BigInt& c) {
  if (c == 0) throw std::domain_error("QPoly: division by zero");
  for (auto& x : coeffs_) {
    if (!mpz_divisible_p(x.get_mpz_t(), c.get_mpz_t()))
      throw NonExactDivision("QPoly: coefficient not divisible by " + c.get_str());
    mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  }
  return *this;
}

bool operator==(const QPoly& a, const QPoly& b) { return a.coeffs_ == b.coeffs_; }

std::string QPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t e = 0; e < coeffs_.size(); ++e) {
    const BigInt& c = coeffs_[e];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << "q";
    if (e > 1) os << "^" << e;
  }
  return os.str();
}

namespace {

// Pseudo-remainder of a by b: lc(b)^(deg a - deg b + 1) * a mod b.
QPoly pseudo_remainder(QPoly a, const QPoly& b) {
  const int db = b.degree();
  const BigInt& lb = b.leading();
  while (!a.is_zero() && a.degree() >= db) {
    const int shift = a.degree() - db;
    BigInt la = a.leading();
    a *= lb;
    a -= (b * QPoly(la)).shifted(shift);
  }
  return a;
}

}  // namespace

QPoly div_exact(const QPoly& num, const QPoly& den) {
  if (den.is_zero()) throw std::domain_error("div_exact: division by zero polynomial");
  if (num.is_zero()) return {};
  if (den.degree() == 0) {
    QPoly r = num;
    return r.divide_exact(den.leading());
  }
  std::vector<BigInt> rem = num.coeffs();
  const auto& d = den.coeffs();
  const int dd = den.degree();
  const int dn = num.degree();
  if (dn < dd) throw NonExactDivision("div_exact: " + num.to_string() + " / " + den.to_string());
  std::vector<BigInt> quo(static_cast<std::size_t>(dn - dd) + 1, BigInt(0));
  const BigInt& lead = d.back();
  for (int e = dn; e >= dd; --e) {
    BigInt& top = rem[static_cast<std::size_t>(e)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
      throw NonExactDivision("div_exact: " + num.to_string() + " / " + den.to_string());
    BigInt qc;
    mpz_divexact(qc.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    const auto base = static_cast<std::size_t>(e - dd);
    for (std::size_t t = 0; t < d.size(); ++t)
      mpz_submul(rem[base + t].get_mpz_t(), qc.get_mpz_t(), d[t].get_mpz_t());
    quo[base] = qc;
  }
  for (int e = 0; e < dd; ++e)
    if (rem[static_cast<std::size_t>(e)] != 0)
      throw NonExactDivision("div_exact: " + num.to_string() + " / " + den.to_string());
  return QPoly(std::move(quo));
}

QPoly poly_gcd(const QPoly& a, const QPoly& b) {
  if (a.is_zero()) return b.primitive_part() * QPoly(b.is_zero() ? BigInt(0) : b.content());
  if (b.is_zero()) return a.primitive_part() * QPoly(a.content());
  BigInt cg;
  BigInt ca = a.content();
  BigInt cb = b.content();
  mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  QPoly u = a.primitive_part();
  QPoly v = b.primitive_part();
  if (u.degree() < v.degree()) std::swap(u, v);
  while (!v.is_zero()) {
    if (v.degree() == 0) {
      u = QPoly(1);
      break;
    }
    QPoly r = pseudo_remainder(u, v);
    u = std::move(v);
    v = r.primitive_part();
  }
  QPoly g = u.primitive_part();
  g *= cg;
  return g;
}

}  // namespace ntazrp
