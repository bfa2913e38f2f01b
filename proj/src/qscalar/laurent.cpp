#include <sstream>

#include "ntazrp/qscalar.hpp"

namespace ntazrp {

std::string_view var_name(Var v) {
  switch (v) {
    case Var::z: return "z";
    case Var::x: return "x";
    case Var::y: return "y";
    case Var::xp: return "xp";
    case Var::yp: return "yp";
    case Var::z1: return "z1";
    case Var::z2: return "z2";
    case Var::z3: return "z3";
    case Var::z4: return "z4";
    case Var::lambda: return "lambda";
    case Var::mu: return "mu";
  }
  return "?";
}

Exponents unit_exponents(Var v, int exponent) {
  Exponents e{};
  e[static_cast<std::size_t>(v)] = exponent;
  return e;
}

LaurentScalar::LaurentScalar(long c) : LaurentScalar(QRat(c)) {}

LaurentScalar::LaurentScalar(const QRat& c) {
  if (!c.is_zero()) terms_.emplace(Exponents{}, c);
}

LaurentScalar::LaurentScalar(const QPoly& c) : LaurentScalar(QRat(c)) {}

LaurentScalar LaurentScalar::monomial(Var v, int exponent, const QRat& coeff) {
  return term(unit_exponents(v, exponent), coeff);
}

LaurentScalar LaurentScalar::term(const Exponents& e, const QRat& coeff) {
  LaurentScalar s;
  if (!coeff.is_zero()) s.terms_.emplace(e, coeff);
  return s;
}

QRat LaurentScalar::constant_term() const { return coefficient(Exponents{}); }

QRat LaurentScalar::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? QRat() : it->second;
}

void LaurentScalar::add_term(const Exponents& e, const QRat& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

LaurentScalar LaurentScalar::operator-() const {
  LaurentScalar r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LaurentScalar& LaurentScalar::operator+=(const LaurentScalar& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentScalar& LaurentScalar::operator-=(const LaurentScalar& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentScalar operator*(const LaurentScalar& a, const LaurentScalar& b) {
  LaurentScalar r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e;
      for (std::size_t t = 0; t < kVarCount; ++t) e[t] = ea[t] + eb[t];
      r.add_term(e, ca * cb);
    }
  return r;
}

LaurentScalar& LaurentScalar::operator*=(const LaurentScalar& o) { return *this = *this * o; }

LaurentScalar& LaurentScalar::operator*=(const QRat& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

LaurentScalar LaurentScalar::swap_vars(Var a, Var b) const {
  LaurentScalar r;
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    std::swap(f[static_cast<std::size_t>(a)], f[static_cast<std::size_t>(b)]);
    r.add_term(f, c);
  }
  return r;
}

LaurentScalar LaurentScalar::invert_var(Var v) const {
  LaurentScalar r;
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    f[static_cast<std::size_t>(v)] = -f[static_cast<std::size_t>(v)];
    r.add_term(f, c);
  }
  return r;
}

LaurentScalar LaurentScalar::euler_derivative(Var v) const {
  LaurentScalar r;
  for (const auto& [e, c] : terms_) {
    const int p = e[static_cast<std::size_t>(v)];
    if (p != 0) r.add_term(e, c * QRat(p));
  }
  return r;
}

LaurentScalar LaurentScalar::evaluate_at_one(Var v) const {
  LaurentScalar r;
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    f[static_cast<std::size_t>(v)] = 0;
    r.add_term(f, c);
  }
  return r;
}

LaurentScalar LaurentScalar::at_q_zero() const {
  LaurentScalar r;
  for (const auto& [e, c] : terms_) {
    mpq_class v = c.at_zero();
    if (v == 0) continue;
    QRat cv(QPoly(BigInt(v.get_num())), QPoly(BigInt(v.get_den())));
    r.add_term(e, cv);
  }
  return r;
}

std::string LaurentScalar::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")";
    for (std::size_t t = 0; t < kVarCount; ++t) {
      if (e[t] == 0) continue;
      os << "*" << var_name(static_cast<Var>(t));
      if (e[t] != 1) os << "^" << e[t];
    }
  }
  return os.str();
}

}  // namespace ntazrp
