// Naive reference arithmetic used as an independent oracle in tests.
#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ntazrp/qscalar.hpp"

namespace oracle {

/// Dense integer polynomial, index = exponent of q.
using Poly = std::vector<long long>;

inline Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

inline Poly add(Poly a, const Poly& b) {
  if (b.size() > a.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  return a;
}

inline Poly one_minus_q_pow(int j) {
  Poly p(static_cast<std::size_t>(j) + 1, 0);
  p[0] = 1;
  p[static_cast<std::size_t>(j)] -= 1;
  return p;
}

inline ntazrp::QPoly to_qpoly(const Poly& p) {
  std::vector<ntazrp::BigInt> c;
  for (long long x : p) c.emplace_back(static_cast<long>(x));
  return ntazrp::QPoly(c);
}

/// (q^base; q^base)_m expanded by repeated multiplication.
inline Poly factorial(int m, int base = 1) {
  Poly r{1};
  for (int j = 1; j <= m; ++j) r = mul(r, one_minus_q_pow(base * j));
  return r;
}

/// Random QRat with small integer polynomial numerator and a product of
/// (1 - q^j) factors as denominator, so it never has a pole at q = 0.
inline ntazrp::QRat random_qrat(std::mt19937& rng) {
  std::uniform_int_distribution<int> coef(-3, 3), deg(0, 3), nden(0, 2), jd(1, 3);
  Poly num(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& c : num) c = coef(rng);
  Poly den{1};
  const int k = nden(rng);
  for (int t = 0; t < k; ++t) den = mul(den, one_minus_q_pow(jd(rng)));
  return ntazrp::QRat(to_qpoly(num), to_qpoly(den));
}

inline ntazrp::LaurentScalar random_laurent(std::mt19937& rng) {
  std::uniform_int_distribution<int> nterms(0, 3), ex(-2, 2);
  ntazrp::LaurentScalar s;
  const int n = nterms(rng);
  for (int t = 0; t < n; ++t) {
    ntazrp::Exponents e{};
    e[static_cast<std::size_t>(ntazrp::Var::x)] = ex(rng);
    e[static_cast<std::size_t>(ntazrp::Var::y)] = ex(rng);
    s.add_term(e, random_qrat(rng));
  }
  return s;
}

}  // namespace oracle

namespace oracle {

/// Gaussian binomial in q^base via the Pascal recursion.
inline Poly qbinom(int m, int j, int base = 1) {
  if (j < 0 || j > m) return {};
  if (j == 0 || j == m) return {1};
  Poly shift(static_cast<std::size_t>(base * j), 0);
  Poly rest = qbinom(m - 1, j, base);
  shift.insert(shift.end(), rest.begin(), rest.end());
  return add(qbinom(m - 1, j - 1, base), shift);
}

/// R^{abc}_{ijk} summed term by term with a Laurent offset, independent of
/// the library's exact-division path.
inline Poly r_coeff(int a, int b, int c, int i, int j, int k) {
  if (a + b != i + j || b + c != j + k) return {};
  const int offset = 64;
  Poly acc(256, 0);
  for (int lambda = 0; lambda <= b; ++lambda) {
    const int mu = b - lambda;
    if (mu > i || lambda > j) continue;
    Poly p{1};
    for (int t = c + 1; t <= c + mu; ++t) p = mul(p, one_minus_q_pow(2 * t));
    p = mul(p, mul(qbinom(i, mu, 2), qbinom(j, lambda, 2)));
    const int e = i * (c - j) + (k + 1) * lambda + mu * (mu - k) + offset;
    for (std::size_t t = 0; t < p.size(); ++t)
      acc[static_cast<std::size_t>(e) + t] += (lambda % 2 ? -1 : 1) * p[t];
  }
  for (int t = 0; t < offset; ++t)
    if (acc[static_cast<std::size_t>(t)] != 0) return {-999};
  Poly r(acc.begin() + offset, acc.end());
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

}  // namespace oracle
