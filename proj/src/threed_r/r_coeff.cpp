#include <algorithm>

#include "ntazrp/threed_r.hpp"

namespace ntazrp {

QPoly r_coeff(int a, int b, int c, int i, int j, int k) {
  if (std::min({a, b, c, i, j, k}) < 0) return {};
  if (a + b != i + j || b + c != j + k) return {};
  // Individual exponents can be negative; collect as a Laurent polynomial and
  // require the total to land in Z[q].
  std::map<int, BigInt> acc;
  const QPoly q2c = q2_factorial(c);
  for (int lambda = 0; lambda <= std::min(j, b); ++lambda) {
    const int mu = b - lambda;
    if (mu > i) continue;
    const int e = i * (c - j) + (k + 1) * lambda + mu * (mu - k);
    QPoly p = div_exact(q2_factorial(c + mu), q2c);
    p *= q_binomial(i, mu).substitute_power(2);
    p *= q_binomial(j, lambda).substitute_power(2);
    const auto& co = p.coeffs();
    for (std::size_t t = 0; t < co.size(); ++t) {
      if (co[t] == 0) continue;
      BigInt& slot = acc[e + static_cast<int>(t)];
      if (lambda % 2 == 0) slot += co[t];
      else slot -= co[t];
    }
  }
  std::vector<BigInt> dense;
  for (const auto& [e, v] : acc) {
    if (v == 0) continue;
    if (e < 0) throw NonExactDivision("r_coeff: negative power of q survives");
    if (dense.size() <= static_cast<std::size_t>(e)) dense.resize(static_cast<std::size_t>(e) + 1, BigInt(0));
    dense[static_cast<std::size_t>(e)] = v;
  }
  return QPoly(std::move(dense));
}

int r_coeff_q0(int a, int b, int c, int i, int j, int k) {
  if (std::min({a, b, c, i, j, k}) < 0) return 0;
  return a == j + std::max(i - k, 0) && b == std::min(i, k) && c == j + std::max(k - i, 0) ? 1 : 0;
}

RTable::RTable() : cache_(std::make_shared<Cache>()) {}

QPoly RTable::operator()(int a, int b, int c, int i, int j, int k) const {
  const RIndex key{a, b, c, i, j, k};
  QPoly v;
  {
    std::lock_guard lock(cache_->mu);
    auto it = cache_->values.find(key);
    if (it != cache_->values.end()) v = it->second;
    else v = cache_->values.emplace(key, r_coeff(a, b, c, i, j, k)).first->second;
  }
  if (flip_ && *flip_ == key) return -v;
  return v;
}

RTable RTable::with_sign_flip(const RIndex& at) const {
  RTable t = *this;
  t.flip_ = at;
  return t;
}

const RTable& default_r_table() {
  static const RTable table;
  return table;
}

}  // namespace ntazrp
