#include <algorithm>

#include "ntazrp/threed_r.hpp"

namespace ntazrp {

LaurentScalar ratio_power(Var num, Var den, int e) {
  Exponents ex{};
  ex[static_cast<std::size_t>(num)] += e;
  ex[static_cast<std::size_t>(den)] -= e;
  return LaurentScalar::term(ex, QRat(1));
}

VertexOp vertex_op(VertexKind kind, int a, int b, int i, int j, Var z, const FockSpace& space,
                   const RTable& table) {
  VertexOp v{kind, a, b, i, j, z, FockOp({space.cutoff}, space.mode)};
  // R_hat shifts the mode by j - b, S_hat by i - a = b - j.
  const int shift = kind == VertexKind::R_hat ? j - b : i - a;
  v.body.set_bounds(std::max(0, shift), std::max(0, -shift));
  if (std::min({a, b, i, j}) < 0 || a + b != i + j) return v;
  const LaurentScalar zpow = LaurentScalar::monomial(z, j - b);
  for (int k = 0; k <= space.cutoff; ++k) {
    const int c = k + shift;
    if (c < 0 || c > space.cutoff) continue;
    QPoly r = kind == VertexKind::R_hat ? table(a, b, c, i, j, k) : table(b, a, c, j, i, k);
    if (r.is_zero()) continue;
    LaurentScalar s = space.mode == QMode::zero ? LaurentScalar(QPoly(r.at_zero())) : LaurentScalar(r);
    v.body.add({c}, {k}, s * zpow);
  }
  return v;
}

FockOp vertex_op_from_generators(int a, int b, int i, int j, Var z, const FockSpace& space) {
  const int n = space.cutoff;
  const QMode mode = space.mode;
  FockOp total({n}, mode);
  total.set_bounds(std::max(0, j - b), std::max(0, b - j));
  if (a + b != i + j) return total;
  const FockOp ap = osc_generator(Generator::a_plus, space);
  const FockOp am = osc_generator(Generator::a_minus, space);
  const FockOp kk = osc_generator(Generator::k, space);
  auto power = [&](const FockOp& x, int p) {
    FockOp r = FockOp::identity({n}, mode);
    for (int t = 0; t < p; ++t) r = compose(r, x);
    return r;
  };
  for (int lambda = 0; lambda <= std::min(j, b); ++lambda) {
    const int mu = b - lambda;
    if (mu > i) continue;
    // q^{lambda + mu^2 - i b} can have a negative exponent; keep it as a QRat.
    const int e = lambda + mu * mu - i * b;
    QRat coeff = e >= 0 ? QRat(QPoly::q_power(e)) : QRat(QPoly(1), QPoly::q_power(-e));
    coeff *= QRat(q_binomial(i, mu).substitute_power(2) * q_binomial(j, lambda).substitute_power(2));
    if (lambda % 2) coeff = -coeff;
    FockOp term = compose(compose(power(am, mu), power(ap, j - lambda)), power(kk, i + lambda - mu));
    term *= LaurentScalar::monomial(z, j - b, coeff);
    term.set_bounds(total.raise(), total.lower());
    total += term;
  }
  return total;
}

FockVector apply_r3(const FockVector& v, VertexKind kind, std::array<int, 3> factors, Var num, Var den,
                    const RTable& table) {
  FockVector out;
  const auto [p1, p2, p3] = factors;
  for (const auto& [s, coeff] : v) {
    const int i = s[static_cast<std::size_t>(p1)];
    const int j = s[static_cast<std::size_t>(p2)];
    const int k = s[static_cast<std::size_t>(p3)];
    auto emit = [&](int a, int b, int c, const QPoly& r) {
      if (r.is_zero()) return;
      State t = s;
      t[static_cast<std::size_t>(p1)] = a;
      t[static_cast<std::size_t>(p2)] = b;
      t[static_cast<std::size_t>(p3)] = c;
      LaurentScalar& slot = out[t];
      slot += coeff * ratio_power(num, den, j - b) * LaurentScalar(r);
      if (slot.is_zero()) out.erase(t);
    };
    if (kind == VertexKind::R_hat) {
      for (int b = 0; b <= std::min(i + j, j + k); ++b) {
        const int a = i + j - b, c = j + k - b;
        emit(a, b, c, table(a, b, c, i, j, k));
      }
    } else {
      for (int a = 0; a <= std::min(i + j, i + k); ++a) {
        const int b = i + j - a, c = i + k - a;
        emit(a, b, c, table(b, a, c, j, i, k));
      }
    }
  }
  return out;
}

}  // namespace ntazrp
