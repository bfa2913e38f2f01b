#include <algorithm>
#include <chrono>
#include <numeric>

#include "ntazrp/layer.hpp"

namespace ntazrp {
namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

int sum(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); }

/// Calls f on every vector v with 0 <= v[p] <= hi[p].
template <class F>
void for_each_below(const std::vector<int>& hi, F&& f) {
  std::vector<int> v(hi.size(), 0);
  while (true) {
    f(v);
    std::size_t p = 0;
    while (p < v.size() && v[p] == hi[p]) v[p++] = 0;
    if (p == v.size()) return;
    ++v[p];
  }
}

std::vector<int> minus(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> r(a.size());
  for (std::size_t p = 0; p < a.size(); ++p) r[p] = a[p] - b[p];
  return r;
}

std::vector<int> plus(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> r(a.size());
  for (std::size_t p = 0; p < a.size(); ++p) r[p] = a[p] + b[p];
  return r;
}

using GreenVector = std::map<int, LaurentScalar>;

/// S_hat^{ab}_{ij}(z) on the green Fock space.
GreenVector apply_s(const GreenVector& v, int a, int b, int i, int j, const Spectral& z, const RTable& t) {
  GreenVector out;
  if (a + b != i + j) return out;
  for (const auto& [k, coeff] : v) {
    const int c = i + k - a;
    if (c < 0) continue;
    const QPoly r = t(b, a, c, j, i, k);
    if (r.is_zero()) continue;
    LaurentScalar& slot = out[c];
    slot += coeff * z.power(j - b) * LaurentScalar(r);
    if (slot.is_zero()) out.erase(c);
  }
  return out;
}

using Joint = std::map<std::pair<int, State>, LaurentScalar>;

void accumulate(Joint& acc, const GreenVector& g, const FockVector& blue) {
  for (const auto& [gs, gc] : g)
    for (const auto& [bs, bc] : blue) {
      auto key = std::make_pair(gs, bs);
      LaurentScalar& slot = acc[key];
      slot += gc * bc;
      if (slot.is_zero()) acc.erase(key);
    }
}

/// T2 T1 |in>, each fixed-boundary T applied exactly.
FockVector apply_two(const LayerBoundary& first, const VertexWeight& w1, const LayerBoundary& second,
                     const VertexWeight& w2, const State& in) {
  constexpr int kNoCut = 1 << 20;
  FockVector out;
  for (const auto& [mid, c1] : t_apply(first, in, w1, kNoCut))
    for (const auto& [o, c2] : t_apply(second, mid, w2, kNoCut)) {
      LaurentScalar& slot = out[o];
      slot += c1 * c2;
      if (slot.is_zero()) out.erase(o);
    }
  return out;
}

std::string joint_key(const std::pair<int, State>& k) {
  std::string s = std::to_string(k.first) + "|";
  for (std::size_t p = 0; p < k.second.size(); ++p) s += (p ? "," : "") + std::to_string(k.second[p]);
  return s;
}

/// <out| 𝕋(x)^{bx}_{ix} 𝕋(y)^{by}_{iy} |in>, summing over intermediate states.
/// 𝕋(x)^{bx} lowers the total mode by at most |bx|, which bounds the sum.
LaurentScalar product_element(int m, int n, const std::vector<int>& bx, const std::vector<int>& ix,
                              const std::vector<int>& by, const std::vector<int>& iy, const State& in,
                              const State& out, QMode mode, const RTable& t) {
  const std::size_t k = static_cast<std::size_t>(m * n);
  const Spectral sx{Var::x, std::nullopt}, sy{Var::y, std::nullopt};
  LaurentScalar acc;
  for (int mt = 0; mt <= total_mode(out) + sum(bx); ++mt)
    for (const State& mid : states_with_total(k, mt)) {
      LaurentScalar right = bbT_element(m, n, by, iy, in, mid, sy, mode, 256, t);
      if (right.is_zero()) continue;
      LaurentScalar left = bbT_element(m, n, bx, ix, mid, out, sx, mode, 256, t);
      if (left.is_zero()) continue;
      acc += left * right;
    }
  return acc;
}

}  // namespace

Report check_intertwining(int m, int n, const IntertwiningBounds& bounds, const RTable& t) {
  const auto t0 = Clock::now();
  Report rep;
  rep.suite = "intertwining";
  rep.parameters = {{"m", std::to_string(m)},
                    {"n", std::to_string(n)},
                    {"max_boundary", std::to_string(bounds.max_boundary)},
                    {"max_in_total", std::to_string(bounds.max_in_total)},
                    {"max_green", std::to_string(bounds.max_green)}};
  const std::size_t mm = static_cast<std::size_t>(m), nn = static_cast<std::size_t>(n);
  const Spectral txy{Var::x, Var::y}, txy2{Var::xp, Var::yp};
  const Spectral sxx{Var::x, Var::xp}, syy{Var::y, Var::yp};
  const VertexWeight w1 = r_hat_weight(txy, QMode::generic, t);
  const VertexWeight w2 = r_hat_weight(txy2, QMode::generic, t);
  std::vector<State> ins;
  for (int tt = 0; tt <= bounds.max_in_total; ++tt)
    for (const State& s : states_with_total(mm * nn, tt)) ins.push_back(s);

  // One flat vector holds a, a', i, i' (m each) then b, b', j, j' (n each).
  const std::vector<int> hi(4 * mm + 4 * nn, bounds.max_boundary);
  for_each_below(hi, [&](const std::vector<int>& lab) {
    auto slice = [&](std::size_t from, std::size_t len) {
      return std::vector<int>(lab.begin() + static_cast<long>(from), lab.begin() + static_cast<long>(from + len));
    };
    const auto a = slice(0, mm), a1 = slice(mm, mm), i = slice(2 * mm, mm), i1 = slice(3 * mm, mm);
    const auto b = slice(4 * mm, nn), b1 = slice(4 * mm + nn, nn), j = slice(4 * mm + 2 * nn, nn),
               j1 = slice(4 * mm + 3 * nn, nn);
    if (sum(a) + sum(a1) + sum(b) + sum(b1) != sum(i) + sum(i1) + sum(j) + sum(j1)) return;
    const auto asum = plus(a, a1), bsum = plus(b, b1), isum = plus(i, i1), jsum = plus(j, j1);

    for (int g = 0; g <= bounds.max_green; ++g)
      for (const State& in : ins) {
        Joint lhs, rhs;
        for_each_below(asum, [&](const std::vector<int>& a2) {
          const auto a3 = minus(asum, a2);
          for_each_below(bsum, [&](const std::vector<int>& b2) {
            const auto b3 = minus(bsum, b2);
            GreenVector gv{{g, LaurentScalar(1)}};
            for (std::size_t p = 0; p < nn && !gv.empty(); ++p) gv = apply_s(gv, b[p], b1[p], b2[p], b3[p], syy, t);
            for (std::size_t p = 0; p < mm && !gv.empty(); ++p) gv = apply_s(gv, a[p], a1[p], a2[p], a3[p], sxx, t);
            if (gv.empty()) return;
            const LayerBoundary first{m, n, a3, i1, b3, j1}, second{m, n, a2, i, b2, j};
            accumulate(lhs, gv, apply_two(first, w2, second, w1, in));
          });
        });
        for_each_below(isum, [&](const std::vector<int>& i2) {
          const auto i3 = minus(isum, i2);
          for_each_below(jsum, [&](const std::vector<int>& j2) {
            const auto j3 = minus(jsum, j2);
            GreenVector gv{{g, LaurentScalar(1)}};
            for (std::size_t p = 0; p < mm && !gv.empty(); ++p) gv = apply_s(gv, i2[p], i3[p], i[p], i1[p], sxx, t);
            for (std::size_t p = 0; p < nn && !gv.empty(); ++p) gv = apply_s(gv, j2[p], j3[p], j[p], j1[p], syy, t);
            if (gv.empty()) return;
            const LayerBoundary first{m, n, a, i2, b, j2}, second{m, n, a1, i3, b1, j3};
            accumulate(rhs, gv, apply_two(first, w1, second, w2, in));
          });
        });
        rep.checked += std::max<std::uint64_t>(1, std::max(lhs.size(), rhs.size()));
        Joint diff = lhs;
        for (const auto& [key, v] : rhs) {
          LaurentScalar& slot = diff[key];
          slot -= v;
          if (slot.is_zero()) diff.erase(key);
        }
        for (const auto& [key, d] : diff) {
          std::vector<long> loc(lab.begin(), lab.end());
          loc.push_back(g);
          loc.insert(loc.end(), in.begin(), in.end());
          auto get = [&](const Joint& j) {
            auto it = j.find(key);
            return it == j.end() ? LaurentScalar() : it->second;
          };
          rep.add_failure({std::move(loc), "intertwining out " + joint_key(key), get(rhs).to_string(),
                           get(lhs).to_string(), d.to_string()});
        }
      }
  });
  rep.timing_ms = ms_since(t0);
  rep.finalize();
  return rep;
}

Report check_bilinear(int m, int n, const std::vector<int>& s, const std::vector<int>& r, int window, QMode mode,
                      const RTable& t) {
  const auto t0 = Clock::now();
  Report rep;
  rep.suite = "bilinear";
  auto join = [](const std::vector<int>& v) {
    std::string out;
    for (std::size_t p = 0; p < v.size(); ++p) out += (p ? "," : "") + std::to_string(v[p]);
    return out;
  };
  rep.parameters = {{"m", std::to_string(m)}, {"n", std::to_string(n)}, {"s", join(s)},
                    {"r", join(r)},           {"window", std::to_string(window)},
                    {"q", mode == QMode::zero ? "0" : "generic"}};
  const std::size_t k = static_cast<std::size_t>(m * n);
  std::vector<State> states;
  for (int tt = 0; tt <= window; ++tt)
    for (const State& st : states_with_total(k, tt)) states.push_back(st);
  for (const State& in : states)
    for (const State& out : states) {
      LaurentScalar lhs;
      for_each_below(s, [&](const std::vector<int>& b) {
        const auto b1 = minus(s, b);
        for_each_below(r, [&](const std::vector<int>& i) {
          const auto i1 = minus(r, i);
          LaurentScalar e = product_element(m, n, b, i, b1, i1, in, out, mode, t);
          if (e.is_zero()) return;
          Exponents ex{};
          ex[static_cast<std::size_t>(Var::x)] = sum(b) + sum(i);
          ex[static_cast<std::size_t>(Var::y)] = sum(b1) + sum(i1);
          lhs += LaurentScalar::term(ex, QRat(1)) * e;
        });
      });
      const LaurentScalar rhs = lhs.swap_vars(Var::x, Var::y);
      ++rep.checked;
      if (lhs != rhs) {
        std::vector<long> loc(in.begin(), in.end());
        loc.insert(loc.end(), out.begin(), out.end());
        rep.add_failure({std::move(loc), "bilinear", rhs.to_string(), lhs.to_string(), (lhs - rhs).to_string()});
      }
    }
  rep.timing_ms = ms_since(t0);
  rep.finalize();
  return rep;
}

QRat f_rst(int r, int s, int t) {
  if (r < 0 || s < 0 || t < 0 || t > r + s) return QRat();
  QRat acc;
  for (int j1 = std::max(0, t - s); j1 <= std::min(r, t); ++j1) {
    const int j2 = r - j1, j1p = t - j1, j2p = s - j1p;
    acc += QRat(QPoly::q_power(j1 * j2p)) * chi(j1) * chi(j2) * chi(j1p) * chi(j2p);
  }
  return acc;
}

Report check_f_symmetry(int max) {
  const auto t0 = Clock::now();
  Report rep;
  rep.suite = "f-symmetry";
  rep.parameters["max"] = std::to_string(max);
  const RTable& tab = default_r_table();
  auto cmp = [&](std::vector<long> loc, const std::string& label, const QRat& lhs, const QRat& rhs) {
    ++rep.checked;
    if (lhs != rhs) rep.add_failure({std::move(loc), label, rhs.to_string(), lhs.to_string(), (lhs - rhs).to_string()});
  };
  auto coefficient = [](const LaurentScalar& v, int ex, int ey) {
    Exponents e{};
    e[static_cast<std::size_t>(Var::x)] = ex;
    e[static_cast<std::size_t>(Var::y)] = ey;
    return v.coefficient(e);
  };
  const std::vector<int> z1{0}, o1{1}, z2{0, 0};
  for (int r = 0; r <= max; ++r)
    for (int s = 0; s <= max; ++s)
      for (int t = 0; t <= max; ++t) {
        cmp({r, s, t}, "symmetry", f_rst(r, s, t), f_rst(s, r, t));
        if (r >= 1 && s >= 1)
          cmp({r, s, t}, "shifted-symmetry", QRat(QPoly(1) - QPoly::q_power(s)) * f_rst(r - 1, s, t),
              QRat(QPoly(1) - QPoly::q_power(r)) * f_rst(s - 1, r, t));
        if (t > r + s) continue;
        // Coefficient of x^r y^s in <(r+s-t, t)| 𝕋(x)^{00}_0 𝕋(y)^{00}_0 |(0,0)>.
        const LaurentScalar e = product_element(1, 2, z2, z1, z2, z1, {0, 0}, {r + s - t, t}, QMode::generic, tab);
        cmp({r, s, t}, "extraction", coefficient(e, r, s) / (chi_prime(r) * chi_prime(s)), f_rst(r, s, t));
        if (t + 1 > r + s) continue;
        // The (s, r) = (0, 1) relation on the element <(r+s-t-1, t)| ... |(0,0)>.
        const State out{r + s - t - 1, t};
        const LaurentScalar mixed =
            LaurentScalar::monomial(Var::x, 1) * product_element(1, 2, z2, o1, z2, z1, {0, 0}, out, QMode::generic, tab) +
            LaurentScalar::monomial(Var::y, 1) * product_element(1, 2, z2, z1, z2, o1, {0, 0}, out, QMode::generic, tab);
        const QRat scaled = coefficient(mixed, r, s) * QRat(QPoly(1) - QPoly::q_power(1)) /
                            (chi_prime(r) * chi_prime(s));
        const QRat expected = QRat(QPoly::q_power(s)) * f_rst(r - 1, s, t) + f_rst(r, s - 1, t);
        cmp({r, s, t}, "shifted-extraction", scaled, expected);
        const QRat swapped = QRat(QPoly::q_power(r)) * f_rst(s - 1, r, t) + f_rst(s, r - 1, t);
        cmp({r, s, t}, "shifted-identity", expected, swapped);
      }
  // (-z;q)_r (-zq^r;q)_s = (-z;q)_s (-zq^s;q)_r as polynomials in z and q.
  auto gen = [](int r, int s) {
    LaurentScalar p(1);
    for (int u = 0; u < r; ++u) p *= LaurentScalar(1) + LaurentScalar::monomial(Var::z, 1, QRat(QPoly::q_power(u)));
    for (int u = 0; u < s; ++u)
      p *= LaurentScalar(1) + LaurentScalar::monomial(Var::z, 1, QRat(QPoly::q_power(r + u)));
    return p;
  };
  for (int r = 0; r <= max; ++r)
    for (int s = 0; s <= max; ++s) {
      const LaurentScalar lhs = gen(r, s), rhs = gen(s, r);
      ++rep.checked;
      if (lhs != rhs)
        rep.add_failure({{r, s}, "generating-identity", rhs.to_string(), lhs.to_string(), (lhs - rhs).to_string()});
    }
  rep.timing_ms = ms_since(t0);
  rep.finalize();
  return rep;
}

}  // namespace ntazrp
