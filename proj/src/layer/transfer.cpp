#include <algorithm>
#include <numeric>

#include "ntazrp/layer.hpp"

namespace ntazrp {
namespace {

int sum(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); }

/// Edge labels of every vertex, indexed by tensor factor.
struct Labels {
  std::vector<int> a, b, i, j;
  std::vector<int> right;   // exit labels, top row first
  std::vector<int> bottom;  // bottom labels, leftmost column first
};

/// Pins all edges from the fixed top and left sides and the Fock change of
/// each vertex (out - in = j - b). Returns nullopt if any label is negative.
std::optional<Labels> pin(int m, int n, const std::vector<int>& b, const std::vector<int>& i,
                          const State& in, const State& out) {
  const std::size_t k = static_cast<std::size_t>(m * n);
  Labels L{std::vector<int>(k), std::vector<int>(k), std::vector<int>(k), std::vector<int>(k),
           std::vector<int>(static_cast<std::size_t>(m)), std::vector<int>(static_cast<std::size_t>(n))};
  for (int c = 1; c <= n; ++c) {
    int label = b[static_cast<std::size_t>(n - c)];
    for (int r = m; r >= 1; --r) {
      const auto f = static_cast<std::size_t>(factor_index(m, n, r, c));
      L.b[f] = label;
      L.j[f] = label - (in[f] - out[f]);
      if (L.j[f] < 0) return std::nullopt;
      label = L.j[f];
    }
    L.bottom[static_cast<std::size_t>(n - c)] = label;
  }
  for (int r = 1; r <= m; ++r) {
    int cur = i[static_cast<std::size_t>(m - r)];
    for (int c = n; c >= 1; --c) {
      const auto f = static_cast<std::size_t>(factor_index(m, n, r, c));
      L.i[f] = cur;
      L.a[f] = cur + L.j[f] - L.b[f];
      if (L.a[f] < 0) return std::nullopt;
      cur = L.a[f];
    }
    L.right[static_cast<std::size_t>(m - r)] = cur;
  }
  return L;
}

void check_shape(int m, int n, std::size_t bn, std::size_t im, const State& s) {
  if (m < 1 || n < 1 || bn != static_cast<std::size_t>(n) || im != static_cast<std::size_t>(m) ||
      s.size() != static_cast<std::size_t>(m * n))
    throw ShapeMismatch("layer: boundary or state length does not match (m, n)");
}

}  // namespace

std::vector<GridPos> factor_order(int m, int n) {
  std::vector<GridPos> v;
  for (int d = 2; d <= m + n; ++d)
    for (int r = std::min(m, d - 1); r >= 1; --r) {
      const int c = d - r;
      if (c >= 1 && c <= n) v.push_back({r, c});
    }
  return v;
}

int factor_index(int m, int n, int r, int c) {
  // Count vertices on earlier anti-diagonals, then those of this diagonal with larger r.
  int idx = 0;
  for (int d = 2; d < r + c; ++d) idx += std::max(0, std::min(m, d - 1) - std::max(1, d - n) + 1);
  return idx + (std::min(m, r + c - 1) - r);
}

LaurentScalar Spectral::power(int e) const {
  if (!den) return LaurentScalar::monomial(num, e);
  return ratio_power(num, *den, e);
}

VertexWeight r_hat_weight(const Spectral& z, QMode mode, const RTable& table) {
  return [z, mode, table](int a, int b, int i, int j, int c, int k) {
    const QPoly r = table(a, b, c, i, j, k);
    if (r.is_zero()) return LaurentScalar();
    if (mode == QMode::zero) return z.power(j - b) * LaurentScalar(QPoly(r.at_zero()));
    return z.power(j - b) * LaurentScalar(r);
  };
}

FockVector t_apply(const LayerBoundary& bd, const State& in, const VertexWeight& w, int max_component) {
  const int m = bd.m, n = bd.n;
  check_shape(m, n, bd.b.size(), bd.i.size(), in);
  FockVector result;
  if (sum(bd.a) + sum(bd.b) != sum(bd.i) + sum(bd.j)) return result;
  const int bound = sum(bd.i) + sum(bd.j);
  // V[r][c-1]: label on the vertical edge above row r in column c; V[0] is the bottom.
  std::vector<std::vector<int>> V(static_cast<std::size_t>(m + 1), std::vector<int>(static_cast<std::size_t>(n)));
  for (int c = 1; c <= n; ++c) {
    V[0][static_cast<std::size_t>(c - 1)] = bd.j[static_cast<std::size_t>(n - c)];
    V[static_cast<std::size_t>(m)][static_cast<std::size_t>(c - 1)] = bd.b[static_cast<std::size_t>(n - c)];
  }
  const std::size_t internal = static_cast<std::size_t>((m - 1) * n);
  std::vector<int> odo(internal, 0);
  while (true) {
    for (std::size_t t = 0; t < internal; ++t) V[1 + t / static_cast<std::size_t>(n)][t % static_cast<std::size_t>(n)] = odo[t];
    LaurentScalar coeff(1);
    State out = in;
    bool ok = true;
    for (int r = 1; r <= m && ok; ++r) {
      int cur = bd.i[static_cast<std::size_t>(m - r)];
      for (int c = n; c >= 1 && ok; --c) {
        const auto f = static_cast<std::size_t>(factor_index(m, n, r, c));
        const int jv = V[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)];
        const int bv = V[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - 1)];
        const int a = cur + jv - bv;
        const int cv = in[f] + jv - bv;
        if (a < 0 || cv < 0 || cv > max_component) {
          ok = false;
          break;
        }
        LaurentScalar wv = w(a, bv, cur, jv, cv, in[f]);
        if (wv.is_zero()) {
          ok = false;
          break;
        }
        coeff *= wv;
        out[f] = cv;
        cur = a;
      }
      if (ok && cur != bd.a[static_cast<std::size_t>(m - r)]) ok = false;
    }
    if (ok) {
      LaurentScalar& slot = result[out];
      slot += coeff;
      if (slot.is_zero()) result.erase(out);
    }
    std::size_t t = 0;
    while (t < internal && odo[t] == bound) odo[t++] = 0;
    if (t == internal) break;
    ++odo[t];
  }
  return result;
}

FockOp t_fixed(const LayerBoundary& bd, const FockSpace& space, const VertexWeight& w) {
  const std::size_t k = static_cast<std::size_t>(bd.m * bd.n);
  FockOp op(std::vector<int>(k, space.cutoff), space.mode);
  const int shift = sum(bd.j) - sum(bd.b);
  op.set_bounds(std::max(0, shift), std::max(0, -shift));
  for (const State& in : op.basis())
    for (const auto& [out, v] : t_apply(bd, in, w, space.cutoff)) op.add(out, in, v);
  return op;
}

FockOp t_fixed(const LayerBoundary& bd, Var z, const FockSpace& space) {
  return t_fixed(bd, space, r_hat_weight({z, std::nullopt}, space.mode));
}

LaurentScalar t_element(const LayerBoundary& bd, const State& in, const State& out, const VertexWeight& w) {
  check_shape(bd.m, bd.n, bd.b.size(), bd.i.size(), in);
  auto L = pin(bd.m, bd.n, bd.b, bd.i, in, out);
  if (!L || L->bottom != bd.j || L->right != bd.a) return {};
  LaurentScalar v(1);
  for (std::size_t f = 0; f < in.size(); ++f) {
    v *= w(L->a[f], L->b[f], L->i[f], L->j[f], out[f], in[f]);
    if (v.is_zero()) break;
  }
  return v;
}

LaurentScalar bbT_element(int m, int n, const std::vector<int>& b, const std::vector<int>& i, const State& in,
                          const State& out, const Spectral& z, QMode mode, int label_bound,
                          const RTable& table) {
  check_shape(m, n, b.size(), i.size(), in);
  if (out.size() != in.size()) throw ShapeMismatch("bbT_element: in/out length differ");
  auto L = pin(m, n, b, i, in, out);
  if (!L) return {};
  for (const auto* v : {&L->a, &L->b, &L->i, &L->j})
    for (int x : *v)
      if (x > label_bound) throw UnboundedSum("bbT_element: pinned label exceeds the exploration bound");
  int zexp = 0;
  if (mode == QMode::zero) {
    for (std::size_t f = 0; f < in.size(); ++f) {
      if (table(L->a[f], L->b[f], out[f], L->i[f], L->j[f], in[f]).at_zero() == 0) return {};
      zexp += L->j[f] - L->b[f];
    }
    return z.power(zexp);
  }
  QRat v(1);
  for (std::size_t f = 0; f < in.size(); ++f) {
    const QPoly r = table(L->a[f], L->b[f], out[f], L->i[f], L->j[f], in[f]);
    if (r.is_zero()) return {};
    v *= QRat(r);
    zexp += L->j[f] - L->b[f];
  }
  for (int x : b) v *= chi_prime(x);
  for (int x : i) v *= chi(x);
  for (int x : L->right) v *= chi_prime(x);
  for (int x : L->bottom) v *= chi(x);
  return z.power(zexp) * LaurentScalar(v);
}

std::vector<State> states_with_total(std::size_t k, int t) {
  std::vector<State> out;
  if (t < 0) return out;
  if (k == 0) {
    if (t == 0) out.push_back({});
    return out;
  }
  State s(k, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int left) {
    if (pos + 1 == k) {
      s[pos] = left;
      out.push_back(s);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      s[pos] = v;
      rec(pos + 1, left - v);
    }
  };
  rec(0, t);
  return out;
}

FockVector bbT_apply_q0(int m, int n, const std::vector<int>& b, const std::vector<int>& i, const State& in,
                        Var z, int max_out_total) {
  check_shape(m, n, b.size(), i.size(), in);
  FockVector result;
  const int jmax = max_out_total + sum(b) - total_mode(in);
  for (int jt = 0; jt <= jmax; ++jt)
    for (const State& j : states_with_total(static_cast<std::size_t>(n), jt)) {
      // V[c-1]: label entering the current row from below in column c.
      std::vector<int> V(static_cast<std::size_t>(n));
      for (int c = 1; c <= n; ++c) V[static_cast<std::size_t>(c - 1)] = j[static_cast<std::size_t>(n - c)];
      State out = in;
      for (int r = 1; r <= m; ++r) {
        int cur = i[static_cast<std::size_t>(m - r)];
        for (int c = n; c >= 1; --c) {
          const auto f = static_cast<std::size_t>(factor_index(m, n, r, c));
          const int jv = V[static_cast<std::size_t>(c - 1)], k = in[f];
          const int a = jv + std::max(cur - k, 0);
          V[static_cast<std::size_t>(c - 1)] = std::min(cur, k);
          out[f] = jv + std::max(k - cur, 0);
          cur = a;
        }
      }
      bool ok = true;
      for (int c = 1; c <= n; ++c) ok = ok && V[static_cast<std::size_t>(c - 1)] == b[static_cast<std::size_t>(n - c)];
      if (!ok || total_mode(out) > max_out_total) continue;
      LaurentScalar& slot = result[out];
      slot += LaurentScalar::monomial(z, jt - sum(b));
      if (slot.is_zero()) result.erase(out);
    }
  return result;
}

}  // namespace ntazrp
