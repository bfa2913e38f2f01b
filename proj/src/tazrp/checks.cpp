#include <algorithm>
#include <chrono>
#include <set>

#include "ntazrp/tazrp.hpp"

namespace ntazrp {
namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t t = 0; t < v.size(); ++t) s += (t ? "," : "") + std::to_string(v[t]);
  return s;
}

std::vector<long> location(const State& out, const State& in) {
  std::vector<long> loc(out.begin(), out.end());
  loc.insert(loc.end(), in.begin(), in.end());
  return loc;
}

/// Compares two operators on their common safe window, counting every entry
/// in the window where either side is nonzero.
void compare_into(Report& rep, const FockOp& lhs, const FockOp& rhs, const std::string& label) {
  std::set<std::pair<State, State>> support;
  for (const auto* op : {&lhs, &rhs})
    for (const auto& [in, col] : op->columns())
      for (const auto& [out, v] : col)
        if (lhs.in_window(out, in) && rhs.in_window(out, in)) support.insert({out, in});
  rep.checked += support.size();
  for (const auto& m : compare_on_window(lhs, rhs))
    rep.add_failure({location(m.out, m.in), label, m.rhs.to_string(), m.lhs.to_string(), (m.lhs - m.rhs).to_string()});
  rep.parameters["window"] = std::to_string(std::min(lhs.window_limit() - std::max(lhs.in_margin(), lhs.out_margin()),
                                                     rhs.window_limit() - std::max(rhs.in_margin(), rhs.out_margin())));
}

/// X operators of one local-state length, built once per (alpha, var, hatted).
class XCache {
 public:
  explicit XCache(int cutoff) : cutoff_(cutoff) {}
  const FockOp& get(const LocalState& a, Var z, bool hatted) {
    auto key = std::make_tuple(a, z, hatted);
    auto it = ops_.find(key);
    if (it == ops_.end()) it = ops_.emplace(key, x_operator(a, z, cutoff_, hatted, cutoff_).body).first;
    return it->second;
  }

 private:
  int cutoff_;
  std::map<std::tuple<LocalState, Var, bool>, FockOp> ops_;
};

void check_local(const LocalState& a, const LocalState& b) {
  if (a.empty() || a.size() != b.size()) throw ShapeMismatch("tazrp check: alpha and beta must have the same length n >= 1");
  for (std::size_t t = 0; t < a.size(); ++t)
    if (a[t] < 0 || b[t] < 0) throw std::invalid_argument("tazrp check: negative multiplicity");
}

}  // namespace

Report check_hat_relation(const LocalState& alpha, const LocalState& beta, int cutoff) {
  check_local(alpha, beta);
  const auto t0 = Clock::now();
  Report rep;
  rep.suite = "hat-relation";
  rep.parameters["alpha"] = join(alpha);
  rep.parameters["beta"] = join(beta);
  rep.parameters["cutoff"] = std::to_string(cutoff);
  XCache x(cutoff);
  const Var z = Var::z;
  FockOp lhs = compose(x.get(alpha, z, true), x.get(beta, z, false));
  lhs -= compose(x.get(alpha, z, false), x.get(beta, z, true));
  FockOp rhs = compose(x.get(alpha, z, false), x.get(beta, z, false));
  rhs *= LaurentScalar(-occupancy(beta));
  for (const auto& [g, d] : predecessors(alpha, beta)) rhs += compose(x.get(g, z, false), x.get(d, z, false));
  compare_into(rep, lhs, rhs, "baxterized");
  // The z = 1 statement follows by evaluation, but is checked separately so
  // a failure names the form that broke.
  auto at_one = [z](const LaurentScalar& v) { return v.evaluate_at_one(z); };
  compare_into(rep, lhs.map_entries(at_one), rhs.map_entries(at_one), "z=1");
  rep.timing_ms = ms_since(t0);
  rep.finalize();
  return rep;
}

Report check_bilinear_X(const LocalState& alpha, const LocalState& beta, int cutoff) {
  check_local(alpha, beta);
  const auto t0 = Clock::now();
  Report rep;
  rep.suite = "bilinear-X";
  rep.parameters["alpha"] = join(alpha);
  rep.parameters["beta"] = join(beta);
  rep.parameters["cutoff"] = std::to_string(cutoff);
  XCache xc(cutoff);
  auto pairs = predecessors(alpha, beta);
  pairs.emplace_back(alpha, beta);
  rep.parameters["pairs"] = std::to_string(pairs.size());
  FockOp lhs = compose(xc.get(pairs.front().first, Var::x, false), xc.get(pairs.front().second, Var::y, false));
  for (std::size_t p = 1; p < pairs.size(); ++p)
    lhs += compose(xc.get(pairs[p].first, Var::x, false), xc.get(pairs[p].second, Var::y, false));
  lhs *= LaurentScalar::monomial(Var::x, occupancy(beta));
  const FockOp rhs = lhs.map_entries([](const LaurentScalar& v) { return v.swap_vars(Var::x, Var::y); });
  compare_into(rep, lhs, rhs, "bilinear-X");
  rep.timing_ms = ms_since(t0);
  rep.finalize();
  return rep;
}

Report check_embedding(int n, int r, int max_total) {
  if (n < 1 || r < 0 || max_total < 0) throw std::invalid_argument("check_embedding: need n >= 1, r >= 0");
  const auto t0 = Clock::now();
  Report rep;
  rep.suite = "embedding";
  rep.parameters["n"] = std::to_string(n);
  rep.parameters["r"] = std::to_string(r);
  rep.parameters["max_total"] = std::to_string(max_total);
  const std::size_t K = static_cast<std::size_t>(x_factors(n));
  const std::size_t F = static_cast<std::size_t>(n * n);
  std::vector<int> bi(static_cast<std::size_t>(n), 0);
  bi.back() = r;
  std::vector<std::size_t> diag, raise;
  for (int t = 1; t <= n; ++t) diag.push_back(static_cast<std::size_t>(factor_index(n, n, t, n + 1 - t)));
  for (int t = 2; t <= n; ++t) raise.push_back(static_cast<std::size_t>(factor_index(n, n, t, n + 2 - t)));

  for (int tin = 0; tin <= max_total; ++tin)
    for (const State& in : states_with_total(F, tin)) {
      const FockVector lhs = bbT_apply_q0(n, n, bi, bi, in, Var::z, max_total);
      FockVector rhs;
      bool alive = true;
      for (std::size_t f : diag) alive = alive && in[f] >= r;
      if (alive) {
        const State xin(in.begin(), in.begin() + static_cast<std::ptrdiff_t>(K));
        // Tail sums T_t = alpha_{>=t}, chosen from T_n up so that T_t >= T_{t+1}.
        // The X factor lowers its modes by at most T_2 + ... + T_n, so the
        // output total is at least |in| - r + T_1.
        std::vector<int> T(static_cast<std::size_t>(n) + 2, 0);
        const int hi = max_total - tin + r;
        auto rec = [&](auto&& self, int t) -> void {
          if (t > 0) {
            for (int v = T[static_cast<std::size_t>(t + 1)]; v <= hi; ++v) {
              T[static_cast<std::size_t>(t)] = v;
              self(self, t - 1);
            }
            return;
          }
          LocalState alpha(static_cast<std::size_t>(n));
          State base = in;
          for (int s = 1; s <= n; ++s) {
            const auto us = static_cast<std::size_t>(s);
            alpha[us - 1] = T[us] - T[us + 1];
            base[diag[us - 1]] += T[us] - r;
          }
          for (std::size_t f : raise) base[f] += r;
          for (const auto& [xout, poly] : x_apply(alpha, xin, max_total)) {
            State out = base;
            std::copy(xout.begin(), xout.end(), out.begin());
            if (total_mode(out) > max_total) continue;
            for (const auto& [e, c] : poly) rhs[out] += LaurentScalar::monomial(Var::z, e - r, QRat(c));
          }
        };
        rec(rec, n);
      }
      std::erase_if(rhs, [](const auto& e) { return e.second.is_zero(); });
      std::set<State> outs;
      for (const auto& [o, v] : lhs) outs.insert(o);
      for (const auto& [o, v] : rhs) outs.insert(o);
      for (const State& o : outs) {
        ++rep.checked;
        const auto li = lhs.find(o);
        const auto ri = rhs.find(o);
        const LaurentScalar lv = li == lhs.end() ? LaurentScalar() : li->second;
        const LaurentScalar rv = ri == rhs.end() ? LaurentScalar() : ri->second;
        if (lv != rv) rep.add_failure({location(o, in), "embedding", rv.to_string(), lv.to_string(), (lv - rv).to_string()});
      }
    }
  rep.timing_ms = ms_since(t0);
  rep.finalize();
  return rep;
}

Report check_q0_limit(int max_index, const RTable& table) {
  const auto t0 = Clock::now();
  Report rep = check_q0_closed_form(max_index, table);
  rep.suite = "q0-limit";

  // Each zero-mode vertex against its 0-oscillator word.
  const FockSpace sp{max_index + 2, QMode::zero};
  for (int a = 0; a <= max_index; ++a)
    for (int b = 0; b <= max_index; ++b)
      for (int i = 0; i <= max_index; ++i)
        for (int j = 0; j <= max_index; ++j) {
          const FockOp v = vertex_op(VertexKind::R_hat, a, b, i, j, Var::z, sp, table).body;
          FockOp w(std::vector<int>{sp.cutoff}, QMode::zero);
          if (auto word = tazrp_vertex(a, b, i, j)) {
            w = word_op(*word, sp);
            w *= LaurentScalar::monomial(Var::z, j - b);
          }
          ++rep.checked;
          for (int k = 0; k <= sp.cutoff; ++k)
            for (int c = 0; c <= sp.cutoff; ++c)
              if (v.element({c}, {k}) != w.element({c}, {k})) {
                rep.add_failure({{a, b, i, j, c, k}, "vertex-word", w.element({c}, {k}).to_string(),
                                 v.element({c}, {k}).to_string(), (v.element({c}, {k}) - w.element({c}, {k})).to_string()});
              }
        }

  // Fixed-boundary layers for (m, n) <= (2, 2) with boundaries <= 2.
  const VertexWeight rw = r_hat_weight({Var::z, std::nullopt}, QMode::zero, table);
  const VertexWeight ww = [](int a, int b, int i, int j, int c, int k) {
    auto word = tazrp_vertex(a, b, i, j);
    if (!word) return LaurentScalar();
    auto img = word_image(word->f, word->e, word->g, k);
    if (!img || *img != c) return LaurentScalar();
    return LaurentScalar::monomial(Var::z, j - b);
  };
  const int cut = 2;
  for (int m = 1; m <= 2; ++m)
    for (int n = 1; n <= 2; ++n) {
      const std::size_t len = static_cast<std::size_t>(2 * (m + n));
      std::vector<int> lab(len, 0);
      while (true) {
        LayerBoundary bd{m, n, {lab.begin(), lab.begin() + m}, {lab.begin() + m, lab.begin() + 2 * m},
                         {lab.begin() + 2 * m, lab.begin() + 2 * m + n}, {lab.begin() + 2 * m + n, lab.end()}};
        int s = 0;
        for (int x : bd.a) s += x;
        for (int x : bd.b) s += x;
        for (int x : bd.i) s -= x;
        for (int x : bd.j) s -= x;
        if (s == 0) {
          const FockSpace lsp{cut, QMode::zero};
          compare_into(rep, t_fixed(bd, lsp, rw), t_fixed(bd, lsp, ww), "layer " + join(lab));
        }
        std::size_t p = 0;
        while (p < len && lab[p] == cut) lab[p++] = 0;
        if (p == len) break;
        ++lab[p];
      }
    }
  rep.parameters.erase("window");
  rep.timing_ms = ms_since(t0);
  rep.finalize();
  return rep;
}

Report check_order(int max_total, int max_n) {
  const auto t0 = Clock::now();
  Report rep;
  rep.suite = "order";
  rep.parameters["max_total"] = std::to_string(max_total);
  rep.parameters["max_n"] = std::to_string(max_n);
  for (int n = 1; n <= max_n; ++n)
    for (int tot = 0; tot <= max_total; ++tot)
      for (const State& gd : states_with_total(static_cast<std::size_t>(2 * n), tot)) {
        const LocalState g(gd.begin(), gd.begin() + n), d(gd.begin() + n, gd.end());
        const auto tr = transitions(g, d);
        std::vector<long> loc(gd.begin(), gd.end());
        ++rep.checked;
        if (static_cast<int>(tr.size()) != occupancy(d))
          rep.add_failure({loc, "markov-column", std::to_string(occupancy(d)), std::to_string(tr.size()), ""});
        for (const auto& ab : tr) {
          const auto pre = predecessors(ab.first, ab.second);
          if (!std::binary_search(pre.begin(), pre.end(), LocalPair{g, d}))
            rep.add_failure({loc, "predecessor", "present", "missing", ""});
        }
        std::vector<LocalPair> below = tr;
        below.emplace_back(g, d);
        for (std::size_t p = 0; p < below.size(); ++p)
          for (std::size_t s = p + 1; s < below.size(); ++s) {
            ++rep.checked;
            if (!greater(below[p], below[s]) && !greater(below[s], below[p]))
              rep.add_failure({loc, "total-order", "comparable", "incomparable", ""});
          }
      }
  rep.timing_ms = ms_since(t0);
  rep.finalize();
  return rep;
}

}  // namespace ntazrp
