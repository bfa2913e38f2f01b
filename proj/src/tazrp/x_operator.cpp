#include <algorithm>
#include <numeric>

#include "ntazrp/tazrp.hpp"

namespace ntazrp {
namespace {

/// Staircase vertices (r, c) with r + c <= n, in processing order: rows from
/// the bottom, each row from its left end (c = n - r) to c = 1.
std::vector<GridPos> staircase(int n) {
  std::vector<GridPos> v;
  for (int r = 1; r < n; ++r)
    for (int c = n - r; c >= 1; --c) v.push_back({r, c});
  return v;
}

}  // namespace

std::optional<OscWord> tazrp_vertex(int a, int b, int i, int j) {
  if (a < 0 || b < 0 || i < 0 || j < 0 || a + b != i + j || a < j) return std::nullopt;
  return OscWord{j, a > j ? 1 : 0, b};
}

int x_factors(int n) { return n * (n - 1) / 2; }

int x_lower_bound(const LocalState& alpha) {
  int s = 0;
  for (int r = 2; r <= static_cast<int>(alpha.size()); ++r) s += tail_sum(alpha, r);
  return s;
}

XColumn x_apply(const LocalState& alpha, const State& in, int max_component, bool hatted) {
  const int n = static_cast<int>(alpha.size());
  if (n < 1) throw ShapeMismatch("x_apply: n must be positive");
  if (in.size() != static_cast<std::size_t>(x_factors(n))) throw ShapeMismatch("x_apply: state length is not n(n-1)/2");
  XColumn result;
  const auto verts = staircase(n);
  std::vector<int> col(static_cast<std::size_t>(n + 1), 0);  // label entering column c from below
  State out = in;

  auto emit = [&](int sum_a) {
    const long w = hatted ? sum_a : 1;
    if (w == 0) return;
    auto& slot = result[out][sum_a];
    slot += w;
  };

  auto rec = [&](auto&& self, std::size_t t, int cur, int sum_a) -> void {
    if (t == verts.size()) {
      emit(sum_a + alpha[static_cast<std::size_t>(n - 1)]);
      return;
    }
    const auto [r, c] = verts[t];
    if (c == n - r) cur = tail_sum(alpha, r);
    const auto f = static_cast<std::size_t>(factor_index(n, n, r, c));
    const int k = in[f];
    const bool top = r == n - c;
    const int b_lo = top ? tail_sum(alpha, n + 1 - c) : 0;
    const int b_hi = top ? b_lo : std::min(cur, k);
    for (int b = b_lo; b <= b_hi; ++b) {
      // (a-)^b needs b <= k; k^{θ(i>b)} then needs the mode to be 0.
      if (b > cur || b > k) break;
      if (cur > b && k != b) continue;
      auto visit = [&](int j) {
        const int a = cur + j - b;
        out[f] = k - b + j;
        const int saved = col[static_cast<std::size_t>(c)];
        col[static_cast<std::size_t>(c)] = b;
        if (c == 1)
          self(self, t + 1, 0, sum_a + a);
        else
          self(self, t + 1, a, sum_a);
        col[static_cast<std::size_t>(c)] = saved;
        out[f] = k;
      };
      if (r == 1) {
        for (int j = 0; k - b + j <= max_component; ++j) visit(j);
      } else {
        const int j = col[static_cast<std::size_t>(c)];
        if (k - b + j <= max_component) visit(j);
      }
    }
  };
  rec(rec, 0, 0, 0);
  for (auto it = result.begin(); it != result.end();) {
    std::erase_if(it->second, [](const auto& e) { return e.second == 0; });
    it = it->second.empty() ? result.erase(it) : std::next(it);
  }
  return result;
}

XOperator x_operator(const LocalState& alpha, Var z, int cutoff, bool hatted, std::optional<int> max_total) {
  const int n = static_cast<int>(alpha.size());
  if (n < 1) throw ShapeMismatch("x_operator: n must be positive");
  FockOp body(std::vector<int>(static_cast<std::size_t>(x_factors(n)), cutoff), QMode::zero, max_total);
  body.set_bounds(std::nullopt, x_lower_bound(alpha));
  for (const State& in : body.basis())
    for (const auto& [out, poly] : x_apply(alpha, in, cutoff, hatted)) {
      if (!body.contains(out)) continue;
      for (const auto& [e, count] : poly) body.add(out, in, LaurentScalar::monomial(z, e, QRat(count)));
    }
  return {alpha, z, hatted, std::move(body)};
}

namespace {

using IntVector = std::map<State, BigInt>;

/// X_alpha at z = 1 applied column by column with a per-cutoff cache.
class XAtOne {
 public:
  explicit XAtOne(int cutoff) : cutoff_(cutoff) {}

  const std::vector<std::pair<State, long>>& column(const LocalState& alpha, const State& in) {
    auto key = std::make_pair(alpha, in);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    std::vector<std::pair<State, long>> col;
    for (const auto& [out, poly] : x_apply(alpha, in, cutoff_)) {
      long s = 0;
      for (const auto& [e, c] : poly) s += c;
      if (s != 0) col.emplace_back(out, s);
    }
    return cache_.emplace(std::move(key), std::move(col)).first->second;
  }

  BigInt trace(const Configuration& sigma, int n) {
    std::vector<int> cut(static_cast<std::size_t>(x_factors(n)), cutoff_);
    const FockOp shape(cut, QMode::zero);
    BigInt total = 0;
    for (const State& s : shape.basis()) {
      IntVector v{{s, BigInt(1)}};
      for (auto site = sigma.rbegin(); site != sigma.rend() && !v.empty(); ++site) {
        IntVector w;
        for (const auto& [st, c] : v)
          for (const auto& [out, x] : column(*site, st)) w[out] += c * x;
        v = std::move(w);
      }
      auto it = v.find(s);
      if (it != v.end()) total += it->second;
    }
    return total;
  }

 private:
  int cutoff_;
  std::map<std::pair<LocalState, State>, std::vector<std::pair<State, long>>> cache_;
};

void check_config(const Sector& sector, const Configuration& sigma) {
  if (!sector.basic()) throw std::invalid_argument("mp_probability: sector is not basic");
  if (sigma.size() != static_cast<std::size_t>(sector.L)) throw ShapeMismatch("mp_probability: wrong number of sites");
  std::vector<int> m(static_cast<std::size_t>(sector.n), 0);
  for (const auto& site : sigma) {
    if (site.size() != m.size()) throw ShapeMismatch("mp_probability: wrong number of species");
    for (std::size_t a = 0; a < m.size(); ++a) m[a] += site[a];
  }
  if (m != sector.m) throw std::invalid_argument("mp_probability: configuration is not in the sector");
}

}  // namespace

BigInt truncated_trace(const Configuration& sigma, int n, int cutoff) {
  XAtOne x(cutoff);
  return x.trace(sigma, n);
}

BigInt mp_probability(const Sector& sector, const Configuration& sigma, int cutoff) {
  check_config(sector, sigma);
  const BigInt lo = truncated_trace(sigma, sector.n, cutoff);
  const BigInt hi = truncated_trace(sigma, sector.n, cutoff + 1);
  // A steady-state probability is a positive integer, so a zero trace means
  // the cutoff has not reached any contributing term yet.
  if (lo != hi || lo == 0)
    throw Unstable("mp_probability: trace not stable at cutoff " + std::to_string(cutoff) + " (" + lo.get_str() +
                   " vs " + hi.get_str() + ")");
  return lo;
}

ProbabilityTable mp_table(const Sector& sector, int start, int max_cutoff) {
  for (const auto& s : sector.states) check_config(sector, s);
  XAtOne lo(start);
  std::vector<BigInt> prev;
  for (const auto& s : sector.states) prev.push_back(lo.trace(s, sector.n));
  for (int N = start; N < max_cutoff; ++N) {
    XAtOne hi(N + 1);
    std::vector<BigInt> next;
    bool stable = true;
    for (std::size_t k = 0; k < sector.states.size(); ++k) {
      next.push_back(hi.trace(sector.states[k], sector.n));
      stable = stable && next[k] == prev[k] && prev[k] != 0;
    }
    if (stable) return {std::move(prev), N};
    prev = std::move(next);
  }
  throw Unstable("mp_table: traces not stable below cutoff " + std::to_string(max_cutoff) +
                 "; raise the cutoff");
}

}  // namespace ntazrp
