#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "ntazrp/tazrp.hpp"

namespace ntazrp {
namespace {

void check_n(const LocalState& a, const LocalState& b) {
  if (a.size() != b.size() || a.empty()) throw ShapeMismatch("tazrp: local states must have the same length n >= 1");
}

/// All ways of placing `total` particles on L sites.
std::vector<std::vector<int>> compositions(int L, int total) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(L), 0);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == L - 1) {
      cur[static_cast<std::size_t>(pos)] = left;
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cur[static_cast<std::size_t>(pos)] = v;
      self(self, pos + 1, left - v);
    }
  };
  rec(rec, 0, total);
  return out;
}

}  // namespace

int occupancy(const LocalState& a) { return std::accumulate(a.begin(), a.end(), 0); }

int tail_sum(const LocalState& a, int j) {
  int s = 0;
  for (std::size_t t = static_cast<std::size_t>(std::max(j, 1) - 1); t < a.size(); ++t) s += a[t];
  return s;
}

std::vector<LocalPair> transitions(const LocalState& gamma, const LocalState& delta) {
  check_n(gamma, delta);
  const std::size_t n = gamma.size();
  std::set<LocalPair> out;
  for (std::size_t l = 0; l < n; ++l)
    for (int d = 1; d <= delta[l]; ++d) {
      LocalState a = gamma, b = delta;
      for (std::size_t j = 0; j < l; ++j) {
        a[j] = gamma[j] + delta[j];
        b[j] = 0;
      }
      a[l] = gamma[l] + d;
      b[l] = delta[l] - d;
      out.insert({std::move(a), std::move(b)});
    }
  return {out.begin(), out.end()};
}

std::vector<LocalPair> predecessors(const LocalState& alpha, const LocalState& beta) {
  check_n(alpha, beta);
  const std::size_t n = alpha.size();
  std::set<LocalPair> out;
  for (std::size_t l = 0; l < n; ++l) {
    if (l > 0 && beta[l - 1] != 0) break;
    // Species below l are split freely between the two sites.
    std::vector<int> split(l, 0);
    while (true) {
      for (int d = 1; d <= alpha[l]; ++d) {
        LocalState g = alpha, h = beta;
        for (std::size_t j = 0; j < l; ++j) {
          g[j] = alpha[j] - split[j];
          h[j] = split[j];
        }
        g[l] = alpha[l] - d;
        h[l] = beta[l] + d;
        out.insert({std::move(g), std::move(h)});
      }
      std::size_t t = 0;
      while (t < l && split[t] == alpha[t]) split[t++] = 0;
      if (t == l) break;
      ++split[t];
    }
  }
  return {out.begin(), out.end()};
}

bool greater(const LocalPair& gd, const LocalPair& ab) {
  const auto tr = transitions(gd.first, gd.second);
  return std::binary_search(tr.begin(), tr.end(), ab);
}

int local_h(const LocalState& gamma, const LocalState& delta, const LocalState& alpha, const LocalState& beta) {
  check_n(gamma, delta);
  check_n(alpha, beta);
  if (gamma == alpha && delta == beta) return -occupancy(beta);
  return greater({gamma, delta}, {alpha, beta}) ? 1 : 0;
}

bool Sector::basic() const {
  return std::all_of(m.begin(), m.end(), [](int x) { return x >= 1; });
}

BigInt Sector::normalization() const {
  BigInt r = 1;
  for (int a = 1; a <= n; ++a) {
    const int l = tail_sum(m, a);
    BigInt b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(L - 1 + l), static_cast<unsigned long>(l));
    r *= b;
  }
  return r;
}

Sector make_sector(int n, int L, const std::vector<int>& m) {
  if (n < 1 || L < 1 || m.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("make_sector: need n >= 1, L >= 1 and |m| = n");
  if (std::any_of(m.begin(), m.end(), [](int x) { return x < 0; }))
    throw std::invalid_argument("make_sector: negative multiplicity");
  Sector s{n, L, m, {}};
  std::vector<std::vector<std::vector<int>>> per_species;
  for (int x : m) per_species.push_back(compositions(L, x));
  std::vector<std::size_t> pick(static_cast<std::size_t>(n), 0);
  while (true) {
    Configuration c(static_cast<std::size_t>(L), LocalState(static_cast<std::size_t>(n), 0));
    for (std::size_t a = 0; a < pick.size(); ++a)
      for (std::size_t site = 0; site < c.size(); ++site) c[site][a] = per_species[a][pick[a]][site];
    s.states.push_back(std::move(c));
    std::size_t t = 0;
    while (t < pick.size() && pick[t] + 1 == per_species[t].size()) pick[t++] = 0;
    if (t == pick.size()) break;
    ++pick[t];
  }
  std::sort(s.states.begin(), s.states.end());
  return s;
}

std::vector<std::map<std::size_t, long>> markov_matrix(const Sector& sector) {
  std::map<Configuration, std::size_t> index;
  for (std::size_t k = 0; k < sector.states.size(); ++k) index[sector.states[k]] = k;
  std::vector<std::map<std::size_t, long>> cols(sector.states.size());
  const std::size_t L = static_cast<std::size_t>(sector.L);
  if (L < 2) return cols;
  for (std::size_t k = 0; k < sector.states.size(); ++k) {
    const Configuration& s = sector.states[k];
    for (std::size_t site = 0; site < L; ++site) {
      const std::size_t nxt = (site + 1) % L;
      cols[k][k] -= occupancy(s[nxt]);
      for (const auto& [a, b] : transitions(s[site], s[nxt])) {
        Configuration t = s;
        t[site] = a;
        t[nxt] = b;
        cols[k][index.at(t)] += 1;
      }
    }
    std::erase_if(cols[k], [](const auto& e) { return e.second == 0; });
  }
  return cols;
}

std::vector<BigInt> steady_state_oracle(const Sector& sector) {
  if (!sector.basic()) throw std::invalid_argument("steady_state_oracle: sector is not basic");
  const std::size_t S = sector.states.size();
  const auto cols = markov_matrix(sector);
  std::vector<std::vector<mpq_class>> A(S, std::vector<mpq_class>(S));
  for (std::size_t c = 0; c < S; ++c)
    for (const auto& [r, v] : cols[c]) A[r][c] = v;

  // Reduced row echelon form.
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t c = 0; c < S && row < S; ++c) {
    std::size_t p = row;
    while (p < S && A[p][c] == 0) ++p;
    if (p == S) continue;
    std::swap(A[p], A[row]);
    const mpq_class inv = 1 / A[row][c];
    for (auto& x : A[row]) x *= inv;
    for (std::size_t r = 0; r < S; ++r) {
      if (r == row || A[r][c] == 0) continue;
      const mpq_class f = A[r][c];
      for (std::size_t t = c; t < S; ++t) A[r][t] -= f * A[row][t];
    }
    pivot_col.push_back(c);
    ++row;
  }
  if (S - pivot_col.size() != 1)
    throw KernelNotOneDimensional("steady_state_oracle: kernel dimension " + std::to_string(S - pivot_col.size()));

  std::vector<bool> is_pivot(S, false);
  for (std::size_t c : pivot_col) is_pivot[c] = true;
  const std::size_t free_col =
      static_cast<std::size_t>(std::find(is_pivot.begin(), is_pivot.end(), false) - is_pivot.begin());
  std::vector<mpq_class> v(S);
  v[free_col] = 1;
  for (std::size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = -A[r][free_col];

  mpq_class total = 0;
  for (const auto& x : v) total += x;
  const mpq_class scale = mpq_class(sector.normalization()) / total;
  std::vector<BigInt> out;
  out.reserve(S);
  for (auto& x : v) {
    x *= scale;
    x.canonicalize();
    if (x.get_den() != 1 || x <= 0)
      throw std::logic_error("steady_state_oracle: normalized kernel is not a positive integer vector");
    out.push_back(x.get_num());
  }
  return out;
}

std::string format_config(const Configuration& c) {
  std::string s;
  for (std::size_t site = 0; site < c.size(); ++site) {
    if (site) s += '|';
    for (std::size_t a = 0; a < c[site].size(); ++a) {
      if (a) s += ',';
      s += std::to_string(c[site][a]);
    }
  }
  return s;
}

}  // namespace ntazrp
