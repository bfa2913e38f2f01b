// The n-species totally asymmetric zero range process: local moves, the
// Markov matrix and its exact kernel, the corner transfer matrix operators
// X_alpha(z), matrix product probabilities, and the checks tying them to the
// q = 0 layer transfer matrix.
#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ntazrp/fock.hpp"
#include "ntazrp/layer.hpp"
#include "ntazrp/report.hpp"

namespace ntazrp {

/// alpha = (alpha_1, ..., alpha_n): alpha_a particles of species a at a site.
using LocalState = std::vector<int>;
using LocalPair = std::pair<LocalState, LocalState>;
using Configuration = std::vector<LocalState>;

class KernelNotOneDimensional : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class Unstable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int occupancy(const LocalState& a);
/// alpha_{>=j} = alpha_j + ... + alpha_n, j 1-based.
int tail_sum(const LocalState& a, int j);

/// All (alpha, beta) with (gamma, delta) > (alpha, beta), sorted, without duplicates.
std::vector<LocalPair> transitions(const LocalState& gamma, const LocalState& delta);
/// All (gamma, delta) with (gamma, delta) > (alpha, beta), sorted.
std::vector<LocalPair> predecessors(const LocalState& alpha, const LocalState& beta);
bool greater(const LocalPair& gd, const LocalPair& ab);
/// Local Markov matrix element h^{alpha,beta}_{gamma,delta}.
int local_h(const LocalState& gamma, const LocalState& delta, const LocalState& alpha, const LocalState& beta);

struct Sector {
  int n = 1;
  int L = 1;
  std::vector<int> m;
  std::vector<Configuration> states;  // sorted lexicographically

  bool basic() const;
  /// prod_a binom(L - 1 + l_a, l_a) with l_a = m_a + ... + m_n.
  BigInt normalization() const;
};

Sector make_sector(int n, int L, const std::vector<int>& m);

/// Sparse Markov matrix: column per configuration index, entries (row, rate).
std::vector<std::map<std::size_t, long>> markov_matrix(const Sector& sector);
/// Exact kernel of the Markov matrix, scaled so the values sum to prod_a binom(L - 1 + l_a, l_a).
/// Throws KernelNotOneDimensional if the kernel is not a line.
std::vector<BigInt> steady_state_oracle(const Sector& sector);

/// Vertex of the 0-oscillator corner transfer matrix: the word
/// (a+)^j k^{θ(a>j)} (a-)^b, or nullopt when the weight vanishes.
std::optional<OscWord> tazrp_vertex(int a, int b, int i, int j);

int x_factors(int n);
/// Largest total-mode decrease of X_alpha: sum_{r >= 2} alpha_{>=r}.
int x_lower_bound(const LocalState& alpha);

/// Column of X_alpha(z) (or its hatted version z dX/dz) at |in>, restricted to
/// output components <= max_component. Entries map z-exponent -> count.
using XColumn = std::map<State, std::map<int, long>>;
XColumn x_apply(const LocalState& alpha, const State& in, int max_component, bool hatted = false);

struct XOperator {
  LocalState alpha;
  Var z = Var::z;
  bool hatted = false;
  FockOp body;
};

/// X_alpha(z) on F^{⊗ n(n-1)/2} truncated at cutoff N per factor, optionally
/// also at total mode max_total.
XOperator x_operator(const LocalState& alpha, Var z, int cutoff, bool hatted = false,
                     std::optional<int> max_total = std::nullopt);

/// Tr(X_{sigma_1} ... X_{sigma_L}) at z = 1 with every factor truncated at N.
/// Nondecreasing in N.
BigInt truncated_trace(const Configuration& sigma, int n, int cutoff);
/// The trace at cutoffs N and N+1; returns it when they agree, else throws Unstable.
BigInt mp_probability(const Sector& sector, const Configuration& sigma, int cutoff);

struct ProbabilityTable {
  std::vector<BigInt> values;  // aligned with sector.states
  int cutoff = 0;              // the cutoff at which every value was stable
};
/// mp_probability for every configuration, raising the cutoff from `start`
/// until all values are stable (up to max_cutoff, else Unstable).
ProbabilityTable mp_table(const Sector& sector, int start, int max_cutoff);

Report check_hat_relation(const LocalState& alpha, const LocalState& beta, int cutoff);
Report check_bilinear_X(const LocalState& alpha, const LocalState& beta, int cutoff);
/// 𝕋(z)^{0..0,r}_{0..0,r} at q = 0 against the X_alpha expansion, on all
/// in/out states of F^{⊗n^2} with total mode <= max_total.
Report check_embedding(int n, int r, int max_total);
/// r_coeff at q = 0 vs the closed form, R_hat at q = 0 vs the 0-oscillator
/// vertex, and the q = 0 fixed-boundary layer vs the word grid.
Report check_q0_limit(int max_index, const RTable& table = default_r_table());
/// Markov property, order comparability and transition bookkeeping.
Report check_order(int max_total, int max_n);

std::string format_config(const Configuration& c);

}  // namespace ntazrp
