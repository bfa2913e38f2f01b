// Layer-to-layer transfer matrices on the m x n grid of 3D vertices.
//
// Grid convention: vertex (r, c) sits in row r counted from the bottom and
// column c counted from the right. Arrays in LayerBoundary use the drawing
// order instead: a[0], i[0] label the top row and b[0], j[0] the leftmost
// column. Rows flow left to right, columns bottom to top.
#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ntazrp/fock.hpp"
#include "ntazrp/report.hpp"
#include "ntazrp/threed_r.hpp"

namespace ntazrp {

class UnboundedSum : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GridPos {
  int r = 1;
  int c = 1;
  friend bool operator==(const GridPos&, const GridPos&) = default;
};

/// Tensor factor order: (1,1), (2,1), (1,2), (3,1), (2,2), (1,3), ...
std::vector<GridPos> factor_order(int m, int n);
/// Position of vertex (r, c) in factor_order(m, n).
int factor_index(int m, int n, int r, int c);

/// Spectral parameter num/den (den absent: plain num).
struct Spectral {
  Var num = Var::z;
  std::optional<Var> den;
  LaurentScalar power(int e) const;
};

struct LayerBoundary {
  int m = 1, n = 1;
  std::vector<int> a, i;  // length m, top row first
  std::vector<int> b, j;  // length n, leftmost column first
};

/// Weight of one vertex with edge labels (a, b, i, j) between Fock states
/// k -> c. The default is the matrix entry of R_hat^{ab}_{ij}(z).
using VertexWeight = std::function<LaurentScalar(int a, int b, int i, int j, int c, int k)>;

VertexWeight r_hat_weight(const Spectral& z, QMode mode, const RTable& table = default_r_table());

/// T(z)^{a,b}_{i,j} applied to one basis state: all internal edges summed.
/// Output states are restricted to components <= max_component.
FockVector t_apply(const LayerBoundary& bd, const State& in, const VertexWeight& w, int max_component);
/// T(z)^{a,b}_{i,j} as an operator on the truncated F^{⊗mn}.
FockOp t_fixed(const LayerBoundary& bd, const FockSpace& space, const VertexWeight& w);
FockOp t_fixed(const LayerBoundary& bd, Var z, const FockSpace& space);

/// <out| T(z)^{a,b}_{i,j} |in>. The per-vertex grading pins every edge, so
/// this is a single product of vertex weights or zero.
LaurentScalar t_element(const LayerBoundary& bd, const State& in, const State& out, const VertexWeight& w);

/// <out| 𝕋(z)^b_i |in>. The free sides a, j are pinned by in/out; a pinned
/// label above label_bound raises UnboundedSum.
LaurentScalar bbT_element(int m, int n, const std::vector<int>& b, const std::vector<int>& i,
                          const State& in, const State& out, const Spectral& z, QMode mode,
                          int label_bound = 256, const RTable& table = default_r_table());

/// 𝕋(z)^b_i |in> at q = 0, truncated to output total mode <= max_out_total.
/// At q = 0 each vertex is deterministic, so only the free bottom labels are
/// enumerated.
FockVector bbT_apply_q0(int m, int n, const std::vector<int>& b, const std::vector<int>& i,
                        const State& in, Var z, int max_out_total);

/// All states of k factors with total mode exactly t.
std::vector<State> states_with_total(std::size_t k, int t);

struct IntertwiningBounds {
  int max_boundary = 1;
  int max_in_total = 1;
  int max_green = 1;
};

Report check_intertwining(int m, int n, const IntertwiningBounds& bounds,
                          const RTable& table = default_r_table());

/// Bilinear relation for the given s (length n), r (length m), comparing all
/// elements with in/out total mode <= window.
Report check_bilinear(int m, int n, const std::vector<int>& s, const std::vector<int>& r, int window,
                      QMode mode = QMode::generic, const RTable& table = default_r_table());

/// Sum of q^{j1 j2'} / ((q)_{j1} (q)_{j2} (q)_{j1'} (q)_{j2'}) over
/// j1+j2 = r, j1'+j2' = s, j1+j1' = t.
QRat f_rst(int r, int s, int t);

/// Symmetry of f, its extraction from 𝕋(x)𝕋(y) elements on (m,n) = (1,2),
/// the shifted identity obtained from the (s, r) = (0, 1) bilinear relation,
/// and the generating-function identity, for r, s, t <= max.
Report check_f_symmetry(int max);

}  // namespace ntazrp
