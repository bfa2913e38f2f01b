// The 3D R-operator: coefficients, operator-valued vertices and the checks of
// its algebraic properties, the tetrahedron equation and the eigenvectors.
#pragma once

#include <array>
#include <compare>
#include <map>
#include <memory>
#include <mutex>
#include <optional>

#include "ntazrp/fock.hpp"
#include "ntazrp/qscalar.hpp"
#include "ntazrp/report.hpp"

namespace ntazrp {

/// Index tuple (a, b, c, i, j, k) of R^{abc}_{ijk}.
struct RIndex {
  int a = 0, b = 0, c = 0, i = 0, j = 0, k = 0;
  auto operator<=>(const RIndex&) const = default;
};

/// Coefficient R^{abc}_{ijk} in Z[q]; zero unless a+b = i+j and b+c = j+k.
QPoly r_coeff(int a, int b, int c, int i, int j, int k);
/// Closed form at q = 0: 1 iff a = j+(i-k)_+, b = min(i,k), c = j+(k-i)_+.
int r_coeff_q0(int a, int b, int c, int i, int j, int k);

/// Memoized source of R coefficients. A table may carry a single sign flip at
/// one index tuple; this is the negative control used to show that the checks
/// detect a corrupted coefficient.
class RTable {
 public:
  RTable();
  QPoly operator()(int a, int b, int c, int i, int j, int k) const;
  QPoly operator()(const RIndex& x) const { return (*this)(x.a, x.b, x.c, x.i, x.j, x.k); }
  RTable with_sign_flip(const RIndex& at) const;
  std::optional<RIndex> mutation() const { return flip_; }

 private:
  struct Cache {
    std::mutex mu;
    std::map<RIndex, QPoly> values;
  };
  std::shared_ptr<Cache> cache_;
  std::optional<RIndex> flip_;
};

const RTable& default_r_table();

enum class VertexKind { R_hat, S_hat };

/// One vertex of a layer: the single-factor operator together with its labels.
/// body already includes the spectral monomial z^{j-b}.
struct VertexOp {
  VertexKind kind = VertexKind::R_hat;
  int a = 0, b = 0, i = 0, j = 0;
  Var z = Var::z;
  FockOp body;
};

/// Matrix of R_hat^{ab}_{ij}(z) (or S_hat) in the basis of F:
/// entry (c, k) = z^{j-b} R^{abc}_{ijk}, resp. z^{j-b} R^{bac}_{jik}.
/// The pairing element <c|X|k> is (q^2)_c times the entry.
VertexOp vertex_op(VertexKind kind, int a, int b, int i, int j, Var z, const FockSpace& space,
                   const RTable& table = default_r_table());
/// R_hat^{ab}_{ij}(z) assembled from the generic-q generators a+, a-, k.
FockOp vertex_op_from_generators(int a, int b, int i, int j, Var z, const FockSpace& space);
/// z^e as the ratio num^e den^{-e}.
LaurentScalar ratio_power(Var num, Var den, int e);

/// Sparse vector on a tensor power of F.
using FockVector = std::map<State, LaurentScalar>;

/// Applies R(z)_{pqr} or S(z)_{pqr} with z = num/den to a vector on F^{⊗k}.
FockVector apply_r3(const FockVector& v, VertexKind kind, std::array<int, 3> factors, Var num,
                    Var den, const RTable& table);

Report check_r_properties(int max_index, const RTable& table = default_r_table());
Report check_tetrahedron(int max_total_mode, const RTable& table = default_r_table());
Report check_eigenvectors(int max_component, const RTable& table = default_r_table());
/// r_coeff at q = 0 against the closed form, for all indices <= max_index.
Report check_q0_closed_form(int max_index, const RTable& table = default_r_table());

}  // namespace ntazrp
