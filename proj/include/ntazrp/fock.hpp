// Truncated Fock spaces, oscillator generators, sparse operators on tensor
// products, and the normal-form engine of the 0-oscillator algebra.
#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ntazrp/qscalar.hpp"

namespace ntazrp {

enum class QMode { generic, zero };

struct FockSpace {
  int cutoff = 0;
  QMode mode = QMode::generic;
};

/// Basis vector |m_1, ..., m_k> of a tensor power of F.
using State = std::vector<int>;

int total_mode(const State& s);

class ShapeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Divergent : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Pairing <m|m> on F: (q^2)_m at generic q, 1 at q = 0.
QRat pairing(int m, QMode mode);

/// Sparse operator on a truncated tensor product of Fock spaces.
///
/// Entries are stored per input basis state as the column of output
/// coefficients, i.e. op|in> = sum_out entry(out, in) |out>.
///
/// Safe window: let M be the smallest per-factor cutoff, further capped by the
/// optional total-mode bound. An entry (out, in) equals the corresponding
/// entry of the untruncated operator whenever |in| <= M - in_margin and
/// |out| <= M - out_margin. raise/lower bound the net change of the total mode
/// (nullopt: unbounded) and drive the margins of compositions.
class FockOp {
 public:
  using Column = std::map<State, LaurentScalar>;

  FockOp() = default;
  FockOp(std::vector<int> cutoffs, QMode mode, std::optional<int> max_total = std::nullopt);

  static FockOp identity(std::vector<int> cutoffs, QMode mode,
                         std::optional<int> max_total = std::nullopt);

  std::size_t factors() const { return cutoffs_.size(); }
  const std::vector<int>& cutoffs() const { return cutoffs_; }
  std::optional<int> max_total() const { return max_total_; }
  QMode mode() const { return mode_; }

  bool contains(const State& s) const;
  /// All basis states of the truncated space in lexicographic order.
  std::vector<State> basis() const;

  void add(const State& out, const State& in, const LaurentScalar& v);
  LaurentScalar element(const State& out, const State& in) const;
  const std::map<State, Column>& columns() const { return cols_; }
  Column apply(const State& in) const;
  bool is_zero() const;
  std::size_t nonzeros() const;

  std::optional<int> raise() const { return raise_; }
  std::optional<int> lower() const { return lower_; }
  void set_bounds(std::optional<int> raise, std::optional<int> lower);
  int in_margin() const { return in_margin_; }
  int out_margin() const { return out_margin_; }
  void set_margins(int in_margin, int out_margin);

  int window_limit() const;
  bool in_window(const State& out, const State& in) const;

  FockOp& operator+=(const FockOp& o);
  FockOp& operator-=(const FockOp& o);
  FockOp& operator*=(const LaurentScalar& c);
  friend FockOp operator+(FockOp a, const FockOp& b) { return a += b; }
  friend FockOp operator-(FockOp a, const FockOp& b) { return a -= b; }

  /// Applies f to every entry, dropping entries that become zero.
  template <class F>
  FockOp map_entries(F&& f) const {
    FockOp r = *this;
    r.cols_.clear();
    for (const auto& [in, col] : cols_)
      for (const auto& [out, v] : col) r.add(out, in, f(v));
    return r;
  }

 private:
  friend FockOp compose(const FockOp& a, const FockOp& b);
  friend FockOp tensor(const std::vector<FockOp>& ops, std::optional<int> max_total);

  void check_same_shape(const FockOp& o) const;

  std::vector<int> cutoffs_;
  QMode mode_ = QMode::generic;
  std::optional<int> max_total_;
  std::map<State, Column> cols_;
  std::optional<int> raise_ = 0;
  std::optional<int> lower_ = 0;
  int in_margin_ = 0;
  int out_margin_ = 0;
};

/// The product a * b (b acts first). Throws ShapeMismatch, and
/// std::invalid_argument when neither a.lower nor b.raise is bounded.
FockOp compose(const FockOp& a, const FockOp& b);
FockOp tensor(const std::vector<FockOp>& ops, std::optional<int> max_total = std::nullopt);
/// Sum of diagonal entries; zero mode only.
LaurentScalar full_trace(const FockOp& op);
/// Trace over one factor, leaving an operator on the others; zero mode only.
FockOp partial_trace(const FockOp& op, std::size_t factor);

struct WindowMismatch {
  State out;
  State in;
  LaurentScalar lhs;
  LaurentScalar rhs;
};

/// Entries on the common safe window where a and b differ.
std::vector<WindowMismatch> compare_on_window(const FockOp& a, const FockOp& b);

enum class Generator { a_plus, a_minus, k, h };

FockOp osc_generator(Generator gen, const FockSpace& space);
/// Right action on the dual: entry (m', m) is the coefficient of <m'| in <m|X.
FockOp dual_generator(Generator gen, const FockSpace& space);

/// (a+)^f k^e (a-)^g times coeff, an element of the 0-oscillator algebra.
struct OscWord {
  int f = 0;
  int e = 0;
  int g = 0;
  LaurentScalar coeff = LaurentScalar(1);

  bool is_normal() const { return e == 1 || f == 0 || g == 0; }
  friend bool operator==(const OscWord& a, const OscWord& b) {
    return a.f == b.f && a.e == b.e && a.g == b.g && a.coeff == b.coeff;
  }
};

/// Normal-form expansion of a raw word. Words with e = 0 and f, g > 0 are
/// rewritten via a+ a- = 1 - k; the result has min(f, g) + 1 terms.
std::vector<OscWord> normalize(const OscWord& w);
/// Product w1 * w2 as a combination of normal words, merged and sorted by
/// (f, e, g).
std::vector<OscWord> word_multiply(const OscWord& w1, const OscWord& w2);
/// Trace of a word over F at q = 0; throws Divergent for e = 0, f = g.
LaurentScalar word_trace_zero(const OscWord& w);
/// Matrix of a word (raw or normal) on the zero-mode space.
FockOp word_op(const OscWord& w, const FockSpace& space);
/// Action of (a+)^f k^e (a-)^g on |m> at q = 0: the image index, or nullopt.
std::optional<int> word_image(int f, int e, int g, int m);

}  // namespace ntazrp
