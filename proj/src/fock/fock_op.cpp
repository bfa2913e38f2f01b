#include <algorithm>
#include <climits>
#include <numeric>

#include "ntazrp/fock.hpp"

namespace ntazrp {

int total_mode(const State& s) { return std::accumulate(s.begin(), s.end(), 0); }

QRat pairing(int m, QMode mode) {
  if (mode == QMode::zero) return QRat(1);
  return QRat(q2_factorial(m));
}

namespace {

std::optional<int> add_bound(std::optional<int> a, std::optional<int> b) {
  if (!a || !b) return std::nullopt;
  return *a + *b;
}

std::optional<int> max_bound(std::optional<int> a, std::optional<int> b) {
  if (!a || !b) return std::nullopt;
  return std::max(*a, *b);
}

}  // namespace

FockOp::FockOp(std::vector<int> cutoffs, QMode mode, std::optional<int> max_total)
    : cutoffs_(std::move(cutoffs)), mode_(mode), max_total_(max_total) {
  for (int c : cutoffs_)
    if (c < 0) throw std::invalid_argument("FockOp: negative cutoff");
  if (max_total_ && *max_total_ < 0) throw std::invalid_argument("FockOp: negative total cap");
}

FockOp FockOp::identity(std::vector<int> cutoffs, QMode mode, std::optional<int> max_total) {
  FockOp op(std::move(cutoffs), mode, max_total);
  for (const auto& s : op.basis()) op.add(s, s, LaurentScalar(1));
  return op;
}

bool FockOp::contains(const State& s) const {
  if (s.size() != cutoffs_.size()) return false;
  int tot = 0;
  for (std::size_t t = 0; t < s.size(); ++t) {
    if (s[t] < 0 || s[t] > cutoffs_[t]) return false;
    tot += s[t];
  }
  return !max_total_ || tot <= *max_total_;
}

std::vector<State> FockOp::basis() const {
  std::vector<State> out;
  State s(cutoffs_.size(), 0);
  const int cap = max_total_.value_or(INT_MAX);
  // Odometer with the last factor fastest, which yields lexicographic order.
  auto rec = [&](auto&& self, std::size_t t, int used) -> void {
    if (t == s.size()) {
      out.push_back(s);
      return;
    }
    for (int m = 0; m <= cutoffs_[t] && used + m <= cap; ++m) {
      s[t] = m;
      self(self, t + 1, used + m);
    }
    s[t] = 0;
  };
  rec(rec, 0, 0);
  return out;
}

void FockOp::add(const State& out, const State& in, const LaurentScalar& v) {
  if (v.is_zero()) return;
  if (!contains(out) || !contains(in)) return;
  auto& col = cols_[in];
  auto [it, inserted] = col.emplace(out, v);
  if (!inserted) {
    it->second += v;
    if (it->second.is_zero()) col.erase(it);
  }
  if (col.empty()) cols_.erase(in);
}

LaurentScalar FockOp::element(const State& out, const State& in) const {
  auto c = cols_.find(in);
  if (c == cols_.end()) return {};
  auto e = c->second.find(out);
  return e == c->second.end() ? LaurentScalar() : e->second;
}

FockOp::Column FockOp::apply(const State& in) const {
  auto c = cols_.find(in);
  return c == cols_.end() ? Column{} : c->second;
}

bool FockOp::is_zero() const { return cols_.empty(); }

std::size_t FockOp::nonzeros() const {
  std::size_t n = 0;
  for (const auto& [in, col] : cols_) n += col.size();
  return n;
}

void FockOp::set_bounds(std::optional<int> raise, std::optional<int> lower) {
  raise_ = raise;
  lower_ = lower;
}

void FockOp::set_margins(int in_margin, int out_margin) {
  in_margin_ = in_margin;
  out_margin_ = out_margin;
}

int FockOp::window_limit() const {
  int m = INT_MAX / 4;
  for (int c : cutoffs_) m = std::min(m, c);
  if (max_total_) m = std::min(m, *max_total_);
  return m;
}

bool FockOp::in_window(const State& out, const State& in) const {
  const int m = window_limit();
  return total_mode(in) <= m - in_margin_ && total_mode(out) <= m - out_margin_;
}

void FockOp::check_same_shape(const FockOp& o) const {
  if (cutoffs_ != o.cutoffs_ || mode_ != o.mode_ || max_total_ != o.max_total_)
    throw ShapeMismatch("FockOp: operands have different shapes");
}

FockOp& FockOp::operator+=(const FockOp& o) {
  check_same_shape(o);
  for (const auto& [in, col] : o.cols_)
    for (const auto& [out, v] : col) add(out, in, v);
  raise_ = max_bound(raise_, o.raise_);
  lower_ = max_bound(lower_, o.lower_);
  in_margin_ = std::max(in_margin_, o.in_margin_);
  out_margin_ = std::max(out_margin_, o.out_margin_);
  return *this;
}

FockOp& FockOp::operator-=(const FockOp& o) {
  FockOp neg = o;
  neg *= LaurentScalar(-1);
  return *this += neg;
}

FockOp& FockOp::operator*=(const LaurentScalar& c) {
  if (c.is_zero()) {
    cols_.clear();
    return *this;
  }
  std::map<State, Column> next;
  for (auto& [in, col] : cols_) {
    Column nc;
    for (auto& [out, v] : col) {
      LaurentScalar p = v * c;
      if (!p.is_zero()) nc.emplace(out, std::move(p));
    }
    if (!nc.empty()) next.emplace(in, std::move(nc));
  }
  cols_ = std::move(next);
  return *this;
}

FockOp compose(const FockOp& a, const FockOp& b) {
  a.check_same_shape(b);
  FockOp r(a.cutoffs_, a.mode_, a.max_total_);
  if (a.lower_) {
    r.in_margin_ = b.in_margin_;
    r.out_margin_ = std::max(a.out_margin_, *a.lower_ + std::max(a.in_margin_, b.out_margin_));
  } else if (b.raise_) {
    r.out_margin_ = a.out_margin_;
    r.in_margin_ = std::max(b.in_margin_, *b.raise_ + std::max(a.in_margin_, b.out_margin_));
  } else {
    throw std::invalid_argument("compose: no bounded direction for the safe window");
  }
  r.raise_ = add_bound(a.raise_, b.raise_);
  r.lower_ = add_bound(a.lower_, b.lower_);
  for (const auto& [in, bcol] : b.cols_) {
    FockOp::Column acc;
    for (const auto& [mid, bv] : bcol) {
      auto ac = a.cols_.find(mid);
      if (ac == a.cols_.end()) continue;
      for (const auto& [out, av] : ac->second) {
        LaurentScalar p = av * bv;
        auto [it, inserted] = acc.emplace(out, p);
        if (!inserted) it->second += p;
      }
    }
    for (auto it = acc.begin(); it != acc.end();) {
      if (it->second.is_zero()) it = acc.erase(it);
      else ++it;
    }
    if (!acc.empty()) r.cols_.emplace(in, std::move(acc));
  }
  return r;
}

FockOp tensor(const std::vector<FockOp>& ops, std::optional<int> max_total) {
  if (ops.empty()) throw std::invalid_argument("tensor: empty operand list");
  std::vector<int> cut;
  for (const auto& op : ops) {
    if (op.mode_ != ops.front().mode_) throw ShapeMismatch("tensor: mixed q modes");
    if (op.max_total_ && op.factors() > 1)
      throw ShapeMismatch("tensor: multi-factor operand with a total cap");
    cut.insert(cut.end(), op.cutoffs_.begin(), op.cutoffs_.end());
  }
  FockOp r(cut, ops.front().mode_, max_total);
  std::optional<int> raise = 0, lower = 0;
  for (const auto& op : ops) {
    raise = add_bound(raise, op.raise_);
    lower = add_bound(lower, op.lower_);
    r.in_margin_ = std::max(r.in_margin_, op.in_margin_);
    r.out_margin_ = std::max(r.out_margin_, op.out_margin_);
  }
  r.raise_ = raise;
  r.lower_ = lower;

  struct Partial {
    State in, out;
    LaurentScalar v;
  };
  std::vector<Partial> acc{{{}, {}, LaurentScalar(1)}};
  const int cap = max_total.value_or(INT_MAX);
  for (const auto& op : ops) {
    std::vector<Partial> next;
    for (const auto& p : acc)
      for (const auto& [in, col] : op.cols_)
        for (const auto& [out, v] : col) {
          Partial q{p.in, p.out, p.v * v};
          q.in.insert(q.in.end(), in.begin(), in.end());
          q.out.insert(q.out.end(), out.begin(), out.end());
          if (total_mode(q.in) > cap || total_mode(q.out) > cap) continue;
          next.push_back(std::move(q));
        }
    acc = std::move(next);
  }
  for (const auto& p : acc) r.add(p.out, p.in, p.v);
  return r;
}

LaurentScalar full_trace(const FockOp& op) {
  if (op.mode() != QMode::zero) throw std::logic_error("full_trace: generic-q trace is not provided");
  LaurentScalar t;
  for (const auto& [in, col] : op.columns()) {
    auto it = col.find(in);
    if (it != col.end()) t += it->second;
  }
  return t;
}

FockOp partial_trace(const FockOp& op, std::size_t factor) {
  if (op.mode() != QMode::zero) throw std::logic_error("partial_trace: generic-q trace is not provided");
  if (factor >= op.factors()) throw ShapeMismatch("partial_trace: factor out of range");
  std::vector<int> cut = op.cutoffs();
  cut.erase(cut.begin() + static_cast<long>(factor));
  FockOp r(cut, op.mode(), op.max_total());
  for (const auto& [in, col] : op.columns())
    for (const auto& [out, v] : col) {
      if (in[factor] != out[factor]) continue;
      State i2 = in, o2 = out;
      i2.erase(i2.begin() + static_cast<long>(factor));
      o2.erase(o2.begin() + static_cast<long>(factor));
      r.add(o2, i2, v);
    }
  r.set_bounds(op.raise(), op.lower());
  r.set_margins(op.in_margin(), op.out_margin());
  return r;
}

std::vector<WindowMismatch> compare_on_window(const FockOp& a, const FockOp& b) {
  if (a.cutoffs() != b.cutoffs() || a.mode() != b.mode())
    throw ShapeMismatch("compare_on_window: different shapes");
  std::vector<WindowMismatch> out;
  auto visit = [&](const State& o, const State& i) {
    if (!a.in_window(o, i) || !b.in_window(o, i)) return;
    LaurentScalar x = a.element(o, i);
    LaurentScalar y = b.element(o, i);
    if (x != y) out.push_back({o, i, x, y});
  };
  for (const auto& [in, col] : a.columns())
    for (const auto& [o, v] : col) visit(o, in);
  for (const auto& [in, col] : b.columns())
    for (const auto& [o, v] : col)
      if (a.element(o, in).is_zero()) visit(o, in);
  std::sort(out.begin(), out.end(), [](const WindowMismatch& x, const WindowMismatch& y) {
    return std::tie(x.in, x.out) < std::tie(y.in, y.out);
  });
  return out;
}

FockOp osc_generator(Generator gen, const FockSpace& space) {
  const int n = space.cutoff;
  FockOp op({n}, space.mode);
  for (int m = 0; m <= n; ++m) {
    switch (gen) {
      case Generator::a_plus:
        if (m + 1 <= n) op.add({m + 1}, {m}, LaurentScalar(1));
        break;
      case Generator::a_minus:
        if (m >= 1) {
          QRat c = space.mode == QMode::zero ? QRat(1) : QRat(QPoly(1) - QPoly::q_power(2 * m));
          op.add({m - 1}, {m}, LaurentScalar(c));
        }
        break;
      case Generator::k:
        if (space.mode == QMode::zero) {
          if (m == 0) op.add({0}, {0}, LaurentScalar(1));
        } else {
          op.add({m}, {m}, LaurentScalar(QRat(QPoly::q_power(m))));
        }
        break;
      case Generator::h:
        op.add({m}, {m}, LaurentScalar(static_cast<long>(m)));
        break;
    }
  }
  if (gen == Generator::a_plus) op.set_bounds(1, 0);
  else if (gen == Generator::a_minus) op.set_bounds(0, 1);
  else op.set_bounds(0, 0);
  return op;
}

FockOp dual_generator(Generator gen, const FockSpace& space) {
  const int n = space.cutoff;
  FockOp op({n}, space.mode);
  for (int m = 0; m <= n; ++m) {
    switch (gen) {
      case Generator::a_minus:
        if (m + 1 <= n) op.add({m + 1}, {m}, LaurentScalar(1));
        break;
      case Generator::a_plus:
        if (m >= 1) {
          QRat c = space.mode == QMode::zero ? QRat(1) : QRat(QPoly(1) - QPoly::q_power(2 * m));
          op.add({m - 1}, {m}, LaurentScalar(c));
        }
        break;
      case Generator::k:
        if (space.mode == QMode::zero) {
          if (m == 0) op.add({0}, {0}, LaurentScalar(1));
        } else {
          op.add({m}, {m}, LaurentScalar(QRat(QPoly::q_power(m))));
        }
        break;
      case Generator::h:
        op.add({m}, {m}, LaurentScalar(static_cast<long>(m)));
        break;
    }
  }
  return op;
}

}  // namespace ntazrp
