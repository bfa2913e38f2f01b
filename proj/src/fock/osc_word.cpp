#include <algorithm>
#include <tuple>

#include "ntazrp/fock.hpp"

namespace ntazrp {

std::vector<OscWord> normalize(const OscWord& w) {
  if (w.f < 0 || w.g < 0 || w.e < 0) throw std::invalid_argument("normalize: negative exponent");
  OscWord base{w.f, std::min(w.e, 1), w.g, w.coeff};
  if (base.coeff.is_zero()) return {};
  if (base.is_normal()) return {base};
  // (a+)^F (a-)^G = (a+)^{F-t}(a-)^{G-t} - sum_{s=1}^t (a+)^{F-s} k (a-)^{G-s}
  const int t = std::min(base.f, base.g);
  std::vector<OscWord> out;
  out.push_back({base.f - t, 0, base.g - t, base.coeff});
  for (int s = 1; s <= t; ++s) out.push_back({base.f - s, 1, base.g - s, -base.coeff});
  return out;
}

namespace {

// Product of two words as a single raw word, or nullopt when it vanishes.
std::optional<OscWord> raw_product(const OscWord& w1, const OscWord& w2) {
  OscWord r;
  r.coeff = w1.coeff * w2.coeff;
  if (w2.f >= w1.g) {
    const int up = w2.f - w1.g;
    if (w1.e == 1 && up > 0) return std::nullopt;  // k a+ = 0
    r.f = w1.f + up;
    r.e = std::max(w1.e, w2.e);
    r.g = w2.g;
  } else {
    const int down = w1.g - w2.f;
    if (w2.e == 1) return std::nullopt;  // a- k = 0
    r.f = w1.f;
    r.e = w1.e;
    r.g = down + w2.g;
  }
  return r;
}

}  // namespace

std::vector<OscWord> word_multiply(const OscWord& w1, const OscWord& w2) {
  std::vector<OscWord> terms;
  for (const auto& a : normalize(w1))
    for (const auto& b : normalize(w2)) {
      auto p = raw_product(a, b);
      if (!p) continue;
      for (auto& t : normalize(*p)) terms.push_back(std::move(t));
    }
  std::sort(terms.begin(), terms.end(), [](const OscWord& x, const OscWord& y) {
    return std::tie(x.f, x.e, x.g) < std::tie(y.f, y.e, y.g);
  });
  std::vector<OscWord> merged;
  for (auto& t : terms) {
    if (!merged.empty() && merged.back().f == t.f && merged.back().e == t.e && merged.back().g == t.g) {
      merged.back().coeff += t.coeff;
    } else {
      merged.push_back(std::move(t));
    }
  }
  merged.erase(std::remove_if(merged.begin(), merged.end(),
                              [](const OscWord& w) { return w.coeff.is_zero(); }),
               merged.end());
  return merged;
}

LaurentScalar word_trace_zero(const OscWord& w) {
  if (w.coeff.is_zero()) return {};
  if (w.e >= 1) return w.f == w.g ? w.coeff : LaurentScalar();
  if (w.f != w.g) return {};
  throw Divergent("word_trace_zero: trace of (a+)^" + std::to_string(w.f) + "(a-)^" +
                  std::to_string(w.g) + " diverges");
}

std::optional<int> word_image(int f, int e, int g, int m) {
  if (m < g) return std::nullopt;
  const int low = m - g;
  if (e >= 1 && low != 0) return std::nullopt;
  return low + f;
}

FockOp word_op(const OscWord& w, const FockSpace& space) {
  if (space.mode != QMode::zero) throw std::invalid_argument("word_op: zero mode only");
  FockOp op({space.cutoff}, QMode::zero);
  for (int m = 0; m <= space.cutoff; ++m) {
    auto img = word_image(w.f, w.e, w.g, m);
    if (img && *img <= space.cutoff) op.add({*img}, {m}, w.coeff);
  }
  op.set_bounds(std::max(0, w.f - w.g), std::max(0, w.g - w.f));
  return op;
}

}  // namespace ntazrp
