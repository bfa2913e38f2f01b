#include <chrono>

#include "doctest.h"
#include "ntazrp/tazrp.hpp"

using namespace ntazrp;

namespace {

FockOp word(int f, int e, int g, int N) { return word_op(OscWord{f, e > 0 ? 1 : 0, g}, {N, QMode::zero}); }

std::vector<LocalState> states_up_to(int n, int max_total) {
  std::vector<LocalState> v;
  for (int t = 0; t <= max_total; ++t)
    for (const State& s : states_with_total(static_cast<std::size_t>(n), t)) v.push_back(s);
  return v;
}

}  // namespace

TEST_CASE("transitions and local_h") {
  using P = std::vector<LocalPair>;
  CHECK(transitions({0, 2}, {1, 0}) == P{{{1, 2}, {0, 0}}});
  CHECK(transitions({1, 1}, {0, 1}) == P{{{1, 2}, {0, 0}}});
  CHECK(transitions({3, 1}, {0, 0}).empty());
  CHECK(transitions({0, 0}, {2, 1}) == P{{{1, 0}, {1, 1}}, {{2, 0}, {0, 1}}, {{2, 1}, {0, 0}}});
  CHECK(local_h({0, 2}, {1, 0}, {1, 2}, {0, 0}) == 1);
  CHECK(local_h({1, 0}, {0, 1}, {1, 0}, {0, 1}) == -1);
  CHECK(local_h({1, 0}, {0, 1}, {0, 1}, {1, 0}) == 0);
  CHECK_THROWS_AS(transitions({1}, {0, 1}), ShapeMismatch);
}

TEST_CASE("the Hasse diagram below ((1,2),(0,0))") {
  const auto pre = predecessors({1, 2}, {0, 0});
  const std::vector<LocalPair> expect{
      {{0, 0}, {1, 2}}, {{0, 1}, {1, 1}}, {{0, 2}, {1, 0}}, {{1, 0}, {0, 2}}, {{1, 1}, {0, 1}}};
  CHECK(pre == expect);
  for (const auto& p : pre) CHECK(greater(p, {{1, 2}, {0, 0}}));
  // Minimal elements: nothing in the set lies below them.
  for (const LocalPair& m : {LocalPair{{0, 2}, {1, 0}}, LocalPair{{1, 1}, {0, 1}}})
    for (const auto& p : pre) CHECK_FALSE(greater(m, p));
  CHECK(predecessors({0, 0}, {0, 0}).empty());
}

TEST_CASE("order relation sanity") {
  Report r = check_order(4, 3);
  CHECK(r.passed());
  CHECK(r.checked > 1000);
}

TEST_CASE("sectors and the Markov matrix") {
  const Sector s = make_sector(2, 3, {2, 1});
  CHECK(s.states.size() == 18);
  CHECK(s.normalization() == 30);
  CHECK(std::is_sorted(s.states.begin(), s.states.end()));
  for (int n = 1; n <= 3; ++n)
    for (int L = 1; L <= 3; ++L) {
      const Sector sec = make_sector(n, L, std::vector<int>(static_cast<std::size_t>(n), 1));
      for (const auto& col : markov_matrix(sec)) {
        long sum = 0;
        for (const auto& [row, v] : col) sum += v;
        CHECK(sum == 0);
      }
    }
  CHECK_THROWS_AS(make_sector(2, 3, {1}), std::invalid_argument);
}

TEST_CASE("steady state oracle") {
  const Sector s = make_sector(2, 3, {2, 1});
  const auto p = steady_state_oracle(s);
  auto at = [&](const Configuration& c) {
    return p[static_cast<std::size_t>(std::find(s.states.begin(), s.states.end(), c) - s.states.begin())];
  };
  CHECK(at({{1, 0}, {1, 0}, {0, 1}}) == 1);
  CHECK(at({{0, 0}, {2, 0}, {0, 1}}) == 2);
  BigInt sum = 0;
  for (const auto& x : p) sum += x;
  CHECK(sum == 30);

  const auto u = steady_state_oracle(make_sector(1, 2, {1}));
  CHECK(u == std::vector<BigInt>{1, 1});
  CHECK_THROWS_AS(steady_state_oracle(make_sector(2, 3, {0, 2})), std::invalid_argument);
}

TEST_CASE("vertex of the corner transfer matrix") {
  CHECK(tazrp_vertex(2, 1, 1, 2) == OscWord{2, 0, 1});
  CHECK(tazrp_vertex(3, 1, 2, 2) == OscWord{2, 1, 1});
  CHECK_FALSE(tazrp_vertex(1, 2, 1, 2).has_value());  // a < j
  CHECK_FALSE(tazrp_vertex(2, 1, 1, 1).has_value());  // conservation
}

TEST_CASE("X at n = 1 is the scalar z^alpha") {
  for (int a = 0; a <= 3; ++a) {
    const XOperator x = x_operator({a}, Var::z, 5);
    CHECK(x.body.factors() == 0);
    CHECK(x.body.element({}, {}) == LaurentScalar::monomial(Var::z, a));
    CHECK(x_operator({a}, Var::z, 5, true).body.element({}, {}) == LaurentScalar::monomial(Var::z, a, QRat(a)));
  }
}

TEST_CASE("X at n = 2 matches its closed form") {
  const int N = 6;
  for (int a1 = 0; a1 <= 3; ++a1)
    for (int a2 = 0; a2 <= 3; ++a2) {
      FockOp expect(std::vector<int>{N}, QMode::zero);
      for (int j = 0; j <= N; ++j) {
        FockOp w = word(j, a1, a2, N);
        w *= LaurentScalar::monomial(Var::z, a1 + a2 + j);
        expect += w;
      }
      const XOperator x = x_operator({a1, a2}, Var::z, N);
      CHECK(compare_on_window(x.body, expect).empty());
      CHECK(x.body.nonzeros() == expect.nonzeros());
    }
}

TEST_CASE("X hat at n = 3 matches the triple tensor closed form") {
  const int N = 4;
  for (const LocalState& al : states_up_to(3, 2)) {
    const int a1 = al[0], a2 = al[1], a3 = al[2], tot = a1 + a2 + a3;
    FockOp expect(std::vector<int>(3, N), QMode::zero), expect_z(std::vector<int>(3, N), QMode::zero);
    for (int i = 0; i <= N; ++i)
      for (int j = 0; j <= N; ++j)
        for (int k = 0; k <= a1 + i; ++k) {
          const FockOp t = tensor({word(j, a1 + i - k, k, N), word(k, a2, a3, N), word(i, a1, a2 + a3, N)});
          FockOp h = t;
          h *= LaurentScalar(tot + i + j);
          expect += h;
          FockOp zt = t;
          zt *= LaurentScalar::monomial(Var::z, tot + i + j);
          expect_z += zt;
        }
    const XOperator xh = x_operator(al, Var::z, N, true);
    const FockOp at_one = xh.body.map_entries([](const LaurentScalar& v) { return v.evaluate_at_one(Var::z); });
    CHECK(compare_on_window(at_one, expect).empty());
    CHECK(compare_on_window(x_operator(al, Var::z, N).body, expect_z).empty());
  }
}

TEST_CASE("X hat is z d/dz X") {
  for (int n = 2; n <= 3; ++n)
    for (const LocalState& al : states_up_to(n, 2)) {
      const FockOp x = x_operator(al, Var::z, 4).body;
      const FockOp xh = x_operator(al, Var::z, 4, true).body;
      const FockOp d = x.map_entries([](const LaurentScalar& v) { return v.euler_derivative(Var::z); });
      CHECK(compare_on_window(xh, d).empty());
      CHECK(xh.nonzeros() == d.nonzeros());
    }
}

TEST_CASE("X lowers the total mode by at most its bound") {
  for (const LocalState& al : states_up_to(3, 3)) {
    const FockOp x = x_operator(al, Var::z, 4).body;
    for (const auto& [in, col] : x.columns())
      for (const auto& [out, v] : col) CHECK(total_mode(in) - total_mode(out) <= x_lower_bound(al));
  }
}

TEST_CASE("matrix product probabilities") {
  const auto t0 = std::chrono::steady_clock::now();
  const Sector s = make_sector(2, 3, {2, 1});
  CHECK(mp_probability(s, {{1, 0}, {1, 0}, {0, 1}}, 4) == 1);
  CHECK(mp_probability(s, {{0, 0}, {2, 0}, {0, 1}}, 4) == 2);
  const ProbabilityTable t = mp_table(s, 1, 12);
  BigInt sum = 0;
  for (const auto& v : t.values) sum += v;
  CHECK(sum == 30);
  CHECK(std::chrono::steady_clock::now() - t0 < std::chrono::seconds(10));
  CHECK_THROWS_AS(mp_probability(s, {{0, 0}, {2, 0}, {0, 1}}, 0), Unstable);
  CHECK_THROWS_AS(mp_probability(s, {{0, 0}, {2, 0}, {1, 1}}, 4), std::invalid_argument);
}

TEST_CASE("matrix product agrees with the oracle") {
  std::vector<Sector> sectors;
  for (int L = 1; L <= 4; ++L) {
    for (int m = 1; m <= 4; ++m) sectors.push_back(make_sector(1, L, {m}));
    for (int m1 = 1; m1 <= 3; ++m1)
      for (int m2 = 1; m1 + m2 <= 4; ++m2) sectors.push_back(make_sector(2, L, {m1, m2}));
  }
  sectors.push_back(make_sector(3, 3, {1, 1, 1}));
  for (const Sector& s : sectors) {
    CAPTURE(s.n);
    CAPTURE(s.L);
    const ProbabilityTable t = mp_table(s, 1, 16);
    CHECK(t.values == steady_state_oracle(s));
    // Stable beyond the threshold as well.
    for (std::size_t k = 0; k < s.states.size(); k += 7)
      CHECK(truncated_trace(s.states[k], s.n, t.cutoff + 2) == t.values[k]);
  }
}

TEST_CASE("hat relation") {
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b) CHECK(check_hat_relation({a}, {b}, 4).passed());
  Report r = check_hat_relation({1, 0}, {0, 1}, 8);
  CHECK(r.passed());
  CHECK(r.checked >= 16);
  Report z = check_hat_relation({0, 0, 0}, {0, 0, 0}, 4);
  CHECK(z.passed());
  CHECK(check_hat_relation({0, 1, 0}, {1, 0, 0}, 6).passed());
}

TEST_CASE("hat relation detects a wrong transition set") {
  // Dropping the diagonal term must break the identity somewhere.
  const FockOp xa = x_operator({0, 1}, Var::z, 6, false, 6).body;
  const FockOp xah = x_operator({0, 1}, Var::z, 6, true, 6).body;
  const FockOp xb = x_operator({1, 0}, Var::z, 6, false, 6).body;
  const FockOp xbh = x_operator({1, 0}, Var::z, 6, true, 6).body;
  FockOp lhs = compose(xah, xb) - compose(xa, xbh);
  FockOp rhs(std::vector<int>{6}, QMode::zero, 6);
  for (const auto& [g, d] : predecessors({0, 1}, {1, 0}))
    rhs += compose(x_operator(g, Var::z, 6, false, 6).body, x_operator(d, Var::z, 6, false, 6).body);
  CHECK_FALSE(compare_on_window(lhs, rhs).empty());
}

TEST_CASE("bilinear X relation") {
  Report r = check_bilinear_X({1, 2}, {0, 0}, 6);
  CHECK(r.passed());
  CHECK(r.parameters["pairs"] == "6");
  CHECK(check_bilinear_X({0, 0}, {0, 1}, 8).passed());
  CHECK(check_bilinear_X({0, 0}, {0, 0}, 4).passed());
  CHECK(check_bilinear_X({1, 0, 0}, {0, 0, 1}, 5).passed());
}

TEST_CASE("embedding into the q = 0 layer") {
  for (int r = 0; r <= 2; ++r) {
    Report rep = check_embedding(2, r, 2 * r + 2);
    CHECK(rep.passed());
    CHECK(rep.checked > 0);
  }
  for (int r = 0; r <= 2; ++r) {
    Report rep = check_embedding(3, r, 3 * r + 1);
    CHECK(rep.passed());
    CHECK(rep.checked > 0);
  }
}

TEST_CASE("q = 0 limit") {
  Report r = check_q0_limit(3);
  CHECK(r.passed());
  RTable bad = default_r_table().with_sign_flip({1, 1, 0, 2, 0, 1});
  CHECK_FALSE(check_q0_limit(3, bad).passed());
}
