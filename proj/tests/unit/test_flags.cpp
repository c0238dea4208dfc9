#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gca/errors.hpp"
#include "gca/flags.hpp"
#include "support/oracles.hpp"

using namespace gca;
using gca::testing::Rng;

namespace {

Row R(std::initializer_list<long> xs) {
  Row r;
  for (long x : xs) r.emplace_back(x);
  return r;
}

Extensor pts(const Matrix& rows) { return from_points(rows, static_cast<int>(rows.front().size())); }

Matrix take(const Matrix& rows, std::initializer_list<std::size_t> idx) {
  Matrix out;
  for (auto i : idx) out.push_back(rows[i]);
  return out;
}

Matrix first_rows(const Matrix& rows, std::size_t k) { return Matrix(rows.begin(), rows.begin() + k); }

Matrix stack(Matrix a, const Matrix& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

int rank_oracle(const Matrix& rows, int n) {
  return rows.empty() ? 0 : gca::testing::minor_rank(rows, n);
}

bool in_span(const Matrix& span, const Row& v, int n) {
  return rank_oracle(stack(span, {v}), n) == rank_oracle(span, n);
}

// Strictly descending supports and decomposable levels.
void check_invariants(const FlagValue& f) {
  REQUIRE(f.size() >= 1);
  auto supp = f.supports();
  for (std::size_t i = 0; i < f.size(); ++i) {
    CHECK_FALSE(f.levels()[i].is_zero());
    CHECK(is_decomposable(f.levels()[i]));
    if (i > 0) {
      CHECK(supp[i - 1].contains(supp[i]));
      CHECK(supp[i - 1].dim() > supp[i].dim());
    }
  }
}

// Three collinear points in the plane.
struct Collinear {
  Extensor a, b, c;
};

Collinear collinear(Rng& rng) {
  Matrix base = gca::testing::random_rows(rng, 2, 3);
  Row mid = gca::testing::combine(Scalar(2), base[0], Scalar(3), base[1]);
  return {pts({base[0]}), pts({base[1]}), pts({mid})};
}

int power_sign(int e) { return e % 2 == 0 ? 1 : -1; }

}  // namespace

TEST_CASE("modular rank law on 100 random subspace pairs") {
  Rng rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 3 + trial % 4;
    std::uniform_int_distribution<int> pick(0, n);
    const int shared = pick(rng) / 2;
    Matrix common = gca::testing::random_rows(rng, shared, n);
    Matrix a = stack(common, gca::testing::random_rows(rng, pick(rng) / 2, n));
    Matrix b = stack(common, gca::testing::random_rows(rng, pick(rng) / 2, n));
    Subspace sa(n, a), sb(n, b);
    Subspace meet = lattice_meet(sa, sb);
    Subspace join = lattice_join(sa, sb);
    CHECK(static_cast<int>(sa.dim()) == rank_oracle(a, n));
    CHECK(static_cast<int>(join.dim()) == rank_oracle(stack(a, b), n));
    CHECK(sa.dim() + sb.dim() == meet.dim() + join.dim());
    for (const auto& v : meet.basis()) {
      CHECK(in_span(a, v, n));
      CHECK(in_span(b, v, n));
    }
    for (const auto& v : common) CHECK(meet.contains(v));
    CHECK(lattice_meet(sa, sa) == sa);
  }
}

TEST_CASE("join of two lines through the origin is their plane") {
  Subspace l1(3, {R({1, 0, 0})});
  Subspace l2(3, {R({1, 1, 0})});
  CHECK(lattice_join(l1, l2) == Subspace(3, {R({1, 0, 0}), R({0, 1, 0})}));
  CHECK(lattice_meet(l1, l2).dim() == 0);
}

TEST_CASE("basis extensor and relative factor") {
  Subspace s(4, {R({1, 2, 0, 1}), R({0, 1, 1, 1})});
  Extensor e = basis_extensor(s);
  CHECK(support(e) == s);
  CHECK(relative_factor(scale(Scalar(7, 2), e)) == Scalar(7, 2));
  CHECK(basis_extensor(Subspace::zero(4)) == Extensor::scalar(4, 1));
  CHECK(bracket(basis_extensor(Subspace::whole(4))) == 1);
}

TEST_CASE("regressive product of two points is their line") {
  Rng rng(22);
  auto [a, b, c] = collinear(rng);
  FlagValue bc = regressive_product(b, c);
  REQUIRE(bc.size() == 1);
  CHECK(bc.levels()[0] == join(b, c));
  (void)a;
}

TEST_CASE("regressive product of skew lines is the whole-space bracket") {
  Matrix p = {R({1, 0, 0, 1}), R({0, 1, 0, 1}), R({0, 0, 1, 1}), R({1, 1, 1, 1})};
  Extensor ab = pts(take(p, {0, 1}));
  Extensor de = pts(take(p, {2, 3}));
  FlagValue f = regressive_product(ab, de);
  REQUIRE(f.size() == 1);
  CHECK(f.levels()[0] == join(ab, de));
  CHECK(f.levels()[0].step() == 4);
}

TEST_CASE("line o plane in rank 4 leaves the intersection point") {
  Rng rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix line = gca::testing::random_rows(rng, 2, 4);
    Matrix plane = gca::testing::random_rows(rng, 3, 4);
    FlagValue f = regressive_product(pts(line), pts(plane));
    REQUIRE(f.size() == 1);
    const Extensor& p = f.levels()[0];
    CHECK(p.step() == 1);
    Row point = factor_points(p)[0];
    CHECK(in_span(line, point, 4));
    CHECK(in_span(plane, point, 4));
    // Scalar bookkeeping: the bracket of A D times C.
    FlagValue swapped = regressive_product(pts(plane), pts(line));
    CHECK(flag_ratio(f, swapped) == Scalar(power_sign((2 - 1) * (3 - 1))));
  }
}

TEST_CASE("regressive product rejects zero and non-decomposable input") {
  Extensor screw = Extensor::from_coords(4, 2, {{PlaceSet::of({1, 2}), 1}, {PlaceSet::of({3, 4}), 1}});
  Extensor pt = pts({R({1, 0, 0, 1})});
  CHECK_THROWS_AS(regressive_product(screw, pt), MathError);
  CHECK_THROWS_AS(regressive_product(Extensor(4, 1), pt), MathError);
  CHECK_THROWS_AS(FlagValue::from_levels({pt, pts({R({0, 1, 0, 1})})}), MathError);
}

TEST_CASE("a into b o c for collinear points") {
  Rng rng(24);
  auto [a, b, c] = collinear(rng);
  FlagValue f = multiply_into_flag(a, regressive_product(b, c));
  REQUIRE(f.size() == 2);
  CHECK(support(f.levels()[0]) == support(join(b, c)));
  CHECK(support(f.levels()[1]) == support(a));
  CHECK(flags_equivalent(f, FlagValue::from_levels({join(b, c), a})));
  check_invariants(f);
}

TEST_CASE("regressive product is not associative") {
  Rng rng(25);
  for (int trial = 0; trial < 10; ++trial) {
    auto [a, b, c] = collinear(rng);
    FlagValue left = multiply_into_flag(a, regressive_product(b, c));
    FlagValue right = multiply_into_flag(c, regressive_product(a, b));
    REQUIRE(left.size() == 2);
    REQUIRE(right.size() == 2);
    CHECK(left.supports()[0] == right.supports()[0]);
    CHECK(left.supports()[1] == support(a));
    CHECK(right.supports()[1] == support(c));
    CHECK_FALSE(flags_equivalent(left, right));
  }
}

TEST_CASE("three-level chain from a line into a line-in-space flag") {
  Rng rng(26);
  for (int trial = 0; trial < 20; ++trial) {
    // Rank 5: L a line inside the 3-space S, X a line meeting L at p, X not in S.
    Matrix base = gca::testing::random_rows(rng, 5, 5);
    if (gca::testing::cofactor_det(base).is_zero()) continue;
    const Row& p = base[0];
    Matrix l = {p, base[1]};
    Matrix s = {p, base[1], base[2]};
    Matrix x = {gca::testing::combine(Scalar(2), p, Scalar(0), p), base[3]};
    FlagValue f = FlagValue::from_levels({pts(s), pts(l)});
    FlagValue g = multiply_into_flag(pts(x), f);
    REQUIRE(g.size() == 3);
    auto supp = g.supports();
    CHECK(supp[0] == lattice_join(Subspace(5, x), Subspace(5, s)));
    CHECK(supp[1] == Subspace(5, l));
    CHECK(supp[2] == Subspace(5, {p}));
    // Levels match the lattice formula (X v F_i) ^ F_(i+1).
    const Subspace sx(5, x), sl(5, l), ss(5, s);
    CHECK(supp[2] == lattice_meet(sx, sl));
    CHECK(supp[1] == lattice_meet(lattice_join(sx, sl), ss));
    check_invariants(g);
  }
}

TEST_CASE("multiplying by an existing level keeps the chain") {
  Rng rng(27);
  Matrix m = gca::testing::random_rows(rng, 3, 4);
  FlagValue f = FlagValue::from_levels({pts(m), pts(first_rows(m, 1))});
  FlagValue g = multiply_into_flag(scale(Scalar(3), pts(m)), f);
  CHECK(same_supports(f, g));
  FlagValue h = multiply_into_flag(pts(first_rows(m, 1)), f);
  CHECK(same_supports(f, h));
}

TEST_CASE("flags_equivalent redistributes scalars") {
  Rng rng(28);
  Matrix m = gca::testing::random_rows(rng, 3, 5);
  Extensor e1 = pts(m);
  Extensor e2 = pts(first_rows(m, 1));
  FlagValue base = FlagValue::from_levels({e1, e2});
  CHECK(flags_equivalent(FlagValue::from_levels({scale(Scalar(2), e1), scale(Scalar(1, 2), e2)}), base));
  CHECK_FALSE(flags_equivalent(FlagValue::from_levels({scale(Scalar(2), e1), e2}), base));
  CHECK_FALSE(flags_equivalent(base, FlagValue(e1)));
  CHECK_FALSE(flags_equivalent(base, FlagValue::from_levels({e1, pts({m[1]})})));
}

TEST_CASE("degenerate levels are absorbed") {
  Matrix m = {R({1, 0, 0}), R({0, 1, 0}), R({0, 0, 1})};
  Extensor whole = scale(Scalar(5), pts(m));
  Extensor p = pts({m[0]});
  FlagValue f = FlagValue::from_levels({whole, p});
  REQUIRE(f.size() == 1);
  CHECK(f.levels()[0] == scale(Scalar(5), p));
  FlagValue g = FlagValue::from_levels({p, Extensor::scalar(3, 4)});
  REQUIRE(g.size() == 1);
  CHECK(g.levels()[0] == scale(Scalar(4), p));
  FlagValue h = FlagValue::from_levels({p, scale(Scalar(2), p)});
  REQUIRE(h.size() == 1);
  CHECK(h.levels()[0] == scale(Scalar(2), p));
}

TEST_CASE("swap sign of the regressive product") {
  Rng rng(29);
  int checked = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 4 + trial % 3;
    std::uniform_int_distribution<int> pick(1, n - 1);
    const int c = pick(rng) / 2;
    const int a = std::min(n, c + pick(rng) / 2 + 1);
    const int b = std::min(n - (a - c), c + pick(rng) / 2 + 1);
    Matrix common = gca::testing::random_rows(rng, c, n);
    Matrix ra = stack(common, gca::testing::random_rows(rng, a - c, n));
    Matrix rb = stack(common, gca::testing::random_rows(rng, b - c, n));
    Extensor ea = pts(ra), eb = pts(rb);
    if (ea.is_zero() || eb.is_zero()) continue;
    if (static_cast<int>(lattice_meet(support(ea), support(eb)).dim()) != c) continue;
    FlagValue ab = regressive_product(ea, eb);
    FlagValue ba = regressive_product(eb, ea);
    CHECK(same_supports(ab, ba));
    CHECK(flag_ratio(ab, ba) == Scalar(power_sign((a - c) * (b - c))));
    check_invariants(ab);
    ++checked;
  }
  CHECK(checked >= 90);
}

TEST_CASE("flag products have order-independent support chains") {
  Rng rng(30);
  int scalar_agree = 0;
  const int trials = 50;
  for (int trial = 0; trial < trials; ++trial) {
    const int n = 6;
    std::uniform_int_distribution<int> dims(1, 5);
    auto random_flag = [&]() {
      int hi = dims(rng);
      int lo = std::uniform_int_distribution<int>(1, std::max(1, hi - 1))(rng);
      if (lo == hi) hi = std::min(n - 1, hi + 1);
      Matrix m = gca::testing::random_rows(rng, hi, n);
      return FlagValue::from_levels({pts(m), pts(first_rows(m, static_cast<std::size_t>(lo)))});
    };
    FlagValue f = random_flag();
    FlagValue g = random_flag();
    std::vector<FlagValue> results = {
        flag_product(f, g, {0, 1}), flag_product(f, g, {1, 0}),
        flag_product(g, f, {0, 1}), flag_product(g, f, {1, 0})};
    for (const auto& r : results) {
      check_invariants(r);
      CHECK(same_supports(r, results[0]));
    }
    bool all_equivalent = true;
    for (const auto& r : results) all_equivalent = all_equivalent && flags_equivalent(r, results[0]);
    if (all_equivalent) ++scalar_agree;
  }
  MESSAGE("scalar-level order independence held on " << scalar_agree << " of " << trials
                                                      << " instances");
}

TEST_CASE("flag product with a single level is multiply_into_flag") {
  Rng rng(31);
  Matrix m = gca::testing::random_rows(rng, 4, 5);
  FlagValue f = FlagValue::from_levels({pts(first_rows(m, 3)), pts(first_rows(m, 1))});
  Extensor x = pts({m[3], gca::testing::random_row(rng, 5)});
  CHECK(flag_product(f, FlagValue(x)) == multiply_into_flag(x, f));
}
