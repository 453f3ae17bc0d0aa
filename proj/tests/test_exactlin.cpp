#include <gtest/gtest.h>

#include <random>

#include "nacalg/algebra.hpp"
#include "nacalg/demos.hpp"
#include "nacalg/errors.hpp"
#include "nacalg/linalg.hpp"
#include "nacalg/subspace.hpp"
#include "oracles.hpp"

using namespace nacalg;

namespace {

const Field Q = Field::rationals();

Scalar q(long a, long b = 1) { return Q.from_ratio(a, b); }

Scalar random_scalar(const Field& f, std::mt19937& rng) {
  std::uniform_int_distribution<long> d(-9, 9);
  if (f.is_rational()) {
    long den = 0;
    while (den == 0) den = d(rng);
    return f.from_ratio(d(rng), den);
  }
  return f.from_int(d(rng));
}

Mat random_mat(const Field& f, std::size_t r, std::size_t c, std::mt19937& rng) {
  Mat m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = random_scalar(f, rng);
  return m;
}

}  // namespace

TEST(Scalar, RationalsStayReduced) {
  EXPECT_EQ(q(2, 4).to_string(), "1/2");
  EXPECT_EQ(q(3, -6).to_string(), "-1/2");
  EXPECT_EQ(q(4, 2).to_string(), "2");
  EXPECT_EQ(q(1, 3) + q(1, 6), q(1, 2));
}

TEST(Scalar, ResidueArithmetic) {
  const Field f5 = Field::prime(5);
  EXPECT_EQ((f5.from_int(3) + f5.from_int(4)).to_string(), "2 mod 5");
  EXPECT_EQ(f5.from_int(2).inverse(), f5.from_int(3));
  EXPECT_EQ(f5.from_int(-1), f5.from_int(4));
  EXPECT_THROW(f5.zero().inverse(), Error);
}

TEST(Scalar, ParseRoundTrip) {
  const Field f7 = Field::prime(7);
  for (const char* s : {"0", "-3", "7/12", "-1/9"}) EXPECT_EQ(Scalar::parse(s, Q).to_string(), s);
  EXPECT_EQ(Scalar::parse("3 mod 7", f7), f7.from_int(3));
  EXPECT_EQ(Scalar::parse("1/2", f7), f7.from_int(4));
  EXPECT_THROW(Scalar::parse("3 mod 5", f7), Error);
  EXPECT_THROW(Scalar::parse("1/0", Q), Error);
  EXPECT_THROW(Scalar::parse("x", Q), Error);
}

TEST(Scalar, FieldsDoNotMix) {
  EXPECT_THROW(q(1) + Field::prime(3).one(), FieldMismatch);
  EXPECT_FALSE(q(1) == Field::prime(3).one());
  EXPECT_EQ(Field::parse("Fp:11"), Field::prime(11));
  EXPECT_EQ(Field::parse("Q"), Q);
  EXPECT_THROW(Field::prime(9), Error);
}

TEST(Scalar, FieldAxiomsOnRandomTriples) {
  std::mt19937 rng(5);
  for (const Field& f : {Q, Field::prime(7), Field::prime(101)}) {
    for (int t = 0; t < 200; ++t) {
      Scalar a = random_scalar(f, rng), b = random_scalar(f, rng), c = random_scalar(f, rng);
      EXPECT_EQ(a + b, b + a);
      EXPECT_EQ(a * b, b * a);
      EXPECT_EQ((a + b) + c, a + (b + c));
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ(a + f.zero(), a);
      EXPECT_EQ(a * f.one(), a);
      EXPECT_TRUE((a + -a).is_zero());
      if (!a.is_zero()) EXPECT_TRUE((a * a.inverse()).is_one());
    }
  }
}

TEST(Rref, Examples) {
  auto r = rref(Mat::from_ints(Q, {{1, 2}, {2, 4}}));
  EXPECT_EQ(r.reduced, Mat::from_ints(Q, {{1, 2}}));
  EXPECT_EQ(r.pivots, std::vector<std::size_t>{0});

  EXPECT_EQ(rref(Mat::identity(Q, 3)).reduced, Mat::identity(Q, 3));

  const Field f5 = Field::prime(5);
  auto s = rref(Mat::from_ints(f5, {{0, 1}, {1, 0}}));
  EXPECT_EQ(s.reduced, Mat::identity(f5, 2));
  EXPECT_EQ(s.pivots, (std::vector<std::size_t>{0, 1}));
}

TEST(Rref, Idempotent) {
  std::mt19937 rng(11);
  for (int t = 0; t < 40; ++t) {
    Mat m = random_mat(t % 2 ? Q : Field::prime(5), 1 + t % 4, 1 + (t / 3) % 5, rng);
    auto once = rref(m).reduced;
    EXPECT_EQ(rref(once).reduced, once);
    EXPECT_EQ(rank(m), once.rows());
  }
}

TEST(Rref, RejectsForeignEntries) {
  Mat m(Q, 1, 2);
  m(0, 1) = Field::prime(3).one();
  EXPECT_THROW(rref(m), FieldMismatch);
}

TEST(Determinant, MatchesCofactorExpansion) {
  std::mt19937 rng(3);
  for (std::size_t n = 1; n <= 5; ++n) {
    Mat m = random_mat(Q, n, n, rng);
    std::vector<std::vector<Scalar>> rows(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) rows[i].push_back(m(i, j));
    EXPECT_EQ(determinant(m), oracle::cofactor_det(rows));
  }
}

TEST(Kernel, Examples) {
  EXPECT_EQ(kernel(Mat::identity(Q, 3)).dim(), 0u);
  EXPECT_EQ(kernel(Mat(Q, 2, 2)), Subspace::full(Q, 2));
  Subspace k = kernel(Mat::from_ints(Q, {{1, 1}}));
  EXPECT_EQ(k.dim(), 1u);
  EXPECT_TRUE(k.contains(Vec::from_ints(Q, {1, -1})));
}

TEST(Kernel, RankNullity) {
  std::mt19937 rng(8);
  for (int t = 0; t < 30; ++t) {
    Mat m = random_mat(Field::prime(3), 1 + t % 3, 1 + t % 5, rng);
    Subspace k = kernel(m);
    EXPECT_EQ(k.dim() + rank(m), m.cols());
    for (const Vec& v : k.basis_vectors()) EXPECT_TRUE((m * v).is_zero());
  }
}

TEST(Subspace, Examples) {
  Subspace x = Subspace::span(Q, 2, std::vector{Vec::from_ints(Q, {1, 0})});
  Subspace y = Subspace::span(Q, 2, std::vector{Vec::from_ints(Q, {0, 1})});
  EXPECT_EQ(subspace_intersect(x, y), Subspace::zero(Q, 2));
  EXPECT_EQ(subspace_sum(x, y), Subspace::full(Q, 2));

  Subspace line = Subspace::span(Q, 3, std::vector{Vec::from_ints(Q, {1, 0, 0})});
  Subspace ann = annihilator(line);
  EXPECT_EQ(ann, Subspace::span(Q, 3, std::vector{Vec::from_ints(Q, {0, 1, 0}), Vec::from_ints(Q, {0, 0, 1})}));
  EXPECT_EQ(annihilator(ann), line);
}

TEST(Subspace, AmbientMismatch) {
  EXPECT_THROW(subspace_sum(Subspace::zero(Q, 2), Subspace::zero(Q, 3)), DimensionMismatch);
  EXPECT_THROW(subspace_intersect(Subspace::full(Q, 2), Subspace::zero(Q, 3)), DimensionMismatch);
}

TEST(Subspace, RandomSumsOverGF7MatchEnumeration) {
  const Field f7 = Field::prime(7);
  std::mt19937 rng(2024);
  for (int t = 0; t < 25; ++t) {
    Mat m = random_mat(f7, 2, 3, rng);
    Vec u = m.row(0), v = m.row(1);
    Subspace su = Subspace::span(f7, 3, std::vector{u});
    Subspace sv = Subspace::span(f7, 3, std::vector{v});
    Subspace sum = subspace_sum(su, sv);
    Subspace meet = subspace_intersect(su, sv);
    EXPECT_EQ(su.dim() + sv.dim(), sum.dim() + meet.dim());

    std::vector<oracle::Elem> gens{{u.entries().begin(), u.entries().end()}, {v.entries().begin(), v.entries().end()}};
    auto points = oracle::enumerate_span(f7, gens, 3);
    std::size_t expected = 1;
    for (std::size_t i = 0; i < sum.dim(); ++i) expected *= 7;
    EXPECT_EQ(points.size(), expected);
  }
}

TEST(Subspace, LatticeLawsAndDoubleAnnihilator) {
  std::mt19937 rng(99);
  for (int t = 0; t < 30; ++t) {
    const Field f = t % 2 ? Q : Field::prime(5);
    Subspace u = Subspace::row_space(random_mat(f, 1 + t % 3, 4, rng));
    Subspace v = Subspace::row_space(random_mat(f, 1 + (t / 2) % 3, 4, rng));
    Subspace s = subspace_sum(u, v), i = subspace_intersect(u, v);
    EXPECT_EQ(u.dim() + v.dim(), s.dim() + i.dim());
    EXPECT_TRUE(s.contains(u) && s.contains(v));
    EXPECT_TRUE(u.contains(i) && v.contains(i));
    EXPECT_EQ(subspace_sum(u, u), u);
    EXPECT_EQ(subspace_intersect(u, s), u);
    EXPECT_EQ(annihilator(annihilator(u)), u);
  }
}

TEST(SolveLinear, Examples) {
  Vec b = Vec::from_ints(Q, {4, -1});
  EXPECT_EQ(solve_linear(Mat::identity(Q, 2), b), b);
  EXPECT_FALSE(solve_linear(Mat::from_ints(Q, {{1, 1}, {1, 1}}), Vec::from_ints(Q, {1, 2})).has_value());
  EXPECT_THROW(solve_linear(Mat::identity(Q, 2), Vec::from_ints(Q, {1, 2, 3})), DimensionMismatch);
}

TEST(SolveLinear, SolutionsSatisfySystem) {
  std::mt19937 rng(4);
  for (int t = 0; t < 30; ++t) {
    Mat m = random_mat(Q, 3, 4, rng);
    Vec x = random_mat(Q, 1, 4, rng).row(0);
    auto sol = solve_linear(m, m * x);
    ASSERT_TRUE(sol.has_value());
    EXPECT_EQ(m * *sol, m * x);
  }
}

TEST(Contract, UnitInSlotGivesIdentity) {
  FinAlgebra a = demos::group_algebra_c2().algebra;
  EXPECT_EQ(contract(a.structure(), 0, a.unit()), Mat::identity(Q, 2));
  EXPECT_EQ(contract(a.structure(), 1, a.unit()), Mat::identity(Q, 2));
}

TEST(Kron, IndexConvention) {
  Mat a = Mat::from_ints(Q, {{1, 2}, {3, 4}});
  Mat b = Mat::from_ints(Q, {{0, 5}, {6, 7}});
  Mat k = kron(a, b);
  EXPECT_EQ(k(1 * 2 + 0, 0 * 2 + 1), q(3 * 5));
  EXPECT_EQ(k(3, 3), q(4 * 7));
}
