#include <gtest/gtest.h>

#include <optional>
#include <random>

#include "nacalg/coalgebra.hpp"
#include "nacalg/demos.hpp"
#include "nacalg/duality.hpp"
#include "nacalg/errors.hpp"
#include "oracles.hpp"

using namespace nacalg;

namespace {

const Field Q = Field::rationals();

FinCoalgebra group_like(const Field& f, std::size_t n) {
  Tensor d(f, n, 3);
  for (std::size_t i = 0; i < n; ++i) d({i, i, i}) = f.one();
  Vec eps(f, n);
  for (std::size_t i = 0; i < n; ++i) eps[i] = f.one();
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("g" + std::to_string(i));
  return FinCoalgebra(names, eps, d);
}

FinCoalgebra with_entry(const FinCoalgebra& c, std::size_t i, std::size_t j, std::size_t k, const Scalar& s) {
  Tensor d = c.structure();
  d({i, j, k}) = s;
  return FinCoalgebra(c.basis(), c.counit(), d);
}

}  // namespace

TEST(FinCoalgebra, ConstructorEnforcesCounitLaw) {
  Tensor d(Q, 2, 3);
  EXPECT_THROW(FinCoalgebra({"a", "b"}, Vec::from_ints(Q, {1, 0}), d), Error);
  EXPECT_NO_THROW(group_like(Q, 3));
}

TEST(Delta, DualAlt3) {
  FinCoalgebra c = dual_coalgebra(demos::alt3());
  Mat dy = c.delta(Vec::unit_vector(Q, 3, 2));
  // Δ(Y) = X⊗X + Y⊗E + E⊗Y.
  EXPECT_EQ(dy, Mat::from_ints(Q, {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}));
  EXPECT_THROW(c.delta(Vec::unit_vector(Q, 2, 0)), DimensionMismatch);
}

TEST(CoalgebraChecks, Examples) {
  FinCoalgebra dalt = dual_coalgebra(demos::alt3());
  EXPECT_TRUE(check_counital(dalt));
  EXPECT_TRUE(check_cocommutative(dalt));
  EXPECT_FALSE(check_coassociative(dalt));
  EXPECT_FALSE(oracle::coassociative(dalt));

  FinCoalgebra g = group_like(Q, 3);
  EXPECT_TRUE(check_counital(g));
  EXPECT_TRUE(check_coassociative(g));
  EXPECT_TRUE(check_cocommutative(g));

  FinCoalgebra cm = dual_coalgebra(demos::matrix2());
  EXPECT_TRUE(check_coassociative(cm));
  EXPECT_FALSE(check_cocommutative(cm));
  EXPECT_EQ(bool(check_coassociative(cm)), oracle::coassociative(cm));
  EXPECT_EQ(bool(check_cocommutative(cm)), oracle::cocommutative(cm));
}

TEST(Coalternative, Examples) {
  FinCoalgebra dalt = dual_coalgebra(demos::alt3());
  EXPECT_TRUE(check_coalternative(dalt));
  EXPECT_TRUE(check_coalternative(group_like(Q, 4)));
  EXPECT_TRUE(check_coalternative(dual_coalgebra(demos::group_algebra_c2().algebra)));

  // Entries away from E keep the counit law; some of them break coalternativity.
  std::optional<FinCoalgebra> bent;
  for (std::size_t i = 0; i < 3 && !bent; ++i)
    for (std::size_t j = 1; j < 3 && !bent; ++j)
      for (std::size_t k = 1; k < 3 && !bent; ++k) {
        FinCoalgebra c = with_entry(dalt, i, j, k, dalt.structure()({i, j, k}) + Q.one());
        if (!check_coalternative(c)) bent = c;
      }
  ASSERT_TRUE(bent);
  EXPECT_TRUE(check_counital(*bent));
  Verdict v = check_coalternative(*bent);
  EXPECT_FALSE(v);
  ASSERT_EQ(v.witness.size(), 1u);
  EXPECT_FALSE(coalternative_defect(*bent, Vec::unit_vector(Q, 3, v.witness[0])).is_zero());

  EXPECT_THROW(check_coalternative(dual_coalgebra(demos::alt3(Field::prime(2)))), CharacteristicError);
}

TEST(JordanCoalgebra, Examples) {
  EXPECT_TRUE(check_jordan_coalgebra(dual_coalgebra(demos::jordan_sym2())));
  EXPECT_TRUE(check_jordan_coalgebra(group_like(Q, 3)));
  EXPECT_FALSE(check_jordan_coalgebra(dual_coalgebra(demos::alt3())));
  EXPECT_THROW(check_jordan_coalgebra(group_like(Field::prime(3), 2)), CharacteristicError);
}

TEST(CoidentitiesTransportFromAlgebras, RandomGF5) {
  std::mt19937 rng(77);
  const Field f5 = Field::prime(5);
  int alt = 0, jor = 0;
  for (int t = 0; t < 400; ++t) {
    FinAlgebra a = oracle::random_algebra(f5, 1 + t % 4, rng);
    FinCoalgebra c = oracle::dual_by_hand(a);
    if (oracle::alternative(a)) {
      ++alt;
      EXPECT_TRUE(check_coalternative(c));
    }
    if (oracle::jordan(a)) {
      ++jor;
      EXPECT_TRUE(check_jordan_coalgebra(c));
    }
    // The converse holds too: dualization is faithful.
    EXPECT_EQ(bool(check_coalternative(c)), oracle::alternative(a));
    EXPECT_EQ(bool(check_jordan_coalgebra(c)), oracle::jordan(a));
    EXPECT_EQ(bool(check_coassociative(c)), oracle::associative(a));
  }
  EXPECT_GT(alt, 0);
  EXPECT_GT(jor, 0);
}

TEST(SubcoalgebraClosure, Examples) {
  FinCoalgebra g = group_like(Q, 3);
  EXPECT_EQ(subcoalgebra_closure(g, Vec::unit_vector(Q, 3, 1)).dim(), 1u);

  FinCoalgebra dalt = dual_coalgebra(demos::alt3());
  EXPECT_EQ(subcoalgebra_closure(dalt, Vec::unit_vector(Q, 3, 1)), Subspace::full(Q, 3));
  EXPECT_EQ(subcoalgebra_closure(dalt, Vec(Q, 3)).dim(), 0u);
  EXPECT_EQ(subcoalgebra_closure(dalt, Vec::unit_vector(Q, 3, 0)).dim(), 1u);
}

TEST(SubcoalgebraClosure, InvariantAndMinimal) {
  FinCoalgebra cm = demos::comatrix2();
  for (std::size_t i = 0; i < 4; ++i) {
    Subspace d = subcoalgebra_closure(cm, Vec::unit_vector(Q, 4, i));
    EXPECT_TRUE(is_subcoalgebra(cm, d));
    EXPECT_TRUE(d.contains(Vec::unit_vector(Q, 4, i)));
    // Removing a row either loses x or breaks Δ(D) ⊆ D⊗D.
    auto rows = d.basis_vectors();
    for (std::size_t r = 0; r < rows.size(); ++r) {
      std::vector<Vec> rest;
      for (std::size_t s = 0; s < rows.size(); ++s)
        if (s != r) rest.push_back(rows[s]);
      Subspace smaller = Subspace::span(Q, 4, rest);
      EXPECT_TRUE(!is_subcoalgebra(cm, smaller) || !smaller.contains(Vec::unit_vector(Q, 4, i)));
    }
  }
}
