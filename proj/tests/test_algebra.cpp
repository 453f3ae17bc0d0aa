#include <gtest/gtest.h>

#include <random>

#include "nacalg/algebra.hpp"
#include "nacalg/demos.hpp"
#include "nacalg/errors.hpp"
#include "nacalg/kernels.hpp"
#include "oracles.hpp"

using namespace nacalg;

namespace {

const Field Q = Field::rationals();

Vec v(std::initializer_list<long> xs) { return Vec::from_ints(Q, xs); }

/// e unit, a·b = a, every other product of a, b zero. Fails the
/// linearized flexible identity at (a, b, b).
FinAlgebra non_flexible3(const Field& f = Q) {
  return make_algebra(f, {"e", "a", "b"}, Vec::unit_vector(f, 3, 0), [&](std::size_t i, std::size_t j) {
    Vec out(f, 3);
    if (i == 0) out[j] = f.one();
    else if (j == 0) out[i] = f.one();
    else if (i == 1 && j == 2) out[1] = f.one();
    return out;
  });
}

/// Every alternative-identity term from random (non-basis) vectors, to
/// cross-check the multilinear reduction to basis triples.
bool alternative_on_random_vectors(const FinAlgebra& a, std::mt19937& rng) {
  std::uniform_int_distribution<long> d(-3, 3);
  auto rnd = [&] {
    oracle::Elem x;
    for (std::size_t i = 0; i < a.dim(); ++i) x.push_back(a.field().from_int(d(rng)));
    return x;
  };
  for (int t = 0; t < 20; ++t) {
    auto x = rnd(), y = rnd(), z = rnd();
    using oracle::mul;
    auto lhs = oracle::add(mul(a, x, mul(a, y, z)), mul(a, z, mul(a, y, x)));
    auto rhs = oracle::add(mul(a, mul(a, x, y), z), mul(a, mul(a, z, y), x));
    if (lhs != rhs) return false;
  }
  return true;
}

}  // namespace

TEST(FinAlgebra, ConstructorEnforcesUnitLaw) {
  Tensor c(Q, 2, 3);
  EXPECT_THROW(FinAlgebra({"a", "b"}, v({1, 0}), c), Error);
  EXPECT_THROW(FinAlgebra({"a"}, v({1, 0}), c), DimensionMismatch);
}

TEST(FinAlgebra, UnitLawOnDemos) {
  for (const FinAlgebra& a : {demos::alt3(), demos::jordan_sym2(), demos::matrix2(), demos::ground_field()}) {
    for (std::size_t i = 0; i < a.dim(); ++i) {
      EXPECT_EQ(a.mul(a.unit(), a.basis_vector(i)), a.basis_vector(i));
      EXPECT_EQ(a.mul(a.basis_vector(i), a.unit()), a.basis_vector(i));
    }
  }
}

TEST(Alt3, MultiplicationTable) {
  FinAlgebra a = demos::alt3();
  Vec x = a.basis_vector(1), y = a.basis_vector(2);
  EXPECT_EQ(a.mul(x, x), y);
  EXPECT_EQ(a.mul(x, y), x);
  EXPECT_EQ(a.mul(y, x), x);
  EXPECT_EQ(a.mul(y, y), x);
}

TEST(Checks, Alt3) {
  FinAlgebra a = demos::alt3();
  EXPECT_TRUE(check_unital(a));
  EXPECT_TRUE(check_commutative(a));
  EXPECT_TRUE(check_alternative(a));
  Verdict assoc = check_associative(a);
  ASSERT_FALSE(assoc);
  ASSERT_EQ(assoc.witness.size(), 3u);
  // The witness is a genuine counterexample.
  auto e = [&](std::size_t i) { return a.basis_vector(assoc.witness[i]); };
  EXPECT_NE(a.mul(a.mul(e(0), e(1)), e(2)), a.mul(e(0), a.mul(e(1), e(2))));
  EXPECT_FALSE(check_jordan(a));
}

TEST(Checks, GroupAlgebraAndMatrices) {
  FinAlgebra c2 = demos::group_algebra_c2().algebra;
  EXPECT_TRUE(check_unital(c2));
  EXPECT_TRUE(check_associative(c2));
  EXPECT_TRUE(check_commutative(c2));

  FinAlgebra m2 = demos::matrix2();
  EXPECT_TRUE(check_associative(m2));
  EXPECT_FALSE(check_commutative(m2));
  EXPECT_TRUE(check_alternative(m2));
}

TEST(Checks, NonFlexibleCounterexample) {
  FinAlgebra a = non_flexible3();
  EXPECT_TRUE(check_unital(a));
  EXPECT_FALSE(oracle::alternative(a));
  Verdict alt = check_alternative(a);
  EXPECT_FALSE(alt);
  EXPECT_EQ(alt.witness.size(), 3u);
}

TEST(Checks, JordanSym2) {
  FinAlgebra j = demos::jordan_sym2();
  EXPECT_TRUE(check_commutative(j));
  EXPECT_TRUE(check_jordan(j));
  EXPECT_TRUE(oracle::jordan(j));
  EXPECT_FALSE(oracle::jordan(demos::alt3()));
}

TEST(Checks, CharacteristicGuards) {
  EXPECT_THROW(check_alternative(demos::alt3(Field::prime(2))), CharacteristicError);
  EXPECT_THROW(check_jordan(demos::alt3(Field::prime(3))), CharacteristicError);
  EXPECT_THROW(check_jordan(demos::alt3(Field::prime(2))), CharacteristicError);
  EXPECT_NO_THROW(check_alternative(demos::alt3(Field::prime(3))));
}

TEST(Checks, AgreeWithOracleOnRandomAlgebras) {
  std::mt19937 rng(31);
  const Field f5 = Field::prime(5);
  int alternative_seen = 0;
  for (int t = 0; t < 60; ++t) {
    FinAlgebra a = oracle::random_algebra(f5, 1 + t % 4, rng);
    EXPECT_EQ(bool(check_associative(a)), oracle::associative(a));
    EXPECT_EQ(bool(check_commutative(a)), oracle::commutative(a));
    const bool alt = oracle::alternative(a);
    alternative_seen += alt;
    EXPECT_EQ(bool(check_alternative(a)), alt);
    EXPECT_EQ(bool(check_alternative(a)), alternative_on_random_vectors(a, rng));
  }
  EXPECT_GT(alternative_seen, 0);
  std::mt19937 rng7(7);
  for (int t = 0; t < 20; ++t) {
    FinAlgebra a = oracle::random_algebra(Field::prime(7), 1 + t % 3, rng7);
    EXPECT_EQ(bool(check_jordan(a)), oracle::jordan(a));
  }
}

TEST(Checks, ParallelAndSerialSweepsAgree) {
  // The library sweep equals a serial brute force witness for witness.
  FinAlgebra a = demos::alt3();
  auto serial = kernels::serial::first_violation(3, 3, [&](std::span<const std::size_t> t) {
    Vec x = a.basis_vector(t[0]), y = a.basis_vector(t[1]), z = a.basis_vector(t[2]);
    return a.mul(a.mul(x, y), z) == a.mul(x, a.mul(y, z));
  });
  ASSERT_TRUE(serial);
  EXPECT_EQ(check_associative(a).witness, *serial);
}

TEST(Ideals, Closure) {
  FinAlgebra a = demos::alt3();
  std::vector<Vec> unit{a.unit()};
  auto whole = ideal_closure(a, unit);
  EXPECT_EQ(whole.codim, 0u);

  std::vector<Vec> x{a.basis_vector(1)};
  auto ix = ideal_closure(a, x);
  EXPECT_EQ(ix.codim, 1u);
  EXPECT_EQ(ix.subspace, Subspace::span(Q, 3, std::vector{v({0, 1, 0}), v({0, 0, 1})}));

  auto zero = ideal_closure(a, std::vector<Vec>{});
  EXPECT_EQ(zero.subspace.dim(), 0u);
  EXPECT_EQ(zero.codim, 3u);
}

TEST(Ideals, ClosureIsFixpoint) {
  std::mt19937 rng(12);
  const Field f5 = Field::prime(5);
  for (int t = 0; t < 30; ++t) {
    FinAlgebra a = oracle::random_algebra(f5, 2 + t % 3, rng);
    std::vector<Vec> gens{a.basis_vector(1 + t % (a.dim() - 1))};
    auto w = ideal_closure(a, gens);
    EXPECT_FALSE(ideal_violation(a, w.subspace).has_value());
    for (const Vec& b : w.subspace.basis_vectors())
      for (std::size_t i = 0; i < a.dim(); ++i) {
        EXPECT_TRUE(w.subspace.contains(a.mul(a.basis_vector(i), b)));
        EXPECT_TRUE(w.subspace.contains(a.mul(b, a.basis_vector(i))));
      }
  }
}

TEST(Quotient, Examples) {
  FinAlgebra a = demos::alt3();
  Quotient same = quotient(a, Subspace::zero(Q, 3));
  EXPECT_EQ(same.algebra.dim(), 3u);
  EXPECT_EQ(same.projection, Mat::identity(Q, 3));
  EXPECT_EQ(same.algebra.structure(), a.structure());

  std::vector<Vec> x{a.basis_vector(1)};
  Quotient one = quotient(a, ideal_closure(a, x).subspace);
  EXPECT_EQ(one.algebra.dim(), 1u);

  Quotient none = quotient(a, Subspace::full(Q, 3));
  EXPECT_EQ(none.algebra.dim(), 0u);
  EXPECT_THROW(check_unital(none.algebra), PreconditionError);
}

TEST(Quotient, RejectsNonIdealWithWitness) {
  FinAlgebra a = demos::alt3();
  Subspace s = Subspace::span(Q, 3, std::vector{v({0, 1, 0})});
  try {
    quotient(a, s);
    FAIL() << "expected rejection";
  } catch (const PreconditionError& e) {
    ASSERT_EQ(e.witness().size(), 2u);
    Vec b = a.basis_vector(e.witness()[0]);
    Vec i = s.basis_vectors()[e.witness()[1]];
    EXPECT_TRUE(!s.contains(a.mul(b, i)) || !s.contains(a.mul(i, b)));
  }
}

TEST(Quotient, ProjectionIsAlgebraMap) {
  std::mt19937 rng(41);
  const Field f5 = Field::prime(5);
  for (int t = 0; t < 30; ++t) {
    FinAlgebra a = oracle::random_algebra(f5, 2 + t % 3, rng);
    std::vector<Vec> gens{a.basis_vector(a.dim() - 1)};
    Quotient qt = quotient(a, ideal_closure(a, gens).subspace);
    EXPECT_EQ(qt.projection * a.unit(), qt.algebra.unit());
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t j = 0; j < a.dim(); ++j) {
        Vec x = a.basis_vector(i), y = a.basis_vector(j);
        EXPECT_EQ(qt.projection * a.mul(x, y), qt.algebra.mul(qt.projection * x, qt.projection * y));
      }
  }
}

TEST(Actions, UnitActsTrivially) {
  FinAlgebra a = demos::alt3();
  Vec f = v({2, -1, 5});
  EXPECT_EQ(hit_left(a, a.unit(), f), f);
  EXPECT_EQ(hit_right(a, f, a.unit()), f);
  Vec x = v({1, 3, -2});
  EXPECT_EQ(env_act(a, x, a.unit(), a.unit()), x);
  EXPECT_EQ(env_act_dual(a, a.unit(), a.unit(), f), f);
}

TEST(Actions, HitMatchesDefinition) {
  FinAlgebra a = demos::matrix2();
  Vec f = v({1, 2, 3, 4});
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t b = 0; b < 4; ++b) {
      Vec ei = a.basis_vector(i), eb = a.basis_vector(b);
      EXPECT_EQ(hit_left(a, ei, f)[b], dot(f, a.mul(eb, ei)));
      EXPECT_EQ(hit_right(a, f, ei)[b], dot(f, a.mul(ei, eb)));
    }
}

TEST(WSpaces, ZeroFunctional) {
  FinAlgebra a = demos::alt3();
  for (const Subspace& w : w_spaces(a, Vec(Q, 3), 4)) EXPECT_EQ(w.dim(), 0u);
}

TEST(WSpaces, GroupAlgebraStabilizes) {
  FinAlgebra a = demos::group_algebra_c2().algebra;
  auto ws = w_spaces(a, v({1, 0}), 4);
  for (std::size_t n = 0; n + 1 < ws.size(); ++n) EXPECT_TRUE(ws[n + 1].contains(ws[n]));
  EXPECT_LE(ws.back().dim(), 2u);
  EXPECT_EQ(ws[2], ws[3]);
}

TEST(IChain, ZeroFunctionalAndIdeals) {
  FinAlgebra a = demos::alt3();
  for (const Subspace& s : i_chain(a, Vec(Q, 3), 3)) EXPECT_EQ(s, Subspace::full(Q, 3));

  std::vector<Vec> x{a.basis_vector(1)};
  Subspace ideal = ideal_closure(a, x).subspace;
  // e^E vanishes on the ideal span{x, y}.
  auto chain = i_chain(a, v({1, 0, 0}), 4);
  for (const Subspace& s : chain) EXPECT_TRUE(s.contains(ideal));
}

TEST(IChain, DecreasingAndStable) {
  std::mt19937 rng(5);
  const Field f5 = Field::prime(5);
  for (int t = 0; t < 20; ++t) {
    FinAlgebra a = oracle::random_algebra(f5, 2 + t % 3, rng);
    Vec f = a.basis_vector(t % a.dim());
    auto chain = i_chain(a, f, 4);
    for (std::size_t n = 1; n < chain.size(); ++n) {
      EXPECT_TRUE(chain[n - 1].contains(chain[n]));
      for (const Vec& b : chain[n].basis_vectors())
        for (std::size_t l = 0; l < a.dim(); ++l)
          for (std::size_t r = 0; r < a.dim(); ++r)
            EXPECT_TRUE(chain[n - 1].contains(env_act(a, b, a.basis_vector(l), a.basis_vector(r))));
    }
  }
}

TEST(TensorPowers, InvertAndMultiply) {
  FinAlgebra a = demos::group_algebra_c2().algebra;
  Tensor one = one_power(a, 2);
  EXPECT_EQ(mul_power(a, one, one), one);
  auto inv = invert_power(a, one);
  ASSERT_TRUE(inv);
  EXPECT_EQ(*inv, one);
  Tensor p = outer(Tensor::from_vec(demos::h2_idempotent()), Tensor::from_vec(demos::h2_idempotent()));
  EXPECT_EQ(mul_power(a, p, p), p);
  EXPECT_FALSE(invert_power(a, p).has_value());
}
