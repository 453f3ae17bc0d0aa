#include <gtest/gtest.h>

#include "nacalg/demos.hpp"
#include "nacalg/errors.hpp"
#include "nacalg/filtered.hpp"
#include "oracles.hpp"

using namespace nacalg;

namespace {

const Field Q = Field::rationals();

Scalar q(long a, long b = 1) { return Q.from_ratio(a, b); }

FinCoalgebra group_like(std::size_t n) {
  Tensor d(Q, n, 3);
  Vec eps(Q, n);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    d({i, i, i}) = q(1);
    eps[i] = q(1);
    names.push_back("g" + std::to_string(i));
  }
  return FinCoalgebra(names, eps, d);
}

}  // namespace

TEST(NonsplitOmega, Values) {
  for (std::size_t n = 0; n < 5; ++n)
    for (std::size_t m = 0; m < 5; ++m) EXPECT_TRUE(nonsplit_omega(Q, n, 0, m).is_one());
  EXPECT_EQ(nonsplit_omega(Q, 1, 1, 1), q(1));
  EXPECT_EQ(nonsplit_omega(Q, 2, 2, 1), q(12));
  for (std::size_t n = 0; n <= 4; ++n)
    for (std::size_t k = 0; k <= 4; ++k)
      for (std::size_t m = 0; m <= 4; ++m) EXPECT_EQ(nonsplit_omega(Q, n, k, m), oracle::nonsplit(n, k, m));
  EXPECT_THROW(nonsplit_omega(Field::prime(7), 1, 1, 1), CharacteristicError);
}

TEST(NonsplitCocycle, PassesUpToSix) {
  for (std::size_t N = 1; N <= 6; ++N) {
    Report r = check_nonsplit_cocycle(N);
    EXPECT_TRUE(r.all_pass()) << "N = " << N;
    EXPECT_TRUE(r.passed("cocycle identity"));
    EXPECT_TRUE(r.passed("ω invertible"));
    EXPECT_TRUE(r.passed("dqb4"));
  }
  EXPECT_THROW(check_nonsplit_cocycle(0), PreconditionError);
}

TEST(NonsplitCocycle, OtherNowhereZeroWeightsAlsoWork) {
  // φ(0) = φ(1) = 1 keeps the reduction; the rest only needs φ nowhere zero.
  Weight w = [](std::size_t j) { return q(static_cast<long>(j * j - j + 1)); };
  EXPECT_TRUE(check_nonsplit_cocycle(5, w).all_pass());
  Weight linear = [](std::size_t j) { return q(static_cast<long>(j) + 1); };
  Report r = check_nonsplit_cocycle(5, linear);
  EXPECT_TRUE(r.passed("cocycle identity"));
  EXPECT_TRUE(r.passed("ω invertible"));
  EXPECT_FALSE(r.passed("reduction ω(−⊗X⊗X) = φ"));
}

TEST(NonsplitCocycle, ZeroWeightIsNotInvertible) {
  Weight n = [](std::size_t j) { return q(static_cast<long>(j)); };
  Report r = check_nonsplit_cocycle(4, n);
  EXPECT_FALSE(r.passed("ω invertible"));
  EXPECT_FALSE(r.axioms_hold());
}

TEST(NonsplitCocycle, PerturbedOmegaFailsWithQuadruple) {
  GroupLikeOmega bent = [](std::size_t n, std::size_t k, std::size_t m) -> std::optional<Scalar> {
    Scalar v = nonsplit_omega(Q, n, k, m);
    if (n == 1 && k == 2 && m == 1) v += q(1);
    return v;
  };
  Report r = check_group_like_cocycle(4, bent);
  const CheckEntry* e = r.find("cocycle identity");
  ASSERT_TRUE(e);
  EXPECT_EQ(e->status, Status::Fail);
  ASSERT_EQ(e->witness.size(), 4u);
  // The witness is genuine.
  auto w = e->witness;
  auto om = [&](std::size_t a, std::size_t b, std::size_t c) { return *bent(a, b, c); };
  Scalar lhs = om(w[1], w[2], w[3]) * om(w[0], w[1] + w[2], w[3]) * om(w[0], w[1], w[2]);
  Scalar rhs = om(w[0], w[1], w[2] + w[3]) * om(w[0] + w[1], w[2], w[3]);
  EXPECT_NE(lhs, rhs);
}

TEST(NonsplitReduction, IsFactorial) {
  auto red = nonsplit_reduction(8);
  ASSERT_EQ(red.size(), 9u);
  for (std::size_t n = 0; n <= 8; ++n) EXPECT_EQ(red[n], oracle::factorial(n));
}

TEST(FactorialDet, Values) {
  EXPECT_EQ(factorial_matrix_det(Q, 0), q(1));
  EXPECT_EQ(factorial_matrix_det(Q, 1), q(1));
  EXPECT_EQ(factorial_matrix_det(Q, 4), q(82944));
  for (std::size_t n = 0; n <= 8; ++n) EXPECT_EQ(factorial_matrix_det(Q, n), factorial_product_square(n));
  for (std::size_t n = 0; n <= 5; ++n) {
    std::vector<std::vector<Scalar>> m(n + 1);
    for (std::size_t i = 0; i <= n; ++i)
      for (std::size_t j = 0; j <= n; ++j) m[i].push_back(oracle::factorial(i + j));
    EXPECT_EQ(factorial_matrix_det(Q, n), oracle::cofactor_det(m));
  }
  EXPECT_THROW(factorial_matrix_det(Field::prime(5), 3), CharacteristicError);
}

TEST(Hankel, Examples) {
  auto fib = hankel_recursive(fibonacci_sequence(), 8);
  ASSERT_TRUE(fib.recurrence);
  EXPECT_EQ(*fib.recurrence, (std::vector<Scalar>{q(1), q(1)}));

  auto geo = hankel_recursive(geometric_sequence(q(2)), 8);
  ASSERT_TRUE(geo.recurrence);
  EXPECT_EQ(*geo.recurrence, std::vector<Scalar>{q(2)});

  auto fact = hankel_recursive(factorial_sequence(), 8);
  EXPECT_FALSE(fact.recurrence);
  EXPECT_TRUE(fact.certified);
  ASSERT_EQ(fact.certificates.size(), 9u);
  for (const auto& c : fact.certificates) EXPECT_EQ(c.det, factorial_matrix_det(Q, c.size - 1));
}

TEST(Hankel, RecurrenceReproducesWindow) {
  // a_n = 3a_{n-1} − 2a_{n-2} + a_{n-3}, started at 1, 0, 2.
  std::vector<Scalar> v{q(1), q(0), q(2)};
  for (std::size_t i = 3; i < 24; ++i) v.push_back(q(3) * v[i - 1] - q(2) * v[i - 2] + v[i - 3]);
  auto res = hankel_recursive(values_sequence(v), 8);
  ASSERT_TRUE(res.recurrence);
  ASSERT_EQ(res.recurrence->size(), 3u);
  const auto& c = *res.recurrence;
  for (std::size_t n = 0; n + 3 < v.size(); ++n) EXPECT_EQ(v[n + 3], c[0] * v[n] + c[1] * v[n + 1] + c[2] * v[n + 2]);
  EXPECT_THROW(hankel_recursive(fibonacci_sequence(), 0), PreconditionError);
}

TEST(Hankel, ShortWindowIsNotCertified) {
  auto res = hankel_recursive(factorial_sequence(6), 8);
  EXPECT_FALSE(res.recurrence);
  EXPECT_FALSE(res.certified);
}

TEST(Diamond, CounitAndClosures) {
  TruncatedCoalgebra dc = diamond_coalgebra(6);
  EXPECT_TRUE(check_counital(dc.coalgebra));
  EXPECT_EQ(dc.overflow, std::vector<std::size_t>{6});
  EXPECT_EQ(subcoalgebra_closure(dc.coalgebra, Vec::unit_vector(Q, 7, 0)).dim(), 1u);
  EXPECT_EQ(subcoalgebra_closure(dc.coalgebra, Vec::unit_vector(Q, 7, 2)).dim(), 7u);
  EXPECT_THROW(diamond_coalgebra(2), PreconditionError);
}

TEST(Diamond, GrowthNeverCloses) {
  auto rows = diamond_closure_growth(10);
  ASSERT_EQ(rows.size(), 8u);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].truncation, i + 3);
    EXPECT_EQ(rows[i].closure_dim, rows[i].truncation + 1);
    EXPECT_TRUE(rows[i].touches_boundary);
    if (i) EXPECT_GT(rows[i].closure_dim, rows[i - 1].closure_dim);
  }
}

TEST(PolynomialMonoid, GroupLikeAndOverflow) {
  auto kx = polynomial_monoid_bialgebra(Q, 4);
  for (std::size_t k = 0; k <= 4; ++k) {
    Mat d = kx.coalgebra.delta(Vec::unit_vector(Q, 5, k));
    Mat expect(Q, 5, 5);
    expect(k, k) = q(1);
    EXPECT_EQ(d, expect);
  }
  for (auto [a, b] : kx.overflow) EXPECT_GT(a + b, 4u);
  EXPECT_EQ(kx.overflow.size(), 10u);
  EXPECT_TRUE(check_coassociative(kx.coalgebra));
  EXPECT_TRUE(check_commutative(kx.algebra));
}

TEST(TensorAlgebra, GradedDomainAndUnits) {
  auto t = truncated_tensor_algebra(Q, 2, 4);
  EXPECT_EQ(t.algebra.dim(), 31u);
  EXPECT_EQ(t.algebra.basis()[0], "1");
  EXPECT_EQ(t.algebra.basis()[t.offset(2) + 1], "ab");
  EXPECT_TRUE(homogeneous_domain_check(Q, 2, 4, 100));
  EXPECT_TRUE(no_positive_degree_unit(Q, 2, 4));
  EXPECT_FALSE(is_unit(t, t.algebra.basis_vector(1)));
  EXPECT_TRUE(is_unit(t, q(3) * t.algebra.unit()));
  EXPECT_FALSE(is_unit(t, Vec(Q, t.algebra.dim())));
  EXPECT_THROW(is_unit(t, t.algebra.unit() + t.algebra.basis_vector(1)), PreconditionError);
  EXPECT_TRUE(homogeneous_domain_check(Field::prime(3), 3, 3, 50));
}

TEST(TensorOfCoalgebra, DualAlt3) {
  FinCoalgebra c = dual_coalgebra(demos::alt3());
  Report r = check_T_of_C(c, 3);
  EXPECT_TRUE(r.passed("Δ multiplicative"));
  EXPECT_TRUE(r.passed("ε multiplicative"));
  EXPECT_TRUE(r.passed("counital"));
  const CheckEntry* co = r.find("coassociative on generators");
  ASSERT_TRUE(co);
  EXPECT_EQ(co->status, Status::Fail);
  EXPECT_EQ(co->witness, std::vector<std::size_t>{1});
  EXPECT_EQ(c.basis()[co->witness[0]], "X");
  EXPECT_EQ(r.find("coalternative (length ≤ 2)")->status, Status::Pass);
  EXPECT_TRUE(r.axioms_hold());

  TensorBialgebra t = tensor_bialgebra_from_coalgebra(c, 3);
  EXPECT_EQ(forced_degree_zero_reassociator(t), q(1));
}

TEST(TensorOfCoalgebra, GroupLikeIsABialgebra) {
  Report r = check_T_of_C(group_like(2), 3);
  EXPECT_TRUE(r.passed("coassociative on generators"));
  EXPECT_TRUE(r.axioms_hold());
  TensorBialgebra t = tensor_bialgebra_from_coalgebra(group_like(2), 2);
  EXPECT_TRUE(check_coassociative(t.coalgebra));
}

TEST(TensorOfCoalgebra, NonCocommutativeSkipsCoalternative) {
  Report r = check_T_of_C(demos::comatrix2(), 2);
  EXPECT_EQ(r.find("coalternative (length ≤ 2)")->status, Status::Skipped);
  EXPECT_TRUE(r.passed("coassociative on generators"));
}
