#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "nacalg/duality.hpp"

namespace nacalg {

/// Values φ(X^j) of a functional on k[X].
using Weight = std::function<Scalar(std::size_t)>;

/// j ↦ j! over Q.
Weight factorial_weight();

/// ω(X^n⊗X^k⊗X^m) built from φ = factorial: 1 when any exponent is 0,
/// otherwise φ(k−1)⁻² φ(n+k−1) φ(m+k−1). Throws CharacteristicError on a
/// prime field.
Scalar nonsplit_omega(const Field& field, std::size_t n, std::size_t k, std::size_t m);
/// Same rule for an arbitrary φ; nullopt when φ(k−1) = 0.
std::optional<Scalar> nonsplit_omega(std::size_t n, std::size_t k, std::size_t m, const Weight& phi);

/// ω on group-like exponents; nullopt marks an undefined value.
using GroupLikeOmega = std::function<std::optional<Scalar>(std::size_t, std::size_t, std::size_t)>;

/// For a functional on the group-like basis X^0, X^1, ...: the 3-cocycle
/// identity on all 0 ≤ n, m, r, s ≤ N (witness (n, m, r, s)), the unital
/// clauses, and ω ≠ 0 on all triples ≤ N.
Report check_group_like_cocycle(std::size_t N, const GroupLikeOmega& omega);

/// The above for the ω built from φ, plus dqb2 (identically true on a
/// commutative group-like carrier) and the reduction ω(−⊗X⊗X) = φ.
Report check_nonsplit_cocycle(std::size_t N, const Weight& phi = factorial_weight());

/// ω(X^n⊗X⊗X) for n = 0..N.
std::vector<Scalar> nonsplit_reduction(std::size_t N, const Weight& phi = factorial_weight());

/// det((i+j)!)_{0 ≤ i,j ≤ n}. Characteristic 0 only.
Scalar factorial_matrix_det(const Field& field, std::size_t n);
/// (0!·1!⋯n!)².
Scalar factorial_product_square(std::size_t n);

struct Sequence {
  std::string name;
  std::function<Scalar(std::size_t)> rule;
  /// Number of terms a_0 .. a_{window-1} inspected.
  std::size_t window;
};

Sequence fibonacci_sequence(std::size_t window = 32);
Sequence geometric_sequence(Scalar ratio, std::size_t window = 32);
Sequence factorial_sequence(std::size_t window = 32);
Sequence values_sequence(std::vector<Scalar> values);

struct HankelCertificate {
  std::size_t size;
  Scalar det;
};

struct HankelResult {
  /// c_0 .. c_{r-1} with a_{n+r} = Σ c_t a_{n+t} on the whole window.
  std::optional<std::vector<Scalar>> recurrence;
  /// Hankel determinants det(a_{i+j})_{i,j<s}, s = 1 .. max_order + 1, when
  /// no recurrence is found.
  std::vector<HankelCertificate> certificates;
  /// Every size 1 .. max_order + 1 was reached and is nonsingular.
  bool certified = false;
};

/// Least order r ≤ max_order admitting a recurrence on the window.
HankelResult hankel_recursive(const Sequence& seq, std::size_t max_order);

/// A finite-dimensional slice of an infinite-dimensional structure; rule
/// outputs above the truncation degree are listed, never silently dropped.
struct TruncatedCoalgebra {
  FinCoalgebra coalgebra;
  std::size_t truncation;
  /// Basis indices whose Δ has terms above the truncation.
  std::vector<std::size_t> overflow;
};

/// Basis 1, X, ..., X^N with Δ(X^n) = X^n⊗1 + 1⊗X^n + X^{n+1}⊗X + X⊗X^{n+1}
/// for n ≥ 2, Δ(X) = X⊗1 + 1⊗X, Δ(1) = 1⊗1, ε(X^n) = δ_{n,0}.
TruncatedCoalgebra diamond_coalgebra(std::size_t N);

struct GrowthRow {
  std::size_t truncation;
  std::size_t closure_dim;
  /// The closure contains a basis element whose Δ was truncated.
  bool touches_boundary;
};

/// Dimension of the subcoalgebra generated by X² at truncations 3 .. N.
std::vector<GrowthRow> diamond_closure_growth(std::size_t N);

/// Group-like basis X^0 .. X^N; products with a + b > N are listed in
/// overflow and set to zero.
struct TruncatedMonoidBialgebra {
  FinAlgebra algebra;
  FinCoalgebra coalgebra;
  std::size_t truncation;
  std::vector<std::array<std::size_t, 2>> overflow;
};

TruncatedMonoidBialgebra polynomial_monoid_bialgebra(const Field& field, std::size_t N);

/// Words of length ≤ N, ordered by length then lexicographically, with
/// concatenation; longer products vanish (and are the only ones that do).
struct TruncatedTensorAlgebra {
  FinAlgebra algebra;
  std::size_t letters;
  std::size_t truncation;
  /// Length of each basis word.
  std::vector<std::size_t> degree;

  std::size_t offset(std::size_t deg) const;
  std::size_t count(std::size_t deg) const;
};

TruncatedTensorAlgebra truncated_tensor_algebra(const Field& field, std::size_t d, std::size_t N);

/// x·y ≠ 0 for random nonzero homogeneous x, y with deg x + deg y ≤ N.
bool homogeneous_domain_check(const Field& field, std::size_t d, std::size_t N, std::size_t trials,
                              std::uint32_t seed = 20140721);
/// No homogeneous z of positive degree has a right or left inverse among
/// elements of degree ≤ N − deg z; tested on every basis word and on
/// random combinations.
bool no_positive_degree_unit(const Field& field, std::size_t d, std::size_t N, std::uint32_t seed = 20140721);
/// Homogeneous x has a two-sided inverse of degree ≤ N − deg x.
bool is_unit(const TruncatedTensorAlgebra& t, const Vec& x);

/// T(C) truncated at word length N, with Δ and ε extended multiplicatively.
struct TensorBialgebra {
  TruncatedTensorAlgebra words;
  FinCoalgebra coalgebra;
};

TensorBialgebra tensor_bialgebra_from_coalgebra(const FinCoalgebra& c, std::size_t N);

/// (a) Δ and ε multiplicative on word pairs, (b) coassociativity on the
/// degree-1 generators (informational), (c) the coalternative identity on
/// words of length ≤ 2 when C is cocommutative.
Report check_T_of_C(const FinCoalgebra& c, std::size_t N);

/// Units of T(C)^{⊗3} sit in degree 0, so a reassociator is λ·1⊗1⊗1;
/// returns the λ allowed by qb4 (nullopt when no λ works).
std::optional<Scalar> forced_degree_zero_reassociator(const TensorBialgebra& t);

}  // namespace nacalg
