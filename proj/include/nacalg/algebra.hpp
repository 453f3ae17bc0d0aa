#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nacalg/linalg.hpp"
#include "nacalg/report.hpp"
#include "nacalg/subspace.hpp"
#include "nacalg/tensor.hpp"

namespace nacalg {

/// Finite-dimensional unital algebra given by structure constants:
/// e_i · e_j = Σ_k c(i, j, k) e_k. Associativity is not assumed.
///
/// The constructor rejects inputs that violate the unit law. A
/// 0-dimensional algebra (a quotient by the whole algebra) is allowed.
class FinAlgebra {
 public:
  FinAlgebra(std::vector<std::string> basis, Vec unit, Tensor structure);

  const Field& field() const noexcept { return unit_.field(); }
  std::size_t dim() const noexcept { return names_.size(); }
  const std::vector<std::string>& basis() const noexcept { return names_; }
  const Vec& unit() const noexcept { return unit_; }
  const Tensor& structure() const noexcept { return c_; }

  Vec basis_vector(std::size_t i) const { return Vec::unit_vector(field(), dim(), i); }
  /// e_i · e_j as sparse (k, coefficient) pairs.
  const std::vector<std::pair<std::size_t, Scalar>>& basis_product(std::size_t i, std::size_t j) const {
    return table_[i * dim() + j];
  }
  Vec mul(const Vec& a, const Vec& b) const;

  /// m : A⊗A -> A as an n × n² matrix.
  BlockMap mul_block() const;
  /// u : k -> A as an n × 1 matrix.
  BlockMap unit_block() const;

 private:
  std::vector<std::string> names_;
  Vec unit_;
  Tensor c_;
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> table_;
};

/// Builds an algebra from a dense product callback on basis indices.
template <class ProductFn>
FinAlgebra make_algebra(Field field, std::vector<std::string> names, const Vec& unit, ProductFn product) {
  const std::size_t n = names.size();
  Tensor c(field, n, 3);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec p = product(i, j);
      for (std::size_t k = 0; k < n; ++k) c({i, j, k}) = p[k];
    }
  return FinAlgebra(std::move(names), unit, std::move(c));
}

Verdict check_unital(const FinAlgebra& a);
Verdict check_associative(const FinAlgebra& a);
Verdict check_commutative(const FinAlgebra& a);
/// x(yz) + z(yx) = (xy)z + (zy)x on basis triples. Requires char ≠ 2.
Verdict check_alternative(const FinAlgebra& a);
/// ((xy)z)t + ((xt)z)y + ((ty)z)x = (xy)(zt) + (xt)(zy) + (ty)(zx) on basis
/// quadruples, after checking commutativity. Requires char ∉ {2, 3}.
Verdict check_jordan(const FinAlgebra& a);

struct IdealWitness {
  Subspace subspace;
  std::size_t codim;
};

/// Smallest two-sided ideal containing the given vectors.
IdealWitness ideal_closure(const FinAlgebra& a, std::span<const Vec> generators);
/// (basis index a, ideal basis row r) with e_a·v_r or v_r·e_a outside the
/// subspace, or nullopt if the subspace is an ideal.
std::optional<std::vector<std::size_t>> ideal_violation(const FinAlgebra& a, const Subspace& s);

struct Quotient {
  FinAlgebra algebra;
  /// A -> A/I, (dim A/I) × (dim A).
  Mat projection;
};

/// A/I on the complement spanned by the non-pivot coordinates of I.
/// Throws PreconditionError with the witnessing pair if I is not an ideal.
Quotient quotient(const FinAlgebra& a, const Subspace& ideal);

// Actions of A on A*: functionals are coordinate vectors in the dual basis.

/// (a ⇀ f)(b) = f(b·a).
Vec hit_left(const FinAlgebra& alg, const Vec& a, const Vec& f);
/// (f ↼ a)(b) = f(a·b).
Vec hit_right(const FinAlgebra& alg, const Vec& f, const Vec& a);
/// x ◀ (l⊗r) = r·(x·l).
Vec env_act(const FinAlgebra& alg, const Vec& x, const Vec& l, const Vec& r);
/// (l⊗r) ▶ f, i.e. x ↦ f(x ◀ (l⊗r)).
Vec env_act_dual(const FinAlgebra& alg, const Vec& l, const Vec& r, const Vec& f);

/// W_0 = span{f}; W_n = W_{n-1} + Σ_l l⇀W_{n-1} + Σ_r W_{n-1}↼r over basis
/// elements. Returns W_0 .. W_nmax.
std::vector<Subspace> w_spaces(const FinAlgebra& alg, const Vec& f, std::size_t nmax);

/// I_0 = ker f; I_n = {a : a ◀ (l⊗r) ∈ I_{n-1} for all basis l, r}.
/// Returns I_0 .. I_nmax.
std::vector<Subspace> i_chain(const FinAlgebra& alg, const Vec& f, std::size_t nmax);

// Multiplication in the tensor powers A^{⊗k} (componentwise).

Tensor one_power(const FinAlgebra& alg, std::size_t k);
Tensor mul_power(const FinAlgebra& alg, const Tensor& x, const Tensor& y);
/// Two-sided inverse in A^{⊗k}, or nullopt when none exists.
std::optional<Tensor> invert_power(const FinAlgebra& alg, const Tensor& x);

}  // namespace nacalg
