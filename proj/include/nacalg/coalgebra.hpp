#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "nacalg/linalg.hpp"
#include "nacalg/report.hpp"
#include "nacalg/subspace.hpp"
#include "nacalg/tensor.hpp"

namespace nacalg {

/// Finite-dimensional counital coalgebra given by structure constants:
/// Δ(e_i) = Σ_{j,k} d(i, j, k) e_j⊗e_k. Coassociativity is not assumed;
/// the counit law is enforced on construction.
class FinCoalgebra {
 public:
  FinCoalgebra(std::vector<std::string> basis, Vec counit, Tensor structure);

  const Field& field() const noexcept { return counit_.field(); }
  std::size_t dim() const noexcept { return names_.size(); }
  const std::vector<std::string>& basis() const noexcept { return names_; }
  const Vec& counit() const noexcept { return counit_; }
  const Tensor& structure() const noexcept { return d_; }

  /// Δ(x) as an n×n coefficient matrix (row = left tensor factor).
  Mat delta(const Vec& x) const;
  Tensor delta_tensor(const Vec& x) const;

  /// Δ : C -> C⊗C as an n² × n matrix.
  BlockMap comul_block() const;
  /// ε : C -> k as a 1 × n matrix.
  BlockMap counit_block() const;

 private:
  std::vector<std::string> names_;
  Vec counit_;
  Tensor d_;
};

Verdict check_counital(const FinCoalgebra& c);
Verdict check_coassociative(const FinCoalgebra& c);
Verdict check_cocommutative(const FinCoalgebra& c);

/// The τ-composite (id + τ1τ2τ1)∘((Δ⊗C) − (C⊗Δ))∘Δ, evaluated on x.
Tensor coalternative_defect(const FinCoalgebra& c, const Vec& x);
/// Vanishing of coalternative_defect on every basis element. char ≠ 2.
Verdict check_coalternative(const FinCoalgebra& c);

/// [id + τ3τ2τ3 + τ3τ2τ1τ2τ3]∘[(Δ⊗C⊗C) − (C⊗C⊗Δ)]∘(Δ⊗C)∘Δ, evaluated on x.
Tensor jordan_coalgebra_defect(const FinCoalgebra& c, const Vec& x);
/// Cocommutativity plus vanishing of jordan_coalgebra_defect on every
/// basis element. char ∉ {2, 3}.
Verdict check_jordan_coalgebra(const FinCoalgebra& c);

/// Smallest subspace D ∋ x with Δ(D) ⊆ D⊗D.
Subspace subcoalgebra_closure(const FinCoalgebra& c, const Vec& x);
/// Whether Δ(D) ⊆ D⊗D.
bool is_subcoalgebra(const FinCoalgebra& c, const Subspace& d);

}  // namespace nacalg
