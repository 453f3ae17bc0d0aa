#pragma once

#include "nacalg/algebra.hpp"
#include "nacalg/coalgebra.hpp"
#include "nacalg/report.hpp"

namespace nacalg {

// At finite dimension the finite dual A• is all of A*, the inclusion
// j_A : A• -> A* is the identity and V*⊗W* ≅ (V⊗W)* is the canonical
// re-indexing (row = left factor). Dual spaces carry the dual basis, with
// basis names upper-cased.

/// A• = A* with Δ the transpose of m and ε = evaluation at 1_A.
FinCoalgebra dual_coalgebra(const FinAlgebra& a);
/// C* with the convolution product; its unit is ε_C.
FinAlgebra convolution_algebra(const FinCoalgebra& c);

/// Whether every W_n(e^i) stays inside A* with dim ≤ dim A, i.e. the bound
/// that makes every functional on a finite-dimensional A finite-dual.
bool finite_dual_is_full_dual(const FinAlgebra& a);

/// m*(V) ⊆ V⊗V for a subspace V of A*.
bool good_subspace_check(const FinAlgebra& a, const Subspace& v);

/// η_A : A -> (A•)*, a ↦ (f ↦ f(a)), in the double-dual basis.
Mat eta(const FinAlgebra& a);
/// θ_C : C -> (C*)•, x ↦ (g ↦ g(x)), in the double-dual basis.
Mat theta(const FinCoalgebra& c);

/// f : A -> B (dim B × dim A) preserves products and the unit.
Verdict is_algebra_morphism(const Mat& f, const FinAlgebra& a, const FinAlgebra& b);
/// g : C -> D preserves Δ and ε.
Verdict is_coalgebra_morphism(const Mat& g, const FinCoalgebra& c, const FinCoalgebra& d);

/// (η_A)• ∘ θ_{A•} = id_{A•}, with η_A an algebra map and θ_{A•} a
/// coalgebra map.
bool triangle_check(const FinAlgebra& a);
/// (θ_C)* ∘ η_{C*} = id_{C*}, with θ_C a coalgebra map and η_{C*} an
/// algebra map.
bool triangle_check_c(const FinCoalgebra& c);

/// Componentwise structure on A⊗B; basis pair (i, j) has index i·dim B + j.
FinAlgebra tensor_algebra(const FinAlgebra& a, const FinAlgebra& b);
FinCoalgebra tensor_coalgebra(const FinCoalgebra& c, const FinCoalgebra& d);

/// φ′ : A•⊗B• -> (A⊗B)•, f⊗g ↦ (a⊗b ↦ f(a)g(b)).
Mat phi_prime(const FinAlgebra& a, const FinAlgebra& b);
/// ψ = ((i_A)•⊗(i_B)•)∘Δ_{(A⊗B)•} with i_A(a) = a⊗1, i_B(b) = 1⊗b.
Mat psi(const FinAlgebra& a, const FinAlgebra& b);
/// Both composites of φ′ and ψ are identities, and φ′ is a coalgebra map.
bool phi_iso_check(const FinAlgebra& a, const FinAlgebra& b);

/// Coassociative coalgebra with a unital (not necessarily associative)
/// multiplication whose m and u are coalgebra maps.
struct NAlgObject {
  FinCoalgebra coalgebra;
  FinAlgebra algebra;
};

/// Associative algebra with a counital (not necessarily coassociative)
/// comultiplication whose Δ and ε are algebra maps.
struct NCoalgObject {
  FinAlgebra algebra;
  FinCoalgebra coalgebra;
};

Report check_nalg(const NAlgObject& x);
Report check_ncoalg(const NCoalgObject& x);

/// Dualizes all four structure maps. Throws PreconditionError naming the
/// failed axiom when the input is not an NCoalgObject (resp. NAlgObject);
/// the output is re-verified.
NAlgObject lift_dual(const NCoalgObject& x);
NCoalgObject lift_dual_rev(const NAlgObject& y);

/// `act` describes d ◀ c as a dim D × (dim D · dim C) matrix, column
/// index d·dim C + c. After checking that D⊗C -> D is a coalgebra map
/// (PreconditionError with the violating pair otherwise), verifies on
/// generators that c ▶ (f∗g) = Σ (c₁▶f)∗(c₂▶g) and c ▶ ε_D = ε_C(c) ε_D,
/// where (c ▶ f)(d) = f(d ◀ c).
Verdict module_algebra_check(const FinCoalgebra& c, const FinCoalgebra& d, const Mat& act);

}  // namespace nacalg
