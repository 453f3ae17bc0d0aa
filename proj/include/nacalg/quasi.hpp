#pragma once

#include <optional>

#include "nacalg/duality.hpp"

namespace nacalg {

/// Associative algebra with algebra-map Δ, ε and an invertible
/// reassociator Φ ∈ H⊗H⊗H (rank-3 coefficient tensor).
struct QuasiBialgebra {
  NCoalgObject carrier;
  Tensor phi;
  Tensor phi_inv;

  const FinAlgebra& algebra() const noexcept { return carrier.algebra; }
  const FinCoalgebra& coalgebra() const noexcept { return carrier.coalgebra; }
};

/// Fills in Φ⁻¹ when it is not supplied. Throws PreconditionError when the
/// algebra is not associative or Φ has no two-sided inverse.
QuasiBialgebra make_quasi(NCoalgObject carrier, Tensor phi, std::optional<Tensor> phi_inv = std::nullopt);

/// Carrier axioms, invertibility of Φ, qb3 in H^{⊗4}, the three qb4
/// equalities and qb2 on every basis element. Associativity is checked
/// first; the rest is skipped when it fails.
Report check_quasi(const QuasiBialgebra& h);

/// Two-sided inverse of x in H⊗H⊗H. Requires an associative algebra.
std::optional<Tensor> invert_in_tensor_cube(const FinAlgebra& alg, const Tensor& x);

/// Gauge transformation F ∈ H⊗H with its inverse.
struct Twist {
  Tensor f;
  Tensor f_inv;
};

/// Computes F⁻¹ and validates the twist; PreconditionError otherwise.
Twist make_twist(const QuasiBialgebra& h, Tensor f);
/// (id⊗ε)F = 1 = (ε⊗id)F and F·F⁻¹ = F⁻¹·F = 1⊗1.
Verdict check_twist(const QuasiBialgebra& h, const Twist& f);
Twist inverse_twist(const Twist& f);
/// 1⊗1 + λ p⊗p for an idempotent p, with inverse 1⊗1 − λ/(1+λ) p⊗p.
/// λ = −1 is rejected.
Twist idempotent_twist(const QuasiBialgebra& h, const Vec& p, const Scalar& lambda);

/// Δ_F = F·Δ·F⁻¹, Φ_F = (1⊗F)·(id⊗Δ)(F)·Φ·(Δ⊗id)(F⁻¹)·(F⁻¹⊗1).
/// The result is re-verified.
QuasiBialgebra twist(const QuasiBialgebra& h, const Twist& f);

struct QuasiAntipode {
  Mat s;
  Vec alpha;
  Vec beta;
};

/// Anti-multiplicativity and unitality of s, then
///   Σ s(a₁)αa₂ = ε(a)α,  Σ a₁βs(a₂) = ε(a)β,
///   Σ Φ¹βs(Φ²)αΦ³ = 1,   Σ s(φ¹)αφ²βs(φ³) = 1  (φ = Φ⁻¹).
Report check_antipode(const QuasiBialgebra& h, const QuasiAntipode& qa);

/// β_F = Σ F¹βs(F²), α_F = Σ s(f¹)αf² with f = F⁻¹.
QuasiAntipode twist_antipode(const QuasiBialgebra& h, const QuasiAntipode& qa, const Twist& f);

/// Coassociative coalgebra with coalgebra-map m, u and a convolution
/// invertible ω on U⊗U⊗U, stored as its values on basis triples.
struct DualQuasiBialgebra {
  NAlgObject carrier;
  Tensor omega;
  Tensor omega_inv;

  const FinAlgebra& algebra() const noexcept { return carrier.algebra; }
  const FinCoalgebra& coalgebra() const noexcept { return carrier.coalgebra; }
};

DualQuasiBialgebra make_dual_quasi(NAlgObject carrier, Tensor omega, std::optional<Tensor> omega_inv = std::nullopt);

/// Carrier axioms, convolution invertibility of ω, dqb3 on basis
/// quadruples, dqb4 with 1 in each slot, dqb2 on basis triples.
Report check_dual_quasi(const DualQuasiBialgebra& u);

/// H° with ω = η(Φ) and ω⁻¹ = η(Φ⁻¹).
DualQuasiBialgebra finite_dual_quasi(const QuasiBialgebra& h);

/// ζ : (U•)^{⊗3} -> (U^{⊗3})*, f⊗g⊗h ↦ (u⊗v⊗w ↦ f(u)g(v)h(w)).
Tensor zeta(const DualQuasiBialgebra& u, const Tensor& x);
/// The Φ with ζ(Φ) = ω, or nullopt when ω is not in the image.
std::optional<Tensor> split_solve(const DualQuasiBialgebra& u);
/// U• with reassociator split_solve(U). Throws PreconditionError if U is
/// not split.
QuasiBialgebra split_quasi(const DualQuasiBialgebra& u);

/// H -> H°• along η is a bijective morphism of quasi-bialgebras.
bool double_dual_roundtrip(const QuasiBialgebra& h);

/// f : H -> H′ is an algebra and coalgebra map with (f⊗f⊗f)(Φ) = Φ′.
bool check_morphism_quasi(const Mat& f, const QuasiBialgebra& h, const QuasiBialgebra& h2);
/// g : U -> U′ is an algebra and coalgebra map with ω′∘(g⊗g⊗g) = ω.
bool check_morphism_dual_quasi(const Mat& g, const DualQuasiBialgebra& u, const DualQuasiBialgebra& u2);

}  // namespace nacalg
