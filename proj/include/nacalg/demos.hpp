#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nacalg/filtered.hpp"
#include "nacalg/io.hpp"
#include "nacalg/quasi.hpp"

namespace nacalg::demos {

/// Basis e, x, y with e the unit, x² = y, xy = yx = x, y² = x.
/// Commutative, alternative, not associative.
FinAlgebra alt3(const Field& f = Field::rationals());
/// Symmetric 2×2 matrices E11, E22, S = E12 + E21 under a∘b = (ab + ba)/2.
FinAlgebra jordan_sym2(const Field& f = Field::rationals());
/// Matrix units e11, e12, e21, e22.
FinAlgebra matrix2(const Field& f = Field::rationals());
/// Δ(c_ij) = Σ_k c_ik⊗c_kj, ε(c_ij) = δ_ij.
FinCoalgebra comatrix2(const Field& f = Field::rationals());
FinAlgebra ground_field(const Field& f = Field::rationals());

/// k[C₂] = span{1, g} with g group-like.
NCoalgObject group_algebra_c2(const Field& f = Field::rationals());
/// p = (1 − g)/2.
Vec h2_idempotent(const Field& f = Field::rationals());
/// H(2): k[C₂] with Φ = 1⊗1⊗1 − 2 p⊗p⊗p.
QuasiBialgebra h2(const Field& f = Field::rationals());
/// k[C₂] with Φ = 1⊗1⊗1.
QuasiBialgebra h2_trivial(const Field& f = Field::rationals());
/// 1⊗1 + λ p⊗p on H(2).
Twist f_lambda(const QuasiBialgebra& h, const Scalar& lambda);
/// (id, g, 1).
QuasiAntipode h2_antipode(const Field& f = Field::rationals());
/// The Hopf antipode of k[C₂]: (g ↦ g⁻¹ = g, 1, 1).
QuasiAntipode c2_antipode(const Field& f = Field::rationals());

struct DemoEntry {
  std::string name;
  /// algebra, coalgebra, nalg, ncoalg, quasi, dualquasi, twist, antipode or filtered.
  std::string kind;
  std::string summary;
};

const std::vector<DemoEntry>& registry();
const DemoEntry* find(const std::string& name);

/// The demo as a document of its kind. Filtered demos are truncated at
/// `truncation`; kx-nonsplit has no document and yields nullopt.
std::optional<io::Json> document(const std::string& name, const Field& f, std::size_t truncation);

}  // namespace nacalg::demos
