#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"
#include "nacalg/quasi.hpp"

namespace nacalg::io {

using Json = nlohmann::json;

/// Throws ParseError with the line and column of the first syntax error.
Json parse_document(std::string_view text);
Json load_document(const std::string& path);
/// Two-space indented, keys sorted, trailing newline.
std::string dump_document(const Json& doc);

// Readers throw SchemaError naming the offending JSON path. Scalars must be
// strings; bare numbers are rejected. A supplied field overrides the one
// in the document (rational strings are then reduced mod p).

Field read_field(const Json& doc, const std::string& path = "$.field");
Json write_field(const Field& f);

FinAlgebra read_algebra(const Json& doc, const std::optional<Field>& field = std::nullopt);
Json write_algebra(const FinAlgebra& a);

FinCoalgebra read_coalgebra(const Json& doc, const std::optional<Field>& field = std::nullopt);
Json write_coalgebra(const FinCoalgebra& c);

/// {"algebra": ..., "coalgebra": ...} with matching dim and basis.
NAlgObject read_nalg(const Json& doc, const std::optional<Field>& field = std::nullopt);
NCoalgObject read_ncoalg(const Json& doc, const std::optional<Field>& field = std::nullopt);
Json write_nalg(const NAlgObject& x);
Json write_ncoalg(const NCoalgObject& x);

/// NCoalgObject document plus "phi" and optionally "phi_inv", as sparse
/// [i, j, k, "scalar"] entries. A missing inverse is computed; when none
/// exists it is left zero so that check_quasi reports it.
QuasiBialgebra read_quasi(const Json& doc, const std::optional<Field>& field = std::nullopt);
Json write_quasi(const QuasiBialgebra& h);

/// NAlgObject document plus "omega" and optionally "omega_inv" (computed,
/// or zero when ω is not convolution invertible).
DualQuasiBialgebra read_dual_quasi(const Json& doc, const std::optional<Field>& field = std::nullopt);
Json write_dual_quasi(const DualQuasiBialgebra& u);

/// {"f": [[i, j, "scalar"], ...]} and optionally "f_inv".
Twist read_twist(const Json& doc, const QuasiBialgebra& h);
Json write_twist(const Twist& f);

/// {"s": rows of the matrix of s, "alpha": [...], "beta": [...]}.
QuasiAntipode read_antipode(const Json& doc, const FinAlgebra& a);
Json write_antipode(const QuasiAntipode& qa);

}  // namespace nacalg::io
