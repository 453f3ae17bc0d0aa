#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace nacalg::kernels {

/// Returns true when the identity holds at the given basis tuple. Must be
/// safe to call concurrently.
using TuplePredicate = std::function<bool(std::span<const std::size_t>)>;

/// Sweeps all tuples in {0..range-1}^arity in lexicographic order and
/// returns the first one where `holds` is false.
namespace serial {
std::optional<std::vector<std::size_t>> first_violation(std::size_t range, std::size_t arity,
                                                        const TuplePredicate& holds);
}

/// Same contract as serial::first_violation, evaluated with OpenMP. The
/// returned witness is the lexicographically first violation, so results
/// match the serial sweep exactly.
namespace parallel {
std::optional<std::vector<std::size_t>> first_violation(std::size_t range, std::size_t arity,
                                                        const TuplePredicate& holds);
}

/// The sweep used by the checkers: parallel when built with OpenMP.
std::optional<std::vector<std::size_t>> first_violation(std::size_t range, std::size_t arity,
                                                        const TuplePredicate& holds);

bool openmp_enabled() noexcept;

}  // namespace nacalg::kernels
