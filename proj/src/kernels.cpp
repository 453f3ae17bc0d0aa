#include "nacalg/kernels.hpp"

#include <atomic>
#include <exception>
#include <limits>

#include "nacalg/tensor.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace nacalg::kernels {

namespace {

void decode(std::size_t flat, std::size_t range, std::vector<std::size_t>& tuple) {
  for (std::size_t s = tuple.size(); s-- > 0;) {
    tuple[s] = flat % range;
    flat /= range;
  }
}

}  // namespace

std::optional<std::vector<std::size_t>> serial::first_violation(std::size_t range, std::size_t arity,
                                                                const TuplePredicate& holds) {
  const std::size_t total = ipow(range, arity);
  std::vector<std::size_t> tuple(arity);
  for (std::size_t f = 0; f < total; ++f) {
    decode(f, range, tuple);
    if (!holds(tuple)) return tuple;
  }
  return std::nullopt;
}

std::optional<std::vector<std::size_t>> parallel::first_violation(std::size_t range, std::size_t arity,
                                                                  const TuplePredicate& holds) {
  const std::size_t total = ipow(range, arity);
  constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
  std::atomic<std::size_t> best{none};
  std::exception_ptr failure;

#pragma omp parallel
  {
    std::vector<std::size_t> tuple(arity);
#pragma omp for schedule(dynamic, 16)
    for (std::size_t f = 0; f < total; ++f) {
      if (f > best.load(std::memory_order_relaxed)) continue;
      decode(f, range, tuple);
      bool ok = true;
      try {
        ok = holds(tuple);
      } catch (...) {
#pragma omp critical(nacalg_kernel_failure)
        if (!failure) failure = std::current_exception();
        ok = false;
      }
      if (!ok) {
        std::size_t cur = best.load();
        while (f < cur && !best.compare_exchange_weak(cur, f)) {
        }
      }
    }
  }
  if (failure) std::rethrow_exception(failure);
  if (best == none) return std::nullopt;
  std::vector<std::size_t> tuple(arity);
  decode(best, range, tuple);
  return tuple;
}

std::optional<std::vector<std::size_t>> first_violation(std::size_t range, std::size_t arity,
                                                        const TuplePredicate& holds) {
#ifdef _OPENMP
  return parallel::first_violation(range, arity, holds);
#else
  return serial::first_violation(range, arity, holds);
#endif
}

bool openmp_enabled() noexcept {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

}  // namespace nacalg::kernels
