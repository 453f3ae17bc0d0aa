#include "nacalg/coalgebra.hpp"

#include "nacalg/errors.hpp"
#include "nacalg/kernels.hpp"

namespace nacalg {

namespace {

void require_char_not(const Field& f, std::initializer_list<std::int64_t> bad, const char* check) {
  for (auto p : bad)
    if (f.characteristic() == p)
      throw CharacteristicError(std::string(check) + " is undefined in characteristic " + std::to_string(p));
}

Tensor basis_tensor(const FinCoalgebra& c, std::size_t i) {
  return Tensor::from_vec(Vec::unit_vector(c.field(), c.dim(), i));
}

// τ_k acts on slots k-1 and k (1-based, as in τ1 = τ⊗id⊗...).
Tensor tau(const Tensor& t, std::size_t k) { return flip_adjacent(t, k - 1); }

/// Applies τ_{ks[last]} first, then the others right to left.
Tensor tau_composite(Tensor t, std::initializer_list<std::size_t> ks) {
  for (auto it = std::rbegin(ks); it != std::rend(ks); ++it) t = tau(t, *it);
  return t;
}

}  // namespace

FinCoalgebra::FinCoalgebra(std::vector<std::string> basis, Vec counit, Tensor structure)
    : names_(std::move(basis)), counit_(std::move(counit)), d_(std::move(structure)) {
  const std::size_t n = names_.size();
  if (counit_.size() != n) throw DimensionMismatch("counit length differs from basis size");
  if (d_.rank() != 3 || d_.dim() != n) throw DimensionMismatch("comultiplication tensor must be n×n×n");
  if (!(d_.field() == counit_.field())) throw FieldMismatch("counit and structure constants over different fields");
  if (auto bad = check_counital(*this); !bad)
    throw PreconditionError("counit law fails at basis element " + names_[bad.witness[0]], bad.witness);
}

Mat FinCoalgebra::delta(const Vec& x) const {
  if (x.size() != dim()) throw DimensionMismatch("vector outside the coalgebra");
  const std::size_t n = dim();
  Mat m(field(), n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (const auto& c = d_({i, j, k}); !c.is_zero()) m(j, k) += x[i] * c;
  }
  return m;
}

Tensor FinCoalgebra::delta_tensor(const Vec& x) const { return apply_block(Tensor::from_vec(x), 0, comul_block()); }

BlockMap FinCoalgebra::comul_block() const {
  const std::size_t n = dim();
  Mat m(field(), n * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) m(j * n + k, i) = d_({i, j, k});
  return {std::move(m), 1, 2};
}

BlockMap FinCoalgebra::counit_block() const {
  Mat m(field(), 1, dim());
  for (std::size_t i = 0; i < dim(); ++i) m(0, i) = counit_[i];
  return {std::move(m), 1, 0};
}

Verdict check_counital(const FinCoalgebra& c) {
  auto bad = kernels::first_violation(c.dim(), 1, [&](std::span<const std::size_t> t) {
    Tensor e = basis_tensor(c, t[0]);
    Tensor d = apply_block(e, 0, c.comul_block());
    return apply_block(d, 0, c.counit_block()) == e && apply_block(d, 1, c.counit_block()) == e;
  });
  return bad ? Verdict::fail(*bad, "(ε⊗id)Δ ≠ id or (id⊗ε)Δ ≠ id") : Verdict::pass();
}

Verdict check_coassociative(const FinCoalgebra& c) {
  const BlockMap delta = c.comul_block();
  auto bad = kernels::first_violation(c.dim(), 1, [&](std::span<const std::size_t> t) {
    Tensor d = apply_block(basis_tensor(c, t[0]), 0, delta);
    return apply_block(d, 0, delta) == apply_block(d, 1, delta);
  });
  return bad ? Verdict::fail(*bad, "(Δ⊗C)Δ ≠ (C⊗Δ)Δ") : Verdict::pass();
}

Verdict check_cocommutative(const FinCoalgebra& c) {
  auto bad = kernels::first_violation(c.dim(), 1, [&](std::span<const std::size_t> t) {
    Tensor d = c.delta_tensor(Vec::unit_vector(c.field(), c.dim(), t[0]));
    return flip_adjacent(d, 0) == d;
  });
  return bad ? Verdict::fail(*bad, "τΔ ≠ Δ") : Verdict::pass();
}

Tensor coalternative_defect(const FinCoalgebra& c, const Vec& x) {
  const BlockMap delta = c.comul_block();
  Tensor d = c.delta_tensor(x);
  Tensor diff = apply_block(d, 0, delta) - apply_block(d, 1, delta);
  return diff + tau_composite(diff, {1, 2, 1});
}

Verdict check_coalternative(const FinCoalgebra& c) {
  require_char_not(c.field(), {2}, "the coalternative identity");
  auto bad = kernels::first_violation(c.dim(), 1, [&](std::span<const std::size_t> t) {
    return coalternative_defect(c, Vec::unit_vector(c.field(), c.dim(), t[0])).is_zero();
  });
  return bad ? Verdict::fail(*bad, "coalternative composite does not vanish") : Verdict::pass();
}

Tensor jordan_coalgebra_defect(const FinCoalgebra& c, const Vec& x) {
  const BlockMap delta = c.comul_block();
  Tensor d3 = apply_block(c.delta_tensor(x), 0, delta);
  Tensor diff = apply_block(d3, 0, delta) - apply_block(d3, 2, delta);
  return diff + tau_composite(diff, {3, 2, 3}) + tau_composite(diff, {3, 2, 1, 2, 3});
}

Verdict check_jordan_coalgebra(const FinCoalgebra& c) {
  require_char_not(c.field(), {2, 3}, "the Jordan coalgebra identity");
  if (auto cc = check_cocommutative(c); !cc) return Verdict::fail(cc.witness, "not cocommutative");
  auto bad = kernels::first_violation(c.dim(), 1, [&](std::span<const std::size_t> t) {
    return jordan_coalgebra_defect(c, Vec::unit_vector(c.field(), c.dim(), t[0])).is_zero();
  });
  return bad ? Verdict::fail(*bad, "Jordan coalgebra composite does not vanish") : Verdict::pass();
}

Subspace subcoalgebra_closure(const FinCoalgebra& c, const Vec& x) {
  Subspace current = Subspace::span(c.field(), c.dim(), std::span<const Vec>(&x, 1));
  while (true) {
    std::vector<Vec> gens = current.basis_vectors();
    for (const Vec& v : current.basis_vectors()) {
      Mat m = c.delta(v);
      for (std::size_t j = 0; j < c.dim(); ++j) {
        gens.push_back(m.row(j));
        gens.push_back(m.col(j));
      }
    }
    Subspace next = Subspace::span(c.field(), c.dim(), gens);
    if (next.dim() == current.dim()) return current;
    current = std::move(next);
  }
}

bool is_subcoalgebra(const FinCoalgebra& c, const Subspace& d) {
  // Δ(v) ∈ D⊗D iff every row and every column of its coefficient matrix lies in D.
  for (const Vec& v : d.basis_vectors()) {
    Mat m = c.delta(v);
    for (std::size_t j = 0; j < c.dim(); ++j)
      if (!d.contains(m.row(j)) || !d.contains(m.col(j))) return false;
  }
  return true;
}

}  // namespace nacalg
