#include "nacalg/algebra.hpp"

#include "nacalg/errors.hpp"
#include "nacalg/kernels.hpp"

namespace nacalg {

namespace {

void require_nonempty(const FinAlgebra& a, const char* check) {
  if (a.dim() == 0) throw PreconditionError(std::string(check) + " needs a nonzero algebra");
}

void require_char_not(const Field& f, std::initializer_list<std::int64_t> bad, const char* check) {
  for (auto p : bad)
    if (f.characteristic() == p)
      throw CharacteristicError(std::string(check) + " is undefined in characteristic " + std::to_string(p));
}

// Basis-product helpers returning dense vectors.
Vec prod(const FinAlgebra& a, std::size_t i, std::size_t j) {
  Vec v(a.field(), a.dim());
  for (const auto& [k, c] : a.basis_product(i, j)) v[k] = c;
  return v;
}

void add_scaled_product(const FinAlgebra& alg, const Vec& x, std::size_t j, bool x_left, Vec& out) {
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    if (x[i].is_zero()) continue;
    const auto& terms = x_left ? alg.basis_product(i, j) : alg.basis_product(j, i);
    for (const auto& [k, c] : terms) out[k] += x[i] * c;
  }
}

}  // namespace

FinAlgebra::FinAlgebra(std::vector<std::string> basis, Vec unit, Tensor structure)
    : names_(std::move(basis)), unit_(std::move(unit)), c_(std::move(structure)) {
  const std::size_t n = names_.size();
  if (unit_.size() != n) throw DimensionMismatch("unit vector length differs from basis size");
  if (c_.rank() != 3 || c_.dim() != n) throw DimensionMismatch("structure tensor must be n×n×n");
  if (!(c_.field() == unit_.field())) throw FieldMismatch("unit and structure constants over different fields");

  table_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (const auto& s = c_({i, j, k}); !s.is_zero()) table_[i * n + j].emplace_back(k, s);

  for (std::size_t i = 0; i < n; ++i) {
    Vec e = basis_vector(i);
    if (!(mul(unit_, e) == e) || !(mul(e, unit_) == e))
      throw PreconditionError("unit law fails at basis element " + names_[i], {i});
  }
}

Vec FinAlgebra::mul(const Vec& a, const Vec& b) const {
  if (a.size() != dim() || b.size() != dim()) throw DimensionMismatch("multiplying vectors outside the algebra");
  Vec out(field(), dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (b[j].is_zero()) continue;
      Scalar ab = a[i] * b[j];
      for (const auto& [k, c] : basis_product(i, j)) out[k] += ab * c;
    }
  }
  return out;
}

BlockMap FinAlgebra::mul_block() const {
  const std::size_t n = dim();
  Mat m(field(), n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [k, c] : basis_product(i, j)) m(k, i * n + j) = c;
  return {std::move(m), 2, 1};
}

BlockMap FinAlgebra::unit_block() const {
  Mat m(field(), dim(), 1);
  for (std::size_t i = 0; i < dim(); ++i) m(i, 0) = unit_[i];
  return {std::move(m), 0, 1};
}

Verdict check_unital(const FinAlgebra& a) {
  require_nonempty(a, "unitality check");
  auto bad = kernels::first_violation(a.dim(), 1, [&](std::span<const std::size_t> t) {
    Vec e = a.basis_vector(t[0]);
    return a.mul(a.unit(), e) == e && a.mul(e, a.unit()) == e;
  });
  return bad ? Verdict::fail(*bad, "1·e ≠ e or e·1 ≠ e") : Verdict::pass();
}

Verdict check_associative(const FinAlgebra& a) {
  require_nonempty(a, "associativity check");
  auto bad = kernels::first_violation(a.dim(), 3, [&](std::span<const std::size_t> t) {
    return a.mul(prod(a, t[0], t[1]), a.basis_vector(t[2])) == a.mul(a.basis_vector(t[0]), prod(a, t[1], t[2]));
  });
  return bad ? Verdict::fail(*bad, "(xy)z ≠ x(yz)") : Verdict::pass();
}

Verdict check_commutative(const FinAlgebra& a) {
  require_nonempty(a, "commutativity check");
  auto bad = kernels::first_violation(a.dim(), 2, [&](std::span<const std::size_t> t) {
    return a.basis_product(t[0], t[1]) == a.basis_product(t[1], t[0]);
  });
  return bad ? Verdict::fail(*bad, "xy ≠ yx") : Verdict::pass();
}

Verdict check_alternative(const FinAlgebra& a) {
  require_char_not(a.field(), {2}, "the alternative identity");
  require_nonempty(a, "alternative check");
  auto bad = kernels::first_violation(a.dim(), 3, [&](std::span<const std::size_t> t) {
    Vec x = a.basis_vector(t[0]), y = a.basis_vector(t[1]), z = a.basis_vector(t[2]);
    Vec lhs = a.mul(x, prod(a, t[1], t[2])) + a.mul(z, prod(a, t[1], t[0]));
    Vec rhs = a.mul(prod(a, t[0], t[1]), z) + a.mul(prod(a, t[2], t[1]), x);
    return lhs == rhs;
  });
  return bad ? Verdict::fail(*bad, "x(yz) + z(yx) ≠ (xy)z + (zy)x") : Verdict::pass();
}

Verdict check_jordan(const FinAlgebra& a) {
  require_char_not(a.field(), {2, 3}, "the Jordan identity");
  require_nonempty(a, "Jordan check");
  if (auto comm = check_commutative(a); !comm) return Verdict::fail(comm.witness, "not commutative");
  auto bad = kernels::first_violation(a.dim(), 4, [&](std::span<const std::size_t> t) {
    const std::size_t x = t[0], y = t[1], z = t[2], w = t[3];
    Vec ez = a.basis_vector(z);
    Vec lhs = a.mul(a.mul(prod(a, x, y), ez), a.basis_vector(w)) +
              a.mul(a.mul(prod(a, x, w), ez), a.basis_vector(y)) +
              a.mul(a.mul(prod(a, w, y), ez), a.basis_vector(x));
    Vec rhs = a.mul(prod(a, x, y), prod(a, z, w)) + a.mul(prod(a, x, w), prod(a, z, y)) +
              a.mul(prod(a, w, y), prod(a, z, x));
    return lhs == rhs;
  });
  return bad ? Verdict::fail(*bad, "linearized Jordan identity fails") : Verdict::pass();
}

IdealWitness ideal_closure(const FinAlgebra& a, std::span<const Vec> generators) {
  Subspace current = Subspace::span(a.field(), a.dim(), generators);
  while (true) {
    std::vector<Vec> gens = current.basis_vectors();
    for (const Vec& v : current.basis_vectors())
      for (std::size_t i = 0; i < a.dim(); ++i) {
        gens.push_back(a.mul(a.basis_vector(i), v));
        gens.push_back(a.mul(v, a.basis_vector(i)));
      }
    Subspace next = Subspace::span(a.field(), a.dim(), gens);
    if (next.dim() == current.dim()) break;
    current = std::move(next);
  }
  const std::size_t codim = a.dim() - current.dim();
  return {std::move(current), codim};
}

std::optional<std::vector<std::size_t>> ideal_violation(const FinAlgebra& a, const Subspace& s) {
  if (s.ambient() != a.dim()) throw DimensionMismatch("subspace does not live in the algebra");
  for (std::size_t r = 0; r < s.dim(); ++r) {
    Vec v = s.basis().row(r);
    for (std::size_t i = 0; i < a.dim(); ++i) {
      Vec e = a.basis_vector(i);
      if (!s.contains(a.mul(e, v)) || !s.contains(a.mul(v, e))) return std::vector<std::size_t>{i, r};
    }
  }
  return std::nullopt;
}

Quotient quotient(const FinAlgebra& a, const Subspace& ideal) {
  if (auto bad = ideal_violation(a, ideal))
    throw PreconditionError("subspace is not an ideal: basis element " + a.basis()[(*bad)[0]] +
                                " moves ideal generator " + std::to_string((*bad)[1]) + " outside",
                            *bad);
  const std::size_t n = a.dim();
  std::vector<bool> pivot(n, false);
  for (auto p : ideal.pivots()) pivot[p] = true;
  std::vector<std::size_t> keep;
  std::vector<std::string> names;
  for (std::size_t j = 0; j < n; ++j)
    if (!pivot[j]) {
      keep.push_back(j);
      names.push_back(a.basis()[j]);
    }
  const std::size_t q = keep.size();

  Mat proj(a.field(), q, n);
  for (std::size_t j = 0; j < n; ++j) {
    Vec r = ideal.reduce(a.basis_vector(j));
    for (std::size_t t = 0; t < q; ++t) proj(t, j) = r[keep[t]];
  }
  Vec unit = proj * a.unit();
  auto algebra = make_algebra(a.field(), std::move(names), unit, [&](std::size_t i, std::size_t j) {
    return proj * prod(a, keep[i], keep[j]);
  });
  return {std::move(algebra), std::move(proj)};
}

Vec hit_left(const FinAlgebra& alg, const Vec& a, const Vec& f) {
  Vec out(alg.field(), alg.dim());
  for (std::size_t j = 0; j < alg.dim(); ++j) {
    Vec ba(alg.field(), alg.dim());
    for (std::size_t i = 0; i < alg.dim(); ++i)
      if (!a[i].is_zero())
        for (const auto& [k, c] : alg.basis_product(j, i)) ba[k] += a[i] * c;
    out[j] = dot(f, ba);
  }
  return out;
}

Vec hit_right(const FinAlgebra& alg, const Vec& f, const Vec& a) {
  Vec out(alg.field(), alg.dim());
  for (std::size_t j = 0; j < alg.dim(); ++j) {
    Vec ab(alg.field(), alg.dim());
    add_scaled_product(alg, a, j, true, ab);
    out[j] = dot(f, ab);
  }
  return out;
}

Vec env_act(const FinAlgebra& alg, const Vec& x, const Vec& l, const Vec& r) {
  return alg.mul(r, alg.mul(x, l));
}

Vec env_act_dual(const FinAlgebra& alg, const Vec& l, const Vec& r, const Vec& f) {
  Vec out(alg.field(), alg.dim());
  for (std::size_t j = 0; j < alg.dim(); ++j) out[j] = dot(f, env_act(alg, alg.basis_vector(j), l, r));
  return out;
}

std::vector<Subspace> w_spaces(const FinAlgebra& alg, const Vec& f, std::size_t nmax) {
  std::vector<Subspace> chain;
  chain.push_back(Subspace::span(alg.field(), alg.dim(), std::span<const Vec>(&f, 1)));
  for (std::size_t n = 1; n <= nmax; ++n) {
    const Subspace& prev = chain.back();
    std::vector<Vec> gens = prev.basis_vectors();
    for (const Vec& w : prev.basis_vectors())
      for (std::size_t i = 0; i < alg.dim(); ++i) {
        Vec e = alg.basis_vector(i);
        gens.push_back(hit_left(alg, e, w));
        gens.push_back(hit_right(alg, w, e));
      }
    chain.push_back(Subspace::span(alg.field(), alg.dim(), gens));
  }
  return chain;
}

std::vector<Subspace> i_chain(const FinAlgebra& alg, const Vec& f, std::size_t nmax) {
  const std::size_t n = alg.dim();
  std::vector<Subspace> chain;
  chain.push_back(kernel(Mat::from_rows(alg.field(), n, std::span<const Vec>(&f, 1))));

  // images[l][r][j] = e_j ◀ (e_l ⊗ e_r)
  std::vector<Vec> images;
  images.reserve(n * n * n);
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t j = 0; j < n; ++j)
        images.push_back(env_act(alg, alg.basis_vector(j), alg.basis_vector(l), alg.basis_vector(r)));

  for (std::size_t step = 1; step <= nmax; ++step) {
    Subspace ann = annihilator(chain.back());
    std::vector<Vec> rows;
    for (const Vec& g : ann.basis_vectors())
      for (std::size_t lr = 0; lr < n * n; ++lr) {
        Vec row(alg.field(), n);
        for (std::size_t j = 0; j < n; ++j) row[j] = dot(g, images[lr * n + j]);
        rows.push_back(std::move(row));
      }
    chain.push_back(kernel(Mat::from_rows(alg.field(), n, rows)));
  }
  return chain;
}

Tensor one_power(const FinAlgebra& alg, std::size_t k) {
  Tensor t(alg.field(), alg.dim(), 0);
  t.flat(0) = alg.field().one();
  Tensor u = Tensor::from_vec(alg.unit());
  for (std::size_t i = 0; i < k; ++i) t = outer(t, u);
  return t;
}

Tensor mul_power(const FinAlgebra& alg, const Tensor& x, const Tensor& y) {
  if (x.rank() != y.rank() || x.dim() != alg.dim() || y.dim() != alg.dim())
    throw DimensionMismatch("multiplying tensors of different shapes");
  const std::size_t k = x.rank();
  Tensor out(alg.field(), alg.dim(), k);
  std::vector<std::size_t> xi, yi;
  for (std::size_t a = 0; a < x.size(); ++a) {
    if (x.flat(a).is_zero()) continue;
    xi = x.multi_index(a);
    for (std::size_t b = 0; b < y.size(); ++b) {
      if (y.flat(b).is_zero()) continue;
      yi = y.multi_index(b);
      // Expand ⊗_s (e_{xi[s]} e_{yi[s]}) slot by slot.
      std::vector<std::pair<std::size_t, Scalar>> partial{{0, x.flat(a) * y.flat(b)}};
      for (std::size_t s = 0; s < k && !partial.empty(); ++s) {
        const auto& terms = alg.basis_product(xi[s], yi[s]);
        std::vector<std::pair<std::size_t, Scalar>> next;
        next.reserve(partial.size() * terms.size());
        for (const auto& [idx, c] : partial)
          for (const auto& [kk, d] : terms) next.emplace_back(idx * alg.dim() + kk, c * d);
        partial = std::move(next);
      }
      for (const auto& [idx, c] : partial) out.flat(idx) += c;
    }
  }
  return out;
}

std::optional<Tensor> invert_power(const FinAlgebra& alg, const Tensor& x) {
  const std::size_t k = x.rank();
  const std::size_t size = x.size();
  Mat left(alg.field(), size, size);
  for (std::size_t j = 0; j < size; ++j) {
    Tensor e(alg.field(), alg.dim(), k);
    e.flat(j) = alg.field().one();
    Tensor col = mul_power(alg, x, e);
    for (std::size_t i = 0; i < size; ++i) left(i, j) = col.flat(i);
  }
  Tensor one = one_power(alg, k);
  auto sol = solve_linear(left, one.as_vec());
  if (!sol) return std::nullopt;
  Tensor y = Tensor::from_flat(*sol, alg.dim(), k);
  if (!(mul_power(alg, x, y) == one) || !(mul_power(alg, y, x) == one)) return std::nullopt;
  return y;
}

}  // namespace nacalg
