#include "nacalg/duality.hpp"

#include <cctype>

#include "nacalg/errors.hpp"

namespace nacalg {

namespace {

/// Involutive renaming between a basis and its dual basis: single-case
/// names swap case, anything else toggles a trailing '*'.
std::string dual_name(const std::string& s) {
  if (!s.empty() && s.back() == '*') return s.substr(0, s.size() - 1);
  bool lower = false, upper = false;
  for (unsigned char ch : s) {
    lower |= std::islower(ch) != 0;
    upper |= std::isupper(ch) != 0;
  }
  if (lower == upper) return s + "*";
  std::string out = s;
  for (auto& ch : out) ch = static_cast<char>(lower ? std::toupper(ch) : std::tolower(ch));
  return out;
}

std::vector<std::string> dual_names(const std::vector<std::string>& names) {
  std::vector<std::string> out;
  for (const auto& n : names) out.push_back(dual_name(n));
  return out;
}

/// Swaps the roles of the first and last slots: out(i, j, k) = t(k, i, j)
/// turns c_{ij}^k into d_k^{ij} and back.
Tensor slot_transpose_to_coalgebra(const Tensor& c) {
  const std::size_t n = c.dim();
  Tensor d(c.field(), n, 3);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) d({k, i, j}) = c({i, j, k});
  return d;
}

Tensor slot_transpose_to_algebra(const Tensor& d) {
  const std::size_t n = d.dim();
  Tensor c(d.field(), n, 3);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) c({i, j, k}) = d({k, i, j});
  return c;
}

/// The pairing ⟨e^j, e_i⟩ of the dual basis with the basis.
Scalar pairing(const Field& f, std::size_t n, std::size_t j, std::size_t i) {
  return dot(Vec::unit_vector(f, n, j), Vec::unit_vector(f, n, i));
}

Mat evaluation_matrix(const Field& f, std::size_t n) {
  Mat m(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(j, i) = pairing(f, n, j, i);
  return m;
}

void require_same_field(const Field& a, const Field& b) {
  if (!(a == b)) throw FieldMismatch("objects over " + a.to_string() + " and " + b.to_string());
}

/// Δ(e_i e_j) = Δ(e_i)·Δ(e_j) in A⊗A, Δ(1) = 1⊗1, ε multiplicative, ε(1) = 1.
void add_compatibility(Report& r, const FinAlgebra& a, const FinCoalgebra& c) {
  const std::size_t n = a.dim();
  std::optional<std::vector<std::size_t>> bad_delta, bad_eps;
  for (std::size_t i = 0; i < n && !bad_delta; ++i)
    for (std::size_t j = 0; j < n && !bad_delta; ++j) {
      Vec prod = a.mul(a.basis_vector(i), a.basis_vector(j));
      Tensor lhs = c.delta_tensor(prod);
      Tensor rhs = mul_power(a, c.delta_tensor(a.basis_vector(i)), c.delta_tensor(a.basis_vector(j)));
      if (!(lhs == rhs)) bad_delta = std::vector<std::size_t>{i, j};
    }
  for (std::size_t i = 0; i < n && !bad_eps; ++i)
    for (std::size_t j = 0; j < n && !bad_eps; ++j) {
      Vec prod = a.mul(a.basis_vector(i), a.basis_vector(j));
      if (!(dot(c.counit(), prod) == c.counit()[i] * c.counit()[j])) bad_eps = std::vector<std::size_t>{i, j};
    }
  r.add("Δ multiplicative", bad_delta ? Verdict::fail(*bad_delta, "Δ(xy) ≠ Δ(x)Δ(y)") : Verdict::pass());
  r.add("Δ(1) = 1⊗1", c.delta_tensor(a.unit()) == one_power(a, 2) ? Verdict::pass() : Verdict::fail({}));
  r.add("ε multiplicative", bad_eps ? Verdict::fail(*bad_eps, "ε(xy) ≠ ε(x)ε(y)") : Verdict::pass());
  r.add("ε(1) = 1", dot(c.counit(), a.unit()).is_one() ? Verdict::pass() : Verdict::fail({}));
}

void require_shared_space(const FinAlgebra& a, const FinCoalgebra& c) {
  require_same_field(a.field(), c.field());
  if (a.dim() != c.dim()) throw DimensionMismatch("algebra and coalgebra live on spaces of different dimension");
}

const CheckEntry* first_failure(const Report& r) {
  for (const auto& e : r.entries)
    if (e.required && e.status != Status::Pass) return &e;
  return nullptr;
}

}  // namespace

FinCoalgebra dual_coalgebra(const FinAlgebra& a) {
  return FinCoalgebra(dual_names(a.basis()), a.unit(), slot_transpose_to_coalgebra(a.structure()));
}

FinAlgebra convolution_algebra(const FinCoalgebra& c) {
  return FinAlgebra(dual_names(c.basis()), c.counit(), slot_transpose_to_algebra(c.structure()));
}

bool finite_dual_is_full_dual(const FinAlgebra& a) {
  for (std::size_t i = 0; i < a.dim(); ++i) {
    auto chain = w_spaces(a, Vec::unit_vector(a.field(), a.dim(), i), a.dim());
    if (chain.back().dim() > a.dim()) return false;
  }
  return true;
}

bool good_subspace_check(const FinAlgebra& a, const Subspace& v) {
  const std::size_t n = a.dim();
  if (v.ambient() != n) throw DimensionMismatch("subspace does not live in A*");
  auto gens = v.basis_vectors();
  // Spanning set of V⊗V inside (A⊗A)*, one column per pair.
  Mat span(a.field(), n * n, gens.size() * gens.size());
  for (std::size_t p = 0; p < gens.size(); ++p)
    for (std::size_t q = 0; q < gens.size(); ++q)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) span(i * n + j, p * gens.size() + q) = gens[p][i] * gens[q][j];
  const BlockMap m = a.mul_block();
  for (const Vec& f : gens) {
    // m*(f) = f ∘ m as a functional on A⊗A.
    Vec pulled(a.field(), n * n);
    for (std::size_t col = 0; col < n * n; ++col)
      for (std::size_t k = 0; k < n; ++k)
        if (!m.matrix(k, col).is_zero()) pulled[col] += f[k] * m.matrix(k, col);
    if (gens.empty() ? !pulled.is_zero() : !solve_linear(span, pulled)) return false;
  }
  return true;
}

Mat eta(const FinAlgebra& a) { return evaluation_matrix(a.field(), a.dim()); }
Mat theta(const FinCoalgebra& c) { return evaluation_matrix(c.field(), c.dim()); }

Verdict is_algebra_morphism(const Mat& f, const FinAlgebra& a, const FinAlgebra& b) {
  if (f.rows() != b.dim() || f.cols() != a.dim()) throw DimensionMismatch("map shape does not match the algebras");
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      Vec lhs = f * a.mul(a.basis_vector(i), a.basis_vector(j));
      Vec rhs = b.mul(f.col(i), f.col(j));
      if (!(lhs == rhs)) return Verdict::fail({i, j}, "f(xy) ≠ f(x)f(y)");
    }
  if (!(f * a.unit() == b.unit())) return Verdict::fail({}, "f(1) ≠ 1");
  return Verdict::pass();
}

Verdict is_coalgebra_morphism(const Mat& g, const FinCoalgebra& c, const FinCoalgebra& d) {
  if (g.rows() != d.dim() || g.cols() != c.dim()) throw DimensionMismatch("map shape does not match the coalgebras");
  for (std::size_t i = 0; i < c.dim(); ++i) {
    Vec e = Vec::unit_vector(c.field(), c.dim(), i);
    Tensor lhs = map_all_slots(c.delta_tensor(e), g);
    Tensor rhs = d.delta_tensor(g * e);
    if (!(lhs == rhs)) return Verdict::fail({i}, "(g⊗g)Δ ≠ Δg");
    if (!(dot(d.counit(), g * e) == c.counit()[i])) return Verdict::fail({i}, "εg ≠ ε");
  }
  return Verdict::pass();
}

bool triangle_check(const FinAlgebra& a) {
  FinCoalgebra a_dot = dual_coalgebra(a);
  FinAlgebra a_dot_star = convolution_algebra(a_dot);
  Mat e = eta(a);
  Mat t = theta(a_dot);
  if (!is_algebra_morphism(e, a, a_dot_star)) return false;
  if (!is_coalgebra_morphism(t, a_dot, dual_coalgebra(a_dot_star))) return false;
  return e.transpose() * t == Mat::identity(a.field(), a.dim());
}

bool triangle_check_c(const FinCoalgebra& c) {
  FinAlgebra c_star = convolution_algebra(c);
  Mat t = theta(c);
  Mat e = eta(c_star);
  if (!is_coalgebra_morphism(t, c, dual_coalgebra(c_star))) return false;
  if (!is_algebra_morphism(e, c_star, convolution_algebra(dual_coalgebra(c_star)))) return false;
  return t.transpose() * e == Mat::identity(c.field(), c.dim());
}

FinAlgebra tensor_algebra(const FinAlgebra& a, const FinAlgebra& b) {
  require_same_field(a.field(), b.field());
  const std::size_t na = a.dim(), nb = b.dim(), n = na * nb;
  std::vector<std::string> names;
  Vec unit(a.field(), n);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) {
      names.push_back(a.basis()[i] + "⊗" + b.basis()[j]);
      unit[i * nb + j] = a.unit()[i] * b.unit()[j];
    }
  Tensor c(a.field(), n, 3);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t k = 0; k < na; ++k)
      for (const auto& [p, ca] : a.basis_product(i, k))
        for (std::size_t j = 0; j < nb; ++j)
          for (std::size_t l = 0; l < nb; ++l)
            for (const auto& [q, cb] : b.basis_product(j, l)) c({i * nb + j, k * nb + l, p * nb + q}) = ca * cb;
  return FinAlgebra(std::move(names), std::move(unit), std::move(c));
}

FinCoalgebra tensor_coalgebra(const FinCoalgebra& c, const FinCoalgebra& d) {
  require_same_field(c.field(), d.field());
  const std::size_t nc = c.dim(), nd = d.dim(), n = nc * nd;
  std::vector<std::string> names;
  Vec counit(c.field(), n);
  for (std::size_t i = 0; i < nc; ++i)
    for (std::size_t j = 0; j < nd; ++j) {
      names.push_back(c.basis()[i] + "⊗" + d.basis()[j]);
      counit[i * nd + j] = c.counit()[i] * d.counit()[j];
    }
  Tensor t(c.field(), n, 3);
  const Tensor& dc = c.structure();
  const Tensor& dd = d.structure();
  for (std::size_t i = 0; i < nc; ++i)
    for (std::size_t k = 0; k < nc; ++k)
      for (std::size_t p = 0; p < nc; ++p) {
        if (dc({i, k, p}).is_zero()) continue;
        for (std::size_t j = 0; j < nd; ++j)
          for (std::size_t l = 0; l < nd; ++l)
            for (std::size_t q = 0; q < nd; ++q)
              if (!dd({j, l, q}).is_zero()) t({i * nd + j, k * nd + l, p * nd + q}) = dc({i, k, p}) * dd({j, l, q});
      }
  return FinCoalgebra(std::move(names), std::move(counit), std::move(t));
}

Mat phi_prime(const FinAlgebra& a, const FinAlgebra& b) {
  require_same_field(a.field(), b.field());
  const std::size_t na = a.dim(), nb = b.dim();
  Mat m(a.field(), na * nb, na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      for (std::size_t k = 0; k < na; ++k)
        for (std::size_t l = 0; l < nb; ++l)
          m(k * nb + l, i * nb + j) = pairing(a.field(), na, i, k) * pairing(b.field(), nb, j, l);
  return m;
}

Mat psi(const FinAlgebra& a, const FinAlgebra& b) {
  require_same_field(a.field(), b.field());
  const std::size_t na = a.dim(), nb = b.dim();
  // i_A : A -> A⊗B, a ↦ a⊗1 and i_B : B -> A⊗B, b ↦ 1⊗b.
  Mat inc_a(a.field(), na * nb, na), inc_b(a.field(), na * nb, nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) {
      inc_a(i * nb + j, i) = b.unit()[j];
      inc_b(i * nb + j, j) = a.unit()[i];
    }
  FinCoalgebra ab_dot = dual_coalgebra(tensor_algebra(a, b));
  return kron(inc_a.transpose(), inc_b.transpose()) * ab_dot.comul_block().matrix;
}

bool phi_iso_check(const FinAlgebra& a, const FinAlgebra& b) {
  Mat fwd = phi_prime(a, b), back = psi(a, b);
  const auto id = Mat::identity(a.field(), a.dim() * b.dim());
  if (!(fwd * back == id) || !(back * fwd == id)) return false;
  return static_cast<bool>(is_coalgebra_morphism(fwd, tensor_coalgebra(dual_coalgebra(a), dual_coalgebra(b)),
                                                 dual_coalgebra(tensor_algebra(a, b))));
}

Report check_ncoalg(const NCoalgObject& x) {
  require_shared_space(x.algebra, x.coalgebra);
  Report r;
  r.add("associative", check_associative(x.algebra));
  r.add("unital", check_unital(x.algebra));
  r.add("counital", check_counital(x.coalgebra));
  add_compatibility(r, x.algebra, x.coalgebra);
  return r;
}

Report check_nalg(const NAlgObject& y) {
  require_shared_space(y.algebra, y.coalgebra);
  Report r;
  r.add("coassociative", check_coassociative(y.coalgebra));
  r.add("counital", check_counital(y.coalgebra));
  r.add("unital", check_unital(y.algebra));
  add_compatibility(r, y.algebra, y.coalgebra);
  return r;
}

NAlgObject lift_dual(const NCoalgObject& x) {
  const Report pre = check_ncoalg(x);
  if (auto bad = first_failure(pre))
    throw PreconditionError("not an algebra with comultiplication and counit: " + bad->name + " fails", bad->witness);
  NAlgObject y{dual_coalgebra(x.algebra), convolution_algebra(x.coalgebra)};
  const Report post = check_nalg(y);
  if (auto bad = first_failure(post)) throw Error("dual object fails " + bad->name);
  return y;
}

NCoalgObject lift_dual_rev(const NAlgObject& y) {
  const Report pre = check_nalg(y);
  if (auto bad = first_failure(pre))
    throw PreconditionError("not a coalgebra with multiplication and unit: " + bad->name + " fails", bad->witness);
  NCoalgObject x{convolution_algebra(y.coalgebra), dual_coalgebra(y.algebra)};
  const Report post = check_ncoalg(x);
  if (auto bad = first_failure(post)) throw Error("dual object fails " + bad->name);
  return x;
}

Verdict module_algebra_check(const FinCoalgebra& c, const FinCoalgebra& d, const Mat& act) {
  require_same_field(c.field(), d.field());
  const std::size_t nc = c.dim(), nd = d.dim();
  if (act.rows() != nd || act.cols() != nd * nc) throw DimensionMismatch("action matrix must be dim D × dim D·dim C");
  auto acted = [&](std::size_t p, std::size_t q) { return act.col(p * nc + q); };

  // D⊗C -> D must be a coalgebra map.
  for (std::size_t p = 0; p < nd; ++p)
    for (std::size_t q = 0; q < nc; ++q) {
      Mat lhs = d.delta(acted(p, q));
      Mat rhs(d.field(), nd, nd);
      Mat dp = d.delta(Vec::unit_vector(d.field(), nd, p));
      Mat cq = c.delta(Vec::unit_vector(c.field(), nc, q));
      for (std::size_t u = 0; u < nd; ++u)
        for (std::size_t v = 0; v < nd; ++v) {
          if (dp(u, v).is_zero()) continue;
          for (std::size_t s = 0; s < nc; ++s)
            for (std::size_t t = 0; t < nc; ++t) {
              if (cq(s, t).is_zero()) continue;
              Scalar coeff = dp(u, v) * cq(s, t);
              Vec left = acted(u, s), right = acted(v, t);
              for (std::size_t x = 0; x < nd; ++x)
                for (std::size_t y = 0; y < nd; ++y)
                  if (!left[x].is_zero() && !right[y].is_zero()) rhs(x, y) += coeff * left[x] * right[y];
            }
        }
      bool counit_ok = dot(d.counit(), acted(p, q)) == d.counit()[p] * c.counit()[q];
      if (!(lhs == rhs) || !counit_ok)
        throw PreconditionError("action is not a coalgebra map at (" + d.basis()[p] + ", " + c.basis()[q] + ")",
                                {p, q});
    }

  FinAlgebra d_star = convolution_algebra(d);
  // (c_q ▶ f)(e_p) = f(e_p ◀ c_q): the transpose of the action block for q.
  auto hit = [&](std::size_t q, const Vec& f) {
    Vec out(d.field(), nd);
    for (std::size_t p = 0; p < nd; ++p) out[p] = dot(f, acted(p, q));
    return out;
  };
  for (std::size_t q = 0; q < nc; ++q) {
    Mat cq = c.delta(Vec::unit_vector(c.field(), nc, q));
    for (std::size_t a = 0; a < nd; ++a)
      for (std::size_t b = 0; b < nd; ++b) {
        Vec f = Vec::unit_vector(d.field(), nd, a), g = Vec::unit_vector(d.field(), nd, b);
        Vec lhs = hit(q, d_star.mul(f, g));
        Vec rhs(d.field(), nd);
        for (std::size_t s = 0; s < nc; ++s)
          for (std::size_t t = 0; t < nc; ++t)
            if (!cq(s, t).is_zero()) rhs += cq(s, t) * d_star.mul(hit(s, f), hit(t, g));
        if (!(lhs == rhs)) return Verdict::fail({q, a, b}, "c▶(f∗g) ≠ Σ (c₁▶f)∗(c₂▶g)");
      }
    if (!(hit(q, d.counit()) == c.counit()[q] * d.counit())) return Verdict::fail({q}, "c▶ε ≠ ε(c)ε");
  }
  return Verdict::pass();
}

}  // namespace nacalg
