#include "nacalg/quasi.hpp"

#include <array>

#include "nacalg/errors.hpp"
#include "nacalg/kernels.hpp"

namespace nacalg {

namespace {

Verdict compare(const Tensor& lhs, const Tensor& rhs, std::string detail) {
  if (auto diff = first_difference(lhs, rhs)) return Verdict::fail(*diff, std::move(detail));
  return Verdict::pass();
}

Tensor unit_tensor(const FinAlgebra& a) { return Tensor::from_vec(a.unit()); }

Vec basis_mul(const FinAlgebra& a, std::size_t i, std::size_t j) {
  Vec out(a.field(), a.dim());
  for (const auto& [k, c] : a.basis_product(i, j)) out[k] += c;
  return out;
}

struct Term {
  std::size_t left, right;
  Scalar coeff;
};

std::vector<Term> sparse_delta(const FinCoalgebra& c, std::size_t i) {
  std::vector<Term> out;
  for (std::size_t j = 0; j < c.dim(); ++j)
    for (std::size_t k = 0; k < c.dim(); ++k)
      if (const Scalar& v = c.structure()({i, j, k}); !v.is_zero()) out.push_back({j, k, v});
  return out;
}

void require_rank3(const Tensor& t, std::size_t n, const char* what) {
  if (t.rank() != 3 || t.dim() != n) throw DimensionMismatch(std::string(what) + " must be a 3-index array over the carrier");
}

void require_associative(const FinAlgebra& a) {
  if (Verdict v = check_associative(a); !v) throw PreconditionError("carrier algebra is not associative", v.witness);
}

/// Pairing of U• with U: column a is the functional f_a evaluated on the
/// basis of U.
Mat pairing(const FinCoalgebra& u) { return theta(u).transpose(); }

}  // namespace

QuasiBialgebra make_quasi(NCoalgObject carrier, Tensor phi, std::optional<Tensor> phi_inv) {
  const FinAlgebra& a = carrier.algebra;
  require_rank3(phi, a.dim(), "Φ");
  require_associative(a);
  if (!phi_inv) {
    phi_inv = invert_in_tensor_cube(a, phi);
    if (!phi_inv) throw PreconditionError("reassociator is not invertible in H⊗H⊗H");
  }
  require_rank3(*phi_inv, a.dim(), "Φ⁻¹");
  return QuasiBialgebra{std::move(carrier), std::move(phi), std::move(*phi_inv)};
}

std::optional<Tensor> invert_in_tensor_cube(const FinAlgebra& alg, const Tensor& x) {
  require_rank3(x, alg.dim(), "element");
  require_associative(alg);
  return invert_power(alg, x);
}

Report check_quasi(const QuasiBialgebra& h) {
  const FinAlgebra& a = h.algebra();
  const FinCoalgebra& c = h.coalgebra();
  require_rank3(h.phi, a.dim(), "Φ");
  require_rank3(h.phi_inv, a.dim(), "Φ⁻¹");
  Report r = check_ncoalg(h.carrier);
  if (!r.passed("associative")) {
    for (const char* name : {"Φ invertible", "qb3", "qb4", "qb2"}) r.skip(name, "carrier algebra is not associative");
    return r;
  }

  const Tensor one3 = one_power(a, 3);
  const Tensor& phi = h.phi;
  Verdict inv = compare(mul_power(a, phi, h.phi_inv), one3, "Φ·Φ⁻¹ ≠ 1⊗1⊗1");
  if (inv) inv = compare(mul_power(a, h.phi_inv, phi), one3, "Φ⁻¹·Φ ≠ 1⊗1⊗1");
  r.add("Φ invertible", inv);

  const BlockMap delta = c.comul_block();
  const BlockMap eps = c.counit_block();
  const Tensor one = unit_tensor(a);

  Tensor lhs3 = mul_power(a, apply_block(phi, 2, delta), apply_block(phi, 0, delta));
  Tensor rhs3 = mul_power(a, mul_power(a, outer(one, phi), apply_block(phi, 1, delta)), outer(phi, one));
  r.add("qb3", compare(lhs3, rhs3, "(id⊗id⊗Δ)Φ·(Δ⊗id⊗id)Φ ≠ (1⊗Φ)·(id⊗Δ⊗id)Φ·(Φ⊗1)"));

  const Tensor one2 = one_power(a, 2);
  Verdict qb4 = Verdict::pass();
  for (std::size_t slot = 0; slot < 3 && qb4; ++slot)
    if (auto diff = first_difference(apply_block(phi, slot, eps), one2)) {
      std::vector<std::size_t> w{slot};
      w.insert(w.end(), diff->begin(), diff->end());
      qb4 = Verdict::fail(std::move(w), "ε in slot " + std::to_string(slot) + " does not give 1⊗1");
    }
  r.add("qb4", qb4);

  auto qb2_holds = [&](std::span<const std::size_t> t) {
    Tensor dd = c.delta_tensor(a.basis_vector(t[0]));
    return mul_power(a, phi, apply_block(dd, 0, delta)) == mul_power(a, apply_block(dd, 1, delta), phi);
  };
  auto bad = kernels::first_violation(a.dim(), 1, qb2_holds);
  r.add("qb2", bad ? Verdict::fail(*bad, "Φ·(Δ⊗id)Δ(h) ≠ (id⊗Δ)Δ(h)·Φ") : Verdict::pass());
  return r;
}

Verdict check_twist(const QuasiBialgebra& h, const Twist& f) {
  const FinAlgebra& a = h.algebra();
  const BlockMap eps = h.coalgebra().counit_block();
  const Tensor one = unit_tensor(a), one2 = one_power(a, 2);
  if (Verdict v = compare(apply_block(f.f, 1, eps), one, "(id⊗ε)F ≠ 1"); !v) return v;
  if (Verdict v = compare(apply_block(f.f, 0, eps), one, "(ε⊗id)F ≠ 1"); !v) return v;
  if (Verdict v = compare(mul_power(a, f.f, f.f_inv), one2, "F·F⁻¹ ≠ 1⊗1"); !v) return v;
  return compare(mul_power(a, f.f_inv, f.f), one2, "F⁻¹·F ≠ 1⊗1");
}

Twist make_twist(const QuasiBialgebra& h, Tensor f) {
  if (f.rank() != 2 || f.dim() != h.algebra().dim()) throw DimensionMismatch("twist must be an n×n array");
  auto inv = invert_power(h.algebra(), f);
  if (!inv) throw PreconditionError("twist is not invertible in H⊗H");
  Twist t{std::move(f), std::move(*inv)};
  if (Verdict v = check_twist(h, t); !v) throw PreconditionError("invalid twist: " + v.detail, v.witness);
  return t;
}

Twist inverse_twist(const Twist& f) { return Twist{f.f_inv, f.f}; }

Twist idempotent_twist(const QuasiBialgebra& h, const Vec& p, const Scalar& lambda) {
  const FinAlgebra& a = h.algebra();
  if (!(a.mul(p, p) == p)) throw PreconditionError("p is not idempotent");
  Scalar denom = a.field().one() + lambda;
  if (denom.is_zero()) throw PreconditionError("1⊗1 + λ p⊗p is not invertible for λ = −1");
  Scalar mu = -(lambda / denom);
  Tensor pp = outer(Tensor::from_vec(p), Tensor::from_vec(p));
  Twist t{one_power(a, 2) + lambda * pp, one_power(a, 2) + mu * pp};
  if (Verdict v = check_twist(h, t); !v) throw PreconditionError("invalid twist: " + v.detail, v.witness);
  return t;
}

QuasiBialgebra twist(const QuasiBialgebra& h, const Twist& f) {
  Report input = check_quasi(h);
  for (const auto& e : input.entries)
    if (e.required && e.status != Status::Pass)
      throw PreconditionError("input is not a quasi-bialgebra: " + e.name + " fails", e.witness);
  if (Verdict v = check_twist(h, f); !v) throw PreconditionError("invalid twist: " + v.detail, v.witness);

  const FinAlgebra& a = h.algebra();
  const FinCoalgebra& c = h.coalgebra();
  const std::size_t n = a.dim();
  const BlockMap delta = c.comul_block();
  const Tensor one = unit_tensor(a);

  Tensor d(a.field(), n, 3);
  for (std::size_t i = 0; i < n; ++i) {
    Tensor di = mul_power(a, mul_power(a, f.f, c.delta_tensor(a.basis_vector(i))), f.f_inv);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) d({i, j, k}) = di({j, k});
  }
  FinCoalgebra twisted(c.basis(), c.counit(), std::move(d));

  auto chain = [&](std::initializer_list<Tensor> factors) {
    auto it = factors.begin();
    Tensor acc = *it;
    for (++it; it != factors.end(); ++it) acc = mul_power(a, acc, *it);
    return acc;
  };
  Tensor phi_f = chain({outer(one, f.f), apply_block(f.f, 1, delta), h.phi, apply_block(f.f_inv, 0, delta),
                        outer(f.f_inv, one)});
  Tensor phi_f_inv = chain({outer(f.f, one), apply_block(f.f, 0, delta), h.phi_inv, apply_block(f.f_inv, 1, delta),
                            outer(one, f.f_inv)});

  QuasiBialgebra out{NCoalgObject{a, std::move(twisted)}, std::move(phi_f), std::move(phi_f_inv)};
  Report r = check_quasi(out);
  if (!r.axioms_hold()) throw Error("twisted object is not a quasi-bialgebra");
  return out;
}

Report check_antipode(const QuasiBialgebra& h, const QuasiAntipode& qa) {
  const FinAlgebra& a = h.algebra();
  const FinCoalgebra& c = h.coalgebra();
  const std::size_t n = a.dim();
  if (qa.s.rows() != n || qa.s.cols() != n || qa.alpha.size() != n || qa.beta.size() != n)
    throw DimensionMismatch("quasi-antipode does not match the carrier");
  require_associative(a);
  auto s = [&](std::size_t i) { return qa.s.col(i); };
  auto mul3 = [&](const Vec& x, const Vec& y, const Vec& z) { return a.mul(a.mul(x, y), z); };
  Report r;

  Verdict anti = Verdict::pass();
  for (std::size_t i = 0; i < n && anti; ++i)
    for (std::size_t j = 0; j < n && anti; ++j)
      if (!(qa.s * basis_mul(a, i, j) == a.mul(s(j), s(i)))) anti = Verdict::fail({i, j}, "s(xy) ≠ s(y)s(x)");
  r.add("s anti-multiplicative", anti);
  r.add("s(1) = 1", qa.s * a.unit() == a.unit() ? Verdict::pass() : Verdict::fail({}, "s(1) ≠ 1"));

  Verdict ax1 = Verdict::pass(), ax2 = Verdict::pass();
  for (std::size_t i = 0; i < n; ++i) {
    Vec lhs1(a.field(), n), lhs2(a.field(), n);
    for (const auto& t : sparse_delta(c, i)) {
      lhs1 += t.coeff * mul3(s(t.left), qa.alpha, a.basis_vector(t.right));
      lhs2 += t.coeff * mul3(a.basis_vector(t.left), qa.beta, s(t.right));
    }
    if (ax1 && !(lhs1 == c.counit()[i] * qa.alpha)) ax1 = Verdict::fail({i}, "Σ s(a₁)αa₂ ≠ ε(a)α");
    if (ax2 && !(lhs2 == c.counit()[i] * qa.beta)) ax2 = Verdict::fail({i}, "Σ a₁βs(a₂) ≠ ε(a)β");
  }
  r.add("antipode axiom 1", ax1);
  r.add("antipode axiom 2", ax2);

  Vec sum3(a.field(), n), sum4(a.field(), n);
  for (std::size_t f = 0; f < h.phi.size(); ++f) {
    auto idx = h.phi.multi_index(f);
    if (!h.phi.flat(f).is_zero())
      sum3 += h.phi.flat(f) * a.mul(mul3(a.basis_vector(idx[0]), qa.beta, s(idx[1])),
                                    a.mul(qa.alpha, a.basis_vector(idx[2])));
    if (!h.phi_inv.flat(f).is_zero())
      sum4 += h.phi_inv.flat(f) * a.mul(mul3(s(idx[0]), qa.alpha, a.basis_vector(idx[1])),
                                        a.mul(qa.beta, s(idx[2])));
  }
  r.add("antipode axiom 3", sum3 == a.unit() ? Verdict::pass() : Verdict::fail({}, "Σ Φ¹βs(Φ²)αΦ³ = " + sum3.to_string()));
  r.add("antipode axiom 4", sum4 == a.unit() ? Verdict::pass() : Verdict::fail({}, "Σ s(φ¹)αφ²βs(φ³) = " + sum4.to_string()));
  return r;
}

QuasiAntipode twist_antipode(const QuasiBialgebra& h, const QuasiAntipode& qa, const Twist& f) {
  const FinAlgebra& a = h.algebra();
  const std::size_t n = a.dim();
  Vec beta(a.field(), n), alpha(a.field(), n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!f.f({i, j}).is_zero()) beta += f.f({i, j}) * a.mul(a.mul(a.basis_vector(i), qa.beta), qa.s.col(j));
      if (!f.f_inv({i, j}).is_zero())
        alpha += f.f_inv({i, j}) * a.mul(a.mul(qa.s.col(i), qa.alpha), a.basis_vector(j));
    }
  return QuasiAntipode{qa.s, std::move(alpha), std::move(beta)};
}

DualQuasiBialgebra make_dual_quasi(NAlgObject carrier, Tensor omega, std::optional<Tensor> omega_inv) {
  const FinCoalgebra& c = carrier.coalgebra;
  require_rank3(omega, c.dim(), "ω");
  if (Verdict v = check_coassociative(c); !v) throw PreconditionError("carrier coalgebra is not coassociative", v.witness);
  if (!omega_inv) {
    omega_inv = invert_power(convolution_algebra(c), omega);
    if (!omega_inv) throw PreconditionError("ω is not convolution invertible");
  }
  require_rank3(*omega_inv, c.dim(), "ω⁻¹");
  return DualQuasiBialgebra{std::move(carrier), std::move(omega), std::move(*omega_inv)};
}

Report check_dual_quasi(const DualQuasiBialgebra& u) {
  const FinAlgebra& a = u.algebra();
  const FinCoalgebra& c = u.coalgebra();
  const std::size_t n = a.dim();
  require_rank3(u.omega, n, "ω");
  require_rank3(u.omega_inv, n, "ω⁻¹");
  Report r = check_nalg(u.carrier);
  if (!r.passed("coassociative")) {
    for (const char* name : {"ω invertible", "dqb3", "dqb4", "dqb2"}) r.skip(name, "carrier coalgebra is not coassociative");
    return r;
  }
  const FinAlgebra conv = convolution_algebra(c);
  const Tensor& w = u.omega;
  const Tensor eps3 = one_power(conv, 3);
  Verdict inv = compare(mul_power(conv, w, u.omega_inv), eps3, "ω∗ω⁻¹ ≠ ε⊗ε⊗ε");
  if (inv) inv = compare(mul_power(conv, u.omega_inv, w), eps3, "ω⁻¹∗ω ≠ ε⊗ε⊗ε");
  r.add("ω invertible", inv);

  // Pulling a functional back along m is the transpose of m acting on a slot.
  const BlockMap m_star{a.mul_block().matrix.transpose(), 1, 2};
  const Tensor eps = Tensor::from_vec(c.counit());
  Tensor lhs = mul_power(conv, apply_block(w, 2, m_star), apply_block(w, 0, m_star));
  Tensor rhs = mul_power(conv, mul_power(conv, outer(eps, w), apply_block(w, 1, m_star)), outer(w, eps));
  r.add("dqb3", compare(lhs, rhs, "ω(x₁⊗y₁⊗z₁t₁)ω(x₂y₂⊗z₂⊗t₂) sums differ"));

  Verdict dqb4 = Verdict::pass();
  for (std::size_t slot = 0; slot < 3 && dqb4; ++slot) {
    Mat got = contract(w, slot, a.unit());
    for (std::size_t i = 0; i < n && dqb4; ++i)
      for (std::size_t j = 0; j < n && dqb4; ++j)
        if (!(got(i, j) == c.counit()[i] * c.counit()[j]))
          dqb4 = Verdict::fail({slot, i, j}, "ω with 1 in slot " + std::to_string(slot) + " ≠ ε⊗ε");
  }
  r.add("dqb4", dqb4);

  std::vector<std::vector<Term>> deltas;
  for (std::size_t i = 0; i < n; ++i) deltas.push_back(sparse_delta(c, i));
  std::vector<Vec> left_assoc, right_assoc;  // (e_a e_b)e_c and e_a(e_b e_c), index (a·n + b)·n + c
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      Vec xy = basis_mul(a, x, y);
      for (std::size_t z = 0; z < n; ++z) {
        left_assoc.push_back(a.mul(xy, a.basis_vector(z)));
        right_assoc.push_back(a.mul(a.basis_vector(x), basis_mul(a, y, z)));
      }
    }
  auto dqb2_holds = [&](std::span<const std::size_t> t) {
    Vec l(a.field(), n), rr(a.field(), n);
    for (const auto& dx : deltas[t[0]])
      for (const auto& dy : deltas[t[1]])
        for (const auto& dz : deltas[t[2]]) {
          Scalar coeff = dx.coeff * dy.coeff * dz.coeff;
          if (const Scalar& w1 = w({dx.left, dy.left, dz.left}); !w1.is_zero())
            l += (coeff * w1) * left_assoc[(dx.right * n + dy.right) * n + dz.right];
          if (const Scalar& w2 = w({dx.right, dy.right, dz.right}); !w2.is_zero())
            rr += (coeff * w2) * right_assoc[(dx.left * n + dy.left) * n + dz.left];
        }
    return l == rr;
  };
  auto bad = kernels::first_violation(n, 3, dqb2_holds);
  r.add("dqb2", bad ? Verdict::fail(*bad, "Σ ω(x₁⊗y₁⊗z₁)(x₂y₂)z₂ ≠ Σ x₁(y₁z₁)ω(x₂⊗y₂⊗z₂)") : Verdict::pass());
  return r;
}

DualQuasiBialgebra finite_dual_quasi(const QuasiBialgebra& h) {
  NAlgObject carrier = lift_dual(h.carrier);
  const Mat e = eta(h.algebra());
  return DualQuasiBialgebra{std::move(carrier), map_all_slots(h.phi, e), map_all_slots(h.phi_inv, e)};
}

Tensor zeta(const DualQuasiBialgebra& u, const Tensor& x) {
  require_rank3(x, u.coalgebra().dim(), "argument of ζ");
  return map_all_slots(x, pairing(u.coalgebra()));
}

std::optional<Tensor> split_solve(const DualQuasiBialgebra& u) {
  const std::size_t n = u.coalgebra().dim();
  require_rank3(u.omega, n, "ω");
  Mat p = pairing(u.coalgebra());
  auto sol = solve_linear(kron(kron(p, p), p), u.omega.as_vec());
  if (!sol) return std::nullopt;
  return Tensor::from_flat(*sol, n, 3);
}

QuasiBialgebra split_quasi(const DualQuasiBialgebra& u) {
  auto phi = split_solve(u);
  if (!phi) throw PreconditionError("ω is not in the image of ζ");
  return make_quasi(lift_dual_rev(u.carrier), std::move(*phi));
}

bool double_dual_roundtrip(const QuasiBialgebra& h) {
  QuasiBialgebra back = split_quasi(finite_dual_quasi(h));
  const Mat e = eta(h.algebra());
  if (rank(e) != h.algebra().dim()) return false;
  return check_morphism_quasi(e, h, back) && map_all_slots(h.phi_inv, e) == back.phi_inv;
}

bool check_morphism_quasi(const Mat& f, const QuasiBialgebra& h, const QuasiBialgebra& h2) {
  if (!is_algebra_morphism(f, h.algebra(), h2.algebra())) return false;
  if (!is_coalgebra_morphism(f, h.coalgebra(), h2.coalgebra())) return false;
  return map_all_slots(h.phi, f) == h2.phi;
}

bool check_morphism_dual_quasi(const Mat& g, const DualQuasiBialgebra& u, const DualQuasiBialgebra& u2) {
  if (!is_algebra_morphism(g, u.algebra(), u2.algebra())) return false;
  if (!is_coalgebra_morphism(g, u.coalgebra(), u2.coalgebra())) return false;
  return map_all_slots(u2.omega, g.transpose()) == u.omega;
}

}  // namespace nacalg
