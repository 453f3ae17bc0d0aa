#include "nacalg/filtered.hpp"

#include <random>

#include "nacalg/errors.hpp"
#include "nacalg/kernels.hpp"

namespace nacalg {

namespace {

Scalar factorial(std::size_t j) {
  mpz_class f = 1;
  for (std::size_t i = 2; i <= j; ++i) f *= static_cast<unsigned long>(i);
  return Scalar(mpq_class(f));
}

void require_char_zero(const Field& field, const char* what) {
  if (!field.is_rational())
    throw CharacteristicError(std::string(what) + " is only defined in characteristic 0 (factorials vanish mod p)");
}

std::string power_name(std::size_t j) {
  if (j == 0) return "1";
  if (j == 1) return "X";
  return "X^" + std::to_string(j);
}

/// Word codes: a word of length k over d letters is offset(k) + Σ letter·d^pos.
std::vector<std::size_t> word_offsets(std::size_t d, std::size_t N) {
  std::vector<std::size_t> off{0};
  for (std::size_t k = 0; k <= N; ++k) off.push_back(off.back() + ipow(d, k));
  return off;
}

std::vector<std::size_t> word_letters(std::size_t code, std::size_t len, std::size_t d) {
  std::vector<std::size_t> out(len);
  for (std::size_t s = len; s-- > 0;) {
    out[s] = code % d;
    code /= d;
  }
  return out;
}

Vec random_homogeneous(const TruncatedTensorAlgebra& t, std::size_t deg, std::mt19937& rng) {
  const Field& f = t.algebra.field();
  std::uniform_int_distribution<int> coeff(-3, 3);
  Vec x(f, t.algebra.dim());
  while (x.is_zero())
    for (std::size_t i = 0; i < t.count(deg); ++i) x[t.offset(deg) + i] = f.from_int(coeff(rng));
  return x;
}

/// Whether z·w = 1 (right) or w·z = 1 (left) has a solution w with
/// deg w ≤ max_deg.
bool has_inverse_side(const TruncatedTensorAlgebra& t, const Vec& z, std::size_t max_deg, bool right) {
  const FinAlgebra& a = t.algebra;
  const std::size_t cols = t.offset(max_deg) + t.count(max_deg);
  Mat m(a.field(), a.dim(), cols);
  for (std::size_t w = 0; w < cols; ++w) {
    Vec prod = right ? a.mul(z, a.basis_vector(w)) : a.mul(a.basis_vector(w), z);
    for (std::size_t i = 0; i < a.dim(); ++i) m(i, w) = prod[i];
  }
  return solve_linear(m, a.unit()).has_value();
}

}  // namespace

Weight factorial_weight() { return factorial; }

std::optional<Scalar> nonsplit_omega(std::size_t n, std::size_t k, std::size_t m, const Weight& phi) {
  if (n == 0 || k == 0 || m == 0) return phi(0).field().one();
  Scalar w = phi(k - 1);
  if (w.is_zero()) return std::nullopt;
  return phi(n + k - 1) * phi(m + k - 1) / (w * w);
}

Scalar nonsplit_omega(const Field& field, std::size_t n, std::size_t k, std::size_t m) {
  require_char_zero(field, "the non-split ω");
  return *nonsplit_omega(n, k, m, factorial_weight());
}

Report check_group_like_cocycle(std::size_t N, const GroupLikeOmega& omega) {
  Report r;
  auto cocycle = [&](std::span<const std::size_t> t) {
    const std::size_t n = t[0], m = t[1], rr = t[2], s = t[3];
    auto a = omega(m, rr, s), b = omega(n, m + rr, s), c = omega(n, m, rr);
    auto d = omega(n, m, rr + s), e = omega(n + m, rr, s);
    if (!a || !b || !c || !d || !e) return false;
    return *a * *b * *c == *d * *e;
  };
  auto bad = kernels::first_violation(N + 1, 4, cocycle);
  r.add("cocycle identity",
        bad ? Verdict::fail(*bad, "ω(m,r,s)ω(n,m+r,s)ω(n,m,r) ≠ ω(n,m,r+s)ω(n+m,r,s) at (n,m,r,s)") : Verdict::pass());

  auto unital = [&](std::span<const std::size_t> t) {
    if (t[0] != 0 && t[1] != 0 && t[2] != 0) return true;
    auto v = omega(t[0], t[1], t[2]);
    return v && v->is_one();
  };
  bad = kernels::first_violation(N + 1, 3, unital);
  r.add("dqb4", bad ? Verdict::fail(*bad, "ω with an exponent 0 is not 1") : Verdict::pass());

  auto nonzero = [&](std::span<const std::size_t> t) {
    auto v = omega(t[0], t[1], t[2]);
    return v && !v->is_zero();
  };
  bad = kernels::first_violation(N + 1, 3, nonzero);
  r.add("ω invertible", bad ? Verdict::fail(*bad, "ω undefined or zero, so not convolution invertible") : Verdict::pass());
  return r;
}

Report check_nonsplit_cocycle(std::size_t N, const Weight& phi) {
  if (N < 1) throw PreconditionError("truncation must be at least 1");
  require_char_zero(phi(0).field(), "the non-split ω");
  Report r = check_group_like_cocycle(
      N, [&](std::size_t n, std::size_t k, std::size_t m) { return nonsplit_omega(n, k, m, phi); });
  r.add(CheckEntry{"dqb2", Status::Pass, {}, "both sides equal ω(x,y,z)·xyz on a commutative group-like basis", true});

  Verdict red = Verdict::pass();
  for (std::size_t n = 0; n <= N && red; ++n) {
    auto v = nonsplit_omega(n, 1, 1, phi);
    if (!v || !(*v == phi(n))) red = Verdict::fail({n}, "ω(X^n⊗X⊗X) ≠ φ(X^n)");
  }
  r.add("reduction ω(−⊗X⊗X) = φ", red);
  return r;
}

std::vector<Scalar> nonsplit_reduction(std::size_t N, const Weight& phi) {
  std::vector<Scalar> out;
  for (std::size_t n = 0; n <= N; ++n) {
    auto v = nonsplit_omega(n, 1, 1, phi);
    if (!v) throw PreconditionError("ω(X^n⊗X⊗X) is undefined because φ(1) = 0", {n});
    out.push_back(*v);
  }
  return out;
}

Scalar factorial_matrix_det(const Field& field, std::size_t n) {
  require_char_zero(field, "factorial_matrix_det");
  Mat m(field, n + 1, n + 1);
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = 0; j <= n; ++j) m(i, j) = factorial(i + j);
  return determinant(m);
}

Scalar factorial_product_square(std::size_t n) {
  Scalar p = factorial(0);
  for (std::size_t i = 1; i <= n; ++i) p *= factorial(i);
  return p * p;
}

Sequence fibonacci_sequence(std::size_t window) {
  return {"fibonacci",
          [](std::size_t i) {
            mpz_class a = 0, b = 1;
            for (std::size_t k = 0; k < i; ++k) {
              mpz_class t = a + b;
              a = b;
              b = t;
            }
            return Scalar(mpq_class(a));
          },
          window};
}

Sequence geometric_sequence(Scalar ratio, std::size_t window) {
  return {"geometric " + ratio.to_string(),
          [ratio](std::size_t i) {
            Scalar p = ratio.field().one();
            for (std::size_t k = 0; k < i; ++k) p *= ratio;
            return p;
          },
          window};
}

Sequence factorial_sequence(std::size_t window) { return {"factorial", factorial, window}; }

Sequence values_sequence(std::vector<Scalar> values) {
  const std::size_t n = values.size();
  return {"values", [v = std::move(values)](std::size_t i) { return v.at(i); }, n};
}

HankelResult hankel_recursive(const Sequence& seq, std::size_t max_order) {
  if (max_order < 1) throw PreconditionError("max_order must be at least 1");
  const std::size_t w = seq.window;
  std::vector<Scalar> a;
  for (std::size_t i = 0; i < w; ++i) a.push_back(seq.rule(i));
  HankelResult out;
  if (a.empty()) return out;
  const Field field = a.front().field();

  for (std::size_t r = 1; r <= max_order && w >= 2 * r + 1; ++r) {
    Mat m(field, w - r, r);
    Vec rhs(field, w - r);
    for (std::size_t n = 0; n + r < w; ++n) {
      for (std::size_t t = 0; t < r; ++t) m(n, t) = a[n + t];
      rhs[n] = a[n + r];
    }
    if (auto c = solve_linear(m, rhs)) {
      out.recurrence = std::vector<Scalar>(c->entries().begin(), c->entries().end());
      return out;
    }
  }
  for (std::size_t s = 1; s <= max_order + 1 && 2 * s - 1 <= w; ++s) {
    Mat h(field, s, s);
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t j = 0; j < s; ++j) h(i, j) = a[i + j];
    out.certificates.push_back({s, determinant(h)});
  }
  out.certified = out.certificates.size() == max_order + 1;
  for (const auto& c : out.certificates) out.certified = out.certified && !c.det.is_zero();
  return out;
}

TruncatedCoalgebra diamond_coalgebra(std::size_t N) {
  if (N < 3) throw PreconditionError("the diamond coalgebra needs truncation at least 3");
  const Field q = Field::rationals();
  const std::size_t dim = N + 1;
  std::vector<std::string> names;
  for (std::size_t j = 0; j <= N; ++j) names.push_back(power_name(j));
  Tensor d(q, dim, 3);
  std::vector<std::size_t> overflow;
  const Scalar one = q.one();
  d({0, 0, 0}) = one;
  d({1, 1, 0}) += one;
  d({1, 0, 1}) += one;
  for (std::size_t n = 2; n <= N; ++n) {
    d({n, n, 0}) += one;
    d({n, 0, n}) += one;
    if (n + 1 > N) {
      overflow.push_back(n);
      continue;
    }
    d({n, n + 1, 1}) += one;
    d({n, 1, n + 1}) += one;
  }
  return {FinCoalgebra(std::move(names), Vec::unit_vector(q, dim, 0), std::move(d)), N, std::move(overflow)};
}

std::vector<GrowthRow> diamond_closure_growth(std::size_t N) {
  std::vector<GrowthRow> rows;
  for (std::size_t t = 3; t <= N; ++t) {
    TruncatedCoalgebra dc = diamond_coalgebra(t);
    Subspace s = subcoalgebra_closure(dc.coalgebra, Vec::unit_vector(dc.coalgebra.field(), t + 1, 2));
    bool boundary = false;
    for (std::size_t i : dc.overflow) boundary = boundary || s.contains(Vec::unit_vector(s.field(), t + 1, i));
    rows.push_back({t, s.dim(), boundary});
  }
  return rows;
}

TruncatedMonoidBialgebra polynomial_monoid_bialgebra(const Field& field, std::size_t N) {
  if (N < 1) throw PreconditionError("truncation must be at least 1");
  const std::size_t dim = N + 1;
  std::vector<std::string> names;
  for (std::size_t j = 0; j <= N; ++j) names.push_back(power_name(j));
  Tensor c(field, dim, 3), d(field, dim, 3);
  std::vector<std::array<std::size_t, 2>> overflow;
  for (std::size_t a = 0; a <= N; ++a) {
    d({a, a, a}) = field.one();
    for (std::size_t b = 0; b <= N; ++b) {
      if (a + b > N)
        overflow.push_back({a, b});
      else
        c({a, b, a + b}) = field.one();
    }
  }
  Vec counit(field, dim);
  for (std::size_t a = 0; a <= N; ++a) counit[a] = field.one();
  return {FinAlgebra(names, Vec::unit_vector(field, dim, 0), std::move(c)),
          FinCoalgebra(names, std::move(counit), std::move(d)), N, std::move(overflow)};
}

std::size_t TruncatedTensorAlgebra::offset(std::size_t deg) const {
  std::size_t off = 0;
  for (std::size_t k = 0; k < deg; ++k) off += ipow(letters, k);
  return off;
}

std::size_t TruncatedTensorAlgebra::count(std::size_t deg) const { return ipow(letters, deg); }

namespace {

TruncatedTensorAlgebra word_algebra(const Field& field, const std::vector<std::string>& letters, std::size_t N) {
  const std::size_t d = letters.size();
  if (d < 1) throw PreconditionError("need at least one letter");
  const auto off = word_offsets(d, N);
  const std::size_t dim = off[N + 1];
  bool short_names = true;
  for (const auto& l : letters) short_names = short_names && l.size() == 1;

  std::vector<std::string> names;
  std::vector<std::size_t> degree;
  for (std::size_t k = 0; k <= N; ++k)
    for (std::size_t code = 0; code < ipow(d, k); ++code) {
      std::string name;
      for (std::size_t l : word_letters(code, k, d)) name += (name.empty() || short_names ? "" : "·") + letters[l];
      names.push_back(k == 0 ? "1" : name);
      degree.push_back(k);
    }
  Tensor c(field, dim, 3);
  for (std::size_t a = 0; a <= N; ++a)
    for (std::size_t b = 0; a + b <= N; ++b)
      for (std::size_t u = 0; u < ipow(d, a); ++u)
        for (std::size_t v = 0; v < ipow(d, b); ++v)
          c({off[a] + u, off[b] + v, off[a + b] + u * ipow(d, b) + v}) = field.one();
  return {FinAlgebra(std::move(names), Vec::unit_vector(field, dim, 0), std::move(c)), d, N, std::move(degree)};
}

}  // namespace

TruncatedTensorAlgebra truncated_tensor_algebra(const Field& field, std::size_t d, std::size_t N) {
  if (d < 1 || N < 2) throw PreconditionError("truncated tensor algebra needs d ≥ 1 and N ≥ 2");
  std::vector<std::string> letters;
  for (std::size_t i = 0; i < d; ++i) letters.push_back(d <= 26 ? std::string(1, static_cast<char>('a' + i)) : "v" + std::to_string(i));
  return word_algebra(field, letters, N);
}

bool homogeneous_domain_check(const Field& field, std::size_t d, std::size_t N, std::size_t trials,
                              std::uint32_t seed) {
  TruncatedTensorAlgebra t = truncated_tensor_algebra(field, d, N);
  std::mt19937 rng(seed);
  for (std::size_t i = 0; i < trials; ++i) {
    std::size_t p = std::uniform_int_distribution<std::size_t>(0, N)(rng);
    std::size_t q = std::uniform_int_distribution<std::size_t>(0, N - p)(rng);
    Vec x = random_homogeneous(t, p, rng), y = random_homogeneous(t, q, rng);
    if (t.algebra.mul(x, y).is_zero()) return false;
  }
  return true;
}

bool is_unit(const TruncatedTensorAlgebra& t, const Vec& x) {
  std::optional<std::size_t> deg;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    if (deg && *deg != t.degree[i]) throw PreconditionError("element is not homogeneous", {i});
    deg = t.degree[i];
  }
  if (!deg) return false;
  const std::size_t room = t.truncation - *deg;
  return has_inverse_side(t, x, room, true) && has_inverse_side(t, x, room, false);
}

bool no_positive_degree_unit(const Field& field, std::size_t d, std::size_t N, std::uint32_t seed) {
  TruncatedTensorAlgebra t = truncated_tensor_algebra(field, d, N);
  std::mt19937 rng(seed);
  for (std::size_t k = 1; k <= N; ++k) {
    std::vector<Vec> candidates;
    for (std::size_t i = 0; i < t.count(k); ++i) candidates.push_back(t.algebra.basis_vector(t.offset(k) + i));
    for (int i = 0; i < 3; ++i) candidates.push_back(random_homogeneous(t, k, rng));
    for (const Vec& z : candidates)
      if (has_inverse_side(t, z, N - k, true) || has_inverse_side(t, z, N - k, false)) return false;
  }
  return true;
}

TensorBialgebra tensor_bialgebra_from_coalgebra(const FinCoalgebra& c, std::size_t N) {
  const Field& field = c.field();
  const std::size_t d = c.dim();
  TruncatedTensorAlgebra words = word_algebra(field, c.basis(), N);
  const std::size_t dim = words.algebra.dim();
  const auto off = word_offsets(d, N);

  struct Term {
    std::size_t left, right;
    Scalar coeff;
  };
  std::vector<std::vector<Term>> letter_delta(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        if (const Scalar& v = c.structure()({i, j, k}); !v.is_zero()) letter_delta[i].push_back({j, k, v});

  Tensor delta(field, dim, 3);
  Vec counit(field, dim);
  for (std::size_t w = 0; w < dim; ++w) {
    const std::size_t len = words.degree[w];
    // Δ(c_1⋯c_k) = Δ(c_1)⋯Δ(c_k), tracked as pairs of left and right word codes.
    std::vector<Term> acc{{0, 0, field.one()}};
    Scalar eps = field.one();
    for (std::size_t l : word_letters(w - off[len], len, d)) {
      std::vector<Term> next;
      for (const auto& a : acc)
        for (const auto& b : letter_delta[l]) next.push_back({a.left * d + b.left, a.right * d + b.right, a.coeff * b.coeff});
      acc = std::move(next);
      eps *= c.counit()[l];
    }
    for (const auto& t : acc) delta({w, off[len] + t.left, off[len] + t.right}) += t.coeff;
    counit[w] = eps;
  }
  FinCoalgebra coalgebra(words.algebra.basis(), std::move(counit), std::move(delta));
  return {std::move(words), std::move(coalgebra)};
}

Report check_T_of_C(const FinCoalgebra& c, std::size_t N) {
  TensorBialgebra t = tensor_bialgebra_from_coalgebra(c, N);
  const FinAlgebra& a = t.words.algebra;
  const FinCoalgebra& dc = t.coalgebra;
  const std::size_t n = a.dim();
  Report r;

  std::size_t overflow = 0;
  std::optional<std::vector<std::size_t>> bad_delta, bad_eps;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      if (t.words.degree[u] + t.words.degree[v] > N) {
        ++overflow;
        continue;
      }
      Vec uv = a.mul(a.basis_vector(u), a.basis_vector(v));
      if (!bad_delta &&
          !(dc.delta_tensor(uv) == mul_power(a, dc.delta_tensor(a.basis_vector(u)), dc.delta_tensor(a.basis_vector(v)))))
        bad_delta = std::vector<std::size_t>{u, v};
      if (!bad_eps && !(dot(dc.counit(), uv) == dc.counit()[u] * dc.counit()[v]))
        bad_eps = std::vector<std::size_t>{u, v};
    }
  auto truncated_entry = [&](std::string name, const std::optional<std::vector<std::size_t>>& bad) {
    if (bad) return CheckEntry{std::move(name), Status::Fail, *bad, "fails on a word pair", true};
    if (overflow > 0)
      return CheckEntry{std::move(name), Status::UpToTruncation, {},
                        std::to_string(overflow) + " word pairs exceed length " + std::to_string(N), true};
    return CheckEntry{std::move(name), Status::Pass, {}, {}, true};
  };
  r.add(truncated_entry("Δ multiplicative", bad_delta));
  r.add(truncated_entry("ε multiplicative", bad_eps));
  r.add("counital", check_counital(dc));

  Verdict coassoc = Verdict::pass();
  const BlockMap delta = dc.comul_block();
  for (std::size_t i = 0; i < c.dim() && coassoc; ++i) {
    Tensor dd = dc.delta_tensor(a.basis_vector(t.words.offset(1) + i));
    if (!(apply_block(dd, 0, delta) == apply_block(dd, 1, delta)))
      coassoc = Verdict::fail({i}, "(Δ⊗id)Δ ≠ (id⊗Δ)Δ on generator " + c.basis()[i]);
  }
  r.add("coassociative on generators", coassoc, false);

  if (!check_cocommutative(c)) {
    r.add(CheckEntry{"coalternative (length ≤ 2)", Status::Skipped, {}, "generator coalgebra is not cocommutative", false});
  } else if (c.field().characteristic() == 2) {
    r.add(CheckEntry{"coalternative (length ≤ 2)", Status::Skipped, {}, "characteristic 2", false});
  } else {
    Verdict alt = Verdict::pass();
    for (std::size_t w = 0; w < n && alt; ++w)
      if (t.words.degree[w] <= 2 && !coalternative_defect(dc, a.basis_vector(w)).is_zero())
        alt = Verdict::fail({w}, "coalternative identity fails on " + a.basis()[w]);
    if (alt && N < 2)
      r.add(CheckEntry{"coalternative (length ≤ 2)", Status::UpToTruncation, {}, "only words up to length " + std::to_string(N), true});
    else
      r.add("coalternative (length ≤ 2)", alt);
  }
  return r;
}

std::optional<Scalar> forced_degree_zero_reassociator(const TensorBialgebra& t) {
  const FinAlgebra& a = t.words.algebra;
  const Tensor one3 = one_power(a, 3), one2 = one_power(a, 2);
  const BlockMap eps = t.coalgebra.counit_block();
  // Unknown λ in Φ = λ·1⊗1⊗1; qb4 gives three linear conditions.
  Mat m(a.field(), 3 * one2.size(), 1);
  Vec rhs(a.field(), 3 * one2.size());
  for (std::size_t slot = 0; slot < 3; ++slot) {
    Tensor image = apply_block(one3, slot, eps);
    for (std::size_t i = 0; i < one2.size(); ++i) {
      m(slot * one2.size() + i, 0) = image.flat(i);
      rhs[slot * one2.size() + i] = one2.flat(i);
    }
  }
  auto sol = solve_linear(m, rhs);
  if (!sol) return std::nullopt;
  return (*sol)[0];
}

}  // namespace nacalg
