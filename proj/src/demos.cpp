#include "nacalg/demos.hpp"

#include "nacalg/errors.hpp"

namespace nacalg::demos {

namespace {

Scalar half(const Field& f) { return f.one() / f.from_int(2); }

void require_odd(const Field& f, const char* what) {
  if (f.characteristic() == 2) throw CharacteristicError(std::string(what) + " needs characteristic ≠ 2");
}

}  // namespace

FinAlgebra alt3(const Field& f) {
  Tensor c(f, 3, 3);
  const Scalar one = f.one();
  for (std::size_t i = 0; i < 3; ++i) {
    c({0, i, i}) = one;
    c({i, 0, i}) = one;
  }
  c({1, 1, 2}) = one;
  c({1, 2, 1}) = one;
  c({2, 1, 1}) = one;
  c({2, 2, 1}) = one;
  return FinAlgebra({"e", "x", "y"}, Vec::unit_vector(f, 3, 0), std::move(c));
}

FinAlgebra jordan_sym2(const Field& f) {
  require_odd(f, "the symmetrized product");
  Tensor c(f, 3, 3);
  const Scalar one = f.one();
  c({0, 0, 0}) = one;
  c({1, 1, 1}) = one;
  for (std::size_t i : {0, 1}) {
    c({i, 2, 2}) = half(f);
    c({2, i, 2}) = half(f);
  }
  c({2, 2, 0}) = one;
  c({2, 2, 1}) = one;
  return FinAlgebra({"E11", "E22", "S"}, Vec::from_ints(f, {1, 1, 0}), std::move(c));
}

FinAlgebra matrix2(const Field& f) {
  // e_ij e_kl = δ_jk e_il with index 2i + j.
  Tensor c(f, 4, 3);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t l = 0; l < 2; ++l) c({2 * i + j, 2 * j + l, 2 * i + l}) = f.one();
  return FinAlgebra({"e11", "e12", "e21", "e22"}, Vec::from_ints(f, {1, 0, 0, 1}), std::move(c));
}

FinCoalgebra comatrix2(const Field& f) {
  Tensor d(f, 4, 3);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k) d({2 * i + j, 2 * i + k, 2 * k + j}) = f.one();
  return FinCoalgebra({"c11", "c12", "c21", "c22"}, Vec::from_ints(f, {1, 0, 0, 1}), std::move(d));
}

FinAlgebra ground_field(const Field& f) {
  Tensor c(f, 1, 3);
  c({0, 0, 0}) = f.one();
  return FinAlgebra({"1"}, Vec::unit_vector(f, 1, 0), std::move(c));
}

NCoalgObject group_algebra_c2(const Field& f) {
  Tensor c(f, 2, 3), d(f, 2, 3);
  c({0, 0, 0}) = f.one();
  c({0, 1, 1}) = f.one();
  c({1, 0, 1}) = f.one();
  c({1, 1, 0}) = f.one();
  d({0, 0, 0}) = f.one();
  d({1, 1, 1}) = f.one();
  return NCoalgObject{FinAlgebra({"1", "g"}, Vec::unit_vector(f, 2, 0), std::move(c)),
                      FinCoalgebra({"1", "g"}, Vec::from_ints(f, {1, 1}), std::move(d))};
}

Vec h2_idempotent(const Field& f) {
  require_odd(f, "p = (1 − g)/2");
  return Vec(f, {half(f), -half(f)});
}

QuasiBialgebra h2(const Field& f) {
  NCoalgObject carrier = group_algebra_c2(f);
  Tensor p = Tensor::from_vec(h2_idempotent(f));
  Tensor psi = one_power(carrier.algebra, 3) - f.from_int(2) * outer(outer(p, p), p);
  return make_quasi(std::move(carrier), std::move(psi));
}

QuasiBialgebra h2_trivial(const Field& f) {
  NCoalgObject carrier = group_algebra_c2(f);
  Tensor one = one_power(carrier.algebra, 3);
  return make_quasi(std::move(carrier), one, one);
}

Twist f_lambda(const QuasiBialgebra& h, const Scalar& lambda) {
  return idempotent_twist(h, h2_idempotent(h.algebra().field()), lambda);
}

QuasiAntipode h2_antipode(const Field& f) {
  return QuasiAntipode{Mat::identity(f, 2), Vec::unit_vector(f, 2, 1), Vec::unit_vector(f, 2, 0)};
}

QuasiAntipode c2_antipode(const Field& f) {
  return QuasiAntipode{Mat::identity(f, 2), Vec::unit_vector(f, 2, 0), Vec::unit_vector(f, 2, 0)};
}

const std::vector<DemoEntry>& registry() {
  static const std::vector<DemoEntry> entries{
      {"alt3", "algebra", "3-dim commutative alternative algebra that is not associative"},
      {"alt3-dual", "coalgebra", "dual coalgebra of alt3"},
      {"jordan-sym2", "algebra", "symmetric 2x2 matrices under the symmetrized product"},
      {"m2", "algebra", "2x2 matrix algebra"},
      {"comatrix2", "coalgebra", "2x2 comatrix coalgebra"},
      {"k", "algebra", "the ground field"},
      {"c2", "ncoalg", "group algebra of the cyclic group of order 2"},
      {"h2", "quasi", "k[C2] with reassociator 1⊗1⊗1 − 2 p⊗p⊗p, p = (1 − g)/2"},
      {"h2-trivial", "quasi", "k[C2] with trivial reassociator"},
      {"h2-dual", "dualquasi", "finite dual of h2"},
      {"f-lambda1", "twist", "twist 1⊗1 + p⊗p on k[C2]"},
      {"h2-qa", "antipode", "quasi-antipode (id, g, 1) of h2"},
      {"c2-qa", "antipode", "Hopf antipode of k[C2]"},
      {"diamond", "filtered", "coalgebra on 1, X, X^2, ... that is not locally finite (truncated)"},
      {"kx-nonsplit", "filtered", "k[X] with the non-split 3-cocycle built from n!"},
  };
  return entries;
}

const DemoEntry* find(const std::string& name) {
  for (const auto& e : registry())
    if (e.name == name) return &e;
  return nullptr;
}

std::optional<io::Json> document(const std::string& name, const Field& f, std::size_t truncation) {
  if (name == "alt3") return io::write_algebra(alt3(f));
  if (name == "alt3-dual") return io::write_coalgebra(dual_coalgebra(alt3(f)));
  if (name == "jordan-sym2") return io::write_algebra(jordan_sym2(f));
  if (name == "m2") return io::write_algebra(matrix2(f));
  if (name == "comatrix2") return io::write_coalgebra(comatrix2(f));
  if (name == "k") return io::write_algebra(ground_field(f));
  if (name == "c2") return io::write_ncoalg(group_algebra_c2(f));
  if (name == "h2") return io::write_quasi(h2(f));
  if (name == "h2-trivial") return io::write_quasi(h2_trivial(f));
  if (name == "h2-dual") return io::write_dual_quasi(finite_dual_quasi(h2(f)));
  if (name == "f-lambda1") return io::write_twist(f_lambda(h2_trivial(f), f.one()));
  if (name == "h2-qa") return io::write_antipode(h2_antipode(f));
  if (name == "c2-qa") return io::write_antipode(c2_antipode(f));
  if (name == "diamond") {
    if (!f.is_rational()) throw CharacteristicError("the diamond demo is built over Q");
    return io::write_coalgebra(diamond_coalgebra(truncation).coalgebra);
  }
  if (name == "kx-nonsplit") return std::nullopt;
  throw SchemaError("unknown demo \"" + name + "\"");
}

}  // namespace nacalg::demos
