#include "nacalg/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "nacalg/errors.hpp"

namespace nacalg::io {

namespace {

std::string at(const std::string& path, const std::string& key) { return path + "." + key; }
std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

const Json& member(const Json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) throw SchemaError(path + ": expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError(path + ": missing key \"" + key + "\"");
  return *it;
}

const Json* optional_member(const Json& obj, const std::string& key) {
  auto it = obj.find(key);
  return it == obj.end() ? nullptr : &*it;
}

const Json& array(const Json& v, const std::string& path) {
  if (!v.is_array()) throw SchemaError(path + ": expected an array");
  return v;
}

std::size_t index(const Json& v, std::size_t bound, const std::string& path) {
  if (!v.is_number_integer()) throw SchemaError(path + ": expected an integer index");
  auto i = v.get<long long>();
  if (i < 0 || static_cast<unsigned long long>(i) >= bound)
    throw SchemaError(path + ": index " + std::to_string(i) + " out of range 0.." + std::to_string(bound - 1));
  return static_cast<std::size_t>(i);
}

Scalar scalar(const Json& v, const Field& field, const std::string& path) {
  if (!v.is_string()) throw SchemaError(path + ": scalars must be strings such as \"3/4\" or \"2 mod 5\"");
  try {
    return Scalar::parse(v.get<std::string>(), field);
  } catch (const Error& e) {
    throw SchemaError(path + ": " + e.what());
  }
}

Vec vector(const Json& v, const Field& field, std::size_t n, const std::string& path) {
  array(v, path);
  if (v.size() != n) throw SchemaError(path + ": expected " + std::to_string(n) + " entries, got " + std::to_string(v.size()));
  Vec out(field, n);
  for (std::size_t i = 0; i < n; ++i) out[i] = scalar(v[i], field, at(path, i));
  return out;
}

Json write_vector(const Vec& v) {
  Json out = Json::array();
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(v[i].to_string());
  return out;
}

/// Sparse [i_1, ..., i_rank, "scalar"] entries; omitted entries are zero.
Tensor sparse(const Json& v, const Field& field, std::size_t dim, std::size_t rank, const std::string& path) {
  array(v, path);
  Tensor t(field, dim, rank);
  std::set<std::size_t> seen;
  for (std::size_t e = 0; e < v.size(); ++e) {
    const std::string p = at(path, e);
    const Json& entry = array(v[e], p);
    if (entry.size() != rank + 1)
      throw SchemaError(p + ": expected " + std::to_string(rank) + " indices and a scalar");
    std::vector<std::size_t> idx;
    for (std::size_t s = 0; s < rank; ++s) idx.push_back(index(entry[s], dim, at(p, s)));
    const std::size_t flat = t.flat_index(idx);
    if (!seen.insert(flat).second) throw SchemaError(p + ": duplicate entry");
    t.flat(flat) = scalar(entry[rank], field, at(p, rank));
  }
  return t;
}

Json write_sparse(const Tensor& t) {
  Json out = Json::array();
  for (std::size_t f = 0; f < t.size(); ++f) {
    if (t.flat(f).is_zero()) continue;
    Json entry = Json::array();
    for (std::size_t i : t.multi_index(f)) entry.push_back(i);
    entry.push_back(t.flat(f).to_string());
    out.push_back(std::move(entry));
  }
  return out;
}

struct Header {
  Field field;
  std::vector<std::string> basis;
};

Header header(const Json& doc, const std::optional<Field>& override, const std::string& path) {
  Field field = override ? *override : read_field(member(doc, "field", path), at(path, "field"));
  const Json& dim = member(doc, "dim", path);
  if (!dim.is_number_integer() || dim.get<long long>() < 0) throw SchemaError(at(path, "dim") + ": expected a non-negative integer");
  const auto n = static_cast<std::size_t>(dim.get<long long>());
  const Json& names = array(member(doc, "basis", path), at(path, "basis"));
  if (names.size() != n)
    throw SchemaError(at(path, "basis") + ": expected " + std::to_string(n) + " names, got " + std::to_string(names.size()));
  Header h{field, {}};
  std::set<std::string> distinct;
  for (std::size_t i = 0; i < n; ++i) {
    if (!names[i].is_string()) throw SchemaError(at(at(path, "basis"), i) + ": basis names must be strings");
    h.basis.push_back(names[i].get<std::string>());
    if (!distinct.insert(h.basis.back()).second) throw SchemaError(at(at(path, "basis"), i) + ": duplicate basis name");
  }
  return h;
}

FinAlgebra algebra_at(const Json& doc, const std::optional<Field>& field, const std::string& path) {
  Header h = header(doc, field, path);
  const std::size_t n = h.basis.size();
  Vec unit = vector(member(doc, "unit", path), h.field, n, at(path, "unit"));
  Tensor c = sparse(member(doc, "mul", path), h.field, n, 3, at(path, "mul"));
  return FinAlgebra(std::move(h.basis), std::move(unit), std::move(c));
}

FinCoalgebra coalgebra_at(const Json& doc, const std::optional<Field>& field, const std::string& path) {
  Header h = header(doc, field, path);
  const std::size_t n = h.basis.size();
  Vec counit = vector(member(doc, "counit", path), h.field, n, at(path, "counit"));
  Tensor d = sparse(member(doc, "comul", path), h.field, n, 3, at(path, "comul"));
  return FinCoalgebra(std::move(h.basis), std::move(counit), std::move(d));
}

template <class Pair>
Pair pair_at(const Json& doc, const std::optional<Field>& field) {
  FinAlgebra a = algebra_at(member(doc, "algebra", "$"), field, "$.algebra");
  FinCoalgebra c = coalgebra_at(member(doc, "coalgebra", "$"), field, "$.coalgebra");
  if (!(a.field() == c.field())) throw SchemaError("$.coalgebra.field: differs from $.algebra.field");
  if (a.basis() != c.basis()) throw SchemaError("$.coalgebra.basis: must match $.algebra.basis");
  if constexpr (std::is_same_v<Pair, NAlgObject>)
    return NAlgObject{std::move(c), std::move(a)};
  else
    return NCoalgObject{std::move(a), std::move(c)};
}

Json write_pair(const FinAlgebra& a, const FinCoalgebra& c) {
  return Json{{"algebra", write_algebra(a)}, {"coalgebra", write_coalgebra(c)}};
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace

Json parse_document(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    auto [line, col] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    std::string what = e.what();
    if (auto pos = what.find("] "); pos != std::string::npos) what = what.substr(pos + 2);
    throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + what);
  }
}

Json load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_document(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string dump_document(const Json& doc) { return doc.dump(2) + "\n"; }

Field read_field(const Json& doc, const std::string& path) {
  const Json& type = member(doc, "type", path);
  if (!type.is_string()) throw SchemaError(at(path, "type") + ": expected \"Q\" or \"Fp\"");
  const auto t = type.get<std::string>();
  if (t == "Q") return Field::rationals();
  if (t != "Fp") throw SchemaError(at(path, "type") + ": unknown field type \"" + t + "\"");
  const Json& p = member(doc, "p", path);
  if (!p.is_number_integer()) throw SchemaError(at(path, "p") + ": expected an integer prime");
  try {
    return Field::prime(p.get<long long>());
  } catch (const Error& e) {
    throw SchemaError(at(path, "p") + ": " + e.what());
  }
}

Json write_field(const Field& f) {
  if (f.is_rational()) return Json{{"type", "Q"}};
  return Json{{"type", "Fp"}, {"p", f.characteristic()}};
}

FinAlgebra read_algebra(const Json& doc, const std::optional<Field>& field) { return algebra_at(doc, field, "$"); }

Json write_algebra(const FinAlgebra& a) {
  return Json{{"field", write_field(a.field())},
              {"dim", a.dim()},
              {"basis", a.basis()},
              {"unit", write_vector(a.unit())},
              {"mul", write_sparse(a.structure())}};
}

FinCoalgebra read_coalgebra(const Json& doc, const std::optional<Field>& field) { return coalgebra_at(doc, field, "$"); }

Json write_coalgebra(const FinCoalgebra& c) {
  return Json{{"field", write_field(c.field())},
              {"dim", c.dim()},
              {"basis", c.basis()},
              {"counit", write_vector(c.counit())},
              {"comul", write_sparse(c.structure())}};
}

NAlgObject read_nalg(const Json& doc, const std::optional<Field>& field) { return pair_at<NAlgObject>(doc, field); }
NCoalgObject read_ncoalg(const Json& doc, const std::optional<Field>& field) { return pair_at<NCoalgObject>(doc, field); }
Json write_nalg(const NAlgObject& x) { return write_pair(x.algebra, x.coalgebra); }
Json write_ncoalg(const NCoalgObject& x) { return write_pair(x.algebra, x.coalgebra); }

QuasiBialgebra read_quasi(const Json& doc, const std::optional<Field>& field) {
  NCoalgObject carrier = read_ncoalg(doc, field);
  const Field& f = carrier.algebra.field();
  const std::size_t n = carrier.algebra.dim();
  Tensor phi = sparse(member(doc, "phi", "$"), f, n, 3, "$.phi");
  if (const Json* p = optional_member(doc, "phi_inv")) {
    Tensor inv = sparse(*p, f, n, 3, "$.phi_inv");
    return QuasiBialgebra{std::move(carrier), std::move(phi), std::move(inv)};
  }
  std::optional<Tensor> inv;
  if (check_associative(carrier.algebra)) inv = invert_power(carrier.algebra, phi);
  Tensor filler = inv ? std::move(*inv) : Tensor(f, n, 3);
  return QuasiBialgebra{std::move(carrier), std::move(phi), std::move(filler)};
}

Json write_quasi(const QuasiBialgebra& h) {
  Json out = write_ncoalg(h.carrier);
  out["phi"] = write_sparse(h.phi);
  out["phi_inv"] = write_sparse(h.phi_inv);
  return out;
}

DualQuasiBialgebra read_dual_quasi(const Json& doc, const std::optional<Field>& field) {
  NAlgObject carrier = read_nalg(doc, field);
  const Field& f = carrier.algebra.field();
  const std::size_t n = carrier.algebra.dim();
  Tensor omega = sparse(member(doc, "omega", "$"), f, n, 3, "$.omega");
  if (const Json* p = optional_member(doc, "omega_inv")) {
    Tensor inv = sparse(*p, f, n, 3, "$.omega_inv");
    return DualQuasiBialgebra{std::move(carrier), std::move(omega), std::move(inv)};
  }
  std::optional<Tensor> inv;
  if (check_coassociative(carrier.coalgebra)) inv = invert_power(convolution_algebra(carrier.coalgebra), omega);
  Tensor filler = inv ? std::move(*inv) : Tensor(f, n, 3);
  return DualQuasiBialgebra{std::move(carrier), std::move(omega), std::move(filler)};
}

Json write_dual_quasi(const DualQuasiBialgebra& u) {
  Json out = write_nalg(u.carrier);
  out["omega"] = write_sparse(u.omega);
  out["omega_inv"] = write_sparse(u.omega_inv);
  return out;
}

Twist read_twist(const Json& doc, const QuasiBialgebra& h) {
  const Field& f = h.algebra().field();
  const std::size_t n = h.algebra().dim();
  Tensor t = sparse(member(doc, "f", "$"), f, n, 2, "$.f");
  if (const Json* p = optional_member(doc, "f_inv")) {
    Twist tw{std::move(t), sparse(*p, f, n, 2, "$.f_inv")};
    if (Verdict v = check_twist(h, tw); !v) throw PreconditionError("invalid twist: " + v.detail, v.witness);
    return tw;
  }
  return make_twist(h, std::move(t));
}

Json write_twist(const Twist& f) { return Json{{"f", write_sparse(f.f)}, {"f_inv", write_sparse(f.f_inv)}}; }

QuasiAntipode read_antipode(const Json& doc, const FinAlgebra& a) {
  const Field& f = a.field();
  const std::size_t n = a.dim();
  const Json& rows = array(member(doc, "s", "$"), "$.s");
  if (rows.size() != n) throw SchemaError("$.s: expected " + std::to_string(n) + " rows");
  Mat s(f, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    Vec row = vector(rows[i], f, n, at("$.s", i));
    for (std::size_t j = 0; j < n; ++j) s(i, j) = row[j];
  }
  return QuasiAntipode{std::move(s), vector(member(doc, "alpha", "$"), f, n, "$.alpha"),
                       vector(member(doc, "beta", "$"), f, n, "$.beta")};
}

Json write_antipode(const QuasiAntipode& qa) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < qa.s.rows(); ++i) rows.push_back(write_vector(qa.s.row(i)));
  return Json{{"s", rows}, {"alpha", write_vector(qa.alpha)}, {"beta", write_vector(qa.beta)}};
}

}  // namespace nacalg::io
