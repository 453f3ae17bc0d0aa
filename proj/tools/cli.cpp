#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "nacalg/demos.hpp"
#include "nacalg/errors.hpp"
#include "nacalg/filtered.hpp"
#include "nacalg/io.hpp"
#include "nacalg/quasi.hpp"

namespace nacalg::cli {

namespace {

using io::Json;

/// Largest T(C) the tensor-bialgebra command builds densely.
constexpr std::size_t kWordCap = 200;

struct Options {
  std::string field_text;
  bool json = false;
  bool strict = false;
  std::size_t truncation = 8;

  std::optional<Field> field() const {
    if (field_text.empty()) return std::nullopt;
    return Field::parse(field_text);
  }
  Field field_or_q() const { return field().value_or(Field::rationals()); }
};

struct Summary {
  std::string kind;
  std::string source;
  std::size_t dim = 0;
  Field field = Field::rationals();
};

std::string demo_name(const std::string& source) {
  return source.rfind("demo:", 0) == 0 ? source.substr(5) : std::string();
}

Json load(const std::string& source, const Options& opt) {
  if (std::string name = demo_name(source); !name.empty()) {
    if (!demos::find(name)) throw SchemaError("unknown demo \"" + name + "\"; see `demo --list`");
    auto doc = demos::document(name, opt.field_or_q(), opt.truncation);
    if (!doc) throw SchemaError("demo " + name + " has no document form; use the nonsplit command");
    return *doc;
  }
  return io::load_document(source);
}

/// Demos are built over --field already; files are re-read over it.
std::optional<Field> read_field(const std::string& source, const Options& opt) {
  return demo_name(source).empty() ? opt.field() : std::nullopt;
}

void write_document(const Json& doc, const std::string& path, std::ostream& out) {
  if (path == "-") {
    out << io::dump_document(doc);
    return;
  }
  std::ofstream f(path);
  if (!f) throw ParseError("cannot write " + path);
  f << io::dump_document(doc);
}

std::string tuple(const std::vector<std::size_t>& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? ", " : "") + std::to_string(w[i]);
  return s + ")";
}

std::string named_tuple(const std::vector<std::size_t>& w, const std::vector<std::string>& names) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? ", " : "") + names[w[i]];
  return s + ")";
}

/// Σ c_i e_i with basis names, e.g. "g" or "1 + 1/2 g".
std::string element(const Vec& v, const std::vector<std::string>& names) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    std::string c = v[i].to_string();
    bool neg = !c.empty() && c[0] == '-';
    if (neg) c = c.substr(1);
    if (!s.empty()) s += neg ? " - " : " + ";
    else if (neg) s += "-";
    s += (c == "1" ? "" : c + " ") + names[i];
  }
  return s.empty() ? "0" : s;
}

bool required_failure(const CheckEntry& e) {
  return e.required && (e.status == Status::Fail || e.status == Status::Skipped);
}

int exit_code(const Report& r, const Options& opt) {
  for (const auto& e : r.entries)
    if (required_failure(e) || (opt.strict && e.status == Status::Fail)) return AxiomFailure;
  return Ok;
}

Json summary_json(const Summary& s) {
  return Json{{"kind", s.kind}, {"source", s.source}, {"dim", s.dim}, {"field", s.field.to_string()}};
}

Json report_json(const Report& r) {
  Json checks = Json::array();
  for (const auto& e : r.entries) {
    Json c{{"name", e.name}, {"status", to_string(e.status)}, {"required", e.required}};
    if (e.status == Status::Fail) c["witness"] = e.witness;
    if (!e.detail.empty()) c["detail"] = e.detail;
    checks.push_back(std::move(c));
  }
  return checks;
}

/// Code points, which is what the terminal columns follow for our labels.
std::size_t display_width(const std::string& s) {
  return std::count_if(s.begin(), s.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; });
}

/// Prints the report and returns the exit code. `names` labels witnesses
/// that are tuples of basis indices.
int emit(const std::string& command, const Summary& s, const Report& r, const Options& opt, std::ostream& out,
         const std::vector<std::string>* names = nullptr, Json extra = Json::object(),
         const std::vector<std::string>& lines = {}) {
  const int code = exit_code(r, opt);
  if (opt.json) {
    Json doc{{"command", command}, {"object", summary_json(s)}, {"checks", report_json(r)}, {"exit", code}};
    for (auto& [k, v] : extra.items()) doc[k] = v;
    out << doc.dump(2) << "\n";
    return code;
  }
  out << s.kind << " " << s.source << ": dim " << s.dim << " over " << s.field.to_string() << "\n";
  std::size_t width = 0;
  for (const auto& e : r.entries) width = std::max(width, display_width(e.name));
  for (const auto& e : r.entries) {
    out << "  " << e.name << std::string(width - display_width(e.name) + 2, ' ') << to_string(e.status);
    if (!e.required && e.status != Status::Pass) out << " (informational)";
    if (e.status == Status::Fail && !e.witness.empty()) {
      out << "  witness " << tuple(e.witness);
      bool nameable = names && std::all_of(e.witness.begin(), e.witness.end(),
                                           [&](std::size_t i) { return i < names->size(); });
      if (nameable) out << " = " << named_tuple(e.witness, *names);
    }
    if (!e.detail.empty() && e.status != Status::Pass) out << "  " << e.detail;
    out << "\n";
  }
  for (const auto& l : lines) out << l << "\n";
  return code;
}

Verdict guarded(Report& r, const std::string& name, const std::function<Verdict()>& check) {
  try {
    Verdict v = check();
    r.add(name, v, false);
    return v;
  } catch (const CharacteristicError& e) {
    r.add(CheckEntry{name, Status::Skipped, {}, e.what(), false});
    return Verdict::pass();
  }
}

Report algebra_report(const FinAlgebra& a) {
  Report r;
  r.add("unital", check_unital(a));
  guarded(r, "associative", [&] { return check_associative(a); });
  guarded(r, "commutative", [&] { return check_commutative(a); });
  guarded(r, "alternative", [&] { return check_alternative(a); });
  guarded(r, "jordan", [&] { return check_jordan(a); });
  return r;
}

Report coalgebra_report(const FinCoalgebra& c) {
  Report r;
  r.add("counital", check_counital(c));
  guarded(r, "coassociative", [&] { return check_coassociative(c); });
  guarded(r, "cocommutative", [&] { return check_cocommutative(c); });
  guarded(r, "coalternative", [&] { return check_coalternative(c); });
  guarded(r, "jordan coalgebra", [&] { return check_jordan_coalgebra(c); });
  return r;
}

/// Entries of a truncated object hold only up to the truncation.
void mark_truncated(Report& r, const std::string& why) {
  for (auto& e : r.entries) {
    if (e.status == Status::Pass) e.status = Status::UpToTruncation;
    e.detail = e.detail.empty() ? why : e.detail + "; " + why;
  }
}

int cmd_check(const std::string& kind, const std::string& source, const Options& opt, std::ostream& out) {
  if (demo_name(source) == "kx-nonsplit") {
    if (kind != "dualquasi") throw SchemaError("kx-nonsplit is a dual quasi-bialgebra; use `check dualquasi`");
    if (opt.field() && !opt.field()->is_rational()) throw CharacteristicError("the non-split ω is defined over Q only");
    Report r = check_nonsplit_cocycle(opt.truncation);
    return emit("check", {kind, source, opt.truncation + 1, Field::rationals()}, r, opt, out);
  }
  const Json doc = load(source, opt);
  const auto field = read_field(source, opt);
  if (kind == "algebra") {
    FinAlgebra a = io::read_algebra(doc, field);
    return emit("check", {kind, source, a.dim(), a.field()}, algebra_report(a), opt, out, &a.basis());
  }
  if (kind == "coalgebra") {
    FinCoalgebra c = io::read_coalgebra(doc, field);
    Report r = coalgebra_report(c);
    if (demo_name(source) == "diamond")
      mark_truncated(r, "Δ(X^" + std::to_string(opt.truncation) + ") drops the terms above degree " +
                            std::to_string(opt.truncation));
    return emit("check", {kind, source, c.dim(), c.field()}, r, opt, out, &c.basis());
  }
  if (kind == "nalg") {
    NAlgObject x = io::read_nalg(doc, field);
    return emit("check", {kind, source, x.algebra.dim(), x.algebra.field()}, check_nalg(x), opt, out, &x.algebra.basis());
  }
  if (kind == "ncoalg") {
    NCoalgObject x = io::read_ncoalg(doc, field);
    return emit("check", {kind, source, x.algebra.dim(), x.algebra.field()}, check_ncoalg(x), opt, out,
                &x.algebra.basis());
  }
  if (kind == "quasi") {
    QuasiBialgebra h = io::read_quasi(doc, field);
    return emit("check", {kind, source, h.algebra().dim(), h.algebra().field()}, check_quasi(h), opt, out);
  }
  DualQuasiBialgebra u = io::read_dual_quasi(doc, field);
  return emit("check", {kind, source, u.algebra().dim(), u.algebra().field()}, check_dual_quasi(u), opt, out);
}

int cmd_dualize(const std::string& source, std::string kind, const std::string& out_path, const Options& opt,
                std::ostream& out) {
  const Json doc = load(source, opt);
  const auto field = read_field(source, opt);
  if (kind.empty()) {
    if (doc.contains("phi") || doc.contains("omega")) throw SchemaError("$: use finite-dual or split for reassociators");
    if (doc.contains("mul")) kind = "algebra";
    else if (doc.contains("comul")) kind = "coalgebra";
    else if (doc.contains("algebra") && doc.contains("coalgebra"))
      kind = check_ncoalg(io::read_ncoalg(doc, field)).axioms_hold() ? "ncoalg" : "nalg";
    else throw SchemaError("$: cannot tell the document kind; pass --kind");
  }
  Json result;
  Summary s{"", source, 0, Field::rationals()};
  if (kind == "algebra") {
    FinCoalgebra c = dual_coalgebra(io::read_algebra(doc, field));
    result = io::write_coalgebra(c);
    s = {"coalgebra", source, c.dim(), c.field()};
  } else if (kind == "coalgebra") {
    FinAlgebra a = convolution_algebra(io::read_coalgebra(doc, field));
    result = io::write_algebra(a);
    s = {"algebra", source, a.dim(), a.field()};
  } else if (kind == "ncoalg") {
    NAlgObject y = lift_dual(io::read_ncoalg(doc, field));
    result = io::write_nalg(y);
    s = {"nalg", source, y.algebra.dim(), y.algebra.field()};
  } else {
    NCoalgObject x = lift_dual_rev(io::read_nalg(doc, field));
    result = io::write_ncoalg(x);
    s = {"ncoalg", source, x.algebra.dim(), x.algebra.field()};
  }
  if (!out_path.empty()) write_document(result, out_path, out);
  if (out_path == "-") return Ok;
  if (opt.json)
    out << Json{{"command", "dualize"}, {"object", summary_json(s)}, {"written", out_path}, {"exit", 0}}.dump(2) << "\n";
  else
    out << "dual " << s.kind << " of " << source << ": dim " << s.dim << " over " << s.field.to_string()
        << (out_path.empty() ? "" : ", written to " + out_path) << "\n";
  return Ok;
}

int cmd_finite_dual(const std::string& source, const std::string& out_path, const Options& opt, std::ostream& out) {
  QuasiBialgebra h = io::read_quasi(load(source, opt), read_field(source, opt));
  DualQuasiBialgebra u = finite_dual_quasi(h);
  if (!out_path.empty()) write_document(io::write_dual_quasi(u), out_path, out);
  if (out_path == "-") return Ok;
  return emit("finite-dual", {"dualquasi", source, u.algebra().dim(), u.algebra().field()}, check_dual_quasi(u), opt,
              out);
}

int cmd_split(const std::string& source, const std::string& out_path, const Options& opt, std::ostream& out) {
  DualQuasiBialgebra u = io::read_dual_quasi(load(source, opt), read_field(source, opt));
  QuasiBialgebra h = split_quasi(u);
  if (!out_path.empty()) write_document(io::write_quasi(h), out_path, out);
  if (out_path == "-") return Ok;
  Report r = check_quasi(h);
  r.add("ζ(Φ) = ω", zeta(u, h.phi) == u.omega ? Verdict::pass() : Verdict::fail({}, "ζ(Φ) ≠ ω"));
  std::vector<std::string> lines{"Φ coordinates:"};
  Json coords = Json::array();
  const auto& names = h.algebra().basis();
  for (std::size_t f = 0; f < h.phi.size(); ++f) {
    if (h.phi.flat(f).is_zero()) continue;
    auto idx = h.phi.multi_index(f);
    lines.push_back("  " + names[idx[0]] + "⊗" + names[idx[1]] + "⊗" + names[idx[2]] + "  " + h.phi.flat(f).to_string());
    coords.push_back(Json{idx[0], idx[1], idx[2], h.phi.flat(f).to_string()});
  }
  return emit("split", {"quasi", source, h.algebra().dim(), h.algebra().field()}, r, opt, out, nullptr,
              Json{{"phi", coords}}, lines);
}

int cmd_twist(const std::string& source, const std::string& twist_source, const std::string& antipode_source,
              const std::string& out_path, const Options& opt, std::ostream& out) {
  QuasiBialgebra h = io::read_quasi(load(source, opt), read_field(source, opt));
  Twist f = io::read_twist(load(twist_source, opt), h);
  QuasiBialgebra ht = twist(h, f);
  if (!out_path.empty()) write_document(io::write_quasi(ht), out_path, out);
  if (out_path == "-") return Ok;

  std::optional<QuasiAntipode> qa;
  if (!antipode_source.empty())
    qa = io::read_antipode(load(antipode_source, opt), h.algebra());
  else if (demo_name(source) == "h2" || demo_name(source) == "h2-trivial")
    qa = demos::h2_antipode(h.algebra().field());
  std::vector<std::string> lines;
  Json extra = Json::object();
  if (qa) {
    QuasiAntipode tw = twist_antipode(h, *qa, f);
    const auto& names = h.algebra().basis();
    Vec prod = h.algebra().mul(tw.beta, tw.alpha);
    lines = {"β_F = " + element(tw.beta, names), "α_F = " + element(tw.alpha, names),
             "β_F·α_F = " + element(prod, names)};
    extra = Json{{"beta_F", element(tw.beta, names)}, {"alpha_F", element(tw.alpha, names)},
                 {"beta_F_alpha_F", element(prod, names)}};
  }
  return emit("twist", {"quasi", source, ht.algebra().dim(), ht.algebra().field()}, check_quasi(ht), opt, out,
              nullptr, extra, lines);
}

int cmd_antipode(const std::string& source, const std::string& antipode_source, const Options& opt,
                 std::ostream& out) {
  QuasiBialgebra h = io::read_quasi(load(source, opt), read_field(source, opt));
  QuasiAntipode qa = io::read_antipode(load(antipode_source, opt), h.algebra());
  return emit("antipode-check", {"quasi", source, h.algebra().dim(), h.algebra().field()}, check_antipode(h, qa), opt,
              out, &h.algebra().basis());
}

int cmd_hankel(const std::string& seq, const std::string& ratio, const std::string& values, std::size_t max_order,
               std::size_t window, const Options& opt, std::ostream& out) {
  const Field q = Field::rationals();
  if (opt.field() && !opt.field()->is_rational()) throw CharacteristicError("hankel works over Q");
  std::size_t w = window ? window : std::max<std::size_t>(32, 2 * max_order + 2);
  Sequence s;
  if (!values.empty()) {
    std::vector<Scalar> v;
    std::stringstream ss(values);
    for (std::string item; std::getline(ss, item, ',');) v.push_back(Scalar::parse(item, q));
    s = values_sequence(std::move(v));
  } else if (seq == "fibonacci") {
    s = fibonacci_sequence(w);
  } else if (seq == "geometric") {
    s = geometric_sequence(Scalar::parse(ratio, q), w);
  } else if (seq == "factorial") {
    s = factorial_sequence(w);
  } else {
    throw SchemaError("--seq must be fibonacci, geometric or factorial, or pass --values");
  }
  HankelResult res = hankel_recursive(s, max_order);
  std::string line;
  Json doc{{"command", "hankel"}, {"sequence", s.name}, {"window", s.window}, {"max_order", max_order}};
  int code = Ok;
  if (res.recurrence) {
    std::string coeffs;
    Json cj = Json::array();
    for (const auto& c : *res.recurrence) {
      coeffs += (coeffs.empty() ? "" : ", ") + c.to_string();
      cj.push_back(c.to_string());
    }
    line = "order " + std::to_string(res.recurrence->size()) + "; coefficients (" + coeffs + ")";
    doc["order"] = res.recurrence->size();
    doc["coefficients"] = cj;
  } else {
    Json certs = Json::array();
    for (const auto& c : res.certificates) certs.push_back(Json{{"size", c.size}, {"det", c.det.to_string()}});
    doc["order"] = nullptr;
    doc["certificates"] = certs;
    doc["certified"] = res.certified;
    if (res.certified) {
      line = "none; nonsingular certificates n=1.." + std::to_string(res.certificates.size());
    } else {
      line = "none; uncertified (window too short or a singular Hankel matrix)";
      code = AxiomFailure;
    }
  }
  doc["exit"] = code;
  if (opt.json)
    out << doc.dump(2) << "\n";
  else
    out << s.name << ": " << line << "\n";
  return code;
}

int cmd_factdet(std::size_t n, const Options& opt, std::ostream& out) {
  const Field f = opt.field_or_q();
  Scalar det = factorial_matrix_det(f, n);
  Scalar expect = factorial_product_square(n);
  int code = det == expect ? Ok : AxiomFailure;
  if (opt.json) {
    out << Json{{"command", "factdet"}, {"n", n}, {"det", det.to_string()}, {"product_square", expect.to_string()},
                {"equal", code == Ok}, {"exit", code}}
               .dump(2)
        << "\n";
  } else {
    out << "det((i+j)!)_{0<=i,j<=" << n << "} = " << det.to_string() << "\n";
    out << "(0!1!...n!)^2 = " << expect.to_string() << (code == Ok ? "  (equal)" : "  (DIFFERENT)") << "\n";
  }
  return code;
}

int cmd_nonsplit(std::size_t N, const Options& opt, std::ostream& out) {
  if (opt.field() && !opt.field()->is_rational()) throw CharacteristicError("the non-split ω is defined over Q only");
  Report r = check_nonsplit_cocycle(N);
  Json reduction = Json::array();
  std::string red;
  for (const auto& v : nonsplit_reduction(N)) {
    reduction.push_back(v.to_string());
    red += (red.empty() ? "" : ", ") + v.to_string();
  }
  return emit("nonsplit", {"dualquasi", "demo:kx-nonsplit", N + 1, Field::rationals()}, r, opt, out, nullptr,
              Json{{"reduction", reduction}}, {"ω(X^n⊗X⊗X), n = 0.." + std::to_string(N) + ": " + red});
}

int cmd_diamond(std::size_t N, const Options& opt, std::ostream& out) {
  auto rows = diamond_closure_growth(N);
  bool ok = true;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    ok = ok && rows[i].closure_dim == rows[i].truncation + 1;
    if (i > 0) ok = ok && rows[i].closure_dim > rows[i - 1].closure_dim;
  }
  const int code = ok ? Ok : AxiomFailure;
  if (opt.json) {
    Json jr = Json::array();
    for (const auto& r : rows)
      jr.push_back(Json{{"truncation", r.truncation}, {"closure_dim", r.closure_dim}, {"boundary", r.touches_boundary}});
    out << Json{{"command", "diamond"}, {"rows", jr}, {"exit", code}}.dump(2) << "\n";
    return code;
  }
  out << "subcoalgebra generated by X^2\n  N   dim   reaches X^N\n";
  for (const auto& r : rows) {
    std::string n = std::to_string(r.truncation), d = std::to_string(r.closure_dim);
    out << "  " << n << std::string(4 - std::min<std::size_t>(n.size(), 3), ' ') << d
        << std::string(6 - std::min<std::size_t>(d.size(), 5), ' ') << (r.touches_boundary ? "yes" : "no") << "\n";
  }
  return code;
}

int cmd_tensor_bialgebra(const std::string& source, std::optional<std::size_t> n_flag, const Options& opt,
                         std::ostream& out) {
  FinCoalgebra c = io::read_coalgebra(load(source, opt), read_field(source, opt));
  std::size_t N = n_flag.value_or(opt.truncation);
  auto words = [&](std::size_t len) {
    std::size_t total = 0;
    for (std::size_t k = 0; k <= len; ++k) total += ipow(c.dim(), k);
    return total;
  };
  std::string note;
  if (words(N) > kWordCap) {
    if (n_flag) throw PreconditionError("T(C) at length " + std::to_string(N) + " has " + std::to_string(words(N)) +
                                        " words, over the limit of " + std::to_string(kWordCap));
    std::size_t capped = N;
    while (capped > 0 && words(capped) > kWordCap) --capped;
    note = "length capped from " + std::to_string(N) + " to " + std::to_string(capped) + " (" +
           std::to_string(words(N)) + " words exceed the limit of " + std::to_string(kWordCap) + ")";
    N = capped;
  }
  Report r = check_T_of_C(c, N);
  std::vector<std::string> lines{"words of length ≤ " + std::to_string(N) + ": " + std::to_string(words(N))};
  if (!note.empty()) lines.push_back(note);
  return emit("tensor-bialgebra", {"T(C)", source, words(N), c.field()}, r, opt, out, nullptr,
              Json{{"truncation", N}}, lines);
}

int cmd_demo(bool list, const std::string& show, const Options& opt, std::ostream& out) {
  if (!show.empty()) {
    write_document(load("demo:" + show, opt), "-", out);
    return Ok;
  }
  (void)list;
  if (opt.json) {
    Json arr = Json::array();
    for (const auto& d : demos::registry()) arr.push_back(Json{{"name", d.name}, {"kind", d.kind}, {"summary", d.summary}});
    out << Json{{"command", "demo"}, {"demos", arr}}.dump(2) << "\n";
    return Ok;
  }
  for (const auto& d : demos::registry())
    out << d.name << std::string(13 - std::min<std::size_t>(d.name.size(), 12), ' ') << d.kind
        << std::string(11 - std::min<std::size_t>(d.kind.size(), 10), ' ') << d.summary << "\n";
  return Ok;
}

int report_error(const std::exception& e, int code, const Options& opt, std::ostream& out, std::ostream& err,
                 const std::vector<std::size_t>* witness = nullptr) {
  err << "error: " << e.what();
  if (witness && !witness->empty()) err << " at " << tuple(*witness);
  err << "\n";
  if (opt.json) {
    Json doc{{"error", e.what()}, {"exit", code}};
    if (witness && !witness->empty()) doc["witness"] = *witness;
    out << doc.dump(2) << "\n";
  }
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Structure-constant checker for non-associative algebras, coalgebras and quasi-bialgebras", "nacalg"};
  app.fallthrough();
  app.require_subcommand(1);
  Options opt;
  app.add_option("--field", opt.field_text, "Q or Fp:<p>");
  app.add_flag("--json", opt.json, "machine-readable output");
  app.add_flag("--strict", opt.strict, "informational failures also exit 1");
  app.add_option("--truncation", opt.truncation, "degree for truncated objects")->capture_default_str();

  std::string kind, source, second, out_path, dual_kind, seq = "factorial", ratio = "2", values, show;
  std::size_t max_order = 8, window = 0, n = 4, big_n = 0;
  std::optional<std::size_t> t_n;
  bool list = false;

  auto* check = app.add_subcommand("check", "run the axiom suite for a document");
  check->add_option("kind", kind)->required()->check(CLI::IsMember({"algebra", "coalgebra", "nalg", "ncoalg", "quasi", "dualquasi"}));
  check->add_option("source", source, "file or demo:<name>")->required();

  auto* dualize = app.add_subcommand("dualize", "dual coalgebra / convolution algebra / dual object");
  dualize->add_option("source", source)->required();
  dualize->add_option("--kind", dual_kind)->check(CLI::IsMember({"algebra", "coalgebra", "nalg", "ncoalg"}));
  dualize->add_option("--out", out_path, "output file, - for stdout");

  auto* fdual = app.add_subcommand("finite-dual", "finite dual of a quasi-bialgebra");
  fdual->add_option("source", source)->required();
  fdual->add_option("--out", out_path);

  auto* split = app.add_subcommand("split", "reconstruct Φ from a dual quasi-bialgebra");
  split->add_option("source", source)->required();
  split->add_option("--out", out_path);

  std::string antipode_source;
  auto* tw = app.add_subcommand("twist", "twist a quasi-bialgebra");
  tw->add_option("source", source)->required();
  tw->add_option("--twist", second, "twist document")->required();
  tw->add_option("--antipode", antipode_source, "quasi-antipode document");
  tw->add_option("--out", out_path);

  auto* anti = app.add_subcommand("antipode-check", "check a quasi-antipode");
  anti->add_option("source", source)->required();
  anti->add_option("antipode", second)->required();

  auto* hankel = app.add_subcommand("hankel", "least linear recurrence of a sequence");
  hankel->add_option("--seq", seq)->capture_default_str();
  hankel->add_option("--ratio", ratio, "ratio of the geometric sequence")->capture_default_str();
  hankel->add_option("--values", values, "comma-separated terms");
  hankel->add_option("--max-order", max_order)->capture_default_str();
  hankel->add_option("--window", window, "terms inspected (default max(32, 2r+2))");

  auto* factdet = app.add_subcommand("factdet", "det((i+j)!)");
  factdet->add_option("--n", n)->capture_default_str();

  auto* nonsplit = app.add_subcommand("nonsplit", "cocycle check of the non-split ω on k[X]");
  nonsplit->add_option("--N", big_n, "exponent bound (default: --truncation)");

  auto* diamond = app.add_subcommand("diamond", "closure growth in the non-locally-finite coalgebra");
  diamond->add_option("--N", big_n, "largest truncation (default: --truncation)");

  auto* tb = app.add_subcommand("tensor-bialgebra", "checks on T(C) for a coalgebra C");
  tb->add_option("source", source)->required();
  tb->add_option("--N", t_n, "word length bound (default: --truncation)");

  auto* demo = app.add_subcommand("demo", "built-in objects");
  demo->add_flag("--list", list);
  demo->add_option("--show", show, "print the document of a demo");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? Ok : InputError;
  }

  try {
    if (!opt.field_text.empty()) (void)opt.field();
    if (*check) return cmd_check(kind, source, opt, out);
    if (*dualize) return cmd_dualize(source, dual_kind, out_path, opt, out);
    if (*fdual) return cmd_finite_dual(source, out_path, opt, out);
    if (*split) return cmd_split(source, out_path, opt, out);
    if (*tw) return cmd_twist(source, second, antipode_source, out_path, opt, out);
    if (*anti) return cmd_antipode(source, second, opt, out);
    if (*hankel) return cmd_hankel(seq, ratio, values, max_order, window, opt, out);
    if (*factdet) return cmd_factdet(n, opt, out);
    if (*nonsplit) return cmd_nonsplit(big_n ? big_n : opt.truncation, opt, out);
    if (*diamond) return cmd_diamond(big_n ? big_n : opt.truncation, opt, out);
    if (*tb) return cmd_tensor_bialgebra(source, t_n, opt, out);
    if (*demo) return cmd_demo(list, show, opt, out);
  } catch (const PreconditionError& e) {
    return report_error(e, PreconditionFailure, opt, out, err, &e.witness());
  } catch (const CharacteristicError& e) {
    return report_error(e, PreconditionFailure, opt, out, err);
  } catch (const ParseError& e) {
    return report_error(e, InputError, opt, out, err);
  } catch (const SchemaError& e) {
    return report_error(e, InputError, opt, out, err);
  } catch (const FieldMismatch& e) {
    return report_error(e, InputError, opt, out, err);
  } catch (const DimensionMismatch& e) {
    return report_error(e, InputError, opt, out, err);
  } catch (const Error& e) {
    return report_error(e, AxiomFailure, opt, out, err);
  }
  return InputError;
}

}  // namespace nacalg::cli
