#include "nacalg/scalar.hpp"

#include <charconv>
#include <ostream>

#include "nacalg/errors.hpp"

namespace nacalg {

namespace {

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::int64_t reduce(std::int64_t v, std::int64_t p) {
  v %= p;
  return v < 0 ? v + p : v;
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  return reduce(t, p);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
  s = trim(s);
  std::string_view digits = s;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string_view::npos)
    throw ParseError("malformed scalar \"" + std::string(whole) + "\"");
  std::string str(s.front() == '+' ? s.substr(1) : s);
  return mpz_class(str, 10);
}

}  // namespace

Field Field::prime(std::int64_t p) {
  if (p >= (std::int64_t{1} << 31) || !is_prime(p))
    throw Error("GF(p) requires a prime p < 2^31, got " + std::to_string(p));
  return Field(p);
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long v) const {
  if (is_rational()) return Scalar(mpq_class(v));
  return Scalar(reduce(v, p_), p_);
}

Scalar Field::from_ratio(long num, long den) const { return from_int(num) / from_int(den); }

std::string Field::to_string() const {
  return is_rational() ? std::string("Q") : "Fp:" + std::to_string(p_);
}

Field Field::parse(std::string_view text) {
  text = trim(text);
  if (text == "Q") return rationals();
  if (text.starts_with("Fp:")) {
    std::int64_t p = 0;
    auto body = text.substr(3);
    auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), p);
    if (ec == std::errc() && ptr == body.data() + body.size()) {
      if (p < (std::int64_t{1} << 31) && is_prime(p)) return prime(p);
      throw ParseError("field \"" + std::string(text) + "\" needs a prime p < 2^31");
    }
  }
  throw ParseError("unknown field \"" + std::string(text) + "\" (expected Q or Fp:<p>)");
}

Scalar::Scalar(mpq_class q) : v_(std::move(q)) { std::get<mpq_class>(v_).canonicalize(); }

Scalar::Scalar(std::int64_t value, std::int64_t modulus) : v_(Residue{reduce(value, modulus), modulus}) {}

Field Scalar::field() const noexcept {
  if (auto r = residue()) return Field(r->modulus);
  return Field::rationals();
}

bool Scalar::is_zero() const noexcept {
  if (auto r = residue()) return r->value == 0;
  return sgn(*rational()) == 0;
}

bool Scalar::is_one() const noexcept {
  if (auto r = residue()) return r->value == 1;
  return *rational() == 1;
}

void Scalar::require_same_field(const Scalar& o) const {
  auto a = residue(), b = o.residue();
  if ((a == nullptr) != (b == nullptr) || (a && a->modulus != b->modulus))
    throw FieldMismatch("arithmetic between " + field().to_string() + " and " + o.field().to_string());
}

Scalar& Scalar::operator+=(const Scalar& o) {
  require_same_field(o);
  if (auto r = std::get_if<Residue>(&v_)) {
    r->value = (r->value + o.residue()->value) % r->modulus;
  } else {
    std::get<mpq_class>(v_) += *o.rational();
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  require_same_field(o);
  if (auto r = std::get_if<Residue>(&v_)) {
    r->value = reduce(r->value - o.residue()->value, r->modulus);
  } else {
    std::get<mpq_class>(v_) -= *o.rational();
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  require_same_field(o);
  if (auto r = std::get_if<Residue>(&v_)) {
    r->value = (r->value * o.residue()->value) % r->modulus;
  } else {
    std::get<mpq_class>(v_) *= *o.rational();
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::operator-() const {
  if (auto r = residue()) return Scalar(-r->value, r->modulus);
  return Scalar(mpq_class(-*rational()));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error("division by zero");
  if (auto r = residue()) return Scalar(inverse_mod(r->value, r->modulus), r->modulus);
  return Scalar(mpq_class(1 / *rational()));
}

bool operator==(const Scalar& a, const Scalar& b) {
  auto ra = a.residue(), rb = b.residue();
  if (ra && rb) return ra->modulus == rb->modulus && ra->value == rb->value;
  if (!ra && !rb) return *a.rational() == *b.rational();
  return false;
}

std::string Scalar::to_string() const {
  if (auto r = residue()) return std::to_string(r->value) + " mod " + std::to_string(r->modulus);
  return rational()->get_str();
}

Scalar Scalar::parse(std::string_view text, const Field& field) {
  auto body = trim(text);
  if (auto pos = body.find("mod"); pos != std::string_view::npos) {
    mpz_class value = parse_integer(body.substr(0, pos), text);
    mpz_class mod = parse_integer(body.substr(pos + 3), text);
    if (field.is_rational() || mod != field.characteristic())
      throw FieldMismatch("scalar \"" + std::string(text) + "\" does not belong to " + field.to_string());
    mpz_class r = value % mod;
    return Scalar(r.get_si(), field.characteristic());
  }
  mpz_class num, den = 1;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    num = parse_integer(body.substr(0, slash), text);
    den = parse_integer(body.substr(slash + 1), text);
    if (den == 0) throw ParseError("zero denominator in \"" + std::string(text) + "\"");
  } else {
    num = parse_integer(body, text);
  }
  if (field.is_rational()) return Scalar(mpq_class(num, den));
  const std::int64_t p = field.characteristic();
  mpz_class n = num % p, d = den % p;
  if (d == 0) throw ParseError("denominator of \"" + std::string(text) + "\" vanishes mod " + std::to_string(p));
  return Scalar(n.get_si(), p) / Scalar(d.get_si(), p);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace nacalg
