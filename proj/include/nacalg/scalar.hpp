#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

namespace nacalg {

class Scalar;

/// The base field: either the rationals or a prime field GF(p), p < 2^31.
class Field {
 public:
  static Field rationals() { return Field(0); }
  static Field prime(std::int64_t p);

  bool is_rational() const noexcept { return p_ == 0; }
  /// 0 for the rationals.
  std::int64_t characteristic() const noexcept { return p_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long v) const;
  Scalar from_ratio(long num, long den) const;

  /// "Q" or "Fp:<p>".
  std::string to_string() const;
  static Field parse(std::string_view text);

  friend bool operator==(const Field&, const Field&) = default;

 private:
  friend class Scalar;
  explicit Field(std::int64_t p) : p_(p) {}
  std::int64_t p_;
};

/// An exact field element. Rationals are always reduced with positive
/// denominator; residues always lie in [0, p).
class Scalar {
 public:
  struct Residue {
    std::int64_t value;
    std::int64_t modulus;
  };

  explicit Scalar(mpq_class q);
  Scalar(std::int64_t value, std::int64_t modulus);

  Field field() const noexcept;
  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  const mpq_class* rational() const noexcept { return std::get_if<mpq_class>(&v_); }
  const Residue* residue() const noexcept { return std::get_if<Residue>(&v_); }

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const;
  Scalar inverse() const;

  /// Values in different fields compare unequal.
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// "a/b" or "a" for rationals, "a mod p" for residues.
  std::string to_string() const;
  /// Accepts "a", "a/b" and "a mod p". A rational string read into GF(p) is
  /// reduced modulo p; a residue string must name the field's own modulus.
  static Scalar parse(std::string_view text, const Field& field);

 private:
  void require_same_field(const Scalar& o) const;
  std::variant<mpq_class, Residue> v_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace nacalg
