#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <boost/multiprecision/cpp_int.hpp>

namespace bwcoh {

using Rational = boost::multiprecision::cpp_rational;

/// Element of the prime field F_p, stored as a residue in [0, p).
struct Residue {
  std::uint32_t value = 0;
  std::uint32_t prime = 0;
};

class Scalar;

/// Describes the coefficient field: exact rationals or F_p.
class Field {
 public:
  static Field rationals() { return Field{}; }
  /// Throws std::invalid_argument unless p is a prime below 2^31.
  static Field prime_field(std::uint64_t p);
  /// Accepts "q", "rationals", "p:<prime>" and "prime <prime>".
  static Field parse(std::string_view text);

  bool is_rational() const { return prime_ == 0; }
  std::uint32_t prime() const { return prime_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(std::int64_t v) const;
  /// Parses "3", "-2/5" (rationals) or an integer reduced mod p.
  Scalar parse_scalar(std::string_view text) const;

  /// Canonical descriptor: "rationals" or "p:<prime>".
  std::string describe() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  friend class Scalar;
  static Field unchecked_prime(std::uint32_t p) {
    Field f;
    f.prime_ = p;
    return f;
  }

  std::uint32_t prime_ = 0;
};

class Scalar {
 public:
  Scalar() : value_(Rational(0)) {}
  explicit Scalar(Rational q) : value_(std::move(q)) {}
  explicit Scalar(Residue r) : value_(r) {}

  Field field() const;
  bool is_zero() const;
  bool is_one() const;

  /// Throws std::domain_error when zero.
  Scalar inverse() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  const Rational* as_rational() const { return std::get_if<Rational>(&value_); }
  const Residue* as_residue() const { return std::get_if<Residue>(&value_); }

  /// "3", "-1/2", or the residue in decimal.
  std::string str() const;

 private:
  void require_same_field(const Scalar& o) const;

  std::variant<Rational, Residue> value_;
};

}  // namespace bwcoh
