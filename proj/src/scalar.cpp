#include "bwcoh/scalar.hpp"

#include <charconv>
#include <stdexcept>

namespace bwcoh {

namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint32_t reduce(std::int64_t v, std::uint32_t p) {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

std::uint32_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint32_t p) {
  std::uint64_t result = 1;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace

Field Field::prime_field(std::uint64_t p) {
  if (p >= (1ULL << 31) || !is_prime(p))
    throw std::invalid_argument("field characteristic must be a prime below 2^31, got " +
                                std::to_string(p));
  Field f;
  f.prime_ = static_cast<std::uint32_t>(p);
  return f;
}

Field Field::parse(std::string_view text) {
  text = trim(text);
  if (text == "q" || text == "Q" || text == "rationals") return rationals();
  std::string_view digits;
  if (text.starts_with("p:"))
    digits = text.substr(2);
  else if (text.starts_with("prime "))
    digits = trim(text.substr(6));
  else
    throw std::invalid_argument("unknown field descriptor '" + std::string(text) + "'");
  std::uint64_t p = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
  if (ec != std::errc{} || ptr != digits.data() + digits.size())
    throw std::invalid_argument("bad prime in field descriptor '" + std::string(text) + "'");
  return prime_field(p);
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(std::int64_t v) const {
  if (is_rational()) return Scalar(Rational(v));
  return Scalar(Residue{reduce(v, prime_), prime_});
}

Scalar Field::parse_scalar(std::string_view text) const {
  text = trim(text);
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den))
    throw std::invalid_argument("malformed scalar '" + std::string(text) + "'");
  if (num.front() == '+') num.remove_prefix(1);
  if (den.front() == '+') den.remove_prefix(1);
  boost::multiprecision::cpp_int n(std::string{num});
  boost::multiprecision::cpp_int d(std::string{den});
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  if (is_rational()) return Scalar(Rational(n, d));
  auto mod = [&](const boost::multiprecision::cpp_int& v) {
    boost::multiprecision::cpp_int r = v % prime_;
    if (r < 0) r += prime_;
    return Scalar(Residue{r.convert_to<std::uint32_t>(), prime_});
  };
  return mod(n) / mod(d);
}

std::string Field::describe() const {
  return is_rational() ? std::string("rationals") : "p:" + std::to_string(prime_);
}

Field Scalar::field() const {
  if (auto r = as_residue()) return Field::unchecked_prime(r->prime);
  return Field::rationals();
}

bool Scalar::is_zero() const {
  if (auto r = as_residue()) return r->value == 0;
  return std::get<Rational>(value_) == 0;
}

bool Scalar::is_one() const {
  if (auto r = as_residue()) return r->value == 1;
  return std::get<Rational>(value_) == 1;
}

void Scalar::require_same_field(const Scalar& o) const {
  auto a = as_residue();
  auto b = o.as_residue();
  if ((a == nullptr) != (b == nullptr) || (a && a->prime != b->prime))
    throw std::domain_error("arithmetic between scalars of different fields");
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (auto r = as_residue()) return Scalar(Residue{pow_mod(r->value, r->prime - 2, r->prime), r->prime});
  return Scalar(Rational(1) / std::get<Rational>(value_));
}

Scalar Scalar::operator-() const {
  if (auto r = as_residue()) return Scalar(Residue{r->value == 0 ? 0 : r->prime - r->value, r->prime});
  return Scalar(Rational(-std::get<Rational>(value_)));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  require_same_field(o);
  if (auto r = std::get_if<Residue>(&value_)) {
    r->value = static_cast<std::uint32_t>((std::uint64_t{r->value} + o.as_residue()->value) % r->prime);
  } else {
    std::get<Rational>(value_) += std::get<Rational>(o.value_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  require_same_field(o);
  if (auto r = std::get_if<Residue>(&value_)) {
    r->value = static_cast<std::uint32_t>(std::uint64_t{r->value} * o.as_residue()->value % r->prime);
  } else {
    std::get<Rational>(value_) *= std::get<Rational>(o.value_);
  }
  return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
  auto ra = a.as_residue();
  auto rb = b.as_residue();
  if (ra && rb) return ra->prime == rb->prime && ra->value == rb->value;
  if (!ra && !rb) return *a.as_rational() == *b.as_rational();
  return false;
}

std::string Scalar::str() const {
  if (auto r = as_residue()) return std::to_string(r->value);
  return std::get<Rational>(value_).str();
}

}  // namespace bwcoh
