#pragma once

// Exact scalars: arbitrary-precision integers and reduced rationals backed by
// GMP, plus the Eigen::NumTraits glue that lets them sit inside fixed-size
// Eigen matrices.

#include <compare>
#include <concepts>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include <Eigen/Core>

namespace pyth {

class Int {
 public:
  Int() = default;
  template <std::integral T>
  Int(T value) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_signed_v<T>) {
      value_ = static_cast<signed long>(value);
    } else {
      value_ = static_cast<unsigned long>(value);
    }
  }
  explicit Int(mpz_class value) : value_(std::move(value)) {}

  /// Parses an optionally signed decimal integer. Throws std::invalid_argument.
  static Int parse(std::string_view text);

  const mpz_class& mpz() const { return value_; }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool fits_int64() const;
  std::int64_t to_int64() const;
  std::string str() const { return value_.get_str(); }

  Int operator-() const { return Int(mpz_class(-value_)); }
  Int& operator+=(const Int& o) { value_ += o.value_; return *this; }
  Int& operator-=(const Int& o) { value_ -= o.value_; return *this; }
  Int& operator*=(const Int& o) { value_ *= o.value_; return *this; }

  friend Int operator+(Int a, const Int& b) { return a += b; }
  friend Int operator-(Int a, const Int& b) { return a -= b; }
  friend Int operator*(Int a, const Int& b) { return a *= b; }

  friend bool operator==(const Int& a, const Int& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Int& a, const Int& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

  friend std::ostream& operator<<(std::ostream& os, const Int& v);

 private:
  mpz_class value_;
};

Int abs(const Int& v);
/// Floor division; `divisor` must be nonzero.
Int floor_div(const Int& dividend, const Int& divisor);
/// Largest r with r*r <= v; `v` must be non-negative.
Int isqrt(const Int& v);
bool is_square(const Int& v);
Int gcd(const Int& a, const Int& b);

class Rat {
 public:
  Rat() = default;
  template <std::integral T>
  Rat(T value) : value_(Int(value).mpz()) {}  // NOLINT(google-explicit-constructor)
  Rat(const Int& value) : value_(value.mpz()) {}  // NOLINT(google-explicit-constructor)
  /// Throws std::domain_error on a zero denominator.
  Rat(const Int& num, const Int& den);
  explicit Rat(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

  /// Accepts "p" or "p/q" with decimal integers; rejects decimals and exponents.
  static Rat parse(std::string_view text);

  const mpq_class& mpq() const { return value_; }

  Int numerator() const { return Int(mpz_class(value_.get_num())); }
  Int denominator() const { return Int(mpz_class(value_.get_den())); }
  bool is_integer() const { return value_.get_den() == 1; }
  /// Precondition: is_integer().
  Int to_int() const { return numerator(); }
  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  /// "p" for integers, "p/q" otherwise.
  std::string str() const;

  Rat operator-() const { return Rat(mpq_class(-value_)); }
  Rat& operator+=(const Rat& o) { value_ += o.value_; return *this; }
  Rat& operator-=(const Rat& o) { value_ -= o.value_; return *this; }
  Rat& operator*=(const Rat& o) { value_ *= o.value_; return *this; }
  /// Throws std::domain_error on division by zero.
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& v);

 private:
  mpq_class value_;
};

Rat abs(const Rat& v);

/// Uniform integrality test so templated code can ask either scalar.
inline bool is_integral_value(const Int&) { return true; }
inline bool is_integral_value(const Rat& v) { return v.is_integer(); }

}  // namespace pyth

namespace Eigen {

template <>
struct NumTraits<pyth::Int> : GenericNumTraits<pyth::Int> {
  using Real = pyth::Int;
  using NonInteger = pyth::Rat;
  using Literal = pyth::Int;
  using Nested = pyth::Int;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 4,
    MulCost = 8,
  };
  static inline int digits10() { return 0; }
  static inline pyth::Int epsilon() { return 0; }
  static inline pyth::Int dummy_precision() { return 0; }
};

template <>
struct NumTraits<pyth::Rat> : GenericNumTraits<pyth::Rat> {
  using Real = pyth::Rat;
  using NonInteger = pyth::Rat;
  using Literal = pyth::Rat;
  using Nested = pyth::Rat;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 32,
  };
  static inline int digits10() { return 0; }
  static inline pyth::Rat epsilon() { return 0; }
  static inline pyth::Rat dummy_precision() { return 0; }
};

}  // namespace Eigen
