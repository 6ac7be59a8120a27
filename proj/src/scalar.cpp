#include "pyth/scalar.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace pyth {

namespace {

bool is_decimal_integer(std::string_view text) {
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) text.remove_prefix(1);
  if (text.empty()) return false;
  for (char c : text) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

Int Int::parse(std::string_view text) {
  if (!is_decimal_integer(text)) {
    throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  }
  if (text.front() == '+') text.remove_prefix(1);
  return Int(mpz_class(std::string(text), 10));
}

bool Int::fits_int64() const {
  static const mpz_class lo(std::to_string(std::numeric_limits<std::int64_t>::min()));
  static const mpz_class hi(std::to_string(std::numeric_limits<std::int64_t>::max()));
  return value_ >= lo && value_ <= hi;
}

std::int64_t Int::to_int64() const {
  if (!fits_int64()) throw std::overflow_error("integer does not fit in 64 bits: " + str());
  return std::stoll(str());
}

std::ostream& operator<<(std::ostream& os, const Int& v) { return os << v.value_.get_str(); }

Int abs(const Int& v) { return v.sign() < 0 ? -v : v; }

Int floor_div(const Int& dividend, const Int& divisor) {
  if (divisor.is_zero()) throw std::domain_error("division by zero");
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), dividend.mpz().get_mpz_t(), divisor.mpz().get_mpz_t());
  return Int(std::move(q));
}

Int isqrt(const Int& v) {
  if (v.sign() < 0) throw std::domain_error("isqrt of a negative integer");
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), v.mpz().get_mpz_t());
  return Int(std::move(r));
}

bool is_square(const Int& v) { return v.sign() >= 0 && mpz_perfect_square_p(v.mpz().get_mpz_t()) != 0; }

Int gcd(const Int& a, const Int& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.mpz().get_mpz_t(), b.mpz().get_mpz_t());
  return Int(std::move(g));
}

Rat::Rat(const Int& num, const Int& den) {
  if (den.is_zero()) throw std::domain_error("zero denominator");
  value_ = mpq_class(num.mpz(), den.mpz());
  value_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(Int::parse(text));
  const auto den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
    throw std::invalid_argument("denominator must be unsigned: '" + std::string(text) + "'");
  }
  const Int den = Int::parse(den_text);
  if (den.is_zero()) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  return Rat(Int::parse(text.substr(0, slash)), den);
}

std::string Rat::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  value_ /= o.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rat& v) { return os << v.str(); }

Rat abs(const Rat& v) { return v.sign() < 0 ? -v : v; }

}  // namespace pyth
