#pragma once

// Exact rational scalar.
//
// Values whose reduced numerator and denominator fit in a signed 64-bit word
// are stored inline and combined with 128-bit intermediates; anything larger
// is promoted to a GMP rational and demoted again when a result shrinks back.
// Both representations are always fully reduced with a positive denominator,
// so equality of the stored form is equality of the value.

#include <gmp.h>
#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <limits>
#include <memory>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace zone {

__extension__ using i128 = __int128;
__extension__ using u128 = unsigned __int128;

class Rational {
 public:
  Rational() = default;
  Rational(int value) : num_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long value) : num_(value) { check_small_num(); }  // NOLINT
  Rational(long long value) : num_(value) { check_small_num(); }  // NOLINT
  Rational(std::int64_t num, std::int64_t den) { assign128(num, den); }

  explicit Rational(const mpq_class& q) { assign(q); }

  Rational(const Rational& other)
      : num_(other.num_),
        den_(other.den_),
        big_(other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr) {}
  Rational(Rational&&) noexcept = default;
  Rational& operator=(const Rational& other) {
    if (this != &other) {
      num_ = other.num_;
      den_ = other.den_;
      if (other.big_) {
        if (big_) {
          *big_ = *other.big_;
        } else {
          big_ = std::make_unique<mpq_class>(*other.big_);
        }
      } else {
        big_.reset();
      }
    }
    return *this;
  }
  Rational& operator=(Rational&&) noexcept = default;
  ~Rational() = default;

  /// Parses an integer or `p/q` literal of any length. Throws
  /// std::invalid_argument on malformed text or a zero denominator.
  static Rational parse(std::string_view text);

  [[nodiscard]] bool is_small() const noexcept { return !big_; }
  [[nodiscard]] int sign() const noexcept {
    if (big_) return mpq_sgn(big_->get_mpq_t());
    return (num_ > 0) - (num_ < 0);
  }
  [[nodiscard]] bool is_zero() const noexcept { return sign() == 0; }
  [[nodiscard]] bool is_integer() const noexcept {
    if (big_) return mpz_cmp_ui(big_->get_den_mpz_t(), 1) == 0;
    return den_ == 1;
  }

  [[nodiscard]] mpq_class to_mpq() const {
    if (big_) return *big_;
    mpq_class q;
    mpq_set_si(q.get_mpq_t(), num_, static_cast<unsigned long>(den_));
    return q;
  }
  [[nodiscard]] std::string numerator_str() const {
    return big_ ? big_->get_num().get_str() : std::to_string(num_);
  }
  [[nodiscard]] std::string denominator_str() const {
    return big_ ? big_->get_den().get_str() : std::to_string(den_);
  }
  /// Canonical `num/den` form; the denominator is always written.
  [[nodiscard]] std::string str() const {
    return numerator_str() + "/" + denominator_str();
  }
  [[nodiscard]] double to_double() const {
    if (big_) return big_->get_d();
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  Rational operator-() const {
    Rational r(*this);
    r.negate();
    return r;
  }
  void negate() {
    if (big_) {
      mpq_neg(big_->get_mpq_t(), big_->get_mpq_t());
    } else {
      num_ = -num_;
    }
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      if (a.den_ == 1 && b.den_ == 1) return from128(i128(a.num_) + b.num_, 1);
      // Knuth's reduction keeps the gcd work in 64 bits.
      const std::int64_t g = std::gcd(a.den_, b.den_);
      const i128 num = i128(a.num_) * (b.den_ / g) + i128(b.num_) * (a.den_ / g);
      const i128 den = i128(a.den_ / g) * b.den_;
      return reduce128(num, den, g);
    }
    return big_op(a, b, mpq_add);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      if (a.den_ == 1 && b.den_ == 1) return from128(i128(a.num_) - b.num_, 1);
      const std::int64_t g = std::gcd(a.den_, b.den_);
      const i128 num = i128(a.num_) * (b.den_ / g) - i128(b.num_) * (a.den_ / g);
      const i128 den = i128(a.den_ / g) * b.den_;
      return reduce128(num, den, g);
    }
    return big_op(a, b, mpq_sub);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      if (a.num_ == 0 || b.num_ == 0) return Rational();
      const std::int64_t g1 = std::gcd(a.num_, b.den_);
      const std::int64_t g2 = std::gcd(b.num_, a.den_);
      return from128(i128(a.num_ / g1) * (b.num_ / g2),
                     i128(a.den_ / g2) * (b.den_ / g1));
    }
    return big_op(a, b, mpq_mul);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    if (!a.big_ && !b.big_) {
      if (a.num_ == 0) return Rational();
      const std::int64_t g1 = std::gcd(a.num_, b.num_);
      const std::int64_t g2 = std::gcd(a.den_, b.den_);
      i128 num = i128(a.num_ / g1) * (b.den_ / g2);
      i128 den = i128(a.den_ / g2) * (b.num_ / g1);
      if (den < 0) {
        num = -num;
        den = -den;
      }
      return from128(num, den);
    }
    return big_op(a, b, mpq_div);
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend int compare(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      if (a.den_ == b.den_) return (a.num_ > b.num_) - (a.num_ < b.num_);
      const i128 l = i128(a.num_) * b.den_;
      const i128 r = i128(b.num_) * a.den_;
      return (l > r) - (l < r);
    }
    const int c = mpq_cmp(a.to_mpq().get_mpq_t(), b.to_mpq().get_mpq_t());
    return (c > 0) - (c < 0);
  }
  friend bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.big_ && b.big_) return mpq_equal(a.big_->get_mpq_t(), b.big_->get_mpq_t()) != 0;
    return false;  // mixed forms never hold equal values
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return compare(a, b) <=> 0;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  static constexpr i128 kMax = std::numeric_limits<std::int64_t>::max();

  void check_small_num() {
    if (num_ == std::numeric_limits<std::int64_t>::min()) {
      big_ = std::make_unique<mpq_class>(to_mpq_raw(num_, 1));
    }
  }

  static mpq_class to_mpq_raw(std::int64_t num, std::int64_t den) {
    mpq_class q;
    mpz_set_si(q.get_num_mpz_t(), num);
    mpz_set_si(q.get_den_mpz_t(), den);
    q.canonicalize();
    return q;
  }

  static u128 uabs(i128 v) {
    return v < 0 ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v);
  }

  static u128 gcd128(u128 a, u128 b) {
    while (b != 0) {
      if (a <= ~std::uint64_t{0} && b <= ~std::uint64_t{0}) {
        return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
      }
      a %= b;
      std::swap(a, b);
    }
    return a;
  }

  static void set_mpz128(mpz_t z, i128 v) {
    const u128 u = uabs(v);
    mpz_set_ui(z, static_cast<unsigned long>(u >> 64));
    mpz_mul_2exp(z, z, 64);
    mpz_add_ui(z, z, static_cast<unsigned long>(u & ~std::uint64_t{0}));
    if (v < 0) mpz_neg(z, z);
  }

  // num/den already reduced, den > 0.
  static Rational from128(i128 num, i128 den) {
    Rational r;
    if (num >= -kMax && num <= kMax && den <= kMax) {
      r.num_ = static_cast<std::int64_t>(num);
      r.den_ = static_cast<std::int64_t>(den);
    } else {
      r.big_ = std::make_unique<mpq_class>();
      set_mpz128(r.big_->get_num_mpz_t(), num);
      set_mpz128(r.big_->get_den_mpz_t(), den);
    }
    return r;
  }

  // Reduces num/den where any common factor divides g.
  static Rational reduce128(i128 num, i128 den, std::int64_t g) {
    if (num == 0) return Rational();
    if (g != 1) {
      const auto rem = static_cast<std::int64_t>(uabs(num) % static_cast<u128>(g));
      const std::int64_t g2 = std::gcd(rem, g);
      if (g2 != 1) {
        num /= g2;
        den /= g2;
      }
    }
    return from128(num, den);
  }

  void assign128(i128 num, i128 den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const u128 g = gcd128(uabs(num), static_cast<u128>(den));
    if (g > 1) {
      num /= static_cast<i128>(g);
      den /= static_cast<i128>(g);
    }
    *this = from128(num, den);
  }

  void assign(const mpq_class& q) {
    if (mpz_fits_slong_p(q.get_num_mpz_t()) && mpz_fits_slong_p(q.get_den_mpz_t())) {
      const long n = mpz_get_si(q.get_num_mpz_t());
      if (n != std::numeric_limits<long>::min()) {
        num_ = n;
        den_ = mpz_get_si(q.get_den_mpz_t());
        big_.reset();
        return;
      }
    }
    big_ = std::make_unique<mpq_class>(q);
  }

  static Rational big_op(const Rational& a, const Rational& b,
                         void (*op)(mpq_ptr, mpq_srcptr, mpq_srcptr)) {
    mpq_class out;
    op(out.get_mpq_t(), a.to_mpq().get_mpq_t(), b.to_mpq().get_mpq_t());
    Rational r;
    r.assign(out);
    return r;
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::unique_ptr<mpq_class> big_;
};

inline Rational Rational::parse(std::string_view text) {
  auto valid_int = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s) {
      if (c < '0' || c > '9') return false;
    }
    return true;
  };
  const auto slash = text.find('/');
  std::string_view num_text = text.substr(0, slash);
  std::string_view den_text = slash == std::string_view::npos ? "1" : text.substr(slash + 1);
  if (!valid_int(num_text) || !valid_int(den_text) || den_text.front() == '-' ||
      den_text.front() == '+') {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  if (num_text.front() == '+') num_text.remove_prefix(1);
  mpq_class q;
  q.get_num().set_str(std::string(num_text), 10);
  q.get_den().set_str(std::string(den_text), 10);
  if (q.get_den() == 0) {
    throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  }
  q.canonicalize();
  return Rational(q);
}

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

}  // namespace zone
