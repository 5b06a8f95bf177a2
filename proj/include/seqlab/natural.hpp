#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace seqlab {

// Arbitrary-precision non-negative integer. Callers keep values >= 0.
using Natural = mpz_class;

// Exact fraction; GMP keeps it in lowest terms after canonicalize().
using Rational = mpq_class;

// Raised for inputs outside an operation's domain. The CLI maps it to exit 2.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Natural parse_natural(std::string_view text);
std::string to_string(const Natural& n);
std::string to_string(const Rational& q);

// Number of decimal digits; digit_count(0) == 1.
std::size_t digit_count(const Natural& n);
std::size_t digit_count(std::uint64_t n);

bool fits_u64(const Natural& n);
std::uint64_t to_u64(const Natural& n);
Natural from_u64(std::uint64_t v);

Rational make_rational(const Natural& num, const Natural& den);

constexpr unsigned kMaxDigitWidth = 18;

constexpr std::uint64_t pow10_u64(unsigned e) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) r *= 10;
  return r;
}

// Fixed-width decimal digit vector; leading zeros are significant.
// Stored as (value, width) so digit maps run on machine words.
class DigitString {
 public:
  DigitString() = default;
  DigitString(std::uint64_t value, unsigned width);

  static DigitString from_digits(const std::vector<std::uint8_t>& digits);
  // "00024" -> width 5, value 24.
  static DigitString parse(std::string_view text);

  unsigned width() const { return width_; }
  std::uint64_t value() const { return value_; }
  std::vector<std::uint8_t> digits() const;
  std::string str() const;

  friend bool operator==(const DigitString&, const DigitString&) = default;
  friend auto operator<=>(const DigitString&, const DigitString&) = default;

 private:
  std::uint64_t value_ = 0;
  unsigned width_ = 1;
};

}  // namespace seqlab
