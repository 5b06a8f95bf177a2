#include "seqlab/numerics.hpp"

#include <algorithm>
#include <climits>
#include <string>

namespace seqlab {

Natural parse_natural(std::string_view text) {
  if (text.empty()) throw DomainError("empty number");
  for (char ch : text) {
    if (ch < '0' || ch > '9') throw DomainError("not a non-negative integer: " + std::string(text));
  }
  return Natural(std::string(text), 10);
}

std::string to_string(const Natural& n) { return n.get_str(10); }

std::string to_string(const Rational& q) { return q.get_str(10); }

std::size_t digit_count(const Natural& n) {
  if (n == 0) return 1;
  // mpz_sizeinbase may overshoot by one for base 10.
  std::size_t estimate = mpz_sizeinbase(n.get_mpz_t(), 10);
  Natural bound;
  mpz_ui_pow_ui(bound.get_mpz_t(), 10, estimate - 1);
  return n < bound ? estimate - 1 : estimate;
}

std::size_t digit_count(std::uint64_t n) {
  std::size_t count = 1;
  while (n >= 10) {
    n /= 10;
    ++count;
  }
  return count;
}

bool fits_u64(const Natural& n) {
  return sgn(n) >= 0 && mpz_sizeinbase(n.get_mpz_t(), 2) <= 64;
}

std::uint64_t to_u64(const Natural& n) {
  if (!fits_u64(n)) throw DomainError("value does not fit 64 bits: " + to_string(n));
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, n.get_mpz_t());
  return out;
}

Natural from_u64(std::uint64_t v) {
  Natural out;
  mpz_import(out.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
  return out;
}

Rational make_rational(const Natural& num, const Natural& den) {
  if (den == 0) throw DomainError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// --- DigitString -----------------------------------------------------------

DigitString::DigitString(std::uint64_t value, unsigned width) : value_(value), width_(width) {
  if (width == 0 || width > kMaxDigitWidth) {
    throw DomainError("digit width must be in 1.." + std::to_string(kMaxDigitWidth));
  }
  if (value >= pow10_u64(width)) {
    throw DomainError(std::to_string(value) + " does not fit in " + std::to_string(width) + " digits");
  }
}

DigitString DigitString::from_digits(const std::vector<std::uint8_t>& digits) {
  std::uint64_t v = 0;
  for (auto d : digits) {
    if (d > 9) throw DomainError("digit out of range");
    v = v * 10 + d;
  }
  return DigitString(v, static_cast<unsigned>(digits.size()));
}

DigitString DigitString::parse(std::string_view text) {
  std::vector<std::uint8_t> digits;
  for (char ch : text) {
    if (ch < '0' || ch > '9') throw DomainError("not a digit string: " + std::string(text));
    digits.push_back(static_cast<std::uint8_t>(ch - '0'));
  }
  return from_digits(digits);
}

std::vector<std::uint8_t> DigitString::digits() const {
  std::vector<std::uint8_t> out(width_);
  std::uint64_t v = value_;
  for (unsigned i = width_; i-- > 0;) {
    out[i] = static_cast<std::uint8_t>(v % 10);
    v /= 10;
  }
  return out;
}

std::string DigitString::str() const {
  std::string s = std::to_string(value_);
  return std::string(width_ - s.size(), '0') + s;
}

// --- digit kernels ---------------------------------------------------------

Natural concat_decimal(const Natural& a, const Natural& b) {
  Natural shift;
  mpz_ui_pow_ui(shift.get_mpz_t(), 10, digit_count(b));
  return a * shift + b;
}

std::uint64_t reverse_fixed(std::uint64_t value, unsigned width) {
  std::uint64_t r = 0;
  for (unsigned i = 0; i < width; ++i) {
    r = r * 10 + value % 10;
    value /= 10;
  }
  return r;
}

DigitString reverse_fixed(const DigitString& d) {
  return DigitString(reverse_fixed(d.value(), d.width()), d.width());
}

unsigned digital_root(std::uint64_t n) {
  if (n == 0) throw DomainError("digital_root is defined for n >= 1");
  return static_cast<unsigned>(1 + (n - 1) % 9);
}

Natural digital_root(const Natural& n) {
  if (n <= 0) throw DomainError("digital_root is defined for n >= 1");
  Natural m = n - 1;
  return 1 + static_cast<unsigned long>(mpz_fdiv_ui(m.get_mpz_t(), 9));
}

// --- Smarandache function ---------------------------------------------------

std::uint64_t legendre_valuation(std::uint64_t m, std::uint64_t p) {
  std::uint64_t total = 0;
  while (m >= p) {
    m /= p;
    total += m;
  }
  return total;
}

std::uint64_t smarandache_S_prime_power_u64(std::uint64_t p, std::uint64_t a) {
  if (a == 0) throw DomainError("exponent must be >= 1");
  if (!is_prime_u64(p)) throw DomainError(std::to_string(p) + " is not prime");
  // The answer is p*k for some 1 <= k <= a; v_p((p*k)!) is monotone in k.
  std::uint64_t lo = 1, hi = a;
  while (lo < hi) {
    std::uint64_t mid = lo + (hi - lo) / 2;
    if (legendre_valuation(p * mid, p) >= a) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return p * lo;
}

namespace {

Natural legendre_valuation(const Natural& m, const Natural& p) {
  Natural total = 0, q = m;
  while (q >= p) {
    q /= p;
    total += q;
  }
  return total;
}

bool product_fits(const Natural& p, const Natural& a) {
  return fits_u64(p) && fits_u64(a) && mpz_sizeinbase(p.get_mpz_t(), 2) + mpz_sizeinbase(a.get_mpz_t(), 2) <= 63;
}

}  // namespace

Natural smarandache_S_prime_power(const Natural& p, const Natural& a) {
  if (a < 1) throw DomainError("exponent must be >= 1");
  if (!is_prime(p).prime_like()) throw DomainError(to_string(p) + " is not prime");
  if (product_fits(p, a)) return from_u64(smarandache_S_prime_power_u64(to_u64(p), to_u64(a)));
  Natural lo = 1, hi = a;
  while (lo < hi) {
    Natural mid = (lo + hi) / 2;
    if (legendre_valuation(Natural(p * mid), p) >= a) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return p * lo;
}

Natural smarandache_S(const Natural& n) {
  if (n < 1) throw DomainError("S(n) is defined for n >= 1");
  if (n == 1) return 1;
  Factorization f = factorize(n);
  if (!f.complete) throw std::runtime_error("factorization budget exceeded for " + to_string(n));
  Natural best = 1;
  for (const auto& pp : f.factors) {
    Natural s = smarandache_S_prime_power(pp.prime, Natural(pp.exponent));
    if (s > best) best = s;
  }
  return best;
}

Natural largest_prime_factor(const Natural& n) {
  if (n < 2) throw DomainError("P(n) is defined for n >= 2");
  Factorization f = factorize(n);
  if (!f.complete) throw std::runtime_error("factorization budget exceeded for " + to_string(n));
  return f.factors.back().prime;
}

// --- perfect powers ----------------------------------------------------------

bool is_perfect_square(const Natural& n) {
  if (sgn(n) < 0) return false;
  return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

namespace {

std::optional<Natural> exact_root(const Natural& n, unsigned long e) {
  Natural r;
  if (mpz_root(r.get_mpz_t(), n.get_mpz_t(), e) != 0) return r;
  return std::nullopt;
}

}  // namespace

std::optional<PerfectPower> is_perfect_power(const Natural& n) {
  if (n < 1) throw DomainError("perfect power test needs n >= 1");
  if (n == 1) return PerfectPower{1, 2};

  // If n = b^E with E maximal, n is a p-th power for every prime p | E and
  // the maximal exponent of the p-th root is E / p.
  unsigned long total = 1;
  Natural current = n;
  bool changed = true;
  while (changed && current > 1) {
    changed = false;
    const std::size_t bits = mpz_sizeinbase(current.get_mpz_t(), 2);
    for (std::uint64_t p : primes_up_to(bits)) {
      if (auto r = exact_root(current, p)) {
        current = *r;
        total *= p;
        changed = true;
        break;
      }
    }
  }
  if (total == 1) return std::nullopt;
  return PerfectPower{current, total};
}

}  // namespace seqlab
