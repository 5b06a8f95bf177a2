#include <doctest.h>

#include <set>

#include "seqlab/numerics.hpp"

using namespace seqlab;

namespace {

bool trial_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t brute_S(std::uint64_t n) {
  std::uint64_t f = 1 % n;
  for (std::uint64_t m = 1;; ++m) {
    f = f * m % n;
    if (f == 0) return m;
  }
}

std::uint64_t digit_sum_root(std::uint64_t n) {
  while (n >= 10) {
    std::uint64_t s = 0;
    for (; n > 0; n /= 10) s += n % 10;
    n = s;
  }
  return n;
}

}  // namespace

TEST_CASE("decimal helpers") {
  CHECK(concat_decimal(12, 345) == 12345);
  CHECK(concat_decimal(1, 0) == 10);
  CHECK(concat_decimal(Natural("123456789012345678901234567890"), 7) == Natural("1234567890123456789012345678907"));
  CHECK(digit_count(Natural(0)) == 1);
  CHECK(digit_count(Natural("1000000000000000000000")) == 22);
  CHECK(digit_count(std::uint64_t{999}) == 3);
  CHECK(parse_natural("00042") == 42);
  CHECK_THROWS_AS(parse_natural("-3"), DomainError);
  CHECK_THROWS_AS(parse_natural(""), DomainError);
}

TEST_CASE("fixed-width reversal keeps leading zeros") {
  CHECK(reverse_fixed(24, 5) == 42000);
  CHECK(reverse_fixed(42000, 5) == 24);
  CHECK(reverse_fixed(1019, 4) == 9101);
  const auto d = DigitString::parse("00024");
  CHECK(d.width() == 5);
  CHECK(d.value() == 24);
  CHECK(reverse_fixed(d).str() == "42000");
  CHECK(DigitString::from_digits({0, 2}).str() == "02");
  CHECK_THROWS_AS(DigitString(100, 2), DomainError);
  CHECK_THROWS_AS(DigitString(1, 19), DomainError);
  for (std::uint64_t v = 0; v < 10000; v += 7) CHECK(reverse_fixed(reverse_fixed(v, 4), 4) == v);
}

TEST_CASE("digital root matches repeated digit sums") {
  for (std::uint64_t n = 1; n <= 5000; ++n) {
    REQUIRE(digital_root(n) == digit_sum_root(n));
  }
  CHECK(digital_root(Natural("99999999999999999999999")) == 9);
  CHECK_THROWS_AS(digital_root(std::uint64_t{0}), DomainError);
}

TEST_CASE("primality agrees with trial division") {
  for (std::uint64_t n = 0; n < 20000; ++n) REQUIRE(is_prime_u64(n) == trial_prime(n));
  for (std::uint64_t n = 20001; n < 1000000; n += 331) REQUIRE(is_prime(from_u64(n)).prime_like() == trial_prime(n));
  CHECK(primes_up_to(100).size() == 25);
  CHECK(primes_up_to(1).empty());
}

TEST_CASE("primality on hard and large inputs") {
  // Carmichael numbers and base-2 strong pseudoprimes.
  for (std::uint64_t n : {561ull, 1105ull, 1729ull, 2047ull, 3215031751ull, 3825123056546413051ull}) {
    CHECK_FALSE(is_prime_u64(n));
  }
  CHECK(is_prime_u64((1ull << 61) - 1));
  CHECK(is_prime(from_u64((1ull << 61) - 1)).kind == PrimalityKind::prime);

  Natural m89, m67;
  mpz_ui_pow_ui(m89.get_mpz_t(), 2, 89);
  mpz_ui_pow_ui(m67.get_mpz_t(), 2, 67);
  m89 -= 1;
  m67 -= 1;
  const auto v = is_prime(m89);
  CHECK(v.kind == PrimalityKind::probable_prime);
  CHECK(v.witness_rounds >= kDefaultRounds);
  CHECK(is_prime(m67).kind == PrimalityKind::composite);
  // Fixed seed, fixed verdict.
  CHECK(is_prime(m89, 5, 1).kind == is_prime(m89, 5, 1).kind);
  CHECK_THROWS_AS(is_prime(m89, 0), DomainError);
}

TEST_CASE("factorization") {
  Natural m67;
  mpz_ui_pow_ui(m67.get_mpz_t(), 2, 67);
  m67 -= 1;
  const auto f = factorize(m67);
  REQUIRE(f.complete);
  REQUIRE(f.factors.size() == 2);
  CHECK(f.factors[0].prime == 193707721);
  CHECK(f.factors[1].prime == Natural("761838257287"));

  for (std::uint64_t n = 1; n <= 3000; ++n) {
    const auto g = factorize(from_u64(n));
    Natural prod = 1;
    for (const auto& pp : g.factors) {
      REQUIRE(trial_prime(to_u64(pp.prime)));
      for (unsigned i = 0; i < pp.exponent; ++i) prod *= pp.prime;
    }
    REQUIRE(prod == n);
  }
  CHECK(largest_prime_factor(from_u64(2 * 3 * 3 * 97)) == 97);
  CHECK_THROWS_AS(largest_prime_factor(1), DomainError);
}

TEST_CASE("Smarandache function against factorial divisibility") {
  CHECK(smarandache_S(1) == 1);
  for (std::uint64_t n = 1; n <= 2000; ++n) REQUIRE(smarandache_S(from_u64(n)) == brute_S(n));
  CHECK_THROWS_AS(smarandache_S(0), DomainError);

  CHECK(legendre_valuation(std::uint64_t{10}, std::uint64_t{2}) == 8);
  CHECK(legendre_valuation(std::uint64_t{100}, std::uint64_t{5}) == 24);
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull}) {
    for (std::uint64_t a = 1; a <= 6; ++a) {
      std::uint64_t pa = 1;
      for (std::uint64_t i = 0; i < a; ++i) pa *= p;
      REQUIRE(smarandache_S_prime_power_u64(p, a) == brute_S(pa));
      REQUIRE(smarandache_S_prime_power(from_u64(p), from_u64(a)) == brute_S(pa));
    }
  }
  // S(p^a) <= p*a, with equality for a <= p.
  CHECK(smarandache_S_prime_power_u64(3, 3) == 9);
  CHECK(smarandache_S_prime_power_u64(2, 1000) == 1008);
  CHECK_THROWS_AS(smarandache_S_prime_power_u64(4, 2), DomainError);
  CHECK_THROWS_AS(smarandache_S_prime_power_u64(3, 0), DomainError);
}

TEST_CASE("perfect powers against an exhaustive table") {
  const std::uint64_t limit = 200000;
  std::set<std::uint64_t> powers;
  for (std::uint64_t b = 2; b * b <= limit; ++b) {
    for (std::uint64_t v = b * b; v <= limit; v *= b) powers.insert(v);
  }
  for (std::uint64_t n = 2; n <= limit; ++n) {
    const auto pp = is_perfect_power(from_u64(n));
    REQUIRE(pp.has_value() == (powers.count(n) == 1));
    if (pp) {
      Natural back;
      mpz_pow_ui(back.get_mpz_t(), pp->base.get_mpz_t(), pp->exponent);
      REQUIRE(back == n);
      // Maximal exponent: the base itself is not a perfect power.
      REQUIRE_FALSE(is_perfect_power(pp->base).has_value());
    }
  }
  const auto p64 = is_perfect_power(from_u64(1ull << 60));
  REQUIRE(p64);
  CHECK(p64->base == 2);
  CHECK(p64->exponent == 60);
  Natural big;
  mpz_ui_pow_ui(big.get_mpz_t(), 12, 35);
  CHECK(is_perfect_power(big)->exponent == 35);
  CHECK_FALSE(is_perfect_power(big + 1).has_value());
  CHECK(is_perfect_square(144));
  CHECK_FALSE(is_perfect_square(145));
}
