#include <array>

#include "seqlab/numerics.hpp"

namespace seqlab {

namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

// Strong probable-prime test to base a; n odd, n > a.
bool strong_probable_prime(std::uint64_t n, std::uint64_t a) {
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  std::uint64_t x = pow_mod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (unsigned r = 1; r < s; ++r) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

bool strong_probable_prime(const Natural& n, const Natural& a) {
  Natural d = n - 1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
  Natural x;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  const Natural n_minus_1 = n - 1;
  if (x == 1 || x == n_minus_1) return true;
  for (unsigned long r = 1; r < s; ++r) {
    x = x * x % n;
    if (x == n_minus_1) return true;
  }
  return false;
}

// First twelve primes: a proven deterministic witness set for n < 3.3e24.
constexpr std::array<std::uint64_t, 12> kWitnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

const std::vector<std::uint64_t>& small_primes() {
  static const std::vector<std::uint64_t> table = primes_up_to(1000);
  return table;
}

}  // namespace

const char* to_string(PrimalityKind k) {
  switch (k) {
    case PrimalityKind::prime:
      return "prime";
    case PrimalityKind::composite:
      return "composite";
    case PrimalityKind::probable_prime:
      return "probable-prime";
  }
  return "?";
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  if (limit < 2) return out;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : kWitnesses) {
    if (n % p == 0) return n == p;
  }
  if (n < 37 * 37) return true;
  for (std::uint64_t a : kWitnesses) {
    if (!strong_probable_prime(n, a)) return false;
  }
  return true;
}

PrimalityVerdict is_prime(const Natural& n, unsigned rounds, std::uint64_t seed) {
  if (rounds < 1) throw DomainError("primality test needs at least one round");
  if (sgn(n) <= 0) return {PrimalityKind::composite, 0};
  if (mpz_sizeinbase(n.get_mpz_t(), 2) <= kDeterministicBits) {
    return {is_prime_u64(to_u64(n)) ? PrimalityKind::prime : PrimalityKind::composite, 0};
  }
  for (std::uint64_t p : small_primes()) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return {PrimalityKind::composite, 0};
  }
  if (!strong_probable_prime(n, Natural(2))) return {PrimalityKind::composite, 0};

  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(Natural(static_cast<unsigned long>(seed)));
  const Natural span = n - 3;
  for (unsigned r = 0; r < rounds; ++r) {
    Natural a = rng.get_z_range(span) + 2;  // a in [2, n-2]
    if (!strong_probable_prime(n, a)) return {PrimalityKind::composite, 0};
  }
  return {PrimalityKind::probable_prime, rounds};
}

}  // namespace seqlab
