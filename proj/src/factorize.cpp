#include <algorithm>
#include <map>
#include <optional>

#include "seqlab/numerics.hpp"

namespace seqlab {

namespace {

constexpr std::uint64_t kTrialLimit = 10000;

using Clock = std::chrono::steady_clock;

// Pollard-Brent rho. Returns a nontrivial factor, or nullopt when the
// deadline passes first.
std::optional<Natural> brent_rho(const Natural& n, gmp_randclass& rng, Clock::time_point deadline) {
  if (mpz_even_p(n.get_mpz_t())) return Natural(2);
  while (Clock::now() < deadline) {
    Natural y = rng.get_z_range(n - 1) + 1;
    const Natural c = rng.get_z_range(n - 1) + 1;
    const unsigned long m = 128;
    Natural g = 1, q = 1, x, ys;
    unsigned long r = 1;
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = (y * y + c) % n;
          q = q * abs(x - y) % n;
        }
        g = gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r *= 2;
      if (r > (1ul << 40) || Clock::now() >= deadline) break;
    } while (g == 1);
    if (g == n) {
      // Backtrack one step at a time from the saved position.
      do {
        ys = (ys * ys + c) % n;
        g = gcd(Natural(abs(x - ys)), n);
      } while (g == 1);
    }
    if (g != 1 && g != n) return g;
  }
  return std::nullopt;
}

}  // namespace

Factorization factorize(const Natural& n, const FactorOptions& options) {
  if (n < 1) throw DomainError("factorize needs n >= 1");
  std::map<Natural, unsigned long> found;
  Factorization out;
  Natural m = n;

  for (std::uint64_t p = 2; p <= kTrialLimit; p += (p == 2 ? 1 : 2)) {
    if (m == 1) break;
    if (Natural(p) * p > m) break;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
      ++found[Natural(p)];
    }
  }

  const auto deadline = Clock::now() + options.budget;
  // Seeding the Mersenne twister is not free, so only do it when rho runs.
  std::optional<gmp_randclass> rng;

  std::vector<Natural> pending;
  if (m > 1) pending.push_back(m);
  while (!pending.empty()) {
    Natural c = pending.back();
    pending.pop_back();
    if (c == 1) continue;
    if (is_prime(c).prime_like()) {
      ++found[c];
      continue;
    }
    if (auto pp = is_perfect_power(c)) {
      for (unsigned long i = 0; i < pp->exponent; ++i) pending.push_back(pp->base);
      continue;
    }
    if (!rng) {
      rng.emplace(gmp_randinit_mt);
      rng->seed(Natural(static_cast<unsigned long>(options.seed)));
    }
    auto d = brent_rho(c, *rng, deadline);
    if (!d) {
      out.complete = false;
      out.unfactored *= c;
      continue;
    }
    pending.push_back(*d);
    pending.push_back(c / *d);
  }

  for (auto& [p, e] : found) out.factors.push_back({p, e});
  return out;
}

}  // namespace seqlab
