#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "seqlab/numerics.hpp"

namespace seqlab {

// --- metallic means -----------------------------------------------------------

// Family A: positive root of x^2 - n x - 1; family B: of x^2 - x - n.
enum class MetallicFamily { A, B };

struct MetallicSpec {
  MetallicFamily family = MetallicFamily::A;
  std::uint64_t n = 1;
};

struct Convergent {
  Natural p;
  Natural q;
  friend bool operator==(const Convergent&, const Convergent&) = default;
};

// A: convergents of [n; n, n, ...]. B: iterates of x -> 1 + n/x from x = 1.
// Either way consecutive terms lie on opposite sides of the root.
std::vector<Convergent> metallic_convergents(const MetallicSpec& spec, std::size_t count);

// The root itself when the discriminant is a perfect square.
std::optional<Rational> metallic_rational_root(const MetallicSpec& spec);

// Sign of the defining quadratic at p/q: -1, 0 or +1.
int metallic_side(const MetallicSpec& spec, const Convergent& c);

// --- S-derived functions ----------------------------------------------------------

enum class SFunction { S1, S2, S3, Fs, Theta, ThetaBar };

const char* to_string(SFunction f);
SFunction parse_s_function(const std::string& name);

// S1 = 1/S(n), S2 = S(n)/n, S3 = n/S(n).
Rational s_family(SFunction kind, const Natural& n);

struct FsTheta {
  Natural fs;        // sum of S(p^x) over primes p <= x
  Natural theta;     // ... over primes p dividing x
  Natural thetabar;  // ... over primes p <= x not dividing x
};

FsTheta fs_theta(std::uint64_t x);

// Any of the six functions as an exact rational.
Rational evaluate(SFunction f, std::uint64_t n);

struct LipschitzProbe {
  Rational max_diff;
  std::uint64_t argmax = 0;  // smallest n achieving max |f(n+1) - f(n)|
};

// max over n in [lo, hi) of |f(n+1) - f(n)|.
LipschitzProbe lipschitz_probe(SFunction f, std::uint64_t lo, std::uint64_t hi, int jobs = 0);

// --- special expressions ------------------------------------------------------------

// x1^x2 + x2^x3 + ... + xn^x1 for xi > 1 with gcd(x1..xn) = 1.
Natural expression_cycle(const std::vector<std::uint64_t>& xs);

struct ExpressionHit {
  std::vector<std::uint64_t> xs;
  Natural value;
  PrimalityVerdict verdict;
};

// Admissible tuples over 2..max_base of the given length whose value is
// prime or probable prime, in lexicographic order.
std::vector<ExpressionHit> expression_prime_search(std::uint64_t max_base, std::size_t length,
                                                   unsigned rounds = kDefaultRounds,
                                                   std::uint64_t seed = kDefaultSeed, int jobs = 0);
std::vector<ExpressionHit> expression_prime_search_serial(std::uint64_t max_base, std::size_t length,
                                                          unsigned rounds = kDefaultRounds,
                                                          std::uint64_t seed = kDefaultSeed);

// Non-increasing k_1 >= k_2 >= ... >= 2 with prod k_i! == n, reported ascending.
std::optional<std::vector<std::uint64_t>> product_of_factorials(const Natural& n);

// --- anomalous cancellation ---------------------------------------------------------

struct LuckyFraction {
  std::uint64_t numerator = 0;
  std::uint64_t denominator = 0;
  Rational reduced;
  friend bool operator==(const LuckyFraction&, const LuckyFraction&) = default;
};

// a/b with a < b, both num_digits long, where striking one shared nonzero
// digit from each leaves an equal fraction.
std::vector<LuckyFraction> lucky_cancellations(unsigned num_digits);

}  // namespace seqlab
