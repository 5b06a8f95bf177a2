#include "seqlab/analysis.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include <omp.h>

namespace seqlab {

// --- metallic means -----------------------------------------------------------

std::vector<Convergent> metallic_convergents(const MetallicSpec& spec, std::size_t count) {
  if (count < 1) throw DomainError("count must be >= 1");
  if (spec.n < 1) throw DomainError("metallic index n must be >= 1");
  const Natural n = from_u64(spec.n);
  std::vector<Convergent> out;
  out.reserve(count);
  if (spec.family == MetallicFamily::A) {
    Natural p_prev = 1, q_prev = 0, p = n, q = 1;
    for (std::size_t k = 0; k < count; ++k) {
      out.push_back({p, q});
      Natural p_next = n * p + p_prev, q_next = n * q + q_prev;
      p_prev = std::move(p);
      q_prev = std::move(q);
      p = std::move(p_next);
      q = std::move(q_next);
    }
  } else {
    Natural p = 1, q = 1;
    for (std::size_t k = 0; k < count; ++k) {
      out.push_back({p, q});
      // 1 + n / (p/q) = (p + n q) / p
      Natural p_next = p + n * q, q_next = p;
      Natural g = gcd(p_next, q_next);
      p = p_next / g;
      q = q_next / g;
    }
  }
  return out;
}

std::optional<Rational> metallic_rational_root(const MetallicSpec& spec) {
  const Natural n = from_u64(spec.n);
  const Natural disc = spec.family == MetallicFamily::A ? Natural(n * n + 4) : Natural(4 * n + 1);
  if (!is_perfect_square(disc)) return std::nullopt;
  Natural s;
  mpz_sqrt(s.get_mpz_t(), disc.get_mpz_t());
  const Natural b = spec.family == MetallicFamily::A ? n : Natural(1);
  return make_rational(b + s, 2);
}

int metallic_side(const MetallicSpec& spec, const Convergent& c) {
  const Natural n = from_u64(spec.n);
  const Natural v = spec.family == MetallicFamily::A ? Natural(c.p * c.p - n * c.p * c.q - c.q * c.q)
                                                     : Natural(c.p * c.p - c.p * c.q - n * c.q * c.q);
  return sgn(v);
}

// --- S-derived functions ----------------------------------------------------------

const char* to_string(SFunction f) {
  switch (f) {
    case SFunction::S1:
      return "S1";
    case SFunction::S2:
      return "S2";
    case SFunction::S3:
      return "S3";
    case SFunction::Fs:
      return "Fs";
    case SFunction::Theta:
      return "Theta";
    case SFunction::ThetaBar:
      return "ThetaBar";
  }
  return "?";
}

SFunction parse_s_function(const std::string& name) {
  for (auto f : {SFunction::S1, SFunction::S2, SFunction::S3, SFunction::Fs, SFunction::Theta, SFunction::ThetaBar}) {
    if (name == to_string(f)) return f;
  }
  throw DomainError("unknown function: " + name);
}

Rational s_family(SFunction kind, const Natural& n) {
  switch (kind) {
    case SFunction::S1:
      if (n < 2) throw DomainError("S1 is defined for n >= 2");
      return make_rational(1, smarandache_S(n));
    case SFunction::S2:
      if (n < 1) throw DomainError("S2 is defined for n >= 1");
      return make_rational(smarandache_S(n), n);
    case SFunction::S3:
      if (n < 2) throw DomainError("S3 is defined for n >= 2");
      return make_rational(n, smarandache_S(n));
    default:
      throw DomainError("s_family covers S1, S2 and S3 only");
  }
}

FsTheta fs_theta(std::uint64_t x) {
  if (x < 1) throw DomainError("Fs/Theta are defined for x >= 1");
  FsTheta out{0, 0, 0};
  for (std::uint64_t p : primes_up_to(x)) {
    const Natural s = from_u64(smarandache_S_prime_power_u64(p, x));
    out.fs += s;
    if (x % p == 0) {
      out.theta += s;
    } else {
      out.thetabar += s;
    }
  }
  return out;
}

Rational evaluate(SFunction f, std::uint64_t n) {
  switch (f) {
    case SFunction::S1:
    case SFunction::S2:
    case SFunction::S3:
      return s_family(f, from_u64(n));
    case SFunction::Fs:
      return Rational(fs_theta(n).fs);
    case SFunction::Theta:
      return Rational(fs_theta(n).theta);
    case SFunction::ThetaBar:
      return Rational(fs_theta(n).thetabar);
  }
  return Rational(0);
}

LipschitzProbe lipschitz_probe(SFunction f, std::uint64_t lo, std::uint64_t hi, int jobs) {
  if (lo >= hi) throw DomainError("probe needs lo < hi");
  const std::uint64_t min_arg = (f == SFunction::S1 || f == SFunction::S3) ? 2 : 1;
  if (lo < min_arg) throw DomainError(std::string(to_string(f)) + " needs lo >= " + std::to_string(min_arg));

  const std::size_t count = hi - lo + 1;
  std::vector<Rational> values(count);
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 16) num_threads(threads)
  for (std::size_t i = 0; i < count; ++i) values[i] = evaluate(f, lo + i);

  LipschitzProbe best{Rational(-1), lo};
  for (std::size_t i = 0; i + 1 < count; ++i) {
    Rational d = abs(values[i + 1] - values[i]);
    if (d > best.max_diff) best = {d, lo + i};
  }
  return best;
}

// --- special expressions ------------------------------------------------------------

Natural expression_cycle(const std::vector<std::uint64_t>& xs) {
  if (xs.size() < 2) throw DomainError("expression needs at least two terms");
  std::uint64_t g = 0;
  for (auto x : xs) {
    if (x <= 1) throw DomainError("every term must exceed 1");
    g = std::gcd(g, x);
  }
  if (g != 1) throw DomainError("terms must have gcd 1");
  Natural sum = 0, term;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mpz_ui_pow_ui(term.get_mpz_t(), xs[i], xs[(i + 1) % xs.size()]);
    sum += term;
  }
  return sum;
}

namespace {

std::uint64_t tuple_count(std::uint64_t max_base, std::size_t length) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < length; ++i) {
    if (total > (1ull << 40) / (max_base - 1)) throw DomainError("expression search space too large");
    total *= max_base - 1;
  }
  return total;
}

std::vector<std::uint64_t> tuple_at(std::uint64_t index, std::uint64_t max_base, std::size_t length) {
  std::vector<std::uint64_t> xs(length);
  for (std::size_t i = length; i-- > 0;) {
    xs[i] = 2 + index % (max_base - 1);
    index /= max_base - 1;
  }
  return xs;
}

std::optional<ExpressionHit> try_tuple(std::vector<std::uint64_t> xs, unsigned rounds, std::uint64_t seed) {
  std::uint64_t g = 0;
  for (auto x : xs) g = std::gcd(g, x);
  if (g != 1) return std::nullopt;
  Natural v = expression_cycle(xs);
  auto verdict = is_prime(v, rounds, seed);
  if (!verdict.prime_like()) return std::nullopt;
  return ExpressionHit{std::move(xs), std::move(v), verdict};
}

void check_search_args(std::uint64_t max_base, std::size_t length) {
  if (max_base < 2) throw DomainError("max_base must be >= 2");
  if (length < 2) throw DomainError("length must be >= 2");
}

}  // namespace

std::vector<ExpressionHit> expression_prime_search_serial(std::uint64_t max_base, std::size_t length,
                                                          unsigned rounds, std::uint64_t seed) {
  check_search_args(max_base, length);
  std::vector<ExpressionHit> out;
  const std::uint64_t total = tuple_count(max_base, length);
  for (std::uint64_t i = 0; i < total; ++i) {
    if (auto hit = try_tuple(tuple_at(i, max_base, length), rounds, seed)) out.push_back(std::move(*hit));
  }
  return out;
}

std::vector<ExpressionHit> expression_prime_search(std::uint64_t max_base, std::size_t length, unsigned rounds,
                                                   std::uint64_t seed, int jobs) {
  check_search_args(max_base, length);
  const std::uint64_t total = tuple_count(max_base, length);
  std::vector<std::optional<ExpressionHit>> slots(total);
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 8) num_threads(threads)
  for (std::uint64_t i = 0; i < total; ++i) slots[i] = try_tuple(tuple_at(i, max_base, length), rounds, seed);

  std::vector<ExpressionHit> out;
  for (auto& s : slots) {
    if (s) out.push_back(std::move(*s));
  }
  return out;
}

namespace {

class FactorialProducts {
 public:
  explicit FactorialProducts(const Natural& n) {
    Natural f = 2;
    for (std::uint64_t k = 2; f <= n; ++k) {
      factorials_.push_back(f);
      f *= k + 1;
    }
  }

  // Parts chosen so far are >= every later part.
  bool search(const Natural& n, std::size_t max_index, std::vector<std::uint64_t>& parts) {
    if (n == 1) return true;
    if (dead_.count({n, max_index})) return false;
    for (std::size_t i = std::min(max_index, factorials_.size()); i-- > 0;) {
      if (!mpz_divisible_p(n.get_mpz_t(), factorials_[i].get_mpz_t())) continue;
      parts.push_back(i + 2);
      if (search(Natural(n / factorials_[i]), i + 1, parts)) return true;
      parts.pop_back();
    }
    dead_.insert({n, max_index});
    return false;
  }

  std::size_t size() const { return factorials_.size(); }

 private:
  std::vector<Natural> factorials_;  // factorials_[i] = (i + 2)!
  std::set<std::pair<Natural, std::size_t>> dead_;
};

}  // namespace

std::optional<std::vector<std::uint64_t>> product_of_factorials(const Natural& n) {
  if (n < 1) throw DomainError("n must be >= 1");
  FactorialProducts fp(n);
  std::vector<std::uint64_t> parts;
  if (!fp.search(n, fp.size(), parts)) return std::nullopt;
  std::sort(parts.begin(), parts.end());
  return parts;
}

// --- anomalous cancellation ---------------------------------------------------------

std::vector<LuckyFraction> lucky_cancellations(unsigned num_digits) {
  if (num_digits < 2 || num_digits > 3) throw DomainError("lucky_cancellations supports 2 or 3 digits");
  const std::uint64_t lo = pow10_u64(num_digits - 1), hi = pow10_u64(num_digits) - 1;

  auto strike = [num_digits](std::uint64_t v, unsigned pos) {
    // pos counts from the most significant digit.
    const std::uint64_t high = pow10_u64(num_digits - pos);
    const std::uint64_t low = pow10_u64(num_digits - pos - 1);
    return (v / high) * low + v % low;
  };
  auto digit_at = [num_digits](std::uint64_t v, unsigned pos) { return v / pow10_u64(num_digits - pos - 1) % 10; };

  std::vector<LuckyFraction> out;
  for (std::uint64_t a = lo; a <= hi; ++a) {
    for (std::uint64_t b = a + 1; b <= hi; ++b) {
      bool lucky = false;
      for (unsigned i = 0; i < num_digits && !lucky; ++i) {
        const std::uint64_t d = digit_at(a, i);
        if (d == 0) continue;
        for (unsigned j = 0; j < num_digits && !lucky; ++j) {
          if (digit_at(b, j) != d) continue;
          const std::uint64_t ra = strike(a, i), rb = strike(b, j);
          lucky = rb != 0 && a * rb == b * ra;
        }
      }
      if (lucky) out.push_back({a, b, make_rational(from_u64(a), from_u64(b))});
    }
  }
  return out;
}

}  // namespace seqlab
