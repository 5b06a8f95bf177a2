#include "seqlab/concat.hpp"

#include <array>

#include <omp.h>

namespace seqlab {

const char* to_string(GeneratorFamily f) {
  switch (f) {
    case GeneratorFamily::odd:
      return "odd";
    case GeneratorFamily::even:
      return "even";
    case GeneratorFamily::prime:
      return "prime";
    case GeneratorFamily::custom:
      return "custom";
  }
  return "?";
}

GeneratorFamily parse_generator_family(const std::string& name) {
  if (name == "odd") return GeneratorFamily::odd;
  if (name == "even") return GeneratorFamily::even;
  if (name == "prime") return GeneratorFamily::prime;
  if (name == "custom") return GeneratorFamily::custom;
  throw DomainError("unknown generator family: " + name);
}

namespace {

std::vector<std::uint64_t> first_primes(std::size_t count) {
  std::uint64_t limit = 64;
  while (true) {
    auto ps = primes_up_to(limit);
    if (ps.size() >= count) {
      ps.resize(count);
      return ps;
    }
    limit *= 2;
  }
}

}  // namespace

std::vector<Natural> generator_terms(const GeneratorSpec& g, std::size_t count) {
  std::vector<Natural> out;
  out.reserve(count);
  switch (g.family) {
    case GeneratorFamily::odd:
      for (std::size_t i = 1; i <= count; ++i) out.push_back(from_u64(2 * i - 1));
      break;
    case GeneratorFamily::even:
      for (std::size_t i = 1; i <= count; ++i) out.push_back(from_u64(2 * i));
      break;
    case GeneratorFamily::prime:
      for (auto p : first_primes(count)) out.push_back(from_u64(p));
      break;
    case GeneratorFamily::custom:
      if (g.custom_terms.size() < count) {
        throw DomainError("custom generator has " + std::to_string(g.custom_terms.size()) + " terms, need " +
                          std::to_string(count));
      }
      out.assign(g.custom_terms.begin(), g.custom_terms.begin() + static_cast<std::ptrdiff_t>(count));
      break;
  }
  return out;
}

std::vector<Natural> g_addon(const GeneratorSpec& g, std::size_t count) {
  if (count < 1) throw DomainError("count must be >= 1");
  return concat_stream(generator_terms(g, count));
}

std::vector<Natural> concat_stream(const std::vector<Natural>& s) {
  if (s.empty()) throw DomainError("concatenation needs a non-empty sequence");
  std::vector<Natural> out;
  out.reserve(s.size());
  out.push_back(s.front());
  for (std::size_t i = 1; i < s.size(); ++i) out.push_back(concat_decimal(out.back(), s[i]));
  return out;
}

std::vector<std::pair<std::size_t, bool>> membership_scan(const std::vector<Natural>& s,
                                                          const std::function<bool(const Natural&)>& member) {
  auto terms = concat_stream(s);
  std::vector<std::pair<std::size_t, bool>> out;
  out.reserve(terms.size());
  for (std::size_t i = 0; i < terms.size(); ++i) out.emplace_back(i + 1, member(terms[i]));
  return out;
}

std::size_t term_digit_count(const GeneratorSpec& g, std::size_t rank) {
  if (rank < 1) throw DomainError("rank must be >= 1");
  std::size_t total = 0;
  for (const auto& t : generator_terms(g, rank)) total += digit_count(t);
  return total;
}

std::string describe(const HitClass& c) {
  struct Visitor {
    std::string operator()(const PrimalityVerdict& v) const { return to_string(v.kind); }
    std::string operator()(const PerfectPower& p) const {
      return "perfect-power(" + to_string(p.base) + "," + std::to_string(p.exponent) + ")";
    }
    std::string operator()(const TwoP&) const { return "two-p"; }
  };
  return std::visit(Visitor{}, c);
}

ScanReport prime_rank_scan_serial(const GeneratorSpec& g, std::size_t limit, const ScanOptions& options) {
  if (limit < 1) throw DomainError("limit must be >= 1");
  const auto terms = g_addon(g, limit);
  ScanReport report{g, limit, {}};
  for (std::size_t i = 0; i < terms.size(); ++i) {
    auto v = is_prime(terms[i], options.rounds, options.seed);
    if (v.prime_like()) report.hits.push_back({i + 1, v});
  }
  return report;
}

ScanReport prime_rank_scan(const GeneratorSpec& g, std::size_t limit, const ScanOptions& options) {
  if (limit < 1) throw DomainError("limit must be >= 1");
  const auto terms = g_addon(g, limit);
  std::vector<PrimalityVerdict> verdicts(terms.size());
  const long n = static_cast<long>(terms.size());
  const int jobs = options.jobs > 0 ? options.jobs : omp_get_max_threads();

#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs)
  for (long i = 0; i < n; ++i) {
    verdicts[static_cast<std::size_t>(i)] = is_prime(terms[static_cast<std::size_t>(i)], options.rounds, options.seed);
  }

  ScanReport report{g, limit, {}};
  for (std::size_t i = 0; i < verdicts.size(); ++i) {
    if (verdicts[i].prime_like()) report.hits.push_back({i + 1, verdicts[i]});
  }
  return report;
}

ScanReport power_and_2p_scan(std::size_t limit, const ScanOptions& options) {
  if (limit < 1) throw DomainError("limit must be >= 1");
  const auto terms = g_addon(GeneratorSpec::even(), limit);
  const long n = static_cast<long>(terms.size());
  std::vector<std::vector<HitClass>> found(terms.size());
  const int jobs = options.jobs > 0 ? options.jobs : omp_get_max_threads();

#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs)
  for (long i = 0; i < n; ++i) {
    const auto& t = terms[static_cast<std::size_t>(i)];
    auto& slot = found[static_cast<std::size_t>(i)];
    if (auto pp = is_perfect_power(t)) slot.emplace_back(*pp);
    // 2 = 2*1 has no prime cofactor.
    if (mpz_even_p(t.get_mpz_t()) && t > 2) {
      Natural half = t / 2;
      if (is_prime(half, options.rounds, options.seed).prime_like()) slot.emplace_back(TwoP{});
    }
  }

  ScanReport report{GeneratorSpec::even(), limit, {}};
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (auto& c : found[i]) report.hits.push_back({i + 1, c});
  }
  return report;
}

std::vector<Natural> prime_digital_stream(std::size_t count) {
  if (count < 1) throw DomainError("count must be >= 1");
  static constexpr std::array<unsigned, 4> kDigits = {2, 3, 5, 7};
  std::vector<Natural> out;
  // Odometer over {2,3,5,7}^length: lexicographic order is numeric order.
  for (std::size_t length = 1; out.size() < count; ++length) {
    std::vector<unsigned> idx(length, 0);
    while (true) {
      Natural v = 0;
      for (auto i : idx) v = v * 10 + kDigits[i];
      if (is_prime(v).prime_like()) {
        out.push_back(v);
        if (out.size() == count) return out;
      }
      std::size_t pos = length;
      while (pos > 0 && idx[pos - 1] == kDigits.size() - 1) idx[--pos] = 0;
      if (pos == 0) break;
      ++idx[pos - 1];
    }
  }
  return out;
}

}  // namespace seqlab
