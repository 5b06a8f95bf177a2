#include "seqlab/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include <omp.h>

#include "seqlab/analysis.hpp"
#include "seqlab/concat.hpp"
#include "seqlab/dynamics.hpp"
#include "seqlab/partition.hpp"
#include "seqlab/sieve.hpp"

namespace seqlab {

const char* to_string(CheckKind k) { return k == CheckKind::paper ? "paper" : "oracle"; }

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass:
      return "PASS";
    case CheckStatus::fail:
      return "FAIL";
    case CheckStatus::erratum:
      return "ERRATUM";
  }
  return "?";
}

std::size_t VerifySuiteResult::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const VerifyCheck& c) { return c.status == CheckStatus::fail; }));
}

std::pair<std::size_t, std::uint64_t> max_first_repeat_index(const MapSpec& m, std::uint64_t lo, std::uint64_t hi,
                                                             int jobs) {
  validate_census_range(m, lo, hi);
  std::pair<std::size_t, std::uint64_t> best{0, lo};
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel num_threads(threads)
  {
    std::pair<std::size_t, std::uint64_t> local{0, lo};
#pragma omp for schedule(dynamic, 1024) nowait
    for (std::uint64_t s = lo; s <= hi; ++s) {
      const std::size_t idx = orbit(m, s).closing_step() + 1;
      if (idx > local.first || (idx == local.first && s < local.second)) local = {idx, s};
    }
#pragma omp critical(seqlab_verify_merge)
    if (local.first > best.first || (local.first == best.first && local.second < best.second)) best = local;
  }
  return best;
}

namespace {

// --- independent oracles --------------------------------------------------------

bool trial_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// Least m with n | m!, by running m! mod n.
std::uint64_t brute_S(std::uint64_t n) {
  std::uint64_t f = 1 % n;
  for (std::uint64_t m = 1;; ++m) {
    f = f * m % n;
    if (f == 0) return m;
  }
}

std::uint64_t trial_P(std::uint64_t n) {
  std::uint64_t p = 1;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    while (n % d == 0) {
      p = d;
      n /= d;
    }
  }
  return n > 1 ? n : p;
}

bool square_u64(std::uint64_t v) {
  std::uint64_t r = 0;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r * r == v;
}

// Try every cut mask of the decimal rendering.
bool segmentation_oracle(std::uint64_t root) {
  const std::string s = std::to_string(root * root);
  const std::size_t cuts = s.size() - 1;
  for (std::uint64_t mask = 1; mask < (1ull << cuts); ++mask) {
    bool ok = true;
    std::size_t begin = 0;
    for (std::size_t i = 0; i <= cuts && ok; ++i) {
      if (i == cuts || (mask >> i & 1)) {
        const std::string seg = s.substr(begin, i + 1 - begin);
        ok = (seg.size() == 1 || seg[0] != '0') && square_u64(std::stoull(seg));
        begin = i + 1;
      }
    }
    if (ok) return true;
  }
  return false;
}

// k-th 3-free term is 1 + (k-1 written in binary, read in base 3).
std::uint64_t nap3_oracle(std::uint64_t k) {
  std::uint64_t v = 0, place = 1;
  for (std::uint64_t b = k - 1; b > 0; b /= 2, place *= 3) v += (b & 1) * place;
  return v + 1;
}

// --- formatting -------------------------------------------------------------

template <typename T>
std::string join(const std::vector<T>& xs, const char* sep = ",") {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) os << sep;
    os << xs[i];
  }
  return os.str();
}

std::string cycles_str(std::vector<std::vector<std::uint64_t>> cycles) {
  std::sort(cycles.begin(), cycles.end());
  std::vector<std::string> parts;
  for (const auto& c : cycles) parts.push_back("(" + join(c) + ")");
  return join(parts, " ");
}

std::vector<std::vector<std::uint64_t>> census_cycles(const CensusReport& r) {
  std::vector<std::vector<std::uint64_t>> out;
  for (const auto& c : r.classes) out.push_back(c.cycle);
  return out;
}

std::vector<std::vector<std::uint64_t>> canonical_all(std::vector<std::vector<std::uint64_t>> cycles) {
  for (auto& c : cycles) c = canonical_cycle(c);
  return cycles;
}

std::set<std::size_t> cycle_lengths(const CensusReport& r) {
  std::set<std::size_t> out;
  for (const auto& c : r.classes) out.insert(c.cycle.size());
  return out;
}

template <typename T>
std::string set_str(const std::set<T>& s) {
  return "{" + join(std::vector<T>(s.begin(), s.end())) + "}";
}

class Checks {
 public:
  explicit Checks(int criterion) : criterion_(criterion) {}

  VerifyCheck& add(CheckKind kind, std::string id, std::string expected, std::string observed, std::string note = {}) {
    const bool ok = expected == observed;
    checks_.push_back({criterion_, kind, std::move(id), std::move(expected), std::move(observed),
                       ok ? CheckStatus::pass : CheckStatus::fail, std::move(note)});
    return checks_.back();
  }

  VerifyCheck& paper(std::string id, std::string expected, std::string observed, std::string note = {}) {
    return add(CheckKind::paper, std::move(id), std::move(expected), std::move(observed), std::move(note));
  }

  VerifyCheck& oracle(std::string id, std::string expected, std::string observed, std::string note = {}) {
    return add(CheckKind::oracle, std::move(id), std::move(expected), std::move(observed), std::move(note));
  }

  std::vector<VerifyCheck> take() { return std::move(checks_); }

 private:
  int criterion_;
  std::vector<VerifyCheck> checks_;
};

// --- criteria -------------------------------------------------------------------

std::vector<VerifyCheck> crit_prime_digital(const VerifyOptions&) {
  Checks c(1);
  const auto terms = prime_digital_stream(100);
  std::vector<std::string> head;
  for (std::size_t i = 0; i < 13; ++i) head.push_back(terms[i].get_str());
  c.paper("prime-digital.first13", "2,3,5,7,23,37,53,73,223,227,233,257,277", join(head));
  c.paper("prime-digital.term100", "33223", terms[99].get_str());
  return c.take();
}

std::vector<VerifyCheck> crit_odd_addon(const VerifyOptions& o) {
  Checks c(2);
  const auto rep = prime_rank_scan(GeneratorSpec::odd(), 200, {o.rounds, o.seed, o.jobs});
  std::vector<std::size_t> ranks, digits;
  for (const auto& h : rep.hits) {
    ranks.push_back(h.rank);
    digits.push_back(term_digit_count(GeneratorSpec::odd(), h.rank));
  }
  c.paper("odd-addon.prime-ranks", "2,15,27,63,93", join(ranks),
          "digit counts of these terms: " + join(digits) + "; terms 15, 27, 63 and 93 are divisible by 3");
  return c.take();
}

std::vector<VerifyCheck> crit_prime_addon(const VerifyOptions& o) {
  Checks c(3);
  const auto rep = prime_rank_scan(GeneratorSpec::prime(), 4, {o.rounds, o.seed, o.jobs});
  std::set<std::size_t> ranks;
  for (const auto& h : rep.hits) ranks.insert(h.rank);
  c.paper("prime-addon.term2-prime", "true", ranks.count(2) ? "true" : "false");
  c.paper("prime-addon.term4-prime", "true", ranks.count(4) ? "true" : "false");
  c.paper("prime-addon.digits128", "355", std::to_string(term_digit_count(GeneratorSpec::prime(), 128)));
  c.paper("prime-addon.digits174", "499", std::to_string(term_digit_count(GeneratorSpec::prime(), 174)));
  return c.take();
}

std::vector<VerifyCheck> crit_even_addon(const VerifyOptions& o) {
  Checks c(4);
  const auto rep = power_and_2p_scan(200, {o.rounds, o.seed, o.jobs});
  std::vector<std::size_t> powers, twop;
  for (const auto& h : rep.hits) {
    if (std::holds_alternative<PerfectPower>(h.classification)) powers.push_back(h.rank);
    if (std::holds_alternative<TwoP>(h.classification)) twop.push_back(h.rank);
  }
  c.paper("even-addon.perfect-powers", "0", std::to_string(powers.size()),
          twop.empty() ? "" : "terms of the form 2p at ranks " + join(twop));
  return c.take();
}

std::vector<VerifyCheck> crit_reverse_subtract(const VerifyOptions& o) {
  Checks c(5);
  auto doubly_checked = [&](unsigned w) {
    const std::uint64_t lo = pow10_u64(w - 1), hi = pow10_u64(w) - 1;
    const MapSpec m = MapSpec::reverse_subtract(w);
    CensusReport fast = census(m, lo, hi, o.jobs);
    const bool same = fast == census_serial(m, lo, hi);
    c.oracle("reverse-subtract.w" + std::to_string(w) + ".serial-equals-parallel", "true", same ? "true" : "false");
    c.oracle("reverse-subtract.w" + std::to_string(w) + ".partition", std::to_string(fast.total),
             std::to_string(fast.zero_count + fast.member_total()));
    return fast;
  };

  const auto w3 = doubly_checked(3);
  c.paper("reverse-subtract.w3.zero_count", "90", std::to_string(w3.zero_count));
  c.paper("reverse-subtract.w3.cycles", cycles_str(canonical_all({{99, 891, 693, 297, 495}})),
          cycles_str(census_cycles(w3)));

  const auto w4 = doubly_checked(4);
  c.paper("reverse-subtract.w4.cycles",
          cycles_str(canonical_all(
              {{2178, 6534}, {90, 810, 630, 270, 450}, {909, 8181, 6363, 2727, 4545}, {999, 8991, 6993, 2997, 4995}})),
          cycles_str(census_cycles(w4)));
  c.paper("reverse-subtract.w4.member_total", "8818", std::to_string(w4.member_total()));
  {
    const auto [idx, start] = max_first_repeat_index(MapSpec::reverse_subtract(4), 1000, 9999, o.jobs);
    const auto [tail, tail_start] = w4.max_tail();
    c.paper("reverse-subtract.w4.longest", "18 at 1019", std::to_string(idx) + " at " + std::to_string(start),
            "counted as the index of the first repeated term with N1 the start; tail before the cycle is " +
                std::to_string(tail) + " at " + std::to_string(tail_start));
  }

  const auto w5 = doubly_checked(5);
  {
    auto& z = c.paper("reverse-subtract.w5.zero_count", "920", std::to_string(w5.zero_count));
    if (z.status == CheckStatus::fail && w5.zero_count + w5.member_total() == w5.total) {
      std::uint64_t palindromes = 0;
      for (std::uint64_t s = w5.lo; s <= w5.hi; ++s) palindromes += reverse_fixed(s, 5) == s;
      z.status = CheckStatus::erratum;
      z.note = "erratum candidate: " + std::to_string(palindromes) + " palindromes plus " +
               std::to_string(w5.zero_count - palindromes) +
               " other starts reach 0; the printed count matches the non-palindromic part. Partition invariant holds.";
    }
  }
  c.paper("reverse-subtract.w5.cycles",
          cycles_str(canonical_all({{21978, 65934},
                                    {990, 8910, 6930, 2970, 4950},
                                    {9009, 81081, 63063, 27027, 45045},
                                    {9999, 89991, 69993, 29997, 49995}})),
          cycles_str(census_cycles(w5)));

  const auto w6 = doubly_checked(6);
  c.paper("reverse-subtract.w6.zero_count", "13667", std::to_string(w6.zero_count));
  {
    const auto [idx, start] = max_first_repeat_index(MapSpec::reverse_subtract(6), 100000, 999999, o.jobs);
    const auto [tail, tail_start] = w6.max_tail();
    c.paper("reverse-subtract.w6.longest", "53 at 100720", std::to_string(idx) + " at " + std::to_string(start),
            "same counting as width 4; tail before the cycle is " + std::to_string(tail) + " at " +
                std::to_string(tail_start));
  }
  {
    std::set<std::size_t> loops;
    std::vector<std::string> fixed;
    for (const auto& k : w6.classes) {
      if (k.cycle.size() == 1) {
        fixed.push_back(std::to_string(k.cycle[0]));
      } else {
        loops.insert(k.cycle.size());
      }
    }
    c.paper("reverse-subtract.w6.loop-lengths", "{2,5,9,18}", set_str(loops),
            fixed.empty() ? "" : "nonzero invariants (not loops): " + join(fixed));
  }
  return c.take();
}

std::vector<VerifyCheck> crit_subtract_const(const VerifyOptions& o) {
  Checks c(6);
  {
    const auto r = orbit(MapSpec::subtract_const(2, 1), 52);
    const std::vector<std::uint64_t> printed{52, 24, 41, 13, 30, 2, 19, 90, 8, 79, 96, 68, 85, 57, 74, 46, 63, 35};
    c.paper("subtract-const.c1.orbit52", join(canonical_cycle(printed)) + " tail 0",
            join(r.cycle) + " tail " + std::to_string(r.tail_len));
  }
  for (std::uint64_t k : {1, 2, 5}) {
    const auto r = census(MapSpec::subtract_const(3, k), 100, 999, o.jobs);
    c.paper("subtract-const.c" + std::to_string(k) + ".all-zero", "900", std::to_string(r.zero_count));
  }
  const std::set<std::size_t> allowed{11, 22, 33, 50, 100, 167, 189, 200};
  for (std::uint64_t k : {3, 4, 6, 7, 8, 9}) {
    const auto r = census(MapSpec::subtract_const(3, k), 100, 999, o.jobs);
    const auto lens = cycle_lengths(r);
    const bool subset = std::includes(allowed.begin(), allowed.end(), lens.begin(), lens.end());
    c.paper("subtract-const.c" + std::to_string(k) + ".lengths", "subset of " + set_str(allowed),
            subset ? "subset of " + set_str(allowed) : set_str(lens),
            "lengths " + set_str(lens) + "; " + std::to_string(r.zero_count) + " starts reach 0");
  }
  {
    const auto r = orbit(MapSpec::subtract_const(3, 7), 109);
    c.paper("subtract-const.c7.start109", "cycle 200 closed after 286",
            "cycle " + std::to_string(r.cycle.size()) + " closed after " + std::to_string(r.closing_step()),
            "tail before the cycle is " + std::to_string(r.tail_len));
  }
  return c.take();
}

std::vector<VerifyCheck> crit_digit_multiply(const VerifyOptions&) {
  Checks c(7);
  {
    const auto r = orbit(MapSpec::digit_multiply(2, 7), 68);
    auto members = r.cycle;
    std::sort(members.begin(), members.end());
    c.paper("digit-multiply.c7.orbit68", "{26,42,68,84} tail 0",
            "{" + join(members) + "} tail " + std::to_string(r.tail_len), "orbit order " + join(r.steps));
  }
  {
    std::vector<std::string> bad;
    for (std::uint64_t k = 2; k <= 9; ++k) {
      for (unsigned w = 1; w <= 6; ++w) {
        const std::uint64_t fives = 5 * (pow10_u64(w) - 1) / 9;
        const auto r = orbit(MapSpec::digit_multiply(w, k), fives);
        if (r.cycle.size() != 1 || r.tail_len > 1) bad.push_back("c=" + std::to_string(k) + " " + std::to_string(fives));
      }
    }
    c.paper("digit-multiply.all-fives", "fixed after <= 1", bad.empty() ? "fixed after <= 1" : join(bad, "; "));
  }

  struct Profile {
    std::size_t cycle;
    std::size_t tail_min, tail_max;
    const char* text;
  };
  const std::map<std::uint64_t, Profile> table{
      {2, {4, 0, 1, "4-cycles tail <= 1"}}, {3, {4, 0, 0, "4-cycles tail 0"}}, {4, {2, 0, 1, "2-cycles tail <= 1"}},
      {5, {1, 0, 1, "fixed after <= 1"}},   {6, {1, 0, 1, "fixed after <= 1"}}, {7, {4, 0, 0, "4-cycles tail 0"}},
      {8, {4, 1, 99, "4-cycles tail >= 1"}}, {9, {2, 0, 0, "2-cycles tail 0"}}};

  auto exceptional = [](std::uint64_t v) {
    for (; v > 0; v /= 10) {
      if (v % 10 != 0 && v % 10 != 5) return false;
    }
    return true;
  };

  for (const auto& [k, p] : table) {
    std::vector<std::string> off, exc;
    for (std::uint64_t s = 10; s <= 99; ++s) {
      const auto r = orbit(MapSpec::digit_multiply(2, k), s);
      const bool fits = r.cycle.size() == p.cycle && r.tail_len >= p.tail_min && r.tail_len <= p.tail_max;
      if (exceptional(s)) {
        exc.push_back(std::to_string(s) + "->" + join(r.cycle));
      } else if (!fits) {
        off.push_back(std::to_string(s) + "(tail " + std::to_string(r.tail_len) + ", cycle " +
                      std::to_string(r.cycle.size()) + ")");
      }
    }
    std::string observed = p.text;
    if (!off.empty()) {
      observed = std::to_string(off.size()) + " starts off-profile: " + join(std::vector(off.begin(), off.begin() + std::min<std::size_t>(off.size(), 8)), " ");
      if (off.size() > 8) observed += " ...";
    }
    c.paper("digit-multiply.c" + std::to_string(k) + ".profile", p.text, observed,
            "exceptions (digits in {0,5}): " + join(exc, " "));
  }
  return c.take();
}

std::vector<VerifyCheck> crit_mixed_compose(const VerifyOptions& o) {
  Checks c(8);
  const auto r = census(MapSpec::mixed_compose(), 10, 99, o.jobs);
  const auto lens = cycle_lengths(r);
  c.paper("mixed-compose.no-invariants", "0", std::to_string(lens.count(1)));
  std::vector<std::uint64_t> two;
  for (const auto& k : r.classes) {
    if (k.cycle.size() == 2) two.insert(two.end(), k.cycle.begin(), k.cycle.end());
  }
  std::sort(two.begin(), two.end());
  c.paper("mixed-compose.two-cycles", "36,90,93,99", join(two));
  c.paper("mixed-compose.longest", "18", lens.empty() ? "none" : std::to_string(*lens.rbegin()));
  const std::set<std::size_t> allowed{2, 4, 6, 12, 18};
  c.paper("mixed-compose.lengths", "subset of " + set_str(allowed),
          std::includes(allowed.begin(), allowed.end(), lens.begin(), lens.end()) ? "subset of " + set_str(allowed)
                                                                                  : set_str(lens));
  const auto o75 = orbit(MapSpec::mixed_compose(), 75);
  const std::vector<std::uint64_t> printed{75, 32, 51, 64, 12, 31, 42, 62, 84, 34, 71, 86, 52, 73, 14, 53, 82, 16};
  c.paper("mixed-compose.orbit75", join(printed) + " tail 0", join(o75.steps) + " tail " + std::to_string(o75.tail_len));
  return c.take();
}

std::vector<VerifyCheck> crit_erdos(const VerifyOptions& o) {
  Checks c(9);
  c.paper("erdos-smarandache.upto35", "2,3,5,6,7,10,11,13,14,15,17,19,20,21,22,23,26,28,29,30,31,33,34,35",
          join(erdos_smarandache(35, o.jobs)));
  std::vector<std::uint64_t> brute;
  for (std::uint64_t n = 2; n <= 2000; ++n) {
    if (trial_P(n) == brute_S(n)) brute.push_back(n);
  }
  c.oracle("erdos-smarandache.upto2000", join(brute), join(erdos_smarandache(2000, o.jobs)));
  return c.take();
}

std::vector<VerifyCheck> crit_sieve(const VerifyOptions&) {
  Checks c(10);
  const auto s = SieveSchedule::default_schedule();
  c.paper("nary-sieve.first11", "1,2,4,7,9,14,20,25,31,34,44", join(nary_sieve(11, s)),
          "schedule: " + s.describe());
  return c.take();
}

std::vector<VerifyCheck> crit_spds(const VerifyOptions& o) {
  Checks c(11);
  for (std::uint64_t root : {12, 13, 441, 506}) {
    c.paper("spds.member" + std::to_string(root * root), "true", is_spds_member(from_u64(root)) ? "true" : "false");
  }
  c.paper("spds.441", "true", is_spds_member(21) ? "true" : "false");
  std::vector<std::string> brute, fast;
  for (std::uint64_t m = 1; m <= 1000; ++m) {
    if (segmentation_oracle(m)) brute.push_back(std::to_string(m * m));
  }
  for (const auto& v : spds_enumerate(1000, o.jobs)) fast.push_back(v.get_str());
  c.oracle("spds.enumerate1000", join(brute), join(fast));
  return c.take();
}

std::vector<VerifyCheck> crit_properties(const VerifyOptions& o) {
  Checks c(12);
  {
    std::string first_bad;
    for (std::uint64_t n = 1; n <= 2000 && first_bad.empty(); ++n) {
      if (smarandache_S(from_u64(n)) != brute_S(n)) first_bad = std::to_string(n);
    }
    c.oracle("S.oracle2000", "agree", first_bad.empty() ? "agree" : "differs at " + first_bad);
  }
  {
    std::string first_bad;
    for (std::uint64_t x = 1; x <= 300 && first_bad.empty(); ++x) {
      const auto f = fs_theta(x);
      if (f.fs != f.theta + f.thetabar) first_bad = std::to_string(x);
    }
    c.oracle("fs.theta-split300", "holds", first_bad.empty() ? "holds" : "fails at " + first_bad);
  }
  {
    std::string first_bad;
    for (std::uint64_t n = 1; n <= 10 && first_bad.empty(); ++n) {
      const auto cs = metallic_convergents({MetallicFamily::A, n}, 40);
      for (std::size_t k = 0; k < cs.size() && first_bad.empty(); ++k) {
        const Natural v = cs[k].p * cs[k].p - n * cs[k].p * cs[k].q - cs[k].q * cs[k].q;
        if (abs(v) != 1) first_bad = "n=" + std::to_string(n) + " k=" + std::to_string(k);
      }
    }
    c.oracle("metallic.identity", "holds", first_bad.empty() ? "holds" : "fails at " + first_bad);
  }
  {
    // Brute force on the digit characters themselves.
    std::vector<std::string> brute, fast;
    for (int a = 10; a <= 99; ++a) {
      for (int b = a + 1; b <= 99; ++b) {
        const std::string sa = std::to_string(a), sb = std::to_string(b);
        bool hit = false;
        for (int i = 0; i < 2; ++i) {
          for (int j = 0; j < 2; ++j) {
            if (sa[i] != sb[j] || sa[i] == '0') continue;
            const int ra = sa[1 - i] - '0', rb = sb[1 - j] - '0';
            hit = hit || (rb != 0 && a * rb == b * ra);
          }
        }
        if (hit) brute.push_back(sa + "/" + sb);
      }
    }
    for (const auto& f : lucky_cancellations(2)) {
      fast.push_back(std::to_string(f.numerator) + "/" + std::to_string(f.denominator));
    }
    c.oracle("lucky.two-digit", "16/64,19/95,26/65,49/98", join(fast));
    c.oracle("lucky.brute-force", join(brute), join(fast));
  }
  {
    std::vector<std::uint64_t> want;
    for (std::uint64_t k = 1; k <= 65; ++k) want.push_back(nap3_oracle(k));
    c.oracle("nap3.base3", join(want), join(nap_sequence(3, 65)));
  }
  {
    std::string bad;
    for (unsigned w = 3; w <= 5 && bad.empty(); ++w) {
      const MapSpec m = MapSpec::reverse_subtract(w);
      const auto ref = census_serial(m, pow10_u64(w - 1), pow10_u64(w) - 1);
      for (int jobs : {1, 2, 8}) {
        if (census(m, pow10_u64(w - 1), pow10_u64(w) - 1, jobs) != ref) {
          bad = "width " + std::to_string(w) + " jobs " + std::to_string(jobs);
        }
      }
    }
    c.oracle("census.parallel-equals-serial", "equal", bad.empty() ? "equal" : "differs at " + bad);
  }
  {
    std::string bad;
    for (std::uint64_t n = 2; n < 1000000 && bad.empty(); n += 997) {
      if (is_prime(from_u64(n), o.rounds, o.seed).prime_like() != trial_prime(n)) bad = std::to_string(n);
    }
    c.oracle("primality.trial-division", "agree", bad.empty() ? "agree" : "differs at " + bad);
  }
  return c.take();
}

}  // namespace

std::vector<VerifyCheck> criterion_checks(int criterion, const VerifyOptions& options) {
  switch (criterion) {
    case 1:
      return crit_prime_digital(options);
    case 2:
      return crit_odd_addon(options);
    case 3:
      return crit_prime_addon(options);
    case 4:
      return crit_even_addon(options);
    case 5:
      return crit_reverse_subtract(options);
    case 6:
      return crit_subtract_const(options);
    case 7:
      return crit_digit_multiply(options);
    case 8:
      return crit_mixed_compose(options);
    case 9:
      return crit_erdos(options);
    case 10:
      return crit_sieve(options);
    case 11:
      return crit_spds(options);
    case 12:
      return crit_properties(options);
    default:
      throw DomainError("criterion must be in 1.." + std::to_string(kCriterionCount));
  }
}

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> names{"paper", "oracles", "all"};
  return names;
}

VerifySuiteResult run_verify(const std::string& suite, const VerifyOptions& options) {
  if (std::find(verify_suites().begin(), verify_suites().end(), suite) == verify_suites().end()) {
    throw DomainError("unknown suite: " + suite);
  }
  VerifySuiteResult r{suite, {}};
  for (int k = 1; k <= kCriterionCount; ++k) {
    for (auto& ch : criterion_checks(k, options)) {
      if (suite == "all" || (suite == "paper") == (ch.kind == CheckKind::paper)) r.checks.push_back(std::move(ch));
    }
  }
  return r;
}

Json to_json(const VerifySuiteResult& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json j{{"criterion", c.criterion}, {"kind", to_string(c.kind)}, {"id", c.id},
           {"expected", c.expected},   {"observed", c.observed},    {"status", to_string(c.status)}};
    if (!c.note.empty()) j["note"] = c.note;
    checks.push_back(std::move(j));
  }
  return Json{{"suite", r.suite}, {"failures", r.failures()}, {"exit_code", r.exit_code()}, {"checks", checks}};
}

std::string render_table(const VerifySuiteResult& r) {
  std::ostringstream os;
  for (const auto& c : r.checks) {
    os << to_string(c.status) << "  [" << c.criterion << "] " << c.id << "\n      expected: " << c.expected
       << "\n      observed: " << c.observed << "\n";
    if (!c.note.empty()) os << "      note: " << c.note << "\n";
  }
  os << r.checks.size() << " checks, " << r.failures() << " failed\n";
  return os.str();
}

}  // namespace seqlab
