#include <doctest.h>

#include <map>
#include <set>

#include "seqlab/dynamics.hpp"
#include "seqlab/numerics.hpp"

using namespace seqlab;

namespace {

// Naive orbit on plain integers: list until a repeat.
std::pair<std::size_t, std::size_t> naive_tail_cycle(const MapSpec& m, std::uint64_t s) {
  std::vector<std::uint64_t> seen{s};
  for (;;) {
    const std::uint64_t next = step_value(m, seen.back());
    for (std::size_t i = 0; i < seen.size(); ++i) {
      if (seen[i] == next) return {i, seen.size() - i};
    }
    seen.push_back(next);
  }
}

}  // namespace

TEST_CASE("map names and validation") {
  for (auto k : {MapKind::reverse_subtract, MapKind::subtract_const, MapKind::digit_multiply, MapKind::mixed_compose}) {
    CHECK(parse_map_kind(to_string(k)) == k);
  }
  CHECK_THROWS_AS(parse_map_kind("kaprekar"), DomainError);
  CHECK_THROWS_AS(MapSpec::subtract_const(2, 0).validate(), DomainError);
  CHECK_THROWS_AS(MapSpec::subtract_const(2, 100).validate(), DomainError);
  CHECK_THROWS_AS(MapSpec::digit_multiply(2, 10).validate(), DomainError);
  CHECK_THROWS_AS(MapSpec::digit_multiply(2, 1).validate(), DomainError);
  CHECK_THROWS_AS(MapSpec::reverse_subtract(19).validate(), DomainError);
  CHECK_THROWS_AS(orbit(MapSpec::mixed_compose(), 9), DomainError);
  CHECK_THROWS_AS(orbit(MapSpec::reverse_subtract(3), 1000), DomainError);
  CHECK_THROWS_AS(census(MapSpec::reverse_subtract(3), 500, 400), DomainError);
}

TEST_CASE("single steps") {
  CHECK(step(MapSpec::reverse_subtract(5), DigitString(24, 5)).value() == 41976);  // 42000 - 24
  CHECK(step(MapSpec::subtract_const(2, 1), DigitString(52, 2)).str() == "24");
  CHECK(step(MapSpec::subtract_const(2, 1), DigitString(30, 2)).str() == "02");
  CHECK(step(MapSpec::digit_multiply(2, 7), DigitString(68, 2)).value() == 26);
  CHECK(step(MapSpec::mixed_compose(), DigitString(75, 2)).value() == 32);
  CHECK(step(MapSpec::mixed_compose(), DigitString(99, 2)).value() == 90);
  CHECK_THROWS_AS(step(MapSpec::reverse_subtract(3), DigitString(24, 2)), DomainError);
}

TEST_CASE("orbits") {
  const auto o52 = orbit(MapSpec::subtract_const(2, 1), 52);
  CHECK(o52.tail_len == 0);
  CHECK(o52.cycle.size() == 18);
  CHECK(o52.closing_step() == 18);

  const auto o68 = orbit(MapSpec::digit_multiply(2, 7), 68);
  CHECK(o68.steps == std::vector<std::uint64_t>{68, 26, 42, 84});
  CHECK(o68.cycle == std::vector<std::uint64_t>{26, 42, 84, 68});

  const auto o121 = orbit(MapSpec::reverse_subtract(3), 121);
  CHECK(o121.cycle == std::vector<std::uint64_t>{0});
  CHECK(o121.tail_len == 1);

  const auto o1019 = orbit(MapSpec::reverse_subtract(4), 1019);
  CHECK(o1019.tail_len == 12);
  CHECK(o1019.closing_step() == 17);

  const auto o109 = orbit(MapSpec::subtract_const(3, 7), 109);
  CHECK(o109.cycle.size() == 200);
  CHECK(o109.tail_len == 86);
  CHECK(o109.closing_step() == 286);

  CHECK(orbit(MapSpec::subtract_const(2, 1), 10).terminated_zero);
  CHECK(canonical_cycle({5, 3, 9}) == std::vector<std::uint64_t>{3, 9, 5});
}

TEST_CASE("two-digit reverse-subtract tails") {
  // Cycle members have tail 0; everything else enters within two steps.
  const MapSpec m = MapSpec::reverse_subtract(2);
  const auto c = census(m, 10, 99);
  REQUIRE(c.classes.size() == 1);
  const std::set<std::uint64_t> members(c.classes[0].cycle.begin(), c.classes[0].cycle.end());
  CHECK(c.zero_count == 9);
  for (std::uint64_t s = 10; s <= 99; ++s) {
    const auto o = orbit(m, s);
    if (o.cycle == std::vector<std::uint64_t>{0}) continue;
    if (members.count(s)) {
      CHECK(o.tail_len == 0);
    } else {
      CHECK(o.tail_len >= 1);
      CHECK(o.tail_len <= 2);
    }
  }
}

TEST_CASE("Brent census against naive orbits") {
  for (const MapSpec& m : {MapSpec::reverse_subtract(3), MapSpec::subtract_const(3, 9), MapSpec::digit_multiply(3, 8),
                           MapSpec::mixed_compose()}) {
    const std::uint64_t lo = m.kind == MapKind::mixed_compose ? 10 : 100;
    const std::uint64_t hi = m.kind == MapKind::mixed_compose ? 99 : 999;
    const auto c = census(m, lo, hi, 2);
    std::map<std::uint64_t, std::pair<std::uint64_t, std::size_t>> expect;  // cycle min -> members, max tail
    std::uint64_t zeros = 0;
    for (std::uint64_t s = lo; s <= hi; ++s) {
      const auto [tail, len] = naive_tail_cycle(m, s);
      const auto o = orbit(m, s);
      REQUIRE(o.tail_len == tail);
      REQUIRE(o.cycle.size() == len);
      if (o.cycle == std::vector<std::uint64_t>{0}) {
        ++zeros;
        continue;
      }
      auto& e = expect[o.cycle.front()];
      ++e.first;
      e.second = std::max(e.second, tail);
    }
    CHECK(c.zero_count == zeros);
    REQUIRE(c.classes.size() == expect.size());
    for (const auto& k : c.classes) {
      CHECK(expect[k.cycle.front()].first == k.members);
      CHECK(expect[k.cycle.front()].second == k.max_tail);
      CHECK(orbit(m, k.max_tail_start).tail_len == k.max_tail);
      for (std::size_t i = 0; i < k.cycle.size(); ++i) {
        CHECK(step_value(m, k.cycle[i]) == k.cycle[(i + 1) % k.cycle.size()]);
      }
    }
    for (std::uint64_t s = lo; s <= hi; s += 37) {
      const auto o = orbit(m, s);
      CHECK(o.steps.size() <= (hi - lo + 1) + o.cycle.size());
      CHECK(o.steps.size() == o.closing_step());
    }
    CHECK(c.zero_count + c.member_total() == c.total);
  }
}

TEST_CASE("census is independent of thread count") {
  for (unsigned w = 3; w <= 5; ++w) {
    const MapSpec m = MapSpec::reverse_subtract(w);
    const auto ref = census_serial(m, pow10_u64(w - 1), pow10_u64(w) - 1);
    for (int jobs : {1, 2, 8}) REQUIRE(census(m, pow10_u64(w - 1), pow10_u64(w) - 1, jobs) == ref);
  }
}

TEST_CASE("reverse-subtract census facts") {
  const auto w4 = census(MapSpec::reverse_subtract(4), 1000, 9999);
  CHECK(w4.zero_count == 182);
  CHECK(w4.member_total() == 8818);
  CHECK(w4.classes.size() == 4);
  CHECK(w4.max_tail() == std::pair<std::size_t, std::uint64_t>{12, 1019});

  const auto w5 = census(MapSpec::reverse_subtract(5), 10000, 99999);
  CHECK(w5.zero_count == 1820);
  std::uint64_t palindromes = 0;
  for (std::uint64_t s = 10000; s <= 99999; ++s) palindromes += reverse_fixed(s, 5) == s;
  CHECK(palindromes == 900);
}

TEST_CASE("subtract-const c=1 on 10..999 with the start's own width") {
  std::map<std::vector<std::uint64_t>, unsigned> cycles;
  for (std::uint64_t s = 10; s <= 999; ++s) {
    const unsigned w = static_cast<unsigned>(digit_count(s));
    const auto o = orbit(MapSpec::subtract_const(w, 1), s);
    if (!o.terminated_zero) cycles[o.cycle] = w;
  }
  std::multiset<std::size_t> lengths;
  for (const auto& [c, w] : cycles) lengths.insert(c.size());
  CHECK(lengths == std::multiset<std::size_t>{9, 18, 18, 18, 18});
}
