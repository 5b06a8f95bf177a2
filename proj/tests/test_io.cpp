#include <doctest.h>

#include <sstream>

#include "seqlab/bfile.hpp"
#include "seqlab/concat.hpp"
#include "seqlab/partition.hpp"
#include "seqlab/report_json.hpp"
#include "seqlab/sieve.hpp"

using namespace seqlab;

namespace {

std::vector<Natural> naturals(const std::vector<std::uint64_t>& xs) {
  return {xs.begin(), xs.end()};
}

std::vector<Natural> round_trip(const std::vector<Natural>& seq) {
  std::stringstream ss;
  write_bfile(ss, seq);
  return read_bfile(ss);
}

}  // namespace

TEST_CASE("b-file format") {
  std::stringstream ss;
  write_bfile(ss, {1, 2, 4});
  CHECK(ss.str() == "1 1\n2 2\n3 4\n");
  CHECK(read_bfile(ss) == std::vector<Natural>{1, 2, 4});

  const auto [idx, val] = parse_bfile_line("3 44");
  CHECK(idx == 3);
  CHECK(val == 44);
  CHECK_THROWS_AS(parse_bfile_line("03 44"), BFileError);
  CHECK_THROWS_AS(parse_bfile_line("3 044"), BFileError);
  CHECK_THROWS_AS(parse_bfile_line("3  44"), BFileError);
  CHECK_THROWS_AS(parse_bfile_line("3 44 "), BFileError);
  CHECK_THROWS_AS(parse_bfile_line("3,44"), BFileError);
  CHECK_THROWS_AS(write_bfile(ss, {}), DomainError);
}

TEST_CASE("b-file reader reports line numbers") {
  std::stringstream gap("1 5\n2 7\n4 9\n");
  try {
    read_bfile(gap);
    FAIL("expected a parse error");
  } catch (const BFileError& e) {
    CHECK(e.line() == 3);
  }
  std::stringstream padded("1 5\n02 7\n");
  try {
    read_bfile(padded);
    FAIL("expected a parse error");
  } catch (const BFileError& e) {
    CHECK(e.line() == 2);
  }
  std::stringstream unterminated("1 5\n2 7");
  CHECK_THROWS_AS(read_bfile(unterminated), BFileError);
  std::stringstream empty("");
  CHECK_THROWS_AS(read_bfile(empty), BFileError);
}

TEST_CASE("b-file round trip for every generated family") {
  CHECK(round_trip(g_addon(GeneratorSpec::odd(), 1000)) == g_addon(GeneratorSpec::odd(), 1000));
  CHECK(round_trip(g_addon(GeneratorSpec::even(), 1000)) == g_addon(GeneratorSpec::even(), 1000));
  CHECK(round_trip(g_addon(GeneratorSpec::prime(), 1000)) == g_addon(GeneratorSpec::prime(), 1000));
  CHECK(round_trip(prime_digital_stream(1000)) == prime_digital_stream(1000));
  CHECK(round_trip(naturals(nap_sequence(3, 1000))) == naturals(nap_sequence(3, 1000)));
  CHECK(round_trip(naturals(nary_sieve(1000))) == naturals(nary_sieve(1000)));
  const auto es = naturals(erdos_smarandache(1500));
  CHECK(round_trip(es) == es);
  const auto sp = spds_enumerate(3000);
  CHECK(round_trip(sp) == sp);
}

TEST_CASE("JSON reports re-parse to equal values") {
  for (std::uint64_t s : {52ull, 10ull, 99ull}) {
    const auto o = orbit(MapSpec::subtract_const(2, 1), s);
    CHECK(orbit_report_from_json(Json::parse(dump(to_json(o)))) == o);
  }
  const auto o = orbit(MapSpec::reverse_subtract(5), 24);
  CHECK(orbit_report_from_json(Json::parse(dump(to_json(o)))) == o);

  for (const MapSpec& m : {MapSpec::reverse_subtract(4), MapSpec::digit_multiply(2, 8), MapSpec::mixed_compose()}) {
    const auto c = census(m, m.kind == MapKind::reverse_subtract ? 1000 : 10, m.domain_hi());
    const auto j = to_json(c);
    CHECK(census_report_from_json(Json::parse(dump(j))) == c);
    CHECK(j.at("map").at("kind") == to_string(m.kind));
    CHECK(j.at("domain").at("hi") == m.domain_hi());
  }
  CHECK_THROWS_AS(census_report_from_json(Json::parse("{\"map\": 3}")), DomainError);
}

TEST_CASE("census JSON is byte-identical for any job count") {
  const MapSpec m = MapSpec::reverse_subtract(5);
  const std::string ref = dump(to_json(census(m, 10000, 99999, 1)));
  for (int jobs : {2, 3, 8}) CHECK(dump(to_json(census(m, 10000, 99999, jobs))) == ref);
}
