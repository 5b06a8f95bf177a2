// seqlab: sequences, digit-map orbits and censuses, scans, conformance checks.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or domain error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "seqlab/analysis.hpp"
#include "seqlab/bfile.hpp"
#include "seqlab/concat.hpp"
#include "seqlab/dynamics.hpp"
#include "seqlab/partition.hpp"
#include "seqlab/report_json.hpp"
#include "seqlab/sieve.hpp"
#include "seqlab/verify.hpp"

using namespace seqlab;

namespace {

struct Globals {
  std::string out;
  std::string format;  // empty: command default
  int jobs = 0;
  std::uint64_t seed = kDefaultSeed;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void emit(const Globals& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream f(g.out, std::ios::binary);
  if (!f || !(f << text)) throw std::runtime_error("cannot write " + g.out);
}

void require_json(const Globals& g, const char* cmd) {
  if (!g.format.empty() && g.format != "json") throw UsageError(std::string(cmd) + " emits JSON only");
}

std::string sequence_text(const Globals& g, const std::string& family, const std::vector<Natural>& seq) {
  const std::string fmt = g.format.empty() ? "bfile" : g.format;
  std::ostringstream os;
  if (fmt == "bfile") {
    write_bfile(os, seq);
  } else if (fmt == "csv") {
    os << "index,value\n";
    for (std::size_t i = 0; i < seq.size(); ++i) os << i + 1 << ',' << seq[i].get_str() << '\n';
  } else {
    Json terms = Json::array();
    for (const auto& v : seq) terms.push_back(v.get_str());
    os << dump(Json{{"family", family}, {"count", seq.size()}, {"terms", std::move(terms)}});
  }
  return os.str();
}

std::vector<Natural> naturals(const std::vector<std::uint64_t>& xs) {
  std::vector<Natural> out;
  out.reserve(xs.size());
  for (auto x : xs) out.push_back(from_u64(x));
  return out;
}

struct GenArgs {
  std::string family;
  std::size_t count = 10;
  unsigned t = 3;
  std::string schedule = "default";
};

std::vector<Natural> generate(const Globals& g, const GenArgs& a) {
  if (a.count < 1) throw DomainError("count must be >= 1");
  if (a.family == "odd-addon") return g_addon(GeneratorSpec::odd(), a.count);
  if (a.family == "even-addon") return g_addon(GeneratorSpec::even(), a.count);
  if (a.family == "prime-addon") return g_addon(GeneratorSpec::prime(), a.count);
  if (a.family == "prime-digital") return prime_digital_stream(a.count);
  if (a.family == "nap") return naturals(nap_sequence(a.t, a.count));
  if (a.family == "nary-sieve") return naturals(nary_sieve(a.count, SieveSchedule::parse(a.schedule)));
  if (a.family == "erdos-smarandache") {
    for (std::uint64_t limit = 2 * a.count + 16;; limit *= 2) {
      auto v = erdos_smarandache(limit, g.jobs);
      if (v.size() >= a.count) {
        v.resize(a.count);
        return naturals(v);
      }
    }
  }
  if (a.family == "spds") {
    for (std::uint64_t roots = 4 * a.count + 16;; roots *= 2) {
      auto v = spds_enumerate(roots, g.jobs);
      if (v.size() >= a.count) {
        v.resize(a.count);
        return v;
      }
    }
  }
  throw UsageError("unknown family: " + a.family);
}

struct MapArgs {
  std::string map;
  std::string start;
  std::optional<unsigned> width;
  std::uint64_t c = 0;
  std::optional<std::uint64_t> lo, hi;
};

MapSpec map_spec(const MapArgs& a, unsigned default_width) {
  const MapKind kind = parse_map_kind(a.map);
  MapSpec m{kind, a.width.value_or(default_width), a.c};
  if (kind == MapKind::mixed_compose) m = MapSpec::mixed_compose();
  m.validate();
  return m;
}

std::string run_orbit(const MapArgs& a) {
  // "02" keeps its leading zero, so the width comes from the text.
  const DigitString typed = DigitString::parse(a.start);
  MapSpec m = map_spec(a, typed.width());
  const std::uint64_t v = typed.value();
  m.validate_value(v);
  if (digit_count(v) > m.width) throw DomainError("start has more digits than the width");
  return dump(to_json(orbit(m, DigitString(v, m.width))));
}

std::string run_census(const Globals& g, const MapArgs& a) {
  unsigned w = 2;
  if (a.hi) w = static_cast<unsigned>(digit_count(*a.hi));
  MapSpec m = map_spec(a, w);
  const std::uint64_t lo =
      a.lo.value_or(m.kind == MapKind::mixed_compose ? 10 : (m.width > 1 ? pow10_u64(m.width - 1) : 0));
  const std::uint64_t hi = a.hi.value_or(m.domain_hi());
  return dump(to_json(census(m, lo, hi, g.jobs)));
}

struct SearchArgs {
  std::string family = "odd";
  std::size_t limit = 200;
  std::uint64_t root_limit = 1000;
  std::string pattern;
  std::string m = "12";
  std::uint64_t max_base = 10;
  std::size_t length = 2;
  unsigned digits = 2;
  std::string function = "S2";
  std::uint64_t lo = 2, hi = 1000;
  std::string n = "1";
  std::optional<std::uint64_t> k;
  unsigned power = 2;
  std::string metallic = "A";
  std::size_t count = 10;
};

Json hits_json(const std::vector<Natural>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.get_str());
  return a;
}

std::string run_search(const Globals& g, const std::string& what, const SearchArgs& a) {
  const ScanOptions so{kDefaultRounds, g.seed, g.jobs};
  if (what == "addon-primes") {
    return dump(to_json(prime_rank_scan(GeneratorSpec{parse_generator_family(a.family), {}}, a.limit, so)));
  }
  if (what == "even-powers") return dump(to_json(power_and_2p_scan(a.limit, so)));
  if (what == "spds-runs") {
    Json runs = Json::array();
    for (const auto& r : consecutive_spds_runs(a.root_limit, g.jobs)) {
      runs.push_back(Json{{"start_root", r.start_root}, {"length", r.length}});
    }
    return dump(Json{{"root_limit", a.root_limit}, {"runs", runs}});
  }
  if (what == "spds-pattern") {
    return dump(Json{{"pattern", a.pattern}, {"root_limit", a.root_limit},
                     {"members", hits_json(pattern_search(a.pattern, a.root_limit, g.jobs))}});
  }
  if (what == "power-chain") {
    const auto c = power_chain_check(parse_natural(a.m));
    return dump(Json{{"m", a.m}, {"m_member", c.m}, {"m2_member", c.m2}, {"m4_member", c.m4}});
  }
  if (what == "expression-primes") {
    Json hits = Json::array();
    for (const auto& h : expression_prime_search(a.max_base, a.length, kDefaultRounds, g.seed, g.jobs)) {
      hits.push_back(Json{{"xs", h.xs}, {"value", h.value.get_str()}, {"verdict", to_string(h.verdict.kind)}});
    }
    return dump(Json{{"max_base", a.max_base}, {"length", a.length}, {"hits", hits}});
  }
  if (what == "lucky") {
    Json out = Json::array();
    for (const auto& f : lucky_cancellations(a.digits)) {
      out.push_back(Json{{"numerator", f.numerator}, {"denominator", f.denominator}, {"reduced", to_string(f.reduced)}});
    }
    return dump(Json{{"digits", a.digits}, {"fractions", out}});
  }
  if (what == "lipschitz") {
    const auto f = parse_s_function(a.function);
    const auto p = lipschitz_probe(f, a.lo, a.hi, g.jobs);
    return dump(Json{{"function", to_string(f)}, {"lo", a.lo}, {"hi", a.hi},
                     {"max_diff", to_string(p.max_diff)}, {"argmax", p.argmax}});
  }
  if (what == "factorials") {
    const auto parts = product_of_factorials(parse_natural(a.n));
    return dump(Json{{"n", a.n}, {"parts", parts ? Json(*parts) : Json(nullptr)}});
  }
  if (what == "representations") {
    const auto n = to_u64(parse_natural(a.n));
    return dump(Json{{"n", n}, {"k", a.k ? Json(*a.k) : Json(nullptr)}, {"m", a.power},
                     {"count", representation_count(n, a.k, a.power).get_str()}});
  }
  if (what == "metallic") {
    if (a.metallic != "A" && a.metallic != "B") throw DomainError("metallic family is A or B");
    const MetallicSpec spec{a.metallic == "A" ? MetallicFamily::A : MetallicFamily::B, to_u64(parse_natural(a.n))};
    Json cs = Json::array();
    for (const auto& c : metallic_convergents(spec, a.count)) {
      cs.push_back(Json{{"p", c.p.get_str()}, {"q", c.q.get_str()}, {"side", metallic_side(spec, c)}});
    }
    const auto root = metallic_rational_root(spec);
    return dump(Json{{"family", a.metallic}, {"n", spec.n}, {"convergents", cs},
                     {"rational_root", root ? Json(to_string(*root)) : Json(nullptr)}});
  }
  throw UsageError("unknown search: " + what);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Integer sequence and digit-map toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--out", g.out, "Write output to this path instead of stdout");
  app.add_option("--format", g.format, "bfile, json or csv")->check(CLI::IsMember({"bfile", "json", "csv"}));
  app.add_option("--jobs", g.jobs, "Worker threads (0: all cores)")->check(CLI::NonNegativeNumber);
  app.add_option("--seed", g.seed, "Seed for probabilistic primality")->envname("SEQLAB_SEED");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Emit the first terms of a sequence");
  gen_cmd->add_option("family", gen.family, "odd-addon, even-addon, prime-addon, prime-digital, nap, nary-sieve, "
                                            "erdos-smarandache, spds")
      ->required();
  gen_cmd->add_option("--count", gen.count, "Number of terms");
  gen_cmd->add_option("--t", gen.t, "Progression length for nap");
  gen_cmd->add_option("--schedule", gen.schedule, "nary-sieve schedule: default, literal, every-kth");

  MapArgs orb;
  auto* orbit_cmd = app.add_subcommand("orbit", "Follow one start under a digit map");
  orbit_cmd->add_option("map", orb.map, "reverse-subtract, subtract-const, digit-multiply, mixed-compose")->required();
  orbit_cmd->add_option("--start", orb.start, "Start value; leading zeros set the width")->required();
  orbit_cmd->add_option("--width", orb.width, "Digit width (default: digits of --start)");
  orbit_cmd->add_option("--c", orb.c, "Map constant");

  MapArgs cen;
  auto* census_cmd = app.add_subcommand("census", "Classify every start in a range by its cycle");
  census_cmd->add_option("map", cen.map)->required();
  census_cmd->add_option("--width", cen.width, "Digit width (default: digits of --hi)");
  census_cmd->add_option("--c", cen.c, "Map constant");
  census_cmd->add_option("--lo", cen.lo, "First start (default: smallest width-digit number)");
  census_cmd->add_option("--hi", cen.hi, "Last start (default: largest width-digit number)");

  std::string what;
  SearchArgs sa;
  auto* search_cmd = app.add_subcommand("search", "Scans and searches");
  search_cmd
      ->add_option("what", what,
                   "addon-primes, even-powers, spds-runs, spds-pattern, power-chain, expression-primes, lucky, "
                   "lipschitz, factorials, representations, metallic")
      ->required();
  search_cmd->add_option("--family", sa.family, "addon-primes: odd, even, prime");
  search_cmd->add_option("--limit", sa.limit, "Number of add-on terms to scan");
  search_cmd->add_option("--root-limit", sa.root_limit, "Largest square root for SPDS searches");
  search_cmd->add_option("--pattern", sa.pattern, "Digit pattern for spds-pattern");
  search_cmd->add_option("--m", sa.m, "Value for power-chain");
  search_cmd->add_option("--max-base", sa.max_base, "Largest base for expression-primes");
  search_cmd->add_option("--length", sa.length, "Tuple length for expression-primes");
  search_cmd->add_option("--digits", sa.digits, "Digits per term for lucky");
  search_cmd->add_option("--function", sa.function, "lipschitz: S1, S2, S3, Fs, Theta, ThetaBar");
  search_cmd->add_option("--lo", sa.lo);
  search_cmd->add_option("--hi", sa.hi);
  search_cmd->add_option("--n", sa.n, "Argument for factorials, representations, metallic");
  search_cmd->add_option("--k", sa.k, "Exact part count for representations");
  search_cmd->add_option("--power", sa.power, "Exponent for representations");
  search_cmd->add_option("--metallic", sa.metallic, "Metallic family A or B");
  search_cmd->add_option("--count", sa.count, "Number of metallic convergents");

  std::string suite = "all";
  auto* verify_cmd = app.add_subcommand("verify", "Run the conformance checks");
  verify_cmd->add_option("--suite", suite, "paper, oracles or all");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*gen_cmd) {
      emit(g, sequence_text(g, gen.family, generate(g, gen)));
    } else if (*orbit_cmd) {
      require_json(g, "orbit");
      emit(g, run_orbit(orb));
    } else if (*census_cmd) {
      require_json(g, "census");
      emit(g, run_census(g, cen));
    } else if (*search_cmd) {
      require_json(g, "search");
      emit(g, run_search(g, what, sa));
    } else if (*verify_cmd) {
      if (!g.format.empty() && g.format != "json") throw UsageError("verify prints a table or JSON");
      const auto r = run_verify(suite, {kDefaultRounds, g.seed, g.jobs});
      emit(g, g.format == "json" ? dump(to_json(r)) : render_table(r));
      return r.exit_code();
    }
  } catch (const UsageError& e) {
    std::cerr << "seqlab: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "seqlab: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "seqlab: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
