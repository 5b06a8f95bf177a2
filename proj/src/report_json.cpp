#include "seqlab/report_json.hpp"

namespace seqlab {

namespace {

// Malformed input surfaces as a domain error rather than a json exception.
template <typename F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed report JSON: ") + e.what());
  }
}

}  // namespace

Json to_json(const MapSpec& m) { return Json{{"kind", to_string(m.kind)}, {"width", m.width}, {"c", m.c}}; }

MapSpec map_spec_from_json(const Json& j) {
  return guarded([&] {
    MapSpec m{parse_map_kind(j.at("kind").get<std::string>()), j.at("width").get<unsigned>(),
              j.at("c").get<std::uint64_t>()};
    m.validate();
    return m;
  });
}

Json to_json(const OrbitReport& r) {
  return Json{{"start", r.start.value()},     {"width", r.start.width()}, {"tail_len", r.tail_len},
              {"cycle", r.cycle},             {"steps", r.steps},         {"terminated_zero", r.terminated_zero}};
}

OrbitReport orbit_report_from_json(const Json& j) {
  return guarded([&] {
    OrbitReport r;
    r.start = DigitString(j.at("start").get<std::uint64_t>(), j.at("width").get<unsigned>());
    r.tail_len = j.at("tail_len").get<std::size_t>();
    r.cycle = j.at("cycle").get<std::vector<std::uint64_t>>();
    r.steps = j.at("steps").get<std::vector<std::uint64_t>>();
    r.terminated_zero = j.at("terminated_zero").get<bool>();
    return r;
  });
}

Json to_json(const CensusReport& r) {
  Json classes = Json::array();
  for (const auto& c : r.classes) {
    classes.push_back(Json{{"cycle", c.cycle},
                           {"members", c.members},
                           {"max_tail", c.max_tail},
                           {"max_tail_start", c.max_tail_start}});
  }
  return Json{{"map", to_json(r.map)},
              {"domain", Json{{"lo", r.lo}, {"hi", r.hi}}},
              {"total", r.total},
              {"zero_count", r.zero_count},
              {"classes", std::move(classes)}};
}

CensusReport census_report_from_json(const Json& j) {
  return guarded([&] {
    CensusReport r;
    r.map = map_spec_from_json(j.at("map"));
    r.lo = j.at("domain").at("lo").get<std::uint64_t>();
    r.hi = j.at("domain").at("hi").get<std::uint64_t>();
    r.total = j.at("total").get<std::uint64_t>();
    r.zero_count = j.at("zero_count").get<std::uint64_t>();
    for (const auto& c : j.at("classes")) {
      r.classes.push_back({c.at("cycle").get<std::vector<std::uint64_t>>(), c.at("members").get<std::uint64_t>(),
                           c.at("max_tail").get<std::size_t>(), c.at("max_tail_start").get<std::uint64_t>()});
    }
    return r;
  });
}

Json to_json(const ScanReport& r) {
  Json hits = Json::array();
  for (const auto& h : r.hits) {
    hits.push_back(Json{{"rank", h.rank},
                        {"digits", term_digit_count(r.family, h.rank)},
                        {"class", describe(h.classification)}});
  }
  return Json{{"family", to_string(r.family.family)}, {"limit", r.limit}, {"hits", std::move(hits)}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace seqlab
