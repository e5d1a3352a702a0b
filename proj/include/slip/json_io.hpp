#ifndef SLIP_JSON_IO_HPP
#define SLIP_JSON_IO_HPP

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "slip/criteria.hpp"
#include "slip/hilbert.hpp"
#include "slip/parse.hpp"
#include "slip/ring.hpp"
#include "slip/ringmaps.hpp"

namespace slip {

using nlohmann::json;

// {"family":"product_projective","ns":[3,3,3]} | {"family":"projective","n":5}
// | {"family":"hirzebruch","a":1}
inline CoxPtr ring_from_json(const json& j) {
  const std::string family = j.at("family").get<std::string>();
  if (family == "projective") return make_projective(j.at("n").get<int>());
  if (family == "product_projective")
    return make_product_projective(j.at("ns").get<std::vector<int>>());
  if (family == "hirzebruch") return make_hirzebruch(j.at("a").get<long>());
  throw std::invalid_argument("unknown ring family: " + family);
}

inline json ring_to_json(const CoxRing& r) {
  switch (r.family) {
    case Family::Projective:
      return {{"family", "projective"}, {"n", r.ns[0]}};
    case Family::ProductProjective:
      return {{"family", "product_projective"}, {"ns", r.ns}};
    case Family::Hirzebruch:
      return {{"family", "hirzebruch"}, {"a", r.hirzebruch_a}};
  }
  throw std::logic_error("unreachable");
}

inline json multidegree_to_json(const MultiDegree& d) { return json(d.v); }

inline MultiDegree multidegree_from_json(const json& j) {
  return MultiDegree(j.get<std::vector<long>>());
}

inline json polys_to_json(const std::vector<Polynomial>& ps) {
  json arr = json::array();
  for (const auto& p : ps) arr.push_back(p.str());
  return arr;
}

// {"ring": <ring json>, "generators": ["a0^2", ...]}
inline Ideal ideal_from_json(const json& j, CoxPtr* out_ring = nullptr) {
  CoxPtr ring = ring_from_json(j.at("ring"));
  if (out_ring) *out_ring = ring;
  PolyParser parser(std::static_pointer_cast<const Ring>(ring));
  std::vector<Polynomial> gens;
  for (const auto& s : j.at("generators"))
    gens.push_back(parser.parse_homogeneous(s.get<std::string>()));
  return Ideal(std::static_pointer_cast<const Ring>(ring), std::move(gens));
}

inline json ideal_to_json(const CoxRing& ring, const Ideal& I) {
  return {{"ring", ring_to_json(ring)}, {"generators", polys_to_json(I.generators())}};
}

// {"source":…, "target":…, "degreeMap":[[…]], "images":["x0_0*x1_0", …]}
inline GradedRingMap map_from_json(const json& j) {
  GradedRingMap map;
  map.source = ring_from_json(j.at("source"));
  map.target = ring_from_json(j.at("target"));
  map.degree_map = j.at("degreeMap").get<std::vector<std::vector<long>>>();
  PolyParser parser(std::static_pointer_cast<const Ring>(map.target));
  for (const auto& s : j.at("images"))
    map.images.push_back(parser.parse(s.get<std::string>()));
  map.validate();
  return map;
}

inline json hf_report_to_json(const HfReport& r) {
  json values = json::array();
  for (const auto& v : r.values)
    values.push_back({{"degree", multidegree_to_json(v.degree)},
                      {"hf", v.hf},
                      {"target", v.target}});
  json out = {{"ok", r.ok},
              {"window",
               {{"lower", multidegree_to_json(r.window.lower)},
                {"upper", multidegree_to_json(r.window.upper)}}},
              {"values", values}};
  if (r.first_failure) out["first_failure"] = multidegree_to_json(*r.first_failure);
  return out;
}

inline json criterion_report_to_json(const CriterionReport& r) {
  json out = {{"criterion", r.criterion},
              {"dim", r.dim},
              {"threshold", r.threshold},
              {"verdict", r.verdict},
              {"certificate", r.certificate}};
  if (r.factor >= 0) out["i"] = r.factor + 1;  // 1-based in reports
  return out;
}

inline json embedding_report_to_json(const EmbeddingReport& r) {
  return {{"algebra_generated", r.algebra_generated},
          {"hilbert_matches", r.hilbert_matches},
          {"irrelevant_in_radical", r.irrelevant_in_radical},
          {"window", r.window},
          {"all_hold", r.all_hold()}};
}

inline json preimage_report_to_json(const PreimageReport& r) {
  json surj = json::array();
  for (const auto& [deg, ok] : r.surjectivity)
    surj.push_back({{"degree", multidegree_to_json(deg)}, {"surjective", ok}});
  json out = {{"surjectivity", surj}};
  if (r.saturation_rechecked) out["saturation_ok"] = r.saturation_ok;
  return out;
}

// "a..b" or "a1,a2..b1,b2"
inline DegreeBox parse_window(const std::string& s, int rank) {
  auto dots = s.find("..");
  if (dots == std::string::npos)
    throw std::invalid_argument("window must look like 0..5 or 0,0..5,5");
  auto parse_tuple = [&](const std::string& t) {
    std::vector<long> v;
    std::stringstream ss(t);
    std::string item;
    while (std::getline(ss, item, ',')) v.push_back(std::stol(item));
    if (static_cast<int>(v.size()) == 1 && rank > 1) v.assign(rank, v[0]);
    if (static_cast<int>(v.size()) != rank)
      throw std::invalid_argument("window rank mismatch");
    return MultiDegree(std::move(v));
  };
  return DegreeBox(parse_tuple(s.substr(0, dots)), parse_tuple(s.substr(dots + 2)));
}

inline json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  json j;
  in >> j;
  return j;
}

// Accepts inline JSON text or a path to a JSON file.
inline json load_json_arg(const std::string& arg) {
  std::string trimmed = arg;
  auto pos = trimmed.find_first_not_of(" \t\n");
  if (pos != std::string::npos && (trimmed[pos] == '{' || trimmed[pos] == '['))
    return json::parse(trimmed);
  return load_json_file(arg);
}

}  // namespace slip

#endif
