#ifndef CPK_REPORT_HPP
#define CPK_REPORT_HPP

// JSON forms of results; requires nlohmann/json (json.hpp) on the include path.

#include <json.hpp>

#include "cpk/asteroidal.hpp"
#include "cpk/central_path.hpp"
#include "cpk/error.hpp"
#include "cpk/harness.hpp"
#include "cpk/path_ecc.hpp"
#include "cpk/star_c1p.hpp"

namespace cpk {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

inline Json to_json(const Path& p) { return Json(p.vertices); }

inline Json to_json(const KatWitness& w) {
  return Json{{"k", w.k},
              {"triple", w.triple},
              {"paths", {{"ab", to_json(w.ab)}, {"ac", to_json(w.ac)}, {"bc", to_json(w.bc)}}}};
}

inline Json to_json(const std::optional<KatWitness>& w) { return w ? to_json(*w) : Json(nullptr); }

/// {"order": rank of each vertex, "diagonal": D}
inline Json to_json(const OrderingWitness& w) { return Json{{"order", w.rank}, {"diagonal", w.diagonal}}; }

inline OrderingWitness witness_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("order") || !j.contains("diagonal"))
    throw invalid_input("witness JSON needs \"order\" and \"diagonal\"");
  OrderingWitness w{j.at("order").get<std::vector<int>>(), j.at("diagonal").get<VertexSet>()};
  std::vector<bool> seen(w.rank.size(), false);
  for (int r : w.rank) {
    if (r < 0 || static_cast<std::size_t>(r) >= w.rank.size() || seen[static_cast<std::size_t>(r)])
      throw invalid_input("witness JSON: \"order\" is not a permutation of ranks");
    seen[static_cast<std::size_t>(r)] = true;
  }
  std::sort(w.diagonal.begin(), w.diagonal.end());
  for (std::size_t i = 0; i < w.diagonal.size(); ++i)
    if (w.diagonal[i] < 0 || static_cast<std::size_t>(w.diagonal[i]) >= w.rank.size() ||
        (i > 0 && w.diagonal[i] == w.diagonal[i - 1]))
      throw invalid_input("witness JSON: \"diagonal\" must list distinct vertices");
  return w;
}

inline Json to_json(const PeResult& r) { return Json{{"pe", r.value}, {"path", to_json(r.witness)}}; }

inline Json to_json(const TraceRecord& t) {
  return Json{{"iteration", t.iteration},
              {"step", t.step},
              {"construction", t.construction},
              {"covered", t.covered},
              {"path_vertices", t.path_vertices},
              {"w", t.w ? Json(*t.w) : Json(nullptr)}};
}

inline Json to_json(const Dichotomy& d, int k) {
  Json j{{"schema", kSchemaVersion}, {"k", k}, {"side", d.path ? "path" : "witness"}, {"source", to_string(d.source)}};
  j["path"] = d.path ? to_json(*d.path) : Json(nullptr);
  j["witness"] = to_json(d.witness);
  return j;
}

/// `wall_seconds` is the only nondeterministic field.
inline Json to_json(const PropertyReport& r) {
  Json v = Json::array();
  for (const auto& x : r.violations) v.push_back({{"graph6", x.graph6}, {"details", x.details}});
  return Json{{"property", r.property},   {"corpus", r.corpus},   {"checked", r.checked},
              {"applicable", r.applicable}, {"skipped", r.skipped}, {"pass", r.pass},
              {"violations", v},          {"wall_seconds", r.wall_seconds}};
}

inline Json to_json(const HuntResult& h) {
  Json j{{"schema", kSchemaVersion}, {"searched", h.searched}, {"star_c1p", h.star_c1p}, {"skipped", h.skipped}};
  if (h.counterexample)
    j["counterexample"] = {{"graph6", h.counterexample->graph6},
                           {"witness", to_json(h.counterexample->witness)},
                           {"pe", to_json(h.counterexample->pe)}};
  else
    j["counterexample"] = nullptr;
  return j;
}

/// Drops timing fields so two runs on the same input compare equal.
inline Json without_timing(Json j) {
  if (j.is_object()) {
    j.erase("wall_seconds");
    for (auto& [key, value] : j.items()) value = without_timing(value);
  } else if (j.is_array()) {
    for (auto& value : j) value = without_timing(value);
  }
  return j;
}

}  // namespace cpk

#endif  // CPK_REPORT_HPP
