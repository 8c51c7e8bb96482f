#pragma once

// JSON views of reports. Requires nlohmann/json (vendored as json.hpp).

#include <string>
#include <vector>

#include "heffter/analysis.hpp"
#include "heffter/array.hpp"
#include "heffter/autgroup.hpp"
#include "heffter/embedding.hpp"
#include "json.hpp"

namespace heffter {

using json = nlohmann::ordered_json;

/// {q, m, n, aut0_plus, aut0_minus, total, cyclic, generator, method}
inline json to_json(const AutReport& r) {
  return json{{"q", r.q},
              {"m", r.m},
              {"n", r.n},
              {"aut0_plus", r.aut0_plus},
              {"aut0_minus", r.aut0_minus},
              {"total", r.total},
              {"cyclic", r.cyclic},
              {"generator", r.cyclic ? cycle_notation(r.generator) : std::string()},
              {"method", std::string(to_string(r.method))}};
}

inline json faces_to_json(const std::vector<Face>& faces) {
  json out = json::array();
  for (const auto& f : faces) {
    json verts = json::array();
    for (auto v : f.vertices) verts.push_back(v.value);
    out.push_back(json{{"length", f.length()}, {"vertices", std::move(verts)}});
  }
  return out;
}

inline json to_json(const HeffterReport& r) {
  json violations = json::array();
  for (const auto& v : r.violations) {
    json cells = json::array();
    for (const auto& c : v.witnesses) cells.push_back(json::array({c.row + 1, c.col + 1}));
    violations.push_back(
        json{{"kind", std::string(to_string(v.kind))}, {"detail", v.detail}, {"cells", std::move(cells)}});
  }
  json row_sums = json::array();
  for (auto s : r.row_sums) row_sums.push_back(s.value);
  json col_sums = json::array();
  for (auto s : r.col_sums) col_sums.push_back(s.value);
  json out{{"ok", r.ok}};
  out["h"] = r.h ? json(*r.h) : json(nullptr);
  out["k"] = r.k ? json(*r.k) : json(nullptr);
  out["row_sums"] = std::move(row_sums);
  out["col_sums"] = std::move(col_sums);
  out["violations"] = std::move(violations);
  return out;
}

inline json to_json(const Analysis& a) {
  json out{{"q", a.q}, {"m", a.m}, {"n", a.n}, {"ell", a.ell}};
  out["heffter"] = a.heffter.ok;
  out["rank_one"] = a.rank_one;
  out["globally_simple"] = a.globally_simple;
  out["compatible"] = a.compatible;
  if (a.embedding) {
    out["rho0"] = cycle_notation(a.embedding->rho0_cycles());
    out["rotation_valid"] = a.rotation_valid;
  }
  if (a.surface) {
    json census = json::object();
    for (const auto& [len, count] : a.surface->census) census[std::to_string(len)] = count;
    out["faces"] = std::move(census);
    out["face_count"] = a.surface->faces;
    out["euler_characteristic"] = a.surface->euler_characteristic;
    out["genus"] = a.surface->genus;
  }
  if (a.biembedding) out["biembedding"] = a.biembedding->ok;
  if (const auto* aut = a.aut()) {
    out["aut0"] = aut->aut0_plus + aut->aut0_minus;
    out["total"] = aut->total;
  }
  if (a.restricted) out["aut_restricted"] = to_json(*a.restricted);
  if (a.exhaustive) out["aut_exhaustive"] = to_json(*a.exhaustive);
  if (a.modes_agree) out["modes_agree"] = *a.modes_agree;
  json props = json::array();
  for (const auto& p : a.properties) {
    json item{{"name", p.name}, {"ok", p.ok}};
    if (!p.detail.empty()) item["detail"] = p.detail;
    props.push_back(std::move(item));
  }
  out["properties"] = std::move(props);
  out["ok"] = a.ok();
  return out;
}

}  // namespace heffter
