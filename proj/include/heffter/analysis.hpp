#pragma once

// End-to-end checks on an array: Heffter conditions, orderings, embedding,
// faces, surface and automorphism group. Shared by the CLI and the
// acceptance suite.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "heffter/array.hpp"
#include "heffter/autgroup.hpp"
#include "heffter/embedding.hpp"
#include "heffter/orderings.hpp"

namespace heffter {

enum class SearchMode { Restricted, Exhaustive, Both };

struct PropertyCheck {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct Analysis {
  std::size_t m = 0;
  std::size_t n = 0;
  std::uint32_t q = 0;
  std::size_t ell = 0;
  HeffterReport heffter;
  bool rank_one = false;
  bool globally_simple = false;
  bool orderings_simple = false;
  bool compatible = false;
  std::optional<OrderingPair> orderings;
  std::optional<Embedding> embedding;
  bool rotation_valid = false;
  std::vector<Face> faces;
  std::optional<BiembeddingReport> biembedding;
  std::optional<SurfaceReport> surface;
  std::optional<AutReport> restricted;
  std::optional<AutReport> exhaustive;
  std::optional<bool> modes_agree;
  std::vector<PropertyCheck> properties;

  bool ok() const {
    for (const auto& p : properties) {
      if (!p.ok) return false;
    }
    return true;
  }

  const PropertyCheck* first_failure() const {
    for (const auto& p : properties) {
      if (!p.ok) return &p;
    }
    return nullptr;
  }

  /// The search result used for reporting: restricted when available.
  const AutReport* aut() const {
    if (restricted) return &*restricted;
    if (exhaustive) return &*exhaustive;
    return nullptr;
  }
};

inline bool same_group(const AutReport& a, const AutReport& b) {
  if (a.aut0_plus != b.aut0_plus || a.aut0_minus != b.aut0_minus || a.total != b.total || a.cyclic != b.cyclic) {
    return false;
  }
  if (a.stabilizer.size() != b.stabilizer.size()) return false;
  for (std::size_t i = 0; i < a.stabilizer.size(); ++i) {
    if (a.stabilizer[i].perm != b.stabilizer[i].perm ||
        a.stabilizer[i].orientation != b.stabilizer[i].orientation) {
      return false;
    }
  }
  return true;
}

/// Runs every check. Faces of an m x n array are expected to have lengths m
/// (columns) and n (rows). The group-order predictions (|Aut0| = mn, cyclic,
/// |Aut| = q(q-1)/2) are only asserted for rank-one arrays with ell = 0.
inline Analysis analyze_array(const PartiallyFilledArray& a, std::size_t ell, SearchMode mode,
                              const SearchOptions& opts = {}) {
  Analysis r;
  r.m = a.rows();
  r.n = a.cols();
  r.q = a.field().q();
  r.ell = ell;
  auto check = [&](std::string name, bool ok, std::string detail = {}) {
    r.properties.push_back({std::move(name), ok, std::move(detail)});
    return ok;
  };

  r.heffter = validate_heffter(a);
  if (!check("heffter-validation", r.heffter.ok,
             r.heffter.ok ? "" : std::string(to_string(r.heffter.violations.front().kind)) + ": " +
                                     r.heffter.violations.front().detail)) {
    return r;
  }
  if (!a.is_totally_filled()) {
    check("totally-filled", false, "natural orderings need a totally filled array");
    return r;
  }
  r.rank_one = is_rank_one(a);
  r.globally_simple = check_globally_simple(a);
  r.orderings = natural_orderings(a, ell);
  r.orderings_simple = is_simple(a.field(), *r.orderings);
  r.compatible = is_compatible(*r.orderings);
  check("orderings-simple", r.orderings_simple);
  if (!check("compatible", r.compatible)) return r;

  r.embedding = build_rho0(a, *r.orderings);
  r.rotation_valid = validate_rotation(*r.embedding);
  check("rotation", r.rotation_valid);

  detail::check_deadline(opts);
  const FaceSet fs = trace_face_set(*r.embedding);
  r.faces = fs.faces;
  r.biembedding = verify_biembedding(fs, r.m, r.n);
  check("biembedding", r.biembedding->ok,
        r.biembedding->failures.empty() ? "" : r.biembedding->failures.front());

  r.surface = surface_report(r.q, r.faces);
  const auto census_at = [&](std::size_t len) {
    auto it = r.surface->census.find(len);
    return it == r.surface->census.end() ? std::size_t{0} : it->second;
  };
  check("face-census", census_at(r.m) == std::size_t{r.q} * r.n && census_at(r.n) == std::size_t{r.q} * r.m &&
                           r.surface->census.size() == 2);
  const std::int64_t q = r.q;
  const auto m = static_cast<std::int64_t>(r.m);
  const auto n = static_cast<std::int64_t>(r.n);
  const std::int64_t predicted_twice_genus = 2 - q * (1 + m + n - m * n);
  check("genus", 2 * r.surface->genus == predicted_twice_genus,
        "traced genus " + std::to_string(r.surface->genus));

  detail::check_deadline(opts);
  if (mode != SearchMode::Exhaustive) r.restricted = restricted_search(*r.embedding, r.m, r.n, opts);
  if (mode != SearchMode::Restricted) r.exhaustive = exhaustive_search(*r.embedding, r.m, r.n, opts);
  if (r.restricted && r.exhaustive) {
    r.modes_agree = same_group(*r.restricted, *r.exhaustive);
    check("modes-agree", *r.modes_agree);
  }
  const AutReport& aut = *r.aut();
  const std::size_t aut0 = aut.aut0_plus + aut.aut0_minus;
  check("aut0-bound", aut0 <= r.m * r.n, "|Aut0| = " + std::to_string(aut0));
  check("no-reversing", aut.aut0_minus == 0);
  check("face-lengths-preserved", aut.face_lengths_preserved);
  if (r.rank_one && ell == 0) {
    check("aut0-order", aut.aut0_plus == r.m * r.n, "|Aut0+| = " + std::to_string(aut.aut0_plus));
    check("aut0-cyclic", aut.cyclic);
    check("aut-total", aut.total == std::uint64_t{r.q} * (r.q - 1) / 2, "|Aut| = " + std::to_string(aut.total));
  }
  return r;
}

}  // namespace heffter
