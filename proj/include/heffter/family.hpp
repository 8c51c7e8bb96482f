#pragma once

// Parameter sets (m, n, q = 2mn + 1) for the rank-one construction.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "heffter/algebra.hpp"
#include "heffter/array.hpp"
#include "heffter/error.hpp"

namespace heffter {

struct Instance {
  std::size_t m = 0;
  std::size_t n = 0;
  std::uint32_t q = 0;
  std::uint32_t p = 0;
  std::uint32_t e = 0;

  friend bool operator==(const Instance&, const Instance&) = default;
};

/// All admissible (m, n) for one q, ordered by m. Both orientations appear.
inline std::vector<Instance> admissible_pairs(std::uint64_t q) {
  std::vector<Instance> out;
  const auto pp = prime_power(q);
  if (!pp || q % 2 == 0) return out;
  const std::uint64_t mn = (q - 1) / 2;
  for (std::uint64_t m = 3; m <= mn / 3; ++m) {
    if (mn % m != 0) continue;
    const std::uint64_t n = mn / m;
    if (!admissible_dimensions(m, n)) continue;
    out.push_back({m, n, static_cast<std::uint32_t>(q), pp->first, pp->second});
  }
  return out;
}

/// Every admissible instance with q <= qmax, ordered by q then m.
inline std::vector<Instance> admissible_instances(std::uint64_t qmax) {
  std::vector<Instance> out;
  for (std::uint64_t q = 3; q <= qmax; q += 2) {
    auto pairs = admissible_pairs(q);
    out.insert(out.end(), pairs.begin(), pairs.end());
  }
  return out;
}

/// Resolves user parameters: m and n fix q; q alone picks the admissible pair
/// with the smallest m < n; q with one of m, n fixes the other.
inline Instance resolve_instance(std::optional<std::uint64_t> m, std::optional<std::uint64_t> n,
                                 std::optional<std::uint64_t> q) {
  if (!m && !n && !q) throw Error(ErrorCode::BadParameters, "give --m and --n, or --q");
  if (q && (m || n) && !(m && n)) {
    if (*q < 3 || (*q - 1) % 2 != 0) throw Error(ErrorCode::BadParameters, "q must be odd");
    const std::uint64_t mn = (*q - 1) / 2;
    const std::uint64_t known = m ? *m : *n;
    if (known == 0 || mn % known != 0) {
      throw Error(ErrorCode::BadParameters, std::to_string(known) + " does not divide (q-1)/2");
    }
    (m ? n : m) = mn / known;
  }
  if (m && n) {
    if (!admissible_dimensions(*m, *n)) {
      throw Error(ErrorCode::BadParameters, "m=" + std::to_string(*m) + ", n=" + std::to_string(*n) +
                                                " must be odd, coprime and at least 3");
    }
    const std::uint64_t derived = 2 * *m * *n + 1;
    if (q && *q != derived) {
      throw Error(ErrorCode::BadParameters, "q=" + std::to_string(*q) + " but 2mn+1=" + std::to_string(derived));
    }
    const auto pp = prime_power(derived);
    if (!pp) throw Error(ErrorCode::BadParameters, "2mn+1=" + std::to_string(derived) + " is not a prime power");
    return {*m, *n, static_cast<std::uint32_t>(derived), pp->first, pp->second};
  }
  for (const auto& inst : admissible_pairs(*q)) {
    if (inst.m < inst.n) return inst;
  }
  throw Error(ErrorCode::BadParameters, "no admissible (m, n) for q=" + std::to_string(*q));
}

struct RankOneSetup {
  Field field;
  Element xi;
  Element eps;
  PartiallyFilledArray array;
};

/// The rank-one array for an instance; xi and eps default to the smallest
/// elements of order n and m.
inline RankOneSetup build_instance(const Instance& inst, std::optional<std::uint64_t> xi = std::nullopt,
                                   std::optional<std::uint64_t> eps = std::nullopt) {
  Field field = make_field(inst.p, inst.e);
  const Element x = xi ? field.element(*xi) : field.find_element_of_order(inst.n);
  const Element y = eps ? field.element(*eps) : field.find_element_of_order(inst.m);
  auto array = build_rank_one(field, inst.m, inst.n, x, y);
  return {std::move(field), x, y, std::move(array)};
}

}  // namespace heffter
