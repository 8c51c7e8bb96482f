#pragma once

#include <vector>

#include "heffter/array.hpp"

namespace fixtures {

inline heffter::PartiallyFilledArray from_rows(const heffter::Field& f,
                                               const std::vector<std::vector<int>>& rows) {
  heffter::PartiallyFilledArray a(f, rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      if (rows[i][j] >= 0) a.set(i, j, heffter::Element{static_cast<std::uint32_t>(rows[i][j])});
    }
  }
  return a;
}

// The H(3,5) over Z_31 with rows X, 5X, 25X for X = (1, 2, 4, 8, 16).
inline heffter::PartiallyFilledArray worked_example() {
  return from_rows(heffter::make_field(31, 1), {{1, 2, 4, 8, 16}, {5, 10, 20, 9, 18}, {25, 19, 7, 14, 28}});
}

}  // namespace fixtures

#include "heffter/embedding.hpp"
#include "heffter/orderings.hpp"

namespace fixtures {

inline heffter::Embedding worked_embedding() {
  const auto a = worked_example();
  return heffter::build_rho0(a, heffter::natural_orderings(a, 0));
}

/// rho0 conjugated by the transposition (a b): a and b trade places in the
/// rotation cycle at 0, which stays a single cycle.
inline heffter::Embedding swap_in_rotation(const heffter::Embedding& emb, std::uint32_t a, std::uint32_t b) {
  auto swap = [&](std::uint32_t x) { return x == a ? b : x == b ? a : x; };
  std::vector<std::uint32_t> rho0(emb.q(), 0);
  for (std::uint32_t x = 1; x < emb.q(); ++x) rho0[swap(x)] = swap(emb.rho0_map()[x]);
  return heffter::Embedding::from_rotation(emb.field(), std::move(rho0));
}

/// K_3 on the sphere: rho0 = (1 2) over Z_3.
inline heffter::Embedding k3_sphere() {
  return heffter::Embedding::from_rotation(heffter::make_field(3, 1), {0, 2, 1});
}

}  // namespace fixtures
