#pragma once

// Translation-invariant rotation systems on K_q and their faces.
//
// The rotation at vertex x is rho_x(y) = x + rho0(y - x), so the whole
// embedding is determined by a permutation rho0 of the nonzero elements.
// Faces are traced with next(u, v) = (v, rho_v(u)); with this convention the
// face through (x, x + a), a in E(A), reads x, x + a, x + a + omega_c(a), ...

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <ostream>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "heffter/algebra.hpp"
#include "heffter/array.hpp"
#include "heffter/error.hpp"
#include "heffter/orderings.hpp"

namespace heffter {

class Embedding {
 public:
  /// rho0[a] is the image of a != 0; rho0[0] is ignored. rho0 must permute
  /// the nonzero elements but need not be a single cycle.
  static Embedding from_rotation(Field field, std::vector<std::uint32_t> rho0) {
    const std::uint32_t q = field.q();
    if (rho0.size() != q) throw Error(ErrorCode::NotBijection, "rotation must list an image for every element");
    rho0[0] = 0;
    std::vector<std::uint32_t> inverse(q, 0);
    std::vector<bool> hit(q, false);
    for (std::uint32_t a = 1; a < q; ++a) {
      const auto b = rho0[a];
      if (b == 0 || b >= q || hit[b]) {
        throw Error(ErrorCode::NotBijection, "rotation is not a permutation of the nonzero elements");
      }
      hit[b] = true;
      inverse[b] = a;
    }
    return Embedding(std::move(field), std::move(rho0), std::move(inverse));
  }

  const Field& field() const { return field_; }
  std::uint32_t q() const { return field_.q(); }

  Element rho0(Element a) const { return Element{rho0_[a.value]}; }
  Element rho0_inverse(Element a) const { return Element{rho0_inverse_[a.value]}; }
  const std::vector<std::uint32_t>& rho0_map() const { return rho0_; }

  /// rho_x(y) for y != x.
  Element rotate(Element x, Element y) const { return field_.add(x, rho0(field_.sub(y, x))); }
  Element rotate_inverse(Element x, Element y) const { return field_.add(x, rho0_inverse(field_.sub(y, x))); }

  /// Cycles of rho0, each starting at its smallest element, ordered by start.
  std::vector<std::vector<Element>> rho0_cycles() const {
    std::vector<std::vector<Element>> out;
    std::vector<bool> seen(q(), false);
    for (std::uint32_t a = 1; a < q(); ++a) {
      if (seen[a]) continue;
      std::vector<Element> cycle;
      for (std::uint32_t x = a; !seen[x]; x = rho0_[x]) {
        seen[x] = true;
        cycle.push_back(Element{x});
      }
      out.push_back(std::move(cycle));
    }
    return out;
  }

  bool rho0_is_single_cycle() const { return rho0_cycles().size() == 1; }

 private:
  Embedding(Field field, std::vector<std::uint32_t> rho0, std::vector<std::uint32_t> inverse)
      : field_(std::move(field)), rho0_(std::move(rho0)), rho0_inverse_(std::move(inverse)) {}

  Field field_;
  std::vector<std::uint32_t> rho0_;
  std::vector<std::uint32_t> rho0_inverse_;
};

/// rho0(a) = -omega_r(a) for a in E(A) and rho0(a) = omega_c(-a) for a in -E(A).
inline Embedding build_rho0(const PartiallyFilledArray& a, const OrderingPair& pair) {
  const Field& f = a.field();
  std::vector<std::uint32_t> rho0(f.q(), 0);
  std::vector<bool> assigned(f.q(), false);
  for (auto x : a.entries()) {
    const Element minus_x = f.neg(x);
    if (x.value == 0 || assigned[x.value] || assigned[minus_x.value] || x == minus_x) {
      throw Error(ErrorCode::IncompleteCover, "+-E(A) is not a partition of the nonzero elements");
    }
    assigned[x.value] = assigned[minus_x.value] = true;
    rho0[x.value] = f.neg(pair.omega_r(x)).value;
    rho0[minus_x.value] = pair.omega_c(x).value;
  }
  for (std::uint32_t g = 1; g < f.q(); ++g) {
    if (!assigned[g]) throw Error(ErrorCode::IncompleteCover, std::to_string(g) + " is not in +-E(A)");
  }
  auto emb = Embedding::from_rotation(f, std::move(rho0));
  if (!emb.rho0_is_single_cycle()) {
    throw Error(ErrorCode::NotCompatible, "rho0 is not a single cycle of length q-1");
  }
  return emb;
}

/// Every local rotation rho_x is one cycle through all q - 1 neighbours.
inline bool validate_rotation(const Embedding& emb) {
  const std::uint32_t q = emb.q();
  if (q < 2) return false;
  std::vector<std::uint32_t> stamp(q, 0);
  for (std::uint32_t xv = 0; xv < q; ++xv) {
    const Element x{xv};
    const Element start = emb.field().add(x, emb.field().one());
    Element y = start;
    std::uint32_t length = 0;
    do {
      if (y == x || stamp[y.value] == xv + 1) return false;
      stamp[y.value] = xv + 1;
      y = emb.rotate(x, y);
      ++length;
    } while (y != start);
    if (length != q - 1) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Faces

struct Face {
  std::vector<Element> vertices;

  /// Lexicographically least rotation, which starts at the smallest vertex;
  /// direction is kept.
  static Face canonical(std::vector<Element> cycle) {
    std::vector<Element> best = cycle;
    for (std::size_t s = 1; s < cycle.size(); ++s) {
      std::rotate(cycle.begin(), cycle.begin() + 1, cycle.end());
      if (cycle < best) best = cycle;
    }
    return Face{std::move(best)};
  }

  std::size_t length() const { return vertices.size(); }

  bool is_simple() const {
    auto sorted = vertices;
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  }

  bool contains_dart(Element u, Element v) const {
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      if (vertices[i] == u && vertices[(i + 1) % vertices.size()] == v) return true;
    }
    return false;
  }

  friend auto operator<=>(const Face&, const Face&) = default;
};

/// The faces together with the face index of every dart (u, v), stored at
/// u * q + v.
struct FaceSet {
  std::uint32_t q = 0;
  std::vector<Face> faces;
  std::vector<std::uint32_t> dart_face;

  std::uint32_t face_of(Element u, Element v) const { return dart_face[std::size_t{u.value} * q + v.value]; }
};

inline FaceSet trace_face_set(const Embedding& emb) {
  constexpr auto kUnset = std::numeric_limits<std::uint32_t>::max();
  const std::uint32_t q = emb.q();
  std::vector<std::uint32_t> dart_face(std::size_t{q} * q, kUnset);
  std::vector<std::vector<Element>> raw;
  for (std::uint32_t u0 = 0; u0 < q; ++u0) {
    for (std::uint32_t v0 = 0; v0 < q; ++v0) {
      if (u0 == v0 || dart_face[std::size_t{u0} * q + v0] != kUnset) continue;
      const auto id = static_cast<std::uint32_t>(raw.size());
      std::vector<Element> cycle;
      Element u{u0};
      Element v{v0};
      do {
        dart_face[std::size_t{u.value} * q + v.value] = id;
        cycle.push_back(u);
        const Element w = emb.rotate(v, u);
        u = v;
        v = w;
      } while (u.value != u0 || v.value != v0);
      raw.push_back(std::move(cycle));
    }
  }

  std::vector<Face> faces;
  faces.reserve(raw.size());
  for (auto& c : raw) faces.push_back(Face::canonical(std::move(c)));
  std::vector<std::uint32_t> order(faces.size());
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return faces[a] < faces[b]; });
  std::vector<std::uint32_t> renumber(faces.size());
  FaceSet out;
  out.q = q;
  for (std::uint32_t i = 0; i < order.size(); ++i) {
    renumber[order[i]] = i;
    out.faces.push_back(std::move(faces[order[i]]));
  }
  for (auto& id : dart_face) {
    if (id != kUnset) id = renumber[id];
  }
  out.dart_face = std::move(dart_face);
  return out;
}

/// All directed faces in canonical sorted order.
inline std::vector<Face> trace_faces(const Embedding& emb) { return trace_face_set(emb).faces; }

namespace detail {

inline Face closed_form_face_of_dart(const Field& f, const OrderingPair& pair, Element x, Element a) {
  if (a.value == 0) throw Error(ErrorCode::ZeroDifference, "a must be nonzero");
  std::vector<Element> cycle;
  if (pair.in_cols(a)) {
    // x, x+a, x+a+omega_c(a), ... following a's column.
    Element term = a;
    Element vertex = x;
    do {
      cycle.push_back(vertex);
      vertex = f.add(vertex, term);
      term = pair.omega_c(term);
    } while (term != a);
    return Face::canonical(std::move(cycle));
  }
  const Element b = f.neg(a);
  if (!pair.in_rows(b)) throw Error(ErrorCode::IncompleteCover, std::to_string(a.value) + " is not in +-E(A)");
  // x, then x + sum_{i=1}^{t} omega_r^{-i}(-a) for t = h-1 down to 1.
  std::vector<Element> partial;
  Element s = f.zero();
  for (Element t = pair.omega_r_inverse(b); t != b; t = pair.omega_r_inverse(t)) {
    s = f.add(s, t);
    partial.push_back(f.add(x, s));
  }
  cycle.push_back(x);
  cycle.insert(cycle.end(), partial.rbegin(), partial.rend());
  return Face::canonical(std::move(cycle));
}

}  // namespace detail

/// The faces through (x, x+a) and through (x+a, x), computed from the
/// closed-form row and column developments rather than by tracing.
inline std::pair<Face, Face> closed_form_faces(const PartiallyFilledArray& a, const OrderingPair& pair, Element x,
                                               Element d) {
  const Field& f = a.field();
  if (d.value == 0) throw Error(ErrorCode::ZeroDifference, "edge difference must be nonzero");
  return {detail::closed_form_face_of_dart(f, pair, x, d),
          detail::closed_form_face_of_dart(f, pair, f.add(x, d), f.neg(d))};
}

// ---------------------------------------------------------------------------
// Biembedding and surface checks

struct BiembeddingReport {
  bool ok = false;
  bool lengths_ok = false;     // every face has length m or n
  bool edge_classes_ok = false;  // each edge on one m-face and one n-face
  bool faces_simple = false;
  bool two_colorable = false;
  std::size_t faces_of_m = 0;
  std::size_t faces_of_n = 0;
  std::vector<std::string> failures;
};

inline BiembeddingReport verify_biembedding(const FaceSet& fs, std::size_t m, std::size_t n) {
  BiembeddingReport r;
  const std::uint32_t q = fs.q;

  r.lengths_ok = true;
  r.faces_simple = true;
  for (const auto& face : fs.faces) {
    if (face.length() == m) ++r.faces_of_m;
    if (face.length() == n && n != m) ++r.faces_of_n;
    if (face.length() != m && face.length() != n) r.lengths_ok = false;
    if (!face.is_simple()) r.faces_simple = false;
  }
  if (!r.lengths_ok) r.failures.push_back("face of length other than m or n");
  if (!r.faces_simple) r.failures.push_back("face boundary repeats a vertex");

  r.edge_classes_ok = true;
  std::vector<std::vector<std::uint32_t>> adjacent(fs.faces.size());
  bool self_adjacent = false;
  for (std::uint32_t u = 0; u < q && r.edge_classes_ok; ++u) {
    for (std::uint32_t v = u + 1; v < q; ++v) {
      const auto f1 = fs.face_of(Element{u}, Element{v});
      const auto f2 = fs.face_of(Element{v}, Element{u});
      auto l1 = fs.faces[f1].length();
      auto l2 = fs.faces[f2].length();
      if (l1 > l2) std::swap(l1, l2);
      if (f1 == f2 || l1 != std::min(m, n) || l2 != std::max(m, n)) {
        r.edge_classes_ok = false;
        r.failures.push_back("edge {" + std::to_string(u) + "," + std::to_string(v) +
                             "} is not on one face of each length");
        break;
      }
    }
  }
  for (std::uint32_t u = 0; u < q; ++u) {
    for (std::uint32_t v = u + 1; v < q; ++v) {
      const auto f1 = fs.face_of(Element{u}, Element{v});
      const auto f2 = fs.face_of(Element{v}, Element{u});
      if (f1 == f2) {
        self_adjacent = true;
      } else {
        adjacent[f1].push_back(f2);
        adjacent[f2].push_back(f1);
      }
    }
  }

  // Proper 2-colouring of the face adjacency graph.
  r.two_colorable = !self_adjacent;
  std::vector<int> colour(fs.faces.size(), -1);
  for (std::size_t s = 0; s < fs.faces.size() && r.two_colorable; ++s) {
    if (colour[s] != -1) continue;
    colour[s] = 0;
    std::queue<std::size_t> pending;
    pending.push(s);
    while (!pending.empty() && r.two_colorable) {
      const auto f = pending.front();
      pending.pop();
      for (auto g : adjacent[f]) {
        if (colour[g] == -1) {
          colour[g] = 1 - colour[f];
          pending.push(g);
        } else if (colour[g] == colour[f]) {
          r.two_colorable = false;
          break;
        }
      }
    }
  }
  if (!r.two_colorable) r.failures.push_back("faces are not 2-colourable");

  r.ok = r.lengths_ok && r.edge_classes_ok && r.faces_simple && r.two_colorable;
  return r;
}

inline BiembeddingReport verify_biembedding(const Embedding& emb, std::size_t m, std::size_t n) {
  return verify_biembedding(trace_face_set(emb), m, n);
}

struct SurfaceReport {
  std::int64_t vertices = 0;
  std::int64_t edges = 0;
  std::int64_t faces = 0;
  std::int64_t euler_characteristic = 0;
  std::int64_t genus = 0;
  std::map<std::size_t, std::size_t> census;  // face length -> count
};

inline SurfaceReport surface_report(std::uint32_t q, const std::vector<Face>& faces) {
  SurfaceReport r;
  r.vertices = q;
  r.edges = std::int64_t{q} * (q - 1) / 2;
  r.faces = static_cast<std::int64_t>(faces.size());
  r.euler_characteristic = r.vertices - r.edges + r.faces;
  const std::int64_t twice_genus = 2 - r.euler_characteristic;
  if (twice_genus < 0 || twice_genus % 2 != 0) {
    throw Error(ErrorCode::NonIntegerGenus, "Euler characteristic " + std::to_string(r.euler_characteristic) +
                                                " does not give an orientable genus");
  }
  r.genus = twice_genus / 2;
  for (const auto& f : faces) ++r.census[f.length()];
  return r;
}

inline SurfaceReport surface_report(const Embedding& emb) { return surface_report(emb.q(), trace_faces(emb)); }

/// One face per line, vertices separated by spaces.
inline void write_faces(std::ostream& os, const std::vector<Face>& faces) {
  for (const auto& f : faces) {
    for (std::size_t i = 0; i < f.vertices.size(); ++i) os << (i ? " " : "") << f.vertices[i].value;
    os << '\n';
  }
}

}  // namespace heffter
