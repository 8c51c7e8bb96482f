#pragma once

// Automorphisms of translation-invariant embeddings of K_q.
//
// A vertex bijection sigma preserves orientation when sigma(rho_x(y)) =
// rho'_{sigma x}(sigma y) on every dart, and reverses it when the right-hand
// side uses the inverse rotation instead. Two searches are provided:
//
//  * restricted_search tries the 2(q-1) maps fixing 0 that act on the
//    rotation cycle at 0 as a rotation or a reflection of that cycle;
//  * exhaustive_search pins the image of one dart and an orientation, derives
//    the whole map by walking rotations, and keeps every candidate that
//    classifies. It makes no use of the dihedral restriction and serves as the
//    independent check on the first.

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "heffter/algebra.hpp"
#include "heffter/array.hpp"
#include "heffter/embedding.hpp"
#include "heffter/error.hpp"

namespace heffter {

/// A bijection of the vertex set {0, ..., q-1}: image[x] = sigma(x).
using VertexMap = std::vector<std::uint32_t>;

enum class Orientation { Preserving, Reversing };

inline std::string_view to_string(Orientation o) {
  return o == Orientation::Preserving ? "preserving" : "reversing";
}

struct EmbAut {
  VertexMap perm;
  Orientation orientation;
};

inline VertexMap identity_map(std::uint32_t q) {
  VertexMap id(q);
  std::iota(id.begin(), id.end(), 0u);
  return id;
}

/// (a o b)(x) = a(b(x))
inline VertexMap compose(const VertexMap& a, const VertexMap& b) {
  VertexMap out(b.size());
  for (std::size_t x = 0; x < b.size(); ++x) out[x] = a[b[x]];
  return out;
}

inline bool is_bijection(const VertexMap& sigma, std::uint32_t q) {
  if (sigma.size() != q) return false;
  std::vector<bool> hit(q, false);
  for (auto y : sigma) {
    if (y >= q || hit[y]) return false;
    hit[y] = true;
  }
  return true;
}

/// Order of the permutation: lcm of its cycle lengths.
inline std::uint64_t permutation_order(const VertexMap& sigma) {
  std::vector<bool> seen(sigma.size(), false);
  std::uint64_t order = 1;
  for (std::size_t s = 0; s < sigma.size(); ++s) {
    if (seen[s]) continue;
    std::uint64_t len = 0;
    for (auto x = s; !seen[x]; x = sigma[x]) {
      seen[x] = true;
      ++len;
    }
    order = std::lcm(order, len);
  }
  return order;
}

/// Cycle notation without fixed points, "()" for the identity.
inline std::string cycle_notation(const VertexMap& sigma) {
  std::ostringstream os;
  std::vector<bool> seen(sigma.size(), false);
  bool any = false;
  for (std::size_t s = 0; s < sigma.size(); ++s) {
    if (seen[s] || sigma[s] == s) continue;
    any = true;
    os << '(';
    bool first = true;
    for (auto x = s; !seen[x]; x = sigma[x]) {
      seen[x] = true;
      os << (first ? "" : ",") << x;
      first = false;
    }
    os << ')';
  }
  return any ? os.str() : "()";
}

/// Preserving, Reversing, or nothing when sigma is not an isomorphism from
/// `from` to `to`. A map that satisfies one law on some darts and the other
/// law on the rest is not an isomorphism.
inline std::optional<Orientation> classify_isomorphism(const Embedding& from, const Embedding& to,
                                                       const VertexMap& sigma) {
  const std::uint32_t q = from.q();
  if (to.q() != q || !is_bijection(sigma, q)) throw Error(ErrorCode::NotBijection, "sigma is not a vertex bijection");
  auto holds = [&](bool inverse) {
    for (std::uint32_t x = 0; x < q; ++x) {
      const Element sx{sigma[x]};
      for (std::uint32_t y = 0; y < q; ++y) {
        if (x == y) continue;
        const Element lhs{sigma[from.rotate(Element{x}, Element{y}).value]};
        const Element sy{sigma[y]};
        const Element rhs = inverse ? to.rotate_inverse(sx, sy) : to.rotate(sx, sy);
        if (lhs != rhs) return false;
      }
    }
    return true;
  };
  if (holds(false)) return Orientation::Preserving;
  if (holds(true)) return Orientation::Reversing;
  return std::nullopt;
}

inline std::optional<Orientation> classify_automorphism(const Embedding& emb, const VertexMap& sigma) {
  return classify_isomorphism(emb, emb, sigma);
}

// ---------------------------------------------------------------------------
// Group structure

struct GroupCertificate {
  std::size_t order = 0;
  bool cyclic = false;
  VertexMap generator;  // empty unless cyclic
  std::uint64_t generator_order = 0;
  std::map<std::uint64_t, std::size_t> order_profile;  // element order -> count
};

/// Checks closure and identity, then looks for an element whose order equals
/// the group order. The generator reported is the least such element.
inline GroupCertificate group_structure(std::span<const VertexMap> perms) {
  if (perms.empty()) throw Error(ErrorCode::NotClosed, "empty set of permutations");
  const auto q = static_cast<std::uint32_t>(perms.front().size());
  std::set<VertexMap> elements(perms.begin(), perms.end());
  for (const auto& p : elements) {
    if (!is_bijection(p, q)) throw Error(ErrorCode::NotBijection, "group element is not a bijection");
  }
  if (!elements.count(identity_map(q))) throw Error(ErrorCode::NotClosed, "identity missing");
  for (const auto& a : elements) {
    for (const auto& b : elements) {
      if (!elements.count(compose(a, b))) throw Error(ErrorCode::NotClosed, "set is not closed under composition");
    }
  }
  GroupCertificate cert;
  cert.order = elements.size();
  for (const auto& p : elements) {
    const auto ord = permutation_order(p);
    ++cert.order_profile[ord];
    if (!cert.cyclic && ord == cert.order) {
      cert.cyclic = true;
      cert.generator = p;
      cert.generator_order = ord;
    }
  }
  return cert;
}

inline GroupCertificate group_structure(const std::vector<EmbAut>& auts) {
  std::vector<VertexMap> perms;
  perms.reserve(auts.size());
  for (const auto& a : auts) perms.push_back(a.perm);
  return group_structure(std::span<const VertexMap>(perms));
}

// ---------------------------------------------------------------------------
// Searches

enum class SearchMethod { Restricted, Exhaustive };

inline std::string_view to_string(SearchMethod m) {
  return m == SearchMethod::Restricted ? "restricted" : "exhaustive";
}

struct SearchOptions {
  std::optional<std::chrono::steady_clock::time_point> deadline;
  std::uint32_t exhaustive_limit = 71;
  bool force = false;
};

struct AutReport {
  std::uint32_t q = 0;
  std::size_t m = 0;
  std::size_t n = 0;
  std::size_t aut0_plus = 0;
  std::size_t aut0_minus = 0;
  std::uint64_t total = 0;
  bool cyclic = false;  // refers to Aut0+
  VertexMap generator;
  std::uint64_t generator_order = 0;
  SearchMethod method = SearchMethod::Restricted;
  bool face_lengths_preserved = true;
  std::vector<EmbAut> stabilizer;  // Aut0, sorted by permutation
};

namespace detail {

inline void check_deadline(const SearchOptions& opts) {
  if (opts.deadline && std::chrono::steady_clock::now() > *opts.deadline) {
    throw Error(ErrorCode::BudgetExceeded, "work budget exhausted");
  }
}

// Every automorphism in the stabilizer sends each face to a face of equal length.
inline bool preserves_face_lengths(const FaceSet& fs, const std::vector<EmbAut>& auts) {
  for (const auto& aut : auts) {
    for (const auto& face : fs.faces) {
      const auto& v = face.vertices;
      Element a{aut.perm[v[0].value]};
      Element b{aut.perm[v[1].value]};
      if (aut.orientation == Orientation::Reversing) std::swap(a, b);
      const auto& image = fs.faces[fs.face_of(a, b)];
      if (image.length() != face.length()) return false;
    }
  }
  return true;
}

inline void finish_report(AutReport& report, std::map<VertexMap, Orientation> found) {
  for (auto& [perm, o] : found) {
    if (o == Orientation::Preserving) {
      ++report.aut0_plus;
    } else {
      ++report.aut0_minus;
    }
    report.stabilizer.push_back({perm, o});
  }
  std::vector<VertexMap> plus;
  for (const auto& a : report.stabilizer) {
    if (a.orientation == Orientation::Preserving) plus.push_back(a.perm);
  }
  if (!plus.empty()) {
    auto cert = group_structure(std::span<const VertexMap>(plus));
    report.cyclic = cert.cyclic;
    report.generator = cert.generator;
    report.generator_order = cert.generator_order;
  }
}

}  // namespace detail

/// Searches the rotations and reflections of the rotation cycle at 0.
/// Requires rho0 to be a single cycle.
inline AutReport restricted_search(const Embedding& emb, std::size_t m, std::size_t n,
                                   const SearchOptions& opts = {}) {
  const std::uint32_t q = emb.q();
  const auto cycles = emb.rho0_cycles();
  if (cycles.size() != 1) throw Error(ErrorCode::NotCompatible, "rho0 is not a single cycle");
  const auto& xs = cycles.front();
  const std::size_t len = xs.size();

  std::map<VertexMap, Orientation> found;
  for (int reflect = 0; reflect < 2; ++reflect) {
    for (std::size_t shift = 0; shift < len; ++shift) {
      detail::check_deadline(opts);
      VertexMap sigma(q, 0);
      for (std::size_t j = 0; j < len; ++j) {
        const std::size_t target = reflect ? (shift + len - j) % len : (j + shift) % len;
        sigma[xs[j].value] = xs[target].value;
      }
      if (found.count(sigma)) continue;
      if (auto o = classify_automorphism(emb, sigma)) found.emplace(std::move(sigma), *o);
    }
  }

  AutReport report;
  report.q = q;
  report.m = m;
  report.n = n;
  report.method = SearchMethod::Restricted;
  detail::finish_report(report, std::move(found));
  report.total = std::uint64_t{q} * report.stabilizer.size();
  report.face_lengths_preserved = detail::preserves_face_lengths(trace_face_set(emb), report.stabilizer);
  return report;
}

/// Tries every image (u, w) of the dart (0, 1) with both orientations,
/// propagating the map through the rotations. Counts the whole group
/// directly rather than through the translation subgroup.
inline AutReport exhaustive_search(const Embedding& emb, std::size_t m = 0, std::size_t n = 0,
                                   const SearchOptions& opts = {}) {
  const std::uint32_t q = emb.q();
  if (q > opts.exhaustive_limit && !opts.force) {
    throw Error(ErrorCode::TooLarge, "exhaustive search refused for q=" + std::to_string(q) + " > " +
                                         std::to_string(opts.exhaustive_limit));
  }
  constexpr auto kUnset = std::numeric_limits<std::uint32_t>::max();

  std::set<VertexMap> all;
  std::map<VertexMap, Orientation> stabilizer;
  std::vector<std::uint8_t> walked(q);
  for (std::uint32_t u = 0; u < q; ++u) {
    detail::check_deadline(opts);
    for (std::uint32_t w = 0; w < q; ++w) {
      if (w == u) continue;
      for (auto want : {Orientation::Preserving, Orientation::Reversing}) {
        VertexMap sigma(q, kUnset);
        std::vector<std::uint32_t> known;
        bool consistent = true;
        auto assign = [&](Element x, Element image) {
          if (sigma[x.value] == kUnset) {
            sigma[x.value] = image.value;
            known.push_back(x.value);
          } else if (sigma[x.value] != image.value) {
            consistent = false;
          }
        };
        assign(Element{0}, Element{u});
        assign(Element{1}, Element{w});
        // Walk the rotation at each known vertex starting from a known neighbour.
        for (std::size_t k = 0; k < known.size() && consistent && known.size() < q; ++k) {
          const Element x{known[k]};
          std::fill(walked.begin(), walked.end(), 0);
          for (std::size_t t = 0; t < known.size() && consistent && known.size() < q; ++t) {
            const Element y0{known[t]};
            if (y0 == x || walked[y0.value]) continue;
            Element y = y0;
            Element image{sigma[y0.value]};
            do {
              walked[y.value] = 1;
              y = emb.rotate(x, y);
              image = want == Orientation::Preserving ? emb.rotate(Element{sigma[x.value]}, image)
                                                      : emb.rotate_inverse(Element{sigma[x.value]}, image);
              assign(y, image);
            } while (y != y0 && consistent);
          }
        }
        if (!consistent || known.size() != q || !is_bijection(sigma, q)) continue;
        if (all.count(sigma)) continue;
        const auto o = classify_automorphism(emb, sigma);
        if (!o) continue;
        if (sigma[0] == 0) stabilizer.emplace(sigma, *o);
        all.insert(std::move(sigma));
      }
    }
  }

  AutReport report;
  report.q = q;
  report.m = m;
  report.n = n;
  report.method = SearchMethod::Exhaustive;
  detail::finish_report(report, std::move(stabilizer));
  report.total = all.size();
  report.face_lengths_preserved = detail::preserves_face_lengths(trace_face_set(emb), report.stabilizer);
  return report;
}

/// Multiplication by each entry of a rank-one array; every map must be an
/// orientation-preserving automorphism and together they must form a group
/// of order |E(A)|.
inline std::vector<EmbAut> multiplicative_auts(const Embedding& emb, const PartiallyFilledArray& a) {
  const Field& f = a.field();
  std::vector<EmbAut> out;
  for (auto eta : a.entries()) {
    VertexMap sigma(f.q());
    for (std::uint32_t x = 0; x < f.q(); ++x) sigma[x] = f.mul(eta, Element{x}).value;
    const auto o = classify_automorphism(emb, sigma);
    if (o != Orientation::Preserving) {
      throw Error(ErrorCode::VerificationFailed,
                  "multiplication by " + std::to_string(eta.value) + " is not an automorphism");
    }
    out.push_back({std::move(sigma), Orientation::Preserving});
  }
  const auto cert = group_structure(out);
  if (cert.order != a.entries().size()) {
    throw Error(ErrorCode::VerificationFailed, "multiplicative maps do not form a group of order |E(A)|");
  }
  return out;
}

/// The full group as tau_g o sigma for g in G and sigma in the stabilizer.
inline std::vector<VertexMap> expand_automorphisms(const Embedding& emb, const AutReport& report) {
  const Field& f = emb.field();
  std::vector<VertexMap> out;
  for (std::uint32_t g = 0; g < f.q(); ++g) {
    for (const auto& s : report.stabilizer) {
      VertexMap sigma(f.q());
      for (std::uint32_t x = 0; x < f.q(); ++x) sigma[x] = f.add(Element{s.perm[x]}, Element{g}).value;
      out.push_back(std::move(sigma));
    }
  }
  return out;
}

}  // namespace heffter
