#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "heffter/algebra.hpp"
#include "heffter/array.hpp"
#include "heffter/error.hpp"

namespace heffter {

/// Cyclic orderings of the rows and columns of an array, stored as successor
/// maps on entry values. Entry values must be pairwise distinct.
class OrderingPair {
 public:
  static constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

  /// Builds the successor maps from explicit cycles over a group of order q.
  /// Within each family every value may appear at most once.
  static OrderingPair from_cycles(std::uint32_t q, std::vector<std::vector<Element>> row_cycles,
                                  std::vector<std::vector<Element>> col_cycles) {
    OrderingPair pair;
    pair.row_cycles_ = std::move(row_cycles);
    pair.col_cycles_ = std::move(col_cycles);
    fill_maps(q, pair.row_cycles_, pair.row_next_, pair.row_prev_, "row");
    fill_maps(q, pair.col_cycles_, pair.col_next_, pair.col_prev_, "column");
    return pair;
  }

  const std::vector<std::vector<Element>>& row_cycles() const { return row_cycles_; }
  const std::vector<std::vector<Element>>& col_cycles() const { return col_cycles_; }

  bool in_rows(Element a) const { return a.value < row_next_.size() && row_next_[a.value] != kNone; }
  bool in_cols(Element a) const { return a.value < col_next_.size() && col_next_[a.value] != kNone; }

  Element omega_r(Element a) const { return lookup(row_next_, a, "row"); }
  Element omega_r_inverse(Element a) const { return lookup(row_prev_, a, "row"); }
  Element omega_c(Element a) const { return lookup(col_next_, a, "column"); }
  Element omega_c_inverse(Element a) const { return lookup(col_prev_, a, "column"); }

  std::size_t row_domain_size() const { return count(row_cycles_); }
  std::size_t col_domain_size() const { return count(col_cycles_); }

  /// Row and column orderings act on the same set of values.
  bool same_domain() const {
    if (row_next_.size() != col_next_.size()) return false;
    for (std::size_t v = 0; v < row_next_.size(); ++v) {
      if ((row_next_[v] == kNone) != (col_next_[v] == kNone)) return false;
    }
    return true;
  }

 private:
  static std::size_t count(const std::vector<std::vector<Element>>& cycles) {
    std::size_t n = 0;
    for (const auto& c : cycles) n += c.size();
    return n;
  }

  static void fill_maps(std::uint32_t q, const std::vector<std::vector<Element>>& cycles,
                        std::vector<std::uint32_t>& next, std::vector<std::uint32_t>& prev, const char* what) {
    next.assign(q, kNone);
    prev.assign(q, kNone);
    for (const auto& cycle : cycles) {
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        const auto v = cycle[i].value;
        if (v >= q) throw Error(ErrorCode::InvalidElement, std::string(what) + " entry outside the group");
        if (next[v] != kNone) {
          throw Error(ErrorCode::DomainMismatch,
                      "value " + std::to_string(v) + " appears twice among the " + what + " orderings");
        }
        next[v] = cycle[(i + 1) % cycle.size()].value;
      }
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        prev[next[cycle[i].value]] = cycle[i].value;
      }
    }
  }

  static Element lookup(const std::vector<std::uint32_t>& map, Element a, const char* what) {
    if (a.value >= map.size() || map[a.value] == kNone) {
      throw Error(ErrorCode::DomainMismatch, std::to_string(a.value) + " is not in the " + what + " ordering");
    }
    return Element{map[a.value]};
  }

  std::vector<std::vector<Element>> row_cycles_;
  std::vector<std::vector<Element>> col_cycles_;
  std::vector<std::uint32_t> row_next_, row_prev_;
  std::vector<std::uint32_t> col_next_, col_prev_;
};

/// Orderings of an array's rows and columns given as explicit cycles; each
/// cycle must be a rearrangement of the corresponding row or column.
inline OrderingPair orderings_for(const PartiallyFilledArray& a, std::vector<std::vector<Element>> row_cycles,
                                  std::vector<std::vector<Element>> col_cycles) {
  auto same_set = [](std::vector<Element> x, std::vector<Element> y) {
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    return x == y;
  };
  if (row_cycles.size() != a.rows() || col_cycles.size() != a.cols()) {
    throw Error(ErrorCode::DomainMismatch, "one cycle per row and per column is required");
  }
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (!same_set(row_cycles[i], a.row_entries(i))) {
      throw Error(ErrorCode::DomainMismatch, "row " + std::to_string(i + 1) + " ordering does not match the row");
    }
  }
  for (std::size_t j = 0; j < a.cols(); ++j) {
    if (!same_set(col_cycles[j], a.col_entries(j))) {
      throw Error(ErrorCode::DomainMismatch,
                  "column " + std::to_string(j + 1) + " ordering does not match the column");
    }
  }
  return OrderingPair::from_cycles(a.field().q(), std::move(row_cycles), std::move(col_cycles));
}

/// Columns top to bottom; the first m - ell rows left to right and the last
/// ell rows right to left.
inline OrderingPair natural_orderings(const PartiallyFilledArray& a, std::size_t ell = 0) {
  if (!a.is_totally_filled()) {
    throw Error(ErrorCode::NotTotallyFilled, "natural orderings need a totally filled array");
  }
  if (ell >= a.rows()) {
    throw Error(ErrorCode::BadParameters,
                "ell=" + std::to_string(ell) + " must be smaller than m=" + std::to_string(a.rows()));
  }
  std::vector<std::vector<Element>> rows;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto r = a.row_entries(i);
    if (i >= a.rows() - ell) std::reverse(r.begin(), r.end());
    rows.push_back(std::move(r));
  }
  std::vector<std::vector<Element>> cols;
  for (std::size_t j = 0; j < a.cols(); ++j) cols.push_back(a.col_entries(j));
  return OrderingPair::from_cycles(a.field().q(), std::move(rows), std::move(cols));
}

/// Partial sums of the sequence are pairwise distinct.
inline bool is_simple(const Field& field, std::span<const Element> sequence) {
  std::vector<bool> seen(field.q(), false);
  Element s = field.zero();
  for (auto x : sequence) {
    s = field.add(s, x);
    if (seen[s.value]) return false;
    seen[s.value] = true;
  }
  return true;
}

/// Every row read left to right and every column read top to bottom is simple.
inline bool check_globally_simple(const PartiallyFilledArray& a) {
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (!is_simple(a.field(), a.row_entries(i))) return false;
  }
  for (std::size_t j = 0; j < a.cols(); ++j) {
    if (!is_simple(a.field(), a.col_entries(j))) return false;
  }
  return true;
}

/// Both orderings of the pair are simple.
inline bool is_simple(const Field& field, const OrderingPair& pair) {
  for (const auto& c : pair.row_cycles()) {
    if (!is_simple(field, c)) return false;
  }
  for (const auto& c : pair.col_cycles()) {
    if (!is_simple(field, c)) return false;
  }
  return true;
}

/// omega_c after omega_r is a single cycle through every entry.
inline bool is_compatible(const OrderingPair& pair) {
  if (!pair.same_domain()) throw Error(ErrorCode::DomainMismatch, "row and column orderings cover different sets");
  const std::size_t size = pair.row_domain_size();
  if (size == 0) return false;
  const Element start = pair.row_cycles().front().front();
  Element x = start;
  std::size_t length = 0;
  do {
    x = pair.omega_c(pair.omega_r(x));
    ++length;
  } while (x != start && length <= size);
  return length == size;
}

/// "(a,b,c)(d,e)"; singleton cycles are kept so every value is visible.
inline std::string cycle_notation(const std::vector<std::vector<Element>>& cycles) {
  std::ostringstream os;
  for (const auto& c : cycles) {
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i].value;
    os << ')';
  }
  return os.str();
}

}  // namespace heffter
