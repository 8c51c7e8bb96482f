#pragma once

// Partially filled arrays over the additive group of a finite field, the
// Heffter and quasi-Heffter validators, and the rank-one construction
// a(i,j) = eps^i * xi^j (zero-based indices).

#include <cstddef>
#include <cstdint>
#include <istream>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "heffter/algebra.hpp"
#include "heffter/error.hpp"

namespace heffter {

struct Cell {
  std::size_t row = 0;
  std::size_t col = 0;

  friend constexpr auto operator<=>(const Cell&, const Cell&) = default;
};

class PartiallyFilledArray {
 public:
  PartiallyFilledArray(Field field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), cells_(rows * cols) {
    if (rows == 0 || cols == 0) throw Error(ErrorCode::BadParameters, "array must be non-empty");
  }

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const std::optional<Element>& at(std::size_t i, std::size_t j) const { return cells_[i * cols_ + j]; }

  void set(std::size_t i, std::size_t j, std::optional<Element> value) {
    if (value && !field_.contains(value->value)) {
      throw Error(ErrorCode::InvalidElement, "cell value outside the group");
    }
    cells_[i * cols_ + j] = value;
  }

  /// Value of a filled cell; throws NotTotallyFilled for an empty one.
  Element value(std::size_t i, std::size_t j) const {
    const auto& c = at(i, j);
    if (!c) throw Error(ErrorCode::NotTotallyFilled, "cell is empty");
    return *c;
  }

  bool is_totally_filled() const {
    for (const auto& c : cells_) {
      if (!c) return false;
    }
    return true;
  }

  /// E(A): filled entries in row-major order.
  std::vector<Element> entries() const {
    std::vector<Element> out;
    for (const auto& c : cells_) {
      if (c) out.push_back(*c);
    }
    return out;
  }

  std::vector<Element> row_entries(std::size_t i) const {
    std::vector<Element> out;
    for (std::size_t j = 0; j < cols_; ++j) {
      if (at(i, j)) out.push_back(*at(i, j));
    }
    return out;
  }

  std::vector<Element> col_entries(std::size_t j) const {
    std::vector<Element> out;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (at(i, j)) out.push_back(*at(i, j));
    }
    return out;
  }

  PartiallyFilledArray transposed() const {
    PartiallyFilledArray t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) t.set(j, i, at(i, j));
    }
    return t;
  }

  friend bool operator==(const PartiallyFilledArray& a, const PartiallyFilledArray& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.cells_ == b.cells_;
  }

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::optional<Element>> cells_;
};

// ---------------------------------------------------------------------------
// Validation reports

struct Violation {
  enum class Kind { RowFill, ColumnFill, ZeroEntry, Uncovered, OverCovered, RowSum, ColumnSum };

  Kind kind;
  std::string detail;
  std::vector<Cell> witnesses;
};

inline std::string_view to_string(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::RowFill: return "row-fill";
    case Violation::Kind::ColumnFill: return "column-fill";
    case Violation::Kind::ZeroEntry: return "zero-entry";
    case Violation::Kind::Uncovered: return "uncovered";
    case Violation::Kind::OverCovered: return "over-covered";
    case Violation::Kind::RowSum: return "row-sum";
    case Violation::Kind::ColumnSum: return "column-sum";
  }
  return "unknown";
}

struct HeffterReport {
  bool ok = true;
  std::optional<std::size_t> h;  // filled cells per row, when constant
  std::optional<std::size_t> k;  // filled cells per column, when constant
  std::vector<Violation> violations;
  std::vector<Element> row_sums;  // filled only by validate_heffter
  std::vector<Element> col_sums;

  bool has(Violation::Kind kind) const {
    for (const auto& v : violations) {
      if (v.kind == kind) return true;
    }
    return false;
  }
};

/// Conditions (a1) and (b1): constant fill counts per row and per column, and
/// the multiset of +-entries covers every nonzero group element exactly once.
inline HeffterReport validate_quasi_heffter(const PartiallyFilledArray& a) {
  HeffterReport report;
  const Field& f = a.field();

  std::vector<std::size_t> row_fill(a.rows(), 0);
  std::vector<std::size_t> col_fill(a.cols(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a.at(i, j)) {
        ++row_fill[i];
        ++col_fill[j];
      }
    }
  }
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (row_fill[i] != row_fill[0]) {
      report.violations.push_back({Violation::Kind::RowFill,
                                   "row " + std::to_string(i + 1) + " has " + std::to_string(row_fill[i]) +
                                       " filled cells, row 1 has " + std::to_string(row_fill[0]),
                                   {}});
    }
  }
  for (std::size_t j = 0; j < a.cols(); ++j) {
    if (col_fill[j] != col_fill[0]) {
      report.violations.push_back({Violation::Kind::ColumnFill,
                                   "column " + std::to_string(j + 1) + " has " + std::to_string(col_fill[j]) +
                                       " filled cells, column 1 has " + std::to_string(col_fill[0]),
                                   {}});
    }
  }
  if (!report.has(Violation::Kind::RowFill)) report.h = row_fill[0];
  if (!report.has(Violation::Kind::ColumnFill)) report.k = col_fill[0];

  // cover[g] lists the cells whose entry x has g in {x, -x}.
  std::vector<std::vector<Cell>> cover(f.q());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const auto& c = a.at(i, j);
      if (!c) continue;
      if (c->value == 0) {
        report.violations.push_back({Violation::Kind::ZeroEntry,
                                     "cell (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") is 0",
                                     {{i, j}}});
        continue;
      }
      cover[c->value].push_back({i, j});
      cover[f.neg(*c).value].push_back({i, j});
    }
  }
  for (std::uint32_t g = 1; g < f.q(); ++g) {
    if (cover[g].empty()) {
      report.violations.push_back(
          {Violation::Kind::Uncovered, "neither " + std::to_string(g) + " nor its negative appears", {}});
    } else if (cover[g].size() > 1) {
      report.violations.push_back({Violation::Kind::OverCovered,
                                   std::to_string(g) + " is covered " + std::to_string(cover[g].size()) + " times",
                                   cover[g]});
    }
  }
  report.ok = report.violations.empty();
  return report;
}

/// Quasi-Heffter conditions plus zero row and column sums.
inline HeffterReport validate_heffter(const PartiallyFilledArray& a) {
  HeffterReport report = validate_quasi_heffter(a);
  const Field& f = a.field();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Element s = f.zero();
    for (auto x : a.row_entries(i)) s = f.add(s, x);
    report.row_sums.push_back(s);
    if (s != f.zero()) {
      std::vector<Cell> cells;
      for (std::size_t j = 0; j < a.cols(); ++j) {
        if (a.at(i, j)) cells.push_back({i, j});
      }
      report.violations.push_back({Violation::Kind::RowSum,
                                   "row " + std::to_string(i + 1) + " sums to " + std::to_string(s.value),
                                   std::move(cells)});
    }
  }
  for (std::size_t j = 0; j < a.cols(); ++j) {
    Element s = f.zero();
    for (auto x : a.col_entries(j)) s = f.add(s, x);
    report.col_sums.push_back(s);
    if (s != f.zero()) {
      std::vector<Cell> cells;
      for (std::size_t i = 0; i < a.rows(); ++i) {
        if (a.at(i, j)) cells.push_back({i, j});
      }
      report.violations.push_back({Violation::Kind::ColumnSum,
                                   "column " + std::to_string(j + 1) + " sums to " + std::to_string(s.value),
                                   std::move(cells)});
    }
  }
  report.ok = report.violations.empty();
  return report;
}

/// Odd, coprime, both at least 3.
inline bool admissible_dimensions(std::uint64_t m, std::uint64_t n) {
  return m >= 3 && n >= 3 && m % 2 == 1 && n % 2 == 1 && std::gcd(m, n) == 1;
}

/// The m x n array with cell (i, j) equal to eps^i * xi^j. Requires
/// q = 2mn + 1, m and n admissible, ord(xi) = n and ord(eps) = m.
inline PartiallyFilledArray build_rank_one(const Field& field, std::size_t m, std::size_t n, Element xi,
                                           Element eps) {
  if (!admissible_dimensions(m, n)) {
    throw Error(ErrorCode::BadParameters,
                "m=" + std::to_string(m) + ", n=" + std::to_string(n) + " must be odd, coprime and at least 3");
  }
  if (std::uint64_t{field.q()} != 2 * std::uint64_t{m} * n + 1) {
    throw Error(ErrorCode::GroupMismatch,
                "q=" + std::to_string(field.q()) + " but 2mn+1=" + std::to_string(2 * m * n + 1));
  }
  if (!field.contains(xi.value) || xi.value == 0 || field.element_order(xi) != n) {
    throw Error(ErrorCode::WrongOrder, "xi=" + std::to_string(xi.value) + " does not have order " + std::to_string(n));
  }
  if (!field.contains(eps.value) || eps.value == 0 || field.element_order(eps) != m) {
    throw Error(ErrorCode::WrongOrder,
                "eps=" + std::to_string(eps.value) + " does not have order " + std::to_string(m));
  }
  PartiallyFilledArray a(field, m, n);
  Element row_lead = field.one();
  for (std::size_t i = 0; i < m; ++i) {
    Element x = row_lead;
    for (std::size_t j = 0; j < n; ++j) {
      a.set(i, j, x);
      x = field.mul(x, xi);
    }
    row_lead = field.mul(row_lead, eps);
  }
  if (!validate_heffter(a).ok) {
    throw Error(ErrorCode::VerificationFailed, "rank-one array failed Heffter validation");
  }
  return a;
}

/// True iff every 2x2 minor against the first row vanishes.
inline bool is_rank_one(const PartiallyFilledArray& a) {
  if (!a.is_totally_filled()) throw Error(ErrorCode::NotTotallyFilled, "rank test needs a totally filled array");
  const Field& f = a.field();
  for (std::size_t i = 1; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      for (std::size_t jj = j + 1; jj < a.cols(); ++jj) {
        const Element lhs = f.mul(a.value(0, j), a.value(i, jj));
        const Element rhs = f.mul(a.value(0, jj), a.value(i, j));
        if (lhs != rhs) return false;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Text format: the field header line, then one line per row with
// whitespace-separated canonical integers or '-' for an empty cell.

inline void write_array(std::ostream& os, const PartiallyFilledArray& a) {
  os << a.field().header() << '\n';
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j) os << ' ';
      if (a.at(i, j)) {
        os << a.at(i, j)->value;
      } else {
        os << '-';
      }
    }
    os << '\n';
  }
}

inline std::string array_to_string(const PartiallyFilledArray& a) {
  std::ostringstream os;
  write_array(os, a);
  return os.str();
}

inline PartiallyFilledArray read_array(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw Error(ErrorCode::ParseError, "empty input");
  Field field = Field::parse_header(line);

  std::vector<std::vector<std::optional<Element>>> rows;
  while (std::getline(is, line)) {
    std::istringstream ls(line);
    std::vector<std::optional<Element>> row;
    std::string token;
    while (ls >> token) {
      if (token == "-") {
        row.emplace_back();
        continue;
      }
      std::size_t used = 0;
      unsigned long long v = 0;
      try {
        v = std::stoull(token, &used);
      } catch (const std::logic_error&) {
        throw Error(ErrorCode::ParseError, "bad cell token '" + token + "'");
      }
      if (used != token.size() || token.front() == '-' || token.front() == '+') {
        throw Error(ErrorCode::ParseError, "bad cell token '" + token + "'");
      }
      if (!field.contains(v)) throw Error(ErrorCode::ParseError, "cell value " + token + " outside the group");
      row.emplace_back(Element{static_cast<std::uint32_t>(v)});
    }
    if (row.empty()) continue;
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw Error(ErrorCode::ParseError, "ragged array rows");
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw Error(ErrorCode::ParseError, "array has no rows");

  PartiallyFilledArray a(field, rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) a.set(i, j, rows[i][j]);
  }
  return a;
}

inline PartiallyFilledArray array_from_string(const std::string& text) {
  std::istringstream is(text);
  return read_array(is);
}

}  // namespace heffter
