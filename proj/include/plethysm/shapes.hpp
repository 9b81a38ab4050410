#pragma once

// Partitions, tableaux and multiindex combinatorics.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "field.hpp"

namespace plethysm {

struct Partition {
  std::vector<int> parts;

  Partition() = default;
  Partition(std::initializer_list<int> xs) : parts(xs) { validate(); }
  explicit Partition(std::vector<int> xs) : parts(std::move(xs)) { validate(); }

  void validate() const {
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (parts[i] <= 0) fail(ErrorKind::InvalidArgument, "partition parts must be positive");
      if (i && parts[i] > parts[i - 1]) fail(ErrorKind::InvalidArgument, "partition parts must be weakly decreasing");
    }
  }

  int length() const { return static_cast<int>(parts.size()); }
  int size() const { return std::accumulate(parts.begin(), parts.end(), 0); }
  bool empty() const { return parts.empty(); }
  // 1-based; parts beyond the length read as 0.
  int operator[](int i) const { return (i >= 1 && i <= length()) ? parts[i - 1] : 0; }
  int first() const { return parts.empty() ? 0 : parts[0]; }

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts == b.parts; }
  friend bool operator!=(const Partition& a, const Partition& b) { return a.parts != b.parts; }
  friend bool operator<(const Partition& a, const Partition& b) { return a.parts < b.parts; }

  std::string to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? "," : "") << parts[i];
    return os.str();
  }
};

inline Partition conjugate(const Partition& lam) {
  std::vector<int> c;
  for (int j = 1; j <= lam.first(); ++j) {
    int len = 0;
    while (len < lam.length() && lam.parts[len] >= j) ++len;
    c.push_back(len);
  }
  return Partition(c);
}

inline bool fits_rectangle(const Partition& lam, int d, int s) { return lam.length() <= d && lam.first() <= s; }

inline Partition complement_partition(const Partition& lam, int d, int s) {
  if (!fits_rectangle(lam, d, s)) {
    fail(ErrorKind::DoesNotFitRectangle, "(" + lam.to_string() + ") does not fit in " + std::to_string(d) + "x" + std::to_string(s));
  }
  std::vector<int> c;
  for (int i = 1; i <= d; ++i) {
    int v = s - lam[d + 1 - i];
    if (v > 0) c.push_back(v);
  }
  return Partition(c);
}

// "3,1,1", "3,1^4", "(2,2)"; empty string or "()" is the empty partition.
inline Partition parse_partition(const std::string& text) {
  std::string t = detail::strip(text);
  if (!t.empty() && t.front() == '(' && t.back() == ')') t = t.substr(1, t.size() - 2);
  if (!t.empty() && t.front() == '[' && t.back() == ']') t = t.substr(1, t.size() - 2);
  std::vector<int> parts;
  if (detail::strip(t).empty() || detail::strip(t) == "0") return Partition();
  for (const auto& raw : detail::split(t, ',')) {
    std::string piece = detail::strip(raw);
    auto caret = piece.find('^');
    if (caret == std::string::npos) {
      parts.push_back(static_cast<int>(detail::parse_int(piece, "partition part")));
    } else {
      int v = static_cast<int>(detail::parse_int(piece.substr(0, caret), "partition part"));
      int k = static_cast<int>(detail::parse_int(piece.substr(caret + 1), "multiplicity"));
      if (k < 0) fail(ErrorKind::ParseError, "negative multiplicity");
      for (int i = 0; i < k; ++i) parts.push_back(v);
    }
  }
  parts.erase(std::remove(parts.begin(), parts.end(), 0), parts.end());
  try {
    return Partition(parts);
  } catch (const Error& e) {
    fail(ErrorKind::ParseError, std::string("not a partition: ") + e.what());
  }
}

// All partitions whose diagram fits inside the d x s rectangle.
inline std::vector<Partition> partitions_in_box(int d, int s) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int maxpart) {
    out.push_back(Partition(cur));
    if (static_cast<int>(cur.size()) == d) return;
    for (int v = 1; v <= maxpart; ++v) {
      cur.push_back(v);
      rec(v);
      cur.pop_back();
    }
  };
  rec(s);
  std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.parts > b.parts;
  });
  return out;
}

inline std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rem, int maxpart) {
    if (rem == 0) {
      out.push_back(Partition(cur));
      return;
    }
    for (int v = std::min(rem, maxpart); v >= 1; --v) {
      cur.push_back(v);
      rec(rem - v, v);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

struct Box {
  int row;  // 1-based
  int col;  // 1-based
  friend bool operator==(const Box& a, const Box& b) { return a.row == b.row && a.col == b.col; }
  friend bool operator<(const Box& a, const Box& b) { return a.col != b.col ? a.col < b.col : a.row < b.row; }
};

// Filling of a Young diagram; rows[i][j] holds the entry of box (i+1, j+1).
struct Tableau {
  Partition shape;
  std::vector<std::vector<int>> rows;

  Tableau() = default;
  explicit Tableau(std::vector<std::vector<int>> r) : rows(std::move(r)) {
    while (!rows.empty() && rows.back().empty()) rows.pop_back();
    std::vector<int> parts;
    for (const auto& row : rows) parts.push_back(static_cast<int>(row.size()));
    try {
      shape = Partition(parts);
    } catch (const Error&) {
      fail(ErrorKind::InvalidArgument, "row lengths do not form a partition");
    }
  }

  // Build from columns (each read top to bottom).
  static Tableau from_columns(const std::vector<std::vector<int>>& cols) {
    std::vector<std::vector<int>> r;
    for (std::size_t j = 0; j < cols.size(); ++j) {
      for (std::size_t i = 0; i < cols[j].size(); ++i) {
        if (r.size() <= i) r.resize(i + 1);
        if (r[i].size() != j) fail(ErrorKind::InvalidArgument, "column lengths do not form a diagram");
        r[i].push_back(cols[j][i]);
      }
    }
    return Tableau(r);
  }

  // Build from a column-reading word for the given shape.
  static Tableau from_word(const Partition& lam, const std::vector<int>& word) {
    Tableau t;
    t.shape = lam;
    t.rows.resize(lam.length());
    for (int i = 0; i < lam.length(); ++i) t.rows[i].assign(lam.parts[i], 0);
    std::size_t k = 0;
    Partition c = conjugate(lam);
    for (int j = 0; j < c.length(); ++j) {
      for (int i = 0; i < c.parts[j]; ++i) t.rows[i][j] = word.at(k++);
    }
    return t;
  }

  int at(int i, int j) const { return rows.at(i - 1).at(j - 1); }
  int& at(int i, int j) { return rows.at(i - 1).at(j - 1); }
  int num_cols() const { return shape.first(); }

  std::vector<int> column(int j) const {
    std::vector<int> c;
    for (const auto& row : rows) {
      if (static_cast<int>(row.size()) >= j) c.push_back(row[j - 1]);
    }
    return c;
  }
  std::vector<std::vector<int>> columns() const {
    std::vector<std::vector<int>> cs;
    for (int j = 1; j <= num_cols(); ++j) cs.push_back(column(j));
    return cs;
  }
  // Columns left to right, each read top to bottom.
  std::vector<int> word() const {
    std::vector<int> w;
    for (int j = 1; j <= num_cols(); ++j) {
      auto c = column(j);
      w.insert(w.end(), c.begin(), c.end());
    }
    return w;
  }

  std::vector<Box> boxes() const {
    std::vector<Box> b;
    for (int j = 1; j <= num_cols(); ++j) {
      for (int i = 1; i <= static_cast<int>(rows.size()) && static_cast<int>(rows[i - 1].size()) >= j; ++i) b.push_back({i, j});
    }
    return b;
  }

  int max_entry() const {
    int m = 0;
    for (const auto& r : rows) {
      for (int x : r) m = std::max(m, x);
    }
    return m;
  }

  friend bool operator==(const Tableau& a, const Tableau& b) { return a.rows == b.rows; }
  friend bool operator!=(const Tableau& a, const Tableau& b) { return a.rows != b.rows; }
  // Canonical order: shape first, then column-reading word lexicographically.
  friend bool operator<(const Tableau& a, const Tableau& b) {
    if (a.shape != b.shape) return a.shape < b.shape;
    return a.word() < b.word();
  }

  // "1 2 2 / 3 3"
  std::string to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i) os << " / ";
      for (std::size_t j = 0; j < rows[i].size(); ++j) os << (j ? " " : "") << rows[i][j];
    }
    return os.str();
  }
};

inline Tableau parse_tableau(const std::string& text) {
  std::string t = detail::strip(text);
  if (!t.empty() && t.front() == '|' && t.back() == '|' && t.size() >= 2) t = t.substr(1, t.size() - 2);
  std::vector<std::vector<int>> rows;
  if (detail::strip(t).empty()) return Tableau();
  for (const auto& rowtext : detail::split(t, '/')) {
    std::vector<int> row;
    std::istringstream is(rowtext);
    std::string tok;
    while (is >> tok) {
      for (const auto& piece : detail::split(tok, ',')) {
        if (!detail::strip(piece).empty()) row.push_back(static_cast<int>(detail::parse_int(piece, "tableau entry")));
      }
    }
    if (row.empty()) fail(ErrorKind::ParseError, "empty tableau row in '" + text + "'");
    rows.push_back(row);
  }
  try {
    return Tableau(rows);
  } catch (const Error& e) {
    fail(ErrorKind::ParseError, e.what());
  }
}

struct TableauClass {
  bool row_semistandard = false;
  bool column_standard = false;
  bool semistandard = false;
};

inline bool is_row_semistandard(const Tableau& t) {
  for (const auto& r : t.rows) {
    for (std::size_t j = 1; j < r.size(); ++j) {
      if (r[j - 1] > r[j]) return false;
    }
  }
  return true;
}

inline bool is_column_standard(const Tableau& t) {
  for (std::size_t i = 1; i < t.rows.size(); ++i) {
    for (std::size_t j = 0; j < t.rows[i].size(); ++j) {
      if (t.rows[i - 1][j] >= t.rows[i][j]) return false;
    }
  }
  return true;
}

inline TableauClass classify_tableau(const Tableau& t) {
  TableauClass c;
  c.row_semistandard = is_row_semistandard(t);
  c.column_standard = is_column_standard(t);
  c.semistandard = c.row_semistandard && c.column_standard;
  return c;
}

enum class TableauKind { SSYT, CSYT };

namespace detail {

// Strictly increasing sequences of length len from {1..n}, lexicographic,
// with optional entrywise lower bounds.
inline void increasing_columns(int len, int n, const std::vector<int>* lower,
                               const std::function<void(const std::vector<int>&)>& emit) {
  std::vector<int> cur(len);
  std::function<void(int, int)> rec = [&](int i, int minv) {
    if (i == len) {
      emit(cur);
      return;
    }
    int lo = minv;
    if (lower && (*lower)[i] > lo) lo = (*lower)[i];
    for (int v = lo; v <= n - (len - 1 - i); ++v) {
      cur[i] = v;
      rec(i + 1, v + 1);
    }
  };
  rec(0, 1);
}

}  // namespace detail

// Visit tableaux in canonical order (column-reading word, lexicographic).
inline void for_each_tableau(const Partition& lam, int n, TableauKind kind,
                             const std::function<void(const std::vector<std::vector<int>>&)>& visit) {
  Partition c = conjugate(lam);
  const int ncols = c.length();
  std::vector<std::vector<int>> cols(ncols);
  std::function<void(int)> rec = [&](int j) {
    if (j == ncols) {
      visit(cols);
      return;
    }
    const std::vector<int>* lower = nullptr;
    std::vector<int> lb;
    if (kind == TableauKind::SSYT && j > 0) {
      lb.assign(cols[j - 1].begin(), cols[j - 1].begin() + c.parts[j]);
      lower = &lb;
    }
    detail::increasing_columns(c.parts[j], n, lower, [&](const std::vector<int>& col) {
      cols[j] = col;
      rec(j + 1);
    });
  };
  rec(0);
}

inline std::vector<Tableau> enumerate_tableaux(const Partition& lam, int n, TableauKind kind) {
  std::vector<Tableau> out;
  for_each_tableau(lam, n, kind, [&](const std::vector<std::vector<int>>& cols) {
    if (cols.empty()) {
      out.push_back(Tableau());
    } else {
      out.push_back(Tableau::from_columns(cols));
    }
  });
  return out;
}

inline std::int64_t count_tableaux(const Partition& lam, int n, TableauKind kind) {
  std::int64_t k = 0;
  for_each_tableau(lam, n, kind, [&](const std::vector<std::vector<int>>&) { ++k; });
  return k;
}

inline Tableau complement_tableau(const Tableau& t, int d, int s) {
  if (!fits_rectangle(t.shape, d, s)) fail(ErrorKind::DoesNotFitRectangle, "tableau shape does not fit the rectangle");
  if (!is_column_standard(t)) fail(ErrorKind::NotColumnStandard, "complement needs a column standard tableau");
  for (const auto& r : t.rows) {
    for (int x : r) {
      if (x < 1 || x > d) fail(ErrorKind::EntryOutOfRange, "entry " + std::to_string(x) + " outside 1.." + std::to_string(d));
    }
  }
  std::vector<std::vector<int>> cols;
  for (int jc = 1; jc <= s; ++jc) {
    std::vector<int> src = (s + 1 - jc <= t.num_cols()) ? t.column(s + 1 - jc) : std::vector<int>{};
    std::vector<int> col;
    for (int v = 1; v <= d; ++v) {
      if (!std::binary_search(src.begin(), src.end(), v)) col.push_back(v);
    }
    if (col.empty()) break;
    cols.push_back(col);
  }
  if (cols.empty()) return Tableau();
  return Tableau::from_columns(cols);
}

inline std::int64_t surplus(const Tableau& t) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    for (int x : t.rows[i]) s += x - static_cast<std::int64_t>(i + 1);
  }
  return s;
}

// Sign of the permutation sorting a sequence of distinct values; 0 if a value repeats.
inline int sort_sign(std::vector<int>& xs) {
  int sign = 1;
  for (std::size_t i = 1; i < xs.size(); ++i) {
    int v = xs[i];
    std::size_t j = i;
    while (j > 0 && xs[j - 1] > v) {
      xs[j] = xs[j - 1];
      --j;
      sign = -sign;
    }
    xs[j] = v;
  }
  for (std::size_t i = 1; i < xs.size(); ++i) {
    if (xs[i] == xs[i - 1]) return 0;
  }
  return sign;
}

struct ColumnSortResult {
  Tableau tableau;
  int sign = 1;
  bool ok = true;
};

inline ColumnSortResult column_sort(const Tableau& t) {
  ColumnSortResult r;
  auto cols = t.columns();
  for (auto& c : cols) {
    int s = sort_sign(c);
    if (s == 0) {
      r.ok = false;
      s = 1;
      std::sort(c.begin(), c.end());
    }
    r.sign *= s;
  }
  r.tableau = cols.empty() ? Tableau() : Tableau::from_columns(cols);
  if (!r.ok) r.sign = 0;
  return r;
}

// A permutation of boxes together with its sign.
struct BoxPermutation {
  std::map<Box, Box> mapping;  // box -> image box
  int sign = 1;

  // (t.sigma)(b) = t(sigma(b)): entries move against the mapping.
  Tableau apply(const Tableau& t) const {
    Tableau r = t;
    for (const auto& [from, to] : mapping) r.at(from.row, from.col) = t.at(to.row, to.col);
    return r;
  }
};

inline int permutation_sign(const std::vector<int>& perm) {
  std::vector<bool> seen(perm.size(), false);
  int sign = 1;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

// All column place permutations CPP(lambda), each with its sign.
inline std::vector<BoxPermutation> column_place_permutations(const Partition& lam) {
  Partition c = conjugate(lam);
  std::vector<BoxPermutation> out{BoxPermutation{}};
  for (int j = 1; j <= c.length(); ++j) {
    std::vector<int> perm(c.parts[j - 1]);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<BoxPermutation> next;
    do {
      int sg = permutation_sign(perm);
      for (const auto& bp : out) {
        BoxPermutation nb = bp;
        for (int i = 0; i < c.parts[j - 1]; ++i) {
          if (perm[i] != i) nb.mapping[{i + 1, j}] = {perm[i] + 1, j};
        }
        nb.sign *= sg;
        next.push_back(std::move(nb));
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    out = std::move(next);
  }
  return out;
}

using MultiIndex = std::vector<int>;

// One representative per right coset Stab(i) \ S_m, as 0-based one-line
// permutations sigma with (i.sigma)_k = i_{sigma(k)}; the rearrangements
// i.sigma are distinct and listed in lexicographic order.
inline std::vector<std::vector<int>> stabilizer_coset_reps(const MultiIndex& i) {
  const int m = static_cast<int>(i.size());
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return i[a] < i[b]; });
  std::vector<int> arr(m);
  for (int k = 0; k < m; ++k) arr[k] = i[order[k]];
  std::vector<std::vector<int>> reps;
  do {
    // match each position of arr to an unused position of i holding the same value
    std::vector<int> sigma(m);
    std::vector<bool> used(m, false);
    for (int k = 0; k < m; ++k) {
      for (int src = 0; src < m; ++src) {
        if (!used[src] && i[src] == arr[k]) {
          used[src] = true;
          sigma[k] = src;
          break;
        }
      }
    }
    reps.push_back(sigma);
  } while (std::next_permutation(arr.begin(), arr.end()));
  return reps;
}

inline MultiIndex apply_place_permutation(const MultiIndex& i, const std::vector<int>& sigma) {
  MultiIndex r(i.size());
  for (std::size_t k = 0; k < i.size(); ++k) r[k] = i[sigma[k]];
  return r;
}

struct VectorHash {
  std::size_t operator()(const std::vector<int>& v) const noexcept {
    std::uint64_t h = 1469598103934665603ULL ^ v.size();
    for (int x : v) {
      h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(x));
      h *= 1099511628211ULL;
      h ^= h >> 29;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace plethysm
