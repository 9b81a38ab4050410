#pragma once

// Garnir straightening of column tabloids into semistandard polytabloids.

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "errors.hpp"
#include "rep.hpp"
#include "shapes.hpp"

namespace plethysm {

// Integer coefficients, reduced mod p when p > 0; exact with overflow checks when p = 0.
struct IntCoeffs {
  std::int64_t p = 0;

  std::int64_t norm(std::int64_t x) const {
    if (p == 0) return x;
    x %= p;
    return x < 0 ? x + p : x;
  }
  std::int64_t add(std::int64_t x, std::int64_t y) const {
    if (p) return norm(x + y);
    std::int64_t z;
    if (__builtin_add_overflow(x, y, &z)) fail(ErrorKind::ParamsOutOfSupportedRange, "straightening coefficient overflow");
    return z;
  }
  std::int64_t mul(std::int64_t x, std::int64_t y) const {
    if (p) return detail::mulmod(norm(x), norm(y), p);
    std::int64_t z;
    if (__builtin_mul_overflow(x, y, &z)) fail(ErrorKind::ParamsOutOfSupportedRange, "straightening coefficient overflow");
    return z;
  }
};

using IntCombo = std::vector<std::pair<Label, std::int64_t>>;

class Straightener {
 public:
  Straightener(Partition lam, int n, std::int64_t p) : lam_(std::move(lam)), n_(n), ring_{p} {
    Partition c = conjugate(lam_);
    cols_ = c.parts;
    int off = 0;
    for (int len : cols_) {
      offs_.push_back(off);
      off += len;
    }
    size_ = off;
  }

  const Partition& shape() const { return lam_; }
  int letters() const { return n_; }
  const std::vector<int>& column_lengths() const { return cols_; }
  const std::vector<int>& column_offsets() const { return offs_; }
  std::size_t memo_size() const {
    std::lock_guard<std::mutex> g(mu_);
    return memo_.size();
  }

  // Sort each column (tracking sign) and then order equal-length columns.
  // Returns 0 if some column repeats an entry.
  int canonicalize(Label& w) const {
    int sign = 1;
    for (std::size_t j = 0; j < cols_.size(); ++j) {
      auto b = w.begin() + offs_[j], e = b + cols_[j];
      for (auto it = b + 1; it < e; ++it) {
        int v = *it;
        auto k = it;
        while (k > b && *(k - 1) > v) {
          *k = *(k - 1);
          --k;
          sign = -sign;
        }
        *k = v;
      }
      for (auto it = b + 1; it < e; ++it) {
        if (*it == *(it - 1)) return 0;
      }
    }
    // equal-length columns commute in the nabla quotient
    std::size_t j = 0;
    while (j < cols_.size()) {
      std::size_t k = j;
      while (k + 1 < cols_.size() && cols_[k + 1] == cols_[j]) ++k;
      if (k > j) {
        const int len = cols_[j];
        std::vector<Label> group;
        for (std::size_t t = j; t <= k; ++t) group.emplace_back(w.begin() + offs_[t], w.begin() + offs_[t] + len);
        std::sort(group.begin(), group.end());
        for (std::size_t t = j; t <= k; ++t) std::copy(group[t - j].begin(), group[t - j].end(), w.begin() + offs_[t]);
      }
      j = k + 1;
    }
    return sign;
  }

  bool is_semistandard(const Label& w) const { return !violation(w).has_value(); }

  // Coordinates of e(t) for a canonical word t in the semistandard basis.
  const IntCombo& straighten_canonical(const Label& w) const {
    {
      std::lock_guard<std::mutex> g(mu_);
      auto it = memo_.find(w);
      if (it != memo_.end()) return *it->second;
    }
    auto result = std::make_shared<IntCombo>(compute(w));
    std::lock_guard<std::mutex> g(mu_);
    auto [it, inserted] = memo_.emplace(w, std::move(result));
    return *it->second;
  }

  // Add coeff * e(word) to acc, for an arbitrary (not necessarily sorted) word.
  void accumulate(Label word, std::int64_t coeff, std::map<Label, std::int64_t>& acc) const {
    int s = canonicalize(word);
    if (s == 0) return;
    for (const auto& [l, c] : straighten_canonical(word)) {
      auto& slot = acc[l];
      slot = ring_.add(slot, ring_.mul(ring_.mul(c, s), coeff));
    }
  }

  IntCombo straighten(const Label& word) const {
    std::map<Label, std::int64_t> acc;
    accumulate(word, 1, acc);
    IntCombo out;
    for (auto& [l, c] : acc) {
      if (ring_.norm(c) != 0) out.emplace_back(l, ring_.norm(c));
    }
    return out;
  }

  // Every Garnir relation used by straightening, as (t, A-row range, B-row range).
  struct GarnirChoice {
    int col;       // 0-based column j; A lies in column j, B in column j+1
    int row;       // 0-based first row of A; B covers rows 0..row
  };
  std::optional<GarnirChoice> violation(const Label& w) const {
    for (std::size_t j = 0; j + 1 < cols_.size(); ++j) {
      for (int i = 0; i < cols_[j + 1]; ++i) {
        if (w[offs_[j] + i] > w[offs_[j + 1] + i]) return GarnirChoice{static_cast<int>(j), i};
      }
    }
    return std::nullopt;
  }

  // The terms of the Garnir relation sum_pi sgn(pi) |t.pi| for A = rows row.. of column col
  // and B = rows 0..row of column col+1, including the identity term.
  std::vector<std::pair<Label, int>> garnir_terms(const Label& w, GarnirChoice g) const {
    const int j = g.col, i = g.row;
    const int la = cols_[j] - i, lb = i + 1;
    std::vector<std::pair<Label, int>> out;
    const int kmax = std::min(la, lb);
    for (int k = 0; k <= kmax; ++k) {
      std::vector<int> sa, sb;
      // subsets of A and B of size k (positions relative to A/B start)
      std::function<void(int, int)> pick_a;
      std::function<void(int, int)> pick_b = [&](int start, int need) {
        if (need == 0) {
          Label t = w;
          for (int q = 0; q < k; ++q) {
            std::swap(t[offs_[j] + i + sa[q]], t[offs_[j + 1] + sb[q]]);
          }
          out.emplace_back(std::move(t), (k % 2) ? -1 : 1);
          return;
        }
        for (int x = start; x <= lb - need; ++x) {
          sb.push_back(x);
          pick_b(x + 1, need - 1);
          sb.pop_back();
        }
      };
      pick_a = [&](int start, int need) {
        if (need == 0) {
          pick_b(0, k);
          return;
        }
        for (int x = start; x <= la - need; ++x) {
          sa.push_back(x);
          pick_a(x + 1, need - 1);
          sa.pop_back();
        }
      };
      pick_a(0, k);
    }
    return out;
  }

 private:
  IntCombo compute(const Label& w) const {
    auto v = violation(w);
    if (!v) return {{w, 1}};
    std::map<Label, std::int64_t> acc;
    for (auto& [t, sg] : garnir_terms(w, *v)) {
      if (t == w) continue;  // identity term
      Label c = t;
      int s = canonicalize(c);
      if (s == 0) continue;
      if (!(c < w)) throw std::logic_error("Garnir rewrite did not decrease the tableau order");
      // e(t) = - sum_{pi != id} sgn(pi) e(t.pi)
      std::int64_t coeff = -static_cast<std::int64_t>(sg) * s;
      for (const auto& [l, x] : straighten_canonical(c)) {
        auto& slot = acc[l];
        slot = ring_.add(slot, ring_.mul(x, coeff));
      }
    }
    IntCombo out;
    for (auto& [l, x] : acc) {
      std::int64_t y = ring_.norm(x);
      if (y != 0) out.emplace_back(l, y);
    }
    return out;
  }

  Partition lam_;
  int n_;
  IntCoeffs ring_;
  std::vector<int> cols_, offs_;
  int size_ = 0;
  mutable std::mutex mu_;
  mutable std::unordered_map<Label, std::shared_ptr<const IntCombo>, VectorHash> memo_;
};

// One straightener per (shape, letters, characteristic), shared process-wide.
inline const Straightener& straightener_for(const Partition& lam, int n, std::int64_t p) {
  static std::mutex mu;
  static std::map<std::tuple<std::vector<int>, int, std::int64_t>, std::unique_ptr<Straightener>> cache;
  std::lock_guard<std::mutex> g(mu);
  auto key = std::make_tuple(lam.parts, n, p);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, std::make_unique<Straightener>(lam, n, p)).first;
  return *it->second;
}

// e(t) written in the nabla basis; t is a tableau with entries in 1..dim.
inline IntCombo garnir_straighten(const Tableau& t, int dim, std::int64_t p) {
  for (const auto& r : t.rows) {
    for (int x : r) {
      if (x < 1 || x > dim) fail(ErrorKind::EntryOutOfRange, "tableau entry out of range");
    }
  }
  Label w;
  for (int x : t.word()) w.push_back(x - 1);
  return straightener_for(t.shape, dim, p).straighten(w);
}

// Monomial of Sym^{lam_1}V ⊗ ... ⊗ Sym^{lam_k}V: each row's entries sorted, rows concatenated.
using RowMonomial = std::vector<int>;

// e(t) = sum over column place permutations of sgn * sym(t.sigma), entries 1..dim.
inline std::map<RowMonomial, std::int64_t> polytabloid_expand(const Tableau& t, int dim) {
  for (const auto& r : t.rows) {
    for (int x : r) {
      if (x < 1 || x > dim) fail(ErrorKind::EntryOutOfRange, "tableau entry out of range");
    }
  }
  std::map<RowMonomial, std::int64_t> out;
  for (const auto& bp : column_place_permutations(t.shape)) {
    Tableau s = bp.apply(t);
    RowMonomial m;
    for (auto row : s.rows) {
      std::sort(row.begin(), row.end());
      m.insert(m.end(), row.begin(), row.end());
    }
    out[m] += bp.sign;
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace plethysm
