#pragma once

// Torus weights, highest weight vectors, Borel submodule supports and defect sets.

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "errors.hpp"
#include "linmap.hpp"
#include "rep.hpp"

namespace plethysm {

struct WeightMode {
  bool concrete = false;
  std::int64_t q = 0;

  static WeightMode generic() { return {}; }
  static WeightMode of_order(std::int64_t q) {
    if (q < 3) fail(ErrorKind::InvalidArgument, "concrete mode needs q >= 3");
    return {true, q};
  }

  // window of allowed weights (concrete mode)
  std::int64_t lo() const { return q % 2 ? -(q - 1) / 2 + 1 : -q / 2 + 1; }
  std::int64_t hi() const { return q % 2 ? (q - 1) / 2 : q / 2 - 1; }
  std::int64_t max_defect() const { return q % 2 ? (q - 1) / 2 : q / 2 - 1; }

  std::int64_t fold(std::int64_t w) const {
    if (!concrete) return w;
    std::int64_t n = q - 1, r = (w - lo()) % n;
    if (r < 0) r += n;
    return r + lo();
  }

  std::string to_string() const { return concrete ? "concrete(" + std::to_string(q) + ")" : "generic"; }
  friend bool operator==(const WeightMode& a, const WeightMode& b) { return a.concrete == b.concrete && a.q == b.q; }
};

inline void check_mode(const Rep& rep, const WeightMode& mode) {
  if (mode.concrete && (!rep->field.is_finite() || rep->field.order() != mode.q)) {
    fail(ErrorKind::ModeMismatch, "concrete(" + std::to_string(mode.q) + ") needs a rep over a field of that order, got " +
                                      rep->field.spec());
  }
}

inline std::int64_t weight_of(const Rep& rep, const Label& l, const WeightMode& mode) { return mode.fold(rep->weight(l)); }

struct HighestWeight {
  std::int64_t weight = 0;
  Integer multiplicity = 0;
  std::optional<Label> label;  // set when the top weight space is a line
  bool unique() const { return multiplicity == 1; }
};

inline Character folded_character(const Rep& rep, const WeightMode& mode) {
  if (!mode.concrete) return rep->character();
  Character out;
  for (const auto& [w, c] : rep->character()) out[mode.fold(w)] += c;
  return out;
}

inline HighestWeight highest_weight(const Rep& rep, const WeightMode& mode) {
  check_mode(rep, mode);
  Character ch = folded_character(rep, mode);
  if (ch.empty()) fail(ErrorKind::InvalidArgument, "zero-dimensional rep");
  HighestWeight h;
  h.weight = ch.rbegin()->first;
  h.multiplicity = ch.rbegin()->second;
  if (!h.unique()) return h;
  const Character& raw = rep->character();
  bool folds = mode.concrete && (raw.begin()->first < mode.lo() || raw.rbegin()->first > mode.hi());
  if (!folds) {
    h.label = extreme_label(rep, true);
  } else {
    for (const auto& l : rep->basis()) {
      if (weight_of(rep, l, mode) == h.weight) {
        h.label = l;
        break;
      }
    }
  }
  return h;
}

struct WeightReport {
  Rep rep;
  WeightMode mode;
  std::map<std::int64_t, std::vector<Label>> weights;
  HighestWeight highest;
};

inline WeightReport weight_report(const Rep& rep, const WeightMode& mode) {
  check_mode(rep, mode);
  WeightReport r{rep, mode, {}, {}};
  for (const auto& l : rep->basis()) r.weights[weight_of(rep, l, mode)].push_back(l);
  r.highest = highest_weight(rep, mode);
  return r;
}

enum class BorelMethod { Auto, UnitShortcut, Symbolic, Enumerate };

namespace detail {

inline bool integer_homogeneous(const Rep& rep, const Terms<Elem>& v) {
  std::optional<std::int64_t> w;
  for (const auto& [l, c] : v) {
    std::int64_t x = rep->weight(l);
    if (w && *w != x) return false;
    w = x;
  }
  return true;
}

}  // namespace detail

// Weights r with (Bv)_r != 0.
inline std::set<std::int64_t> borel_weight_support(const Rep& rep, const Terms<Elem>& v, const WeightMode& mode,
                                                    BorelMethod method = BorelMethod::Auto) {
  check_mode(rep, mode);
  if (v.empty()) fail(ErrorKind::NotAWeightVector, "zero vector");
  std::optional<std::int64_t> w;
  for (const auto& [l, c] : v) {
    std::int64_t x = weight_of(rep, l, mode);
    if (w && *w != x) fail(ErrorKind::NotAWeightVector, "vector mixes weights " + std::to_string(*w) + " and " + std::to_string(x));
    w = x;
  }
  Field F = rep->field;
  bool homogeneous = detail::integer_homogeneous(rep, v);
  if (method == BorelMethod::Auto) method = homogeneous ? BorelMethod::UnitShortcut : BorelMethod::Enumerate;
  if (method == BorelMethod::UnitShortcut && !homogeneous) {
    fail(ErrorKind::NotAWeightVector, "the unit shortcut needs a vector of a single integer weight");
  }
  std::set<std::int64_t> out;
  switch (method) {
    case BorelMethod::UnitShortcut: {
      // coefficients of M_gamma v are c * gamma^k per label, so gamma = 1 sees every one
      for (const auto& [l, c] : act(lower_unipotent(F.one()), rep, v)) out.insert(weight_of(rep, l, mode));
      break;
    }
    case BorelMethod::Symbolic: {
      Ring<Poly> R{F};
      auto m = action_map<Poly>(rep, symbolic_lower_unipotent(F), R);
      Terms<Poly> pv;
      for (const auto& [l, c] : v) pv.emplace(l, R.lift(c));
      for (const auto& [l, c] : m->apply(pv)) {
        if (mode.concrete ? c.nonvanishing_on_field() : !c.is_zero()) out.insert(weight_of(rep, l, mode));
      }
      break;
    }
    case BorelMethod::Enumerate: {
      if (!F.is_finite()) fail(ErrorKind::InfiniteEnumeration, "cannot enumerate gamma over an infinite field");
      for (const auto& g : F.elements()) {
        for (const auto& [l, c] : act(lower_unipotent(g), rep, v)) out.insert(weight_of(rep, l, mode));
      }
      break;
    }
    case BorelMethod::Auto: break;
  }
  return out;
}

// Union of supports over the basis vectors of one weight space.
inline std::set<std::int64_t> weight_space_support(const Rep& rep, std::int64_t weight, const WeightMode& mode) {
  std::set<std::int64_t> out;
  Field F = rep->field;
  for (const auto& l : rep->basis()) {
    if (weight_of(rep, l, mode) != weight) continue;
    auto s = borel_weight_support(rep, Terms<Elem>{{l, F.one()}}, mode);
    out.insert(s.begin(), s.end());
  }
  return out;
}

struct DefectSet {
  bool defined = false;
  std::set<std::int64_t> elements;
  WeightMode mode;
  HighestWeight highest;

  std::string to_string() const {
    if (!defined) return "undefined";
    std::string s = "{";
    bool first = true;
    for (auto x : elements) {
      s += (first ? "" : ",") + std::to_string(x);
      first = false;
    }
    return s + "}";
  }
  bool contains(std::int64_t d) const { return defined && elements.count(d); }
  friend bool operator==(const DefectSet& a, const DefectSet& b) {
    return a.defined == b.defined && a.elements == b.elements && a.mode == b.mode;
  }
};

inline DefectSet defects_from_support(const std::set<std::int64_t>& support, const HighestWeight& h, const WeightMode& mode) {
  DefectSet d;
  d.defined = true;
  d.mode = mode;
  d.highest = h;
  if (!mode.concrete) {
    for (auto r : support) {
      if (r <= h.weight && (h.weight - r) % 2 == 0) d.elements.insert((h.weight - r) / 2);
    }
  } else {
    for (std::int64_t k = 0; k <= mode.max_defect(); ++k) {
      if (support.count(mode.fold(h.weight - 2 * k))) d.elements.insert(k);
    }
  }
  return d;
}

// The ambient column wedge for a hook, with its top column tabloid.
struct WedgeRealization {
  Rep ambient;
  Label top;
};

inline WedgeRealization delta_in_wedge(const Partition& lam, const Rep& V) {
  Partition c = conjugate(lam);
  for (std::size_t j = 1; j < c.parts.size(); ++j) {
    if (c.parts[j] != 1) fail(ErrorKind::InvalidArgument, "delta_in_wedge needs a hook partition");
  }
  const Character& ch = V->character();
  if (ch.rbegin()->second != 1) fail(ErrorKind::NoUniqueHighestWeight, "V has no unique highest weight vector");
  Rep amb = column_wedge(lam, V);
  return {amb, extreme_label(amb, true)};
}

// Borel support of a pure column tabloid: the sum of the per-column supports.
inline std::set<std::int64_t> column_tabloid_support(const Rep& cw, const Label& word, const WeightMode& mode) {
  check_mode(cw, mode);
  Rep V = cw->a;
  Field F = V->field;
  auto fc = index_columns(*action_map(V, lower_unipotent(F.one())));
  const auto& ws = V->basis_weights();
  auto lens = conjugate(cw->lam).parts;
  std::set<std::int64_t> acc{0};
  for (const auto& col : detail::column_images<Elem>(word, lens, fc, Ring<Elem>{F})) {
    std::set<std::int64_t> here;
    for (const auto& [l, c] : col) {
      std::int64_t w = 0;
      for (int i : l) w += ws[i];
      here.insert(w);
    }
    std::set<std::int64_t> next;
    for (auto a : acc) {
      for (auto b : here) next.insert(a + b);
    }
    acc = std::move(next);
  }
  std::set<std::int64_t> out;
  for (auto w : acc) out.insert(mode.fold(w));
  return out;
}

enum class DefectRoute { Auto, Direct, Wedge };

inline DefectSet defect_set(const Rep& rep, const WeightMode& mode, DefectRoute route = DefectRoute::Auto) {
  check_mode(rep, mode);
  HighestWeight h = highest_weight(rep, mode);
  if (!h.unique()) {
    DefectSet d;
    d.mode = mode;
    d.highest = h;
    return d;
  }
  Field F = rep->field;
  bool hook = false;
  if (rep->kind == Kind::Delta) {
    Partition c = conjugate(rep->lam);
    hook = std::all_of(c.parts.begin() + (c.parts.empty() ? 0 : 1), c.parts.end(), [](int x) { return x == 1; });
  }
  if (route == DefectRoute::Wedge && !hook) fail(ErrorKind::KindMismatch, "the wedge route applies to hook delta modules");
  if (route == DefectRoute::Auto) route = hook && rep->a->character().rbegin()->second == 1 ? DefectRoute::Wedge : DefectRoute::Direct;
  std::set<std::int64_t> support;
  if (route == DefectRoute::Wedge) {
    auto wr = delta_in_wedge(rep->lam, rep->a);
    HighestWeight hw = highest_weight(wr.ambient, mode);
    if (!hw.unique()) fail(ErrorKind::NoUniqueHighestWeight, "ambient wedge has no unique highest weight vector");
    support = column_tabloid_support(wr.ambient, *hw.label, mode);
    return defects_from_support(support, hw, mode);
  }
  support = borel_weight_support(rep, Terms<Elem>{{*h.label, F.one()}}, mode);
  return defects_from_support(support, h, mode);
}

inline DefectSet defect_sum(const DefectSet& a, const DefectSet& b) {
  if (!(a.mode == b.mode)) fail(ErrorKind::ModeMismatch, "defect sets computed in different modes");
  if (!a.defined || !b.defined) fail(ErrorKind::InvalidArgument, "sum of undefined defect sets");
  DefectSet d;
  d.defined = true;
  d.mode = a.mode;
  for (auto x : a.elements) {
    for (auto y : b.elements) d.elements.insert(x + y);
  }
  return d;
}

// ---- closed forms ----

enum class OracleKind { SymLower, SymUpper, LowerLower, LowerUpper, UpperLower, UpperUpper };

inline OracleKind parse_oracle_kind(const std::string& s) {
  if (s == "sym_lower") return OracleKind::SymLower;
  if (s == "sym_upper") return OracleKind::SymUpper;
  if (s == "symsym_LL") return OracleKind::LowerLower;
  if (s == "symsym_LU") return OracleKind::LowerUpper;
  if (s == "symsym_UL") return OracleKind::UpperLower;
  if (s == "symsym_UU") return OracleKind::UpperUpper;
  fail(ErrorKind::ParseError, "unknown oracle kind '" + s + "'");
}

// Outer power m, inner power l (only l is used for a single symmetric power).
inline DefectSet defect_oracle(OracleKind kind, int l, int m, std::int64_t p) {
  DefectSet d;
  d.defined = true;
  switch (kind) {
    case OracleKind::SymLower:
      for (int k = 0; k <= l; ++k) d.elements.insert(k);
      return d;
    case OracleKind::SymUpper:
      for (int k = 0; k <= l; ++k) {
        if (carry_free_summand(k, l, p)) d.elements.insert(k);
      }
      return d;
    case OracleKind::LowerLower:
      for (int k = 0; k <= l * m; ++k) d.elements.insert(k);
      return d;
    default: break;
  }
  const bool inner_upper = kind == OracleKind::LowerUpper || kind == OracleKind::UpperUpper;
  const bool outer_upper = kind == OracleKind::UpperLower || kind == OracleKind::UpperUpper;
  // compositions m_0 + ... + m_l = m
  std::vector<std::int64_t> parts(l + 1, 0);
  std::function<void(int, int)> rec = [&](int j, int left) {
    if (j == l) {
      parts[l] = left;
      if (inner_upper) {
        for (int i = 0; i <= l; ++i) {
          if (parts[i] && !carry_free_summand(i, l, p)) return;
        }
      }
      if (outer_upper && !multinomial_nonzero_mod_p(parts, p)) return;
      std::int64_t s = 0;
      for (int i = 0; i <= l; ++i) s += i * parts[i];
      d.elements.insert(s);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      parts[j] = k;
      rec(j + 1, left - k);
    }
    parts[j] = 0;
  };
  rec(0, m);
  return d;
}

}  // namespace plethysm
