#pragma once

// Representations of GL2 built as constructor trees over the natural module E.

#include <algorithm>
#include <cctype>
#include <cstring>
#include <functional>
#include <limits>
#include <numeric>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "field.hpp"
#include "shapes.hpp"

namespace plethysm {

enum class Kind { E, Dual, ContraDual, Tensor, SymUpper, SymLower, Wedge, Nabla, Delta, DetPower, ColumnWedge };

// Basis labels have a fixed length per rep:
//   E: {0}=X, {1}=Y; Dual/ContraDual: the child's label; Tensor: {i, j} child indices;
//   SymUpper/SymLower: sorted child indices; Wedge: strictly increasing child indices;
//   Nabla/ColumnWedge: column-reading word of 0-based child indices;
//   Delta: label of the inner nabla over the dual; DetPower: {}.
using Label = std::vector<int>;

// Laurent polynomial in the torus weight.
using Character = std::map<std::int64_t, Integer>;

struct RepNode;
using Rep = std::shared_ptr<const RepNode>;

struct RepNode {
  Kind kind = Kind::E;
  Field field;
  int r = 0;          // power / rank / det exponent
  Partition lam;      // Nabla, Delta, ColumnWedge
  Rep a, b;           // children
  Rep impl;           // Delta: dual(nabla[lam](dual(V)))

  explicit RepNode(Field f) : field(f) {}

  const std::vector<Label>& basis() const {
    std::call_once(basis_once_, [&] { basis_ = enumerate(); });
    return basis_;
  }
  const Label& label(std::size_t i) const { return basis().at(i); }
  std::optional<std::size_t> find(const Label& l) const {
    const auto& bs = basis();
    auto it = std::lower_bound(bs.begin(), bs.end(), l);
    if (it == bs.end() || *it != l) return std::nullopt;
    return static_cast<std::size_t>(it - bs.begin());
  }
  std::size_t index_of(const Label& l) const {
    auto i = find(l);
    if (!i) fail(ErrorKind::InvalidArgument, "label is not a basis label of " + spec());
    return *i;
  }

  const Character& character() const {
    std::call_once(char_once_, [&] { char_ = compute_character(); });
    return char_;
  }
  std::int64_t dimension() const {
    std::call_once(dim_once_, [&] {
      Integer s = 0;
      for (const auto& [w, c] : character()) s += c;
      if (s > Integer(std::numeric_limits<std::int64_t>::max())) fail(ErrorKind::ParamsOutOfSupportedRange, "dimension too large");
      dim_ = static_cast<std::int64_t>(s);
    });
    return dim_;
  }
  // Weights of the basis, by index (enumerates the basis).
  const std::vector<std::int64_t>& basis_weights() const {
    std::call_once(w_once_, [&] {
      const auto& bs = basis();
      weights_.reserve(bs.size());
      for (const auto& l : bs) weights_.push_back(weight(l));
    });
    return weights_;
  }
  std::int64_t weight(const Label& l) const;
  std::int64_t label_length() const;

  std::string spec() const;

 private:
  std::vector<Label> enumerate() const;
  Character compute_character() const;

  mutable std::once_flag basis_once_, char_once_, dim_once_, w_once_;
  mutable std::vector<Label> basis_;
  mutable Character char_;
  mutable std::int64_t dim_ = 0;
  mutable std::vector<std::int64_t> weights_;
};

// ---- constructors ----

inline void same_field(const Rep& x, const Rep& y) {
  if (x->field != y->field) fail(ErrorKind::FieldMismatch, "reps over different fields");
}

inline Rep natural(Field f) {
  auto n = std::make_shared<RepNode>(f);
  n->kind = Kind::E;
  return n;
}

inline Rep dual(const Rep& v) {
  auto n = std::make_shared<RepNode>(v->field);
  n->kind = Kind::Dual;
  n->a = v;
  return n;
}

inline Rep contra_dual(const Rep& v) {
  auto n = std::make_shared<RepNode>(v->field);
  n->kind = Kind::ContraDual;
  n->a = v;
  return n;
}

inline Rep tensor(const Rep& x, const Rep& y) {
  same_field(x, y);
  auto n = std::make_shared<RepNode>(x->field);
  n->kind = Kind::Tensor;
  n->a = x;
  n->b = y;
  return n;
}

inline Rep sym_upper(int r, const Rep& v) {
  if (r < 0) fail(ErrorKind::InvalidArgument, "negative symmetric power");
  auto n = std::make_shared<RepNode>(v->field);
  n->kind = Kind::SymUpper;
  n->r = r;
  n->a = v;
  return n;
}

inline Rep sym_lower(int r, const Rep& v) {
  if (r < 0) fail(ErrorKind::InvalidArgument, "negative symmetric power");
  auto n = std::make_shared<RepNode>(v->field);
  n->kind = Kind::SymLower;
  n->r = r;
  n->a = v;
  return n;
}

inline Rep wedge(int r, const Rep& v) {
  if (r < 0) fail(ErrorKind::InvalidArgument, "negative exterior power");
  auto n = std::make_shared<RepNode>(v->field);
  n->kind = Kind::Wedge;
  n->r = r;
  n->a = v;
  return n;
}

inline Rep nabla(const Partition& lam, const Rep& v) {
  auto n = std::make_shared<RepNode>(v->field);
  n->kind = Kind::Nabla;
  n->lam = lam;
  n->a = v;
  return n;
}

// Column-wise exterior power: tensor product over columns of wedge^{len}(V).
inline Rep column_wedge(const Partition& lam, const Rep& v) {
  auto n = std::make_shared<RepNode>(v->field);
  n->kind = Kind::ColumnWedge;
  n->lam = lam;
  n->a = v;
  return n;
}

inline Rep delta(const Partition& lam, const Rep& v) {
  auto n = std::make_shared<RepNode>(v->field);
  n->kind = Kind::Delta;
  n->lam = lam;
  n->a = v;
  n->impl = dual(nabla(lam, dual(v)));
  return n;
}

inline Rep det_power(int k, Field f) {
  auto n = std::make_shared<RepNode>(f);
  n->kind = Kind::DetPower;
  n->r = k;
  return n;
}

inline Rep sym_upper_E(int r, Field f) { return sym_upper(r, natural(f)); }
inline Rep sym_lower_E(int r, Field f) { return sym_lower(r, natural(f)); }

// Structural equality (same constructor tree and field).
inline bool same_rep(const Rep& x, const Rep& y) {
  if (x == y) return true;
  if (!x || !y) return false;
  if (x->kind != y->kind || x->field != y->field || x->r != y->r || x->lam != y->lam) return false;
  return same_rep(x->a, y->a) && same_rep(x->b, y->b);
}

// ---- combinatorial helpers ----

namespace detail {

inline void multisets(int r, int n, const std::function<void(const Label&)>& emit) {
  Label cur(r);
  std::function<void(int, int)> rec = [&](int i, int lo) {
    if (i == r) {
      emit(cur);
      return;
    }
    for (int v = lo; v < n; ++v) {
      cur[i] = v;
      rec(i + 1, v);
    }
  };
  rec(0, 0);
}

inline void subsets(int r, int n, const std::function<void(const Label&)>& emit) {
  Label cur(r);
  std::function<void(int, int)> rec = [&](int i, int lo) {
    if (i == r) {
      emit(cur);
      return;
    }
    for (int v = lo; v <= n - (r - i); ++v) {
      cur[i] = v;
      rec(i + 1, v + 1);
    }
  };
  rec(0, 0);
}

inline Character char_mul(const Character& x, const Character& y) {
  Character z;
  for (const auto& [wx, cx] : x) {
    for (const auto& [wy, cy] : y) z[wx + wy] += cx * cy;
  }
  for (auto it = z.begin(); it != z.end();) it = it->second == 0 ? z.erase(it) : std::next(it);
  return z;
}

inline Character char_add(Character x, const Character& y, int sign = 1) {
  for (const auto& [w, c] : y) x[w] += sign * c;
  for (auto it = x.begin(); it != x.end();) it = it->second == 0 ? x.erase(it) : std::next(it);
  return x;
}

// Complete (h) or elementary (e) symmetric functions of the weights in ch, degrees 0..r.
inline std::vector<Character> sym_functions(const Character& ch, int r, bool elementary) {
  std::vector<Character> dp(r + 1);
  dp[0][0] = 1;
  for (const auto& [w, mult] : ch) {
    if (mult < 0) fail(ErrorKind::InvalidArgument, "negative weight multiplicity");
    auto cnt = static_cast<std::int64_t>(mult);
    for (std::int64_t rep = 0; rep < cnt; ++rep) {
      if (elementary) {
        for (int k = r; k >= 1; --k) {
          for (const auto& [u, c] : dp[k - 1]) dp[k][u + w] += c;
        }
      } else {
        for (int k = 1; k <= r; ++k) {
          for (const auto& [u, c] : dp[k - 1]) dp[k][u + w] += c;
        }
      }
    }
  }
  return dp;
}

// Schur functor character via Jacobi-Trudi on whichever of lam, lam' has fewer rows.
inline Character schur_character(const Partition& lam, const Character& ch) {
  if (lam.empty()) return Character{{0, 1}};
  Partition c = conjugate(lam);
  bool use_e = c.length() < lam.length();
  const Partition& mu = use_e ? c : lam;
  const int n = mu.length();
  int top = mu.first() + n;
  auto fn = sym_functions(ch, top, use_e);
  auto entry = [&](int i, int j) -> Character {
    int k = mu.parts[i] - i + j;
    if (k < 0 || k > top) return {};
    return fn[k];
  };
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Character total;
  do {
    Character term{{0, 1}};
    bool zero = false;
    for (int i = 0; i < n && !zero; ++i) {
      auto e = entry(i, perm[i]);
      if (e.empty()) zero = true;
      else term = char_mul(term, e);
    }
    if (!zero) total = char_add(total, term, permutation_sign(perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace detail

inline std::int64_t RepNode::label_length() const {
  switch (kind) {
    case Kind::E: return 1;
    case Kind::Dual:
    case Kind::ContraDual: return a->label_length();
    case Kind::Tensor: return 2;
    case Kind::SymUpper:
    case Kind::SymLower:
    case Kind::Wedge: return r;
    case Kind::Nabla:
    case Kind::ColumnWedge: return lam.size();
    case Kind::Delta: return impl->label_length();
    case Kind::DetPower: return 0;
  }
  return 0;
}

inline std::vector<Label> RepNode::enumerate() const {
  std::vector<Label> out;
  switch (kind) {
    case Kind::E: out = {{0}, {1}}; break;
    case Kind::Dual:
    case Kind::ContraDual: out = a->basis(); break;
    case Kind::Tensor: {
      int na = static_cast<int>(a->dimension()), nb = static_cast<int>(b->dimension());
      for (int i = 0; i < na; ++i) {
        for (int j = 0; j < nb; ++j) out.push_back({i, j});
      }
      break;
    }
    case Kind::SymUpper:
    case Kind::SymLower:
      detail::multisets(r, static_cast<int>(a->dimension()), [&](const Label& l) { out.push_back(l); });
      break;
    case Kind::Wedge:
      detail::subsets(r, static_cast<int>(a->dimension()), [&](const Label& l) { out.push_back(l); });
      break;
    case Kind::Nabla:
    case Kind::ColumnWedge: {
      auto tk = kind == Kind::Nabla ? TableauKind::SSYT : TableauKind::CSYT;
      out.reserve(static_cast<std::size_t>(dimension()));
      for_each_tableau(lam, static_cast<int>(a->dimension()), tk, [&](const std::vector<std::vector<int>>& cols) {
        Label w;
        for (const auto& c : cols) {
          for (int x : c) w.push_back(x - 1);
        }
        out.push_back(std::move(w));
      });
      break;
    }
    case Kind::Delta: out = impl->basis(); break;
    case Kind::DetPower: out = {Label{}}; break;
  }
  return out;
}

inline Character RepNode::compute_character() const {
  switch (kind) {
    case Kind::E: return {{-1, 1}, {1, 1}};
    case Kind::Dual: {
      Character c;
      for (const auto& [w, m] : a->character()) c[-w] = m;
      return c;
    }
    case Kind::ContraDual: return a->character();
    case Kind::Tensor: return detail::char_mul(a->character(), b->character());
    case Kind::SymUpper:
    case Kind::SymLower: return detail::sym_functions(a->character(), r, false)[r];
    case Kind::Wedge: return detail::sym_functions(a->character(), r, true)[r];
    case Kind::Nabla: return detail::schur_character(lam, a->character());
    case Kind::ColumnWedge: {
      Character c{{0, 1}};
      Partition cj = conjugate(lam);
      int maxlen = cj.first();
      auto es = detail::sym_functions(a->character(), maxlen, true);
      for (int len : cj.parts) c = detail::char_mul(c, es[len]);
      return c;
    }
    case Kind::Delta: return impl->character();
    case Kind::DetPower: return {{0, 1}};
  }
  return {};
}

inline std::int64_t RepNode::weight(const Label& l) const {
  switch (kind) {
    case Kind::E: return l.at(0) == 0 ? 1 : -1;
    case Kind::Dual: return -a->weight(l);
    case Kind::ContraDual: return a->weight(l);
    case Kind::Tensor: return a->basis_weights().at(l.at(0)) + b->basis_weights().at(l.at(1));
    case Kind::SymUpper:
    case Kind::SymLower:
    case Kind::Wedge:
    case Kind::Nabla:
    case Kind::ColumnWedge: {
      const auto& ws = a->basis_weights();
      std::int64_t s = 0;
      for (int i : l) s += ws.at(i);
      return s;
    }
    case Kind::Delta: return impl->weight(l);
    case Kind::DetPower: return 0;
  }
  return 0;
}

// ---- spec strings ----

inline std::string RepNode::spec() const {
  switch (kind) {
    case Kind::E: return "E";
    case Kind::Dual: return "dual(" + a->spec() + ")";
    case Kind::ContraDual: return "cdual(" + a->spec() + ")";
    case Kind::Tensor: return "tensor(" + a->spec() + "," + b->spec() + ")";
    case Kind::SymUpper: return "sym^" + std::to_string(r) + "(" + a->spec() + ")";
    case Kind::SymLower: return "sym_" + std::to_string(r) + "(" + a->spec() + ")";
    case Kind::Wedge: return "wedge^" + std::to_string(r) + "(" + a->spec() + ")";
    case Kind::Nabla: return "nabla[" + lam.to_string() + "](" + a->spec() + ")";
    case Kind::ColumnWedge: return "wedge[" + lam.to_string() + "](" + a->spec() + ")";
    case Kind::Delta: return "delta[" + lam.to_string() + "](" + a->spec() + ")";
    case Kind::DetPower: return "det^" + std::to_string(r);
  }
  return "?";
}

namespace detail {

class SpecParser {
 public:
  SpecParser(const std::string& s, Field f) : s_(s), f_(f) {}

  Rep parse() {
    Rep r = rep();
    skip();
    if (pos_ != s_.size()) error("unexpected trailing text");
    return r;
  }

 private:
  [[noreturn]] void error(const std::string& msg) const {
    fail(ErrorKind::ParseError, msg + " at position " + std::to_string(pos_) + " in rep spec '" + s_ + "'");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(const std::string& tok) {
    skip();
    if (s_.compare(pos_, tok.size(), tok) == 0) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }
  void expect(const std::string& tok) {
    if (!accept(tok)) error("expected '" + tok + "'");
  }
  int integer() {
    skip();
    bool braces = accept("{");
    skip();
    std::size_t start = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_ || (pos_ == start + 1 && !std::isdigit(static_cast<unsigned char>(s_[start])))) error("expected integer");
    int v = std::stoi(s_.substr(start, pos_ - start));
    if (braces) expect("}");
    return v;
  }
  Partition partition() {
    expect("[");
    std::size_t close = s_.find(']', pos_);
    if (close == std::string::npos) error("unterminated partition");
    std::string body = s_.substr(pos_, close - pos_);
    Partition p;
    try {
      p = parse_partition(body);
    } catch (const Error& e) {
      error(e.what());
    }
    pos_ = close + 1;
    return p;
  }
  Rep paren_rep() {
    expect("(");
    Rep r = rep();
    expect(")");
    return r;
  }
  Rep rep() {
    skip();
    if (accept("tensor")) {
      expect("(");
      Rep x = rep();
      expect(",");
      Rep y = rep();
      expect(")");
      return tensor(x, y);
    }
    if (accept("cdual")) return contra_dual(paren_rep());
    if (accept("dual")) return dual(paren_rep());
    if (accept("sym^")) {
      int r = integer();
      return sym_upper(r, paren_rep());
    }
    if (accept("sym_")) {
      int r = integer();
      return sym_lower(r, paren_rep());
    }
    if (accept("wedge^")) {
      int r = integer();
      return wedge(r, paren_rep());
    }
    if (accept("wedge")) {
      Partition p = partition();
      return column_wedge(p, paren_rep());
    }
    if (accept("nabla")) {
      Partition p = partition();
      return nabla(p, paren_rep());
    }
    if (accept("delta")) {
      Partition p = partition();
      return delta(p, paren_rep());
    }
    if (accept("det^")) {
      skip();
      if (accept("(")) {
        int k = integer();
        expect(")");
        return det_power(k, f_);
      }
      return det_power(integer(), f_);
    }
    if (accept("E")) return natural(f_);
    if (accept("(")) {
      Rep r = rep();
      expect(")");
      return r;
    }
    error("unknown constructor");
  }

  const std::string& s_;
  Field f_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Rep parse_rep(const std::string& spec, Field f) { return detail::SpecParser(spec, f).parse(); }

// ---- extreme labels ----

// Child basis indices ordered by weight, highest first (ties by index).
inline std::vector<int> indices_by_weight(const RepNode& v, bool highest_first) {
  const auto& ws = v.basis_weights();
  std::vector<int> idx(ws.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int x, int y) { return highest_first ? ws[x] > ws[y] : ws[x] < ws[y]; });
  return idx;
}

// A basis label of extreme (top or bottom) weight, built without enumerating the basis.
inline Label extreme_label(const Rep& rep, bool top) {
  switch (rep->kind) {
    case Kind::E: return {top ? 0 : 1};
    case Kind::Dual: return extreme_label(rep->a, !top);
    case Kind::ContraDual: return extreme_label(rep->a, top);
    case Kind::Tensor:
      return {static_cast<int>(rep->a->index_of(extreme_label(rep->a, top))),
              static_cast<int>(rep->b->index_of(extreme_label(rep->b, top)))};
    case Kind::SymUpper:
    case Kind::SymLower: return Label(rep->r, static_cast<int>(rep->a->index_of(extreme_label(rep->a, top))));
    case Kind::Wedge: {
      auto order = indices_by_weight(*rep->a, top);
      if (rep->r > static_cast<int>(order.size())) fail(ErrorKind::InvalidArgument, "exterior power is zero");
      Label l(order.begin(), order.begin() + rep->r);
      std::sort(l.begin(), l.end());
      return l;
    }
    case Kind::Nabla:
    case Kind::ColumnWedge: {
      auto order = indices_by_weight(*rep->a, top);
      Partition c = conjugate(rep->lam);
      Label w;
      for (int len : c.parts) {
        if (len > static_cast<int>(order.size())) fail(ErrorKind::InvalidArgument, "Schur functor is zero");
        Label col(order.begin(), order.begin() + len);
        std::sort(col.begin(), col.end());
        w.insert(w.end(), col.begin(), col.end());
      }
      return w;
    }
    case Kind::Delta: return extreme_label(rep->impl, top);
    case Kind::DetPower: return {};
  }
  return {};
}

// ---- label display ----

enum class Style { Unicode, Ascii };

namespace detail {

inline std::string superscript(std::int64_t n) {
  static const char* digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  std::string s = std::to_string(n), out;
  for (char c : s) out += c == '-' ? std::string("⁻") : std::string(digits[c - '0']);
  return out;
}

inline std::string power(std::int64_t n, Style st) {
  if (n == 1) return "";
  return st == Style::Unicode ? superscript(n) : "^" + std::to_string(n);
}

inline std::string tensor_sym(Style st) { return st == Style::Unicode ? "⊗" : "%"; }
inline std::string wedge_sym(Style st) { return st == Style::Unicode ? "∧" : "&"; }
inline std::string dot_sym(Style st) { return st == Style::Unicode ? "·" : "*"; }

// Whether a label string needs parentheses when used as a factor.
inline bool atomic_label(const std::string& s) {
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '(' || c == '|') ++depth;
    if (c == ')') --depth;
    if (depth == 0 && (c == ' ' || c == '%' || c == '&' || c == '*')) return false;
    if (depth == 0 && static_cast<unsigned char>(c) >= 0x80) {
      // multi-byte operator glyphs at top level
      for (const char* op : {"⊗", "∧", "·"}) {
        if (s.compare(i, std::strlen(op), op) == 0) return false;
      }
    }
  }
  return true;
}

inline std::string wrap(const std::string& s) { return atomic_label(s) ? s : "(" + s + ")"; }

inline std::string tableau_text(const Partition& lam, const Label& word) {
  std::vector<int> w(word.begin(), word.end());
  for (int& x : w) ++x;
  return Tableau::from_word(lam, w).to_string();
}

}  // namespace detail

inline std::string format_label(const Rep& rep, const Label& l, Style st = Style::Unicode);

inline std::string format_child(const Rep& child, int index, Style st) {
  return format_label(child, child->label(static_cast<std::size_t>(index)), st);
}

inline std::string format_label(const Rep& rep, const Label& l, Style st) {
  switch (rep->kind) {
    case Kind::E: return l.at(0) == 0 ? "X" : "Y";
    case Kind::Dual: return detail::wrap(format_label(rep->a, l, st)) + (st == Style::Unicode ? "^∨" : "^*");
    case Kind::ContraDual: return detail::wrap(format_label(rep->a, l, st)) + (st == Style::Unicode ? "^°" : "^o");
    case Kind::Tensor:
      return detail::wrap(format_child(rep->a, l[0], st)) + detail::tensor_sym(st) + detail::wrap(format_child(rep->b, l[1], st));
    case Kind::SymUpper: {
      if (rep->r == 0) return "1";
      if (rep->a->kind == Kind::E) {
        auto nx = std::count(l.begin(), l.end(), 0), ny = static_cast<long>(l.size()) - nx;
        std::string s;
        if (nx) s += "X" + detail::power(nx, st);
        if (ny) s += "Y" + detail::power(ny, st);
        return s;
      }
      std::string s;
      for (std::size_t k = 0; k < l.size(); ++k) {
        if (k) s += detail::dot_sym(st);
        s += detail::wrap(format_child(rep->a, l[k], st));
      }
      return s;
    }
    case Kind::SymLower: {
      if (rep->r == 0) return "1";
      std::string s = "(";
      for (std::size_t k = 0; k < l.size(); ++k) {
        if (k) s += detail::tensor_sym(st);
        s += detail::wrap(format_child(rep->a, l[k], st));
      }
      s += ")";
      bool constant = std::adjacent_find(l.begin(), l.end(), std::not_equal_to<int>()) == l.end();
      if (!constant) s += "_sym";
      return s;
    }
    case Kind::Wedge: {
      if (rep->r == 0) return "1";
      std::string s;
      for (std::size_t k = 0; k < l.size(); ++k) {
        if (k) s += detail::wedge_sym(st);
        s += detail::wrap(format_child(rep->a, l[k], st));
      }
      return s;
    }
    case Kind::Nabla: return "e(" + detail::tableau_text(rep->lam, l) + ")";
    case Kind::ColumnWedge: return "|" + detail::tableau_text(rep->lam, l) + "|";
    case Kind::Delta:
      return "e(" + detail::tableau_text(rep->lam, l) + ")" + (st == Style::Unicode ? "^∨" : "^*");
    case Kind::DetPower: return "det" + (rep->r == 1 ? std::string() : "^" + std::to_string(rep->r));
  }
  return "?";
}

// Human-readable name, e.g. "Sym^3 Sym_2 E".
inline std::string describe(const Rep& rep) {
  switch (rep->kind) {
    case Kind::E: return "E";
    case Kind::Dual: return "(" + describe(rep->a) + ")^*";
    case Kind::ContraDual: return "(" + describe(rep->a) + ")^o";
    case Kind::Tensor: return "(" + describe(rep->a) + " ⊗ " + describe(rep->b) + ")";
    case Kind::SymUpper: return "Sym^" + std::to_string(rep->r) + " " + describe(rep->a);
    case Kind::SymLower: return "Sym_" + std::to_string(rep->r) + " " + describe(rep->a);
    case Kind::Wedge: return "Λ^" + std::to_string(rep->r) + " " + describe(rep->a);
    case Kind::Nabla: return "∇^(" + rep->lam.to_string() + ") " + describe(rep->a);
    case Kind::ColumnWedge: return "Λ^(" + conjugate(rep->lam).to_string() + ") " + describe(rep->a);
    case Kind::Delta: return "Δ^(" + rep->lam.to_string() + ") " + describe(rep->a);
    case Kind::DetPower: return "det^" + std::to_string(rep->r);
  }
  return "?";
}

}  // namespace plethysm
