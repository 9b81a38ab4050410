#pragma once

// Printing and parsing of vectors in the notation of the basis labels.

#include <algorithm>
#include <cctype>
#include <cstring>
#include <string>
#include <vector>

#include "errors.hpp"
#include "field.hpp"
#include "linmap.hpp"
#include "rep.hpp"
#include "straighten.hpp"

namespace plethysm {

enum class VecStyle { Pretty, Ascii, Terms };

namespace detail {

inline std::string magnitude(const Elem& c) {
  std::string s = c.displays_negative() ? (-c).signed_string() : c.signed_string();
  return s;
}
inline std::string magnitude(const Poly& c) {
  std::string s = c.to_string();
  return c.coeffs().size() > 1 ? "(" + s + ")" : s;
}
inline bool negative(const Elem& c) { return c.displays_negative(); }
inline bool negative(const Poly&) { return false; }
inline std::string signed_text(const Elem& c) { return c.signed_string(); }
inline std::string signed_text(const Poly& c) { return c.to_string(); }

}  // namespace detail

template <class S>
std::string format_vector(const Rep& rep, const Terms<S>& v, VecStyle style = VecStyle::Pretty) {
  Style ls = style == VecStyle::Pretty ? Style::Unicode : Style::Ascii;
  if (v.empty()) return "0";
  std::vector<std::pair<Label, S>> terms(v.begin(), v.end());
  if (style == VecStyle::Terms) {
    std::string out;
    for (const auto& [l, c] : terms) {
      if (!out.empty()) out += "\n";
      out += detail::signed_text(c) + " * " + format_label(rep, l, ls);
    }
    return out;
  }
  std::stable_partition(terms.begin(), terms.end(), [](const auto& t) { return !detail::negative(t.second); });
  const std::string minus = style == VecStyle::Pretty ? "−" : "-";
  std::string out;
  bool first = true;
  for (const auto& [l, c] : terms) {
    bool neg = detail::negative(c);
    if (first) {
      if (neg) out += minus;
    } else {
      out += neg ? " " + minus + " " : " + ";
    }
    first = false;
    std::string mag = detail::magnitude(c);
    std::string lab = format_label(rep, l, ls);
    bool unit_label = lab == "1" || rep->kind == Kind::DetPower;
    if (mag == "1" && !unit_label) {
      out += lab;
    } else if (unit_label) {
      out += mag + (lab == "1" ? "" : (style == VecStyle::Pretty ? "·" : "*") + lab);
    } else {
      bool plain = mag.front() == '[' ||
                   std::all_of(mag.begin(), mag.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); });
      out += (plain ? mag : "(" + mag + ")") + lab;
    }
  }
  return out;
}

namespace detail {

using ZCombo = std::map<Label, std::int64_t>;

inline void zadd(ZCombo& c, const Label& l, std::int64_t x) {
  if (!x) return;
  auto& s = c[l];
  s += x;
  if (!s) c.erase(l);
}

inline ZCombo zproduct_sym(const std::vector<ZCombo>& factors) {
  ZCombo cur{{Label{}, 1}};
  for (const auto& f : factors) {
    ZCombo next;
    for (const auto& [l, c] : cur) {
      for (const auto& [k, x] : f) {
        Label m = l;
        m.insert(m.end(), k.begin(), k.end());
        std::sort(m.begin(), m.end());
        zadd(next, m, c * x);
      }
    }
    cur = std::move(next);
  }
  return cur;
}

class VectorParser {
 public:
  VectorParser(const std::string& text, const Rep& rep) : s_(text), rep_(rep) {}

  Terms<Elem> parse() {
    Field F = rep_->field;
    Terms<Elem> out;
    std::string t = strip(s_);
    if (t.empty() || t == "0") return out;
    if (is_tableau_text(t) && (rep_->kind == Kind::Nabla || rep_->kind == Kind::ColumnWedge || rep_->kind == Kind::Delta)) {
      for (const auto& [l, c] : tableau_label(rep_, t)) add_term(out, l, F.from_int(c));
      return out;
    }
    for (const auto& [sign, term] : split_terms(t)) {
      auto [coeff, rest] = split_coefficient(term);
      Elem k = coeff.empty() ? F.one() : F.parse_element(coeff);
      if (sign < 0) k = -k;
      std::size_t pos = 0;
      ZCombo c;
      std::string body = strip(rest);
      if (body.empty()) {
        if (rep_->dimension() == 1) c = ZCombo{{rep_->label(0), 1}};
        else fail(ErrorKind::ParseError, "term '" + term + "' has no basis label");
      } else {
        c = label(rep_, body, pos);
        skip(body, pos);
        if (pos != body.size()) fail(ErrorKind::ParseError, "could not parse '" + body.substr(pos) + "' in '" + term + "'");
      }
      for (const auto& [l, x] : c) add_term(out, l, k * F.from_int(x));
    }
    return out;
  }

  // Parse a single label expression of rep at pos.
  static ZCombo label(const Rep& rep, const std::string& s, std::size_t& pos) {
    std::size_t start = pos;
    try {
      return specific(rep, s, pos);
    } catch (const Error&) {
      pos = start;
      skip(s, pos);
      if (pos < s.size() && s[pos] == '(') {
        std::size_t p = pos + 1;
        ZCombo c = label(rep, s, p);
        skip(s, p);
        if (p < s.size() && s[p] == ')') {
          pos = p + 1;
          return c;
        }
      }
      throw;
    }
  }

 private:
  static bool is_tableau_text(const std::string& t) {
    if (t.empty()) return false;
    bool digit = false;
    for (char c : t) {
      if (std::isdigit(static_cast<unsigned char>(c))) digit = true;
      else if (c != ' ' && c != '/' && c != ',') return false;
    }
    return digit;
  }

  static void skip(const std::string& s, std::size_t& pos) {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  static bool accept(const std::string& s, std::size_t& pos, const std::string& tok) {
    skip(s, pos);
    if (s.compare(pos, tok.size(), tok) == 0) {
      pos += tok.size();
      return true;
    }
    return false;
  }
  static bool accept_any(const std::string& s, std::size_t& pos, std::initializer_list<const char*> toks) {
    for (const char* t : toks) {
      if (accept(s, pos, t)) return true;
    }
    return false;
  }
  [[noreturn]] static void error(const std::string& s, std::size_t pos, const std::string& msg) {
    fail(ErrorKind::ParseError, msg + " at position " + std::to_string(pos) + " in '" + s + "'");
  }

  // Exponent after a letter: ^n, ^{n}, or unicode superscripts; default 1.
  static int exponent(const std::string& s, std::size_t& pos) {
    static const char* sup[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
    if (pos < s.size() && s[pos] == '^') {
      std::size_t p = pos + 1;
      bool brace = p < s.size() && s[p] == '{';
      if (brace) ++p;
      std::size_t st = p;
      while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
      if (p == st) return 1;  // a suffix such as ^* is not an exponent
      int v = std::stoi(s.substr(st, p - st));
      if (brace) {
        if (p >= s.size() || s[p] != '}') error(s, p, "expected '}'");
        ++p;
      }
      pos = p;
      return v;
    }
    int v = 0;
    bool any = false;
    for (;;) {
      bool hit = false;
      for (int d = 0; d < 10; ++d) {
        std::size_t n = std::strlen(sup[d]);
        if (s.compare(pos, n, sup[d]) == 0) {
          v = v * 10 + d;
          pos += n;
          hit = any = true;
          break;
        }
      }
      if (!hit) break;
    }
    return any ? v : 1;
  }

  static std::vector<int> int_list(const std::string& s, std::size_t& pos) {
    if (!accept(s, pos, "(")) error(s, pos, "expected '('");
    std::size_t close = s.find(')', pos);
    if (close == std::string::npos) error(s, pos, "expected ')'");
    std::vector<int> out;
    for (const auto& x : split(s.substr(pos, close - pos), ',')) out.push_back(static_cast<int>(parse_int(x, "index")));
    pos = close + 1;
    return out;
  }

  static std::string bracketed(const std::string& s, std::size_t& pos, const std::string& open, const std::string& close) {
    if (!accept(s, pos, open)) error(s, pos, "expected '" + open + "'");
    std::size_t end = s.find(close, pos);
    if (end == std::string::npos) error(s, pos, "expected '" + close + "'");
    std::string body = s.substr(pos, end - pos);
    pos = end + close.size();
    return body;
  }

  static ZCombo single(const Label& l, std::int64_t c = 1) {
    ZCombo z;
    zadd(z, l, c);
    return z;
  }

  static ZCombo tableau_label(const Rep& rep, const std::string& text) {
    Tableau t = parse_tableau(text);
    Rep target = rep->kind == Kind::Delta ? rep->impl->a : rep;
    if (t.shape != target->lam) fail(ErrorKind::ParseError, "tableau shape does not match the rep");
    int n = static_cast<int>(target->a->dimension());
    Label w;
    for (int x : t.word()) {
      if (x < 1 || x > n) fail(ErrorKind::EntryOutOfRange, "tableau entry out of range");
      w.push_back(x - 1);
    }
    ZCombo out;
    if (target->kind == Kind::ColumnWedge) {
      // column sort only; equal columns are distinct tensor factors here
      auto res = column_sort(t);
      if (!res.ok) return out;
      Label sw;
      for (int x : res.tableau.word()) sw.push_back(x - 1);
      return single(sw, res.sign);
    }
    for (const auto& [l, c] : straightener_for(target->lam, n, 0).straighten(w)) zadd(out, l, c);
    return out;
  }

  static std::vector<Rep> tensor_leaves(const Rep& rep) {
    if (rep->kind != Kind::Tensor) return {rep};
    auto x = tensor_leaves(rep->a), y = tensor_leaves(rep->b);
    x.insert(x.end(), y.begin(), y.end());
    return x;
  }

  // Label of a tensor tree from leaf labels given in order.
  static Label tensor_assemble(const Rep& rep, const std::vector<Label>& leaves, std::size_t& k) {
    if (rep->kind != Kind::Tensor) return leaves.at(k++);
    Label la = tensor_assemble(rep->a, leaves, k);
    Label lb = tensor_assemble(rep->b, leaves, k);
    return {static_cast<int>(rep->a->index_of(la)), static_cast<int>(rep->b->index_of(lb))};
  }

  static Label monomial_label(int n, int xexp) {
    if (xexp < 0 || xexp > n) fail(ErrorKind::EntryOutOfRange, "exponent out of range");
    Label l(n, 0);
    for (int k = xexp; k < n; ++k) l[k] = 1;
    return l;
  }

  static bool is_sym_upper_E(const Rep& r) { return r->kind == Kind::SymUpper && r->a->kind == Kind::E; }

  static ZCombo specific(const Rep& rep, const std::string& s, std::size_t& pos) {
    skip(s, pos);
    switch (rep->kind) {
      case Kind::E: {
        if (accept(s, pos, "X")) return single({0});
        if (accept(s, pos, "Y")) return single({1});
        error(s, pos, "expected X or Y");
      }
      case Kind::Dual:
      case Kind::ContraDual: {
        ZCombo c = label(rep->a, s, pos);
        accept_any(s, pos, {"^∨", "^*", "^°", "^o", "∨", "°"});
        return c;
      }
      case Kind::Delta: {
        std::string body;
        if (s.compare(pos, 2, "e(") == 0) {
          ++pos;
          body = bracketed(s, pos, "(", ")");
        } else {
          std::size_t p = pos;
          while (p < s.size() && (std::isdigit(static_cast<unsigned char>(s[p])) || s[p] == ' ' || s[p] == '/' || s[p] == ',')) ++p;
          body = s.substr(pos, p - pos);
          pos = p;
        }
        if (!is_tableau_text(strip(body))) error(s, pos, "expected a tableau");
        ZCombo c = tableau_label(rep, body);
        accept_any(s, pos, {"^∨", "^*", "∨"});
        return c;
      }
      case Kind::Nabla: {
        if (s.compare(pos, 2, "e(") != 0) error(s, pos, "expected e(...)");
        ++pos;
        return tableau_label(rep, bracketed(s, pos, "(", ")"));
      }
      case Kind::ColumnWedge: {
        return tableau_label(rep, bracketed(s, pos, "|", "|"));
      }
      case Kind::DetPower: {
        if (accept(s, pos, "det")) {
          if (pos < s.size() && s[pos] == '^') {
            ++pos;
            std::size_t st = pos;
            if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (st == pos) error(s, pos, "expected exponent");
          }
          return single({});
        }
        if (accept(s, pos, "1")) return single({});
        error(s, pos, "expected det");
      }
      case Kind::Tensor: {
        std::size_t p = pos;
        if (accept_any(s, p, {"F_⊗", "F_tensor", "F_%"})) {
          auto exps = int_list(s, p);
          auto leaves = tensor_leaves(rep);
          if (exps.size() != leaves.size()) error(s, p, "wrong number of exponents");
          std::vector<Label> ls;
          for (std::size_t k = 0; k < leaves.size(); ++k) {
            if (!is_sym_upper_E(leaves[k])) error(s, p, "F_⊗ needs tensor factors Sym^l E");
            ls.push_back(monomial_label(leaves[k]->r, exps[k]));
          }
          std::size_t k = 0;
          pos = p;
          return single(tensor_assemble(rep, ls, k));
        }
        ZCombo x = label(rep->a, s, pos);
        if (!accept_any(s, pos, {"⊗", "%"})) error(s, pos, "expected ⊗");
        ZCombo y = label(rep->b, s, pos);
        ZCombo out;
        for (const auto& [la, ca] : x) {
          for (const auto& [lb, cb] : y) {
            zadd(out, {static_cast<int>(rep->a->index_of(la)), static_cast<int>(rep->b->index_of(lb))}, ca * cb);
          }
        }
        return out;
      }
      case Kind::SymUpper: {
        if (rep->r == 0) {
          if (accept(s, pos, "1")) return single({});
          error(s, pos, "expected 1");
        }
        if (rep->a->kind == Kind::E) {
          int nx = 0, ny = 0;
          bool any = false;
          for (;;) {
            std::size_t p = pos;
            if (p < s.size() && s[p] == 'X') {
              ++p;
              nx += exponent(s, p);
            } else if (p < s.size() && s[p] == 'Y') {
              ++p;
              ny += exponent(s, p);
            } else {
              break;
            }
            pos = p;
            any = true;
          }
          if (!any) error(s, pos, "expected a monomial in X, Y");
          if (nx + ny != rep->r) error(s, pos, "monomial has the wrong degree");
          return single(monomial_label(rep->r, nx));
        }
        std::vector<ZCombo> factors;
        for (;;) {
          ZCombo c = label(rep->a, s, pos);
          ZCombo idx;
          for (const auto& [l, x] : c) zadd(idx, {static_cast<int>(rep->a->index_of(l))}, x);
          int times = 1;
          std::size_t p = pos;
          if (p < s.size() && s[p] == '^' && p + 1 < s.size() && std::isdigit(static_cast<unsigned char>(s[p + 1]))) {
            times = exponent(s, p);
            pos = p;
          }
          for (int t = 0; t < times; ++t) factors.push_back(idx);
          if (!accept_any(s, pos, {"·", "*", "⋅"})) break;
        }
        if (static_cast<int>(factors.size()) != rep->r) error(s, pos, "product has the wrong number of factors");
        return zproduct_sym(factors);
      }
      case Kind::SymLower: {
        std::size_t p = pos;
        if (accept(s, p, "F_sym")) {
          if (!is_sym_upper_E(rep->a)) error(s, p, "F_sym needs Sym_m Sym^l E");
          auto exps = int_list(s, p);
          if (static_cast<int>(exps.size()) != rep->r) error(s, p, "wrong number of exponents");
          Label l;
          for (int e : exps) l.push_back(static_cast<int>(rep->a->index_of(monomial_label(rep->a->r, e))));
          std::sort(l.begin(), l.end());
          pos = p;
          return single(l);
        }
        if (rep->r == 0) {
          if (accept(s, pos, "1")) return single({});
          error(s, pos, "expected 1");
        }
        if (!accept(s, pos, "(")) {
          if (rep->r == 1) {
            ZCombo c = label(rep->a, s, pos);
            ZCombo out;
            for (const auto& [l, x] : c) zadd(out, {static_cast<int>(rep->a->index_of(l))}, x);
            return out;
          }
          error(s, pos, "expected '('");
        }
        Label l;
        std::int64_t coeff = 1;
        for (;;) {
          ZCombo c = label(rep->a, s, pos);
          if (c.size() != 1) error(s, pos, "symmetrised factors must be basis vectors");
          l.push_back(static_cast<int>(rep->a->index_of(c.begin()->first)));
          coeff *= c.begin()->second;
          if (!accept_any(s, pos, {"⊗", "%"})) break;
        }
        if (!accept(s, pos, ")")) error(s, pos, "expected ')'");
        accept(s, pos, "_sym");
        if (static_cast<int>(l.size()) != rep->r) error(s, pos, "wrong number of tensor factors");
        std::sort(l.begin(), l.end());
        return single(l, coeff);
      }
      case Kind::Wedge: {
        std::size_t p = pos;
        if (accept_any(s, p, {"F_∧", "F_wedge", "F_&"})) {
          if (!is_sym_upper_E(rep->a)) error(s, p, "F_∧ needs a wedge power of Sym^n E");
          auto exps = int_list(s, p);
          if (static_cast<int>(exps.size()) != rep->r) error(s, p, "wrong number of exponents");
          std::vector<int> idx;
          for (int e : exps) idx.push_back(static_cast<int>(rep->a->index_of(monomial_label(rep->a->r, e))));
          int sg = sort_sign(idx);
          pos = p;
          if (sg == 0) return {};
          return single(Label(idx.begin(), idx.end()), sg);
        }
        if (rep->r == 0) {
          if (accept(s, pos, "1")) return single({});
          error(s, pos, "expected 1");
        }
        ZCombo cur{{Label{}, 1}};
        int count = 0;
        for (;;) {
          ZCombo c = label(rep->a, s, pos);
          ZCombo next;
          for (const auto& [l, x] : cur) {
            for (const auto& [k, y] : c) {
              int idx = static_cast<int>(rep->a->index_of(k));
              std::vector<int> m(l.begin(), l.end());
              m.push_back(idx);
              int sg = sort_sign(m);
              if (sg) zadd(next, Label(m.begin(), m.end()), sg * x * y);
            }
          }
          cur = std::move(next);
          ++count;
          if (!accept_any(s, pos, {"∧", "&"})) break;
        }
        if (count != rep->r) error(s, pos, "wedge has the wrong number of factors");
        return cur;
      }
    }
    error(s, pos, "unsupported rep");
  }

  // Split at top-level + and - signs.
  static std::vector<std::pair<int, std::string>> split_terms(const std::string& t) {
    std::vector<std::pair<int, std::string>> out;
    int depth = 0;
    bool in_bar = false;
    int sign = 1;
    std::string cur;
    auto flush = [&] {
      if (!strip(cur).empty()) out.emplace_back(sign, strip(cur));
      cur.clear();
    };
    for (std::size_t i = 0; i < t.size();) {
      char c = t[i];
      if (c == '(' || c == '[' || c == '{') ++depth;
      if (c == ')' || c == ']' || c == '}') --depth;
      if (c == '|') in_bar = !in_bar;
      bool top = depth == 0 && !in_bar;
      bool after_caret = i > 0 && t[i - 1] == '^';
      if (top && !after_caret && (c == '+' || c == '-')) {
        flush();
        sign = c == '-' ? -1 : 1;
        ++i;
        continue;
      }
      if (top && t.compare(i, 3, "−") == 0) {
        flush();
        sign = -1;
        i += 3;
        continue;
      }
      cur += c;
      ++i;
    }
    flush();
    if (out.empty()) fail(ErrorKind::ParseError, "empty vector expression");
    return out;
  }

  // Leading coefficient (integer, fraction, or bracketed list), optionally followed by '*'.
  static std::pair<std::string, std::string> split_coefficient(const std::string& term) {
    std::size_t p = 0;
    if (p < term.size() && term[p] == '[') {
      std::size_t close = term.find(']');
      if (close == std::string::npos) fail(ErrorKind::ParseError, "unterminated coefficient");
      p = close + 1;
    } else {
      while (p < term.size() && std::isdigit(static_cast<unsigned char>(term[p]))) ++p;
      if (p > 0 && p < term.size() && term[p] == '/') {
        std::size_t q = p + 1;
        while (q < term.size() && std::isdigit(static_cast<unsigned char>(term[q]))) ++q;
        if (q > p + 1) p = q;
      }
    }
    std::string coeff = term.substr(0, p);
    std::string rest = term.substr(p);
    std::size_t r = 0;
    skip(rest, r);
    const std::string dot = "·";
    if (!coeff.empty() && r < rest.size() && rest[r] == '*') {
      ++r;
    } else if (!coeff.empty() && rest.compare(r, dot.size(), dot) == 0) {
      r += dot.size();
    }
    return {coeff, rest.substr(r)};
  }

  const std::string& s_;
  Rep rep_;
};

}  // namespace detail

inline Terms<Elem> parse_vector(const Rep& rep, const std::string& text) { return detail::VectorParser(text, rep).parse(); }

// Parse one basis label, which must denote a single basis vector with coefficient 1.
inline Label parse_label(const Rep& rep, const std::string& text) {
  auto v = parse_vector(rep, text);
  if (v.size() != 1 || !v.begin()->second.is_one()) fail(ErrorKind::ParseError, "'" + text + "' is not a basis label");
  return v.begin()->first;
}

}  // namespace plethysm
