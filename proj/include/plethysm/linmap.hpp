#pragma once

// Linear maps between reps, functorial constructions, and the GL2 action.

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "errors.hpp"
#include "field.hpp"
#include "linalg.hpp"
#include "rep.hpp"
#include "straighten.hpp"

namespace plethysm {

// a + b*eps with eps^2 = 0; used for the infinitesimal action.
struct DualNum {
  Elem a, b;
  bool is_zero() const { return a.is_zero() && b.is_zero(); }
  friend DualNum operator+(const DualNum& x, const DualNum& y) { return {x.a + y.a, x.b + y.b}; }
  friend DualNum operator-(const DualNum& x) { return {-x.a, -x.b}; }
  friend DualNum operator-(const DualNum& x, const DualNum& y) { return {x.a - y.a, x.b - y.b}; }
  friend DualNum operator*(const DualNum& x, const DualNum& y) { return {x.a * y.a, x.a * y.b + x.b * y.a}; }
  DualNum& operator+=(const DualNum& y) { return *this = *this + y; }
  DualNum& operator*=(const DualNum& y) { return *this = *this * y; }
  friend bool operator==(const DualNum& x, const DualNum& y) { return x.a == y.a && x.b == y.b; }
};

template <>
struct Ring<DualNum> {
  Field F;
  DualNum zero() const { return {F.zero(), F.zero()}; }
  DualNum one() const { return {F.one(), F.zero()}; }
  DualNum from_int(std::int64_t n) const { return {F.from_int(n), F.zero()}; }
  DualNum lift(const Elem& e) const { return {e, F.zero()}; }
  DualNum binomial(std::int64_t n, std::int64_t k) const { return {F.binomial(n, k), F.zero()}; }
};

inline std::string scalar_string(const DualNum& x) { return x.a.to_string() + "+" + x.b.to_string() + "e"; }

inline Elem invert_scalar(const Elem& x) { return x.inverse(); }
inline Poly invert_scalar(const Poly& x) {
  if (x.degree() != 0) fail(ErrorKind::SingularMatrix, "determinant is not a unit polynomial");
  return Poly::constant(x.coeff(0).inverse());
}
inline DualNum invert_scalar(const DualNum& x) {
  Elem ia = x.a.inverse();
  return {ia, -(x.b * ia * ia)};
}

template <class S>
S scalar_pow(const S& x, int k, const Ring<S>& R) {
  S base = k < 0 ? invert_scalar(x) : x;
  S out = R.one();
  for (int i = 0; i < std::abs(k); ++i) out = out * base;
  return out;
}

// 2x2 matrix acting on E = <X, Y>: g.X = aX + cY, g.Y = bX + dY.
template <class S>
struct Mat2 {
  S a, b, c, d;
  S det() const { return a * d - b * c; }
  Mat2 transpose() const { return {a, c, b, d}; }
  Mat2 inverse() const {
    S dt = det();
    if (dt.is_zero()) fail(ErrorKind::SingularMatrix, "group element is singular");
    S i = invert_scalar(dt);
    return {d * i, -(b * i), -(c * i), a * i};
  }
  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  friend bool operator==(const Mat2& x, const Mat2& y) { return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d; }
};

using GroupElement = Mat2<Elem>;

inline GroupElement group_element(const Elem& a, const Elem& b, const Elem& c, const Elem& d) {
  GroupElement g{a, b, c, d};
  if (g.det().is_zero()) fail(ErrorKind::SingularMatrix, "group element is singular");
  return g;
}
inline GroupElement lower_unipotent(const Elem& gamma) {
  Field f = gamma.field();
  return {f.one(), f.zero(), gamma, f.one()};
}
inline GroupElement weyl_element(Field f) { return {f.zero(), f.one(), -f.one(), f.zero()}; }
inline Mat2<Poly> symbolic_lower_unipotent(Field f) {
  return {Poly::constant(f.one()), Poly(f), Poly::gamma(f), Poly::constant(f.one())};
}
template <class S>
Mat2<S> lift_matrix(const GroupElement& g, const Ring<S>& R) {
  return {R.lift(g.a), R.lift(g.b), R.lift(g.c), R.lift(g.d)};
}

// "a,b;c,d", "J", "M(γ)" / "M(g0)", "I".
inline GroupElement parse_group_element(const std::string& text, Field f) {
  std::string t = detail::strip(text);
  if (t == "J") return weyl_element(f);
  if (t == "I" || t == "1") return {f.one(), f.zero(), f.zero(), f.one()};
  if (t.size() > 3 && t[0] == 'M' && t[1] == '(' && t.back() == ')') return lower_unipotent(f.parse_element(t.substr(2, t.size() - 3)));
  auto rows = detail::split(t, ';');
  if (rows.size() != 2) fail(ErrorKind::ParseError, "group element must look like 'a,b;c,d'");
  std::vector<Elem> e;
  for (const auto& r : rows) {
    auto xs = detail::split(r, ',');
    if (f.degree() > 1) {
      // extension field entries are bracketed lists that contain commas themselves
      xs.clear();
      int depth = 0;
      std::string cur;
      for (char ch : r) {
        if (ch == '[') ++depth;
        if (ch == ']') --depth;
        if (ch == ',' && depth == 0) {
          xs.push_back(cur);
          cur.clear();
        } else {
          cur += ch;
        }
      }
      xs.push_back(cur);
    }
    if (xs.size() != 2) fail(ErrorKind::ParseError, "group element rows need two entries");
    for (const auto& x : xs) e.push_back(f.parse_element(x));
  }
  return group_element(e[0], e[1], e[2], e[3]);
}

// ---- sparse vectors ----

template <class S>
using Terms = std::map<Label, S>;

template <class S>
void add_term(Terms<S>& t, const Label& l, const S& c) {
  if (c.is_zero()) return;
  auto it = t.find(l);
  if (it == t.end()) {
    t.emplace(l, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) t.erase(it);
  }
}

template <class S>
Terms<S> scale(const Terms<S>& v, const S& c) {
  Terms<S> out;
  if (c.is_zero()) return out;
  for (const auto& [l, x] : v) {
    S y = x * c;
    if (!y.is_zero()) out.emplace(l, y);
  }
  return out;
}

template <class S>
Terms<S> add(const Terms<S>& x, const Terms<S>& y) {
  Terms<S> out = x;
  for (const auto& [l, c] : y) add_term(out, l, c);
  return out;
}

// A vector of a given rep.
template <class S>
struct Vector {
  Rep rep;
  Terms<S> coeffs;
  friend bool operator==(const Vector& x, const Vector& y) { return same_rep(x.rep, y.rep) && x.coeffs == y.coeffs; }
};

// ---- linear maps ----

template <class S>
class LinearMap {
 public:
  using Column = Terms<S>;
  using Gen = std::function<Column(const Label&)>;

  LinearMap(Rep dom, Rep cod, Ring<S> ring, Gen gen, int det_twist = 0)
      : det_twist(det_twist), dom_(std::move(dom)), cod_(std::move(cod)), ring_(ring), gen_(std::move(gen)) {}

  const Rep& domain() const { return dom_; }
  const Rep& codomain() const { return cod_; }
  const Ring<S>& ring() const { return ring_; }

  const Column& column(const Label& l) const {
    {
      std::lock_guard<std::mutex> g(mu_);
      auto it = cache_.find(l);
      if (it != cache_.end()) return it->second;
    }
    Column c = gen_(l);
    std::lock_guard<std::mutex> g(mu_);
    return cache_.emplace(l, std::move(c)).first->second;
  }
  const Column& column_at(std::size_t i) const { return column(dom_->label(i)); }

  Terms<S> apply(const Terms<S>& v) const {
    Terms<S> out;
    for (const auto& [l, c] : v) {
      for (const auto& [m, x] : column(l)) add_term(out, m, c * x);
    }
    return out;
  }

  // phi(g.x) = det(g)^det_twist * g.phi(x)
  const int det_twist;

 private:
  Rep dom_, cod_;
  Ring<S> ring_;
  Gen gen_;
  mutable std::mutex mu_;
  mutable std::unordered_map<Label, Column, VectorHash> cache_;
};

template <class S>
using MapPtr = std::shared_ptr<const LinearMap<S>>;

template <class S>
MapPtr<S> make_map(Rep dom, Rep cod, Ring<S> ring, typename LinearMap<S>::Gen gen, int det_twist = 0) {
  return std::make_shared<LinearMap<S>>(std::move(dom), std::move(cod), ring, std::move(gen), det_twist);
}

template <class S>
Matrix<S> to_matrix(const LinearMap<S>& f) {
  const auto& cb = f.codomain()->basis();
  const auto& db = f.domain()->basis();
  Matrix<S> m(cb.size(), db.size(), f.ring().zero());
  for (std::size_t j = 0; j < db.size(); ++j) {
    for (const auto& [l, x] : f.column(db[j])) m(f.codomain()->index_of(l), j) = x;
  }
  return m;
}

template <class S>
MapPtr<S> compose(const MapPtr<S>& g, const MapPtr<S>& f) {
  if (f->codomain()->dimension() != g->domain()->dimension()) fail(ErrorKind::InvalidArgument, "maps do not compose");
  return make_map<S>(f->domain(), g->codomain(), f->ring(), [f, g](const Label& l) {
    // f's codomain and g's domain are identified index by index
    Terms<S> mid;
    for (const auto& [m, x] : f->column(l)) {
      add_term(mid, g->domain()->label(f->codomain()->index_of(m)), x);
    }
    return g->apply(mid);
  }, f->det_twist + g->det_twist);
}

// Identifies two reps whose canonical bases correspond index by index.
template <class S>
MapPtr<S> relabel_map(const Rep& dom, const Rep& cod, const Ring<S>& R) {
  if (dom->dimension() != cod->dimension()) fail(ErrorKind::InvalidArgument, "relabel between reps of different dimension");
  return make_map<S>(dom, cod, R, [dom, cod, R](const Label& l) {
    return Terms<S>{{cod->label(dom->index_of(l)), R.one()}};
  });
}

template <class S>
MapPtr<S> identity_map(const Rep& rep, const Ring<S>& R) {
  return make_map<S>(rep, rep, R, [R](const Label& l) { return Terms<S>{{l, R.one()}}; });
}

template <class S>
MapPtr<S> scaled_map(const MapPtr<S>& f, const S& c) {
  return make_map<S>(f->domain(), f->codomain(), f->ring(), [f, c](const Label& l) { return scale(f->column(l), c); },
                     f->det_twist);
}

// Columns of f by domain index, entries by codomain index.
template <class S>
using IndexColumns = std::vector<std::vector<std::pair<int, S>>>;

template <class S>
IndexColumns<S> index_columns(const LinearMap<S>& f) {
  const auto& db = f.domain()->basis();
  IndexColumns<S> cols(db.size());
  for (std::size_t i = 0; i < db.size(); ++i) {
    for (const auto& [l, x] : f.column(db[i])) cols[i].emplace_back(static_cast<int>(f.codomain()->index_of(l)), x);
  }
  return cols;
}

template <class S>
IndexColumns<S> index_rows(const LinearMap<S>& f) {
  auto cols = index_columns(f);
  IndexColumns<S> rows(static_cast<std::size_t>(f.codomain()->dimension()));
  for (std::size_t j = 0; j < cols.size(); ++j) {
    for (const auto& [i, x] : cols[j]) rows[i].emplace_back(static_cast<int>(j), x);
  }
  return rows;
}

// Transpose of f: A -> B, as a map from dom (basis matching B) to cod (basis matching A).
template <class S>
MapPtr<S> transpose_map(const MapPtr<S>& f, const Rep& dom, const Rep& cod, int det_twist = 0) {
  if (dom->dimension() != f->codomain()->dimension() || cod->dimension() != f->domain()->dimension()) {
    fail(ErrorKind::InvalidArgument, "transpose between reps of wrong dimension");
  }
  auto rows = std::make_shared<std::once_flag>();
  auto data = std::make_shared<IndexColumns<S>>();
  return make_map<S>(dom, cod, f->ring(), [f, dom, cod, rows, data](const Label& l) {
    std::call_once(*rows, [&] { *data = index_rows(*f); });
    Terms<S> out;
    for (const auto& [j, x] : (*data)[dom->index_of(l)]) out.emplace(cod->label(j), x);
    return out;
  }, det_twist);
}

// The transpose as a map between the dual reps; same twist.
template <class S>
MapPtr<S> dual_map(const MapPtr<S>& f) {
  return transpose_map(f, dual(f->codomain()), dual(f->domain()), f->det_twist);
}

// The transpose between contravariant duals; the twist changes sign.
template <class S>
MapPtr<S> contra_dual_map(const MapPtr<S>& f) {
  return transpose_map(f, contra_dual(f->codomain()), contra_dual(f->domain()), -f->det_twist);
}

namespace detail {

// Multiply out a list of index-columns into sorted multisets (symmetric product).
template <class S>
Terms<S> sym_product(const std::vector<const std::vector<std::pair<int, S>>*>& factors, const Ring<S>& R) {
  Terms<S> cur{{Label{}, R.one()}};
  for (const auto* col : factors) {
    Terms<S> next;
    for (const auto& [l, c] : cur) {
      for (const auto& [k, x] : *col) {
        Label m = l;
        m.insert(std::upper_bound(m.begin(), m.end(), k), k);
        add_term(next, m, c * x);
      }
    }
    cur = std::move(next);
  }
  return cur;
}

// Multiply out into strictly increasing index sets with the sign of sorting.
template <class S>
Terms<S> wedge_product(const std::vector<const std::vector<std::pair<int, S>>*>& factors, const Ring<S>& R) {
  Terms<S> cur{{Label{}, R.one()}};
  for (const auto* col : factors) {
    Terms<S> next;
    for (const auto& [l, c] : cur) {
      for (const auto& [k, x] : *col) {
        auto pos = std::lower_bound(l.begin(), l.end(), k);
        if (pos != l.end() && *pos == k) continue;
        std::size_t greater = static_cast<std::size_t>(l.end() - pos);
        Label m = l;
        m.insert(m.begin() + (pos - l.begin()), k);
        S y = c * x;
        add_term(next, m, (greater % 2) ? -y : y);
      }
    }
    cur = std::move(next);
  }
  return cur;
}

}  // namespace detail

template <class S>
MapPtr<S> tensor_map(const MapPtr<S>& f, const MapPtr<S>& g, const Rep& dom, const Rep& cod) {
  auto fc = std::make_shared<IndexColumns<S>>(index_columns(*f));
  auto gc = std::make_shared<IndexColumns<S>>(index_columns(*g));
  return make_map<S>(dom, cod, f->ring(), [fc, gc](const Label& l) {
    Terms<S> out;
    for (const auto& [i, x] : (*fc)[l.at(0)]) {
      for (const auto& [j, y] : (*gc)[l.at(1)]) add_term(out, Label{i, j}, x * y);
    }
    return out;
  });
}

template <class S>
MapPtr<S> sym_upper_map(int r, const MapPtr<S>& f, const Rep& dom, const Rep& cod) {
  auto fc = std::make_shared<IndexColumns<S>>(index_columns(*f));
  Ring<S> R = f->ring();
  (void)r;
  return make_map<S>(dom, cod, R, [fc, R](const Label& l) {
    std::vector<const std::vector<std::pair<int, S>>*> fs;
    for (int i : l) fs.push_back(&(*fc)[i]);
    return detail::sym_product(fs, R);
  });
}

// Sym_r f, via the identity Sym_r(f) = (Sym^r(f^T))^T on orbit-sum bases.
template <class S>
MapPtr<S> sym_lower_map(int r, const MapPtr<S>& f, const Rep& dom, const Rep& cod) {
  Ring<S> R = f->ring();
  auto once = std::make_shared<std::once_flag>();
  auto cols = std::make_shared<std::map<Label, Terms<S>>>();
  (void)r;
  return make_map<S>(dom, cod, R, [f, cod, R, once, cols](const Label& l) {
    std::call_once(*once, [&] {
      auto rows = index_rows(*f);
      for (const auto& w : cod->basis()) {
        std::vector<const std::vector<std::pair<int, S>>*> fs;
        for (int b : w) fs.push_back(&rows[b]);
        for (const auto& [u, x] : detail::sym_product(fs, R)) (*cols)[u].emplace(w, x);
      }
    });
    auto it = cols->find(l);
    return it == cols->end() ? Terms<S>{} : it->second;
  });
}

template <class S>
MapPtr<S> wedge_map(int r, const MapPtr<S>& f, const Rep& dom, const Rep& cod) {
  auto fc = std::make_shared<IndexColumns<S>>(index_columns(*f));
  Ring<S> R = f->ring();
  (void)r;
  return make_map<S>(dom, cod, R, [fc, R](const Label& l) {
    std::vector<const std::vector<std::pair<int, S>>*> fs;
    for (int i : l) fs.push_back(&(*fc)[i]);
    return detail::wedge_product(fs, R);
  });
}

namespace detail {

// Images of the columns of a word under f, each as a combination of increasing index sets.
template <class S>
std::vector<Terms<S>> column_images(const Label& word, const std::vector<int>& lens, const IndexColumns<S>& fc,
                                    const Ring<S>& R) {
  std::vector<Terms<S>> out;
  std::size_t off = 0;
  for (int len : lens) {
    std::vector<const std::vector<std::pair<int, S>>*> fs;
    for (int k = 0; k < len; ++k) fs.push_back(&fc[word[off + k]]);
    out.push_back(wedge_product(fs, R));
    off += len;
  }
  return out;
}

template <class S>
void for_each_column_product(const std::vector<Terms<S>>& cols, const Ring<S>& R,
                             const std::function<void(const Label&, const S&)>& emit) {
  Label word;
  std::function<void(std::size_t, const S&)> rec = [&](std::size_t j, const S& c) {
    if (j == cols.size()) {
      emit(word, c);
      return;
    }
    for (const auto& [l, x] : cols[j]) {
      std::size_t before = word.size();
      word.insert(word.end(), l.begin(), l.end());
      rec(j + 1, c * x);
      word.resize(before);
    }
  };
  rec(0, R.one());
}

}  // namespace detail

// Functorial map on column-wise exterior powers.
template <class S>
MapPtr<S> column_wedge_map(const Partition& lam, const MapPtr<S>& f, const Rep& dom, const Rep& cod) {
  auto fc = std::make_shared<IndexColumns<S>>(index_columns(*f));
  Ring<S> R = f->ring();
  auto lens = conjugate(lam).parts;
  return make_map<S>(dom, cod, R, [fc, R, lens](const Label& l) {
    auto imgs = detail::column_images(l, lens, *fc, R);
    Terms<S> out;
    detail::for_each_column_product<S>(imgs, R, [&](const Label& w, const S& c) { add_term(out, w, c); });
    return out;
  });
}

// Straighten a combination of column tabloids (words, any order) into the nabla basis.
template <class S>
Terms<S> straighten_terms(const std::unordered_map<Label, S, VectorHash>& tabloids, const Straightener& st,
                          const Ring<S>& R) {
  // collect canonical forms first so each distinct tableau is straightened once
  std::unordered_map<Label, S, VectorHash> canon;
  canon.reserve(tabloids.size());
  for (const auto& [w, c] : tabloids) {
    Label t = w;
    int s = st.canonicalize(t);
    if (s == 0 || c.is_zero()) continue;
    auto it = canon.find(t);
    S v = s > 0 ? c : -c;
    if (it == canon.end()) canon.emplace(std::move(t), v);
    else it->second += v;
  }
  Terms<S> out;
  for (const auto& [t, c] : canon) {
    if (c.is_zero()) continue;
    for (const auto& [l, x] : st.straighten_canonical(t)) add_term(out, l, c * R.from_int(x));
  }
  return out;
}

template <class S>
MapPtr<S> nabla_map(const Partition& lam, const MapPtr<S>& f, const Rep& dom, const Rep& cod) {
  auto fc = std::make_shared<IndexColumns<S>>(index_columns(*f));
  Ring<S> R = f->ring();
  auto lens = conjugate(lam).parts;
  const Straightener* st =
      &straightener_for(lam, static_cast<int>(f->codomain()->dimension()), cod->field.characteristic());
  return make_map<S>(dom, cod, R, [fc, R, lens, st](const Label& l) {
    auto imgs = detail::column_images(l, lens, *fc, R);
    std::unordered_map<Label, S, VectorHash> acc;
    detail::for_each_column_product<S>(imgs, R, [&](const Label& w, const S& c) {
      auto it = acc.find(w);
      if (it == acc.end()) acc.emplace(w, c);
      else it->second += c;
    });
    return straighten_terms(acc, *st, R);
  });
}

// ---- the group action ----

template <class S>
MapPtr<S> action_map(const Rep& rep, const Mat2<S>& g, const Ring<S>& R) {
  switch (rep->kind) {
    case Kind::E: {
      Terms<S> cx, cy;
      add_term(cx, Label{0}, g.a);
      add_term(cx, Label{1}, g.c);
      add_term(cy, Label{0}, g.b);
      add_term(cy, Label{1}, g.d);
      return make_map<S>(rep, rep, R, [cx, cy](const Label& l) { return l.at(0) == 0 ? cx : cy; });
    }
    case Kind::Dual: return transpose_map(action_map(rep->a, g.inverse(), R), rep, rep);
    case Kind::ContraDual: return transpose_map(action_map(rep->a, g.transpose(), R), rep, rep);
    case Kind::Tensor: return tensor_map(action_map(rep->a, g, R), action_map(rep->b, g, R), rep, rep);
    case Kind::SymUpper: return sym_upper_map(rep->r, action_map(rep->a, g, R), rep, rep);
    case Kind::SymLower: return sym_lower_map(rep->r, action_map(rep->a, g, R), rep, rep);
    case Kind::Wedge: return wedge_map(rep->r, action_map(rep->a, g, R), rep, rep);
    case Kind::Nabla: return nabla_map(rep->lam, action_map(rep->a, g, R), rep, rep);
    case Kind::ColumnWedge: return column_wedge_map(rep->lam, action_map(rep->a, g, R), rep, rep);
    case Kind::Delta: {
      auto inner = action_map(rep->impl, g, R);
      return make_map<S>(rep, rep, R, [inner](const Label& l) { return inner->column(l); });
    }
    case Kind::DetPower: {
      S c = scalar_pow(g.det(), rep->r, R);
      return make_map<S>(rep, rep, R, [c](const Label&) {
        Terms<S> t;
        add_term(t, Label{}, c);
        return t;
      });
    }
  }
  fail(ErrorKind::InvalidArgument, "unknown rep kind");
}

inline MapPtr<Elem> action_map(const Rep& rep, const GroupElement& g) {
  if (g.a.field() != rep->field) fail(ErrorKind::FieldMismatch, "group element and rep over different fields");
  return action_map<Elem>(rep, g, Ring<Elem>{rep->field});
}

inline Terms<Elem> act(const GroupElement& g, const Rep& rep, const Terms<Elem>& v) { return action_map(rep, g)->apply(v); }

inline Matrix<Elem> action_matrix(const GroupElement& g, const Rep& rep) { return to_matrix(*action_map(rep, g)); }

inline bool uses_duals(const Rep& rep) {
  if (!rep) return false;
  if (rep->kind == Kind::Dual || rep->kind == Kind::ContraDual || rep->kind == Kind::Delta) return true;
  return uses_duals(rep->a) || uses_duals(rep->b);
}

// The lowering operator f (f.X = Y, f.Y = 0) acting as a derivation.
inline MapPtr<Elem> lowering_map(const Rep& rep) {
  if (uses_duals(rep)) fail(ErrorKind::UnsupportedConstructor, "the derivation action is defined only without duals");
  Field F = rep->field;
  Ring<DualNum> D{F};
  Mat2<DualNum> g{D.one(), D.zero(), DualNum{F.zero(), F.one()}, D.one()};
  auto m = action_map<DualNum>(rep, g, D);
  Ring<Elem> R{F};
  return make_map<Elem>(rep, rep, R, [m](const Label& l) {
    Terms<Elem> out;
    for (const auto& [k, x] : m->column(l)) {
      if (!x.b.is_zero()) out.emplace(k, x.b);
    }
    return out;
  });
}

inline Terms<Elem> act_f(const Rep& rep, const Terms<Elem>& v) { return lowering_map(rep)->apply(v); }

}  // namespace plethysm
