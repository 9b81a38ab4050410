#pragma once

// Explicit module isomorphisms: exterior and tabloid complements, the Wronskian map,
// duality identifications and the Hermite composite.

#include <string>
#include <vector>

#include "errors.hpp"
#include "linmap.hpp"
#include "rep.hpp"
#include "shapes.hpp"
#include "straighten.hpp"

namespace plethysm {

// Scalar matrices t*I act on v by t^degree.
inline std::int64_t polynomial_degree(const Rep& v) {
  switch (v->kind) {
    case Kind::E: return 1;
    case Kind::Dual: return -polynomial_degree(v->a);
    case Kind::ContraDual: return polynomial_degree(v->a);
    case Kind::Tensor: return polynomial_degree(v->a) + polynomial_degree(v->b);
    case Kind::SymUpper:
    case Kind::SymLower:
    case Kind::Wedge: return v->r * polynomial_degree(v->a);
    case Kind::Nabla:
    case Kind::ColumnWedge:
    case Kind::Delta: return v->lam.size() * polynomial_degree(v->a);
    case Kind::DetPower: return 2 * static_cast<std::int64_t>(v->r);
  }
  return 0;
}

// det(rho_V(g)) = det(g)^k; returns k.
inline std::int64_t det_exponent(const Rep& v) {
  std::int64_t t = polynomial_degree(v) * v->dimension();
  if (t % 2) fail(ErrorKind::InvalidArgument, "odd total degree");
  return t / 2;
}

inline MapPtr<Elem> retwist(const MapPtr<Elem>& f, std::int64_t t) {
  return make_map<Elem>(f->domain(), f->codomain(), f->ring(), [f](const Label& l) { return f->column(l); },
                        static_cast<int>(t));
}

// Functors applied to maps, carrying the twist along.
inline MapPtr<Elem> functor_sym_upper(int r, const MapPtr<Elem>& f) {
  return retwist(sym_upper_map(r, f, sym_upper(r, f->domain()), sym_upper(r, f->codomain())),
                 static_cast<std::int64_t>(r) * f->det_twist);
}
inline MapPtr<Elem> functor_sym_lower(int r, const MapPtr<Elem>& f) {
  return retwist(sym_lower_map(r, f, sym_lower(r, f->domain()), sym_lower(r, f->codomain())),
                 static_cast<std::int64_t>(r) * f->det_twist);
}
inline MapPtr<Elem> functor_wedge(int r, const MapPtr<Elem>& f) {
  return retwist(wedge_map(r, f, wedge(r, f->domain()), wedge(r, f->codomain())),
                 static_cast<std::int64_t>(r) * f->det_twist);
}

// ---- exterior complement ----

inline MapPtr<Elem> psi_exterior(const Rep& V, int r) {
  const int d = static_cast<int>(V->dimension());
  if (r < 0 || r > d) fail(ErrorKind::RankOutOfRange, "exterior power " + std::to_string(r) + " outside 0.." + std::to_string(d));
  Rep dom = wedge(r, V), cod = wedge(d - r, dual(V));
  Field F = V->field;
  return make_map<Elem>(dom, cod, Ring<Elem>{F}, [d, r, F](const Label& l) {
    Label comp;
    std::int64_t s = 0;
    for (int x : l) s += x + 1;
    s -= static_cast<std::int64_t>(r) * (r + 1) / 2;
    for (int k = 0; k < d; ++k) {
      if (!std::binary_search(l.begin(), l.end(), k)) comp.push_back(k);
    }
    return Terms<Elem>{{comp, s % 2 ? -F.one() : F.one()}};
  }, static_cast<int>(det_exponent(V)));
}

// ---- tabloid complement ----

inline Tableau tableau_of(const Partition& lam, const Label& word) {
  std::vector<int> w(word.begin(), word.end());
  for (int& x : w) ++x;
  return Tableau::from_word(lam, w);
}

inline Label word_of(const Tableau& t) {
  Label w = t.word();
  for (int& x : w) --x;
  return w;
}

// |t| -> (-1)^S(t) |t°| on column tabloids, t° the complement in the d x s rectangle.
inline MapPtr<Elem> psi_tabloid(const Partition& lam, int d, int s, const Rep& V) {
  if (V->dimension() != d) fail(ErrorKind::InvalidArgument, "dimension of V must equal d");
  Partition comp = complement_partition(lam, d, s);
  Rep dom = column_wedge(lam, V), cod = column_wedge(comp, dual(V));
  Field F = V->field;
  return make_map<Elem>(dom, cod, Ring<Elem>{F}, [lam, d, s, F](const Label& l) {
    Tableau t = tableau_of(lam, l);
    Tableau c = complement_tableau(t, d, s);
    return Terms<Elem>{{word_of(c), surplus(t) % 2 ? -F.one() : F.one()}};
  }, static_cast<int>(s * det_exponent(V)));
}

// The induced map on nabla: e(t) -> (-1)^S(t) e(t°), straightened in the codomain.
inline MapPtr<Elem> nabla_complement_iso(const Partition& lam, int d, int s, const Rep& V) {
  if (V->dimension() != d) fail(ErrorKind::InvalidArgument, "dimension of V must equal d");
  Partition comp = complement_partition(lam, d, s);
  Rep dom = nabla(lam, V), cod = nabla(comp, dual(V));
  Field F = V->field;
  const Straightener* st = &straightener_for(comp, d, F.characteristic());
  return make_map<Elem>(dom, cod, Ring<Elem>{F}, [lam, d, s, F, st](const Label& l) {
    Tableau t = tableau_of(lam, l);
    std::int64_t sg = surplus(t) % 2 ? -1 : 1;
    Terms<Elem> out;
    for (const auto& [w, x] : st->straighten(word_of(complement_tableau(t, d, s)))) add_term(out, w, F.from_int(sg * x));
    return out;
  }, static_cast<int>(s * det_exponent(V)));
}

// Garnir relation sum_pi sgn(pi) |t.pi| as column tabloids (columns sorted, signs folded in).
inline std::map<Label, std::int64_t> garnir_relation(const Partition& lam, int d, const Label& word,
                                                     int col, int row) {
  const Straightener& st = straightener_for(lam, d, 0);
  auto lens = st.column_lengths();
  if (col < 0 || col + 1 >= static_cast<int>(lens.size()) || row < 0 || row >= lens[col + 1]) {
    fail(ErrorKind::InvalidArgument, "no Garnir relation at that position");
  }
  std::map<Label, std::int64_t> out;
  for (auto& [t, sg] : st.garnir_terms(word, {col, row})) {
    Label w = t;
    int sign = 1;
    std::size_t off = 0;
    for (int len : lens) {
      std::vector<int> c(w.begin() + off, w.begin() + off + len);
      int s = sort_sign(c);
      sign *= s;
      std::copy(c.begin(), c.end(), w.begin() + off);
      off += len;
    }
    if (sign == 0) continue;
    out[w] += sign * sg;
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

// ---- the Wronskian map ----

inline Rep wronskian_domain(int l, int m, Field F) { return sym_lower(m, sym_upper_E(l, F)); }
inline Rep wronskian_codomain(int l, int m, Field F) { return wedge(m, sym_upper_E(l + m - 1, F)); }

namespace detail {

// F_wedge(j) for X-exponents j, sorted into the increasing basis.
inline void add_wedge_of_exponents(Terms<Elem>& out, const std::vector<int>& j, int n, const Elem& c) {
  std::vector<int> idx;
  for (int x : j) {
    if (x < 0 || x > n) return;
    idx.push_back(n - x);
  }
  int s = sort_sign(idx);
  if (s == 0) return;
  add_term(out, idx, s > 0 ? c : -c);
}

}  // namespace detail

inline MapPtr<Elem> zeta(int l, int m, Field F) {
  if (l < 1 || m < 1) fail(ErrorKind::InvalidArgument, "zeta needs l, m >= 1");
  const int n = l + m - 1;
  return make_map<Elem>(wronskian_domain(l, m, F), wronskian_codomain(l, m, F), Ring<Elem>{F}, [l, m, n, F](const Label& u) {
    MultiIndex i;
    for (int y : u) i.push_back(l - y);
    Terms<Elem> out;
    for (const auto& sigma : stabilizer_coset_reps(i)) {
      auto j = apply_place_permutation(i, sigma);
      for (int k = 0; k < m; ++k) j[k] += m - 1 - k;
      detail::add_wedge_of_exponents(out, j, n, F.one());
    }
    return out;
  }, -m * (m - 1) / 2);
}

inline Rep tensor_power(const Rep& v, int m) {
  Rep t = v;
  for (int k = 1; k < m; ++k) t = tensor(t, v);
  return t;
}

namespace detail {

inline void flatten_tensor_label(const Rep& rep, const Label& l, std::vector<int>& leaves) {
  if (rep->kind == Kind::Tensor) {
    flatten_tensor_label(rep->a, rep->a->label(l.at(0)), leaves);
    flatten_tensor_label(rep->b, rep->b->label(l.at(1)), leaves);
  } else {
    leaves.push_back(static_cast<int>(rep->index_of(l)));
  }
}

}  // namespace detail

// The naive extension to the tensor power: F_tensor(i) -> F_wedge(i + d). Not equivariant.
inline MapPtr<Elem> zeta_tensor_extension(int l, int m, Field F) {
  if (l < 1 || m < 1) fail(ErrorKind::InvalidArgument, "zeta needs l, m >= 1");
  const int n = l + m - 1;
  Rep dom = tensor_power(sym_upper_E(l, F), m);
  return make_map<Elem>(dom, wronskian_codomain(l, m, F), Ring<Elem>{F}, [dom, l, m, n, F](const Label& lab) {
    std::vector<int> ys;
    detail::flatten_tensor_label(dom, lab, ys);
    std::vector<int> j;
    for (int k = 0; k < m; ++k) j.push_back(l - ys[k] + m - 1 - k);
    Terms<Elem> out;
    detail::add_wedge_of_exponents(out, j, n, F.one());
    return out;
  }, -m * (m - 1) / 2);
}

// ---- dualities ----

inline MapPtr<Elem> duality_wedge(int r, const Rep& V) {
  return relabel_map<Elem>(dual(wedge(r, V)), wedge(r, dual(V)), Ring<Elem>{V->field});
}

// (Sym^r V)^dual -> Sym_r(V^dual) when upper, (Sym_r V)^dual -> Sym^r(V^dual) otherwise.
inline MapPtr<Elem> duality_sym(int r, const Rep& V, bool upper) {
  Rep dom = dual(upper ? sym_upper(r, V) : sym_lower(r, V));
  Rep cod = upper ? sym_lower(r, dual(V)) : sym_upper(r, dual(V));
  return relabel_map<Elem>(dom, cod, Ring<Elem>{V->field});
}

// Sym_l E -> Sym^l E, orbit sum with a copies of Y -> binom(l, a) X^(l-a) Y^a.
inline MapPtr<Elem> symduals_canonical(int l, Field F) {
  if (l < 0) fail(ErrorKind::InvalidArgument, "negative symmetric power");
  return make_map<Elem>(sym_lower_E(l, F), sym_upper_E(l, F), Ring<Elem>{F}, [l, F](const Label& u) {
    int a = static_cast<int>(std::count(u.begin(), u.end(), 1));
    Terms<Elem> out;
    add_term(out, u, F.binomial(l, a));
    return out;
  });
}

// E^dual -> E: X^dual -> -Y, Y^dual -> X.
inline MapPtr<Elem> e_self_duality(Field F) {
  return make_map<Elem>(dual(natural(F)), natural(F), Ring<Elem>{F}, [F](const Label& l) {
    return l.at(0) == 0 ? Terms<Elem>{{Label{1}, -F.one()}} : Terms<Elem>{{Label{0}, F.one()}};
  }, -1);
}

// Label identity between structurally equivalent reps.
inline MapPtr<Elem> identify(const Rep& dom, const Rep& cod) { return relabel_map<Elem>(dom, cod, Ring<Elem>{dom->field}); }

// ---- composites ----

// wedge^l Sym^n E -> wedge^m Sym_n E, n = l + m - 1.
inline MapPtr<Elem> exterior_sym_duality(int l, int m, Field F) {
  const int n = l + m - 1;
  Rep W = sym_upper_E(n, F);
  auto psi = psi_exterior(W, l);
  auto to_lower = compose(functor_sym_lower(n, e_self_duality(F)), identify(dual(W), sym_lower(n, dual(natural(F)))));
  return compose(functor_wedge(m, to_lower), psi);
}

enum class HermiteOrder { Example, Proof };

// Sym_m Sym^l E -> Sym^l Sym_m E.
inline MapPtr<Elem> hermite(int l, int m, Field F, HermiteOrder order = HermiteOrder::Example) {
  if (l < 1 || m < 1) fail(ErrorKind::InvalidArgument, "hermite needs l, m >= 1");
  const int n = l + m - 1;
  Rep E = natural(F);
  Rep W = sym_upper_E(n, F);
  Rep U = sym_upper_E(m, F);
  auto z = zeta(l, m, F);
  auto zt = zeta(m, l, F);  // Sym_l Sym^m E -> wedge^l W
  Rep target = sym_upper(l, sym_lower(m, E));
  if (order == HermiteOrder::Example) {
    auto psi = psi_exterior(W, m);  // -> wedge^l(W^dual)
    auto f = compose(identify(psi->codomain(), dual(wedge(l, W))), compose(psi, z));
    f = compose(dual_map(zt), f);  // -> (Sym_l U)^dual
    f = compose(identify(f->codomain(), sym_upper(l, dual(U))), f);
    f = compose(functor_sym_upper(l, identify(dual(U), sym_lower(m, dual(E)))), f);
    f = compose(functor_sym_upper(l, functor_sym_lower(m, e_self_duality(F))), f);
    return f;
  }
  auto f = compose(exterior_sym_duality(m, l, F), z);  // -> wedge^l Sym_n E
  f = compose(identify(f->codomain(), contra_dual(wedge(l, W))), f);
  f = compose(contra_dual_map(zt), f);  // -> (Sym_l U)°
  return compose(identify(f->codomain(), target), f);
}

}  // namespace plethysm
