// plethysm: command-line front end for the representation library.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include <plethysm/certify.hpp>
#include <plethysm/serialize.hpp>

using namespace plethysm;
using nlohmann::json;

namespace {

enum Exit { Ok = 0, Failed = 1, Usage = 2, Hypothesis = 3 };

struct Globals {
  std::string format = "text";
  bool json() const { return format == "json"; }
};

void emit(const Globals& g, const json& j, const std::string& text) {
  if (g.json()) std::cout << j.dump(2) << "\n";
  else std::cout << text << (text.empty() || text.back() == '\n' ? "" : "\n");
}

Rep default_space(int d, Field F) { return d == 1 ? det_power(1, F) : sym_upper_E(d - 1, F); }

bool tableau_labelled(const Rep& r) {
  return r->kind == Kind::ColumnWedge || r->kind == Kind::Nabla || r->kind == Kind::Delta;
}

struct MapOpts {
  std::string field = "QQ";
  std::string V;
  std::string lambda;
  std::string order = "example";
  int l = 1, m = 1, r = 1, d = 0, s = 1;
  bool lower = false, extended = false;
};

MapPtr<Elem> build_map(const std::string& name, const MapOpts& o) {
  Field F = Field::parse(o.field);
  auto space = [&](int d) { return o.V.empty() ? default_space(d, F) : parse_rep(o.V, F); };
  if (name == "psi") return psi_exterior(o.V.empty() ? natural(F) : parse_rep(o.V, F), o.r);
  if (name == "Psi" || name == "complement") {
    if (o.lambda.empty() || o.d < 1) fail(ErrorKind::InvalidArgument, name + " needs --lambda and --d");
    Partition lam = parse_partition(o.lambda);
    Rep V = space(o.d);
    return name == "Psi" ? psi_tabloid(lam, o.d, o.s, V) : nabla_complement_iso(lam, o.d, o.s, V);
  }
  if (name == "zeta") return o.extended ? zeta_tensor_extension(o.l, o.m, F) : zeta(o.l, o.m, F);
  if (name == "hermite") {
    if (o.order != "example" && o.order != "proof") fail(ErrorKind::InvalidArgument, "--order is example or proof");
    return hermite(o.l, o.m, F, o.order == "proof" ? HermiteOrder::Proof : HermiteOrder::Example);
  }
  if (name == "dual-wedge") return duality_wedge(o.r, o.V.empty() ? natural(F) : parse_rep(o.V, F));
  if (name == "dual-sym") return duality_sym(o.r, o.V.empty() ? natural(F) : parse_rep(o.V, F), !o.lower);
  if (name == "symduals") return symduals_canonical(o.l, F);
  if (name == "E-self") return e_self_duality(F);
  if (name == "exterior-sym") return exterior_sym_duality(o.l, o.m, F);
  fail(ErrorKind::InvalidArgument, "unknown map '" + name + "'");
}

VecStyle parse_style(const std::string& s, const Rep& target) {
  if (s == "pretty") return VecStyle::Pretty;
  if (s == "ascii") return VecStyle::Ascii;
  if (s == "terms") return VecStyle::Terms;
  if (s.empty()) return tableau_labelled(target) ? VecStyle::Terms : VecStyle::Pretty;
  fail(ErrorKind::InvalidArgument, "--style is pretty, ascii or terms");
}

EquivStrategy parse_strategy(const std::string& s, Field F, std::uint64_t seed, int samples) {
  if (s == "all") return EquivStrategy::all_gamma();
  if (s == "sample") return EquivStrategy::sample(samples, seed);
  if (s == "symbolic") return EquivStrategy::symbolic();
  if (s.empty()) return F.is_finite() ? EquivStrategy::all_gamma() : EquivStrategy::sample(samples, seed);
  fail(ErrorKind::InvalidArgument, "--strategy is all, sample or symbolic");
}

std::string matrix_text(const Matrix<Elem>& m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t j = 0; j < m.cols; ++j) out += (j ? " " : "") + m(i, j).to_string();
    out += "\n";
  }
  return out;
}

std::string certificate_text(const Certificate& c) {
  return std::string("verdict: ") + to_string(c.verdict) + "\nclaim: " + to_string(c.claim) + "\nfield: " + c.field +
         "\nruntime_ms: " + std::to_string(c.runtime_ms) + "\nparams: " + c.params.dump() + "\nevidence: " + c.evidence.dump(2);
}

int verdict_exit(const Certificate& c) { return c.passed() ? Ok : Failed; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polynomial GL2 representations, plethystic isomorphisms and defect sets"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();

  int rc = Ok;

  // ---- rep ----
  auto* rep = app.add_subcommand("rep", "construct a representation");
  rep->fallthrough();
  rep->require_subcommand(1);
  std::string rep_spec, rep_field = "QQ", rep_g, rep_v;
  rep->add_option("--spec", rep_spec, "representation spec, e.g. sym_3(sym^3(E))")->required();
  rep->add_option("--field", rep_field, "QQ, GF(p), GF(p^k)")->capture_default_str();
  auto* rep_dim = rep->add_subcommand("dim", "dimension");
  auto* rep_basis = rep->add_subcommand("basis", "basis labels with weights");
  auto* rep_matrix = rep->add_subcommand("matrix", "action matrix of a group element (row-major)");
  rep_matrix->add_option("--g", rep_g, "\"a,b;c,d\", J or M(x)")->required();
  auto* rep_act = rep->add_subcommand("act", "act on a vector");
  rep_act->add_option("--g", rep_g, "group element")->required();
  rep_act->add_option("--v", rep_v, "vector")->required();
  for (auto* s : {rep_dim, rep_basis, rep_matrix, rep_act}) s->fallthrough();

  auto run_rep = [&]() -> int {
    Field F = Field::parse(rep_field);
    Rep R = parse_rep(rep_spec, F);
    if (rep_dim->parsed()) {
      emit(g, {{"rep", R->spec()}, {"field", F.spec()}, {"dim", R->dimension()}}, std::to_string(R->dimension()));
    } else if (rep_basis->parsed()) {
      json arr = json::array();
      std::string text;
      for (const auto& l : R->basis()) {
        arr.push_back({{"label", format_label(R, l, Style::Ascii)}, {"weight", R->weight(l)}});
        text += format_label(R, l) + "  (weight " + std::to_string(R->weight(l)) + ")\n";
      }
      emit(g, {{"rep", R->spec()}, {"basis", arr}}, text);
    } else if (rep_matrix->parsed()) {
      auto m = action_matrix(parse_group_element(rep_g, F), R);
      emit(g, {{"rep", R->spec()}, {"g", rep_g}, {"matrix", matrix_to_json(m)}}, matrix_text(m));
    } else {
      auto v = act(parse_group_element(rep_g, F), R, parse_vector(R, rep_v));
      emit(g, {{"rep", R->spec()}, {"vector", vector_to_json(R, v)}}, format_vector<Elem>(R, v));
    }
    return Ok;
  };

  // ---- map ----
  auto* map = app.add_subcommand("map", "build one of the explicit maps");
  map->fallthrough();
  map->require_subcommand(1);
  std::string map_name, map_v, map_t, map_style, map_strategy;
  std::uint64_t map_seed = 1;
  int map_samples = 25;
  MapOpts mo;
  map->add_option("name", map_name, "psi, Psi, complement, zeta, hermite, dual-wedge, dual-sym, symduals, E-self, exterior-sym")
      ->required();
  map->add_option("--field", mo.field)->capture_default_str();
  map->add_option("--V", mo.V, "space for psi/Psi/complement/dual maps");
  map->add_option("--lambda", mo.lambda, "partition, e.g. 3,1");
  map->add_option("--order", mo.order, "hermite composition order: example or proof")->capture_default_str();
  map->add_option("--l", mo.l);
  map->add_option("--m", mo.m);
  map->add_option("--r", mo.r);
  map->add_option("--d", mo.d);
  map->add_option("--s", mo.s);
  map->add_flag("--lower", mo.lower, "dual-sym: start from the lower symmetric power");
  map->add_flag("--extended", mo.extended, "zeta: the pure-tensor extension");
  auto* map_apply = map->add_subcommand("apply", "image of a vector");
  map_apply->add_option("--v", map_v, "vector");
  map_apply->add_option("--t", map_t, "tableau, rows separated by /");
  map_apply->add_option("--style", map_style, "pretty, ascii or terms");
  auto* map_verify = map->add_subcommand("verify", "equivariance and bijectivity certificate");
  map_verify->add_option("--strategy", map_strategy, "all, sample or symbolic");
  map_verify->add_option("--seed", map_seed);
  map_verify->add_option("--samples", map_samples);
  auto* map_dump = map->add_subcommand("dump", "all columns");
  for (auto* s : {map_apply, map_verify, map_dump}) s->fallthrough();

  auto run_map = [&]() -> int {
    auto f = build_map(map_name, mo);
    if (map_apply->parsed()) {
      if (map_v.empty() == map_t.empty()) fail(ErrorKind::InvalidArgument, "give exactly one of --v and --t");
      auto x = parse_vector(f->domain(), map_v.empty() ? map_t : map_v);
      auto y = f->apply(x);
      emit(g, {{"map", map_name}, {"codomain", f->codomain()->spec()}, {"image", vector_to_json(f->codomain(), y)}},
           format_vector<Elem>(f->codomain(), y, parse_style(map_style, f->codomain())));
      return Ok;
    }
    if (map_verify->parsed()) {
      auto c = check_isomorphism(f, parse_strategy(map_strategy, f->domain()->field, map_seed, map_samples));
      c.params["map"] = map_name;
      emit(g, c.to_json(), certificate_text(c));
      return verdict_exit(c);
    }
    json j = map_to_json(*f);
    std::string text = f->domain()->spec() + " -> " + f->codomain()->spec() + "\n";
    for (const auto& l : f->domain()->basis()) {
      text += format_label(f->domain(), l) + " -> " + format_vector<Elem>(f->codomain(), f->column(l)) + "\n";
    }
    emit(g, j, text);
    return Ok;
  };

  // ---- defect ----
  auto* defect = app.add_subcommand("defect", "highest weight and defect set");
  std::string def_rep, def_field = "QQ", def_mode = "generic", def_route = "auto";
  defect->add_option("--rep", def_rep)->required();
  defect->add_option("--field", def_field)->capture_default_str();
  defect->add_option("--mode", def_mode)->check(CLI::IsMember({"generic", "concrete"}))->capture_default_str();
  defect->add_option("--route", def_route, "delta modules: auto, direct or wedge")
      ->check(CLI::IsMember({"auto", "direct", "wedge"}))
      ->capture_default_str();

  auto run_defect = [&]() -> int {
    Field F = Field::parse(def_field);
    Rep R = parse_rep(def_rep, F);
    WeightMode mode = WeightMode::generic();
    if (def_mode == "concrete") {
      if (!F.is_finite()) fail(ErrorKind::ModeMismatch, "concrete mode needs a finite field");
      mode = WeightMode::of_order(F.order());
    }
    DefectRoute route = def_route == "direct" ? DefectRoute::Direct : def_route == "wedge" ? DefectRoute::Wedge : DefectRoute::Auto;
    HighestWeight h = highest_weight(R, mode);
    DefectSet d = defect_set(R, mode, route);
    json j = {{"rep", R->spec()},
              {"field", F.spec()},
              {"mode", mode.to_string()},
              {"highest_weight", h.weight},
              {"unique", h.unique()},
              {"defects", detail::defect_json(d)}};
    emit(g, j, "highest weight " + std::to_string(h.weight) + (h.unique() ? "" : " (not unique)") + "\ndefects " + d.to_string());
    return Ok;
  };

  // ---- theorem ----
  auto* theorem = app.add_subcommand("theorem", "run a packaged verification");
  std::string th_name;
  theorem->add_option("name", th_name)->required()->check(CLI::IsMember(theorem_names()));
  json th_params = json::object();
  std::map<std::string, std::int64_t> ints;
  std::map<std::string, std::string> strs;
  for (const char* k : {"p", "alpha", "beta", "eps", "q", "l", "m", "lmax", "mmax", "dmax", "smax", "seed"}) {
    theorem->add_option_function<std::int64_t>(std::string("--") + k, [&ints, k](const std::int64_t& x) { ints[k] = x; });
  }
  for (const char* k : {"field", "order", "V", "lambda"}) {
    theorem->add_option_function<std::string>(std::string("--") + k, [&strs, k](const std::string& x) { strs[k] = x; });
  }

  auto run_theorem_cmd = [&]() -> int {
    for (const auto& [k, v] : ints) th_params[k] = v;
    for (const auto& [k, v] : strs) th_params[k] = v;
    auto c = run_theorem(th_name, th_params);
    emit(g, c.to_json(), certificate_text(c));
    return verdict_exit(c);
  };

  // ---- straighten ----
  auto* straighten = app.add_subcommand("straighten", "express a column tabloid in the semistandard basis");
  std::string st_lambda, st_t;
  int st_d = 0;
  std::int64_t st_p = 0;
  straighten->add_option("--lambda", st_lambda)->required();
  straighten->add_option("--d", st_d, "number of letters")->required();
  straighten->add_option("--t", st_t, "tableau, rows separated by /")->required();
  straighten->add_option("--p", st_p, "characteristic (0 for integers)")->capture_default_str();

  auto run_straighten = [&]() -> int {
    Partition lam = parse_partition(st_lambda);
    Tableau t = parse_tableau(st_t);
    if (!(t.shape.parts == lam.parts)) fail(ErrorKind::InvalidArgument, "tableau shape differs from --lambda");
    if (st_p != 0 && !detail::is_prime(st_p)) fail(ErrorKind::NonPrimeCharacteristic, std::to_string(st_p) + " is not prime");
    if (st_d < 1 || t.max_entry() > st_d) fail(ErrorKind::EntryOutOfRange, "entries must lie in 1..d");
    auto res = garnir_straighten(t, st_d, st_p);
    json terms = json::object();
    std::string text;
    for (const auto& [w, c] : res) {
      std::string tt = tableau_of(lam, w).to_string();
      terms[tt] = c;
      text += std::to_string(c) + " * |" + tt + "|\n";
    }
    emit(g, {{"lambda", lam.to_string()}, {"d", st_d}, {"p", st_p}, {"terms", terms}}, res.empty() ? "0" : text);
    return Ok;
  };

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? Ok : Usage;
  }
  try {
    if (rep->parsed()) rc = run_rep();
    else if (map->parsed()) rc = run_map();
    else if (defect->parsed()) rc = run_defect();
    else if (theorem->parsed()) rc = run_theorem_cmd();
    else if (straighten->parsed()) rc = run_straighten();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::HypothesisNotMet ? Hypothesis : Usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return Usage;
  }
  return rc;
}
