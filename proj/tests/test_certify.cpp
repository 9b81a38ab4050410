#include <catch_amalgamated.hpp>

#include <cstdlib>

#include <plethysm/certify.hpp>

using namespace plethysm;

namespace {

Json strip_runtime(Json j) {
  if (j.is_object()) {
    j.erase("runtime_ms");
    for (auto& [k, v] : j.items()) v = strip_runtime(v);
  } else if (j.is_array()) {
    for (auto& v : j) v = strip_runtime(v);
  }
  return j;
}

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("distinguishing by defect sets") {
  Field F = Field::make(2);
  auto gen = WeightMode::generic();
  Rep uu = parse_rep("sym^2(sym^2(E))", F), ll = parse_rep("sym_2(sym_2(E))", F);
  auto c = distinguish_by_defect(uu, ll, gen);
  CHECK(c.verdict == Verdict::Pass);
  CHECK(c.claim == Claim::NonIsomorphism);
  CHECK(c.evidence["witness"] == 1);
  CHECK(c.evidence["witness_in"] == "b");
  auto r = distinguish_by_defect(ll, uu, gen);
  CHECK(r.evidence["witness"] == 1);
  CHECK(r.evidence["witness_in"] == "a");
  CHECK(distinguish_by_defect(uu, uu, gen).verdict == Verdict::Inconclusive);
  CHECK(kind_of([&] { distinguish_by_defect(uu, parse_rep("sym^2(E)", Field::make(3)), gen); }) == ErrorKind::FieldMismatch);
  // undefined on one side only is still a difference
  DefectSet a, b;
  a.defined = true;
  a.elements = {0};
  CHECK(distinguish_defects("a", a, "b", b, gen).verdict == Verdict::Pass);
  CHECK(distinguish_defects("b", b, "b", b, gen).verdict == Verdict::Inconclusive);
}

TEST_CASE("strategy generators") {
  Field F = Field::make(5);
  auto all = strategy_elements(F, EquivStrategy::all_gamma());
  CHECK(all.size() == 1 + 5 + 1);
  CHECK(all[0].name == "J");
  auto s = strategy_elements(Field::rationals(), EquivStrategy::sample(10, 3));
  REQUIRE(s.size() == 12);
  CHECK(s[0].name == "J");
  CHECK(s[1].name == "M(1)");
  for (const auto& e : s) CHECK_FALSE(e.g.det().is_zero());
  CHECK(kind_of([] { strategy_elements(Field::rationals(), EquivStrategy::all_gamma()); }) == ErrorKind::InfiniteEnumeration);
  CHECK(strategy_elements(Field::make(2), EquivStrategy::all_gamma()).size() == 3);
  Elem w = primitive_element(Field::parse("GF(16)"));
  for (int k = 1; k < 15; ++k) CHECK_FALSE(w.pow(k).is_one());
}

TEST_CASE("failure witnesses can be re-checked") {
  Field F = Field::make(3);
  auto ext = zeta_tensor_extension(2, 2, F);
  auto c = check_equivariance(ext, EquivStrategy::all_gamma());
  REQUIRE(c.verdict == Verdict::Fail);
  std::string gname = c.evidence["witness"]["g"];
  GroupElement g = weyl_element(F);
  bool found = false;
  for (const auto& e : strategy_elements(F, EquivStrategy::all_gamma())) {
    if (e.name == gname) {
      g = e.g;
      found = true;
    }
  }
  REQUIRE(found);
  auto x = parse_vector(ext->domain(), c.evidence["witness"]["vector"].get<std::string>());
  auto lhs = ext->apply(act(g, ext->domain(), x));
  auto rhs = scale(act(g, ext->codomain(), ext->apply(x)), g.det().pow(ext->det_twist));
  CHECK_FALSE(lhs == rhs);
  // passing certificates list every generator they used
  auto ok = check_isomorphism(zeta(2, 2, F), EquivStrategy::all_gamma());
  CHECK(ok.passed());
  CHECK(ok.evidence["generators"].size() == strategy_elements(F, EquivStrategy::all_gamma()).size());
  CHECK(ok.evidence["rank"] == 6);
  // a rank-deficient equivariant map is not an isomorphism
  auto bad = check_isomorphism(symduals_canonical(2, Field::make(2)), EquivStrategy::all_gamma());
  CHECK(bad.evidence["equivariant"] == true);
  CHECK(bad.verdict == Verdict::Fail);
}

TEST_CASE("symbolic check over the rationals") {
  Field Q = Field::rationals();
  auto c = check_isomorphism_default(hermite(2, 2, Q));
  CHECK(c.passed());
  CHECK(c.evidence.contains("symbolic"));
  auto d = check_equivariance(zeta_tensor_extension(2, 2, Q), EquivStrategy::symbolic());
  CHECK(d.verdict == Verdict::Fail);
}

TEST_CASE("theorem runners") {
  CHECK(theorem_names().size() == 8);
  auto c = run_theorem("converse-hermite", {{"p", 2}, {"eps", 2}, {"q", 32}});
  CHECK(c.passed());
  CHECK(kind_of([] { run_theorem("converse-hermite", {{"p", 2}, {"eps", 2}, {"q", 16}}); }) == ErrorKind::HypothesisNotMet);
  CHECK(kind_of([] { run_theorem("hook-obstructions", {{"p", 2}, {"alpha", 1}, {"beta", 2}, {"eps", 3}, {"q", 128}}); }) ==
        ErrorKind::HypothesisNotMet);
  CHECK(kind_of([] { run_theorem("wronskian", {{"l", 7}, {"m", 2}}); }) == ErrorKind::ParamsOutOfSupportedRange);
  CHECK(kind_of([] { run_theorem("nope", Json::object()); }) == ErrorKind::InvalidArgument);
  auto h = run_theorem("hermite", {{"l", 2}, {"m", 2}, {"field", "GF(3)"}});
  CHECK(h.passed());
  auto s = run_theorem("sym-duals", {{"p", 2}, {"lmax", 12}});
  CHECK(s.passed());
  auto j = s.to_json();
  CHECK(j["verdict"] == "pass");
  CHECK(j.contains("runtime_ms"));
}

TEST_CASE("certificates do not depend on the thread count") {
  auto run = [] {
    Json out = Json::array();
    out.push_back(check_isomorphism(hermite(2, 3, Field::parse("GF(4)")), EquivStrategy::all_gamma()).to_json());
    out.push_back(check_equivariance(zeta_tensor_extension(2, 2, Field::make(3)), EquivStrategy::all_gamma()).to_json());
    out.push_back(run_theorem("f-equivariance", {{"lmax", 3}, {"mmax", 3}}).to_json());
    return strip_runtime(out);
  };
  const char* old = std::getenv("PLETHYSM_THREADS");
  std::string saved = old ? old : "";
  setenv("PLETHYSM_THREADS", "1", 1);
  Json one = run();
  setenv("PLETHYSM_THREADS", "4", 1);
  Json four = run();
  if (old) setenv("PLETHYSM_THREADS", saved.c_str(), 1);
  else unsetenv("PLETHYSM_THREADS");
  CHECK(one == four);
}
