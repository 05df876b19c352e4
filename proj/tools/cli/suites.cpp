#include "cli/suites.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <thread>

#include "cli/io.hpp"
#include "rieszkit/corpus.hpp"
#include "rieszkit/decompose.hpp"
#include "rieszkit/hardy.hpp"
#include "rieszkit/transfer.hpp"

namespace rieszkit::cli {

namespace {

using io::Json;
using io::ParseError;
namespace fs = std::filesystem;

using Row = std::vector<std::string>;

struct ItemResult {
  Json json;
  std::vector<Row> rows;
  bool ok = true;
  bool converged = true;
};

struct Plan {
  Row header;
  std::size_t count = 0;
  std::function<ItemResult(std::size_t)> item;
  Json tolerances = Json::object();
  Json parameters = Json::object();
  bool converged = true;  // work done before the items (empirical norms)
  std::function<Json(const std::vector<ItemResult>&)> summarize;
};

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string flag(bool b) { return b ? "true" : "false"; }

std::string signs(const std::vector<int>& eps) {
  std::string s;
  for (int e : eps) s += e > 0 ? '+' : e < 0 ? '-' : '0';
  return s;
}

std::string point(const IntVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(to_int64(v[i]));
  }
  return s + ")";
}

double tolerance(const Config& c) {
  if (c.tol) {
    if (!(*c.tol > 0.0)) throw ParseError("--tol must be positive");
    return *c.tol;
  }
  if (const char* env = std::getenv("RIESZKIT_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v > 0.0)) throw ParseError("RIESZKIT_TOL: expected a positive number");
    return v;
  }
  return kDefaultTolerance;
}

QuadratureOptions quadrature(const Config& c) {
  QuadratureOptions q;
  q.rel_tol = tolerance(c);
  return q;
}

GridOptions grid_options(const Config& c) {
  GridOptions g;
  g.n = c.grid.value_or(0);
  g.quadrature = quadrature(c);
  return g;
}

std::vector<Json> require_items(const Config& c) {
  if (c.input.empty()) throw ParseError(c.suite + ": --input is required");
  auto items = io::read_items(c.input);
  if (items.empty()) throw ParseError(c.input + ": no input items");
  return items;
}

std::vector<Measure> load_measures(const std::vector<Json>& items) {
  std::vector<Measure> out;
  for (const auto& j : items) out.push_back(io::measure_from_json(j));
  for (const auto& m : out) {
    if (m.dim() != out.front().dim()) throw ParseError("input measures differ in dimension");
  }
  return out;
}

std::vector<TrigPoly> load_polys(const std::vector<Json>& items) {
  std::vector<TrigPoly> out;
  for (const auto& j : items) out.push_back(io::poly_from_json(j));
  for (const auto& f : out) {
    if (f.dim() != out.front().dim()) throw ParseError("input polynomials differ in dimension");
  }
  return out;
}

OrderChain load_chain(const Config& c, std::size_t dim) {
  if (c.order.empty()) return lexicographic_order(dim);
  const auto spec = io::order_from_json(io::read_file(c.order));
  if (!spec.chain) throw ParseError("order: predicate orders are only accepted by the axioms suite");
  if (spec.dim != dim) throw ParseError("order: dimension differs from the input's");
  return *spec.chain;
}

std::vector<double> p_values(const Config& c) {
  if (!c.p) return {0.5, 1.0, 2.0};
  if (*c.p != 0.5 && *c.p != 1.0 && *c.p != 2.0) throw ParseError("--p must be 0.5, 1 or 2");
  return {*c.p};
}

Json cosets_json(const std::vector<LatticeCoset>& cs) {
  Json out = Json::array();
  for (const auto& c : cs) out.push_back(io::to_json(c));
  return out;
}

Json analyticity_json(const AnalyticityReport& r) {
  return {{"verdict", to_string(r.verdict)},
          {"witness", r.witness ? io::to_json(*r.witness) : Json(nullptr)},
          {"witness_value", io::to_json(r.witness_value)},
          {"offending", cosets_json(r.offending)}};
}

Json pattern_json(const PatternScan& s) {
  Json patterns = Json::array();
  for (std::size_t i = 0; i < s.patterns.size(); ++i) {
    patterns.push_back({{"signs", s.patterns[i]}, {"ratio", s.ratios[i]}});
  }
  return {{"max_ratio", s.max_ratio}, {"argmax", s.argmax}, {"patterns", patterns},
          {"grid", s.grid}, {"quadrature_error", s.quadrature_error}, {"converged", s.converged}};
}

// Odometer over [-r, r]^d.
template <class F>
void for_each_in_window(std::size_t d, std::int64_t r, F&& visit) {
  std::vector<std::int64_t> p(d, -r);
  while (true) {
    visit(from_int64(p));
    std::size_t i = d;
    while (i > 0) {
      --i;
      if (++p[i] <= r) break;
      p[i] = -r;
      if (i == 0) return;
    }
  }
}

Plan decompose_plan(const Config& c) {
  const auto measures = load_measures(require_items(c));
  const auto chain = load_chain(c, measures.front().dim());
  Plan plan;
  plan.header = {"item", "atoms", "nonempty_blocks", "reconstruction_exact", "blocks_in_masks",
                 "input_analytic", "blocks_analytic"};
  plan.count = measures.size();
  plan.tolerances = {{"prune", kPruneThreshold}};
  plan.item = [measures, chain](std::size_t i) {
    const Measure& mu = measures[i];
    const auto dec = decompose(mu, chain);
    const bool exact = equivalent(dec.reconstruct(), mu);
    const Verdict input = is_analytic(mu, chain).verdict;
    bool masks = true;
    bool analytic_blocks = true;
    std::size_t nonempty = 0;
    Json blocks = Json::array();
    for (const auto& b : dec.blocks) {
      const bool in_mask = equivalent(mask_block(b.part, chain, b.stage), b.part);
      const Verdict v = is_analytic(b.part, chain).verdict;
      masks = masks && in_mask;
      if (input == Verdict::kYes && v != Verdict::kYes) analytic_blocks = false;
      if (!b.part.empty()) ++nonempty;
      blocks.push_back({{"stage", b.stage}, {"in_mask", in_mask}, {"analytic", to_string(v)},
                        {"measure", io::to_json(b.part)}});
    }
    ItemResult r;
    r.ok = exact && masks && analytic_blocks;
    r.json = {{"item", i},
              {"verdict", r.ok ? "pass" : "fail"},
              {"reconstruction_exact", exact},
              {"input_analytic", to_string(input)},
              {"base", io::to_json(dec.base)},
              {"blocks", blocks}};
    r.rows.push_back({std::to_string(i), std::to_string(mu.atoms().size()), std::to_string(nonempty),
                      flag(exact), flag(masks), to_string(input), flag(analytic_blocks)});
    return r;
  };
  return plan;
}

Plan sign_scan_plan(const Config& c) {
  const auto measures = load_measures(require_items(c));
  const auto chain = load_chain(c, measures.front().dim());
  const auto q = quadrature(c);
  const auto bound = c.bound;
  Plan plan;
  plan.header = {"item", "input_norm", "max_ratio", "argmax", "patterns", "converged"};
  plan.count = measures.size();
  plan.tolerances = {{"quadrature_rel_tol", q.rel_tol}};
  plan.parameters = {{"bound", bound ? Json(*bound) : Json(nullptr)}};
  plan.item = [measures, chain, q, bound](std::size_t i) {
    const auto s = sign_scan(decompose(measures[i], chain), q);
    Json patterns = Json::array();
    for (std::size_t k = 0; k < s.patterns.size(); ++k) {
      patterns.push_back({{"signs", s.patterns[k]}, {"ratio", s.ratios[k]}});
    }
    ItemResult r;
    r.ok = !bound || s.max_ratio <= *bound;
    r.converged = s.converged;
    r.json = {{"item", i},
              {"verdict", r.ok ? "pass" : "fail"},
              {"input_norm", s.input_norm},
              {"max_ratio", s.max_ratio},
              {"argmax", s.argmax_signs},
              {"patterns", patterns},
              {"quadrature_error", s.quadrature_error},
              {"converged", s.converged}};
    r.rows.push_back({std::to_string(i), num(s.input_norm), num(s.max_ratio), signs(s.argmax_signs),
                      std::to_string(s.patterns.size()), flag(s.converged)});
    return r;
  };
  return plan;
}

Plan analytic_plan(const Config& c) {
  const auto measures = load_measures(require_items(c));
  const auto chain = load_chain(c, measures.front().dim());
  Plan plan;
  plan.header = {"item", "verdict", "witness", "offending_cosets"};
  plan.count = measures.size();
  plan.tolerances = {{"compare", kCompareTolerance}};
  plan.item = [measures, chain](std::size_t i) {
    const auto a = is_analytic(measures[i], chain);
    ItemResult r;
    r.ok = a.verdict == Verdict::kYes;
    r.json = analyticity_json(a);
    r.json["item"] = i;
    r.rows.push_back({std::to_string(i), to_string(a.verdict), a.witness ? point(*a.witness) : "",
                      std::to_string(a.offending.size())});
    return r;
  };
  return plan;
}

Plan fm_riesz_plan(const Config& c) {
  const auto measures = load_measures(require_items(c));
  const auto chain = load_chain(c, measures.front().dim());
  const std::uint64_t seed = c.seed;
  Plan plan;
  plan.header = {"item", "input", "absolutely_continuous", "singular", "translations",
                 "commutation_failures", "verdict"};
  plan.count = measures.size();
  plan.tolerances = {{"prune", kPruneThreshold}};
  plan.parameters = {{"translations", 20}};
  plan.item = [measures, chain, seed](std::size_t i) {
    const auto f = fm_riesz_check(measures[i], chain, seed + i);
    ItemResult r;
    r.ok = f.passed();
    r.json = {{"item", i},
              {"verdict", r.ok ? "pass" : "fail"},
              {"input", to_string(f.input)},
              {"absolutely_continuous", to_string(f.absolutely_continuous)},
              {"singular", to_string(f.singular)},
              {"translations", f.translations_checked},
              {"commutation_failures", f.commutation_failures}};
    r.rows.push_back({std::to_string(i), to_string(f.input), to_string(f.absolutely_continuous),
                      to_string(f.singular), std::to_string(f.translations_checked),
                      std::to_string(f.commutation_failures), r.ok ? "pass" : "fail"});
    return r;
  };
  return plan;
}

Plan jensen_plan(const Config& c) {
  const auto polys = load_polys(require_items(c));
  const auto chain = load_chain(c, polys.front().dim());
  const auto q = quadrature(c);
  Plan plan;
  plan.header = {"item", "lhs", "rhs", "log_integral", "clipped_fraction", "grid", "outcome"};
  plan.count = polys.size();
  plan.tolerances = {{"jensen", kJensenTolerance},
                     {"log_clip", kLogClip},
                     {"clipped_fraction_limit", kClippedFractionLimit},
                     {"log_integral", kLogIntegralTolerance}};
  plan.item = [polys, chain, q](std::size_t i) {
    const auto j = jensen_check(polys[i], chain, q);
    ItemResult r;
    r.ok = j.outcome != Outcome::kFail;
    r.converged = j.converged;
    r.json = {{"item", i},
              {"verdict", to_string(j.outcome)},
              {"lhs", j.lhs},
              {"rhs", j.rhs},
              {"log_integral", j.log_integral},
              {"clipped_fraction", j.clipped_fraction},
              {"grid", j.grid},
              {"quadrature_error", j.quadrature_error},
              {"converged", j.converged}};
    r.rows.push_back({std::to_string(i), num(j.lhs), num(j.rhs), num(j.log_integral),
                      num(j.clipped_fraction), std::to_string(j.grid), to_string(j.outcome)});
    return r;
  };
  plan.summarize = [](const std::vector<ItemResult>& results) {
    std::map<std::string, std::size_t> counts{{"pass", 0}, {"fail", 0}, {"inconclusive", 0}};
    for (const auto& r : results) ++counts[r.json["verdict"].get<std::string>()];
    return Json{{"outcomes", counts}};
  };
  return plan;
}

Plan doob_plan(const Config& c) {
  const auto polys = load_polys(require_items(c));
  const auto chain = load_chain(c, polys.front().dim());
  const auto g = grid_options(c);
  Plan plan;
  plan.header = {"item", "lhs", "norm", "rhs", "grid", "verdict"};
  plan.count = polys.size();
  plan.tolerances = {{"relative_slack", 1e-6}, {"quadrature_rel_tol", g.quadrature.rel_tol}};
  plan.item = [polys, chain, g](std::size_t i) {
    const auto d = doob_check(polys[i], chain, g);
    ItemResult r;
    r.ok = d.passed();
    r.converged = d.converged;
    r.json = {{"item", i},
              {"verdict", r.ok ? "pass" : "fail"},
              {"lhs", d.lhs},
              {"norm", d.norm},
              {"rhs", d.rhs},
              {"grid", d.grid},
              {"quadrature_error", d.quadrature_error},
              {"converged", d.converged}};
    r.rows.push_back({std::to_string(i), num(d.lhs), num(d.norm), num(d.rhs), std::to_string(d.grid),
                      r.ok ? "pass" : "fail"});
    return r;
  };
  return plan;
}

Plan conditional_power_plan(const Config& c) {
  const auto polys = load_polys(require_items(c));
  const auto chain = load_chain(c, polys.front().dim());
  const auto g = grid_options(c);
  const auto ps = p_values(c);
  std::vector<std::size_t> stages;
  if (c.stage) {
    if (*c.stage < 1 || *c.stage > chain.length() + 1) throw ParseError("--stage out of range 1..k+1");
    stages.push_back(*c.stage);
  } else {
    for (std::size_t j = 1; j <= chain.length() + 1; ++j) stages.push_back(j);
  }
  Plan plan;
  plan.header = {"item", "p", "stage", "grid", "violations", "max_excess", "verdict"};
  plan.count = polys.size();
  plan.tolerances = {{"slack", kConditionalPowerSlack}, {"quadrature_rel_tol", g.quadrature.rel_tol}};
  plan.parameters = {{"p", ps}, {"stages", stages}};
  plan.item = [polys, chain, g, ps, stages](std::size_t i) {
    ItemResult r;
    Json checks = Json::array();
    for (double p : ps) {
      for (std::size_t j : stages) {
        const auto l = conditional_power_check(polys[i], chain, j, p, g);
        r.ok = r.ok && l.passed();
        r.converged = r.converged && l.converged;
        checks.push_back({{"p", p},
                          {"stage", j},
                          {"grid", l.grid},
                          {"violations", l.violations},
                          {"max_excess", l.max_excess},
                          {"quadrature_error", l.quadrature_error},
                          {"converged", l.converged}});
        r.rows.push_back({std::to_string(i), num(p), std::to_string(j), std::to_string(l.grid),
                          std::to_string(l.violations), num(l.max_excess), l.passed() ? "pass" : "fail"});
      }
    }
    r.json = {{"item", i}, {"verdict", r.ok ? "pass" : "fail"}, {"checks", checks}};
    return r;
  };
  return plan;
}

Plan burkholder_plan(const Config& c) {
  const auto polys = load_polys(require_items(c));
  const auto chain = load_chain(c, polys.front().dim());
  const auto g = grid_options(c);
  const auto ps = p_values(c);
  const auto bound = c.bound;
  Plan plan;
  plan.header = {"item", "p", "grid", "patterns", "max_ratio", "argmax", "verdict"};
  plan.count = polys.size();
  plan.parameters = {{"p", ps}, {"bound", bound ? Json(*bound) : Json(nullptr)}};
  plan.item = [polys, chain, g, ps, bound](std::size_t i) {
    ItemResult r;
    Json scans = Json::array();
    for (double p : ps) {
      const auto s = burkholder_scan(polys[i], chain, p, g);
      const bool ok = !bound || s.max_ratio <= *bound;
      r.ok = r.ok && ok;
      r.converged = r.converged && s.converged;
      Json js = pattern_json(s);
      js["p"] = p;
      scans.push_back(js);
      r.rows.push_back({std::to_string(i), num(p), std::to_string(s.grid), std::to_string(s.patterns.size()),
                        num(s.max_ratio), signs(s.argmax), ok ? "pass" : "fail"});
    }
    r.json = {{"item", i}, {"verdict", r.ok ? "pass" : "fail"}, {"scans", scans}};
    return r;
  };
  return plan;
}

Plan ucc_plan(const Config& c) {
  const auto polys = load_polys(require_items(c));
  const auto chain = load_chain(c, polys.front().dim());
  const auto q = quadrature(c);
  const auto bound = c.bound;
  Plan plan;
  plan.header = {"item", "patterns", "max_ratio", "argmax", "converged", "verdict"};
  plan.count = polys.size();
  plan.tolerances = {{"quadrature_rel_tol", q.rel_tol}};
  plan.parameters = {{"bound", bound ? Json(*bound) : Json(nullptr)}};
  plan.item = [polys, chain, q, bound](std::size_t i) {
    const auto s = h1_unconditionality_scan(polys[i], chain, q);
    ItemResult r;
    r.ok = !bound || s.max_ratio <= *bound;
    r.converged = s.converged;
    r.json = pattern_json(s);
    r.json["item"] = i;
    r.json["verdict"] = r.ok ? "pass" : "fail";
    r.rows.push_back({std::to_string(i), std::to_string(s.patterns.size()), num(s.max_ratio),
                      signs(s.argmax), flag(s.converged), r.ok ? "pass" : "fail"});
    return r;
  };
  return plan;
}

Plan transfer_plan(const Config& c) {
  if (c.nu.empty()) throw ParseError("transfer: --nu is required");
  const Measure nu = io::measure_from_json(io::read_file(c.nu));
  const auto corpus = load_measures(require_items(c));
  const std::size_t d1 = corpus.front().dim();

  std::optional<Homomorphism> hom;
  Json hom_source;
  if (!c.hom.empty()) {
    hom = io::hom_from_json(io::read_file(c.hom));
    hom_source = {{"matrix", io::to_json(*hom)["matrix"]}};
  } else if (c.stage) {
    const auto chain = load_chain(c, d1);
    if (*c.stage < 1 || *c.stage > chain.length()) {
      throw ParseError("--stage must lie in 1..k; the terminal stage has no functional");
    }
    hom = Homomorphism::functional(chain.functional(*c.stage));
    hom_source = {{"stage", *c.stage}, {"matrix", io::to_json(*hom)["matrix"]}};
  } else {
    throw ParseError("transfer: one of --hom and --stage is required");
  }
  if (hom->source_dim() != d1) throw ParseError("transfer: homomorphism source dimension differs from the corpus");
  if (hom->target_dim() != nu.dim()) throw ParseError("transfer: homomorphism target dimension differs from nu");

  const auto q = quadrature(c);
  const auto target = lexicographic_order(nu.dim());
  Plan plan;
  double bound = 0.0;
  Json estimate = nullptr;
  if (c.bound) {
    bound = *c.bound;
  } else {
    PolyCorpusOptions popts;
    popts.degree = 8;
    const auto est = empirical_norm(nu, poly_corpus(target, c.seed, 50, popts), q);
    bound = est.value;
    plan.converged = est.converged;
    estimate = {{"value", est.value}, {"quadrature_error", est.quadrature_error}, {"converged", est.converged},
                {"polynomials", 50}, {"degree", 8}};
  }
  const bool supplied = c.bound.has_value();

  plan.header = {"item", "ratio", "order_preserved", "exceeds_bound", "verdict"};
  plan.count = corpus.size();
  plan.tolerances = {{"relative", kTransferenceTolerance}, {"quadrature_rel_tol", q.rel_tol}};
  plan.parameters = {{"homomorphism", hom_source},
                     {"bound", bound},
                     {"bound_supplied", supplied},
                     {"empirical_norm", estimate}};
  const Homomorphism h = *hom;
  plan.item = [nu, corpus, h, target, bound, supplied, q](std::size_t i) {
    const auto t = transference_report(nu, h, target, {corpus[i]}, bound, {}, q);
    const bool exceeds = t.violations > 0;
    ItemResult r;
    r.ok = !(supplied && exceeds);
    r.converged = t.converged;
    const std::string verdict = !exceeds ? "pass" : supplied ? "fail" : "flagged";
    r.json = {{"item", i},
              {"verdict", verdict},
              {"ratio", t.ratios.front()},
              {"order_preserved", static_cast<bool>(t.order_preserved.front())},
              {"quadrature_error", t.quadrature_error},
              {"converged", t.converged}};
    r.rows.push_back({std::to_string(i), num(t.ratios.front()), flag(t.order_preserved.front()),
                      flag(exceeds), verdict});
    return r;
  };
  plan.summarize = [](const std::vector<ItemResult>& results) {
    double max_ratio = 0.0;
    std::size_t flagged = 0;
    for (const auto& r : results) {
      if (r.json["order_preserved"].get<bool>()) max_ratio = std::max(max_ratio, r.json["ratio"].get<double>());
      if (r.json["verdict"] == "flagged") ++flagged;
    }
    return Json{{"max_ratio_order_preserved", max_ratio}, {"flagged", flagged}};
  };
  return plan;
}

Plan pushforward_plan(const Config& c) {
  if (c.hom.empty()) throw ParseError("pushforward: --hom is required");
  const auto measures = load_measures(require_items(c));
  const Homomorphism h = io::hom_from_json(io::read_file(c.hom));
  if (h.target_dim() != measures.front().dim()) {
    throw ParseError("pushforward: homomorphism target dimension differs from the input");
  }
  Plan plan;
  plan.header = {"item", "atoms", "pushed_atoms", "window_max_error", "verdict"};
  plan.count = measures.size();
  plan.tolerances = {{"transform", kTransformTolerance}};
  plan.parameters = {{"window", kTransformWindow}, {"matrix", io::to_json(h)["matrix"]}};
  plan.item = [measures, h](std::size_t i) {
    const Measure& nu = measures[i];
    const Measure pushed = pushforward(nu, h);
    double err = 0.0;
    for_each_in_window(h.source_dim(), kTransformWindow, [&](const IntVec& chi) {
      err = std::max(err, std::abs(fourier_at(pushed, chi) - fourier_at(nu, h.psi(chi))));
    });
    ItemResult r;
    r.ok = err <= kTransformTolerance;
    r.json = {{"item", i},
              {"verdict", r.ok ? "pass" : "fail"},
              {"window_max_error", err},
              {"pushforward", io::to_json(pushed)}};
    r.rows.push_back({std::to_string(i), std::to_string(nu.atoms().size()),
                      std::to_string(pushed.atoms().size()), num(err), r.ok ? "pass" : "fail"});
    return r;
  };
  return plan;
}

Plan axioms_plan(const Config& c) {
  std::vector<io::OrderSpec> orders;
  if (!c.input.empty()) {
    for (const auto& j : io::read_items(c.input)) orders.push_back(io::order_from_json(j));
  } else if (!c.order.empty()) {
    orders.push_back(io::order_from_json(io::read_file(c.order)));
  } else {
    throw ParseError("axioms: --input or --order is required");
  }
  const std::size_t radius = c.radius;
  Plan plan;
  plan.header = {"item", "kind", "radius", "points_checked", "violations", "counterexample", "verdict"};
  plan.count = orders.size();
  plan.parameters = {{"radius", radius}};
  plan.item = [orders, radius](std::size_t i) {
    const auto& o = orders[i];
    const auto a = o.chain ? validate_axioms(*o.chain, radius)
                           : validate_axioms(o.dim, *o.predicate, radius);
    Json violations = Json::array();
    std::string axioms;
    std::string first;
    for (const auto& v : a.violations) {
      Json witness = Json::array();
      for (const auto& w : v.witness) witness.push_back(io::to_json(w));
      violations.push_back({{"axiom", v.axiom}, {"witness", witness}});
      if (!axioms.empty()) axioms += ";";
      axioms += v.axiom;
      if (first.empty()) {
        for (std::size_t k = 0; k < v.witness.size(); ++k) first += (k ? " " : "") + point(v.witness[k]);
      }
    }
    ItemResult r;
    r.ok = a.passed();
    r.json = {{"item", i},
              {"verdict", r.ok ? "pass" : "fail"},
              {"kind", o.chain ? "functionals" : "predicate"},
              {"points_checked", a.points_checked},
              {"violations", violations}};
    r.rows.push_back({std::to_string(i), o.chain ? "functionals" : "predicate", std::to_string(radius),
                      std::to_string(a.points_checked), axioms, first, r.ok ? "pass" : "fail"});
    return r;
  };
  return plan;
}

Plan corpus_gen_plan(const Config& c) {
  if (c.kind != "measures" && c.kind != "polys") throw ParseError("--kind must be measures or polys");
  OrderChain chain = lexicographic_order(c.dim);
  if (!c.order.empty()) {
    const auto spec = io::order_from_json(io::read_file(c.order));
    if (!spec.chain) throw ParseError("order: predicate orders are only accepted by the axioms suite");
    chain = *spec.chain;
  }
  std::vector<Json> objects;
  if (c.kind == "measures") {
    MeasureCorpusOptions opts;
    opts.analytic = c.analytic;
    for (const auto& m : measure_corpus(chain, c.seed, c.n, opts)) objects.push_back(io::to_json(m));
  } else {
    PolyCorpusOptions opts;
    opts.analytic = c.analytic;
    for (const auto& f : poly_corpus(chain, c.seed, c.n, opts)) objects.push_back(io::to_json(f));
  }
  const fs::path dir = fs::path(c.out) / "corpus";
  fs::create_directories(dir);

  const bool measures = c.kind == "measures";
  const std::string kind = c.kind;
  Plan plan;
  plan.header = {"item", "file", "terms", "reload_exact"};
  plan.count = objects.size();
  plan.parameters = {{"kind", kind}, {"n", c.n}, {"analytic", c.analytic}, {"order", io::to_json(chain)}};
  plan.item = [objects, dir, measures, kind](std::size_t i) {
    char name[32];
    std::snprintf(name, sizeof name, "%s_%03zu.json", kind == "measures" ? "measure" : "poly", i);
    io::write_file(dir / name, objects[i]);
    const Json back = io::read_file(dir / name);
    const Json again = measures ? io::to_json(io::measure_from_json(back)) : io::to_json(io::poly_from_json(back));
    const std::size_t terms = measures ? objects[i]["atoms"].size() : objects[i]["coeffs"].size();
    ItemResult r;
    r.ok = again == objects[i];
    r.json = {{"item", i}, {"verdict", r.ok ? "pass" : "fail"}, {"file", std::string("corpus/") + name},
              {"terms", terms}, {"reload_exact", r.ok}};
    r.rows.push_back({std::to_string(i), std::string("corpus/") + name, std::to_string(terms), flag(r.ok)});
    return r;
  };
  return plan;
}

using PlanFactory = Plan (*)(const Config&);

const std::map<std::string, PlanFactory>& registry() {
  static const std::map<std::string, PlanFactory> r{
      {"decompose", decompose_plan},   {"sign-scan", sign_scan_plan},
      {"analytic", analytic_plan},     {"fm-riesz", fm_riesz_plan},
      {"jensen", jensen_plan},         {"doob", doob_plan},
      {"cond-power", conditional_power_plan},       {"burkholder", burkholder_plan},
      {"ucc", ucc_plan},               {"transfer", transfer_plan},
      {"transfer-report", transfer_plan}, {"pushforward", pushforward_plan},
      {"axioms", axioms_plan},         {"corpus-gen", corpus_gen_plan},
  };
  return r;
}

std::vector<ItemResult> run_items(const Plan& plan, std::size_t jobs) {
  std::vector<ItemResult> results(plan.count);
  std::vector<std::exception_ptr> errors(plan.count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < plan.count; i = next++) {
      try {
        results[i] = plan.item(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t threads = std::min(std::max<std::size_t>(jobs, 1), std::max<std::size_t>(plan.count, 1));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

void write_csv(const fs::path& path, const Row& header, const std::vector<ItemResult>& results) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  auto line = [&](const Row& row) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(row[i]);
    out << '\n';
  };
  line(header);
  for (const auto& r : results) {
    for (const auto& row : r.rows) line(row);
  }
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& [name, factory] : registry()) names.push_back(name);
  return names;
}

int run(const Config& config, std::ostream& log) {
  const auto it = registry().find(config.suite);
  if (it == registry().end()) {
    log << "error: unknown suite \"" << config.suite << "\"\n";
    return kExitParse;
  }
  if (config.out.empty()) {
    log << "error: --out is required\n";
    return kExitParse;
  }

  Plan plan;
  std::vector<ItemResult> results;
  try {
    fs::create_directories(config.out);
    plan = it->second(config);
    results = run_items(plan, config.jobs);
  } catch (const ParseError& e) {
    log << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const InvalidArgument& e) {
    log << "error: " << e.what() << '\n';
    return kExitParse;
  }

  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t nonconverged = 0;
  Json items = Json::array();
  for (const auto& r : results) {
    r.ok ? ++passed : ++failed;
    if (!r.converged) ++nonconverged;
    items.push_back(r.json);
  }
  const bool converged = plan.converged && nonconverged == 0;
  const int code = !converged ? kExitNonConvergence : failed > 0 ? kExitAssertion : kExitOk;
  const char* status = code == kExitOk ? "pass" : code == kExitAssertion ? "fail" : "nonconverged";

  Json summary = {{"items", results.size()}, {"passed", passed}, {"failed", failed},
                  {"nonconverged", nonconverged}};
  if (plan.summarize) summary.update(plan.summarize(results));
  const Json report = {{"suite", config.suite},
                       {"status", status},
                       {"exit_code", code},
                       {"config", {{"seed", config.seed},
                                   {"grid", config.grid ? Json(*config.grid) : Json(nullptr)},
                                   {"tol", tolerance(config)}}},
                       {"tolerances", plan.tolerances},
                       {"parameters", plan.parameters},
                       {"summary", summary},
                       {"items", items}};
  const fs::path out(config.out);
  io::write_file(out / (config.suite + ".json"), report);
  write_csv(out / (config.suite + ".csv"), plan.header, results);

  log << config.suite << ": " << status << " (" << passed << " passed, " << failed << " failed, "
      << nonconverged << " nonconverged)\n";
  return code;
}

}  // namespace rieszkit::cli
