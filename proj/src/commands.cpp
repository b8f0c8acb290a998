#include "dlim/commands.hpp"

namespace dlim {

namespace {

Json header(const std::string& command, const std::string& input) {
  return Json{{"command", command}, {"inputs_digest", fnv1a_hex(input)}};
}

void finish(Report& r, Json assertions) {
  for (const auto& a : assertions) r.passed = r.passed && a["passed"].get<bool>();
  r.json["assertions"] = std::move(assertions);
  r.json["passed"] = r.passed;
}

Json assertion(const std::string& name, bool passed) { return Json{{"name", name}, {"passed", passed}}; }

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

const Json& required_array(const Json& j, const char* key, const std::string& command) {
  if (!j.contains(key) || !j[key].is_array())
    throw ParseError(command + " needs an array \"" + std::string(key) + "\" in the input");
  return j[key];
}

Report metric_hausdorff(const Json& j, const std::string& input) {
  auto X = metric_space_from_json(j);
  std::vector<Subset> subsets;
  for (const auto& s : required_array(j, "subsets", "hausdorff")) subsets.push_back(subset_from_json(s, X));
  Report r;
  r.json = header("metric hausdorff", input);
  Json results = Json::array(), assertions = Json::array();
  std::vector<std::string> lines;
  for (std::size_t a = 0; a < subsets.size(); ++a)
    for (std::size_t b = a + 1; b < subsets.size(); ++b) {
      const Rational d = hausdorff_distance(X, subsets[a], subsets[b]);
      const Rational e = embedding_distance(X, subsets[a], subsets[b]);
      const std::string name = "d(A" + std::to_string(a + 1) + ",A" + std::to_string(b + 1) + ")";
      results.push_back(Json{{"pair", {a + 1, b + 1}}, {"hausdorff", to_string(d)}, {"embedding", to_string(e)}});
      assertions.push_back(assertion(name + " hausdorff = embedding", d == e));
      lines.push_back(name + " = " + to_string(d));
    }
  r.text = join(lines, "\n");
  r.json["results"] = std::move(results);
  finish(r, std::move(assertions));
  return r;
}

Report metric_kantorovich(const Json& j, const std::string& input) {
  auto X = metric_space_from_json(j);
  std::vector<FiniteMeasure<Rational>> measures;
  for (const auto& m : required_array(j, "measures", "kantorovich")) measures.push_back(measure_from_json(m, X));
  bool discrete = true;
  for (Index a = 0; a < X.size(); ++a)
    for (Index b = 0; b < X.size(); ++b)
      if (a != b && X(a, b) != 1) discrete = false;
  Report r;
  r.json = header("metric kantorovich", input);
  Json results = Json::array(), assertions = Json::array();
  std::vector<std::string> lines;
  for (std::size_t a = 0; a < measures.size(); ++a)
    for (std::size_t b = a + 1; b < measures.size(); ++b) {
      const auto plan = optimal_transport(X, measures[a], measures[b]);
      const Rational half_l1 = l1_distance(measures[a], measures[b]) / 2;
      Json flows = Json::array();
      for (const auto& [i, k, mass] : plan.flows) flows.push_back(Json{{"from", X.label(i)}, {"to", X.label(k)}, {"mass", to_string(mass)}});
      const std::string name = "rho(m" + std::to_string(a + 1) + ",m" + std::to_string(b + 1) + ")";
      results.push_back(Json{{"pair", {a + 1, b + 1}}, {"kantorovich", to_string(plan.cost)},
                             {"half_l1", to_string(half_l1)}, {"plan", flows}});
      if (discrete) assertions.push_back(assertion(name + " = l1/2 on a discrete metric", plan.cost == half_l1));
      lines.push_back(name + " = " + to_string(plan.cost) + (discrete ? " (l1/2 = " + to_string(half_l1) + ")" : ""));
    }
  r.text = join(lines, "\n");
  r.json["results"] = std::move(results);
  finish(r, std::move(assertions));
  return r;
}

Report metric_hm(const std::optional<Json>& j, const std::string& input, std::optional<Index> gap) {
  Report r;
  r.json = header("metric hm", input);
  Json results = Json::array(), assertions = Json::array();
  std::vector<std::string> lines;
  if (gap) {
    auto g = gap_family(*gap);
    results.push_back(Json{{"n", *gap}, {"L1", to_string(g.l1)}, {"rho", to_string(g.kantorovich)}});
    assertions.push_back(assertion("gap family L1 = 1", g.l1 == 1));
    assertions.push_back(assertion("gap family rho = 1/n", g.kantorovich == Rational(1, *gap)));
    lines.push_back("L1=" + to_string(g.l1) + ", rho=" + to_string(g.kantorovich));
  }
  if (j) {
    auto X = metric_space_from_json(*j);
    Json pj{{"elements", X.labels()}, {"leq", j->contains("leq") ? (*j)["leq"] : Json::array()}};
    auto P = poset_from_json(pj);
    std::vector<WeightedChain<Rational>> chains;
    for (const auto& c : required_array(*j, "chains", "hm")) chains.push_back(weighted_chain_from_json(c, P));
    for (std::size_t a = 0; a < chains.size(); ++a)
      for (std::size_t b = a + 1; b < chains.size(); ++b) {
        const Rational l1 = l1_step_distance(X, step_function_of(chains[a]), step_function_of(chains[b]));
        const Rational rho = kantorovich_distance(X, measure_of(chains[a]), measure_of(chains[b]));
        const std::string name = "(c" + std::to_string(a + 1) + ",c" + std::to_string(b + 1) + ")";
        results.push_back(Json{{"pair", {a + 1, b + 1}}, {"L1", to_string(l1)}, {"rho", to_string(rho)}});
        assertions.push_back(assertion("rho <= L1 on " + name, rho <= l1));
        lines.push_back(name + ": L1=" + to_string(l1) + ", rho=" + to_string(rho));
      }
  }
  if (!gap && !j) throw InputError("hm needs --input or --gap-family");
  r.text = join(lines, "\n");
  r.json["results"] = std::move(results);
  finish(r, std::move(assertions));
  return r;
}

Report metric_simhyp(const Json& j, const std::string& input) {
  auto X = metric_space_from_json(j);
  std::vector<HyperPoint<Rational>> points;
  for (const auto& h : required_array(j, "hyperpoints", "simhyp")) points.push_back(hyperpoint_from_json(h, X));
  std::optional<Rational> eps;
  if (j.contains("eps")) eps = rational_from_json(j["eps"]);
  Report r;
  r.json = header("metric simhyp", input);
  Json embeddings = Json::array(), results = Json::array(), assertions = Json::array();
  std::vector<std::string> lines;
  for (std::size_t a = 0; a < points.size(); ++a) {
    auto f = embed_hyperpoint(X, points[a], true);
    Json values = Json::object();
    for (Index p = 0; p < X.size(); ++p) values[X.label(p)] = to_string(f.values[static_cast<std::size_t>(p)]);
    values["+"] = to_string(*f.adjoined);
    embeddings.push_back(values);
    bool recovered = false;
    try {
      recovered = recover_minimal_chain(X, f) == points[a];
    } catch (const InputError&) {
    }
    assertions.push_back(assertion("h" + std::to_string(a + 1) + " recovered from its embedding", recovered));
  }
  for (std::size_t a = 0; a < points.size(); ++a)
    for (std::size_t b = a + 1; b < points.size(); ++b) {
      auto c = phi_comparison(X, points[a], points[b], eps);
      const std::string name = "(h" + std::to_string(a + 1) + ",h" + std::to_string(b + 1) + ")";
      Json row{{"pair", {a + 1, b + 1}},
               {"supnorm", to_string(c.supnorm)},
               {"L1", to_string(c.l1)},
               {"ky_fan", to_string(c.ky_fan)},
               {"kantorovich", to_string(c.kantorovich)}};
      if (eps) {
        row["ky_fan_bound"] = to_string(c.ky_fan_bound);
        row["ky_fan_bound_applies"] = c.ky_fan_applicable;
      }
      results.push_back(std::move(row));
      assertions.push_back(assertion("supnorm <= L1 on " + name, c.supnorm_below_l1));
      assertions.push_back(assertion("kantorovich <= L1 on " + name, c.kantorovich_below_l1));
      if (eps) assertions.push_back(assertion("Ky Fan bound on " + name, c.ky_fan_holds));
      lines.push_back(name + ": supnorm=" + to_string(c.supnorm) + ", L1=" + to_string(c.l1) +
                      ", kyfan=" + to_string(c.ky_fan) + ", rho=" + to_string(c.kantorovich));
    }
  r.text = join(lines, "\n");
  r.json["embeddings"] = std::move(embeddings);
  r.json["results"] = std::move(results);
  finish(r, std::move(assertions));
  return r;
}

}  // namespace

Report cmd_limp(const std::string& input, const std::string& source, std::optional<Index> max_degree) {
  auto D = diagram_from_json(parse_json(input, source));
  const Index top = max_degree ? *max_degree : std::max<Index>(order_complex(D.base()).dimension(), 0);
  if (top < 0) throw InputError("--max-degree must be nonnegative");
  auto limits = derived_limits(D, top);
  Report r;
  r.json = header("limp", input);
  Json results = Json::array();
  std::vector<std::string> parts;
  for (Index p = 0; p <= top; ++p) {
    const auto& g = limits[static_cast<std::size_t>(p)];
    Json entry = to_json(g);
    entry["degree"] = p;
    results.push_back(std::move(entry));
    parts.push_back("lim^" + std::to_string(p) + " = " + g.to_string());
  }
  r.text = join(parts, ", ");
  r.json["results"] = std::move(results);
  Json assertions = Json::array();
  assertions.push_back(assertion("lim^0 equals compatible families", limits[0] == lim_direct(D)));
  finish(r, std::move(assertions));
  return r;
}

Report cmd_metric(const std::string& subcommand, const std::optional<std::string>& input,
                  const std::string& source, std::optional<Index> gap_family) {
  std::optional<Json> j;
  if (input) j = parse_json(*input, source);
  const std::string text = input.value_or("");
  if (subcommand == "hm") return metric_hm(j, text, gap_family);
  if (!j) throw InputError("metric " + subcommand + " needs --input");
  if (subcommand == "hausdorff") return metric_hausdorff(*j, text);
  if (subcommand == "kantorovich") return metric_kantorovich(*j, text);
  if (subcommand == "simhyp") return metric_simhyp(*j, text);
  throw InputError("unknown metric subcommand '" + subcommand + "'");
}

Report cmd_e2(const std::string& input, const std::string& source, Field field) {
  auto D = space_diagram_from_json(parse_json(input, source));
  auto page = bk_e2(D, field);
  Report r;
  r.json = header("e2", input);
  r.json["field"] = field == Field::rational ? "q" : "z";
  Json rows = Json::array();
  std::vector<std::string> lines;
  for (Index p = 0; p < page.p_size(); ++p) {
    Json row = Json::array();
    std::vector<std::string> cells;
    for (Index q = 0; q < page.q_size(); ++q) {
      if (field == Field::integers) {
        const auto& g = page.integral[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
        row.push_back(g.to_string());
        cells.push_back(g.to_string());
      } else {
        row.push_back(page.dim(p, q));
        cells.push_back(std::to_string(page.dim(p, q)));
      }
    }
    rows.push_back(std::move(row));
    lines.push_back("E2^{" + std::to_string(p) + ",*}: " + join(cells, " "));
  }
  auto betti = hocolim_betti(D);
  std::vector<std::string> b;
  for (Index x : betti) b.push_back(std::to_string(x));
  lines.push_back("hocolim Betti: " + join(b, " "));
  auto euler = check_euler(D, field);
  lines.push_back("Euler: E2 " + to_string(euler.e2_side) + ", hocolim " + to_string(euler.hocolim_side) +
                  ", simplices " + to_string(euler.simplex_count));
  Json assertions = Json::array();
  assertions.push_back(assertion("Euler characteristic", euler.passed()));
  r.json["e2"] = std::move(rows);
  r.json["hocolim_betti"] = betti;
  r.json["euler"] = Json{{"e2", to_string(euler.e2_side)},
                         {"hocolim", to_string(euler.hocolim_side)},
                         {"simplex_count", to_string(euler.simplex_count)}};
  if (order_complex(D.base()).dimension() <= 1) {
    auto milnor = check_milnor(D, field);
    r.json["milnor"] = Json{{"hocolim", milnor.hocolim}, {"predicted", milnor.predicted}};
    assertions.push_back(assertion("two-column degeneration", milnor.passed()));
    lines.push_back(std::string("Milnor: ") + (milnor.passed() ? "holds" : "fails"));
  }
  r.text = join(lines, "\n");
  finish(r, std::move(assertions));
  return r;
}

Report cmd_verify(Suite suite, std::uint64_t seed, bool with_timing) {
  auto results = run_suite(suite, seed);
  Report r;
  r.json = suite_report(suite, seed, results, with_timing);
  r.json = Json{{"command", "verify"}, {"seed", seed}, {"report", r.json}};
  std::vector<std::string> lines;
  for (const auto& c : results) {
    r.passed = r.passed && c.passed;
    lines.push_back(std::string(c.passed ? "PASS" : "FAIL") + "  " + std::to_string(c.id) + ". " + c.name + ": " + c.detail);
  }
  r.json["passed"] = r.passed;
  r.text = join(lines, "\n");
  return r;
}

}  // namespace dlim
