#include "dlim/io.hpp"
#include "support.hpp"

using namespace test;

TEST_CASE("syntax errors carry line and column") {
  try {
    parse_json("{\n  \"a\": [1,\n}", "doc.json");
    FAIL("parsed");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).rfind("doc.json:3:1: ", 0) == 0);
  }
  CHECK_THROWS_AS(read_json_file("/nonexistent/file.json"), ParseError);
}

TEST_CASE("posets round-trip through JSON") {
  auto r = rng(71);
  for (int trial = 0; trial < 30; ++trial) {
    auto P = random_poset(r, uniform(r, 1, 6));
    CHECK(poset_from_json(parse_json(to_json(P).dump())) == P);
  }
  CHECK_THROWS_AS(poset_from_json(parse_json(R"({"elements": ["a", "b"], "leq": [["a", "b"], ["b", "a"]]})")),
                  AxiomViolation);
  CHECK_THROWS_AS(poset_from_json(parse_json(R"({"elements": ["a"], "leq": [["a", "z"]]})")), InputError);
  CHECK_THROWS_AS(poset_from_json(parse_json(R"({"elements": "a"})")), ParseError);
}

TEST_CASE("diagrams round-trip through JSON") {
  auto r = rng(72);
  for (int trial = 0; trial < 30; ++trial) {
    auto P = random_poset(r, uniform(r, 1, 5));
    auto D = random_diagram(r, P, 2);
    auto back = diagram_from_json(parse_json(to_json(D).dump()));
    CHECK(back.base() == P);
    CHECK(back.groups() == D.groups());
    for (Index p = 0; p < P.size(); ++p)
      for (Index q = 0; q < P.size(); ++q)
        if (P.leq(p, q)) CHECK(back.map(p, q) == D.map(p, q));
  }
}

TEST_CASE("diagram documents are validated") {
  const std::string base = R"("poset": {"elements": ["a", "b"], "leq": [["a", "b"]]})";
  CHECK_THROWS_AS(diagram_from_json(parse_json("{" + base + R"(, "groups": {"a": {"rank": 1}}})")), ParseError);
  CHECK_THROWS_AS(diagram_from_json(parse_json("{" + base + R"(, "groups": {"a": {"rank": 1}, "b": {"rank": 1}}})")),
                  ParseError);
  // A map into the zero group may be omitted.
  auto zero = diagram_from_json(parse_json("{" + base + R"(, "groups": {"a": {"rank": 1}, "b": {}}})"));
  CHECK(zero.group(1).is_trivial());
  CHECK_THROWS_AS(
      diagram_from_json(parse_json("{" + base +
                                   R"(, "groups": {"a": {"rank": 1}, "b": {"rank": 1}}, "maps": {"a<b": [[1, 2]]}})")),
      ParseError);
  CHECK_THROWS_AS(diagram_from_json(parse_json(
                      "{" + base + R"(, "groups": {"a": {"torsion": [2]}, "b": {"rank": 1}}, "maps": {"a<b": [[1]]}})")),
                  IllDefined);
  auto torsion = diagram_from_json(parse_json(
      "{" + base + R"(, "groups": {"a": {"rank": 1}, "b": {"torsion": ["4"]}}, "maps": {"a<b": [["5"]]}})"));
  CHECK(torsion.map(0, 1) == int_matrix({{1}}));
}

TEST_CASE("metric spaces, measures and hyperpoints") {
  auto X = metric_space_from_json(parse_json(R"({"points": ["a", "b"], "dist": [[0, "1/2"], ["1/2", 0]]})"));
  CHECK(X(0, 1) == q(1, 2));
  CHECK(metric_space_from_json(parse_json(to_json(X).dump())).matrix() == X.matrix());
  CHECK_THROWS_AS(metric_space_from_json(parse_json(R"({"points": ["a", "b"], "dist": [[0, 1], [2, 0]]})")),
                  MetricViolation);
  auto m = measure_from_json(parse_json(R"({"a": "1/4", "b": "3/4"})"), X);
  CHECK(m == FiniteMeasure<Rational>{{0, q(1, 4)}, {1, q(3, 4)}});
  CHECK(measure_from_json(parse_json(to_json(m, X).dump()), X) == m);
  CHECK_THROWS_AS(measure_from_json(parse_json(R"({"a": "1/4"})"), X), NotProbability);
  auto h = hyperpoint_from_json(parse_json(R"({"chain": [["a"], ["a", "b"]], "weights": ["1/3", "2/3"]})"), X);
  CHECK(h.chain == std::vector<Subset>{{0}, {0, 1}});
  CHECK(hyperpoint_from_json(parse_json(to_json(h, X).dump()), X) == h);
  CHECK_THROWS_AS(subset_from_json(parse_json("[]"), X), EmptySubset);
  CHECK_THROWS_AS(subset_from_json(parse_json(R"(["q"])"), X), InputError);
}

TEST_CASE("space diagrams round-trip through JSON") {
  auto r = rng(73);
  for (int trial = 0; trial < 20; ++trial) {
    auto P = random_poset(r, uniform(r, 1, 4));
    auto D = random_space_diagram(r, P, 5);
    auto back = space_diagram_from_json(parse_json(to_json(D).dump()));
    CHECK(back.base() == P);
    for (Index p = 0; p < P.size(); ++p) {
      CHECK(back.complex(p).labels() == D.complex(p).labels());
      CHECK(back.complex(p).maximal_simplices() == D.complex(p).maximal_simplices());
      for (Index q = 0; q < P.size(); ++q)
        if (P.leq(p, q)) CHECK(back.map(p, q) == D.map(p, q));
    }
  }
}

TEST_CASE("scalar fields") {
  CHECK(rational_from_json(parse_json("\"-3/9\"")) == q(-1, 3));
  CHECK(rational_from_json(parse_json("7")) == q(7));
  CHECK_THROWS_AS(rational_from_json(parse_json("0.5")), ParseError);
  CHECK(integer_from_json(parse_json("\"123456789012345678901234567890\"")) ==
        Integer("123456789012345678901234567890"));
  CHECK(to_json(FgAbGroup(1, {2}))["name"] == "Z + Z/2");
  CHECK(label_of(parse_json("5")) == "5");
}
