#include "dlim/io.hpp"

#include <fstream>
#include <sstream>

namespace dlim {

namespace {

const Json& field(const Json& j, const char* key, const char* what) {
  if (!j.is_object()) throw ParseError(std::string(what) + " must be a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string(what) + " is missing \"" + key + "\"");
  return *it;
}

const Json& array_field(const Json& j, const char* key, const char* what) {
  const Json& a = field(j, key, what);
  if (!a.is_array()) throw ParseError(std::string(what) + ": \"" + key + "\" must be an array");
  return a;
}

std::pair<std::string, std::string> split_pair_key(const std::string& key) {
  auto at = key.find('<');
  if (at == std::string::npos || key.find('<', at + 1) != std::string::npos)
    throw ParseError("map key '" + key + "' is not of the form \"p<q\"");
  return {key.substr(0, at), key.substr(at + 1)};
}

IntMatrix matrix_from_json(const Json& j, Index rows, Index cols, const std::string& what) {
  if (!j.is_array()) throw ParseError(what + ": matrix must be an array of rows");
  IntMatrix m = IntMatrix::Zero(rows, cols);
  if (rows == 0 || cols == 0) {
    if (static_cast<Index>(j.size()) != rows && !j.empty())
      throw ParseError(what + ": expected a " + std::to_string(rows) + "x" + std::to_string(cols) + " matrix");
    return m;
  }
  if (static_cast<Index>(j.size()) != rows)
    throw ParseError(what + ": expected " + std::to_string(rows) + " rows, got " + std::to_string(j.size()));
  for (Index i = 0; i < rows; ++i) {
    const Json& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Index>(row.size()) != cols)
      throw ParseError(what + ": row " + std::to_string(i) + " must have " + std::to_string(cols) + " entries");
    for (Index k = 0; k < cols; ++k) m(i, k) = integer_from_json(row[static_cast<std::size_t>(k)]);
  }
  return m;
}

}  // namespace

Json parse_json(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, col = 1;
    const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') ++line, col = 1;
      else ++col;
    }
    std::string message = e.what();
    auto cut = message.find(": ", message.find("parse error"));
    if (cut != std::string::npos) message = message.substr(cut + 2);
    throw ParseError(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + message);
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Json read_json_file(const std::string& path) { return parse_json(read_text_file(path), path); }

std::string label_of(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return j.dump();
  throw ParseError("labels must be strings or integers, got " + j.dump());
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<long long>());
  if (j.is_string()) return parse_integer(j.get<std::string>());
  throw ParseError("expected an integer, got " + j.dump());
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw ParseError("expected a rational as an integer or an \"a/b\" string, got " + j.dump());
}

FinitePoset poset_from_json(const Json& j) {
  std::vector<std::string> elements;
  for (const auto& e : array_field(j, "elements", "poset")) elements.push_back(label_of(e));
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto& e : elements) pairs.emplace_back(e, e);
  if (j.contains("leq")) {
    for (const auto& pq : array_field(j, "leq", "poset")) {
      if (!pq.is_array() || pq.size() != 2) throw ParseError("poset: each leq entry must be a pair [p, q]");
      pairs.emplace_back(label_of(pq[0]), label_of(pq[1]));
    }
  }
  return validate_poset(elements, pairs);
}

Json to_json(const FinitePoset& poset) {
  Json j;
  j["elements"] = poset.labels();
  Json leq = Json::array();
  for (Index p = 0; p < poset.size(); ++p)
    for (Index q = 0; q < poset.size(); ++q)
      if (poset.less(p, q)) leq.push_back({poset.label(p), poset.label(q)});
  j["leq"] = std::move(leq);
  return j;
}

Json to_json(const FgAbGroup& group) {
  Json t = Json::array();
  for (const auto& d : group.torsion()) t.push_back(to_string(d));
  return Json{{"rank", group.free_rank()}, {"torsion", t}, {"name", group.to_string()}};
}

Json to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index k = 0; k < m.cols(); ++k) row.push_back(to_string(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

PosetDiagram diagram_from_json(const Json& j) {
  FinitePoset poset = poset_from_json(field(j, "poset", "diagram"));
  const Json& gj = field(j, "groups", "diagram");
  if (!gj.is_object()) throw ParseError("diagram: \"groups\" must be an object keyed by element");
  std::vector<FgAbGroup> groups(static_cast<std::size_t>(poset.size()));
  std::vector<bool> seen(static_cast<std::size_t>(poset.size()), false);
  for (const auto& [key, value] : gj.items()) {
    const Index p = poset.index_of(key);
    Index rank = 0;
    std::vector<Integer> torsion;
    if (value.contains("rank")) {
      const Json& r = value["rank"];
      if (!r.is_number_integer() || r.get<long long>() < 0) throw ParseError("diagram: rank of " + key + " must be a nonnegative integer");
      rank = r.get<Index>();
    }
    if (value.contains("torsion")) {
      if (!value["torsion"].is_array()) throw ParseError("diagram: torsion of " + key + " must be an array");
      for (const auto& t : value["torsion"]) torsion.push_back(integer_from_json(t));
    }
    groups[static_cast<std::size_t>(p)] = FgAbGroup(rank, torsion);
    seen[static_cast<std::size_t>(p)] = true;
  }
  for (Index p = 0; p < poset.size(); ++p)
    if (!seen[static_cast<std::size_t>(p)]) throw ParseError("diagram: no group given for " + poset.label(p));

  CoverMaps maps;
  if (j.contains("maps")) {
    const Json& mj = j["maps"];
    if (!mj.is_object()) throw ParseError("diagram: \"maps\" must be an object keyed by \"p<q\"");
    for (const auto& [key, value] : mj.items()) {
      auto [ps, qs] = split_pair_key(key);
      const Index p = poset.index_of(ps), q = poset.index_of(qs);
      if (!poset.covers(p, q)) throw ParseError("diagram: " + key + " is not a covering pair");
      maps[{p, q}] = matrix_from_json(value, groups[static_cast<std::size_t>(q)].generator_count(),
                                      groups[static_cast<std::size_t>(p)].generator_count(), "map " + key);
    }
  }
  for (auto [p, q] : poset.covers()) {
    if (maps.count({p, q})) continue;
    const Index rows = groups[static_cast<std::size_t>(q)].generator_count();
    const Index cols = groups[static_cast<std::size_t>(p)].generator_count();
    if (rows != 0 && cols != 0)
      throw ParseError("diagram: missing map for covering pair " + poset.label(p) + "<" + poset.label(q));
    maps[{p, q}] = IntMatrix::Zero(rows, cols);
  }
  return PosetDiagram::from_covers(std::move(poset), std::move(groups), maps);
}

Json to_json(const PosetDiagram& diagram) {
  const FinitePoset& poset = diagram.base();
  Json groups = Json::object(), maps = Json::object();
  for (Index p = 0; p < poset.size(); ++p) {
    Json t = Json::array();
    for (const auto& d : diagram.group(p).torsion()) t.push_back(to_string(d));
    groups[poset.label(p)] = Json{{"rank", diagram.group(p).free_rank()}, {"torsion", t}};
  }
  for (auto [p, q] : poset.covers()) maps[poset.label(p) + "<" + poset.label(q)] = to_json(diagram.map(p, q));
  return Json{{"poset", to_json(poset)}, {"groups", groups}, {"maps", maps}};
}

FiniteMetricSpace<Rational> metric_space_from_json(const Json& j) {
  std::vector<std::string> points;
  for (const auto& p : array_field(j, "points", "metric space")) points.push_back(label_of(p));
  const Index n = static_cast<Index>(points.size());
  const Json& dj = array_field(j, "dist", "metric space");
  if (static_cast<Index>(dj.size()) != n) throw ParseError("metric space: dist must have one row per point");
  RatMatrix d(n, n);
  for (Index i = 0; i < n; ++i) {
    const Json& row = dj[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Index>(row.size()) != n)
      throw ParseError("metric space: dist row " + std::to_string(i) + " must have " + std::to_string(n) + " entries");
    for (Index k = 0; k < n; ++k) d(i, k) = rational_from_json(row[static_cast<std::size_t>(k)]);
  }
  return FiniteMetricSpace<Rational>(std::move(points), std::move(d));
}

Json to_json(const FiniteMetricSpace<Rational>& space) {
  Json rows = Json::array();
  for (Index i = 0; i < space.size(); ++i) {
    Json row = Json::array();
    for (Index k = 0; k < space.size(); ++k) row.push_back(to_string(space(i, k)));
    rows.push_back(std::move(row));
  }
  return Json{{"points", space.labels()}, {"dist", rows}};
}

FiniteMeasure<Rational> measure_from_json(const Json& j, const FiniteMetricSpace<Rational>& space) {
  if (!j.is_object()) throw ParseError("measure must be an object {\"point\": \"weight\"}");
  FiniteMeasure<Rational> m;
  for (const auto& [key, value] : j.items()) m[space.index_of(key)] += rational_from_json(value);
  return make_probability(space, m);
}

Json to_json(const FiniteMeasure<Rational>& measure, const FiniteMetricSpace<Rational>& space) {
  Json j = Json::object();
  for (const auto& [p, w] : measure) j[space.label(p)] = to_string(w);
  return j;
}

Subset subset_from_json(const Json& j, const FiniteMetricSpace<Rational>& space) {
  if (!j.is_array()) throw ParseError("subset must be an array of point labels");
  std::vector<Index> points;
  for (const auto& p : j) points.push_back(space.index_of(label_of(p)));
  return make_subset(std::move(points));
}

HyperPoint<Rational> hyperpoint_from_json(const Json& j, const FiniteMetricSpace<Rational>& space) {
  std::vector<Subset> chain;
  for (const auto& s : array_field(j, "chain", "hyperpoint")) chain.push_back(subset_from_json(s, space));
  std::vector<Rational> weights;
  for (const auto& w : array_field(j, "weights", "hyperpoint")) weights.push_back(rational_from_json(w));
  return make_hyperpoint(space, std::move(chain), std::move(weights));
}

Json to_json(const HyperPoint<Rational>& h, const FiniteMetricSpace<Rational>& space) {
  Json chain = Json::array(), weights = Json::array();
  for (const auto& s : h.chain) {
    Json labels = Json::array();
    for (Index p : s) labels.push_back(space.label(p));
    chain.push_back(std::move(labels));
  }
  for (const auto& w : h.weights) weights.push_back(to_string(w));
  return Json{{"chain", chain}, {"weights", weights}};
}

WeightedChain<Rational> weighted_chain_from_json(const Json& j, const FinitePoset& poset) {
  Chain c;
  for (const auto& p : array_field(j, "chain", "weighted chain")) c.vertices.push_back(poset.index_of(label_of(p)));
  std::vector<Rational> weights;
  for (const auto& w : array_field(j, "weights", "weighted chain")) weights.push_back(rational_from_json(w));
  return make_weighted_chain(poset, std::move(c), std::move(weights));
}

SimplicialComplex complex_from_json(const Json& j) {
  std::vector<std::string> vertices;
  for (const auto& v : array_field(j, "vertices", "complex")) vertices.push_back(label_of(v));
  std::vector<SimplicialComplex::Simplex> simplices;
  if (j.contains("simplices")) {
    for (const auto& s : array_field(j, "simplices", "complex")) {
      if (!s.is_array()) throw ParseError("complex: each simplex must be an array of vertex labels");
      SimplicialComplex::Simplex simplex;
      for (const auto& v : s) {
        auto it = std::find(vertices.begin(), vertices.end(), label_of(v));
        if (it == vertices.end()) throw ParseError("complex: unknown vertex " + v.dump());
        simplex.push_back(static_cast<Index>(it - vertices.begin()));
      }
      std::sort(simplex.begin(), simplex.end());
      simplices.push_back(std::move(simplex));
    }
  }
  return SimplicialComplex(std::move(vertices), simplices);
}

Json to_json(const SimplicialComplex& complex) {
  Json simplices = Json::array();
  for (const auto& s : complex.maximal_simplices()) {
    Json labels = Json::array();
    for (Index v : s) labels.push_back(complex.labels()[static_cast<std::size_t>(v)]);
    simplices.push_back(std::move(labels));
  }
  return Json{{"vertices", complex.labels()}, {"simplices", simplices}};
}

SpaceDiagram space_diagram_from_json(const Json& j) {
  FinitePoset poset = poset_from_json(field(j, "poset", "space diagram"));
  const Json& cj = field(j, "complexes", "space diagram");
  if (!cj.is_object()) throw ParseError("space diagram: \"complexes\" must be an object keyed by element");
  std::vector<SimplicialComplex> complexes(static_cast<std::size_t>(poset.size()));
  std::vector<bool> seen(static_cast<std::size_t>(poset.size()), false);
  for (const auto& [key, value] : cj.items()) {
    const Index p = poset.index_of(key);
    complexes[static_cast<std::size_t>(p)] = complex_from_json(value);
    seen[static_cast<std::size_t>(p)] = true;
  }
  for (Index p = 0; p < poset.size(); ++p)
    if (!seen[static_cast<std::size_t>(p)]) throw ParseError("space diagram: no complex given for " + poset.label(p));

  CoverSpaceMaps maps;
  const Json empty = Json::object();
  const Json& mj = j.contains("maps") ? j["maps"] : empty;
  if (!mj.is_object()) throw ParseError("space diagram: \"maps\" must be an object keyed by \"p<q\"");
  for (const auto& [key, value] : mj.items()) {
    auto [ps, qs] = split_pair_key(key);
    const Index p = poset.index_of(ps), q = poset.index_of(qs);
    if (!poset.covers(p, q)) throw ParseError("space diagram: " + key + " is not a covering pair");
    if (!value.is_object()) throw ParseError("space diagram: map " + key + " must be an object {\"v\": \"w\"}");
    const auto& source = complexes[static_cast<std::size_t>(p)];
    const auto& target = complexes[static_cast<std::size_t>(q)];
    SimplicialMap f;
    f.vertex_map.assign(static_cast<std::size_t>(source.vertex_count()), -1);
    for (const auto& [v, w] : value.items()) {
      auto vi = std::find(source.labels().begin(), source.labels().end(), v);
      auto wi = std::find(target.labels().begin(), target.labels().end(), label_of(w));
      if (vi == source.labels().end() || wi == target.labels().end())
        throw ParseError("space diagram: map " + key + " names an unknown vertex");
      f.vertex_map[static_cast<std::size_t>(vi - source.labels().begin())] =
          static_cast<Index>(wi - target.labels().begin());
    }
    for (std::size_t v = 0; v < f.vertex_map.size(); ++v)
      if (f.vertex_map[v] < 0) throw ParseError("space diagram: map " + key + " misses vertex " + source.labels()[v]);
    maps[{p, q}] = std::move(f);
  }
  for (auto pq : poset.covers())
    if (!maps.count(pq))
      throw ParseError("space diagram: missing map for covering pair " + poset.label(pq.first) + "<" + poset.label(pq.second));
  return SpaceDiagram::from_covers(std::move(poset), std::move(complexes), maps);
}

Json to_json(const SpaceDiagram& diagram) {
  const FinitePoset& poset = diagram.base();
  Json complexes = Json::object(), maps = Json::object();
  for (Index p = 0; p < poset.size(); ++p) complexes[poset.label(p)] = to_json(diagram.complex(p));
  for (auto [p, q] : poset.covers()) {
    Json m = Json::object();
    const auto& f = diagram.map(p, q);
    for (std::size_t v = 0; v < f.vertex_map.size(); ++v)
      m[diagram.complex(p).labels()[v]] = diagram.complex(q).labels()[static_cast<std::size_t>(f.vertex_map[v])];
    maps[poset.label(p) + "<" + poset.label(q)] = std::move(m);
  }
  return Json{{"poset", to_json(poset)}, {"complexes", complexes}, {"maps", maps}};
}

}  // namespace dlim
