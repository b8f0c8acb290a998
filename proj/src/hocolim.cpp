#include "dlim/hocolim.hpp"

#include "dlim/hyperspace.hpp"

#include <algorithm>
#include <set>

namespace dlim {

namespace {

using Simplex = SimplicialComplex::Simplex;

// Sign of the permutation sorting `v` (distinct entries).
int sort_sign(std::vector<Index>& v) {
  int sign = 1;
  for (std::size_t i = 1; i < v.size(); ++i)
    for (std::size_t j = i; j > 0 && v[j - 1] > v[j]; --j) {
      std::swap(v[j - 1], v[j]);
      sign = -sign;
    }
  return sign;
}

Simplex face(const Simplex& s, std::size_t k) {
  Simplex out;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (i != k) out.push_back(s[i]);
  return out;
}

struct FiberSubquotient {
  FgAbGroup group;
  IntMatrix representatives;
  std::optional<Subquotient> sq;

  IntVector coordinates(const IntVector& x) const {
    if (!sq) return IntVector(0);
    return sq->coordinates(x);
  }
};

FiberSubquotient fiber_cohomology(const SimplicialComplex& k, Index q) {
  FiberSubquotient f;
  if (q < 0 || q > k.dimension()) {
    f.representatives = IntMatrix(std::max<Index>(k.count(q), 0), 0);
    return f;
  }
  auto c = simplicial_cochain_complex(k);
  f.sq.emplace(c.coboundary(q - 1), c.coboundary(q), IntMatrix(c.rank(q), 0), IntMatrix(c.rank(q + 1), 0));
  f.group = f.sq->group();
  f.representatives = f.sq->representatives();
  return f;
}

FiberSubquotient fiber_homology(const SimplicialComplex& k, Index n) {
  FiberSubquotient f;
  if (n < 0 || n > k.dimension()) {
    f.representatives = IntMatrix(std::max<Index>(k.count(n), 0), 0);
    return f;
  }
  auto c = simplicial_chain_complex(k);
  f.sq.emplace(c.boundary(n + 1), c.boundary(n), IntMatrix(c.rank(n), 0), IntMatrix(c.rank(n - 1), 0));
  f.group = f.sq->group();
  f.representatives = f.sq->representatives();
  return f;
}

// Torsion-free quotient: free coordinates come first in every canonical presentation.
PosetDiagram free_part(const PosetDiagram& d) {
  std::vector<FgAbGroup> groups;
  for (const auto& g : d.groups()) groups.push_back(FgAbGroup(g.free_rank()));
  CoverMaps maps;
  for (auto [p, q] : d.base().covers())
    maps[{p, q}] = d.map(p, q).topLeftCorner(d.group(q).free_rank(), d.group(p).free_rank());
  return PosetDiagram::from_covers(d.base(), std::move(groups), maps);
}

std::vector<Index> trimmed(std::vector<Index> v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

}  // namespace

SimplicialComplex::SimplicialComplex(std::vector<std::string> vertices, const std::vector<Simplex>& simplices)
    : labels_(std::move(vertices)) {
  const Index n = vertex_count();
  std::set<Simplex> all;
  for (Index v = 0; v < n; ++v) all.insert({v});
  for (Simplex s : simplices) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (s.empty()) throw InputError("empty simplex");
    for (Index v : s)
      if (v < 0 || v >= n) throw InputError("simplex vertex out of range");
    if (s.size() > 20) throw InputError("simplex too large");
    const std::size_t k = s.size();
    for (std::size_t mask = 1; mask < (std::size_t(1) << k); ++mask) {
      Simplex f;
      for (std::size_t i = 0; i < k; ++i)
        if (mask >> i & 1) f.push_back(s[i]);
      all.insert(std::move(f));
    }
  }
  for (const auto& s : all) {
    const std::size_t d = s.size() - 1;
    if (simplices_.size() <= d) simplices_.resize(d + 1);
    simplices_[d].push_back(s);
  }
  lookup_.resize(simplices_.size());
  for (std::size_t d = 0; d < simplices_.size(); ++d)
    for (std::size_t i = 0; i < simplices_[d].size(); ++i) lookup_[d].emplace(simplices_[d][i], static_cast<Index>(i));
}

const std::vector<Simplex>& SimplicialComplex::simplices(Index n) const {
  static const std::vector<Simplex> none;
  if (n < 0 || n > dimension()) return none;
  return simplices_[static_cast<std::size_t>(n)];
}

bool SimplicialComplex::contains(const Simplex& s) const {
  const Index d = static_cast<Index>(s.size()) - 1;
  if (d < 0 || d > dimension()) return false;
  return lookup_[static_cast<std::size_t>(d)].count(s) > 0;
}

Index SimplicialComplex::index_of(const Simplex& s) const {
  const Index d = static_cast<Index>(s.size()) - 1;
  if (d < 0 || d > dimension()) throw Error("simplex not in complex");
  auto it = lookup_[static_cast<std::size_t>(d)].find(s);
  if (it == lookup_[static_cast<std::size_t>(d)].end()) throw Error("simplex not in complex");
  return it->second;
}

std::vector<Simplex> SimplicialComplex::maximal_simplices() const {
  std::vector<Simplex> out;
  for (Index d = 0; d <= dimension(); ++d)
    for (const auto& s : simplices(d)) {
      bool maximal = true;
      for (const auto& t : simplices(d + 1))
        if (std::includes(t.begin(), t.end(), s.begin(), s.end())) {
          maximal = false;
          break;
        }
      if (maximal) out.push_back(s);
    }
  return out;
}

Integer SimplicialComplex::euler_characteristic() const {
  Integer chi = 0;
  for (Index d = 0; d <= dimension(); ++d) chi += (d % 2 == 0 ? 1 : -1) * count(d);
  return chi;
}

SimplicialComplex to_simplicial_complex(const FinitePoset& poset) {
  auto k = order_complex(poset);
  std::vector<Simplex> maximal;
  for (const auto& c : k.maximal_simplices()) maximal.push_back(c.vertices);
  return SimplicialComplex(poset.labels(), maximal);
}

ChainComplexZ simplicial_chain_complex(const SimplicialComplex& k) {
  ChainComplexZ c;
  for (Index d = 0; d <= k.dimension(); ++d) c.ranks.push_back(k.count(d));
  if (k.dimension() >= 0) c.boundaries.push_back(IntMatrix(0, k.count(0)));
  for (Index d = 1; d <= k.dimension(); ++d) {
    IntMatrix b = IntMatrix::Zero(k.count(d - 1), k.count(d));
    const auto& ss = k.simplices(d);
    for (std::size_t j = 0; j < ss.size(); ++j)
      for (std::size_t i = 0; i < ss[j].size(); ++i)
        b(k.index_of(face(ss[j], i)), static_cast<Index>(j)) += (i % 2 == 0) ? 1 : -1;
    c.boundaries.push_back(std::move(b));
  }
  return c;
}

CochainComplexZ simplicial_cochain_complex(const SimplicialComplex& k) {
  auto chains = simplicial_chain_complex(k);
  CochainComplexZ c;
  c.ranks = chains.ranks;
  for (Index d = 0; d < k.dimension(); ++d) c.coboundaries.push_back(chains.boundary(d + 1).transpose());
  return c;
}

Simplex image(const SimplicialMap& f, const Simplex& s) {
  Simplex out;
  for (Index v : s) out.push_back(f.vertex_map[static_cast<std::size_t>(v)]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_simplicial(const SimplicialComplex& source, const SimplicialComplex& target, const SimplicialMap& f) {
  if (static_cast<Index>(f.vertex_map.size()) != source.vertex_count()) return false;
  for (Index v : f.vertex_map)
    if (v < 0 || v >= target.vertex_count()) return false;
  for (const auto& s : source.maximal_simplices())
    if (!target.contains(image(f, s))) return false;
  return true;
}

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f) {
  SimplicialMap h;
  for (Index v : f.vertex_map) h.vertex_map.push_back(g.vertex_map[static_cast<std::size_t>(v)]);
  return h;
}

IntMatrix chain_map_matrix(const SimplicialComplex& source, const SimplicialComplex& target,
                           const SimplicialMap& f, Index n) {
  IntMatrix m = IntMatrix::Zero(target.count(n), source.count(n));
  const auto& ss = source.simplices(n);
  for (std::size_t j = 0; j < ss.size(); ++j) {
    std::vector<Index> img;
    for (Index v : ss[j]) img.push_back(f.vertex_map[static_cast<std::size_t>(v)]);
    std::vector<Index> sorted = img;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
    const int sign = sort_sign(img);
    m(target.index_of(img), static_cast<Index>(j)) += sign;
  }
  return m;
}

SpaceDiagram SpaceDiagram::from_covers(FinitePoset base, std::vector<SimplicialComplex> complexes,
                                       const CoverSpaceMaps& maps) {
  SpaceDiagram d;
  d.base_ = std::move(base);
  d.complexes_ = std::move(complexes);
  const FinitePoset& P = d.base_;
  const Index n = P.size();
  if (static_cast<Index>(d.complexes_.size()) != n) throw InputError("space diagram needs one complex per element");
  d.maps_.assign(static_cast<std::size_t>(n * n), std::nullopt);
  auto slot = [&](Index p, Index q) -> std::optional<SimplicialMap>& { return d.maps_[static_cast<std::size_t>(p * n + q)]; };
  for (Index p = 0; p < n; ++p) {
    SimplicialMap id;
    for (Index v = 0; v < d.complex(p).vertex_count(); ++v) id.vertex_map.push_back(v);
    slot(p, p) = std::move(id);
  }
  for (const auto& [pq, f] : maps)
    if (pq.first < 0 || pq.second < 0 || pq.first >= n || pq.second >= n || !P.covers(pq.first, pq.second))
      throw InputError("space map given on a non-covering pair");
  std::vector<std::vector<Index>> lower(static_cast<std::size_t>(n));
  for (auto [p, q] : P.covers()) {
    auto it = maps.find({p, q});
    if (it == maps.end()) throw InputError("missing space map " + P.label(p) + "<" + P.label(q));
    if (!is_simplicial(d.complex(p), d.complex(q), it->second))
      throw InputError("map " + P.label(p) + "<" + P.label(q) + " is not simplicial");
    slot(p, q) = it->second;
    lower[static_cast<std::size_t>(q)].push_back(p);
  }
  for (Index q : P.linear_extension())
    for (Index p = 0; p < n; ++p) {
      if (!P.less(p, q) || P.covers(p, q)) continue;
      std::optional<SimplicialMap> value;
      for (Index c : lower[static_cast<std::size_t>(q)]) {
        if (!P.leq(p, c)) continue;
        SimplicialMap candidate = compose(*slot(c, q), *slot(p, c));
        if (!value) value = std::move(candidate);
        else if (candidate != *value) throw Nonfunctorial(P.label(p), P.label(c), P.label(q));
      }
      slot(p, q) = std::move(value);
    }
  return d;
}

const SimplicialMap& SpaceDiagram::map(Index p, Index q) const {
  const auto& m = maps_[static_cast<std::size_t>(p * base_.size() + q)];
  if (!m) throw Error("no space map " + base_.label(p) + " -> " + base_.label(q));
  return *m;
}

Index SpaceDiagram::max_fiber_dimension() const {
  Index d = -1;
  for (const auto& k : complexes_) d = std::max(d, k.dimension());
  return d;
}

FinitePoset grothendieck_poset(const SpaceDiagram& diagram, std::vector<std::pair<Index, Simplex>>* pairs_out) {
  const FinitePoset& P = diagram.base();
  std::vector<std::pair<Index, Simplex>> pairs;
  for (Index p = 0; p < P.size(); ++p)
    for (Index d = 0; d <= diagram.complex(p).dimension(); ++d)
      for (const auto& s : diagram.complex(p).simplices(d)) pairs.emplace_back(p, s);
  const Index n = static_cast<Index>(pairs.size());
  std::vector<std::string> labels;
  std::vector<std::uint8_t> leq(static_cast<std::size_t>(n * n), 0);
  for (Index i = 0; i < n; ++i) {
    const auto& [p, s] = pairs[static_cast<std::size_t>(i)];
    std::string label = "(" + P.label(p) + ",{";
    for (std::size_t k = 0; k < s.size(); ++k) label += (k ? "," : "") + diagram.complex(p).labels()[static_cast<std::size_t>(s[k])];
    labels.push_back(label + "})");
    for (Index j = 0; j < n; ++j) {
      const auto& [q, t] = pairs[static_cast<std::size_t>(j)];
      if (!P.leq(p, q)) continue;
      Simplex img = image(diagram.map(p, q), s);
      leq[static_cast<std::size_t>(i * n + j)] = std::includes(t.begin(), t.end(), img.begin(), img.end()) ? 1 : 0;
    }
  }
  if (pairs_out) *pairs_out = std::move(pairs);
  return FinitePoset(std::move(labels), std::move(leq));
}

SimplicialComplex hocolim_complex(const SpaceDiagram& diagram) {
  return to_simplicial_complex(grothendieck_poset(diagram));
}

std::vector<Integer> hocolim_simplex_counts(const SpaceDiagram& diagram) {
  const FinitePoset G = grothendieck_poset(diagram);
  const auto order = G.linear_extension();
  const Index n = G.size();
  // ending[e][L]: chains of L+1 elements with top e.
  std::vector<std::vector<Integer>> ending(static_cast<std::size_t>(n));
  std::vector<Integer> counts;
  for (Index e : order) {
    auto& row = ending[static_cast<std::size_t>(e)];
    row.push_back(1);
    for (Index f : order) {
      if (f == e) break;
      if (!G.less(f, e)) continue;
      const auto& below = ending[static_cast<std::size_t>(f)];
      if (row.size() < below.size() + 1) row.resize(below.size() + 1, 0);
      for (std::size_t L = 0; L < below.size(); ++L) row[L + 1] += below[L];
    }
    if (counts.size() < row.size()) counts.resize(row.size(), 0);
    for (std::size_t L = 0; L < row.size(); ++L) counts[L] += row[L];
  }
  return counts;
}

ChainComplexZ cylinder_chain_complex(const SpaceDiagram& diagram) {
  const FinitePoset& P = diagram.base();
  const OrderComplex K = order_complex(P);
  struct Cell {
    Index k, chain, j, simplex;
  };
  Index top = -1;
  for (Index k = 0; k <= K.dimension(); ++k)
    for (const auto& c : K.simplices(k)) top = std::max(top, k + diagram.complex(c.front()).dimension());
  std::vector<std::vector<Cell>> cells(static_cast<std::size_t>(top + 1));
  std::vector<std::map<std::tuple<Index, Index, Index>, Index>> lookup(static_cast<std::size_t>(top + 1));
  for (Index k = 0; k <= K.dimension(); ++k) {
    const auto& chains = K.simplices(k);
    for (std::size_t c = 0; c < chains.size(); ++c) {
      const auto& X = diagram.complex(chains[c].front());
      for (Index j = 0; j <= X.dimension(); ++j)
        for (Index s = 0; s < X.count(j); ++s) {
          auto& level = cells[static_cast<std::size_t>(k + j)];
          lookup[static_cast<std::size_t>(k + j)].emplace(std::make_tuple(k, static_cast<Index>(c), s), static_cast<Index>(level.size()));
          level.push_back({k, static_cast<Index>(c), j, s});
        }
    }
  }
  ChainComplexZ out;
  for (const auto& level : cells) out.ranks.push_back(static_cast<Index>(level.size()));
  if (top >= 0) out.boundaries.push_back(IntMatrix(0, out.ranks[0]));
  for (Index n = 1; n <= top; ++n) {
    IntMatrix b = IntMatrix::Zero(out.ranks[static_cast<std::size_t>(n - 1)], out.ranks[static_cast<std::size_t>(n)]);
    const auto& level = cells[static_cast<std::size_t>(n)];
    const auto& below = lookup[static_cast<std::size_t>(n - 1)];
    for (std::size_t col = 0; col < level.size(); ++col) {
      const Cell& cell = level[col];
      const Chain& sigma = K.simplices(cell.k)[static_cast<std::size_t>(cell.chain)];
      const SimplicialComplex& X = diagram.complex(sigma.front());
      const Simplex& x = X.simplices(cell.j)[static_cast<std::size_t>(cell.simplex)];
      for (Index i = 0; i <= cell.k && cell.k >= 1; ++i) {
        const Chain tau = sigma.face(i);
        const Index t = K.index_of(tau);
        const Integer sign = (i % 2 == 0) ? 1 : -1;
        if (i == 0) {
          const SimplicialComplex& Y = diagram.complex(tau.front());
          std::vector<Index> img;
          for (Index v : x) img.push_back(diagram.map(sigma.front(), tau.front()).vertex_map[static_cast<std::size_t>(v)]);
          std::vector<Index> sorted = img;
          std::sort(sorted.begin(), sorted.end());
          if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
          const int s = sort_sign(img);
          b(below.at({cell.k - 1, t, Y.index_of(img)}), static_cast<Index>(col)) += sign * s;
        } else {
          b(below.at({cell.k - 1, t, cell.simplex}), static_cast<Index>(col)) += sign;
        }
      }
      if (cell.j >= 1) {
        const Integer sk = (cell.k % 2 == 0) ? 1 : -1;
        for (std::size_t l = 0; l < x.size(); ++l) {
          const Integer sl = (l % 2 == 0) ? 1 : -1;
          b(below.at({cell.k, cell.chain, X.index_of(face(x, l))}), static_cast<Index>(col)) += sk * sl;
        }
      }
    }
    out.boundaries.push_back(std::move(b));
  }
  return out;
}

PosetDiagram fiber_cohomology_diagram(const SpaceDiagram& diagram, Index q) {
  const FinitePoset& P = diagram.base();
  std::vector<FiberSubquotient> fibers;
  std::vector<FgAbGroup> groups;
  for (Index p = 0; p < P.size(); ++p) {
    fibers.push_back(fiber_cohomology(diagram.complex(p), q));
    groups.push_back(fibers.back().group);
  }
  CoverMaps maps;
  for (auto [p, r] : P.covers()) {
    // (f^p_r)^*: H^q(X_r) -> H^q(X_p), the cover r <* p of the dual poset.
    const auto& src = fibers[static_cast<std::size_t>(r)];
    const auto& tgt = fibers[static_cast<std::size_t>(p)];
    IntMatrix m(tgt.group.generator_count(), src.group.generator_count());
    if (m.size() > 0) {
      IntMatrix pull = chain_map_matrix(diagram.complex(p), diagram.complex(r), diagram.map(p, r), q).transpose();
      for (Index j = 0; j < m.cols(); ++j) m.col(j) = tgt.coordinates(pull * src.representatives.col(j));
    }
    maps[{r, p}] = std::move(m);
  }
  return PosetDiagram::from_covers(dual(P), std::move(groups), maps);
}

PosetDiagram fiber_homology_diagram(const SpaceDiagram& diagram, Index n) {
  const FinitePoset& P = diagram.base();
  std::vector<FiberSubquotient> fibers;
  std::vector<FgAbGroup> groups;
  for (Index p = 0; p < P.size(); ++p) {
    fibers.push_back(fiber_homology(diagram.complex(p), n));
    groups.push_back(fibers.back().group);
  }
  CoverMaps maps;
  for (auto [p, r] : P.covers()) {
    const auto& src = fibers[static_cast<std::size_t>(p)];
    const auto& tgt = fibers[static_cast<std::size_t>(r)];
    IntMatrix m(tgt.group.generator_count(), src.group.generator_count());
    if (m.size() > 0) {
      IntMatrix push = chain_map_matrix(diagram.complex(p), diagram.complex(r), diagram.map(p, r), n);
      for (Index j = 0; j < m.cols(); ++j) m.col(j) = tgt.coordinates(push * src.representatives.col(j));
    }
    maps[{p, r}] = std::move(m);
  }
  return PosetDiagram::from_covers(P, std::move(groups), maps);
}

Index E2Page::dim(Index p, Index q) const {
  if (p < 0 || q < 0 || p >= p_size() || q >= q_size()) return 0;
  return dims[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
}

E2Page bk_e2(const SpaceDiagram& diagram, Field field) {
  E2Page page;
  page.field = field;
  const Index pmax = std::max<Index>(order_complex(diagram.base()).dimension(), 0);
  const Index qmax = std::max<Index>(diagram.max_fiber_dimension(), 0);
  page.dims.assign(static_cast<std::size_t>(pmax + 1), std::vector<Index>(static_cast<std::size_t>(qmax + 1), 0));
  if (field == Field::integers)
    page.integral.assign(static_cast<std::size_t>(pmax + 1), std::vector<FgAbGroup>(static_cast<std::size_t>(qmax + 1)));
  if (diagram.base().empty()) return page;
  for (Index q = 0; q <= qmax; ++q) {
    PosetDiagram Dq = fiber_cohomology_diagram(diagram, q);
    if (field == Field::integers) {
      auto c = build_cochain_complex(Dq);
      for (Index p = 0; p <= pmax; ++p) {
        FgAbGroup g = cohomology(c.complex, p);
        page.dims[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] = g.free_rank();
        page.integral[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] = std::move(g);
      }
    } else {
      auto c = build_cochain_complex(free_part(Dq));
      for (Index p = 0; p <= pmax; ++p)
        page.dims[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] = rational_betti(c.complex, p);
    }
  }
  return page;
}

std::vector<Index> hocolim_betti(const SpaceDiagram& diagram) {
  auto c = cylinder_chain_complex(diagram);
  std::vector<Index> out;
  for (Index n = 0; n <= c.top_degree(); ++n) out.push_back(rational_betti(c, n));
  return out;
}

EulerReport check_euler(const SpaceDiagram& diagram, Field field) {
  EulerReport r;
  E2Page page = bk_e2(diagram, field);
  for (Index p = 0; p < page.p_size(); ++p)
    for (Index q = 0; q < page.q_size(); ++q) r.e2_side += ((p + q) % 2 == 0 ? 1 : -1) * page.dim(p, q);
  auto betti = hocolim_betti(diagram);
  for (std::size_t n = 0; n < betti.size(); ++n) r.hocolim_side += (n % 2 == 0 ? 1 : -1) * betti[n];
  auto counts = hocolim_simplex_counts(diagram);
  for (std::size_t n = 0; n < counts.size(); ++n) r.simplex_count += (n % 2 == 0 ? 1 : -1) * counts[n];
  return r;
}

MilnorReport check_milnor(const SpaceDiagram& diagram, Field field) {
  if (order_complex(diagram.base()).dimension() > 1)
    throw DimensionTooHigh("order complex of the base has dimension above 1");
  MilnorReport r;
  E2Page page = bk_e2(diagram, field);
  r.hocolim = trimmed(hocolim_betti(diagram));
  const Index top = page.q_size() + 1;
  for (Index q = 0; q <= top; ++q) r.predicted.push_back(page.dim(0, q) + page.dim(1, q - 1));
  r.predicted = trimmed(std::move(r.predicted));
  return r;
}

bool LerayReport::passed() const {
  if (limits.empty() || limits.front() != FgAbGroup(points)) return false;
  for (std::size_t p = 1; p < limits.size(); ++p)
    if (!limits[p].is_trivial()) return false;
  for (const auto& g : higher)
    if (!g.is_trivial()) return false;
  for (std::size_t n = 0; n < abutment.size(); ++n) {
    const FgAbGroup e = n < limits.size() ? limits[n] : FgAbGroup();
    if (e != abutment[n]) return false;
  }
  std::vector<Index> expected{points};
  return hocolim_betti == expected;
}

LerayReport leray_shadow(const FiniteMetricSpace<Rational>& space) {
  const Index n = space.size();
  if (n > 4) throw TooLarge("hyperspace shadow supports at most 4 points");
  if (n < 1) throw InputError("hyperspace of an empty space");
  LerayReport r;
  r.points = n;
  const Index count = (Index(1) << n) - 1;
  std::vector<std::string> labels;
  std::vector<std::vector<Index>> members;
  for (Index mask = 1; mask <= count; ++mask) {
    std::vector<Index> m;
    for (Index p = 0; p < n; ++p)
      if (mask >> p & 1) m.push_back(p);
    labels.push_back(subset_label(space, m));
    members.push_back(std::move(m));
  }
  std::vector<std::uint8_t> leq(static_cast<std::size_t>(count * count), 0);
  for (Index a = 0; a < count; ++a)
    for (Index b = 0; b < count; ++b)
      leq[static_cast<std::size_t>(a * count + b)] = (((a + 1) & (b + 1)) == (a + 1)) ? 1 : 0;
  FinitePoset K(labels, leq);
  r.poset_size = K.size();

  std::vector<SimplicialComplex> complexes;
  for (const auto& m : members) {
    std::vector<std::string> v;
    for (Index p : m) v.push_back(space.label(p));
    complexes.emplace_back(std::move(v), std::vector<Simplex>{});
  }
  CoverSpaceMaps maps;
  for (auto [a, b] : K.covers()) {
    SimplicialMap f;
    for (Index p : members[static_cast<std::size_t>(a)]) {
      const auto& mb = members[static_cast<std::size_t>(b)];
      f.vertex_map.push_back(static_cast<Index>(std::find(mb.begin(), mb.end(), p) - mb.begin()));
    }
    maps[{a, b}] = std::move(f);
  }
  SpaceDiagram delta = SpaceDiagram::from_covers(K, std::move(complexes), maps);

  const Index dim = order_complex(K).dimension();
  r.limits = derived_limits(fiber_cohomology_diagram(delta, 0), dim);
  r.higher = derived_limits(fiber_cohomology_diagram(delta, 1), dim);

  std::vector<Simplex> points;
  SimplicialComplex discrete(space.labels(), points);
  auto cochains = simplicial_cochain_complex(discrete);
  for (Index k = 0; k <= dim; ++k) r.abutment.push_back(cohomology(cochains, k));
  r.hocolim_betti = trimmed(hocolim_betti(delta));
  return r;
}

}  // namespace dlim
