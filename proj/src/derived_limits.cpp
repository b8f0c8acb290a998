#include "dlim/derived_limits.hpp"

#include <algorithm>

namespace dlim {

namespace {

IntMatrix reduce_columns(const FgAbGroup& target, IntMatrix m) {
  for (Index j = 0; j < m.cols(); ++j) m.col(j) = target.reduce(m.col(j));
  return m;
}

std::string shape(const IntMatrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

bool has_torsion(const std::vector<FgAbGroup>& groups) {
  return std::any_of(groups.begin(), groups.end(), [](const FgAbGroup& g) { return !g.is_free(); });
}

// Block-diagonal relation matrix for a direct sum of the given groups.
IntMatrix block_relations(const std::vector<const FgAbGroup*>& blocks) {
  Index rows = 0, cols = 0;
  for (auto* g : blocks) {
    rows += g->generator_count();
    cols += static_cast<Index>(g->torsion().size());
  }
  IntMatrix r = IntMatrix::Zero(rows, cols);
  Index i = 0, j = 0;
  for (auto* g : blocks) {
    IntMatrix b = g->relation_matrix();
    if (b.size() > 0) r.block(i, j, b.rows(), b.cols()) = b;
    i += b.rows();
    j += b.cols();
  }
  return r;
}

void check_map(const FinitePoset& base, const std::vector<FgAbGroup>& groups, Index p, Index q,
               const IntMatrix& m) {
  const auto& src = groups[static_cast<std::size_t>(p)];
  const auto& tgt = groups[static_cast<std::size_t>(q)];
  const std::string name = base.label(p) + "<" + base.label(q);
  if (m.rows() != tgt.generator_count() || m.cols() != src.generator_count())
    throw InputError("map " + name + " has shape " + shape(m) + ", expected " +
                     std::to_string(tgt.generator_count()) + "x" +
                     std::to_string(src.generator_count()));
  if (!respects_relations(src, tgt, m))
    throw IllDefined("map " + name + " does not respect the group relations");
}

}  // namespace

Nonfunctorial::Nonfunctorial(std::string p_, std::string q_, std::string r_)
    : InputError("Nonfunctorial: composites disagree on (" + p_ + ", " + q_ + ", " + r_ + ")"),
      p(std::move(p_)),
      q(std::move(q_)),
      r(std::move(r_)) {}

PosetDiagram::PosetDiagram(FinitePoset base, std::vector<FgAbGroup> groups)
    : base_(std::move(base)), groups_(std::move(groups)) {
  if (static_cast<Index>(groups_.size()) != base_.size())
    throw InputError("diagram needs one group per poset element");
  const Index n = base_.size();
  maps_.assign(static_cast<std::size_t>(n * n), std::nullopt);
  for (Index p = 0; p < n; ++p)
    maps_[static_cast<std::size_t>(p * n + p)] = identity<Integer>(group(p).generator_count());
}

const IntMatrix& PosetDiagram::map(Index p, Index q) const {
  const auto& m = maps_[static_cast<std::size_t>(p * size() + q)];
  if (!m) throw Error("no map " + base_.label(p) + " -> " + base_.label(q));
  return *m;
}

PosetDiagram PosetDiagram::from_covers(FinitePoset base, std::vector<FgAbGroup> groups,
                                       const CoverMaps& maps) {
  PosetDiagram d(std::move(base), std::move(groups));
  const FinitePoset& P = d.base_;
  const Index n = P.size();
  for (const auto& [pq, m] : maps) {
    auto [p, q] = pq;
    if (p < 0 || q < 0 || p >= n || q >= n || !P.covers(p, q))
      throw InputError("map given on a non-covering pair");
    check_map(P, d.groups_, p, q, m);
  }
  auto slot = [&](Index p, Index q) -> std::optional<IntMatrix>& {
    return d.maps_[static_cast<std::size_t>(p * n + q)];
  };
  std::vector<std::vector<Index>> lower_covers(static_cast<std::size_t>(n));
  for (auto [c, q] : P.covers()) {
    auto it = maps.find({c, q});
    if (it == maps.end())
      throw InputError("missing map on covering pair " + P.label(c) + "<" + P.label(q));
    slot(c, q) = reduce_columns(d.group(q), it->second);
    lower_covers[static_cast<std::size_t>(q)].push_back(c);
  }
  for (Index q : P.linear_extension()) {
    for (Index p = 0; p < n; ++p) {
      if (!P.less(p, q) || P.covers(p, q)) continue;
      std::optional<IntMatrix> value;
      for (Index c : lower_covers[static_cast<std::size_t>(q)]) {
        if (!P.leq(p, c)) continue;
        IntMatrix candidate = reduce_columns(d.group(q), (*slot(c, q)) * (*slot(p, c)));
        if (!value) {
          value = std::move(candidate);
        } else if (candidate != *value) {
          throw Nonfunctorial(P.label(p), P.label(c), P.label(q));
        }
      }
      slot(p, q) = std::move(value);
    }
  }
  return d;
}

PosetDiagram PosetDiagram::from_all_pairs(FinitePoset base, std::vector<FgAbGroup> groups,
                                          const CoverMaps& maps) {
  PosetDiagram d(std::move(base), std::move(groups));
  const FinitePoset& P = d.base_;
  const Index n = P.size();
  for (const auto& [pq, m] : maps) {
    auto [p, q] = pq;
    if (p < 0 || q < 0 || p >= n || q >= n || !P.leq(p, q))
      throw InputError("map given on an incomparable pair");
    check_map(P, d.groups_, p, q, m);
    IntMatrix reduced = reduce_columns(d.group(q), m);
    if (p == q) {
      if (reduced != reduce_columns(d.group(p), identity<Integer>(d.group(p).generator_count())))
        throw Nonfunctorial(P.label(p), P.label(p), P.label(p));
      continue;
    }
    d.maps_[static_cast<std::size_t>(p * n + q)] = std::move(reduced);
  }
  for (Index p = 0; p < n; ++p)
    for (Index q = 0; q < n; ++q)
      if (P.less(p, q) && !d.maps_[static_cast<std::size_t>(p * n + q)])
        throw InputError("missing map " + P.label(p) + "<" + P.label(q));
  for (Index p = 0; p < n; ++p)
    for (Index q = 0; q < n; ++q) {
      if (!P.less(p, q)) continue;
      for (Index r = 0; r < n; ++r) {
        if (!P.less(q, r)) continue;
        if (reduce_columns(d.group(r), d.map(q, r) * d.map(p, q)) != d.map(p, r))
          throw Nonfunctorial(P.label(p), P.label(q), P.label(r));
      }
    }
  return d;
}

PosetDiagram constant_diagram(const FinitePoset& base, const FgAbGroup& group) {
  CoverMaps maps;
  for (auto pq : base.covers()) maps[pq] = identity<Integer>(group.generator_count());
  return PosetDiagram::from_covers(base, std::vector<FgAbGroup>(static_cast<std::size_t>(base.size()), group),
                                   maps);
}

LocalSystemComplex<CochainComplexZ> build_cochain_complex(const PosetDiagram& diagram) {
  LocalSystemComplex<CochainComplexZ> out;
  out.order_complex = order_complex(diagram.base());
  const OrderComplex& K = out.order_complex;
  const Index top = K.dimension();
  const bool torsion = has_torsion(diagram.groups());
  auto block = [&](const Chain& s) -> const FgAbGroup& { return diagram.group(s.back()); };

  for (Index n = 0; n <= top; ++n) {
    std::vector<Index> offs;
    Index total = 0;
    std::vector<const FgAbGroup*> blocks;
    for (const Chain& s : K.simplices(n)) {
      offs.push_back(total);
      total += block(s).generator_count();
      blocks.push_back(&block(s));
    }
    out.offsets.push_back(std::move(offs));
    out.complex.ranks.push_back(total);
    if (torsion) out.complex.relations.push_back(block_relations(blocks));
  }
  for (Index n = 0; n < top; ++n) {
    IntMatrix d = IntMatrix::Zero(out.complex.ranks[static_cast<std::size_t>(n + 1)],
                                  out.complex.ranks[static_cast<std::size_t>(n)]);
    const auto& taus = K.simplices(n + 1);
    for (std::size_t t = 0; t < taus.size(); ++t) {
      const Chain& tau = taus[t];
      const Index row = out.offsets[static_cast<std::size_t>(n + 1)][t];
      for (Index k = 0; k <= n + 1; ++k) {
        const Chain sigma = tau.face(k);
        const Index col = out.offsets[static_cast<std::size_t>(n)][static_cast<std::size_t>(K.index_of(sigma))];
        const Integer sign = (k % 2 == 0) ? 1 : -1;
        IntMatrix m = (k == n + 1) ? diagram.map(sigma.back(), tau.back())
                                   : identity<Integer>(block(tau).generator_count());
        d.block(row, col, m.rows(), m.cols()) += sign * m;
      }
    }
    out.complex.coboundaries.push_back(std::move(d));
  }
  return out;
}

LocalSystemComplex<ChainComplexZ> build_chain_complex(const PosetDiagram& diagram) {
  LocalSystemComplex<ChainComplexZ> out;
  out.order_complex = order_complex(diagram.base());
  const OrderComplex& K = out.order_complex;
  const Index top = K.dimension();
  const bool torsion = has_torsion(diagram.groups());
  auto block = [&](const Chain& s) -> const FgAbGroup& { return diagram.group(s.front()); };

  for (Index n = 0; n <= top; ++n) {
    std::vector<Index> offs;
    Index total = 0;
    std::vector<const FgAbGroup*> blocks;
    for (const Chain& s : K.simplices(n)) {
      offs.push_back(total);
      total += block(s).generator_count();
      blocks.push_back(&block(s));
    }
    out.offsets.push_back(std::move(offs));
    out.complex.ranks.push_back(total);
    if (torsion) out.complex.relations.push_back(block_relations(blocks));
  }
  if (top >= 0) out.complex.boundaries.push_back(IntMatrix(0, out.complex.ranks[0]));
  for (Index n = 1; n <= top; ++n) {
    IntMatrix d = IntMatrix::Zero(out.complex.ranks[static_cast<std::size_t>(n - 1)],
                                  out.complex.ranks[static_cast<std::size_t>(n)]);
    const auto& sigmas = K.simplices(n);
    for (std::size_t s = 0; s < sigmas.size(); ++s) {
      const Chain& sigma = sigmas[s];
      const Index col = out.offsets[static_cast<std::size_t>(n)][s];
      for (Index k = 0; k <= n; ++k) {
        const Chain tau = sigma.face(k);
        const Index row = out.offsets[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(K.index_of(tau))];
        const Integer sign = (k % 2 == 0) ? 1 : -1;
        IntMatrix m = (k == 0) ? diagram.map(sigma.front(), tau.front())
                               : identity<Integer>(block(sigma).generator_count());
        d.block(row, col, m.rows(), m.cols()) += sign * m;
      }
    }
    out.complex.boundaries.push_back(std::move(d));
  }
  return out;
}

FgAbGroup derived_limit(const PosetDiagram& diagram, Index p) {
  if (p < 0) return FgAbGroup();
  auto c = build_cochain_complex(diagram);
  return cohomology(c.complex, p);
}

std::vector<FgAbGroup> derived_limits(const PosetDiagram& diagram, Index max_degree) {
  auto c = build_cochain_complex(diagram);
  std::vector<FgAbGroup> out;
  for (Index p = 0; p <= max_degree; ++p) out.push_back(cohomology(c.complex, p));
  return out;
}

FgAbGroup lim_direct(const PosetDiagram& diagram) {
  const FinitePoset& P = diagram.base();
  std::vector<Index> offset;
  Index total = 0;
  std::vector<const FgAbGroup*> all;
  for (Index p = 0; p < P.size(); ++p) {
    offset.push_back(total);
    total += diagram.group(p).generator_count();
    all.push_back(&diagram.group(p));
  }
  const auto covers = P.covers();
  Index rows = 0;
  std::vector<const FgAbGroup*> targets;
  for (auto [p, q] : covers) {
    rows += diagram.group(q).generator_count();
    targets.push_back(&diagram.group(q));
  }
  IntMatrix diff = IntMatrix::Zero(rows, total);
  Index row = 0;
  for (auto [p, q] : covers) {
    const IntMatrix& m = diagram.map(p, q);
    const Index gq = diagram.group(q).generator_count();
    if (m.size() > 0) diff.block(row, offset[static_cast<std::size_t>(p)], gq, m.cols()) += m;
    diff.block(row, offset[static_cast<std::size_t>(q)], gq, gq) -= identity<Integer>(gq);
    row += gq;
  }
  return Subquotient(IntMatrix(total, 0), diff, block_relations(all), block_relations(targets)).group();
}

FgAbGroup colim_via_homology(const PosetDiagram& diagram) { return colim_homology(diagram, 0); }

FgAbGroup colim_homology(const PosetDiagram& diagram, Index n) {
  auto c = build_chain_complex(diagram);
  return homology(c.complex, n);
}

FgAbGroup colim_direct(const PosetDiagram& diagram) {
  const FinitePoset& P = diagram.base();
  std::vector<Index> offset;
  Index total = 0;
  std::vector<const FgAbGroup*> all;
  for (Index p = 0; p < P.size(); ++p) {
    offset.push_back(total);
    total += diagram.group(p).generator_count();
    all.push_back(&diagram.group(p));
  }
  std::vector<IntVector> columns;
  for (auto [p, q] : P.covers()) {
    const IntMatrix& m = diagram.map(p, q);
    for (Index j = 0; j < m.cols(); ++j) {
      IntVector v = IntVector::Zero(total);
      v(offset[static_cast<std::size_t>(p)] + j) = 1;
      v.segment(offset[static_cast<std::size_t>(q)], m.rows()) -= m.col(j);
      columns.push_back(std::move(v));
    }
  }
  IntMatrix rel = block_relations(all);
  IntMatrix pres(total, static_cast<Index>(columns.size()) + rel.cols());
  for (std::size_t j = 0; j < columns.size(); ++j) pres.col(static_cast<Index>(j)) = columns[j];
  if (rel.cols() > 0) pres.rightCols(rel.cols()) = rel;
  return FgAbGroup::from_relations(pres);
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw Error("inverse of a non-square matrix");
  auto s = smith_normal_form(m);
  if (s.rank != m.rows()) throw Error("matrix is singular");
  for (Index i = 0; i < s.rank; ++i)
    if (s.D(i, i) != 1) throw Error("matrix is not invertible over Z");
  return s.V * s.U;
}

PosetDiagram inverse_diagram(const PosetDiagram& diagram) {
  const FinitePoset& P = diagram.base();
  for (const auto& g : diagram.groups())
    if (!g.is_free()) throw Error("inverse diagram needs free groups");
  FinitePoset Pd = dual(P);
  CoverMaps maps;
  for (auto [p, q] : P.covers()) maps[{q, p}] = unimodular_inverse(diagram.map(p, q));
  return PosetDiagram::from_covers(Pd, diagram.groups(), maps);
}

}  // namespace dlim
