#include "dlim/abgroup.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

namespace dlim {

namespace {

using SparseRow = std::vector<std::pair<Index, Rational>>;

// row -= factor * pivot, both sorted by column.
SparseRow axpy(const SparseRow& row, const Rational& factor, const SparseRow& pivot) {
  SparseRow out;
  out.reserve(row.size() + pivot.size());
  std::size_t i = 0, j = 0;
  while (i < row.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
      out.push_back(row[i++]);
    } else if (i == row.size() || pivot[j].first < row[i].first) {
      out.emplace_back(pivot[j].first, -factor * pivot[j].second);
      ++j;
    } else {
      Rational v = row[i].second - factor * pivot[j].second;
      if (v != 0) out.emplace_back(row[i].first, std::move(v));
      ++i, ++j;
    }
  }
  return out;
}

IntMatrix hcat(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out(a.rows(), a.cols() + b.cols());
  if (a.cols() > 0) out.leftCols(a.cols()) = a;
  if (b.cols() > 0) out.rightCols(b.cols()) = b;
  return out;
}

// Spanning set (columns) of {x in Z^n : out * x in im out_relations}.
IntMatrix cycle_lattice_span(const IntMatrix& out, const IntMatrix& out_relations, Index n) {
  if (out.rows() == 0) return identity<Integer>(n);
  IntMatrix a = hcat(out, out_relations);
  auto snf = smith_normal_form(a);
  const Index k = a.cols() - snf.rank;
  return snf.V.block(0, snf.rank, n, k);
}

class LatticeTest {
 public:
  explicit LatticeTest(const IntMatrix& relations) : rows_(relations.rows()) {
    if (relations.cols() == 0) return;
    snf_ = smith_normal_form(relations);
  }
  bool contains(const IntVector& v) const {
    if (!snf_) return v.isZero();
    IntVector u = snf_->U * v;
    for (Index i = 0; i < rows_; ++i) {
      if (i < snf_->rank) {
        if (u(i) % snf_->D(i, i) != 0) return false;
      } else if (u(i) != 0) {
        return false;
      }
    }
    return true;
  }

 private:
  Index rows_;
  std::optional<SmithDecomposition<Integer>> snf_;
};

void require_complex(const IntMatrix& out, const IntMatrix& in, const IntMatrix& out_relations,
                     const char* what) {
  if (out.cols() == 0 || in.cols() == 0 || out.rows() == 0) return;
  IntMatrix composite = out * in;
  if (out_relations.cols() == 0) {
    if (!is_zero(composite)) throw NotAComplex(std::string("composite of consecutive ") + what + " is nonzero");
    return;
  }
  LatticeTest test(out_relations);
  for (Index j = 0; j < composite.cols(); ++j)
    if (!test.contains(composite.col(j)))
      throw NotAComplex(std::string("composite of consecutive ") + what + " is nonzero");
}

FgAbGroup subquotient_group(const IntMatrix& in, const IntMatrix& out, const IntMatrix& relations,
                            const IntMatrix& out_relations, Index n) {
  if (relations.cols() == 0 && out_relations.cols() == 0) {
    // Free modules: the cycle group is a direct summand.
    const Index rank_out = out.rows() == 0 ? 0 : rational_rank(out);
    std::vector<Integer> torsion;
    Index rank_in = 0;
    if (in.cols() > 0 && in.rows() > 0) {
      auto snf = smith_normal_form(in);
      rank_in = snf.rank;
      for (auto& d : snf.invariant_factors())
        if (d > 1) torsion.push_back(d);
    }
    return FgAbGroup(n - rank_out - rank_in, std::move(torsion));
  }
  return Subquotient(in, out, relations, out_relations).group();
}

}  // namespace

Index rational_rank(const IntMatrix& m) {
  std::map<Index, SparseRow> pivots;  // leading column -> row with that lead
  for (Index i = 0; i < m.rows(); ++i) {
    SparseRow row;
    for (Index j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) row.emplace_back(j, Rational(m(i, j)));
    while (!row.empty()) {
      auto it = pivots.find(row.front().first);
      if (it == pivots.end()) break;
      Rational f = row.front().second / it->second.front().second;
      row = axpy(row, f, it->second);
    }
    if (!row.empty()) {
      const Index lead = row.front().first;
      pivots.emplace(lead, std::move(row));
    }
  }
  return static_cast<Index>(pivots.size());
}

Index rank_mod2(const IntMatrix& m) {
  const std::size_t words = static_cast<std::size_t>((m.cols() + 63) / 64);
  std::vector<std::vector<std::uint64_t>> basis;
  std::vector<Index> leads;
  for (Index i = 0; i < m.rows(); ++i) {
    std::vector<std::uint64_t> row(words, 0);
    for (Index j = 0; j < m.cols(); ++j)
      if (m(i, j) % 2 != 0) row[static_cast<std::size_t>(j / 64)] |= (1ULL << (j % 64));
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const Index l = leads[b];
      if (row[static_cast<std::size_t>(l / 64)] >> (l % 64) & 1ULL)
        for (std::size_t w = 0; w < words; ++w) row[w] ^= basis[b][w];
    }
    Index lead = -1;
    for (std::size_t w = 0; w < words && lead < 0; ++w)
      if (row[w]) lead = static_cast<Index>(w * 64 + static_cast<std::size_t>(__builtin_ctzll(row[w])));
    if (lead < 0) continue;
    // Keep the basis reduced so every stored lead is cleared from the others.
    for (std::size_t b = 0; b < basis.size(); ++b)
      if (basis[b][static_cast<std::size_t>(lead / 64)] >> (lead % 64) & 1ULL)
        for (std::size_t w = 0; w < words; ++w) basis[b][w] ^= row[w];
    basis.push_back(std::move(row));
    leads.push_back(lead);
  }
  return static_cast<Index>(basis.size());
}

FgAbGroup::FgAbGroup(Index free_rank, std::vector<Integer> torsion) : free_rank_(free_rank) {
  if (free_rank < 0) throw InputError("negative free rank");
  for (auto& d : torsion) {
    if (d < 1) throw InputError("torsion orders must be positive, got " + d.str());
    if (d != 1) torsion_.push_back(std::move(d));
  }
  for (std::size_t i = 1; i < torsion_.size(); ++i)
    if (torsion_[i] % torsion_[i - 1] != 0)
      throw InputError("torsion is not an invariant-factor sequence: " + torsion_[i - 1].str() +
                       " does not divide " + torsion_[i].str());
}

FgAbGroup FgAbGroup::from_orders(Index free_rank, const std::vector<Integer>& orders) {
  const Index n = free_rank + static_cast<Index>(orders.size());
  IntMatrix rel = IntMatrix::Zero(n, static_cast<Index>(orders.size()));
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (orders[i] < 1) throw InputError("torsion orders must be positive");
    rel(free_rank + static_cast<Index>(i), static_cast<Index>(i)) = orders[i];
  }
  return from_relations(rel);
}

FgAbGroup FgAbGroup::from_relations(const IntMatrix& relations) {
  if (relations.cols() == 0 || relations.rows() == 0) return FgAbGroup(relations.rows());
  auto snf = smith_normal_form(relations);
  std::vector<Integer> torsion;
  for (auto& d : snf.invariant_factors())
    if (d > 1) torsion.push_back(d);
  return FgAbGroup(relations.rows() - snf.rank, std::move(torsion));
}

Integer FgAbGroup::generator_order(Index k) const {
  if (k < free_rank_) return 0;
  return torsion_[static_cast<std::size_t>(k - free_rank_)];
}

IntMatrix FgAbGroup::relation_matrix() const {
  const Index t = static_cast<Index>(torsion_.size());
  IntMatrix r = IntMatrix::Zero(generator_count(), t);
  for (Index i = 0; i < t; ++i) r(free_rank_ + i, i) = torsion_[static_cast<std::size_t>(i)];
  return r;
}

IntVector FgAbGroup::reduce(IntVector coords) const {
  for (Index k = free_rank_; k < generator_count(); ++k) {
    const Integer& d = torsion_[static_cast<std::size_t>(k - free_rank_)];
    coords(k) %= d;
    if (coords(k) < 0) coords(k) += d;
  }
  return coords;
}

FgAbGroup FgAbGroup::direct_sum(const FgAbGroup& other) const {
  std::vector<Integer> orders = torsion_;
  orders.insert(orders.end(), other.torsion_.begin(), other.torsion_.end());
  return from_orders(free_rank_ + other.free_rank_, orders);
}

FgAbGroup FgAbGroup::power(Index k) const {
  FgAbGroup out;
  for (Index i = 0; i < k; ++i) out = out.direct_sum(*this);
  return out;
}

std::string FgAbGroup::to_string() const {
  if (is_trivial()) return "0";
  std::string s;
  auto append = [&](const std::string& part) {
    if (!s.empty()) s += " + ";
    s += part;
  };
  if (free_rank_ == 1) append("Z");
  if (free_rank_ > 1) append("Z^" + std::to_string(free_rank_));
  for (const auto& d : torsion_) append("Z/" + d.str());
  return s;
}

bool respects_relations(const FgAbGroup& source, const FgAbGroup& target, const IntMatrix& m) {
  if (m.rows() != target.generator_count() || m.cols() != source.generator_count()) return false;
  for (Index j = source.free_rank(); j < source.generator_count(); ++j) {
    const Integer& d = source.generator_order(j);
    for (Index i = 0; i < m.rows(); ++i) {
      const Integer image = m(i, j) * d;
      const Integer order = target.generator_order(i);
      if (order == 0 ? image != 0 : image % order != 0) return false;
    }
  }
  return true;
}

Homomorphism make_homomorphism(FgAbGroup source, FgAbGroup target, IntMatrix matrix) {
  if (matrix.rows() != target.generator_count() || matrix.cols() != source.generator_count())
    throw IllDefined("homomorphism matrix has shape " + std::to_string(matrix.rows()) + "x" +
                     std::to_string(matrix.cols()) + ", expected " +
                     std::to_string(target.generator_count()) + "x" +
                     std::to_string(source.generator_count()));
  if (!respects_relations(source, target, matrix))
    throw IllDefined("matrix does not map source relations into target relations");
  for (Index j = 0; j < matrix.cols(); ++j) matrix.col(j) = target.reduce(matrix.col(j));
  return {std::move(source), std::move(target), std::move(matrix)};
}

FgAbGroup kernel(const Homomorphism& h) {
  return Subquotient(IntMatrix(h.source.generator_count(), 0), h.matrix,
                     h.source.relation_matrix(), h.target.relation_matrix())
      .group();
}

FgAbGroup cokernel(const Homomorphism& h) {
  return FgAbGroup::from_relations(hcat(h.matrix, h.target.relation_matrix()));
}

FgAbGroup image(const Homomorphism& h) {
  const Index n = h.source.generator_count();
  return FgAbGroup::from_relations(cycle_lattice_span(h.matrix, h.target.relation_matrix(), n));
}

bool in_column_lattice(const IntMatrix& relations, const IntVector& v) {
  return LatticeTest(relations).contains(v);
}

Subquotient::Subquotient(const IntMatrix& in, const IntMatrix& out, const IntMatrix& relations,
                         const IntMatrix& out_relations) {
  const Index n = out.cols();
  if (in.rows() != n || relations.rows() != n || out_relations.rows() != out.rows())
    throw Error("subquotient: inconsistent shapes");

  // Cycle lattice L and a basis K of it: K = U_S^{-1}[:, :r] diag(d).
  IntMatrix span = cycle_lattice_span(out, out_relations, n);
  IntMatrix basis;
  if (span.cols() == 0) {
    lattice_rows_ = IntMatrix(0, n);
    basis = IntMatrix(n, 0);
  } else {
    auto s = smith_normal_form(span);
    lattice_rows_ = s.U.topRows(s.rank);
    lattice_divisors_ = s.invariant_factors();
    basis = s.U_inv.leftCols(s.rank);
    for (Index i = 0; i < s.rank; ++i) basis.col(i) *= lattice_divisors_[static_cast<std::size_t>(i)];
  }
  const Index r = basis.cols();

  auto lattice_coords = [&](const IntVector& x) {
    IntVector y = lattice_rows_ * x;
    for (Index i = 0; i < r; ++i) {
      const Integer& d = lattice_divisors_[static_cast<std::size_t>(i)];
      if (y(i) % d != 0) throw NotAComplex("boundary does not lie in the cycle lattice");
      y(i) /= d;
    }
    return y;
  };

  IntMatrix rel = hcat(in, relations);
  IntMatrix c(r, rel.cols());
  for (Index j = 0; j < rel.cols(); ++j) c.col(j) = lattice_coords(rel.col(j));

  std::vector<Index> selected;
  std::vector<Integer> orders;
  IntMatrix u_c, u_c_inv;
  if (r > 0 && c.cols() > 0) {
    auto s = smith_normal_form(c);
    u_c = s.U;
    u_c_inv = s.U_inv;
    for (Index i = s.rank; i < r; ++i) selected.push_back(i);
    for (Index i = 0; i < s.rank; ++i)
      if (s.D(i, i) > 1) {
        selected.push_back(i);
        orders.push_back(s.D(i, i));
      }
    group_ = FgAbGroup(r - s.rank, orders);
  } else {
    u_c = identity<Integer>(r);
    u_c_inv = identity<Integer>(r);
    for (Index i = 0; i < r; ++i) selected.push_back(i);
    group_ = FgAbGroup(r);
  }
  const Index g = static_cast<Index>(selected.size());
  representatives_ = IntMatrix(n, g);
  group_rows_ = IntMatrix(g, r);
  for (Index k = 0; k < g; ++k) {
    const Index i = selected[static_cast<std::size_t>(k)];
    representatives_.col(k) = basis * u_c_inv.col(i);
    group_rows_.row(k) = u_c.row(i);
  }
}

IntVector Subquotient::coordinates(const IntVector& x) const {
  const Index r = lattice_rows_.rows();
  IntVector y = lattice_rows_ * x;
  for (Index i = 0; i < r; ++i) {
    const Integer& d = lattice_divisors_[static_cast<std::size_t>(i)];
    if (y(i) % d != 0) throw Error("vector is not a cycle");
    y(i) /= d;
  }
  return group_.reduce(group_rows_ * y);
}

Index ChainComplexZ::rank(Index n) const {
  if (n < 0 || n > top_degree()) return 0;
  return ranks[static_cast<std::size_t>(n)];
}

IntMatrix ChainComplexZ::boundary(Index n) const {
  if (n >= 1 && n <= top_degree() && static_cast<std::size_t>(n) < boundaries.size())
    return boundaries[static_cast<std::size_t>(n)];
  return IntMatrix::Zero(rank(n - 1), rank(n));
}

IntMatrix ChainComplexZ::relation(Index n) const {
  if (n >= 0 && static_cast<std::size_t>(n) < relations.size()) return relations[static_cast<std::size_t>(n)];
  return IntMatrix(rank(n), 0);
}

Index CochainComplexZ::rank(Index n) const {
  if (n < 0 || n > top_degree()) return 0;
  return ranks[static_cast<std::size_t>(n)];
}

IntMatrix CochainComplexZ::coboundary(Index n) const {
  if (n >= 0 && n < top_degree() && static_cast<std::size_t>(n) < coboundaries.size())
    return coboundaries[static_cast<std::size_t>(n)];
  return IntMatrix::Zero(rank(n + 1), rank(n));
}

IntMatrix CochainComplexZ::relation(Index n) const {
  if (n >= 0 && static_cast<std::size_t>(n) < relations.size()) return relations[static_cast<std::size_t>(n)];
  return IntMatrix(rank(n), 0);
}

FgAbGroup homology(const ChainComplexZ& complex, Index n) {
  if (n < 0 || n > complex.top_degree()) return FgAbGroup();
  IntMatrix in = complex.boundary(n + 1), out = complex.boundary(n);
  IntMatrix rel = complex.relation(n), out_rel = complex.relation(n - 1);
  require_complex(out, in, out_rel, "boundaries");
  return subquotient_group(in, out, rel, out_rel, complex.rank(n));
}

FgAbGroup cohomology(const CochainComplexZ& complex, Index n) {
  if (n < 0 || n > complex.top_degree()) return FgAbGroup();
  IntMatrix in = complex.coboundary(n - 1), out = complex.coboundary(n);
  IntMatrix rel = complex.relation(n), out_rel = complex.relation(n + 1);
  require_complex(out, in, out_rel, "coboundaries");
  return subquotient_group(in, out, rel, out_rel, complex.rank(n));
}

Index rational_betti(const ChainComplexZ& c, Index n) {
  if (n < 0 || n > c.top_degree()) return 0;
  return c.rank(n) - rational_rank(c.boundary(n)) - rational_rank(c.boundary(n + 1));
}

Index rational_betti(const CochainComplexZ& c, Index n) {
  if (n < 0 || n > c.top_degree()) return 0;
  return c.rank(n) - rational_rank(c.coboundary(n)) - rational_rank(c.coboundary(n - 1));
}

}  // namespace dlim
