// Exact integer linear algebra: Smith normal form, finitely generated abelian groups,
// homomorphisms between them and (co)homology of integer (co)chain complexes.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dlim/numeric.hpp"

namespace dlim {

/// U * M * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... | d_rank, all d_i > 0.
/// The inverses are tracked alongside so callers never need to invert U or V.
template <typename Scalar>
struct SmithDecomposition {
  Matrix<Scalar> U, D, V;
  Matrix<Scalar> U_inv, V_inv;
  Index rank = 0;

  std::vector<Scalar> invariant_factors() const {
    std::vector<Scalar> out;
    for (Index i = 0; i < rank; ++i) out.push_back(D(i, i));
    return out;
  }
};

namespace detail {

template <typename Scalar>
struct SmithWorkspace {
  SmithDecomposition<Scalar>& s;

  void swap_rows(Index i, Index j) {
    if (i == j) return;
    s.D.row(i).swap(s.D.row(j));
    s.U.row(i).swap(s.U.row(j));
    s.U_inv.col(i).swap(s.U_inv.col(j));
  }
  void swap_cols(Index i, Index j) {
    if (i == j) return;
    s.D.col(i).swap(s.D.col(j));
    s.V.col(i).swap(s.V.col(j));
    s.V_inv.row(i).swap(s.V_inv.row(j));
  }
  // row_i += c * row_j
  void add_row(Index i, Index j, const Scalar& c) {
    s.D.row(i) += c * s.D.row(j);
    s.U.row(i) += c * s.U.row(j);
    s.U_inv.col(j) -= c * s.U_inv.col(i);
  }
  // col_i += c * col_j
  void add_col(Index i, Index j, const Scalar& c) {
    s.D.col(i) += c * s.D.col(j);
    s.V.col(i) += c * s.V.col(j);
    s.V_inv.row(j) -= c * s.V_inv.row(i);
  }
  void negate_row(Index i) {
    s.D.row(i) = -s.D.row(i);
    s.U.row(i) = -s.U.row(i);
    s.U_inv.col(i) = -s.U_inv.col(i);
  }
};

}  // namespace detail

template <typename Scalar>
SmithDecomposition<Scalar> smith_normal_form(const Matrix<Scalar>& m) {
  const Index rows = m.rows(), cols = m.cols();
  SmithDecomposition<Scalar> s{identity<Scalar>(rows), m, identity<Scalar>(cols),
                               identity<Scalar>(rows), identity<Scalar>(cols), 0};
  detail::SmithWorkspace<Scalar> w{s};
  auto& D = s.D;
  const Scalar zero(0);

  Index t = 0;
  for (; t < std::min(rows, cols); ++t) {
    // Minimal-magnitude pivot over the trailing block curbs coefficient growth.
    Index pi = -1, pj = -1;
    Scalar best(0);
    for (Index j = t; j < cols; ++j)
      for (Index i = t; i < rows; ++i)
        if (D(i, j) != zero && (pi < 0 || abs_value(D(i, j)) < best)) {
          best = abs_value(D(i, j));
          pi = i;
          pj = j;
        }
    if (pi < 0) break;
    w.swap_rows(t, pi);
    w.swap_cols(t, pj);

    for (;;) {
      bool clean = true;
      for (Index i = t + 1; i < rows; ++i) {
        if (D(i, t) == zero) continue;
        Scalar q = D(i, t) / D(t, t);
        if (q != zero) w.add_row(i, t, -q);
        if (D(i, t) != zero) clean = false;
      }
      for (Index j = t + 1; j < cols; ++j) {
        if (D(t, j) == zero) continue;
        Scalar q = D(t, j) / D(t, t);
        if (q != zero) w.add_col(j, t, -q);
        if (D(t, j) != zero) clean = false;
      }
      if (!clean) {
        // A nonzero remainder smaller than the pivot survives: move it to the pivot slot.
        Index bi = t, bj = t;
        Scalar b = abs_value(D(t, t));
        for (Index i = t + 1; i < rows; ++i)
          if (D(i, t) != zero && abs_value(D(i, t)) < b) b = abs_value(D(i, t)), bi = i, bj = t;
        for (Index j = t + 1; j < cols; ++j)
          if (D(t, j) != zero && abs_value(D(t, j)) < b) b = abs_value(D(t, j)), bi = t, bj = j;
        w.swap_rows(t, bi);
        w.swap_cols(t, bj);
        continue;
      }
      // Divisibility: fold any offending row into the pivot row and repeat.
      Index bad = -1;
      for (Index j = t + 1; j < cols && bad < 0; ++j)
        for (Index i = t + 1; i < rows; ++i)
          if (D(i, j) % D(t, t) != zero) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      w.add_row(t, bad, Scalar(1));
    }
    if (D(t, t) < zero) w.negate_row(t);
  }
  s.rank = t;
  return s;
}

/// Fraction-free (Bareiss) determinant of a square integer matrix.
template <typename Scalar>
Scalar determinant(Matrix<Scalar> a) {
  const Index n = a.rows();
  if (n != a.cols()) throw Error("determinant of a non-square matrix");
  if (n == 0) return Scalar(1);
  Scalar sign(1), prev(1);
  for (Index k = 0; k < n - 1; ++k) {
    if (a(k, k) == Scalar(0)) {
      Index p = k + 1;
      while (p < n && a(p, k) == Scalar(0)) ++p;
      if (p == n) return Scalar(0);
      a.row(k).swap(a.row(p));
      sign = -sign;
    }
    for (Index i = k + 1; i < n; ++i)
      for (Index j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

/// Rank over Q by exact sparse elimination.
Index rational_rank(const IntMatrix& m);
/// Rank over Z/2.
Index rank_mod2(const IntMatrix& m);

/// Finitely generated abelian group Z^r + Z/d_1 + ... + Z/d_k with d_1 | ... | d_k, d_i >= 2.
/// Generators are ordered free ones first, then the torsion ones.
class FgAbGroup {
 public:
  FgAbGroup() = default;
  /// Throws InputError unless torsion is an invariant-factor sequence; 1s are dropped.
  explicit FgAbGroup(Index free_rank, std::vector<Integer> torsion = {});

  /// Isomorphism class of Z^free_rank + sum Z/order_i for arbitrary positive orders.
  static FgAbGroup from_orders(Index free_rank, const std::vector<Integer>& orders);
  /// Z^rows / column span of `relations`.
  static FgAbGroup from_relations(const IntMatrix& relations);

  static FgAbGroup integers(Index rank = 1) { return FgAbGroup(rank); }
  static FgAbGroup cyclic(const Integer& order) { return FgAbGroup(0, {order}); }

  Index free_rank() const { return free_rank_; }
  const std::vector<Integer>& torsion() const { return torsion_; }
  Index generator_count() const { return free_rank_ + static_cast<Index>(torsion_.size()); }
  /// 0 for free generators.
  Integer generator_order(Index k) const;
  bool is_trivial() const { return free_rank_ == 0 && torsion_.empty(); }
  bool is_free() const { return torsion_.empty(); }
  /// Diagonal relation matrix on the generators (generators x torsion count).
  IntMatrix relation_matrix() const;
  /// Reduces each torsion coordinate into [0, d).
  IntVector reduce(IntVector coords) const;

  FgAbGroup direct_sum(const FgAbGroup& other) const;
  FgAbGroup power(Index k) const;

  /// "0", "Z", "Z^2 + Z/2 + Z/6".
  std::string to_string() const;

  friend bool operator==(const FgAbGroup&, const FgAbGroup&) = default;

 private:
  Index free_rank_ = 0;
  std::vector<Integer> torsion_;
};

class IllDefined : public Error {
 public:
  using Error::Error;
};

/// A homomorphism between groups in their canonical presentations; matrix is
/// target.generator_count() x source.generator_count().
struct Homomorphism {
  FgAbGroup source, target;
  IntMatrix matrix;
};

/// Validates that the matrix respects relations; throws IllDefined otherwise. Entries are
/// reduced modulo the target torsion.
Homomorphism make_homomorphism(FgAbGroup source, FgAbGroup target, IntMatrix matrix);
bool respects_relations(const FgAbGroup& source, const FgAbGroup& target, const IntMatrix& matrix);

FgAbGroup kernel(const Homomorphism& h);
FgAbGroup cokernel(const Homomorphism& h);
FgAbGroup image(const Homomorphism& h);

/// v lies in the column lattice of `relations` (an empty relation matrix spans 0).
bool in_column_lattice(const IntMatrix& relations, const IntVector& v);

/// Subquotient {x : out*x in im(out_relations)} / (im(in) + im(relations)) of Z^n with explicit
/// representatives and a coordinate map back onto the chosen generators.
class Subquotient {
 public:
  /// in: n x a, out: c x n, relations: n x r, out_relations: c x s (any may have zero columns).
  Subquotient(const IntMatrix& in, const IntMatrix& out, const IntMatrix& relations,
              const IntMatrix& out_relations);

  const FgAbGroup& group() const { return group_; }
  /// n x generator_count: ambient representatives of the generators.
  const IntMatrix& representatives() const { return representatives_; }
  /// Coordinates of a cycle x (out*x in the relation lattice) in terms of the generators.
  IntVector coordinates(const IntVector& x) const;

 private:
  FgAbGroup group_;
  IntMatrix representatives_;
  IntMatrix lattice_rows_;               // U_S restricted to the first r rows
  std::vector<Integer> lattice_divisors_;  // d_i of the cycle lattice basis
  IntMatrix group_rows_;                 // rows of U_C selected for the generators
};

class NotAComplex : public Error {
 public:
  using Error::Error;
};

/// Homological complex: boundaries[n] maps C_n -> C_{n-1} (so boundaries[0] has 0 rows).
/// relations[n], when present, presents C_n as Z^ranks[n] / im relations[n].
struct ChainComplexZ {
  std::vector<Index> ranks;
  std::vector<IntMatrix> boundaries;
  std::vector<IntMatrix> relations;

  Index top_degree() const { return static_cast<Index>(ranks.size()) - 1; }
  Index rank(Index n) const;
  IntMatrix boundary(Index n) const;  // zero matrix outside the stored range
  IntMatrix relation(Index n) const;  // ranks(n) x 0 when free
};

/// Cohomological complex: coboundaries[n] maps C^n -> C^{n+1}.
struct CochainComplexZ {
  std::vector<Index> ranks;
  std::vector<IntMatrix> coboundaries;
  std::vector<IntMatrix> relations;

  Index top_degree() const { return static_cast<Index>(ranks.size()) - 1; }
  Index rank(Index n) const;
  IntMatrix coboundary(Index n) const;
  IntMatrix relation(Index n) const;
};

/// ker d_n / im d_{n+1}; throws NotAComplex if d_n d_{n+1} is not zero modulo relations.
FgAbGroup homology(const ChainComplexZ& complex, Index n);
FgAbGroup cohomology(const CochainComplexZ& complex, Index n);
/// dim over Q of H_n / H^n (free complexes only).
Index rational_betti(const ChainComplexZ& complex, Index n);
Index rational_betti(const CochainComplexZ& complex, Index n);

}  // namespace dlim
