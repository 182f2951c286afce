#pragma once

// Vertex partitions with designated representatives, equitability checks,
// quotient matrices and color refinement.

#include "eqdecomp/graph.hpp"
#include "eqdecomp/scalar.hpp"

#include <cstddef>
#include <functional>
#include <vector>

namespace eqdecomp {

/// Ordered cells V_1..V_r of the vertex positions 0..n-1, each with one
/// representative. Vertices are positions in the vertex order of the graph
/// or matrix the partition is applied to.
class Partition {
 public:
  Partition() = default;
  /// Validates the disjoint cover and that reps[i] lies in cells[i].
  Partition(std::vector<std::vector<Index>> cells, std::vector<Index> reps, Index n);
  /// Representatives default to the least vertex of each cell.
  Partition(std::vector<std::vector<Index>> cells, Index n);

  static Partition trivial(Index n);
  static Partition singletons(Index n);

  Index vertex_count() const { return n_; }
  std::size_t cell_count() const { return cells_.size(); }
  const std::vector<std::vector<Index>>& cells() const { return cells_; }
  const std::vector<Index>& representatives() const { return reps_; }
  std::size_t cell_of(Index v) const { return cell_of_[static_cast<std::size_t>(v)]; }

  Partition with_representatives(std::vector<Index> reps) const { return {cells_, std::move(reps), n_}; }

  /// V' = V minus the representatives, in cell order then within-cell order.
  std::vector<Index> non_representatives() const;

  /// Number of representative choices, the product of the cell sizes.
  std::size_t representative_choice_count() const;

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.n_ == b.n_ && a.cells_ == b.cells_ && a.reps_ == b.reps_;
  }

 private:
  std::vector<std::vector<Index>> cells_;
  std::vector<Index> reps_;
  std::vector<std::size_t> cell_of_;
  Index n_ = 0;
};

/// Visits every choice of one representative per cell.
void for_each_representative_choice(const Partition& pi, const std::function<void(const Partition&)>& visit);

/// Same cells as sets, ignoring cell order and representatives.
bool same_cells(const Partition& a, const Partition& b);

/// True when every cell of `fine` lies inside a cell of `coarse`.
bool refines(const Partition& fine, const Partition& coarse);

using QuotientMatrix = RationalMatrix;

/// n x r membership matrix P with P(v, j) = 1 iff v lies in cell j.
RationalMatrix characteristic_matrix(const Partition& pi);

/// n x (n - r) matrix Q selecting V' (columns in non_representatives order).
RationalMatrix selector_matrix(const Partition& pi);

/// M/pi when every block M|Vi x Vj has constant row sums; otherwise throws
/// NotEquitableError naming the first offending (i, j, row).
QuotientMatrix check_equitable(const RationalMatrix& m, const Partition& pi);
inline QuotientMatrix check_equitable(const IntMatrix& m, const Partition& pi) {
  return check_equitable(to_rational(m), pi);
}

/// Quotient of alpha*A(x) + D where D is constant d_i on cell i:
/// alpha*A(x/pi) + diag(d_i).
QuotientMatrix quotient_of_shifted(const SignedDigraph& x, const Partition& pi, const Rational& alpha,
                                   const std::vector<Rational>& cell_diag);

/// Block-constant diagonal matrix with value cell_diag[i] on cell i.
RationalMatrix cell_diagonal(const Partition& pi, const std::vector<Rational>& cell_diag);

/// Coarsest equitable partition refining `seed`. Each round splits every cell
/// by the vector of row sums into the current cells; split pieces keep the
/// position of their parent and are ordered by signature, lexicographically
/// ascending. Representatives are the least vertex of each cell.
Partition coarsest_equitable(const RationalMatrix& m, const Partition& seed);
inline Partition coarsest_equitable(const SignedDigraph& x, const Partition& seed) {
  return coarsest_equitable(x.adjacency_rational(), seed);
}
inline Partition coarsest_equitable(const SignedDigraph& x) {
  return coarsest_equitable(x, Partition::trivial(x.size()));
}

}  // namespace eqdecomp
