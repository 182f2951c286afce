#include "eqdecomp/partition.hpp"

#include "eqdecomp/errors.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace eqdecomp {

namespace {

constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);

}  // namespace

Partition::Partition(std::vector<std::vector<Index>> cells, std::vector<Index> reps, Index n)
    : cells_(std::move(cells)), reps_(std::move(reps)), cell_of_(static_cast<std::size_t>(n), kUnassigned), n_(n) {
  if (n > 0 && cells_.empty()) throw ValidationError("partition has no cells");
  if (reps_.size() != cells_.size())
    throw ValidationError("partition has " + std::to_string(cells_.size()) + " cells but " +
                          std::to_string(reps_.size()) + " representatives");
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    if (cells_[i].empty()) throw ValidationError("cell " + std::to_string(i + 1) + " is empty");
    for (Index v : cells_[i]) {
      if (v < 0 || v >= n) throw ValidationError("vertex " + std::to_string(v + 1) + " is out of range");
      if (cell_of_[v] != kUnassigned) throw ValidationError("vertex " + std::to_string(v + 1) + " is in two cells");
      cell_of_[v] = i;
    }
  }
  std::vector<std::string> missing;
  for (Index v = 0; v < n; ++v)
    if (cell_of_[v] == kUnassigned) missing.push_back(std::to_string(v + 1));
  if (!missing.empty()) {
    std::string list;
    for (const auto& m : missing) list += (list.empty() ? "" : " ") + m;
    throw ValidationError("vertices not covered by the partition: " + list);
  }
  for (std::size_t i = 0; i < cells_.size(); ++i)
    if (reps_[i] < 0 || reps_[i] >= n || cell_of_[reps_[i]] != i)
      throw ValidationError("representative " + std::to_string(reps_[i] + 1) + " is not in cell " +
                            std::to_string(i + 1));
}

Partition::Partition(std::vector<std::vector<Index>> cells, Index n)
    : Partition(cells,
                [&] {
                  std::vector<Index> reps;
                  for (const auto& c : cells) reps.push_back(c.empty() ? -1 : *std::min_element(c.begin(), c.end()));
                  return reps;
                }(),
                n) {}

Partition Partition::trivial(Index n) {
  std::vector<Index> all;
  for (Index v = 0; v < n; ++v) all.push_back(v);
  if (n == 0) return Partition({}, {}, 0);
  return Partition({all}, n);
}

Partition Partition::singletons(Index n) {
  std::vector<std::vector<Index>> cells;
  for (Index v = 0; v < n; ++v) cells.push_back({v});
  return Partition(std::move(cells), n);
}

std::vector<Index> Partition::non_representatives() const {
  std::vector<Index> out;
  for (std::size_t i = 0; i < cells_.size(); ++i)
    for (Index v : cells_[i])
      if (v != reps_[i]) out.push_back(v);
  return out;
}

std::size_t Partition::representative_choice_count() const {
  std::size_t count = 1;
  for (const auto& c : cells_) count *= c.size();
  return count;
}

void for_each_representative_choice(const Partition& pi, const std::function<void(const Partition&)>& visit) {
  const auto& cells = pi.cells();
  std::vector<std::size_t> choice(cells.size(), 0);
  while (true) {
    std::vector<Index> reps;
    for (std::size_t i = 0; i < cells.size(); ++i) reps.push_back(cells[i][choice[i]]);
    visit(pi.with_representatives(std::move(reps)));
    std::size_t k = 0;
    while (k < cells.size() && ++choice[k] == cells[k].size()) choice[k++] = 0;
    if (k == cells.size()) return;
  }
}

bool same_cells(const Partition& a, const Partition& b) {
  auto canon = [](const Partition& p) {
    std::set<std::set<Index>> s;
    for (const auto& c : p.cells()) s.emplace(c.begin(), c.end());
    return s;
  };
  return a.vertex_count() == b.vertex_count() && canon(a) == canon(b);
}

bool refines(const Partition& fine, const Partition& coarse) {
  if (fine.vertex_count() != coarse.vertex_count()) return false;
  for (const auto& c : fine.cells())
    for (Index v : c)
      if (coarse.cell_of(v) != coarse.cell_of(c.front())) return false;
  return true;
}

RationalMatrix characteristic_matrix(const Partition& pi) {
  const auto r = static_cast<Index>(pi.cell_count());
  RationalMatrix p = RationalMatrix::Zero(pi.vertex_count(), r);
  for (Index j = 0; j < r; ++j)
    for (Index v : pi.cells()[j]) p(v, j) = 1;
  return p;
}

RationalMatrix selector_matrix(const Partition& pi) {
  const std::vector<Index> vprime = pi.non_representatives();
  RationalMatrix q = RationalMatrix::Zero(pi.vertex_count(), static_cast<Index>(vprime.size()));
  for (std::size_t k = 0; k < vprime.size(); ++k) q(vprime[k], static_cast<Index>(k)) = 1;
  return q;
}

QuotientMatrix check_equitable(const RationalMatrix& m, const Partition& pi) {
  if (m.rows() != m.cols() || m.rows() != pi.vertex_count())
    throw DimensionError("matrix is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                         " but the partition covers " + std::to_string(pi.vertex_count()) + " vertices");
  const std::size_t r = pi.cell_count();
  QuotientMatrix b(static_cast<Index>(r), static_cast<Index>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      bool first = true;
      Rational expected;
      for (Index row : pi.cells()[i]) {
        Rational sum(0);
        for (Index col : pi.cells()[j]) sum += m(row, col);
        if (first) {
          expected = sum;
          first = false;
        } else if (sum != expected) {
          throw NotEquitableError(i, j, row);
        }
      }
      b(static_cast<Index>(i), static_cast<Index>(j)) = expected;
    }
  return b;
}

RationalMatrix cell_diagonal(const Partition& pi, const std::vector<Rational>& cell_diag) {
  if (cell_diag.size() != pi.cell_count())
    throw DimensionError("need one diagonal value per cell (" + std::to_string(pi.cell_count()) + ")");
  RationalMatrix d = RationalMatrix::Zero(pi.vertex_count(), pi.vertex_count());
  for (std::size_t i = 0; i < pi.cell_count(); ++i)
    for (Index v : pi.cells()[i]) d(v, v) = cell_diag[i];
  return d;
}

QuotientMatrix quotient_of_shifted(const SignedDigraph& x, const Partition& pi, const Rational& alpha,
                                   const std::vector<Rational>& cell_diag) {
  if (cell_diag.size() != pi.cell_count())
    throw DimensionError("need one diagonal value per cell (" + std::to_string(pi.cell_count()) + ")");
  QuotientMatrix q = check_equitable(x.adjacency_rational(), pi);
  q *= alpha;
  for (std::size_t i = 0; i < cell_diag.size(); ++i) q(static_cast<Index>(i), static_cast<Index>(i)) += cell_diag[i];
  return q;
}

Partition coarsest_equitable(const RationalMatrix& m, const Partition& seed) {
  if (m.rows() != m.cols() || m.rows() != seed.vertex_count())
    throw DimensionError("seed partition does not match the matrix");
  std::vector<std::vector<Index>> cells = seed.cells();
  const Index n = m.rows();
  while (true) {
    std::vector<std::size_t> cell_of(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < cells.size(); ++i)
      for (Index v : cells[i]) cell_of[v] = i;
    std::vector<std::vector<Index>> next;
    for (const auto& cell : cells) {
      std::map<std::vector<Rational>, std::vector<Index>> groups;
      for (Index v : cell) {
        std::vector<Rational> signature(cells.size(), Rational(0));
        for (Index w = 0; w < n; ++w)
          if (m(v, w) != 0) signature[cell_of[w]] += m(v, w);
        groups[signature].push_back(v);
      }
      for (auto& [sig, members] : groups) next.push_back(std::move(members));
    }
    const bool stable = next.size() == cells.size();
    cells = std::move(next);
    if (stable) break;
  }
  for (auto& c : cells) std::sort(c.begin(), c.end());
  return Partition(std::move(cells), n);
}

}  // namespace eqdecomp
