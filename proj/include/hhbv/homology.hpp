#pragma once

#include "hhbv/matrix.hpp"
#include "hhbv/ring.hpp"
#include "hhbv/snf.hpp"

#include <vector>

namespace hhbv {

/// ker(d_out)/im(d_in) for one degree of a complex of free modules.
///
/// Generators come with an order (0 = free line, m > 1 = Z/m summand) and a
/// cycle representative. `projection` maps any cycle to its coordinates in
/// these generators; two cycles are homologous iff their coordinates agree
/// modulo the orders. Over F_p every order is 0 and the group is a vector
/// space of dimension `generators()`. Over Q only integral complexes are
/// supported; torsion generators are dropped.
struct HomologyGroup {
  Ring ring;
  std::size_t ambient_dim = 0;
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;
  std::vector<Integer> orders;
  std::vector<Vector> representatives;
  IntMatrix projection;
  IntMatrix d_in;
  IntMatrix d_out;

  std::size_t generators() const { return representatives.size(); }
  /// Dimension over a field: free rank; over Z: free rank plus torsion count.
  std::size_t dimension() const { return generators(); }

  bool is_cycle(const Vector& v) const;
  /// Coordinates of a cycle, reduced modulo generator orders (and p).
  Vector coordinates(const Vector& cycle) const;
  bool is_boundary(const Vector& v) const;
};

HomologyGroup homology(const IntMatrix& d_in, const IntMatrix& d_out, const Ring& ring);

/// Matrix of the map induced by `op` (target ambient × source ambient) in the
/// generator bases of `source` and `target`, entries reduced modulo the
/// target orders. Throws NotAChainMap when `op` does not send cycles to
/// cycles and boundaries to boundaries.
IntMatrix induced_map_on_homology(const IntMatrix& op, const HomologyGroup& source, const HomologyGroup& target);

/// Cokernel of an induced map, as an abelian group (Z) or via free_rank as
/// a dimension (fields).
AbelianGroup cokernel_on_homology(const IntMatrix& induced, const HomologyGroup& target);

}  // namespace hhbv
