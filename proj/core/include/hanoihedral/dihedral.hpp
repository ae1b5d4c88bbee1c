#pragma once

// Exact arithmetic in the dihedral group of the d-gon (odd d), and the cycle
// space of its left Cayley graph with respect to the mirror generators.  The
// graph is the complete bipartite graph on the d rotations and d mirrors;
// edge (j, i) joins the rotation by j to the mirror through i - j/2.

#include <optional>
#include <string>
#include <vector>

#include "hanoihedral/gf2.hpp"
#include "hanoihedral/group_spec.hpp"
#include "hanoihedral/perm.hpp"

namespace hh {

class Dihedral {
 public:
  static Dihedral rotation(int d, int k);
  static Dihedral mirror(int d, int i);
  static Dihedral identity(int d) { return rotation(d, 0); }

  int d() const { return d_; }
  bool is_mirror() const { return mirror_; }
  bool is_rotation() const { return !mirror_; }
  bool is_identity() const { return !mirror_ && index_ == 0; }
  int index() const { return index_; }

  int apply(int x) const;
  Dihedral operator*(const Dihedral& other) const;  // other acts first
  Dihedral inverse() const;
  bool operator==(const Dihedral&) const = default;

  Perm to_perm() const;
  static std::optional<Dihedral> from_perm(const Perm& p);

  std::string str() const;  // "r3" or "m2"

 private:
  Dihedral(int d, bool mirror, int index) : d_(d), mirror_(mirror), index_(index) {}
  int d_;
  bool mirror_;
  int index_;
};

// mu_{i_m} ... mu_{i_1} in closed form; indices given left to right
Dihedral mirror_product(int d, const std::vector<int>& indices);

// edge coordinates are (rotation index j, letter i) lexicographic
inline int edge_coordinate(int d, int j, int i) { return j * d + i; }

// width-d^2 vector of edge-use parities of the closed-walk reading of a word
gf2::Vec2 edge_vector(const GroupSpec& spec, const GenWord& w);

// basis cycles through the spanning tree of all edges at the trivial rotation
// and all edges at the mirror through 0; rank (d-1)^2
gf2::Mat2 cycle_space_basis(int d);

// 2d vertex parity rows over the d^2 edge coordinates; rank 2d-1
gf2::Mat2 vertex_conditions(int d);

}  // namespace hh
