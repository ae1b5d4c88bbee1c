#pragma once

// Base-and-strong-generating-set chain over decorated permutations.  The base
// is every tree vertex in breadth-first order, so the pointwise stabilizer of
// the first blocks of the base are exactly the level stabilizers.  Elements
// whose permutation part is trivial live in a GF(2) echelon basis at the
// bottom of the chain (the cocycle decorations never drive point actions).

#include <cstddef>
#include <string>
#include <vector>

#include "hanoihedral/bigint.hpp"
#include "hanoihedral/ext_element.hpp"
#include "hanoihedral/gf2.hpp"

namespace hh {

class StabilizerChain {
 public:
  static StabilizerChain build(const std::vector<ExtElement>& generators, int d, int depth);

  int d() const { return d_; }
  int depth() const { return depth_; }
  std::size_t domain() const { return domain_; }

  // order of the permutation image, the product of the orbit sizes
  const BigInt& order() const { return order_; }
  // order of the permutation image of the stabilizer of all vertices of
  // depth <= k
  BigInt stabilizer_order(int k) const;

  // generators of the subgroup acting trivially on all vertices of depth <= k;
  // includes the cocycle-only bottom basis
  std::vector<ExtElement> level_stabilizer_gens(int k) const;

  // GF(2) basis of the cocycle vectors of elements with trivial perm part
  gf2::Mat2 st_mod_triv_space() const { return bottom_.to_mat(); }
  int bottom_rank() const { return bottom_.rank(); }

  // sift through the transversals; returns the residual (trivial perm part
  // means full success up to the bottom space)
  ExtElement sift(const ExtElement& g) const;
  bool contains(const ExtElement& g) const;

  // re-run a full deterministic verification pass over all Schreier
  // generators; true when nothing new is produced
  bool verify() const;

  // all elements of the permutation image (distinct perm parts); refuses
  // beyond `limit`
  std::vector<ExtElement> permutation_image_elements(std::size_t limit = 2000000) const;

  std::string summary() const;  // base points, orbit sizes, order

 private:
  struct Level {
    std::size_t base = 0;
    std::vector<std::size_t> orbit;       // BFS discovery order, orbit[0] == base
    std::vector<int> position;            // point -> orbit position, -1 outside
    std::vector<ExtElement> transversal;  // transversal[i][base] == orbit[i]
  };

  StabilizerChain() = default;
  bool add_element(const ExtElement& g);
  void close();

  int d_ = 0;
  int depth_ = 0;
  std::size_t domain_ = 0;
  std::vector<Level> levels_;              // one per base vertex 1..M
  std::vector<ExtElement> strong_;         // perm-part strong generators
  std::vector<std::size_t> strong_level_;  // first base index moved
  std::vector<ExtElement> bottom_elems_;   // raw trivial-perm residuals
  gf2::EchelonBasis bottom_{0};
  BigInt order_ = 1;
};

}  // namespace hh
