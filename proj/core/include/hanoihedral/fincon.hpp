#pragma once

// The finitely constrained closure: size-2 pattern membership, exact counting
// of depth-n truncations, the closure's level-one index, and the Hausdorff
// dimension of the closure, with exact rational coefficients.

#include <optional>
#include <vector>

#include "hanoihedral/bigint.hpp"
#include "hanoihedral/group_spec.hpp"
#include "hanoihedral/perm.hpp"
#include "hanoihedral/portrait.hpp"
#include "hanoihedral/stabilizer_chain.hpp"

namespace hh {

// dihedral recognition: rotation x -> x+k or mirror x -> 2i-x
struct DihedralShape {
  bool mirror;
  int index;
};
std::optional<DihedralShape> dihedral_shape(const Perm& p);

// allowed size-2 patterns: the number of mirrors among the d+1 labels is
// even.  The parity is flippable so tests can exercise a corrupted predicate.
struct PatternSet {
  int d;
  int parity = 0;  // 0 = even-mirror patterns allowed (the real closure)

  bool allowed(const Perm& root, const std::vector<Perm>& children) const;
};

// every label must lie in the dihedral group (otherwise an error); true iff
// every vertex of depth < n-1 carries an allowed pattern
bool portrait_in_closure(const PatternSet& ps, const Portrait& p);

// number of d-tuples over the dihedral group with an even number of mirrors
BigInt allowed_child_tuple_count(int d);
// 2d * ((2d)^d / 2)^{(d^{n-1}-1)/(d-1)}
BigInt count_closure_truncations(int d, int n);
// (2d)^d divided by the allowed child-tuple count
BigInt closure_level1_index(int d);

// value p - q * log_{2d}(2) with exact rational p, q
struct HausdorffTerm {
  int n = 0;  // 0 marks the limit
  BigRat p;
  BigRat q;
  double value(int d) const;
};
std::vector<HausdorffTerm> hausdorff_terms(int d, int count);
HausdorffTerm hausdorff_limit(int d);

// full enumeration oracle at d = 3: the 648 depth-2 elements of the level
// quotient coincide with the dihedral-labelled depth-2 portraits passing the
// pattern check
bool exhaustive_closure_equivalence(const GroupSpec& spec, const PatternSet& ps,
                                    const StabilizerChain& depth2_chain);

}  // namespace hh
