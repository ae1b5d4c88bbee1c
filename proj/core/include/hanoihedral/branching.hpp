#pragma once

// Analysis layer for the mirror-generated tree groups: the per-generator
// occurrence-parity homomorphism exp, the augmentation bit, word-level
// first-level-stabilizer criteria, the canonical generator families for
// St(1) and St(2) mod the branching subgroup, explicit words realizing
// single-coordinate commutators, and the branching-identity verifier.

#include <vector>

#include "hanoihedral/gf2.hpp"
#include "hanoihedral/group_spec.hpp"

namespace hh {

int mod_index(long long v, int d);
int inverse_of_two(int d);  // (d+1)/2, valid for odd d
int half_index(long long v, int d);

// coordinate j = parity of occurrences of a_j
gf2::Vec2 exp_vector(int d, const GenWord& w);
int aug_bit(const GenWord& w);

// even length and matching alternating letter sums mod d
bool in_st1_criterion(const GroupSpec& spec, const GenWord& w);

// a_j a_{j+i} a_i a_0
GenWord st1_basic_word(int d, int j, int i);
// the (d-1)^2 words a_j a_{j+i} a_i a_0, i, j in {1, ..., d-1}
std::vector<GenWord> st1_generator_words(int d);
// Schreier generators of St(1) from the coset transversal of the root map
std::vector<GenWord> st1_schreier_generator_words(int d);
// the (d-1)(d-2) four-factor words generating St(2) modulo the level-one
// branching copy, for i != -j
std::vector<GenWord> st2_mod_branch_generator_words(int d);

// a word in St(1) whose section at coordinate l is exactly a_r
GenWord connector_word(int d, int l, int r);
// a word equal to the element supported at coordinate l with section
// [a_p, a_q]; its exp vector vanishes, certifying membership in the kernel
GenWord delta_commutator_word(int d, int l, int p, int q);
// nested witness: an element of Triv(n) = St(n) cap X^{n-1}*K built from
// iterated commutators of delta words (n >= 1)
GenWord triv_witness_word(int d, int n);

struct BranchingCheckOptions {
  int index_offset = 0;  // tests corrupt the identities with a nonzero offset
};

// verifies, as equalities of depth-`depth` portraits, the identity families
// behind branching over the commutator subgroup: the first-level
// decompositions of the St(1) generators, the three-letter conjugator
// decomposition, the closed-form single-coordinate commutator words, and
// their coordinate moves
bool branching_identities_check(int d, int depth,
                                const BranchingCheckOptions& options = {});

}  // namespace hh
