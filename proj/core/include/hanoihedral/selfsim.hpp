#pragma once

// Word evaluation, one-level decomposition, the contraction-based word
// problem, and nucleus computation for wreath-recursion presentations.

#include <unordered_map>
#include <vector>

#include "hanoihedral/group_spec.hpp"
#include "hanoihedral/portrait.hpp"

namespace hh {

struct LevelDecomposition {
  Perm root;
  std::vector<GenWord> sections;  // one per letter of the alphabet
};

// cancel adjacent equal letters; valid because generators are involutions
GenWord free_reduce(const GroupSpec& spec, GenWord w);
GenWord word_inverse(const GroupSpec& spec, const GenWord& w);
GenWord word_concat(GenWord a, const GenWord& b);
GenWord word_conjugate(const GroupSpec& spec, const GenWord& by, const GenWord& w);
GenWord word_commutator(const GroupSpec& spec, const GenWord& a, const GenWord& b);

Portrait evaluate(const GroupSpec& spec, const GenWord& w, int depth);
Perm root_perm(const GroupSpec& spec, const GenWord& w);
LevelDecomposition first_level_decomposition(const GroupSpec& spec, const GenWord& w);

// Memoized word problem for one spec.  Decides triviality by free reduction,
// root inspection and recursion into first-level sections; the depth cap
// signals a non-contracting presentation via not_contracting_error.
class TrivialityOracle {
 public:
  explicit TrivialityOracle(const GroupSpec& spec, int depth_cap = 64);

  bool is_trivial(const GenWord& w);
  bool word_equal(const GenWord& a, const GenWord& b);

 private:
  struct WordHash {
    std::size_t operator()(const GenWord& w) const;
  };
  bool recurse(const GenWord& reduced, int depth_left);

  const GroupSpec& spec_;
  int depth_cap_;
  std::unordered_map<GenWord, bool, WordHash> memo_;
};

bool is_trivial(const GroupSpec& spec, const GenWord& w);
bool word_equal(const GroupSpec& spec, const GenWord& a, const GenWord& b);

// minimal set containing 1 and the generators, closed under taking sections
// of pairwise products; shortest first-seen representative per element
std::vector<GenWord> nucleus(const GroupSpec& spec, int iteration_cap = 20);

}  // namespace hh
