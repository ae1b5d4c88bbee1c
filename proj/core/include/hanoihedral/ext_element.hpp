#pragma once

// Decorated truncated-tree permutations: the action on all vertices of depth
// <= n together with one GF(2) d-block per vertex of depth < n holding the
// occurrence parities of the section there.  These realize the quotient of
// the group by the kernel of the depth-n symbolic truncation exactly.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hanoihedral/gf2.hpp"
#include "hanoihedral/group_spec.hpp"

namespace hh {

class ExtElement {
 public:
  ExtElement() = default;
  static ExtElement identity(int d, int depth);
  static ExtElement from_word(const GroupSpec& spec, const GenWord& w, int depth);
  static ExtElement cocycle_only(int d, int depth, gf2::Vec2 cocycle);

  int d() const { return d_; }
  int depth() const { return depth_; }
  // vertices of depth <= depth(), BFS indexed; image(0) == 0 always
  std::size_t domain() const { return perm_.size(); }
  int image(std::size_t vertex_index) const { return perm_[vertex_index]; }
  const gf2::Vec2& cocycle() const { return cocycle_; }
  // block u holds the exp vector of the section at vertex u (depth < n)
  gf2::Vec2 block(std::size_t vertex_index) const;

  bool perm_trivial() const;
  bool is_identity() const;
  ExtElement operator*(const ExtElement& other) const;  // other acts first
  ExtElement inverse() const;
  bool operator==(const ExtElement&) const = default;

 private:
  int d_ = 0;
  int depth_ = 0;
  std::vector<std::uint16_t> perm_;
  gf2::Vec2 cocycle_;
};

}  // namespace hh
