#pragma once

// Depth-truncated tree automorphisms: a permutation label on every vertex of
// depth < n, multiplied with the wreath law (fg)(u) = f(g[u]) g(u).

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hanoihedral/perm.hpp"
#include "hanoihedral/vertex.hpp"

namespace hh {

// Vertices are indexed breadth-first (length-then-lexicographic):
// index(root) = 0, index(v.child(x)) = d*index(v) + x + 1.
std::size_t tree_vertex_count(int d, int depth);  // #vertices of depth < depth

class Portrait {
 public:
  Portrait(int d, int depth);  // identity portrait
  static Portrait identity(int d, int depth) { return Portrait(d, depth); }

  int d() const { return d_; }
  int depth() const { return depth_; }
  std::size_t label_count() const { return labels_.size(); }

  std::size_t index_of(const Vertex& v) const;
  const Perm& label(std::size_t index) const { return labels_[index]; }
  const Perm& label(const Vertex& v) const;
  void set_label(std::size_t index, Perm p);
  void set_label(const Vertex& v, Perm p);

  bool is_identity() const;
  Vertex apply(const Vertex& v) const;
  Portrait operator*(const Portrait& other) const;
  Portrait inverse() const;
  Portrait section(const Vertex& v) const;

  // graft: identity except the subtree at letter x carries `inner`
  static Portrait delta(int x, const Portrait& inner);

  // images of all vertices of depth <= depth(), as BFS indices
  std::vector<std::uint32_t> action_table() const;

  bool operator==(const Portrait&) const = default;

  std::string to_text() const;
  static Portrait from_text(std::string_view text);

 private:
  int d_;
  int depth_;
  std::vector<Perm> labels_;  // BFS over vertices of depth < depth_
};

}  // namespace hh
