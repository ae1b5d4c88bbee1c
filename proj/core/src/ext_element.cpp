#include "hanoihedral/ext_element.hpp"

#include <stdexcept>

#include "hanoihedral/branching.hpp"
#include "hanoihedral/portrait.hpp"
#include "hanoihedral/selfsim.hpp"

namespace hh {

ExtElement ExtElement::identity(int d, int depth) {
  ExtElement e;
  e.d_ = d;
  e.depth_ = depth;
  std::size_t dom = tree_vertex_count(d, depth + 1);
  e.perm_.resize(dom);
  for (std::size_t i = 0; i < dom; ++i) e.perm_[i] = static_cast<std::uint16_t>(i);
  e.cocycle_ = gf2::Vec2(d * static_cast<int>(tree_vertex_count(d, depth)));
  return e;
}

ExtElement ExtElement::from_word(const GroupSpec& spec, const GenWord& w, int depth) {
  if (depth < 1) throw std::invalid_argument("ExtElement: depth must be positive");
  ExtElement e = identity(spec.d(), depth);

  auto act = evaluate(spec, w, depth).action_table();
  for (std::size_t i = 0; i < e.perm_.size(); ++i)
    e.perm_[i] = static_cast<std::uint16_t>(act[i]);

  // section words level by level; block u = exp of the section at u
  int d = spec.d();
  std::vector<GenWord> frontier{w};
  std::size_t idx = 0;
  for (int level = 0; level < depth; ++level) {
    std::vector<GenWord> next;
    for (const auto& word : frontier) {
      auto ev = exp_vector(d, word);
      for (int j = 0; j < d; ++j)
        if (ev.get(j)) e.cocycle_.set(static_cast<int>(idx) * d + j, true);
      ++idx;
      if (level + 1 < depth) {
        auto dec = first_level_decomposition(spec, word);
        for (auto& s : dec.sections) next.push_back(std::move(s));
      }
    }
    frontier = std::move(next);
  }
  return e;
}

ExtElement ExtElement::cocycle_only(int d, int depth, gf2::Vec2 cocycle) {
  ExtElement e = identity(d, depth);
  if (cocycle.width() != e.cocycle_.width())
    throw std::invalid_argument("ExtElement: cocycle width mismatch");
  e.cocycle_ = std::move(cocycle);
  return e;
}

gf2::Vec2 ExtElement::block(std::size_t vertex_index) const {
  gf2::Vec2 out(d_);
  for (int j = 0; j < d_; ++j)
    if (cocycle_.get(static_cast<int>(vertex_index) * d_ + j)) out.set(j, true);
  return out;
}

bool ExtElement::perm_trivial() const {
  for (std::size_t i = 0; i < perm_.size(); ++i)
    if (perm_[i] != i) return false;
  return true;
}

bool ExtElement::is_identity() const { return perm_trivial() && cocycle_.zero(); }

ExtElement ExtElement::operator*(const ExtElement& other) const {
  if (d_ != other.d_ || depth_ != other.depth_)
    throw std::invalid_argument("ExtElement: shape mismatch");
  ExtElement out;
  out.d_ = d_;
  out.depth_ = depth_;
  out.perm_.resize(perm_.size());
  for (std::size_t i = 0; i < perm_.size(); ++i)
    out.perm_[i] = perm_[other.perm_[i]];
  // block u of the product is this->block(other[u]) + other.block(u)
  out.cocycle_ = other.cocycle_;
  std::size_t blocks = cocycle_.width() / d_;
  for (std::size_t u = 0; u < blocks; ++u) {
    std::size_t src = other.perm_[u];
    for (int j = 0; j < d_; ++j)
      if (cocycle_.get(static_cast<int>(src) * d_ + j))
        out.cocycle_.flip(static_cast<int>(u) * d_ + j);
  }
  return out;
}

ExtElement ExtElement::inverse() const {
  ExtElement out;
  out.d_ = d_;
  out.depth_ = depth_;
  out.perm_.resize(perm_.size());
  for (std::size_t i = 0; i < perm_.size(); ++i) out.perm_[perm_[i]] = static_cast<std::uint16_t>(i);
  out.cocycle_ = gf2::Vec2(cocycle_.width());
  std::size_t blocks = cocycle_.width() / d_;
  for (std::size_t u = 0; u < blocks; ++u) {
    std::size_t src = out.perm_[u];  // sigma^{-1}[u]
    for (int j = 0; j < d_; ++j)
      if (cocycle_.get(static_cast<int>(src) * d_ + j))
        out.cocycle_.set(static_cast<int>(u) * d_ + j, true);
  }
  return out;
}

}  // namespace hh
