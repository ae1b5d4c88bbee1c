#include "hanoihedral/stabilizer_chain.hpp"

#include <sstream>
#include <stdexcept>

#include "hanoihedral/errors.hpp"
#include "hanoihedral/portrait.hpp"

namespace hh {

StabilizerChain StabilizerChain::build(const std::vector<ExtElement>& generators,
                                       int d, int depth) {
  StabilizerChain c;
  c.d_ = d;
  c.depth_ = depth;
  c.domain_ = tree_vertex_count(d, depth + 1);
  c.bottom_ = gf2::EchelonBasis(d * static_cast<int>(tree_vertex_count(d, depth)));
  c.levels_.resize(c.domain_ - 1);
  for (std::size_t l = 0; l < c.levels_.size(); ++l) {
    auto& lev = c.levels_[l];
    lev.base = l + 1;
    lev.orbit = {lev.base};
    lev.position.assign(c.domain_, -1);
    lev.position[lev.base] = 0;
    lev.transversal = {ExtElement::identity(d, depth)};
  }
  for (const auto& g : generators) {
    if (g.d() != d || g.depth() != depth)
      throw std::invalid_argument("StabilizerChain: generator shape mismatch");
    c.add_element(g);
  }
  c.close();
  c.order_ = 1;
  for (const auto& lev : c.levels_) c.order_ *= static_cast<unsigned>(lev.orbit.size());
  return c;
}

// Sift; on failure store the residual as a strong generator (or a bottom
// basis vector when its permutation part is trivial).  Returns true when the
// recognized group grew.
bool StabilizerChain::add_element(const ExtElement& g) {
  ExtElement r = g;
  for (std::size_t l = 0; l < levels_.size(); ++l) {
    if (r.perm_trivial()) break;
    auto& lev = levels_[l];
    std::size_t p = static_cast<std::size_t>(r.image(lev.base));
    if (p == lev.base) continue;
    if (lev.position[p] < 0) {
      strong_.push_back(std::move(r));
      strong_level_.push_back(l);
      return true;
    }
    r = lev.transversal[lev.position[p]].inverse() * r;
  }
  if (bottom_.insert(r.cocycle())) {
    bottom_elems_.push_back(std::move(r));
    return true;
  }
  return false;
}

void StabilizerChain::close() {
  std::size_t nlevels = levels_.size();
  // Deterministic closure: every (orbit point, active generator) pair of
  // every level is processed exactly once.  Applying the generator either
  // discovers a new orbit point (whose Schreier generator is the identity by
  // choice of transversal) or yields a Schreier generator to sift.  Generator
  // references are indices (non-negative = strong_, negative = ~bottom_elems_)
  // and all lists are append-only.  Bottom vectors participate so the bottom
  // space closes under conjugation.
  std::vector<std::vector<int>> active(nlevels);
  std::vector<std::vector<std::size_t>> checked(nlevels);
  for (std::size_t l = 0; l < nlevels; ++l) checked[l].assign(1, 0);
  std::size_t strong_seen = 0, bottom_seen = 0;
  auto publish = [&]() {
    for (; strong_seen < strong_.size(); ++strong_seen)
      for (std::size_t l = 0; l <= strong_level_[strong_seen]; ++l)
        active[l].push_back(static_cast<int>(strong_seen));
    for (; bottom_seen < bottom_elems_.size(); ++bottom_seen)
      for (std::size_t l = 0; l < nlevels; ++l)
        active[l].push_back(~static_cast<int>(bottom_seen));
  };
  auto deref = [&](int ref) -> const ExtElement& {
    return ref >= 0 ? strong_[ref] : bottom_elems_[~ref];
  };

  publish();
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t l = 0; l < nlevels; ++l) {
      auto& lev = levels_[l];
      bool dirty = true;
      while (dirty) {
        dirty = false;
        for (std::size_t pos = 0; pos < lev.orbit.size(); ++pos) {
          while (checked[l][pos] < active[l].size()) {
            const ExtElement& s = deref(active[l][checked[l][pos]++]);
            std::size_t q = static_cast<std::size_t>(s.image(lev.orbit[pos]));
            if (lev.position[q] < 0) {
              lev.position[q] = static_cast<int>(lev.orbit.size());
              lev.orbit.push_back(q);
              lev.transversal.push_back(s * lev.transversal[pos]);
              checked[l].push_back(0);
              continue;
            }
            ExtElement u =
                lev.transversal[lev.position[q]].inverse() * (s * lev.transversal[pos]);
            if (u.is_identity()) continue;
            if (add_element(u)) {
              publish();
              changed = true;
              dirty = true;
            }
          }
        }
        // a generator added while sweeping may leave earlier points with
        // unprocessed pairs; sweep again until none remain
        for (std::size_t pos = 0; pos < lev.orbit.size() && !dirty; ++pos)
          if (checked[l][pos] < active[l].size()) dirty = true;
      }
    }
  }
}

BigInt StabilizerChain::stabilizer_order(int k) const {
  if (k < 0 || k > depth_) throw std::invalid_argument("stabilizer_order: k out of range");
  std::size_t cut = tree_vertex_count(d_, k + 1) - 1;  // #bases of depth <= k
  BigInt out = 1;
  for (std::size_t l = cut; l < levels_.size(); ++l)
    out *= static_cast<unsigned>(levels_[l].orbit.size());
  return out;
}

std::vector<ExtElement> StabilizerChain::level_stabilizer_gens(int k) const {
  if (k < 1 || k > depth_)
    throw std::invalid_argument("level_stabilizer_gens: k out of range");
  std::size_t cut = tree_vertex_count(d_, k + 1) - 1;
  std::vector<ExtElement> out;
  for (std::size_t i = 0; i < strong_.size(); ++i)
    if (strong_level_[i] >= cut) out.push_back(strong_[i]);
  for (const auto& b : bottom_elems_) out.push_back(b);
  return out;
}

ExtElement StabilizerChain::sift(const ExtElement& g) const {
  ExtElement r = g;
  for (const auto& lev : levels_) {
    if (r.perm_trivial()) break;
    std::size_t p = static_cast<std::size_t>(r.image(lev.base));
    if (p == lev.base) continue;
    if (lev.position[p] < 0) return r;  // not in the permutation image
    r = lev.transversal[lev.position[p]].inverse() * r;
  }
  return r;
}

bool StabilizerChain::contains(const ExtElement& g) const {
  ExtElement r = sift(g);
  return r.perm_trivial() && bottom_.contains(r.cocycle());
}

bool StabilizerChain::verify() const {
  for (std::size_t l = 0; l < levels_.size(); ++l) {
    const auto& lev = levels_[l];
    std::vector<const ExtElement*> active;
    for (std::size_t i = 0; i < strong_.size(); ++i)
      if (strong_level_[i] >= l) active.push_back(&strong_[i]);
    for (const auto& b : bottom_elems_) active.push_back(&b);
    for (std::size_t pos = 0; pos < lev.orbit.size(); ++pos) {
      for (const auto* s : active) {
        std::size_t q = static_cast<std::size_t>(s->image(lev.orbit[pos]));
        if (lev.position[q] < 0) return false;  // orbit not closed
        ExtElement u =
            lev.transversal[lev.position[q]].inverse() * (*s * lev.transversal[pos]);
        if (!u.perm_trivial()) {
          if (!contains(u)) return false;
        } else if (!bottom_.contains(u.cocycle())) {
          return false;
        }
      }
    }
  }
  return true;
}

std::vector<ExtElement> StabilizerChain::permutation_image_elements(std::size_t limit) const {
  if (order_ > BigInt(static_cast<unsigned long long>(limit)))
    throw resource_error("permutation image too large to enumerate");
  std::vector<ExtElement> out{ExtElement::identity(d_, depth_)};
  for (auto it = levels_.rbegin(); it != levels_.rend(); ++it) {
    if (it->orbit.size() == 1) continue;
    std::vector<ExtElement> next;
    next.reserve(out.size() * it->orbit.size());
    for (const auto& t : it->transversal)
      for (const auto& e : out) next.push_back(t * e);
    out = std::move(next);
  }
  return out;
}

std::string StabilizerChain::summary() const {
  std::ostringstream os;
  os << "chain d " << d_ << " depth " << depth_ << " order " << order_.str() << "\n";
  for (const auto& lev : levels_)
    if (lev.orbit.size() > 1)
      os << "base " << lev.base << " orbit " << lev.orbit.size() << "\n";
  os << "bottom rank " << bottom_.rank() << "\n";
  return os.str();
}

}  // namespace hh
