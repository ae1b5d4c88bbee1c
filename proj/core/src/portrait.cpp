#include "hanoihedral/portrait.hpp"

#include <sstream>
#include <stdexcept>

namespace hh {

std::size_t tree_vertex_count(int d, int depth) {
  std::size_t n = 0, level = 1;
  for (int k = 0; k < depth; ++k) {
    n += level;
    level *= static_cast<std::size_t>(d);
  }
  return n;
}

Portrait::Portrait(int d, int depth) : d_(d), depth_(depth) {
  if (d < 2) throw std::invalid_argument("Portrait: alphabet too small");
  if (depth < 1) throw std::invalid_argument("Portrait: depth must be positive");
  labels_.assign(tree_vertex_count(d, depth), Perm::identity(d));
}

std::size_t Portrait::index_of(const Vertex& v) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < v.depth(); ++i)
    idx = idx * d_ + v.letter(i) + 1;
  return idx;
}

const Perm& Portrait::label(const Vertex& v) const {
  if (v.depth() >= static_cast<std::size_t>(depth_))
    throw std::invalid_argument("Portrait: vertex too deep for label");
  return labels_[index_of(v)];
}

void Portrait::set_label(std::size_t index, Perm p) {
  if (p.degree() != d_) throw std::invalid_argument("Portrait: label degree mismatch");
  labels_[index] = std::move(p);
}

void Portrait::set_label(const Vertex& v, Perm p) {
  if (v.depth() >= static_cast<std::size_t>(depth_))
    throw std::invalid_argument("Portrait: vertex too deep for label");
  set_label(index_of(v), std::move(p));
}

bool Portrait::is_identity() const {
  for (const auto& p : labels_)
    if (!p.is_identity()) return false;
  return true;
}

Vertex Portrait::apply(const Vertex& v) const {
  if (v.depth() > static_cast<std::size_t>(depth_))
    throw std::invalid_argument("Portrait: vertex deeper than portrait");
  std::vector<std::uint8_t> out;
  out.reserve(v.depth());
  std::size_t cur = 0;  // index of the consumed input prefix
  for (std::size_t i = 0; i < v.depth(); ++i) {
    int x = v.letter(i);
    out.push_back(static_cast<std::uint8_t>(labels_[cur](x)));
    cur = cur * d_ + x + 1;
  }
  return Vertex{std::move(out)};
}

std::vector<std::uint32_t> Portrait::action_table() const {
  // images for all vertices of depth <= depth_; the image of ux is
  // image(u).child(label(u)(x))
  std::size_t total = tree_vertex_count(d_, depth_ + 1);
  std::vector<std::uint32_t> act(total);
  act[0] = 0;
  std::size_t labelled = labels_.size();
  for (std::size_t u = 0; u < labelled; ++u) {
    for (int x = 0; x < d_; ++x) {
      std::size_t child = u * d_ + x + 1;
      act[child] = static_cast<std::uint32_t>(
          static_cast<std::size_t>(act[u]) * d_ + labels_[u](x) + 1);
    }
  }
  return act;
}

Portrait Portrait::operator*(const Portrait& other) const {
  if (d_ != other.d_ || depth_ != other.depth_)
    throw std::invalid_argument("Portrait: depth/alphabet mismatch in product");
  auto act = other.action_table();
  Portrait out(d_, depth_);
  for (std::size_t u = 0; u < labels_.size(); ++u)
    out.labels_[u] = labels_[act[u]] * other.labels_[u];
  return out;
}

Portrait Portrait::inverse() const {
  auto act = action_table();
  std::vector<std::uint32_t> inv(labels_.size());
  for (std::size_t u = 0; u < labels_.size(); ++u) inv[act[u]] = static_cast<std::uint32_t>(u);
  Portrait out(d_, depth_);
  for (std::size_t u = 0; u < labels_.size(); ++u)
    out.labels_[u] = labels_[inv[u]].inverse();
  return out;
}

Portrait Portrait::section(const Vertex& v) const {
  if (v.depth() >= static_cast<std::size_t>(depth_))
    throw std::invalid_argument("Portrait: section vertex too deep");
  Portrait out(d_, depth_ - static_cast<int>(v.depth()));
  // copy labels of the subtree at v
  auto copy = [&](auto&& self, std::size_t src, std::size_t dst, int remaining) -> void {
    out.labels_[dst] = labels_[src];
    if (remaining <= 1) return;
    for (int x = 0; x < d_; ++x)
      self(self, src * d_ + x + 1, dst * d_ + x + 1, remaining - 1);
  };
  copy(copy, index_of(v), 0, out.depth_);
  return out;
}

Portrait Portrait::delta(int x, const Portrait& inner) {
  int d = inner.d();
  if (x < 0 || x >= d) throw std::invalid_argument("Portrait::delta: bad letter");
  Portrait out(d, inner.depth() + 1);
  auto copy = [&](auto&& self, std::size_t src, std::size_t dst, int remaining) -> void {
    out.labels_[dst] = inner.labels_[src];
    if (remaining <= 1) return;
    for (int y = 0; y < d; ++y)
      self(self, src * d + y + 1, dst * d + y + 1, remaining - 1);
  };
  copy(copy, 0, static_cast<std::size_t>(x) + 1, inner.depth());
  return out;
}

std::string Portrait::to_text() const {
  std::ostringstream out;
  out << "portrait d " << d_ << " depth " << depth_ << "\n";
  // enumerate vertices in BFS order alongside their digit strings
  std::vector<Vertex> frontier{Vertex{}};
  std::size_t idx = 0;
  for (int level = 0; level < depth_; ++level) {
    std::vector<Vertex> next;
    for (const auto& v : frontier) {
      out << v.str() << ": " << labels_[idx++].str() << "\n";
      for (int x = 0; x < d_; ++x) next.push_back(v.child(x));
    }
    frontier = std::move(next);
  }
  return out.str();
}

Portrait Portrait::from_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string tag, dtag, deptag;
  int d = 0, depth = 0;
  in >> tag >> dtag >> d >> deptag >> depth;
  if (tag != "portrait" || dtag != "d" || deptag != "depth")
    throw std::invalid_argument("Portrait::from_text: bad header");
  Portrait out(d, depth);
  std::string line;
  std::getline(in, line);  // rest of header line
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto colon = line.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("Portrait::from_text: bad line");
    Vertex v = Vertex::parse(d, line.substr(0, colon));
    Perm p = Perm::parse(d, line.substr(colon + 1));
    out.set_label(v, std::move(p));
  }
  return out;
}

}  // namespace hh
