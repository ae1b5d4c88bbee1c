#include "hanoihedral/perm.hpp"

#include <sstream>
#include <stdexcept>

namespace hh {

Perm Perm::identity(int degree) {
  if (degree <= 0 || degree > 255)
    throw std::invalid_argument("Perm: degree out of range");
  std::vector<std::uint8_t> img(degree);
  for (int i = 0; i < degree; ++i) img[i] = static_cast<std::uint8_t>(i);
  Perm p;
  p.images_ = std::move(img);
  return p;
}

Perm Perm::from_images(std::vector<std::uint8_t> images) {
  if (images.empty() || images.size() > 255)
    throw std::invalid_argument("Perm: degree out of range");
  std::vector<bool> seen(images.size(), false);
  for (auto v : images) {
    if (v >= images.size() || seen[v])
      throw std::invalid_argument("Perm: images are not a bijection");
    seen[v] = true;
  }
  Perm p;
  p.images_ = std::move(images);
  return p;
}

Perm Perm::operator*(const Perm& other) const {
  if (degree() != other.degree())
    throw std::invalid_argument("Perm: degree mismatch");
  std::vector<std::uint8_t> img(images_.size());
  for (int x = 0; x < degree(); ++x)
    img[x] = images_[other.images_[x]];
  Perm p;
  p.images_ = std::move(img);
  return p;
}

Perm Perm::inverse() const {
  std::vector<std::uint8_t> img(images_.size());
  for (int x = 0; x < degree(); ++x) img[images_[x]] = static_cast<std::uint8_t>(x);
  Perm p;
  p.images_ = std::move(img);
  return p;
}

bool Perm::is_identity() const {
  for (int x = 0; x < degree(); ++x)
    if (images_[x] != x) return false;
  return true;
}

std::string Perm::str() const {
  std::string out;
  for (int x = 0; x < degree(); ++x) {
    if (x) out.push_back(' ');
    out += std::to_string(images_[x]);
  }
  return out;
}

Perm Perm::parse(int degree, std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::uint8_t> img;
  int v;
  while (in >> v) {
    if (v < 0 || v > 255) throw std::invalid_argument("Perm::parse: bad image");
    img.push_back(static_cast<std::uint8_t>(v));
  }
  if (static_cast<int>(img.size()) != degree)
    throw std::invalid_argument("Perm::parse: wrong length");
  return from_images(std::move(img));
}

}  // namespace hh
