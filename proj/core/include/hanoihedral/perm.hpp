#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hh {

// Permutation of {0, ..., d-1}.  Products follow the left-action convention
// used throughout the tree arithmetic: (f * g)(x) = f(g(x)), g acts first.
class Perm {
 public:
  Perm() = default;
  static Perm identity(int degree);
  static Perm from_images(std::vector<std::uint8_t> images);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[x]; }

  Perm operator*(const Perm& other) const;
  Perm inverse() const;
  bool is_identity() const;

  bool operator==(const Perm&) const = default;

  std::string str() const;  // one-line image list, "1 2 0"
  static Perm parse(int degree, std::string_view text);

 private:
  std::vector<std::uint8_t> images_;
};

}  // namespace hh
