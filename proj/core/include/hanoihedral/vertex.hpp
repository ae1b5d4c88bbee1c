#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hh {

// A vertex of the rooted d-ary tree: a finite word over {0, ..., d-1}.
// The empty word is the root.
class Vertex {
 public:
  Vertex() = default;
  explicit Vertex(std::vector<std::uint8_t> letters) : letters_(std::move(letters)) {}

  // digit string, "e" for the root; validates letters against d
  static Vertex parse(int d, std::string_view text);

  std::size_t depth() const { return letters_.size(); }
  int letter(std::size_t i) const { return letters_[i]; }
  const std::vector<std::uint8_t>& letters() const { return letters_; }

  Vertex child(int x) const;
  Vertex prefix(std::size_t len) const;
  Vertex suffix(std::size_t from) const;

  bool operator==(const Vertex&) const = default;

  std::string str() const;

 private:
  std::vector<std::uint8_t> letters_;
};

}  // namespace hh
