#include "hanoihedral/vertex.hpp"

#include <stdexcept>

namespace hh {

Vertex Vertex::parse(int d, std::string_view text) {
  if (text == "e" || text.empty()) return Vertex{};
  std::vector<std::uint8_t> letters;
  letters.reserve(text.size());
  for (char c : text) {
    if (c < '0' || c > '9') throw std::invalid_argument("Vertex: bad digit");
    int x = c - '0';
    if (x >= d) throw std::invalid_argument("Vertex: letter out of alphabet");
    letters.push_back(static_cast<std::uint8_t>(x));
  }
  return Vertex{std::move(letters)};
}

Vertex Vertex::child(int x) const {
  auto letters = letters_;
  letters.push_back(static_cast<std::uint8_t>(x));
  return Vertex{std::move(letters)};
}

Vertex Vertex::prefix(std::size_t len) const {
  return Vertex{std::vector<std::uint8_t>(letters_.begin(), letters_.begin() + len)};
}

Vertex Vertex::suffix(std::size_t from) const {
  return Vertex{std::vector<std::uint8_t>(letters_.begin() + from, letters_.end())};
}

std::string Vertex::str() const {
  if (letters_.empty()) return "e";
  std::string out;
  for (auto x : letters_) out.push_back(static_cast<char>('0' + x));
  return out;
}

}  // namespace hh
