#pragma once

#include <stdexcept>
#include <string>

namespace hh {

// thrown when the word-problem recursion exceeds its depth cap, which only
// happens for presentations that are not contracting
class not_contracting_error : public std::runtime_error {
 public:
  explicit not_contracting_error(const std::string& what)
      : std::runtime_error(what) {}
};

// thrown when a requested computation exceeds the desk-scale resource policy
class resource_error : public std::runtime_error {
 public:
  explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hh
