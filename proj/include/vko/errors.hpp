#pragma once

#include <stdexcept>
#include <string>

namespace vko {

// Malformed input: unsorted simplices, dimension mismatches, bad files.
// Distinct from a negative mathematical verdict, which is a regular result.
class input_error : public std::invalid_argument {
 public:
  explicit input_error(const std::string& what) : std::invalid_argument(what) {}
};

// A general-position map turned out not to be in general position for some
// pair (singular or boundary-touching affine system). Callers may retry with
// perturbed parameters; the map is never silently perturbed.
class degenerate_position : public std::runtime_error {
 public:
  explicit degenerate_position(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace vko
