#pragma once

#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "csg/int_vec.hpp"

namespace csg::cli {

/// Contents of a problem file.
///
/// JSON: {"generators": [[..],..], "label": "...", "ray_semigroups": [[..],..],
/// "extra_generators": [[..],..]}; only "generators" is required. Plain text:
/// one space-separated vector per line, '#' starts a comment.
struct Problem {
  std::vector<IntVec> generators;
  std::optional<std::string> label;
  std::optional<std::vector<std::vector<Int>>> ray_semigroups;
  std::optional<std::vector<IntVec>> extra_generators;
};

/// Throws std::invalid_argument on malformed input.
Problem parse_problem(std::string_view text);
Problem read_problem(const std::string& path);

/// FNV-1a (64 bit) of the generator list, as 16 hex digits.
std::string input_digest(std::span<const IntVec> gens);

/// Entry point of the `csg` executable. Returns the exit code: 0 success,
/// 1 domain error, 2 input error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace csg::cli
