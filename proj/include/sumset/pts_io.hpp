#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "sumset/point_set.hpp"

namespace sumset {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct LoadedSet {
  PointSet set;
  std::size_t reduced = 0;     // lines whose coordinates were not canonical
  std::size_t duplicates = 0;  // lines merged into an earlier element
};

/// Parses the `.pts` text form: a `#group n1 ... nd` directive on the first
/// line, then one element per line. Other `#` lines and blank lines are
/// skipped. Throws ParseError with a line number.
LoadedSet read_pts(std::istream& in);
LoadedSet load_pts(const std::string& path);

void write_pts(std::ostream& out, const PointSet& set);
void save_pts(const std::string& path, const PointSet& set);

/// Parses a whitespace-separated modulus list such as "0 0" or "16 16".
GroupSpec parse_group(const std::string& text);

}  // namespace sumset
