#include "sumset/pts_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace sumset {
namespace {

bool is_blank(const std::string& s) { return s.find_first_not_of(" \t\r") == std::string::npos; }

std::vector<std::int64_t> parse_ints(const std::string& text, std::size_t line_no) {
  std::vector<std::int64_t> out;
  const char* p = text.data();
  const char* end = text.data() + text.size();
  while (p < end) {
    while (p < end && (*p == ' ' || *p == '\t' || *p == '\r')) ++p;
    if (p == end) break;
    std::int64_t v = 0;
    auto [next, ec] = std::from_chars(p, end, v);
    if (ec != std::errc() || (next < end && *next != ' ' && *next != '\t' && *next != '\r')) {
      throw ParseError("line " + std::to_string(line_no) + ": expected an integer");
    }
    out.push_back(v);
    p = next;
  }
  return out;
}

}  // namespace

GroupSpec parse_group(const std::string& text) {
  auto moduli = parse_ints(text, 0);
  try {
    return GroupSpec(std::move(moduli));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("bad group: ") + e.what());
  }
}

LoadedSet read_pts(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  if (!std::getline(in, line)) throw ParseError("empty input: missing #group directive");
  ++line_no;
  const std::string tag = "#group";
  if (line.rfind(tag, 0) != 0) throw ParseError("line 1: expected '#group n1 ... nd'");
  GroupSpec group = [&] {
    auto moduli = parse_ints(line.substr(tag.size()), line_no);
    try {
      return GroupSpec(std::move(moduli));
    } catch (const std::invalid_argument& e) {
      throw ParseError(std::string("line 1: ") + e.what());
    }
  }();

  std::vector<std::int64_t> flat;
  std::size_t reduced = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_blank(line) || line[line.find_first_not_of(" \t")] == '#') continue;
    auto coords = parse_ints(line, line_no);
    if (coords.size() != group.dim()) {
      throw ParseError("line " + std::to_string(line_no) + ": expected " + std::to_string(group.dim()) +
                       " coordinates, got " + std::to_string(coords.size()));
    }
    if (!group.is_canonical(coords)) {
      ++reduced;
      group.canonicalize(coords);
    }
    flat.insert(flat.end(), coords.begin(), coords.end());
  }
  std::size_t dups = sort_unique_flat(flat, group.dim());
  return LoadedSet{PointSet::from_sorted_flat(group, std::move(flat)), reduced, dups};
}

LoadedSet load_pts(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return read_pts(in);
}

void write_pts(std::ostream& out, const PointSet& set) {
  out << set.group().directive() << '\n';
  for (std::size_t i = 0; i < set.size(); ++i) {
    auto c = set.at(i);
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k) out << ' ';
      out << c[k];
    }
    out << '\n';
  }
}

void save_pts(const std::string& path, const PointSet& set) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  write_pts(out, set);
}

}  // namespace sumset
