#include "psl2mu/group_io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "psl2mu/errors.hpp"

namespace psl2mu {

namespace {

std::string strip(const std::string& line) {
  std::string out = line.substr(0, line.find('#'));
  const auto first = out.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = out.find_last_not_of(" \t\r");
  return out.substr(first, last - first + 1);
}

std::uint64_t parse_count(const std::string& token, std::size_t line_no) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError(line_no, "expected a non-negative integer, got '" + token + "'");
  }
  return value;
}

Permutation parse_generator(const std::string& text, std::size_t degree, std::size_t line_no) {
  std::vector<std::vector<Point>> cycles;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (text[i] != '(') throw ParseError(line_no, std::string("expected '(', got '") + text[i] + "'");
    const auto close = text.find(')', i);
    if (close == std::string::npos) throw ParseError(line_no, "unterminated cycle");
    std::istringstream body(text.substr(i + 1, close - i - 1));
    std::vector<Point> cycle;
    std::string token;
    while (body >> token) {
      const auto point = parse_count(token, line_no);
      if (point >= degree) {
        throw ParseError(line_no, "point " + token + " out of range for degree " + std::to_string(degree));
      }
      cycle.push_back(static_cast<Point>(point));
    }
    if (cycle.size() > 1) cycles.push_back(std::move(cycle));
    i = close + 1;
  }
  try {
    return Permutation::from_cycles(degree, cycles);
  } catch (const InvalidPermutation& e) {
    throw ParseError(line_no, e.what());
  }
}

}  // namespace

PermGroup read_group(std::istream& in, std::uint64_t cap) {
  std::size_t degree = 0;
  std::vector<Permutation> generators;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = strip(raw);
    if (line.empty()) continue;
    if (degree == 0) {
      std::istringstream header(line);
      std::string keyword, value, extra;
      header >> keyword >> value;
      if (keyword != "degree" || value.empty() || (header >> extra)) {
        throw ParseError(line_no, "expected 'degree n'");
      }
      degree = parse_count(value, line_no);
      if (degree == 0) throw ParseError(line_no, "degree must be positive");
      continue;
    }
    generators.push_back(parse_generator(line, degree, line_no));
  }
  if (degree == 0) throw ParseError(line_no, "missing 'degree n' line");
  if (generators.empty()) return PermGroup::trivial(degree, cap);
  return PermGroup(degree, std::move(generators), cap);
}

PermGroup parse_group(const std::string& text, std::uint64_t cap) {
  std::istringstream in(text);
  return read_group(in, cap);
}

PermGroup load_group(const std::string& path, std::uint64_t cap) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path);
  return read_group(in, cap);
}

std::string write_group(const PermGroup& g) {
  std::string out = "degree " + std::to_string(g.degree()) + "\n";
  for (const auto& x : g.generators()) out += x.to_string() + "\n";
  return out;
}

}  // namespace psl2mu
