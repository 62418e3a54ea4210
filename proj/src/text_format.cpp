#include "pmnet/text_format.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "pmnet/error.hpp"

namespace pmnet {
namespace {

struct Line {
  std::size_t number;
  std::string text;
};

// Next line that is neither blank nor a comment.
bool next_content_line(std::istream& in, std::size_t& line_no, Line& line) {
  std::string text;
  while (std::getline(in, text)) {
    ++line_no;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    const auto first = text.find_first_not_of(" \t");
    if (first == std::string::npos || text[first] == '#') continue;
    line = {line_no, text};
    return true;
  }
  return false;
}

std::vector<std::string> split_whitespace(const std::string& text) {
  std::istringstream stream(text);
  std::vector<std::string> out;
  for (std::string token; stream >> token;) out.push_back(token);
  return out;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string::size_type start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    out.push_back(text.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

[[noreturn]] void parse_error(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what);
}

template <typename T>
T parse_number(const std::string& token, std::size_t line, const char* what) {
  T value{};
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    parse_error(line, std::string("bad ") + what + " '" + token + "'");
  }
  return value;
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  return in;
}

}  // namespace

RawDistribution parse_distribution(std::istream& in) {
  std::size_t line_no = 0;
  Line line;
  if (!next_content_line(in, line_no, line)) {
    parse_error(line_no, "missing VARS header");
  }
  const std::vector<std::string> header = split_whitespace(line.text);
  if (header.empty() || header.front() != "VARS") {
    parse_error(line.number, "expected VARS header");
  }
  RawDistribution raw;
  for (std::size_t k = 1; k < header.size(); ++k) {
    const auto colon = header[k].rfind(':');
    if (colon == std::string::npos || colon == 0) {
      parse_error(line.number, "variable '" + header[k] +
                                   "' is not of the form name:cardinality");
    }
    raw.specs.push_back(
        {header[k].substr(0, colon),
         parse_number<std::size_t>(header[k].substr(colon + 1), line.number,
                                   "cardinality")});
  }

  while (next_content_line(in, line_no, line)) {
    const std::vector<std::string> tokens = split_whitespace(line.text);
    if (tokens.size() != raw.specs.size() + 1) {
      parse_error(line.number, "expected " + std::to_string(raw.specs.size()) +
                                   " states and a probability, got " +
                                   std::to_string(tokens.size()) + " fields");
    }
    RawCell cell;
    cell.line = line.number;
    for (std::size_t k = 0; k + 1 < tokens.size(); ++k) {
      cell.states.push_back(parse_number<State>(tokens[k], line.number, "state"));
    }
    cell.probability =
        parse_number<double>(tokens.back(), line.number, "probability");
    raw.cells.push_back(std::move(cell));
  }
  return raw;
}

JointDistribution read_distribution(std::istream& in) {
  return JointDistribution::from_raw(parse_distribution(in));
}

JointDistribution read_distribution_file(const std::string& path) {
  std::ifstream in = open_input(path);
  return read_distribution(in);
}

std::string format_probability(double p) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, p);
  return std::string(buf, ptr);
}

void write_distribution(std::ostream& out, const JointDistribution& dist) {
  out << "VARS";
  for (VarIndex v : dist.scope()) {
    out << ' ' << dist.specs()[v].name << ':' << dist.cardinality(v);
  }
  out << '\n';
  for (const Cell& cell : dist.cells()) {
    for (State s : dist.decode(cell.index)) out << s << ' ';
    out << format_probability(cell.probability) << '\n';
  }
}

ClusterTree parse_cluster_tree(std::istream& in,
                               std::span<const std::string> names) {
  std::size_t line_no = 0;
  Line line;
  if (!next_content_line(in, line_no, line)) {
    parse_error(line_no, "missing CLUSTERS line");
  }
  std::vector<std::string> tokens = split_whitespace(line.text);
  if (tokens.size() != 2 || tokens.front() != "CLUSTERS") {
    parse_error(line.number, "expected 'CLUSTERS c1;c2;...'");
  }
  std::vector<VarSet> clusters;
  for (const std::string& cluster_text : split(tokens[1], ';')) {
    std::vector<VarIndex> members;
    for (const std::string& name : split(cluster_text, ',')) {
      std::size_t index = 0;
      while (index < names.size() && names[index] != name) ++index;
      if (index == names.size()) {
        parse_error(line.number, "unknown variable '" + name + "'");
      }
      members.push_back(index);
    }
    clusters.emplace_back(std::move(members));
  }

  std::vector<ClusterTree::Edge> edges;
  if (next_content_line(in, line_no, line)) {
    tokens = split_whitespace(line.text);
    if (tokens.empty() || tokens.front() != "EDGES") {
      parse_error(line.number, "expected 'EDGES i-j ...'");
    }
    for (std::size_t k = 1; k < tokens.size(); ++k) {
      const std::vector<std::string> ends = split(tokens[k], '-');
      if (ends.size() != 2) {
        parse_error(line.number, "edge '" + tokens[k] + "' is not of the form i-j");
      }
      edges.emplace_back(
          parse_number<std::size_t>(ends[0], line.number, "cluster index"),
          parse_number<std::size_t>(ends[1], line.number, "cluster index"));
    }
    if (next_content_line(in, line_no, line)) {
      parse_error(line.number, "unexpected content after EDGES");
    }
  }
  return ClusterTree(std::move(clusters), std::move(edges));
}

ClusterTree read_cluster_tree_file(const std::string& path,
                                   std::span<const std::string> names) {
  std::ifstream in = open_input(path);
  return parse_cluster_tree(in, names);
}

void write_cluster_tree(std::ostream& out, const ClusterTree& tree,
                        std::span<const std::string> names) {
  out << "CLUSTERS ";
  for (std::size_t k = 0; k < tree.clusters().size(); ++k) {
    if (k) out << ';';
    const std::string members = to_string(tree.clusters()[k], names);
    out << members.substr(1, members.size() - 2);
  }
  out << "\nEDGES";
  for (const auto& [a, b] : tree.edges()) out << ' ' << a << '-' << b;
  out << '\n';
}

}  // namespace pmnet
