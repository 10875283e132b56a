#include "swapchain/text_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "swapchain/errors.hpp"

namespace swapchain {

namespace {

std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char ch : text) {
    if (ch == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) lines.push_back(cur);
  return lines;
}

std::vector<int> parse_ints(const std::string& line) {
  std::istringstream in(line);
  std::vector<int> out;
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    int x = 0;
    try {
      x = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "not an integer: '" + tok + "'");
    }
    if (used != tok.size()) throw Error(ErrorCode::ParseError, "not an integer: '" + tok + "'");
    out.push_back(x);
  }
  return out;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

BipartiteDegreeSequence parse_degree_sequence(std::string_view text) {
  std::vector<std::string> lines = split_lines(text);
  while (!lines.empty() && lines.back().find_first_not_of(" \t") == std::string::npos) {
    lines.pop_back();
  }
  if (lines.size() != 2) {
    throw Error(ErrorCode::ParseError, "degree sequence needs exactly two lines");
  }
  return BipartiteDegreeSequence(parse_ints(lines[0]), parse_ints(lines[1]));
}

BipartiteGraph parse_graph(std::string_view text) {
  std::vector<std::string> lines;
  for (auto& line : split_lines(text)) {
    if (line.empty() || line[0] == '#') continue;
    lines.push_back(line);
  }
  if (lines.empty()) throw Error(ErrorCode::ParseError, "empty graph file");
  const std::vector<int> dims = parse_ints(lines[0]);
  if (dims.size() != 2 || dims[0] < 0 || dims[1] < 0) {
    throw Error(ErrorCode::ParseError, "graph header must be 'k l'");
  }
  const auto k = static_cast<std::size_t>(dims[0]);
  const auto l = static_cast<std::size_t>(dims[1]);
  if (lines.size() != k + 1) {
    throw Error(ErrorCode::ParseError, "expected " + std::to_string(k) + " matrix rows");
  }
  BipartiteGraph g(k, l);
  for (std::size_t i = 0; i < k; ++i) {
    const std::string& row = lines[i + 1];
    if (row.size() != l) {
      throw Error(ErrorCode::ParseError, "row " + std::to_string(i) + " has wrong length");
    }
    for (std::size_t j = 0; j < l; ++j) {
      if (row[j] != '0' && row[j] != '1') {
        throw Error(ErrorCode::ParseError, "matrix entries must be '0' or '1'");
      }
      if (row[j] == '1') g.set_edge(static_cast<int>(i), static_cast<int>(j), true);
    }
  }
  return g;
}

std::string format_degree_sequence(const BipartiteDegreeSequence& ds) {
  std::ostringstream out;
  auto put = [&](const std::vector<int>& xs) {
    for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? " " : "") << xs[i];
    out << '\n';
  };
  put(ds.a());
  put(ds.b());
  return out.str();
}

std::string format_graph(const BipartiteGraph& g) {
  std::string out = std::to_string(g.k()) + " " + std::to_string(g.l()) + "\n";
  const std::string key = g.key();
  for (std::size_t i = 0; i < g.k(); ++i) {
    out.append(key, i * g.l(), g.l());
    out.push_back('\n');
  }
  return out;
}

std::string format_swap(const Swap& s) {
  return std::to_string(s.u1) + " " + std::to_string(s.u2) + " " + std::to_string(s.v1) +
         " " + std::to_string(s.v2);
}

BipartiteDegreeSequence read_degree_sequence_file(const std::string& path) {
  return parse_degree_sequence(slurp(path));
}

BipartiteGraph read_graph_file(const std::string& path) {
  return parse_graph(slurp(path));
}

}  // namespace swapchain
