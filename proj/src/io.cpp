#include "eqdecomp/io.hpp"

#include "eqdecomp/errors.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

namespace eqdecomp {

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

std::optional<long long> to_int(std::string_view s) {
  long long v = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (!s.empty() && s.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || first == last) return std::nullopt;
  return v;
}

template <typename Visit>
void for_each_line(std::string_view text, Visit visit) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = text.find('\n', pos);
    const std::string_view line = text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
    ++line_no;
    const auto tokens = tokenize(line);
    if (!tokens.empty() && tokens.front().text.front() != '#') visit(line_no, tokens);
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
}

}  // namespace

SignedDigraph parse_graph_file(std::string_view text) {
  std::optional<long long> n;
  bool undirected = false;
  std::vector<Edge> edges;
  for_each_line(text, [&](std::size_t line, const std::vector<Token>& tokens) {
    if (!n) {
      if (tokens[0].text != "graph") throw ParseError(line, tokens[0].column, "expected 'graph <n> <directed|undirected>'");
      if (tokens.size() != 3) throw ParseError(line, tokens[0].column, "header needs exactly two fields after 'graph'");
      n = to_int(tokens[1].text);
      if (!n || *n < 0) throw ParseError(line, tokens[1].column, "vertex count must be a nonnegative integer");
      if (tokens[2].text == "undirected")
        undirected = true;
      else if (tokens[2].text != "directed")
        throw ParseError(line, tokens[2].column, "expected 'directed' or 'undirected'");
      return;
    }
    if (tokens.size() < 2 || tokens.size() > 3)
      throw ParseError(line, tokens[0].column, "edge line needs '<u> <v> [multiplicity]'");
    long long ends[2];
    for (int k = 0; k < 2; ++k) {
      auto v = to_int(tokens[k].text);
      if (!v) throw ParseError(line, tokens[k].column, "vertex label must be an integer");
      if (*v < 1 || *v > *n)
        throw ParseError(line, tokens[k].column, "vertex " + std::string(tokens[k].text) + " is outside 1.." +
                                                     std::to_string(*n));
      ends[k] = *v;
    }
    Integer multiplicity(1);
    if (tokens.size() == 3) {
      auto m = to_int(tokens[2].text);
      if (!m) throw ParseError(line, tokens[2].column, "multiplicity must be an integer");
      if (*m == 0) throw ParseError(line, tokens[2].column, "multiplicity must be nonzero");
      multiplicity = *m;
    }
    edges.push_back({{static_cast<int>(ends[0])}, {static_cast<int>(ends[1])}, multiplicity});
  });
  if (!n) throw ParseError(1, 1, "missing 'graph <n> <directed|undirected>' header");
  return build_graph(static_cast<int>(*n), edges, undirected);
}

std::string print_graph(const SignedDigraph& x) {
  const bool undirected = is_undirected(x);
  std::ostringstream os;
  os << "graph " << x.size() << (undirected ? " undirected" : " directed") << "\n";
  for (Index i = 0; i < x.size(); ++i)
    for (Index j = undirected ? i : 0; j < x.size(); ++j) {
      const Integer& a = x.adjacency()(i, j);
      if (a == 0) continue;
      os << x.labels()[i].label << " " << x.labels()[j].label;
      if (a != 1) os << " " << a;
      os << "\n";
    }
  return os.str();
}

Partition parse_partition_file(std::string_view text, Index n) {
  std::vector<std::vector<Index>> cells;
  std::vector<std::optional<Index>> reps;
  for_each_line(text, [&](std::size_t line, const std::vector<Token>& tokens) {
    std::vector<Index> cell;
    std::optional<Index> rep;
    for (std::size_t k = 0; k < tokens.size(); ++k) {
      if (tokens[k].text == "rep") {
        if (rep) throw ParseError(line, tokens[k].column, "more than one 'rep' on a line");
        if (k + 2 != tokens.size()) throw ParseError(line, tokens[k].column, "'rep' must be followed by exactly one label");
        auto v = to_int(tokens[k + 1].text);
        if (!v) throw ParseError(line, tokens[k + 1].column, "representative must be an integer label");
        rep = static_cast<Index>(*v - 1);
        if (std::find(cell.begin(), cell.end(), *rep) == cell.end())
          throw ParseError(line, tokens[k + 1].column, "representative " + std::to_string(*v) + " is not in this cell");
        break;
      }
      auto v = to_int(tokens[k].text);
      if (!v) throw ParseError(line, tokens[k].column, "vertex label must be an integer");
      if (*v < 1 || *v > n)
        throw ParseError(line, tokens[k].column, "vertex " + std::to_string(*v) + " is outside 1.." + std::to_string(n));
      cell.push_back(static_cast<Index>(*v - 1));
    }
    if (cell.empty()) throw ParseError(line, tokens[0].column, "cell has no vertices");
    cells.push_back(std::move(cell));
    reps.push_back(rep);
  });

  std::map<Index, int> seen;
  for (const auto& c : cells)
    for (Index v : c) ++seen[v];
  std::string overlap;
  std::string missing;
  for (Index v = 0; v < n; ++v) {
    auto it = seen.find(v);
    if (it == seen.end())
      missing += (missing.empty() ? "" : " ") + std::to_string(v + 1);
    else if (it->second > 1)
      overlap += (overlap.empty() ? "" : " ") + std::to_string(v + 1);
  }
  if (!overlap.empty()) throw ValidationError("labels in more than one cell: " + overlap);
  if (!missing.empty()) throw ValidationError("labels missing from the partition: " + missing);

  std::vector<Index> chosen;
  for (std::size_t i = 0; i < cells.size(); ++i)
    chosen.push_back(reps[i] ? *reps[i] : *std::min_element(cells[i].begin(), cells[i].end()));
  return Partition(std::move(cells), std::move(chosen), n);
}

std::string print_partition(const Partition& pi) {
  std::ostringstream os;
  for (std::size_t i = 0; i < pi.cell_count(); ++i) {
    for (Index v : pi.cells()[i]) os << v + 1 << " ";
    os << "rep " << pi.representatives()[i] + 1 << "\n";
  }
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace eqdecomp
