#include "graphcodes/graphcore.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace graphcodes {
namespace {

// Parser allocation guard; far beyond any size the codes here target.
constexpr int kMaxNodes = 1024;

void check_node(int n, int i) {
  if (i < 0 || i >= n) throw std::out_of_range("node index out of range");
}

std::size_t tri_index(NodePair p) {
  return static_cast<std::size_t>(p.hi) * (p.hi + 1) / 2 + p.lo;
}

std::string alphabet_tag(const Field& f) {
  if (f.degree() == 1) return "gf2";
  return "gf2m:" + std::to_string(f.degree());
}

// Strict nonnegative decimal: digits only, no leading zeros except "0".
int parse_count(std::string_view s, const char* what) {
  int value = 0;
  const char* const end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (ec != std::errc() || ptr != end || s.empty() ||
      (s.size() > 1 && s.front() == '0')) {
    throw ParseError(std::string("malformed ") + what);
  }
  return value;
}

Field parse_alphabet(std::string_view tag) {
  if (tag == "gf2") return Field(1);
  constexpr std::string_view prefix = "gf2m:";
  if (tag.substr(0, prefix.size()) == prefix) {
    const int m = parse_count(tag.substr(prefix.size()), "alphabet degree");
    if (m >= 2 && m <= 32) return Field(static_cast<unsigned>(m));
  }
  throw ParseError("unknown alphabet tag");
}

std::string_view expect_kv(std::string_view token, std::string_view key) {
  if (token.substr(0, key.size()) != key) {
    throw ParseError("expected `" + std::string(key) + "` in header");
  }
  return token.substr(key.size());
}

// Splits on single spaces; empty tokens (leading, trailing, doubled
// separators) are malformed.
std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t space = line.find(' ', start);
    const std::string_view tok = line.substr(start, space - start);
    if (tok.empty()) throw ParseError("malformed token spacing");
    out.push_back(tok);
    if (space == std::string_view::npos) return out;
    start = space + 1;
  }
}

// Every line must end with LF, including the last one.
std::vector<std::string_view> split_lines(std::string_view text) {
  if (text.empty() || text.back() != '\n') {
    throw ParseError("file must end with a newline");
  }
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    const std::size_t nl = text.find('\n', start);
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  return lines;
}

struct Header {
  std::string_view kind;
  std::vector<std::pair<std::string_view, std::string_view>> fields;
};

FieldElement parse_cell_token(const Field& f, std::string_view tok) {
  try {
    return parse_hex(f, tok);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::string cell_token(std::optional<FieldElement> cell) {
  return cell ? to_hex(*cell) : "?";
}

}  // namespace

DirectedGraph::DirectedGraph(const Field& field, int n)
    : field_(field), n_(n) {
  if (n < 1) throw std::invalid_argument("graph needs at least one node");
  labels_.assign(static_cast<std::size_t>(n) * n, field.zero());
}

FieldElement DirectedGraph::label(int from, int to) const {
  check_node(n_, from);
  check_node(n_, to);
  return labels_[static_cast<std::size_t>(from) * n_ + to];
}

void DirectedGraph::set_label(int from, int to, FieldElement v) {
  check_node(n_, from);
  check_node(n_, to);
  if (!field_.contains(v)) throw std::invalid_argument("label not in field");
  labels_[static_cast<std::size_t>(from) * n_ + to] = v;
}

UndirectedGraph::UndirectedGraph(const Field& field, int n)
    : field_(field), n_(n) {
  if (n < 1) throw std::invalid_argument("graph needs at least one node");
  labels_.assign(static_cast<std::size_t>(n) * (n + 1) / 2, field.zero());
}

FieldElement UndirectedGraph::label(NodePair p) const {
  check_node(n_, p.lo);
  check_node(n_, p.hi);
  return labels_[tri_index(p)];
}

void UndirectedGraph::set_label(NodePair p, FieldElement v) {
  check_node(n_, p.lo);
  check_node(n_, p.hi);
  if (!field_.contains(v)) throw std::invalid_argument("label not in field");
  labels_[tri_index(p)] = v;
}

ErasedGraph::ErasedGraph(const Field& field, int n) : field_(field), n_(n) {
  if (n < 1) throw std::invalid_argument("graph needs at least one node");
  cells_.assign(static_cast<std::size_t>(n) * n, std::nullopt);
}

ErasedGraph::ErasedGraph(const DirectedGraph& g)
    : field_(g.field()), n_(g.node_count()) {
  cells_.reserve(static_cast<std::size_t>(n_) * n_);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) cells_.push_back(g.label(i, j));
  }
}

std::optional<FieldElement> ErasedGraph::cell(int from, int to) const {
  check_node(n_, from);
  check_node(n_, to);
  return cells_[static_cast<std::size_t>(from) * n_ + to];
}

void ErasedGraph::set_cell(int from, int to, FieldElement v) {
  check_node(n_, from);
  check_node(n_, to);
  if (!field_.contains(v)) throw std::invalid_argument("label not in field");
  cells_[static_cast<std::size_t>(from) * n_ + to] = v;
}

void ErasedGraph::clear_cell(int from, int to) {
  check_node(n_, from);
  check_node(n_, to);
  cells_[static_cast<std::size_t>(from) * n_ + to].reset();
}

std::size_t ErasedGraph::unknown_count() const {
  return static_cast<std::size_t>(
      std::count(cells_.begin(), cells_.end(), std::nullopt));
}

DirectedGraph ErasedGraph::reveal() const {
  DirectedGraph g(field_, n_);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      const auto& c = cells_[static_cast<std::size_t>(i) * n_ + j];
      if (!c) throw std::logic_error("reveal: graph still has unknown cells");
      g.set_label(i, j, *c);
    }
  }
  return g;
}

ErasedUndirectedGraph::ErasedUndirectedGraph(const Field& field, int n)
    : field_(field), n_(n) {
  if (n < 1) throw std::invalid_argument("graph needs at least one node");
  cells_.assign(static_cast<std::size_t>(n) * (n + 1) / 2, std::nullopt);
}

ErasedUndirectedGraph::ErasedUndirectedGraph(const UndirectedGraph& g)
    : field_(g.field()), n_(g.node_count()) {
  cells_.reserve(static_cast<std::size_t>(n_) * (n_ + 1) / 2);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j <= i; ++j) cells_.push_back(g.label(j, i));
  }
}

std::optional<FieldElement> ErasedUndirectedGraph::cell(NodePair p) const {
  check_node(n_, p.lo);
  check_node(n_, p.hi);
  return cells_[tri_index(p)];
}

void ErasedUndirectedGraph::set_cell(NodePair p, FieldElement v) {
  check_node(n_, p.lo);
  check_node(n_, p.hi);
  if (!field_.contains(v)) throw std::invalid_argument("label not in field");
  cells_[tri_index(p)] = v;
}

void ErasedUndirectedGraph::clear_cell(NodePair p) {
  check_node(n_, p.lo);
  check_node(n_, p.hi);
  cells_[tri_index(p)].reset();
}

std::size_t ErasedUndirectedGraph::unknown_count() const {
  return static_cast<std::size_t>(
      std::count(cells_.begin(), cells_.end(), std::nullopt));
}

UndirectedGraph ErasedUndirectedGraph::reveal() const {
  UndirectedGraph g(field_, n_);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j <= i; ++j) {
      const auto& c = cells_[tri_index(NodePair(j, i))];
      if (!c) throw std::logic_error("reveal: graph still has unknown cells");
      g.set_label(j, i, *c);
    }
  }
  return g;
}

EdgeSet out_neighborhood(int n, int i) {
  check_node(n, i);
  EdgeSet out;
  out.reserve(n);
  for (int j = 0; j < n; ++j) out.push_back({i, j});
  return out;
}

EdgeSet in_neighborhood(int n, int i) {
  check_node(n, i);
  EdgeSet in;
  in.reserve(n);
  for (int j = 0; j < n; ++j) in.push_back({j, i});
  return in;
}

EdgeSet neighborhood(int n, int i) {
  check_node(n, i);
  EdgeSet all;
  all.reserve(2 * n - 1);
  for (int j = 0; j < i; ++j) all.push_back({j, i});
  for (int j = 0; j < n; ++j) all.push_back({i, j});
  for (int j = i + 1; j < n; ++j) all.push_back({j, i});
  std::sort(all.begin(), all.end());
  return all;
}

PairSet pair_neighborhood(int n, int i) {
  check_node(n, i);
  PairSet out;
  out.reserve(n);
  for (int j = 0; j < n; ++j) out.push_back(NodePair(i, j));
  std::sort(out.begin(), out.end());
  return out;
}

ErasedGraph erase_nodes(const DirectedGraph& g, std::span<const int> failed) {
  ErasedGraph e(g);
  for (int t : failed) {
    check_node(g.node_count(), t);
    for (int j = 0; j < g.node_count(); ++j) {
      e.clear_cell(t, j);
      e.clear_cell(j, t);
    }
  }
  return e;
}

ErasedUndirectedGraph erase_nodes(const UndirectedGraph& g,
                                  std::span<const int> failed) {
  ErasedUndirectedGraph e(g);
  for (int t : failed) {
    check_node(g.node_count(), t);
    for (int j = 0; j < g.node_count(); ++j) e.clear_cell(NodePair(t, j));
  }
  return e;
}

std::vector<FieldElement> edge_vector(const DirectedGraph& g, EdgeSet u) {
  std::sort(u.begin(), u.end());
  if (std::adjacent_find(u.begin(), u.end()) != u.end()) {
    throw std::invalid_argument("edge_vector: duplicate edge");
  }
  std::vector<FieldElement> out;
  out.reserve(u.size());
  for (Edge e : u) out.push_back(g.label(e));
  return out;
}

std::string serialize(const ErasedGraph& g) {
  const int n = g.node_count();
  std::string out = "GRAPH n=" + std::to_string(n) +
                    " alphabet=" + alphabet_tag(g.field()) + "\n";
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      out += cell_token(g.cell(i, j));
      out += j + 1 == n ? '\n' : ' ';
    }
  }
  return out;
}

std::string serialize(const DirectedGraph& g) {
  return serialize(ErasedGraph(g));
}

std::string serialize(const ErasedUndirectedGraph& g) {
  const int n = g.node_count();
  std::string out = "UGRAPH n=" + std::to_string(n) +
                    " alphabet=" + alphabet_tag(g.field()) + "\n";
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= i; ++j) {
      out += cell_token(g.cell(j, i));
      out += j == i ? '\n' : ' ';
    }
  }
  return out;
}

std::string serialize(const UndirectedGraph& g) {
  return serialize(ErasedUndirectedGraph(g));
}

ParsedGraph parse_graph(std::string_view text) {
  const std::vector<std::string_view> lines = split_lines(text);
  const std::vector<std::string_view> header = split_tokens(lines[0]);
  if (header.size() != 3 ||
      (header[0] != "GRAPH" && header[0] != "UGRAPH")) {
    throw ParseError("bad graph header");
  }
  const bool directed = header[0] == "GRAPH";
  const int n = parse_count(expect_kv(header[1], "n="), "node count");
  if (n < 1 || n > kMaxNodes) throw ParseError("node count out of range");
  const Field field = parse_alphabet(expect_kv(header[2], "alphabet="));
  if (lines.size() != static_cast<std::size_t>(n) + 1) {
    throw ParseError("wrong number of graph rows");
  }

  if (directed) {
    ErasedGraph g(field, n);
    for (int i = 0; i < n; ++i) {
      const auto tokens = split_tokens(lines[i + 1]);
      if (tokens.size() != static_cast<std::size_t>(n)) {
        throw ParseError("wrong token count in graph row");
      }
      for (int j = 0; j < n; ++j) {
        if (tokens[j] == "?") continue;
        g.set_cell(i, j, parse_cell_token(field, tokens[j]));
      }
    }
    return g;
  }

  ErasedUndirectedGraph g(field, n);
  for (int i = 0; i < n; ++i) {
    const auto tokens = split_tokens(lines[i + 1]);
    if (tokens.size() != static_cast<std::size_t>(i) + 1) {
      throw ParseError("wrong token count in graph row");
    }
    for (int j = 0; j <= i; ++j) {
      if (tokens[j] == "?") continue;
      g.set_cell(j, i, parse_cell_token(field, tokens[j]));
    }
  }
  return g;
}

std::string serialize_matrix(const Matrix& m) {
  std::string out = "MATRIX rows=" + std::to_string(m.rows()) +
                    " cols=" + std::to_string(m.cols()) +
                    " alphabet=" + alphabet_tag(m.field()) + "\n";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      out += to_hex(m.at(r, c));
      out += c + 1 == m.cols() ? '\n' : ' ';
    }
  }
  return out;
}

Matrix parse_matrix(std::string_view text) {
  const std::vector<std::string_view> lines = split_lines(text);
  const std::vector<std::string_view> header = split_tokens(lines[0]);
  if (header.size() != 4 || header[0] != "MATRIX") {
    throw ParseError("bad matrix header");
  }
  const int rows = parse_count(expect_kv(header[1], "rows="), "row count");
  const int cols = parse_count(expect_kv(header[2], "cols="), "column count");
  if (rows < 1 || cols < 1 || rows > kMaxNodes * kMaxNodes ||
      cols > kMaxNodes * kMaxNodes) {
    throw ParseError("matrix dimensions out of range");
  }
  const Field field = parse_alphabet(expect_kv(header[3], "alphabet="));
  if (lines.size() != static_cast<std::size_t>(rows) + 1) {
    throw ParseError("wrong number of matrix rows");
  }
  Matrix m(field, static_cast<std::size_t>(rows),
           static_cast<std::size_t>(cols));
  for (int r = 0; r < rows; ++r) {
    const auto tokens = split_tokens(lines[r + 1]);
    if (tokens.size() != static_cast<std::size_t>(cols)) {
      throw ParseError("wrong token count in matrix row");
    }
    for (int c = 0; c < cols; ++c) {
      m.set(r, c, parse_cell_token(field, tokens[c]));
    }
  }
  return m;
}

}  // namespace graphcodes
