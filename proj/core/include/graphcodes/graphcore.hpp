#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "graphcodes/errors.hpp"
#include "graphcodes/gf2m.hpp"
#include "graphcodes/gflinalg.hpp"

namespace graphcodes {

// Directed edge (v_from, v_to).  Ordering is lexicographic, which is also
// the order edge labels appear in edge vectors.
struct Edge {
  int from = 0;
  int to = 0;

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

// Unordered pair of nodes; self pairs allowed.  Normalized so lo <= hi.
struct NodePair {
  int lo = 0;
  int hi = 0;

  constexpr NodePair(int a, int b) : lo(a < b ? a : b), hi(a < b ? b : a) {}

  bool is_self() const { return lo == hi; }

  friend constexpr auto operator<=>(const NodePair&, const NodePair&) =
      default;
};

enum class Direction {
  down,  // from the larger endpoint to the smaller
  up,    // from the smaller endpoint to the larger
};

constexpr Edge orient_edge(NodePair p, Direction d) {
  return d == Direction::down ? Edge{p.hi, p.lo} : Edge{p.lo, p.hi};
}

using EdgeSet = std::vector<Edge>;
using PairSet = std::vector<NodePair>;

// Complete directed graph on n nodes with self loops; every ordered pair
// (i, j) carries a label from the field.
class DirectedGraph {
 public:
  DirectedGraph(const Field& field, int n);

  const Field& field() const { return field_; }
  int node_count() const { return n_; }

  FieldElement label(int from, int to) const;
  FieldElement label(Edge e) const { return label(e.from, e.to); }
  void set_label(int from, int to, FieldElement v);
  void set_label(Edge e, FieldElement v) { set_label(e.from, e.to, v); }

  friend bool operator==(const DirectedGraph&, const DirectedGraph&) = default;

 private:
  Field field_;
  int n_;
  std::vector<FieldElement> labels_;  // row-major n x n
};

// Complete undirected graph on n nodes with self loops: one label per
// unordered pair, n(n+1)/2 of them.
class UndirectedGraph {
 public:
  UndirectedGraph(const Field& field, int n);

  const Field& field() const { return field_; }
  int node_count() const { return n_; }
  int pair_count() const { return n_ * (n_ + 1) / 2; }

  FieldElement label(NodePair p) const;
  FieldElement label(int a, int b) const { return label(NodePair(a, b)); }
  void set_label(NodePair p, FieldElement v);
  void set_label(int a, int b, FieldElement v) { set_label(NodePair(a, b), v); }

  friend bool operator==(const UndirectedGraph&, const UndirectedGraph&) =
      default;

 private:
  Field field_;
  int n_;
  std::vector<FieldElement> labels_;  // lower triangle, row-major
};

// Directed graph whose cells are each Known (a label) or Unknown.  Node
// erasure produces the canonical patterns, but arbitrary Unknown sets are
// representable so generic solvers can handle non-node-shaped erasures.
class ErasedGraph {
 public:
  ErasedGraph(const Field& field, int n);          // all cells Unknown
  explicit ErasedGraph(const DirectedGraph& g);    // all cells Known

  const Field& field() const { return field_; }
  int node_count() const { return n_; }

  std::optional<FieldElement> cell(int from, int to) const;
  std::optional<FieldElement> cell(Edge e) const { return cell(e.from, e.to); }
  void set_cell(int from, int to, FieldElement v);
  void set_cell(Edge e, FieldElement v) { set_cell(e.from, e.to, v); }
  void clear_cell(int from, int to);

  std::size_t unknown_count() const;
  bool complete() const { return unknown_count() == 0; }
  // The fully recovered graph; throws std::logic_error on Unknown cells.
  DirectedGraph reveal() const;

  friend bool operator==(const ErasedGraph&, const ErasedGraph&) = default;

 private:
  Field field_;
  int n_;
  std::vector<std::optional<FieldElement>> cells_;
};

class ErasedUndirectedGraph {
 public:
  ErasedUndirectedGraph(const Field& field, int n);
  explicit ErasedUndirectedGraph(const UndirectedGraph& g);

  const Field& field() const { return field_; }
  int node_count() const { return n_; }

  std::optional<FieldElement> cell(NodePair p) const;
  std::optional<FieldElement> cell(int a, int b) const {
    return cell(NodePair(a, b));
  }
  void set_cell(NodePair p, FieldElement v);
  void set_cell(int a, int b, FieldElement v) { set_cell(NodePair(a, b), v); }
  void clear_cell(NodePair p);

  std::size_t unknown_count() const;
  bool complete() const { return unknown_count() == 0; }
  UndirectedGraph reveal() const;

  friend bool operator==(const ErasedUndirectedGraph&,
                         const ErasedUndirectedGraph&) = default;

 private:
  Field field_;
  int n_;
  std::vector<std::optional<FieldElement>> cells_;
};

// Row i of the adjacency matrix: {(i, j) : j in [n]}, lexicographic.
EdgeSet out_neighborhood(int n, int i);
// Column i: {(j, i) : j in [n]}.
EdgeSet in_neighborhood(int n, int i);
// Union of the two; 2n-1 edges, overlapping at the self loop.
EdgeSet neighborhood(int n, int i);
// Undirected counterpart: all pairs touching node i, self pair included.
PairSet pair_neighborhood(int n, int i);

// Marks every cell incident to a failed node Unknown.
ErasedGraph erase_nodes(const DirectedGraph& g, std::span<const int> failed);
ErasedUndirectedGraph erase_nodes(const UndirectedGraph& g,
                                  std::span<const int> failed);

// Labels of the edges in u, sorted lexicographically by (from, to).
// Throws std::invalid_argument on duplicate edges.
std::vector<FieldElement> edge_vector(const DirectedGraph& g, EdgeSet u);

// Bit-exact text form.  Directed header: `GRAPH n=<n> alphabet=<tag>` with
// tag `gf2` (degree 1) or `gf2m:<m>` (degree m >= 2), then n lines of n
// space-separated tokens, each a minimal lowercase-hex element or `?`, LF
// endings throughout.  Undirected header: `UGRAPH ...`, line i carrying the
// i+1 lower-triangle tokens <v_i, v_0> .. <v_i, v_i>.
std::string serialize(const ErasedGraph& g);
std::string serialize(const DirectedGraph& g);
std::string serialize(const ErasedUndirectedGraph& g);
std::string serialize(const UndirectedGraph& g);

using ParsedGraph = std::variant<ErasedGraph, ErasedUndirectedGraph>;
// Parses either graph flavor; throws ParseError on malformed text.
ParsedGraph parse_graph(std::string_view text);

// Matrix files reuse the token format: header `MATRIX rows=<r> cols=<c>
// alphabet=<tag>`, then r lines of c tokens (no `?`).
std::string serialize_matrix(const Matrix& m);
Matrix parse_matrix(std::string_view text);

}  // namespace graphcodes
