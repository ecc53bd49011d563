#include "cli.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "graphcodes/array_graph_code.hpp"
#include "graphcodes/double_code.hpp"
#include "graphcodes/errors.hpp"
#include "graphcodes/gflinalg.hpp"
#include "graphcodes/graphcore.hpp"
#include "graphcodes/mds_graph_code.hpp"
#include "graphcodes/rng.hpp"

namespace graphcodes::cli {
namespace {

struct Options {
  std::string command;
  std::string code;
  int n = 0;
  int rho = 2;
  std::string in_path;
  std::string out_path;
  std::vector<int> nodes;
  std::uint64_t seed = 1;
  int trials = 100;
  bool exhaustive = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file: " + path);
  out << text;
  if (!out) throw std::invalid_argument("write failed: " + path);
}

// Reports are key=value lines so they stay greppable and byte-stable.
class Report {
 public:
  template <class T>
  void add(const std::string& key, const T& value) {
    out_ << key << "=" << value << "\n";
  }
  void add_ratio(const std::string& key, std::size_t got, std::size_t total) {
    out_ << key << "=" << got << "/" << total << "\n";
  }
  void add_rate(const std::string& key, double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", value);
    out_ << key << "=" << buf << "\n";
  }
  void print() const { std::fputs(out_.str().c_str(), stdout); }

 private:
  std::ostringstream out_;
};

void check_n_matches(const Options& o, int n_from_file) {
  if (o.n != 0 && o.n != n_from_file) {
    throw std::invalid_argument("--n disagrees with the input file");
  }
}

ErasedGraph to_directed(ParsedGraph&& parsed) {
  if (auto* g = std::get_if<ErasedGraph>(&parsed)) return std::move(*g);
  throw std::invalid_argument("expected a directed graph file");
}

ErasedUndirectedGraph to_undirected(ParsedGraph&& parsed) {
  if (auto* g = std::get_if<ErasedUndirectedGraph>(&parsed)) {
    return std::move(*g);
  }
  throw std::invalid_argument("expected an undirected graph file");
}

DirectedGraph reveal_checked(const ErasedGraph& eg) {
  if (!eg.complete()) {
    throw std::invalid_argument("input graph has unknown cells");
  }
  return eg.reveal();
}

UndirectedGraph reveal_checked(const ErasedUndirectedGraph& eg) {
  if (!eg.complete()) {
    throw std::invalid_argument("input graph has unknown cells");
  }
  return eg.reveal();
}

Matrix adjacency_matrix(const DirectedGraph& g) {
  const int n = g.node_count();
  Matrix m(g.field(), n, n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) m.set(a, b, g.label(a, b));
  }
  return m;
}

FieldElement random_element(const Field& f, Rng& rng) {
  return {rng.below(f.order())};
}

Matrix random_matrix(const Field& f, int rows, int cols, Rng& rng) {
  Matrix m(f, rows, cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) m.set(r, c, random_element(f, rng));
  }
  return m;
}

UndirectedGraph random_pair_info(const Field& f, int nodes, Rng& rng) {
  UndirectedGraph g(f, nodes);
  for (int hi = 0; hi < nodes; ++hi) {
    for (int lo = 0; lo <= hi; ++lo) g.set_label(lo, hi, random_element(f, rng));
  }
  return g;
}

std::vector<int> random_failure_set(int n, int budget, Rng& rng) {
  const int size = 1 + static_cast<int>(rng.below(budget));
  std::vector<int> nodes;
  while (static_cast<int>(nodes.size()) < size) {
    const int t = static_cast<int>(rng.below(n));
    if (std::find(nodes.begin(), nodes.end(), t) == nodes.end()) {
      nodes.push_back(t);
    }
  }
  return nodes;
}

void for_each_subset(int n, int size,
                     const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> pick(size);
  const std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == size) {
      fn(pick);
      return;
    }
    for (int v = start; v <= n - (size - depth); ++v) {
      pick[depth] = v;
      rec(v + 1, depth + 1);
    }
  };
  rec(0, 0);
}

std::size_t subset_count(int n, int size) {
  std::size_t c = 1;
  for (int t = 0; t < size; ++t) c = c * (n - t) / (t + 1);
  return c;
}

// ---------------------------------------------------------------------------
// Code dispatch.  Directed and undirected codes expose the same accessors
// but differ in their information containers, so commands take one handler
// for each shape.

enum class Kind { c1, c2, cg4, cu1, cu2 };

Kind parse_kind(const Options& o) {
  if (o.code == "c1") return Kind::c1;
  if (o.code == "c2") return Kind::c2;
  if (o.code == "cg4") return Kind::cg4;
  if (o.code == "cu1") return Kind::cu1;
  if (o.code == "cu2") return Kind::cu2;
  throw std::invalid_argument("unknown code: " + o.code);
}

void check_rho(const Options& o, Kind kind) {
  if ((kind == Kind::cg4 || kind == Kind::cu1 || kind == Kind::cu2) &&
      o.rho != 2) {
    throw std::invalid_argument("this code corrects exactly two failures");
  }
}

template <class DirectedFn, class UndirectedFn>
int with_code(const Options& o, int n, DirectedFn&& directed,
              UndirectedFn&& undirected) {
  const Kind kind = parse_kind(o);
  check_rho(o, kind);
  switch (kind) {
    case Kind::c1:
      return directed(MdsGraphCode(n, o.rho));
    case Kind::c2:
      return directed(ArrayGraphCode(n, o.rho));
    case Kind::cg4:
      return directed(DirectedDoubleCode(n));
    case Kind::cu1:
      return undirected(UndirectedDoubleCode(n, TriangleSide::lower));
    case Kind::cu2:
    default:
      return undirected(UndirectedDoubleCode(n, TriangleSide::upper));
  }
}

template <class Code>
void add_shape_lines(Report& rep, const Options& o, const Code& code,
                     std::size_t cell_count) {
  rep.add("code", o.code);
  rep.add("n", code.node_count());
  rep.add("k", code.dimension());
  rep.add("r", code.redundancy());
  rep.add_rate("rate", static_cast<double>(code.dimension()) /
                           static_cast<double>(cell_count));
}

// ---------------------------------------------------------------------------
// Subcommands

int cmd_encode(const Options& o) {
  if (o.n == 0) throw std::invalid_argument("--n is required");
  return with_code(
      o, o.n,
      [&](const auto& code) {
        const Matrix info = parse_matrix(read_file(o.in_path));
        const DirectedGraph g = code.encode(info);
        write_file(o.out_path, serialize(g));
        Report rep;
        const int n = code.node_count();
        add_shape_lines(rep, o, code, static_cast<std::size_t>(n) * n);
        rep.print();
        return 0;
      },
      [&](const UndirectedDoubleCode& code) {
        const UndirectedGraph info =
            reveal_checked(to_undirected(parse_graph(read_file(o.in_path))));
        const UndirectedGraph g = code.encode(info);
        write_file(o.out_path, serialize(g));
        Report rep;
        const int n = code.node_count();
        add_shape_lines(rep, o, code,
                        static_cast<std::size_t>(n) * (n + 1) / 2);
        rep.print();
        return 0;
      });
}

int cmd_erase(const Options& o) {
  ParsedGraph parsed = parse_graph(read_file(o.in_path));
  if (auto* g = std::get_if<ErasedGraph>(&parsed)) {
    write_file(o.out_path, serialize(erase_nodes(reveal_checked(*g), o.nodes)));
  } else {
    write_file(o.out_path,
               serialize(erase_nodes(
                   reveal_checked(std::get<ErasedUndirectedGraph>(parsed)),
                   o.nodes)));
  }
  return 0;
}

int cmd_decode(const Options& o) {
  ParsedGraph parsed = parse_graph(read_file(o.in_path));
  const int n = std::visit([](const auto& g) { return g.node_count(); }, parsed);
  check_n_matches(o, n);
  return with_code(
      o, n,
      [&](const auto& code) {
        const ErasedGraph eg = to_directed(std::move(parsed));
        const DirectedGraph g = code.decode(eg, o.nodes);
        write_file(o.out_path, serialize(g));
        std::fputs("ok=true\n", stdout);
        return 0;
      },
      [&](const UndirectedDoubleCode& code) {
        const ErasedUndirectedGraph eg = to_undirected(std::move(parsed));
        const UndirectedGraph g = code.decode(eg, o.nodes);
        write_file(o.out_path, serialize(g));
        std::fputs("ok=true\n", stdout);
        return 0;
      });
}

int cmd_verify(const Options& o) {
  ParsedGraph parsed = parse_graph(read_file(o.in_path));
  const int n = std::visit([](const auto& g) { return g.node_count(); }, parsed);
  check_n_matches(o, n);
  return with_code(
      o, n,
      [&](const auto& code) {
        const bool ok = code.check(reveal_checked(to_directed(std::move(parsed))));
        std::fputs(ok ? "ok=true\n" : "ok=false\n", stdout);
        return ok ? 0 : 1;
      },
      [&](const UndirectedDoubleCode& code) {
        const bool ok =
            code.check(reveal_checked(to_undirected(std::move(parsed))));
        std::fputs(ok ? "ok=true\n" : "ok=false\n", stdout);
        return ok ? 0 : 1;
      });
}

// ---------------------------------------------------------------------------
// Audit pieces

// Intersection counts every failure set induces on the row/column codes:
// each row meets the failed columns rho times, each kept column the failed
// rows rho times, and each surviving row the whole pattern rho times.
bool row_column_intersections_hold(int n, int rho) {
  bool ok = true;
  for_each_subset(n, rho, [&](const std::vector<int>& j) {
    std::vector<bool> failed(n, false);
    for (int k : j) failed[k] = true;
    for (int l = 0; l < n && ok; ++l) {
      int out_hits = 0, in_hits = 0, all_hits = 0;
      for (int k = 0; k < n; ++k) {
        if (failed[k]) {
          ++out_hits;  // (l, k) lands in a failed column
          ++in_hits;   // (k, l) lands in a failed row
        }
      }
      for (Edge e : out_neighborhood(n, l)) {
        if (failed[e.from] || failed[e.to]) ++all_hits;
      }
      ok = ok && out_hits == rho && in_hits == rho;
      if (!failed[l]) ok = ok && all_hits == rho;
    }
  });
  return ok;
}

bool cross_diagonal_claim_holds(int n) {
  const auto dgd = directed_diagonal_sets(n, Direction::down);
  const auto dgu = directed_diagonal_sets(n, Direction::up);
  const auto fd = directed_failure_sets(n, Direction::down);
  const auto fu = directed_failure_sets(n, Direction::up);
  for (int i = 0; i < n - 2; ++i) {
    for (int j = 0; j < n - 2; ++j) {
      if (i == j) continue;
      const int m = (i + j) % n;
      EdgeSet down, up;
      std::set_intersection(dgd[m].begin(), dgd[m].end(), fd[j].begin(),
                            fd[j].end(), std::back_inserter(down));
      std::set_intersection(dgu[m].begin(), dgu[m].end(), fu[j].begin(),
                            fu[j].end(), std::back_inserter(up));
      if (down != EdgeSet{orient_edge(NodePair(i, j), Direction::down)}) {
        return false;
      }
      if (up != EdgeSet{orient_edge(NodePair(i, j), Direction::up)}) {
        return false;
      }
    }
  }
  return true;
}

bool sweep_pairing_claim_holds(int n) {
  for (int i = 0; i < n - 2; ++i) {
    for (int j = i + 1; j < n - 2; ++j) {
      const SweepSchedule sc = sweep_schedule(n, i, j);
      if (sc.self_in_a_and_bu == sc.self_in_au_and_b) return false;
    }
  }
  return true;
}

template <class Code, class MakeInfo, class Same>
std::size_t count_recovered(const Code& code, int budget, Rng& rng,
                            const MakeInfo& make_info, const Same& same) {
  const auto original = code.encode(make_info(rng));
  std::size_t ok = 0;
  for_each_subset(code.node_count(), budget, [&](const std::vector<int>& j) {
    try {
      if (same(code.decode(erase_nodes(original, j), j), original)) ++ok;
    } catch (const std::exception&) {
      // counted as a miss
    }
  });
  return ok;
}

int cmd_audit(const Options& o) {
  if (o.n == 0) throw std::invalid_argument("--n is required");
  const Kind kind = parse_kind(o);
  Report rep;
  rep.add("code", o.code);
  rep.add("n", o.n);
  bool all_ok = true;
  Rng rng(o.seed);

  switch (kind) {
    case Kind::c1: {
      const MdsGraphCode code(o.n, o.rho);
      rep.add("rho", o.rho);
      const Matrix cm = code.constraint_matrix();
      rep.add("rank", rank(cm));
      rep.add("dim", nullspace_dim(cm));
      const std::size_t bound =
          static_cast<std::size_t>(2) * o.n * o.rho - o.rho * o.rho;
      rep.add("redundancy", code.redundancy());
      rep.add("bound", bound);
      const bool optimal = code.redundancy() == bound &&
                           nullspace_dim(cm) == code.dimension();
      rep.add("optimal", optimal ? "true" : "false");
      all_ok = all_ok && optimal;
      const bool claim = row_column_intersections_hold(o.n, o.rho);
      rep.add("intersections", claim ? "ok" : "fail");
      all_ok = all_ok && claim;
      if (o.exhaustive) {
        const std::size_t total = subset_count(o.n, o.rho);
        const std::size_t got = count_recovered(
            code, o.rho, rng,
            [&](Rng& r) {
              return random_matrix(code.field(), code.info_side(),
                                   code.info_side(), r);
            },
            [](const DirectedGraph& a, const DirectedGraph& b) {
              return a == b;
            });
        rep.add_ratio(o.rho == 2 ? "pairs" : "patterns", got, total);
        all_ok = all_ok && got == total;
      }
      break;
    }
    case Kind::c2: {
      const ArrayGraphCode code(o.n, o.rho);
      rep.add("rho", o.rho);
      rep.add("rank", rank(code.parity_check()));
      rep.add("dim", code.dimension());
      const std::size_t bound =
          static_cast<std::size_t>(2) * o.n * o.rho - o.rho * o.rho;
      rep.add("redundancy", code.redundancy());
      rep.add("bound", bound);
      rep.add("optimal", code.redundancy() == bound ? "true" : "false");
      // Rank-weight sampling: nonzero codewords must keep matrix rank at
      // least 2 rho + 1, which upper-bounds nothing but witnesses the
      // distance the decoder relies on.
      int min_rank = o.n + 1;
      const int samples = 200;
      for (int t = 0; t < samples; ++t) {
        Matrix info = random_matrix(code.field(), o.n - 2 * o.rho, o.n, rng);
        bool zero = true;
        for (std::size_t r = 0; r < info.rows() && zero; ++r) {
          for (std::size_t c = 0; c < info.cols() && zero; ++c) {
            zero = info.at(r, c).bits == 0;
          }
        }
        if (zero) continue;
        const int rk =
            static_cast<int>(rank(adjacency_matrix(code.encode(info))));
        min_rank = std::min(min_rank, rk);
      }
      rep.add("rank_weight_samples", samples);
      rep.add("rank_weight_min", min_rank);
      const bool rank_ok = min_rank >= code.rank_distance();
      rep.add("rank_weight", rank_ok ? "ok" : "fail");
      all_ok = all_ok && rank_ok;
      // Cover-weight spot check against the exhaustive reference.
      bool cover_ok = true;
      for (int t = 0; t < 8; ++t) {
        const Matrix m = random_matrix(code.field(), o.n, o.n, rng);
        cover_ok = cover_ok && cover_weight(m) == cover_weight_brute(m);
      }
      rep.add("cover", cover_ok ? "ok" : "fail");
      all_ok = all_ok && cover_ok;
      if (o.exhaustive) {
        const std::size_t total = subset_count(o.n, o.rho);
        const std::size_t got = count_recovered(
            code, o.rho, rng,
            [&](Rng& r) {
              return random_matrix(code.field(), o.n - 2 * o.rho, o.n, r);
            },
            [](const DirectedGraph& a, const DirectedGraph& b) {
              return a == b;
            });
        rep.add_ratio(o.rho == 2 ? "pairs" : "patterns", got, total);
        all_ok = all_ok && got == total;
      }
      break;
    }
    case Kind::cg4: {
      check_rho(o, kind);
      const DirectedDoubleCode code(o.n);
      const Matrix cm = code.constraint_matrix();
      rep.add("rank", rank(cm));
      rep.add("dim", nullspace_dim(cm));
      const std::size_t bound = static_cast<std::size_t>(4) * o.n - 4;
      rep.add("redundancy", code.redundancy());
      rep.add("bound", bound);
      const bool optimal =
          rank(cm) == bound && nullspace_dim(cm) == code.dimension();
      rep.add("optimal", optimal ? "true" : "false");
      all_ok = all_ok && optimal;
      const bool c3 = cross_diagonal_claim_holds(o.n);
      const bool c4 = sweep_pairing_claim_holds(o.n);
      rep.add("cross_diagonal", c3 ? "ok" : "fail");
      rep.add("sweep_pairing", c4 ? "ok" : "fail");
      all_ok = all_ok && c3 && c4;
      if (o.exhaustive) {
        const std::size_t total = subset_count(o.n, 2);
        const std::size_t got = count_recovered(
            code, 2, rng,
            [&](Rng& r) {
              return random_matrix(code.field(), o.n - 2, o.n - 2, r);
            },
            [](const DirectedGraph& a, const DirectedGraph& b) {
              return a == b;
            });
        rep.add_ratio("pairs", got, total);
        all_ok = all_ok && got == total;
      }
      break;
    }
    case Kind::cu1:
    case Kind::cu2: {
      check_rho(o, kind);
      const UndirectedDoubleCode code(
          o.n, kind == Kind::cu1 ? TriangleSide::lower : TriangleSide::upper);
      const Matrix cm = code.constraint_matrix();
      rep.add("rank", rank(cm));
      rep.add("dim", nullspace_dim(cm));
      const std::size_t bound = static_cast<std::size_t>(2) * o.n - 1;
      rep.add("redundancy", code.redundancy());
      rep.add("bound", bound);
      const bool optimal =
          rank(cm) == bound && nullspace_dim(cm) == code.dimension();
      rep.add("optimal", optimal ? "true" : "false");
      all_ok = all_ok && optimal;
      const bool c4 = sweep_pairing_claim_holds(o.n);
      rep.add("sweep_pairing", c4 ? "ok" : "fail");
      all_ok = all_ok && c4;
      if (o.exhaustive) {
        const std::size_t total = subset_count(o.n, 2);
        const std::size_t got = count_recovered(
            code, 2, rng,
            [&](Rng& r) { return random_pair_info(code.field(), o.n - 2, r); },
            [](const UndirectedGraph& a, const UndirectedGraph& b) {
              return a == b;
            });
        rep.add_ratio("pairs", got, total);
        all_ok = all_ok && got == total;
      }
      break;
    }
  }
  rep.add("audit", all_ok ? "pass" : "fail");
  rep.print();
  return all_ok ? 0 : 1;
}

int cmd_simulate(const Options& o) {
  if (o.n == 0) throw std::invalid_argument("--n is required");
  if (o.trials < 1) throw std::invalid_argument("--trials must be >= 1");
  Rng rng(o.seed);
  std::size_t good = 0;
  const auto run_trials = [&](const auto& code, const auto& make_info) {
    for (int t = 0; t < o.trials; ++t) {
      const auto original = code.encode(make_info(rng));
      const std::vector<int> failed =
          random_failure_set(code.node_count(), code.erasure_budget(), rng);
      try {
        if (code.decode(erase_nodes(original, failed), failed) == original) {
          ++good;
        }
      } catch (const DecodeError&) {
        // counted as a miss
      }
    }
    return 0;
  };
  with_code(
      o, o.n,
      [&](const auto& code) {
        return run_trials(code, [&](Rng& r) {
          if constexpr (std::is_same_v<std::decay_t<decltype(code)>,
                                       ArrayGraphCode>) {
            return random_matrix(code.field(), o.n - 2 * o.rho, o.n, r);
          } else if constexpr (std::is_same_v<std::decay_t<decltype(code)>,
                                              MdsGraphCode>) {
            return random_matrix(code.field(), code.info_side(),
                                 code.info_side(), r);
          } else {
            return random_matrix(code.field(), o.n - 2, o.n - 2, r);
          }
        });
      },
      [&](const UndirectedDoubleCode& code) {
        return run_trials(code, [&](Rng& r) {
          return random_pair_info(code.field(), o.n - 2, r);
        });
      });
  Report rep;
  rep.add("code", o.code);
  rep.add("n", o.n);
  rep.add("seed", o.seed);
  rep.add("trials", o.trials);
  rep.add("successes", good);
  rep.add("failures", static_cast<std::size_t>(o.trials) - good);
  rep.print();
  return good == static_cast<std::size_t>(o.trials) ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args) {
  Options o;
  CLI::App app{"erasure codes on complete graphs"};
  app.require_subcommand(1);

  const auto add_common = [&](CLI::App* cmd, bool wants_code) {
    if (wants_code) {
      cmd->add_option("--code", o.code, "c1, c2, cg4, cu1, or cu2")
          ->required();
      cmd->add_option("--n", o.n, "number of nodes");
      cmd->add_option("--rho", o.rho, "failure budget (c1 and c2)");
    }
    return cmd;
  };

  CLI::App* enc = add_common(app.add_subcommand("encode", "info -> codeword"),
                             true);
  enc->add_option("--in", o.in_path, "information file")->required();
  enc->add_option("--out", o.out_path, "codeword graph file")->required();

  CLI::App* era = app.add_subcommand("erase", "apply node failures");
  era->add_option("--in", o.in_path, "graph file")->required();
  era->add_option("--out", o.out_path, "erased graph file")->required();
  era->add_option("--nodes", o.nodes, "failed nodes")
      ->required()
      ->delimiter(',');

  CLI::App* dec = add_common(
      app.add_subcommand("decode", "recover failed nodes"), true);
  dec->add_option("--in", o.in_path, "erased graph file")->required();
  dec->add_option("--out", o.out_path, "recovered graph file")->required();
  dec->add_option("--nodes", o.nodes, "failed nodes")->delimiter(',');

  CLI::App* ver = add_common(
      app.add_subcommand("verify", "check code membership"), true);
  ver->add_option("--in", o.in_path, "graph file")->required();

  CLI::App* aud = add_common(
      app.add_subcommand("audit", "rank, dimension, and claim checks"), true);
  aud->add_flag("--exhaustive", o.exhaustive,
                "decode every failure pattern of the full budget");
  aud->add_option("--seed", o.seed, "randomness seed");

  CLI::App* sim = add_common(
      app.add_subcommand("simulate", "random failure trials"), true);
  sim->add_option("--seed", o.seed, "randomness seed");
  sim->add_option("--trials", o.trials, "number of trials");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (enc->parsed()) return cmd_encode(o);
    if (era->parsed()) return cmd_erase(o);
    if (dec->parsed()) return cmd_decode(o);
    if (ver->parsed()) return cmd_verify(o);
    if (aud->parsed()) return cmd_audit(o);
    return cmd_simulate(o);
  } catch (const DecodeError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const SolveError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const ParseError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::out_of_range& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}

}  // namespace graphcodes::cli
