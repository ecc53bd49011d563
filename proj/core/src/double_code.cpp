#include "graphcodes/double_code.hpp"

#include <algorithm>
#include <stdexcept>

#include "graphcodes/peeling.hpp"

namespace graphcodes {
namespace {

int mod(long long v, int n) { return static_cast<int>(((v % n) + n) % n); }

void require_prime(int n) {
  if (n < 5 || !is_prime(n)) {
    throw std::invalid_argument("node count must be a prime >= 5");
  }
}

std::vector<int> checked_failed_set(int n, int budget,
                                    std::span<const int> failed) {
  std::vector<int> j(failed.begin(), failed.end());
  std::sort(j.begin(), j.end());
  j.erase(std::unique(j.begin(), j.end()), j.end());
  for (int t : j) {
    if (t < 0 || t >= n) throw std::out_of_range("failed node out of range");
  }
  if (static_cast<int>(j.size()) > budget) {
    throw DecodeError(DecodeError::Kind::beyond_budget,
                      "more failed nodes than the code corrects");
  }
  return j;
}

template <class CellSet>
std::vector<CellSet> oriented(const std::vector<PairSet>& families,
                              Direction dir) {
  std::vector<CellSet> sets(families.size());
  for (std::size_t k = 0; k < families.size(); ++k) {
    sets[k].reserve(families[k].size());
    for (NodePair p : families[k]) sets[k].push_back(orient_edge(p, dir));
    std::sort(sets[k].begin(), sets[k].end());
  }
  return sets;
}

template <class Graph, class CellSet>
std::vector<FieldElement> known_sums(const Graph& eg,
                                     const std::vector<CellSet>& sets) {
  const Field& f = eg.field();
  std::vector<FieldElement> sums(sets.size(), f.zero());
  for (std::size_t k = 0; k < sets.size(); ++k) {
    for (const auto& cell : sets[k]) {
      if (auto v = eg.cell(cell)) sums[k] = f.add(sums[k], *v);
    }
  }
  return sums;
}

// The erasure patterns the syndrome tables and sweep decoders are defined
// for: every cell touching i or j Unknown, everything else Known.
void require_two_node_pattern(const ErasedUndirectedGraph& eg, int i, int j) {
  const int n = eg.node_count();
  if (i < 0 || i >= n || j < 0 || j >= n) {
    throw std::out_of_range("failed node out of range");
  }
  if (i == j) throw std::invalid_argument("failed nodes must be distinct");
  for (int b = 0; b < n; ++b) {
    for (int a = 0; a <= b; ++a) {
      const bool touched = a == i || a == j || b == i || b == j;
      if (eg.cell(a, b).has_value() != !touched) {
        throw std::invalid_argument(
            "erasure pattern is not the failure of the two given nodes");
      }
    }
  }
}

void require_two_node_pattern(const ErasedGraph& eg, int i, int j) {
  const int n = eg.node_count();
  if (i < 0 || i >= n || j < 0 || j >= n) {
    throw std::out_of_range("failed node out of range");
  }
  if (i == j) throw std::invalid_argument("failed nodes must be distinct");
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const bool touched = a == i || a == j || b == i || b == j;
      if (eg.cell(a, b).has_value() != !touched) {
        throw std::invalid_argument(
            "erasure pattern is not the failure of the two given nodes");
      }
    }
  }
}

}  // namespace

bool is_prime(int n) {
  if (n < 2) return false;
  for (int p = 2; static_cast<long long>(p) * p <= n; ++p) {
    if (n % p == 0) return false;
  }
  return true;
}

std::vector<PairSet> neighborhood_sets(int n, TriangleSide side) {
  require_prime(n);
  const int skip = side == TriangleSide::lower ? n - 1 : n - 2;
  std::vector<PairSet> sets(n - 1);
  for (int h = 0; h < n - 2; ++h) {
    for (int l = 0; l < n; ++l) {
      if (l != skip) sets[h].push_back(NodePair(h, l));
    }
  }
  for (int l = 0; l < n; ++l) {
    if (l != skip) sets[n - 2].push_back(NodePair(l, l));
  }
  for (PairSet& set : sets) std::sort(set.begin(), set.end());
  return sets;
}

std::vector<PairSet> diagonal_sets(int n, TriangleSide side) {
  require_prime(n);
  const int skip = side == TriangleSide::lower ? n - 2 : n - 1;
  std::vector<PairSet> sets(n);
  for (int k = 0; k < n; ++k) {
    if (k == skip) continue;
    for (int l = k; l < n; ++l) {
      if (l == skip) continue;
      sets[mod(k + l, n)].push_back(NodePair(k, l));
    }
  }
  // The pair of the two parity nodes is excluded from the modular sweep
  // above on both sides; it joins every diagonal set instead. Without it the
  // failure of one information node together with one parity node leaves the
  // remaining constraints singular.
  for (PairSet& set : sets) set.push_back(NodePair(n - 2, n - 1));
  for (PairSet& set : sets) std::sort(set.begin(), set.end());
  return sets;
}

std::vector<PairSet> failure_sets(int n) {
  require_prime(n);
  std::vector<PairSet> sets(n);
  for (int t = 0; t < n; ++t) sets[t] = pair_neighborhood(n, t);
  return sets;
}

std::vector<EdgeSet> directed_neighborhood_sets(int n, Direction dir) {
  const TriangleSide side =
      dir == Direction::down ? TriangleSide::lower : TriangleSide::upper;
  std::vector<PairSet> pairs = neighborhood_sets(n, side);
  pairs.pop_back();  // the self-pair set stays with the undirected codes
  return oriented<EdgeSet>(pairs, dir);
}

std::vector<EdgeSet> directed_diagonal_sets(int n, Direction dir) {
  const TriangleSide side =
      dir == Direction::down ? TriangleSide::lower : TriangleSide::upper;
  return oriented<EdgeSet>(diagonal_sets(n, side), dir);
}

std::vector<EdgeSet> directed_failure_sets(int n, Direction dir) {
  return oriented<EdgeSet>(failure_sets(n), dir);
}

SweepSchedule sweep_schedule(int n, int i, int j) {
  require_prime(n);
  if (i < 0 || j < 0 || i >= n || j >= n) {
    throw std::out_of_range("failed node out of range");
  }
  if (i >= j) throw std::invalid_argument("failed nodes must satisfy i < j");
  if (j > n - 3) {
    throw std::out_of_range("sweep decoding covers information nodes only");
  }

  SweepSchedule sc;
  sc.n = n;
  sc.i = i;
  sc.j = j;
  sc.d = mod(j - i, n);
  for (int e = 1; e < n; ++e) {
    if (sc.d * e % n == 1) sc.d_inv = e;
  }
  sc.x = mod(-1 - sc.d_inv, n);
  sc.y = mod(-1 + sc.d_inv, n);
  sc.xu = sc.y;
  sc.yu = sc.x;

  for (int t = 0; t <= sc.x; ++t) sc.a.push_back(mod(-(long long)sc.d * (t + 1) - 2, n));
  for (int t = 0; t <= sc.y; ++t) sc.b.push_back(mod((long long)sc.d * (t + 1) - 2, n));
  for (int t = 0; t <= sc.xu; ++t) sc.au.push_back(mod(-(long long)sc.d * (t + 1) - 1, n));
  for (int t = 0; t <= sc.yu; ++t) sc.bu.push_back(mod((long long)sc.d * (t + 1) - 1, n));

  const auto has = [](const std::vector<int>& seq, int v) {
    return std::find(seq.begin(), seq.end(), v) != seq.end();
  };
  sc.self_in_a_and_bu =
      has(sc.a, i) && has(sc.a, j) && has(sc.bu, i) && has(sc.bu, j);
  sc.self_in_au_and_b =
      has(sc.au, i) && has(sc.au, j) && has(sc.b, i) && has(sc.b, j);
  return sc;
}

PairSyndromes pair_syndromes(const ErasedUndirectedGraph& eg, TriangleSide side,
                             int i, int j) {
  require_two_node_pattern(eg, i, j);
  const int n = eg.node_count();
  PairSyndromes syn;
  syn.s = known_sums(eg, neighborhood_sets(n, side));
  syn.d = known_sums(eg, diagonal_sets(n, side));
  return syn;
}

EdgeSyndromes edge_syndromes(const ErasedGraph& eg, int i, int j) {
  require_two_node_pattern(eg, i, j);
  const int n = eg.node_count();
  EdgeSyndromes syn;
  syn.s_down = known_sums(eg, directed_neighborhood_sets(n, Direction::down));
  syn.s_up = known_sums(eg, directed_neighborhood_sets(n, Direction::up));
  syn.d_down = known_sums(eg, directed_diagonal_sets(n, Direction::down));
  syn.d_up = known_sums(eg, directed_diagonal_sets(n, Direction::up));
  return syn;
}

// ---------------------------------------------------------------------------
// Undirected code

UndirectedDoubleCode::UndirectedDoubleCode(int n, TriangleSide side)
    : n_(n), side_(side), field_(1) {
  std::vector<PairSet> nb = neighborhood_sets(n, side);
  std::vector<PairSet> dg = diagonal_sets(n, side);
  parity_sets_.reserve(nb.size() + dg.size());
  std::move(nb.begin(), nb.end(), std::back_inserter(parity_sets_));
  std::move(dg.begin(), dg.end(), std::back_inserter(parity_sets_));
}

UndirectedGraph UndirectedDoubleCode::encode(const UndirectedGraph& info) const {
  if (info.node_count() != n_ - 2 || !(info.field() == field_)) {
    throw std::invalid_argument("info graph has the wrong shape or field");
  }
  ErasedUndirectedGraph work(field_, n_);
  for (int b = 0; b < n_ - 2; ++b) {
    for (int a = 0; a <= b; ++a) work.set_cell(a, b, info.label(a, b));
  }
  peel(work, parity_sets_);
  if (!work.complete()) {
    throw std::logic_error("redundancy completion stalled");
  }
  return work.reveal();
}

bool UndirectedDoubleCode::check(const UndirectedGraph& g) const {
  if (g.node_count() != n_ || !(g.field() == field_)) {
    throw std::invalid_argument("graph has the wrong shape or field");
  }
  for (const PairSet& set : parity_sets_) {
    FieldElement sum = field_.zero();
    for (NodePair p : set) sum = field_.add(sum, g.label(p));
    if (sum.bits != 0) return false;
  }
  return true;
}

UndirectedGraph UndirectedDoubleCode::decode(const ErasedUndirectedGraph& eg,
                                             std::span<const int> failed) const {
  if (eg.node_count() != n_ || !(eg.field() == field_)) {
    throw std::invalid_argument("erased graph has the wrong shape or field");
  }
  const std::vector<int> f = checked_failed_set(n_, erasure_budget(), failed);
  for (int b = 0; b < n_; ++b) {
    for (int a = 0; a <= b; ++a) {
      const bool touched = std::find(f.begin(), f.end(), a) != f.end() ||
                           std::find(f.begin(), f.end(), b) != f.end();
      if (eg.cell(a, b).has_value() != !touched) {
        throw std::invalid_argument(
            "erasure pattern does not match the declared failed nodes");
      }
    }
  }

  UndirectedGraph out(field_, n_);
  if (f.size() == 2 && f[1] < n_ - 2) {
    out = sweep_decode(eg, f[0], f[1]);
  } else {
    ErasedUndirectedGraph work = eg;
    peel(work, parity_sets_);
    if (!work.complete()) {
      throw std::logic_error("erasure pattern did not peel");
    }
    out = work.reveal();
  }
  if (!check(out)) {
    throw DecodeError(DecodeError::Kind::inconsistent,
                      "recovered labels violate the parity sets");
  }
  return out;
}

namespace {

// One sweep of the undirected pair decoder.  `first` is the failed node
// whose diagonal set drives the sweep (s2 = <s1 + first>), `second` the
// other one; `terminal` is the node whose pair with `first` closes the
// sweep.  The self iteration recovers both self pairs through the
// self-pair parity set at index n-2.
void run_pair_sweep(ErasedUndirectedGraph& work, const Field& f,
                    const std::vector<int>& seq, int first, int second,
                    int terminal, const PairSyndromes& syn, int n) {
  FieldElement b_prev = f.zero();
  for (int s1 : seq) {
    const int s2 = mod(s1 + first, n);
    if (s1 == second) continue;  // the partner sweep covers this index
    if (s1 == first) {
      const FieldElement v1 = f.add(syn.d[s2], b_prev);
      work.set_cell(first, first, v1);
      const FieldElement v2 = f.add(syn.s[n - 2], v1);
      work.set_cell(second, second, v2);
      b_prev = v2;
    } else if (s1 == terminal) {
      work.set_cell(terminal, first, f.add(syn.d[s2], b_prev));
    } else {
      const FieldElement v1 = f.add(syn.d[s2], b_prev);
      work.set_cell(s1, first, v1);
      const FieldElement v2 = f.add(syn.s[s1], v1);
      work.set_cell(s1, second, v2);
      b_prev = v2;
    }
  }
}

}  // namespace

UndirectedGraph UndirectedDoubleCode::sweep_decode(
    const ErasedUndirectedGraph& eg, int i, int j) const {
  if (eg.node_count() != n_ || !(eg.field() == field_)) {
    throw std::invalid_argument("erased graph has the wrong shape or field");
  }
  const SweepSchedule sc = sweep_schedule(n_, i, j);
  const PairSyndromes syn = pair_syndromes(eg, side_, i, j);
  const bool lower = side_ == TriangleSide::lower;
  const int terminal = lower ? n_ - 1 : n_ - 2;

  ErasedUndirectedGraph work = eg;
  run_pair_sweep(work, field_, lower ? sc.a : sc.au, j, i, terminal, syn, n_);
  run_pair_sweep(work, field_, lower ? sc.b : sc.bu, i, j, terminal, syn, n_);
  // Left over: the pair {i, j} (the diagonal through both failed nodes has
  // no other failed cell) and the two pairs with the single-parity node.
  peel(work, parity_sets_);
  if (!work.complete()) {
    throw std::logic_error("sweep cleanup stalled");
  }
  return work.reveal();
}

Matrix UndirectedDoubleCode::constraint_matrix() const {
  const std::size_t cells = static_cast<std::size_t>(n_) * (n_ + 1) / 2;
  Matrix m(field_, parity_sets_.size(), cells);
  for (std::size_t r = 0; r < parity_sets_.size(); ++r) {
    for (NodePair p : parity_sets_[r]) {
      const std::size_t idx =
          static_cast<std::size_t>(p.hi) * (p.hi + 1) / 2 + p.lo;
      m.set(r, idx, field_.one());
    }
  }
  return m;
}

// ---------------------------------------------------------------------------
// Directed code

DirectedDoubleCode::DirectedDoubleCode(int n) : n_(n), field_(1) {
  std::vector<EdgeSet> groups[] = {
      directed_neighborhood_sets(n, Direction::down),
      directed_diagonal_sets(n, Direction::down),
      directed_neighborhood_sets(n, Direction::up),
      directed_diagonal_sets(n, Direction::up),
  };
  parity_sets_.reserve(static_cast<std::size_t>(4) * n - 4);
  for (auto& g : groups) {
    std::move(g.begin(), g.end(), std::back_inserter(parity_sets_));
  }
}

DirectedGraph DirectedDoubleCode::encode(const Matrix& info) const {
  const std::size_t k = static_cast<std::size_t>(n_) - 2;
  if (info.rows() != k || info.cols() != k || !(info.field() == field_)) {
    throw std::invalid_argument("info block has the wrong shape or field");
  }
  ErasedGraph work(field_, n_);
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < k; ++c) {
      work.set_cell(static_cast<int>(r), static_cast<int>(c), info.at(r, c));
    }
  }
  peel(work, parity_sets_);
  if (!work.complete()) {
    throw std::logic_error("redundancy completion stalled");
  }
  return work.reveal();
}

bool DirectedDoubleCode::check(const DirectedGraph& g) const {
  if (g.node_count() != n_ || !(g.field() == field_)) {
    throw std::invalid_argument("graph has the wrong shape or field");
  }
  for (const EdgeSet& set : parity_sets_) {
    FieldElement sum = field_.zero();
    for (Edge e : set) sum = field_.add(sum, g.label(e));
    if (sum.bits != 0) return false;
  }
  return true;
}

DirectedGraph DirectedDoubleCode::decode(const ErasedGraph& eg,
                                         std::span<const int> failed) const {
  if (eg.node_count() != n_ || !(eg.field() == field_)) {
    throw std::invalid_argument("erased graph has the wrong shape or field");
  }
  const std::vector<int> f = checked_failed_set(n_, erasure_budget(), failed);
  for (int a = 0; a < n_; ++a) {
    for (int b = 0; b < n_; ++b) {
      const bool touched = std::find(f.begin(), f.end(), a) != f.end() ||
                           std::find(f.begin(), f.end(), b) != f.end();
      if (eg.cell(a, b).has_value() != !touched) {
        throw std::invalid_argument(
            "erasure pattern does not match the declared failed nodes");
      }
    }
  }

  DirectedGraph out(field_, n_);
  if (f.size() == 2 && f[1] < n_ - 2) {
    out = sweep_decode(eg, f[0], f[1]);
  } else {
    ErasedGraph work = eg;
    peel(work, parity_sets_);
    if (!work.complete()) {
      throw std::logic_error("erasure pattern did not peel");
    }
    out = work.reveal();
  }
  if (!check(out)) {
    throw DecodeError(DecodeError::Kind::inconsistent,
                      "recovered labels violate the parity sets");
  }
  return out;
}

namespace {

// Static description of one of the four sweeps.
struct SweepSpec {
  const std::vector<int>* seq;
  int first;   // failed node driving the diagonal lookups
  int second;  // the other failed node
  Direction dir;
  const std::vector<FieldElement>* s_table;
  const std::vector<FieldElement>* d_table;
  int terminal;
};

struct SweepState {
  std::size_t t = 0;
  FieldElement b_prev{0};
  enum class Phase { ready, waiting, finished } phase = Phase::ready;
  Edge wait_cell{};
};

// Runs at most one iteration of the sweep (or one wait re-check) and says
// whether anything moved forward.
bool step_sweep(const SweepSpec& sp, SweepState& st, ErasedGraph& work,
                std::vector<Edge>& log, const Field& f, int n) {
  using Phase = SweepState::Phase;
  const auto advance = [&] {
    if (++st.t == sp.seq->size()) st.phase = Phase::finished;
  };

  if (st.phase == Phase::finished) return false;
  if (st.phase == Phase::waiting) {
    const auto v = work.cell(st.wait_cell);
    if (!v) return false;
    st.b_prev = *v;
    st.phase = Phase::ready;
    advance();
    return true;
  }

  const int s1 = (*sp.seq)[st.t];
  const int s2 = mod(s1 + sp.first, n);
  if (s1 == sp.second) {
    // Covered by the sweeps running in the other orientation.
    advance();
    return true;
  }
  if (s1 == sp.first) {
    // Recover this side's self loop, then yield until the sweep owning
    // the other one has written it; its value re-anchors the chain.
    const Edge self{sp.first, sp.first};
    work.set_cell(self, f.add((*sp.d_table)[s2], st.b_prev));
    log.push_back(self);
    st.wait_cell = Edge{sp.second, sp.second};
    st.phase = Phase::waiting;
    return true;
  }
  if (s1 == sp.terminal) {
    const Edge e = orient_edge(NodePair(sp.terminal, sp.first), sp.dir);
    work.set_cell(e, f.add((*sp.d_table)[s2], st.b_prev));
    log.push_back(e);
    advance();
    return true;
  }
  const Edge e1 = orient_edge(NodePair(s1, sp.first), sp.dir);
  const Edge e2 = orient_edge(NodePair(s1, sp.second), sp.dir);
  const FieldElement v1 = f.add((*sp.d_table)[s2], st.b_prev);
  work.set_cell(e1, v1);
  log.push_back(e1);
  const FieldElement v2 = f.add((*sp.s_table)[s1], v1);
  work.set_cell(e2, v2);
  log.push_back(e2);
  st.b_prev = v2;
  advance();
  return true;
}

}  // namespace

DirectedGraph DirectedDoubleCode::sweep_decode(const ErasedGraph& eg, int i,
                                               int j, SweepTrace* trace) const {
  if (eg.node_count() != n_ || !(eg.field() == field_)) {
    throw std::invalid_argument("erased graph has the wrong shape or field");
  }
  const SweepSchedule sc = sweep_schedule(n_, i, j);
  const EdgeSyndromes syn = edge_syndromes(eg, i, j);

  ErasedGraph work = eg;
  SweepTrace rec;
  const SweepSpec specs[4] = {
      {&sc.a, j, i, Direction::down, &syn.s_down, &syn.d_down, n_ - 1},
      {&sc.b, i, j, Direction::down, &syn.s_down, &syn.d_down, n_ - 1},
      {&sc.au, j, i, Direction::up, &syn.s_up, &syn.d_up, n_ - 2},
      {&sc.bu, i, j, Direction::up, &syn.s_up, &syn.d_up, n_ - 2},
  };
  SweepState states[4];

  for (;;) {
    bool all_finished = true;
    bool progressed = false;
    for (int k = 0; k < 4; ++k) {
      progressed |= step_sweep(specs[k], states[k], work, rec.sweep[k],
                               field_, n_);
      all_finished &= states[k].phase == SweepState::Phase::finished;
    }
    if (all_finished) break;
    if (!progressed) {
      throw std::logic_error("sweep scheduler deadlocked");
    }
  }

  // The diagonals through both failed nodes contain exactly one failed
  // cell per orientation: the two edges between i and j.  Their syndromes
  // therefore equal the missing labels outright.
  const int m = mod(i + j, n_);
  rec.cross[0] = Edge{j, i};
  rec.cross[1] = Edge{i, j};
  work.set_cell(rec.cross[0], syn.d_down[m]);
  work.set_cell(rec.cross[1], syn.d_up[m]);

  rec.peeled = peel(work, parity_sets_);
  if (!work.complete()) {
    throw std::logic_error("sweep cleanup stalled");
  }
  if (trace) *trace = std::move(rec);
  return work.reveal();
}

Matrix DirectedDoubleCode::constraint_matrix() const {
  const std::size_t cells = static_cast<std::size_t>(n_) * n_;
  Matrix m(field_, parity_sets_.size(), cells);
  for (std::size_t r = 0; r < parity_sets_.size(); ++r) {
    for (Edge e : parity_sets_[r]) {
      m.set(r, static_cast<std::size_t>(e.from) * n_ + e.to, field_.one());
    }
  }
  return m;
}

}  // namespace graphcodes
