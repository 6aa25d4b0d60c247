#include "affcell/cells.hpp"

#include "affcell/errors.hpp"

#include <algorithm>
#include <map>

namespace affcell {

namespace {

enum EdgeKind : unsigned { kLeft = 1, kRight = 2 };

struct Graph {
  std::vector<std::vector<Index>> adj; // y -> x means x <= y
};

/// y -> x edges for elements of length <= radius. Left edges come from
/// C_s C_y, right edges from C_y C_s.
Graph preorder_graph(const KLTable& t, int radius, unsigned kinds) {
  const Index n = t.count_up_to(radius);
  const int gens = t.group().generator_count();
  Graph g;
  g.adj.resize(static_cast<std::size_t>(n));
  for (Index y = 0; y < n; ++y) {
    auto& out = g.adj[static_cast<std::size_t>(y)];
    for (int s = 0; s < gens; ++s) {
      if ((kinds & kLeft) && !(t.left_descents(y) >> s & 1u)) {
        const Index sy = t.left_neighbor(s, y);
        if (sy != kNone && sy < n) out.push_back(sy);
        for (const auto& e : t.mu_below_left(s, y)) out.push_back(e.z);
      }
      if ((kinds & kRight) && !(t.right_descents(y) >> s & 1u)) {
        const Index ys = t.right_neighbor(y, s);
        if (ys != kNone && ys < n) out.push_back(ys);
        for (const auto& e : t.mu_below_right(s, y)) out.push_back(e.z);
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
  }
  return g;
}

/// Iterative Tarjan; component ids are arbitrary.
std::vector<int> strongly_connected(const Graph& g, int& count) {
  const Index n = static_cast<Index>(g.adj.size());
  std::vector<int> order(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0), comp(static_cast<std::size_t>(n), -1);
  std::vector<Index> stack;
  std::vector<char> on_stack(static_cast<std::size_t>(n), 0);
  std::vector<std::pair<Index, std::size_t>> call;
  int counter = 0;
  count = 0;
  for (Index root = 0; root < n; ++root) {
    if (order[static_cast<std::size_t>(root)] >= 0) continue;
    call.push_back({root, 0});
    while (!call.empty()) {
      auto& [v, pos] = call.back();
      const auto vi = static_cast<std::size_t>(v);
      if (pos == 0 && order[vi] < 0) {
        order[vi] = low[vi] = counter++;
        stack.push_back(v);
        on_stack[vi] = 1;
      }
      if (pos < g.adj[vi].size()) {
        const Index w = g.adj[vi][pos++];
        const auto wi = static_cast<std::size_t>(w);
        if (order[wi] < 0) {
          call.push_back({w, 0});
        } else if (on_stack[wi]) {
          low[vi] = std::min(low[vi], order[wi]);
        }
        continue;
      }
      if (low[vi] == order[vi]) {
        while (true) {
          const Index w = stack.back();
          stack.pop_back();
          on_stack[static_cast<std::size_t>(w)] = 0;
          comp[static_cast<std::size_t>(w)] = count;
          if (w == v) break;
        }
        ++count;
      }
      const Index done = v;
      call.pop_back();
      if (!call.empty()) {
        const auto pi = static_cast<std::size_t>(call.back().first);
        low[pi] = std::min(low[pi], low[static_cast<std::size_t>(done)]);
      }
    }
  }
  return comp;
}

/// Components restricted to the first `keep` elements, relabelled by
/// smallest member.
std::vector<int> restricted_labels(const std::vector<int>& comp, Index keep) {
  std::map<int, int> relabel;
  std::vector<int> out(static_cast<std::size_t>(keep));
  for (Index x = 0; x < keep; ++x) {
    auto [it, fresh] = relabel.try_emplace(comp[static_cast<std::size_t>(x)], static_cast<int>(relabel.size()));
    out[static_cast<std::size_t>(x)] = it->second;
  }
  return out;
}

std::vector<std::vector<Index>> groups(const std::vector<int>& labels) {
  int n = 0;
  for (int l : labels) n = std::max(n, l + 1);
  std::vector<std::vector<Index>> out(static_cast<std::size_t>(n));
  for (std::size_t x = 0; x < labels.size(); ++x) out[static_cast<std::size_t>(labels[x])].push_back(static_cast<Index>(x));
  return out;
}

} // namespace

int required_table_bound(int bound) { return bound + kCellCheckMargin; }

CellPartition::CellPartition(const KLTable& table, int bound) : table_(&table), bound_(bound) {
  if (table.bound() < required_table_bound(bound))
    throw BoundExceeded("cell partition at bound " + std::to_string(bound) + " needs a KL table of radius " +
                            std::to_string(required_table_bound(bound)),
                        required_table_bound(bound));
  covered_ = table.count_up_to(bound);
  const int radius = bound + kCellMargin;
  const Index n = table.count_up_to(radius);

  Graph both = preorder_graph(table, radius, kLeft | kRight);
  int ncomp = 0;
  std::vector<int> comp = strongly_connected(both, ncomp);
  cell_of_ = restricted_labels(comp, covered_);

  int nl = 0, nr = 0;
  left_of_ = restricted_labels(strongly_connected(preorder_graph(table, radius, kLeft), nl), covered_);
  right_of_ = restricted_labels(strongly_connected(preorder_graph(table, radius, kRight), nr), covered_);
  left_cells_ = groups(left_of_);
  right_cells_ = groups(right_of_);

  // Re-run on the larger radius to decide completeness.
  int ncheck = 0;
  std::vector<int> check = restricted_labels(
      strongly_connected(preorder_graph(table, bound + kCellCheckMargin, kLeft | kRight), ncheck), covered_);
  auto members = groups(cell_of_);
  auto check_members = groups(check);

  cells_.resize(members.size());
  for (std::size_t i = 0; i < members.size(); ++i) {
    auto& c = cells_[i];
    c.index = static_cast<int>(i);
    c.members = members[i];
    const int other = check[static_cast<std::size_t>(c.members.front())];
    c.complete = check_members[static_cast<std::size_t>(other)] == c.members;
  }
  for (std::size_t l = 0; l < left_cells_.size(); ++l)
    cells_[static_cast<std::size_t>(cell_of_[static_cast<std::size_t>(left_cells_[l].front())])].left_cells.push_back(static_cast<int>(l));
  for (std::size_t r = 0; r < right_cells_.size(); ++r)
    cells_[static_cast<std::size_t>(cell_of_[static_cast<std::size_t>(right_cells_[r].front())])].right_cells.push_back(static_cast<int>(r));

  // Order: reachability in the condensed graph on the full radius.
  std::vector<std::vector<char>> reach(static_cast<std::size_t>(ncomp), std::vector<char>(static_cast<std::size_t>(ncomp), 0));
  std::vector<std::vector<int>> cadj(static_cast<std::size_t>(ncomp));
  for (Index y = 0; y < n; ++y)
    for (Index x : both.adj[static_cast<std::size_t>(y)])
      if (comp[static_cast<std::size_t>(x)] != comp[static_cast<std::size_t>(y)])
        cadj[static_cast<std::size_t>(comp[static_cast<std::size_t>(y)])].push_back(comp[static_cast<std::size_t>(x)]);
  // Tarjan numbers components in reverse topological order: successors first.
  for (int c = 0; c < ncomp; ++c) {
    auto& row = reach[static_cast<std::size_t>(c)];
    for (int d : cadj[static_cast<std::size_t>(c)]) {
      row[static_cast<std::size_t>(d)] = 1;
      const auto& sub = reach[static_cast<std::size_t>(d)];
      for (int k = 0; k < ncomp; ++k)
        if (sub[static_cast<std::size_t>(k)]) row[static_cast<std::size_t>(k)] = 1;
    }
  }
  const std::size_t nc = cells_.size();
  below_.assign(nc, std::vector<char>(nc, 0));
  for (std::size_t i = 0; i < nc; ++i)
    for (std::size_t j = 0; j < nc; ++j) {
      if (i == j) continue;
      const int ci = comp[static_cast<std::size_t>(cells_[i].members.front())];
      const int cj = comp[static_cast<std::size_t>(cells_[j].members.front())];
      below_[i][j] = reach[static_cast<std::size_t>(cj)][static_cast<std::size_t>(ci)];
    }

  // The lowest cell holds the longest element of W_f.
  const auto& datum = table.group().datum();
  AffineElement w0 = table.group().element(datum.weyl().longest(), datum.zero());
  if (auto i = table.find(w0); i && *i < covered_) cells_[static_cast<std::size_t>(cell_of_[static_cast<std::size_t>(*i)])].is_lowest = true;
}

int CellPartition::cell_of(Index x) const {
  return x >= 0 && x < covered_ ? cell_of_[static_cast<std::size_t>(x)] : -1;
}
int CellPartition::left_cell_of(Index x) const {
  return x >= 0 && x < covered_ ? left_of_[static_cast<std::size_t>(x)] : -1;
}
int CellPartition::right_cell_of(Index x) const {
  return x >= 0 && x < covered_ ? right_of_[static_cast<std::size_t>(x)] : -1;
}

int CellPartition::lowest_cell() const {
  for (const auto& c : cells_)
    if (c.is_lowest) return c.index;
  return -1;
}

bool CellPartition::strictly_below(int i, int j) const {
  return below_.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(j)) != 0;
}

std::vector<std::pair<int, int>> CellPartition::order_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 0; i < cells_.size(); ++i)
    for (std::size_t j = 0; j < cells_.size(); ++j)
      if (below_[i][j]) out.emplace_back(static_cast<int>(i), static_cast<int>(j));
  return out;
}

bool CellPartition::all_complete() const {
  return std::all_of(cells_.begin(), cells_.end(), [](const TwoSidedCell& c) { return c.complete; });
}

CellPartition cell_partition(const KLTable& table, int bound) { return CellPartition(table, bound); }

} // namespace affcell
