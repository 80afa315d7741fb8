#include "precubical/fbg.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <set>

#include "union_find.hpp"

namespace precubical {

PathExplosion::PathExplosion(std::size_t cap)
    : Error("path enumeration exceeded the cap of " + std::to_string(cap) + " paths") {}

std::string EdgePath::end(const Complex& p) const {
  if (edges.empty()) return start;
  return p.face({1, edges.back()}, 1, 1);
}

bool EdgePath::is_composable(const Complex& p) const {
  std::string at = start;
  for (const auto& e : edges) {
    if (!p.contains(1, e) || p.face({1, e}, 1, 0) != at) return false;
    at = p.face({1, e}, 1, 1);
  }
  return true;
}

std::size_t FbgTable::count(const std::string& from, const std::string& to) const {
  auto it = classes.find({from, to});
  return it == classes.end() ? 0 : it->second.count;
}

bool one_skeleton_is_acyclic(const Complex& p) {
  std::map<std::string, int> indegree;
  std::map<std::string, std::vector<std::string>> out;
  for (const auto& [v, _] : p.level(0)) indegree[v] = 0;
  for (const auto& [e, f] : p.level(1)) {
    out[f[0][0]].push_back(f[0][1]);
    ++indegree[f[0][1]];
  }
  std::deque<std::string> ready;
  for (const auto& [v, d] : indegree) {
    if (d == 0) ready.push_back(v);
  }
  std::size_t seen = 0;
  while (!ready.empty()) {
    auto v = ready.front();
    ready.pop_front();
    ++seen;
    for (const auto& w : out[v]) {
      if (--indegree[w] == 0) ready.push_back(w);
    }
  }
  return seen == indegree.size();
}

namespace {

void require_vertex(const Complex& p, const std::string& v) {
  if (!p.contains(0, v)) throw UnknownCell(CellRef{0, v});
}

// Paths as sequences of edge indices; indices follow id order, so comparing
// index sequences is comparing id sequences.
struct IndexedPaths {
  std::vector<std::string> edge_ids;
  std::vector<std::vector<int>> paths;
};

IndexedPaths enumerate_indexed(const Complex& p, const std::string& from, const std::string& to,
                               std::size_t max_paths) {
  require_vertex(p, from);
  require_vertex(p, to);
  if (!one_skeleton_is_acyclic(p)) throw NotAcyclic("the 1-skeleton has a directed cycle");

  IndexedPaths out;
  std::map<std::string, int> index;
  std::map<std::string, std::vector<int>> outgoing;
  std::map<std::string, std::vector<std::string>> incoming;
  for (const auto& [e, f] : p.level(1)) {
    int id = static_cast<int>(out.edge_ids.size());
    out.edge_ids.push_back(e);
    index[e] = id;
    outgoing[f[0][0]].push_back(id);
    incoming[f[0][1]].push_back(f[0][0]);
  }

  // Vertices from which `to` is reachable; everything else is a dead end.
  std::set<std::string> useful{to};
  std::vector<std::string> stack{to};
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    for (const auto& u : incoming[v]) {
      if (useful.insert(u).second) stack.push_back(u);
    }
  }
  if (!useful.contains(from)) return out;

  std::vector<int> current;
  std::function<void(const std::string&)> walk = [&](const std::string& v) {
    if (v == to) {
      if (out.paths.size() >= max_paths) throw PathExplosion(max_paths);
      out.paths.push_back(current);
      return;
    }
    for (int e : outgoing[v]) {
      const auto& next = p.face({1, out.edge_ids[e]}, 1, 1);
      if (!useful.contains(next)) continue;
      current.push_back(e);
      walk(next);
      current.pop_back();
    }
  };
  walk(from);
  return out;
}

EdgePath to_edge_path(const IndexedPaths& ip, const std::vector<int>& path, const std::string& from) {
  EdgePath out{from, {}};
  out.edges.reserve(path.size());
  for (int e : path) out.edges.push_back(ip.edge_ids[e]);
  return out;
}

}  // namespace

std::vector<EdgePath> enumerate_dipaths(const Complex& p, const std::string& from, const std::string& to,
                                        std::size_t max_paths) {
  auto ip = enumerate_indexed(p, from, to, max_paths);
  std::vector<EdgePath> out;
  out.reserve(ip.paths.size());
  for (const auto& path : ip.paths) out.push_back(to_edge_path(ip, path, from));
  return out;
}

std::vector<std::vector<EdgePath>> dihomotopy_classes(const Complex& p, const std::string& from,
                                                      const std::string& to, std::size_t max_paths) {
  auto ip = enumerate_indexed(p, from, to, max_paths);

  std::map<std::string, int> index;
  for (std::size_t e = 0; e < ip.edge_ids.size(); ++e) index[ip.edge_ids[e]] = static_cast<int>(e);

  // Each square relates its lower corner path to its upper corner path.
  std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> exchanges;
  for (const auto& [s, f] : p.level(2)) {
    std::pair<int, int> lower{index.at(f[1][0]), index.at(f[0][1])};
    std::pair<int, int> upper{index.at(f[0][0]), index.at(f[1][1])};
    exchanges[lower].push_back(upper);
    exchanges[upper].push_back(lower);
  }

  std::map<std::vector<int>, std::size_t> position;
  for (std::size_t t = 0; t < ip.paths.size(); ++t) position.emplace(ip.paths[t], t);

  UnionFind classes(ip.paths.size());
  for (std::size_t t = 0; t < ip.paths.size(); ++t) {
    const auto& path = ip.paths[t];
    for (std::size_t pos = 0; pos + 1 < path.size(); ++pos) {
      auto it = exchanges.find({path[pos], path[pos + 1]});
      if (it == exchanges.end()) continue;
      for (auto [first, second] : it->second) {
        auto swapped = path;
        swapped[pos] = first;
        swapped[pos + 1] = second;
        // An exchange of a composable path is composable with the same ends.
        classes.join(t, position.at(swapped));
      }
    }
  }

  // Paths are enumerated in lexicographic order, so the first member seen
  // of each class is its least element and classes come out ordered.
  std::map<std::size_t, std::size_t> slot;
  std::vector<std::vector<EdgePath>> out;
  for (std::size_t t = 0; t < ip.paths.size(); ++t) {
    auto root = classes.find(t);
    auto [it, inserted] = slot.emplace(root, out.size());
    if (inserted) out.emplace_back();
    out[it->second].push_back(to_edge_path(ip, ip.paths[t], from));
  }
  return out;
}

FbgTable fundamental_bipartite_graph(const Complex& p, std::size_t max_paths) {
  if (!one_skeleton_is_acyclic(p)) throw NotAcyclic("the 1-skeleton has a directed cycle");
  FbgTable table;
  auto mins = minimal_vertices(p);
  auto maxs = maximal_vertices(p);
  table.minimals.assign(mins.begin(), mins.end());
  table.maximals.assign(maxs.begin(), maxs.end());
  for (const auto& m : table.minimals) {
    for (const auto& big : table.maximals) {
      ClassSummary summary;
      for (auto& cls : dihomotopy_classes(p, m, big, max_paths)) {
        summary.representatives.push_back(std::move(cls.front()));
      }
      summary.count = summary.representatives.size();
      table.classes.emplace(std::make_pair(m, big), std::move(summary));
    }
  }
  return table;
}

bool fbg_equal(const FbgTable& a, const FbgTable& b) {
  if (a.minimals != b.minimals || a.maximals != b.maximals) return false;
  for (const auto& [key, summary] : a.classes) {
    if (b.count(key.first, key.second) != summary.count) return false;
  }
  return a.classes.size() == b.classes.size();
}

bool fbg_count_profile_equal(const FbgTable& a, const FbgTable& b) {
  if (a.minimals.size() != b.minimals.size() || a.maximals.size() != b.maximals.size()) return false;
  auto counts = [](const FbgTable& t) {
    std::vector<std::size_t> out;
    for (const auto& [_, s] : t.classes) out.push_back(s.count);
    std::sort(out.begin(), out.end());
    return out;
  };
  return counts(a) == counts(b);
}

}  // namespace precubical
