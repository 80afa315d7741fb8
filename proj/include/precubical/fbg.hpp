#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "precubical/complex.hpp"
#include "precubical/errors.hpp"

namespace precubical {

/// A composable sequence of edges starting at a vertex.
struct EdgePath {
  std::string start;
  std::vector<std::string> edges;

  /// d_1^1 of the last edge, or start for the empty path.
  std::string end(const Complex& p) const;
  bool is_composable(const Complex& p) const;

  bool operator==(const EdgePath&) const = default;
  auto operator<=>(const EdgePath&) const = default;
};

class NotAcyclic : public Error {
 public:
  using Error::Error;
};

class PathExplosion : public Error {
 public:
  explicit PathExplosion(std::size_t cap);
};

inline constexpr std::size_t kDefaultMaxPaths = 1'000'000;

bool one_skeleton_is_acyclic(const Complex& p);

/// All directed edge paths from `from` to `to`, in lexicographic order of the
/// edge id sequence.
std::vector<EdgePath> enumerate_dipaths(const Complex& p, const std::string& from, const std::string& to,
                                        std::size_t max_paths = kDefaultMaxPaths);

/// Classes of enumerate_dipaths under elementary square exchanges
/// [d_2^0 s, d_1^1 s] <-> [d_1^0 s, d_2^1 s]. Each class is sorted and the
/// classes are ordered by their least element.
std::vector<std::vector<EdgePath>> dihomotopy_classes(const Complex& p, const std::string& from,
                                                      const std::string& to,
                                                      std::size_t max_paths = kDefaultMaxPaths);

struct ClassSummary {
  std::size_t count = 0;
  std::vector<EdgePath> representatives;  // least path of each class
};

struct FbgTable {
  std::vector<std::string> minimals;
  std::vector<std::string> maximals;
  std::map<std::pair<std::string, std::string>, ClassSummary> classes;

  std::size_t count(const std::string& from, const std::string& to) const;
};

FbgTable fundamental_bipartite_graph(const Complex& p, std::size_t max_paths = kDefaultMaxPaths);

/// Equal vertex sets and equal counts on every (minimal, maximal) pair.
bool fbg_equal(const FbgTable& a, const FbgTable& b);

/// Weaker comparison ignoring vertex names: same number of minimal and
/// maximal vertices and the same multiset of class counts.
bool fbg_count_profile_equal(const FbgTable& a, const FbgTable& b);

}  // namespace precubical
