#pragma once

// Shared generators and independent oracles for the test suites.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "precubical/complex.hpp"
#include "precubical/fbg.hpp"
#include "precubical/model_io.hpp"
#include "precubical/reduce.hpp"

namespace testing_support {

using namespace precubical;

struct RandomInstance {
  GridSpec grid;
  Complex complex;
  int dangling = 0;
};

inline std::set<GridCoord> random_holes(std::mt19937& rng, int m, int n) {
  std::set<GridCoord> holes;
  std::bernoulli_distribution coin(0.25);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      if (coin(rng)) holes.insert({i, j});
    }
  }
  return holes;
}

/// Adds `count` edges hanging off random grid vertices: either t<k> -> v or
/// v -> t<k> for a fresh vertex t<k>.
inline Complex add_dangling_edges(const Complex& p, std::mt19937& rng, int count) {
  auto recs = p.records();
  std::vector<std::string> vertices;
  for (const auto& [v, _] : p.level(0)) vertices.push_back(v);
  std::uniform_int_distribution<std::size_t> pick(0, vertices.size() - 1);
  std::bernoulli_distribution inward(0.5);
  for (int k = 0; k < count; ++k) {
    std::string t = "t" + std::to_string(k);
    std::string g = "g" + std::to_string(k);
    const auto& v = vertices[pick(rng)];
    recs.push_back({0, t, {}});
    if (inward(rng)) {
      recs.push_back({1, g, {{t, v}}});
    } else {
      recs.push_back({1, g, {{v, t}}});
    }
  }
  return Complex::from_records(recs);
}

/// Random grid_with_holes instance, m, n <= max_side, with up to
/// max_dangling dangling edges.
inline RandomInstance random_instance(std::mt19937& rng, int max_side = 4, int max_dangling = 3) {
  std::uniform_int_distribution<int> side(1, max_side);
  std::uniform_int_distribution<int> extra(0, max_dangling);
  RandomInstance out;
  out.grid.m = side(rng);
  out.grid.n = side(rng);
  out.grid.holes = random_holes(rng, out.grid.m, out.grid.n);
  out.dangling = extra(rng);
  out.complex = add_dangling_edges(grid_with_holes(out.grid), rng, out.dangling);
  return out;
}

/// A square glued into a cylinder: left and right faces are the same edge.
/// Valid but not regular.
inline Complex with_cylinder(const Complex& p, const std::string& tag) {
  auto recs = p.records();
  std::string u = "cu" + tag, v = "cv" + tag;
  recs.push_back({0, u, {}});
  recs.push_back({0, v, {}});
  recs.push_back({1, "ce" + tag, {{u, v}}});
  recs.push_back({1, "ca" + tag, {{u, u}}});
  recs.push_back({1, "cb" + tag, {{v, v}}});
  recs.push_back({2, "cs" + tag, {{"ce" + tag, "ce" + tag}, {"ca" + tag, "cb" + tag}}});
  return Complex::from_records(recs);
}

inline std::uint64_t binomial(int n, int k) {
  std::uint64_t r = 1;
  for (int t = 1; t <= k; ++t) r = r * static_cast<std::uint64_t>(n - k + t) / static_cast<std::uint64_t>(t);
  return r;
}

/// Dihomotopy class count between opposite corners of a holed grid, computed
/// geometrically: a monotone lattice path is classified by which holes lie
/// above it, and the number of distinct classifications is the class count.
/// Independent of the complex and of the exchange relation.
inline std::size_t hole_side_classes(const GridSpec& g) {
  std::set<std::vector<bool>> signatures;
  std::vector<int> height_at_column(g.m, 0);  // path height while crossing column i
  std::function<void(int, int)> walk = [&](int i, int j) {
    if (i == g.m && j == g.n) {
      std::vector<bool> sig;
      for (const auto& [hi, hj] : g.holes) sig.push_back(hj >= height_at_column[hi]);
      signatures.insert(sig);
      return;
    }
    if (i < g.m) {
      height_at_column[i] = j;
      walk(i + 1, j);
    }
    if (j < g.n) walk(i, j + 1);
  };
  walk(0, 0);
  return signatures.size();
}

// ---------------------------------------------------------------------------
// Reduction oracles. These recompute the theorem formulas by scanning the
// whole complex, without the incidence index the library uses.

/// True iff some square has `edge` among its four faces.
inline bool edge_in_some_square(const Complex& p, const std::string& edge, const std::string& except = {}) {
  for (const auto& [s, faces] : p.level(2)) {
    if (s == except) continue;
    for (const auto& pair : faces) {
      if (pair[0] == edge || pair[1] == edge) return true;
    }
  }
  return false;
}

inline std::set<std::string> edges_touching(const Complex& p, const std::string& v) {
  std::set<std::string> out;
  for (const auto& [e, faces] : p.level(1)) {
    if (faces[0][0] == v || faces[0][1] == v) out.insert(e);
  }
  return out;
}

struct Expected {
  bool conditions = false;
  std::set<CellRef> removed;
  std::optional<std::set<CellRef>> y;
  std::map<FaceSlot, std::string> redirected;
};

inline Expected expected_edge_collapse(const Complex& p, const std::string& x, int b) {
  Expected out;
  const std::string gone = p.face({1, x}, 1, 1 - b);
  const std::string keep = p.face({1, x}, 1, b);
  bool i_ok = true, ii_ok = true;
  std::set<CellRef> y;
  for (const auto& [e, faces] : p.level(1)) {
    if (e != x && faces[0][1 - b] == gone) i_ok = false;
    if (faces[0][b] == gone) y.insert({1, e});
  }
  for (const auto& e : edges_touching(p, gone)) {
    if (edge_in_some_square(p, e)) ii_ok = false;
  }
  out.conditions = is_regular(p, {1, x}) && i_ok && ii_ok;
  out.removed = {{1, x}, {0, gone}};
  for (const auto& c : y) out.redirected[{c, 1, b}] = keep;
  out.y = y;
  return out;
}

inline Expected expected_one_free(const Complex& p, const std::string& x, int b) {
  Expected out;
  const CellRef sq{2, x};
  const std::string side = p.face(sq, 1, 1 - b);
  const std::string floor = p.face(sq, 2, b);
  const std::string corner = p.face({1, floor}, 1, 1 - b);
  bool i_ok = !edge_in_some_square(p, side, x) && !edge_in_some_square(p, floor, x);
  bool ii_ok = edges_touching(p, corner) == std::set<std::string>{side, floor};
  out.conditions = is_regular(p, sq) && i_ok && ii_ok;
  out.removed = {sq, {1, side}, {1, floor}, {0, corner}};
  return out;
}

inline Expected expected_two_free(const Complex& p, const std::string& x, int a, int b) {
  Expected out;
  const CellRef sq{2, x};
  const std::string stay = p.face(sq, a, 1 - b);
  const std::string free = p.face(sq, 3 - a, b);
  const std::string pivot = p.face({1, stay}, 1, b);
  const std::string corner = p.face({1, free}, 1, 1 - b);
  bool i_ok = !edge_in_some_square(p, stay, x) && !edge_in_some_square(p, free, x);
  bool ii_ok = true, iii_ok = true;
  std::set<CellRef> y;
  for (const auto& [e, faces] : p.level(1)) {
    if (e != stay && faces[0][b] == pivot) ii_ok = false;
    if (e != free && faces[0][1 - b] == corner) {
      y.insert({1, e});
      if (edge_in_some_square(p, e)) iii_ok = false;
    }
  }
  out.conditions = is_regular(p, sq) && i_ok && ii_ok && iii_ok;
  out.removed = {sq, {1, free}};
  out.y = y;
  return out;
}

inline Expected expected_for(const Complex& p, const RecipeStep& s) {
  switch (s.kind) {
    case ReductionKind::edge_collapse: return expected_edge_collapse(p, s.cell, s.b);
    case ReductionKind::square_one_free: return expected_one_free(p, s.cell, s.b);
    case ReductionKind::square_two_free: return expected_two_free(p, s.cell, s.a, s.b);
  }
  return {};
}

/// Every (kind, params) combination for every cell of degree 1 or 2.
inline std::vector<RecipeStep> all_candidate_steps(const Complex& p) {
  std::vector<RecipeStep> out;
  for (const auto& [s, _] : p.level(2)) {
    for (int b = 0; b <= 1; ++b) out.push_back({ReductionKind::square_one_free, s, 0, b});
    for (int a = 1; a <= 2; ++a) {
      for (int b = 0; b <= 1; ++b) out.push_back({ReductionKind::square_two_free, s, a, b});
    }
  }
  for (const auto& [e, _] : p.level(1)) {
    for (int b = 0; b <= 1; ++b) out.push_back({ReductionKind::edge_collapse, e, 0, b});
  }
  return out;
}

inline std::set<CellRef> cell_set(const Complex& p) {
  auto cells = p.cells();
  return {cells.begin(), cells.end()};
}

/// Structural clauses for one applied reduction. Returns a description of the
/// first violated clause, or an empty string.
inline std::string structural_violation(const Complex& p, const ReductionCertificate& cert, const Complex& q) {
  if (!validate(q).ok()) return "output fails validate: " + validate(q).to_string();
  if (euler_characteristic(p) != euler_characteristic(q)) return "Euler characteristic changed";
  std::set<CellRef> expected = cell_set(p);
  for (const auto& c : cert.removed) expected.erase(c);
  if (cell_set(q) != expected) return "output cells are not P minus the removed cells";

  if (cert.kind == ReductionKind::edge_collapse) {
    std::set<CellRef> common = expected;
    for (const auto& c : *cert.y) common.erase(c);
    Complex from_p = restrict_to(p, common);
    Complex from_q = restrict_to(q, common);
    if (!(from_p == from_q)) return "Q minus Y differs from P minus (Y, x, vertex)";
    if (!is_subcomplex(p, from_p) || !is_subcomplex(q, from_q)) return "Q minus Y is not a common subcomplex";
    for (const auto& [slot, value] : cert.redirected) {
      if (q.face(slot.cell, slot.i, slot.k) != value) return "redirect not applied to " + slot.cell.id;
    }
  } else {
    if (!is_subcomplex(p, q)) return "Q is not a subcomplex of P";
  }
  if (cert.kind == ReductionKind::square_two_free) {
    Complex r = restrict_to(q, *cert.r);
    if (!is_subcomplex(q, r)) return "R is not a subcomplex of Q";
    if (cert.fbg_guaranteed) {
      for (const auto& v : extremal_vertices(q)) {
        if (!cert.r->contains({0, v})) return "extremal vertex " + v + " outside R";
      }
    }
  }
  return {};
}

/// Certificate fields checked against the oracle formulas.
inline std::string certificate_violation(const Complex& p, const RecipeStep& step, const ReductionCertificate& cert) {
  Expected e = expected_for(p, step);
  if (cert.conditions_hold() != e.conditions) return "condition verdict disagrees with oracle";
  if (cert.removed != e.removed) return "removed set disagrees with oracle";
  if (cert.y != e.y) return "Y disagrees with oracle";
  if (cert.redirected != e.redirected) return "redirected map disagrees with oracle";
  bool guaranteed = step.kind == ReductionKind::square_one_free || (cert.y && !cert.y->empty());
  if (cert.fbg_guaranteed != guaranteed) return "fbg_guaranteed disagrees with Y";
  return {};
}

}  // namespace testing_support
