// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "precubical/complex.hpp"
#include "precubical/fbg.hpp"
#include "precubical/model_io.hpp"
#include "precubical/reduce.hpp"
#include "support.hpp"

using namespace precubical;
using namespace testing_support;

namespace {

struct Verdict {
  bool ok = true;
  std::string detail;
};

class Criterion {
 public:
  explicit Criterion(std::ostringstream& log) : log_(log) {}
  void require(bool cond, const std::string& what) {
    if (!cond && failures_++ < 5) log_ << "    " << what << "\n";
  }
  int failures() const { return failures_; }

 private:
  std::ostringstream& log_;
  int failures_ = 0;
};

using Clock = std::chrono::steady_clock;

int run(int number, const std::string& title, double limit_s, const std::function<std::string(Criterion&)>& body) {
  std::ostringstream log;
  Criterion c(log);
  std::string summary;
  auto start = Clock::now();
  try {
    summary = body(c);
  } catch (const std::exception& e) {
    c.require(false, std::string("unexpected exception: ") + e.what());
  }
  double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (limit_s > 0) {
    std::ostringstream msg;
    msg << "took " << secs << " s, limit " << limit_s << " s";
    c.require(secs < limit_s, msg.str());
  }
  bool ok = c.failures() == 0;
  std::printf("[%s] %d. %s: %s (%.3f s)\n", ok ? "PASS" : "FAIL", number, title.c_str(), summary.c_str(), secs);
  if (!ok) std::cout << log.str();
  return ok ? 0 : 1;
}

std::string cell_name(const CellRef& c) { return c.id + "/" + std::to_string(c.degree); }

// Shared sweep for criteria 3 and 4.
struct SweepStats {
  int instances = 0;
  int applied = 0;
  int guaranteed = 0;
  std::vector<std::string> fbg_violations;
  std::vector<std::string> structural_violations;
};

void check_application(const Complex& p, const RecipeStep& step, SweepStats& stats) {
  auto check = apply_step(p, step, Mode::check);
  if (!check.certificate.conditions_hold()) return;
  auto res = apply_step(p, step, Mode::apply, {.allow_empty_y = true});
  const auto& cert = res.certificate;
  const auto& q = *res.complex;
  ++stats.applied;
  std::string where = to_string(step.kind) + " " + step.cell;
  if (auto why = certificate_violation(p, step, cert); !why.empty()) {
    stats.structural_violations.push_back(where + ": " + why);
  }
  if (auto why = structural_violation(p, cert, q); !why.empty()) {
    stats.structural_violations.push_back(where + ": " + why);
  }
  if (!cert.fbg_guaranteed) return;
  ++stats.guaranteed;
  if (extremal_vertices(p) != extremal_vertices(q)) stats.fbg_violations.push_back(where + ": extremal set changed");
  if (!fbg_equal(fundamental_bipartite_graph(p), fundamental_bipartite_graph(q))) {
    stats.fbg_violations.push_back(where + ": FBG changed");
  }
}

SweepStats sweep() {
  SweepStats stats;
  std::mt19937 rng(20240601);
  for (int round = 0; round < 200; ++round) {
    auto inst = random_instance(rng, 4, 3);
    ++stats.instances;
    // Every candidate on the instance itself, then every candidate along
    // the greedy trail so reductions also see partially reduced complexes.
    for (const auto& step : all_candidate_steps(inst.complex)) check_application(inst.complex, step, stats);
    auto greedy = auto_reduce(inst.complex, Policy::greedy);
    Complex cur = inst.complex;
    for (const auto& cert : greedy.trail) {
      RecipeStep step{cert.kind, cert.cell.id, cert.a, cert.b};
      check_application(cur, step, stats);
      cur = *apply_step(cur, step, Mode::apply).complex;
    }
  }
  return stats;
}

}  // namespace

int main() {
  int failed = 0;

  failed += run(1, "shared-memory class count", 1.0, [](Criterion& c) {
    auto p = grid_with_holes(3, 3, {{1, 1}});
    auto paths = enumerate_dipaths(p, vertex_name(0, 0), vertex_name(3, 3));
    auto classes = dihomotopy_classes(p, vertex_name(0, 0), vertex_name(3, 3));
    auto table = fundamental_bipartite_graph(p);
    c.require(paths.size() == 20, "expected 20 paths, got " + std::to_string(paths.size()));
    c.require(paths.size() == binomial(6, 3), "path count differs from C(6,3)");
    c.require(classes.size() == 2, "expected 2 classes, got " + std::to_string(classes.size()));
    c.require(table.classes.size() == 1 && table.count(vertex_name(0, 0), vertex_name(3, 3)) == 2,
              "FBG table is not the single pair with count 2");
    return std::to_string(classes.size()) + " classes over " + std::to_string(paths.size()) + " paths";
  });

  failed += run(2, "greedy reduction to the double edge", 1.0, [](Criterion& c) {
    auto res = auto_reduce(named_fixture("shared_memory"), Policy::greedy);
    auto iso = are_isomorphic(res.complex, named_fixture("double_edge"));
    c.require(iso.has_value(), "result is not isomorphic to double_edge");
    return std::to_string(res.trail.size()) + " steps, " + std::to_string(res.complex.count(0)) + " vertices, " +
           std::to_string(res.complex.count(1)) + " edges";
  });

  SweepStats stats;
  failed += run(3, "FBG preservation on random instances", 60.0, [&](Criterion& c) {
    stats = sweep();
    for (const auto& v : stats.fbg_violations) c.require(false, v);
    c.require(stats.guaranteed > 0, "no guaranteed reduction was exercised");
    return std::to_string(stats.instances) + " instances, " + std::to_string(stats.guaranteed) +
           " guaranteed reductions, " + std::to_string(stats.fbg_violations.size()) + " violations";
  });

  failed += run(4, "structural conservation", 0, [&](Criterion& c) {
    for (const auto& v : stats.structural_violations) c.require(false, v);
    c.require(stats.applied > 0, "no reduction was applied");
    return std::to_string(stats.applied) + " applied reductions, " +
           std::to_string(stats.structural_violations.size()) + " violations";
  });

  failed += run(5, "duality commutation", 0, [](Criterion& c) {
    std::mt19937 rng(777);
    int edges = 0, squares = 0;
    for (int round = 0; round < 100; ++round) {
      auto p = random_instance(rng, 4, 3).complex;
      auto op = opposite(p);
      auto tr = transpose(p);
      const ApplyOptions force{.allow_empty_y = true};
      for (const auto& [e, _] : p.level(1)) {
        bool direct = edge_collapse(p, e, 1, Mode::check).certificate.conditions_hold();
        bool dual = edge_collapse(op, e, 0, Mode::check).certificate.conditions_hold();
        c.require(direct == dual, "edge " + e + ": conditions differ between P and its opposite");
        if (!direct || !dual) continue;
        auto q = *edge_collapse(p, e, 1, Mode::apply, force).complex;
        auto q_dual = opposite(*edge_collapse(op, e, 0, Mode::apply, force).complex);
        c.require(q == q_dual, "edge " + e + ": collapse with b=1 is not the opposite of b=0");
        ++edges;
      }
      for (const auto& [s, _] : p.level(2)) {
        for (int b = 0; b <= 1; ++b) {
          bool direct = square_two_free(p, s, 2, b, Mode::check).certificate.conditions_hold();
          bool dual = square_two_free(tr, s, 1, b, Mode::check).certificate.conditions_hold();
          c.require(direct == dual, "square " + s + ": conditions differ between P and its transpose");
          if (!direct || !dual) continue;
          auto q = *square_two_free(p, s, 2, b, Mode::apply, force).complex;
          auto q_dual = transpose(*square_two_free(tr, s, 1, b, Mode::apply, force).complex);
          c.require(q == q_dual, "square " + s + ": a=2 is not the transpose of a=1");
          ++squares;
        }
      }
    }
    c.require(edges > 0 && squares > 0, "no applicable cell was compared");
    return std::to_string(edges) + " edge and " + std::to_string(squares) + " square comparisons";
  });

  failed += run(6, "refusal correctness", 0, [](Criterion& c) {
    auto de = named_fixture("double_edge");
    for (int b = 0; b <= 1; ++b) {
      auto cert = edge_collapse(de, "p", b, Mode::check).certificate;
      std::string tag = "double_edge b=" + std::to_string(b) + ": ";
      c.require(cert.failed_labels() == std::vector<std::string>{"i"}, tag + "expected exactly (i) to fail");
      for (const auto& cond : cert.conditions) {
        if (cond.label != "i") continue;
        c.require(cond.witnesses == std::vector<CellRef>{{1, "q"}}, tag + "witness is not q");
      }
      bool refused = false;
      try {
        edge_collapse(de, "p", b, Mode::apply);
      } catch (const ConditionsFailed&) {
        refused = true;
      }
      c.require(refused, tag + "apply did not refuse");
    }
    auto cert = square_one_free(named_fixture("square_plus_tail"), "s", 0, Mode::check).certificate;
    c.require(cert.failed_labels() == std::vector<std::string>{"ii"}, "square_plus_tail: expected exactly (ii) to fail");
    for (const auto& cond : cert.conditions) {
      if (cond.label != "ii") continue;
      std::string got;
      for (const auto& w : cond.witnesses) got += " " + cell_name(w);
      c.require(cond.witnesses == std::vector<CellRef>{{1, "g"}}, "square_plus_tail: witnesses were" + got);
    }
    return std::string("double_edge refused for b=0,1; square_plus_tail refused with witness g");
  });

  failed += run(7, "worked-example recipes", 10.0, [](Criterion& c) {
    std::string summary;
    for (const std::string name : {"holes_example", "ordered_holes_example", "swiss_flag"}) {
      auto p = named_fixture(name);
      auto recipe = example_recipe(name);
      auto before = fundamental_bipartite_graph(p);
      try {
        auto res = auto_reduce(p, Policy::recipe, recipe);
        for (const auto& cert : res.trail) {
          c.require(cert.conditions_hold() && cert.fbg_guaranteed, name + ": step on " + cert.cell.id + " not clean");
        }
        c.require(res.trail.size() == recipe.size(), name + ": recipe did not run to the end");
        c.require(fbg_equal(before, fundamental_bipartite_graph(res.complex)), name + ": FBG changed");
        summary += name + " " + std::to_string(recipe.size()) + " steps -> " + std::to_string(res.complex.count(0)) +
                   "v/" + std::to_string(res.complex.count(1)) + "e; ";
      } catch (const RecipeStepFailed& e) {
        c.require(false, name + ": " + e.what());
      }
    }
    if (!summary.empty()) summary.resize(summary.size() - 2);
    return summary;
  });

  failed += run(8, "oracle sanity on small grids", 0, [](Criterion& c) {
    int grids = 0;
    for (int m = 1; m <= 3; ++m) {
      for (int n = 1; n <= 3; ++n) {
        auto full = dihomotopy_classes(grid_with_holes(m, n), vertex_name(0, 0), vertex_name(m, n)).size();
        c.require(full == 1, "full grid " + std::to_string(m) + "x" + std::to_string(n) + " has " +
                                 std::to_string(full) + " classes");
        ++grids;
        for (int i = 0; i < m; ++i) {
          for (int j = 0; j < n; ++j) {
            auto holed =
                dihomotopy_classes(grid_with_holes(m, n, {{i, j}}), vertex_name(0, 0), vertex_name(m, n)).size();
            c.require(holed == 2, "grid " + std::to_string(m) + "x" + std::to_string(n) + " with hole " +
                                      std::to_string(i) + "," + std::to_string(j) + " has " + std::to_string(holed) +
                                      " classes");
            ++grids;
          }
        }
      }
    }
    return std::to_string(grids) + " grids checked";
  });

  std::printf("%d of 8 criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
