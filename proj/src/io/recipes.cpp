#include <sstream>

#include "precubical/model_io.hpp"

namespace precubical {

std::vector<RecipeStep> parse_recipe(std::string_view text) {
  std::vector<RecipeStep> steps;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    std::vector<std::string> parts;
    for (std::string t; tokens >> t;) parts.push_back(t);
    if (parts.empty()) continue;

    auto kind = parse_reduction_kind(parts[0]);
    if (!kind) throw SyntaxError(lineno, "unknown reduction kind '" + parts[0] + "'");
    const std::size_t expected = *kind == ReductionKind::square_two_free ? 4 : 3;
    if (parts.size() != expected) {
      throw SyntaxError(lineno, parts[0] + " expects " + std::to_string(expected - 1) + " arguments");
    }
    RecipeStep step{*kind, parts[1], 0, 0};
    auto number = [&](const std::string& s, int lo, int hi, const char* what) {
      if (s.size() != 1 || s[0] < '0' + lo || s[0] > '0' + hi) {
        throw SyntaxError(lineno, std::string("bad value for ") + what + ": '" + s + "'");
      }
      return s[0] - '0';
    };
    if (expected == 4) step.a = number(parts[2], 1, 2, "a");
    step.b = number(parts.back(), 0, 1, "b");
    steps.push_back(std::move(step));
  }
  return steps;
}

std::string format_recipe(const std::vector<RecipeStep>& steps) {
  std::ostringstream os;
  for (const auto& s : steps) {
    os << to_string(s.kind) << " " << s.cell;
    if (s.kind == ReductionKind::square_two_free) os << " " << s.a;
    os << " " << s.b << "\n";
  }
  return os.str();
}

std::vector<RecipeStep> linewise_square_recipe(const GridSpec& spec, const std::optional<GridCoord>& turn) {
  auto hole = [&](int i, int j) { return spec.holes.contains({i, j}); };
  auto bottom_up = [&](int i, int j) {
    return turn && (j < turn->second || (j == turn->second && i > turn->first));
  };

  std::vector<RecipeStep> steps;
  for (int j = spec.n - 1; j >= 0; --j) {
    for (int i = 0; i < spec.m; ++i) {
      if (hole(i, j) || bottom_up(i, j)) continue;
      bool right_of_hole = false;
      for (int h = 0; h < i; ++h) right_of_hole |= hole(h, j);
      bool below_hole = false;
      for (int h = j + 1; h < spec.n; ++h) below_hole |= hole(i, h);
      if (right_of_hole) {
        steps.push_back({ReductionKind::square_two_free, square_name(i, j), 2, 0});
      } else if (below_hole) {
        steps.push_back({ReductionKind::square_two_free, square_name(i, j), 1, 1});
      } else {
        steps.push_back({ReductionKind::square_one_free, square_name(i, j), 0, 1});
      }
    }
  }
  if (turn) {
    for (int j = 0; j <= turn->second; ++j) {
      for (int i = spec.m - 1; i >= 0; --i) {
        if (hole(i, j) || !bottom_up(i, j)) continue;
        steps.push_back({ReductionKind::square_one_free, square_name(i, j), 0, 0});
      }
    }
  }
  return steps;
}

std::vector<RecipeStep> edge_collapse_recipe(const Complex& start) {
  std::vector<RecipeStep> steps;
  Complex p = start;
  for (int b : {0, 1}) {
    bool progress = true;
    while (progress) {
      progress = false;
      for (const auto& [e, _] : p.level(1)) {
        RecipeStep step{ReductionKind::edge_collapse, e, 0, b};
        auto checked = apply_step(p, step, Mode::check);
        if (!checked.certificate.conditions_hold() || !checked.certificate.fbg_guaranteed) continue;
        p = *apply_step(p, step, Mode::apply).complex;
        steps.push_back(std::move(step));
        progress = true;
        break;
      }
    }
  }
  return steps;
}

std::vector<RecipeStep> example_recipe(const std::string& fixture) {
  auto grid = fixture_grid(fixture);
  std::optional<GridCoord> turn;
  if (fixture == "ordered_holes_example") {
    turn = GridCoord{2, 1};
  } else if (fixture == "swiss_flag") {
    turn = GridCoord{2, 1};
  } else if (fixture != "holes_example") {
    throw UnknownFixture(fixture + " (no worked reduction script)");
  }
  auto steps = linewise_square_recipe(*grid, turn);
  auto squares_done = auto_reduce(grid_with_holes(*grid), Policy::recipe, steps);
  auto edges = edge_collapse_recipe(squares_done.complex);
  steps.insert(steps.end(), edges.begin(), edges.end());
  return steps;
}

}  // namespace precubical
