#include "precubical/model_io.hpp"

namespace precubical {

UnknownFixture::UnknownFixture(const std::string& name) : Error("unknown fixture '" + name + "'") {}

std::string vertex_name(int i, int j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

std::string square_name(int i, int j) { return "s" + vertex_name(i, j); }

namespace {

std::string horizontal_name(int i, int j) { return "h" + vertex_name(i, j); }
std::string vertical_name(int i, int j) { return "v" + vertex_name(i, j); }

}  // namespace

Complex grid_with_holes(int m, int n, const std::set<GridCoord>& holes) {
  if (m < 1 || n < 1) throw OutOfRange("grid dimensions must be positive");
  for (auto [i, j] : holes) {
    if (i < 0 || i >= m || j < 0 || j >= n) {
      throw OutOfRange("hole " + vertex_name(i, j) + " outside a " + std::to_string(m) + "x" +
                       std::to_string(n) + " grid");
    }
  }
  ComplexBuilder b;
  for (int i = 0; i <= m; ++i) {
    for (int j = 0; j <= n; ++j) b.vertex(vertex_name(i, j), {i, j});
  }
  for (int i = 0; i <= m; ++i) {
    for (int j = 0; j <= n; ++j) {
      if (i < m) b.edge(horizontal_name(i, j), vertex_name(i, j), vertex_name(i + 1, j));
      if (j < n) b.edge(vertical_name(i, j), vertex_name(i, j), vertex_name(i, j + 1));
    }
  }
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      if (holes.contains({i, j})) continue;
      b.square(square_name(i, j), vertical_name(i, j), vertical_name(i + 1, j), horizontal_name(i, j),
               horizontal_name(i, j + 1));
    }
  }
  return b.build();
}

Complex grid_with_holes(const GridSpec& spec) { return grid_with_holes(spec.m, spec.n, spec.holes); }

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names{
      "interval", "circle",       "double_edge",  "path2",        "square",
      "square_plus_tail", "shared_memory", "holes_example", "ordered_holes_example", "swiss_flag"};
  return names;
}

std::optional<GridSpec> fixture_grid(const std::string& name) {
  // Two processes of three actions each, exclusive in their middle action.
  if (name == "shared_memory") return GridSpec{3, 3, {{1, 1}}};
  if (name == "holes_example") return GridSpec{5, 5, {{1, 3}, {3, 1}}};
  if (name == "ordered_holes_example") return GridSpec{4, 4, {{1, 2}, {2, 1}}};
  if (name == "swiss_flag") return GridSpec{5, 5, {{2, 1}, {1, 2}, {2, 2}, {3, 2}, {2, 3}}};
  return std::nullopt;
}

namespace {

ComplexBuilder square_builder() {
  ComplexBuilder b;
  b.vertex("w00", {0, 0}).vertex("w10", {1, 0}).vertex("w01", {0, 1}).vertex("w11", {1, 1});
  b.edge("eB", "w00", "w10").edge("eT", "w01", "w11").edge("eL", "w00", "w01").edge("eR", "w10", "w11");
  b.square("s", "eL", "eR", "eB", "eT");
  return b;
}

}  // namespace

Complex named_fixture(const std::string& name) {
  if (auto grid = fixture_grid(name)) return grid_with_holes(*grid);
  if (name == "interval") {
    return ComplexBuilder().vertex("a0", {0, 0}).vertex("a1", {1, 0}).edge("e", "a0", "a1").build();
  }
  if (name == "circle") return ComplexBuilder().vertex("v", {0, 0}).edge("e", "v", "v").build();
  if (name == "double_edge") {
    return ComplexBuilder().vertex("u", {0, 0}).vertex("w", {1, 1}).edge("p", "u", "w").edge("q", "u", "w").build();
  }
  if (name == "path2") {
    return ComplexBuilder()
        .vertex("v0", {0, 0})
        .vertex("v1", {1, 0})
        .vertex("v2", {2, 0})
        .edge("e1", "v0", "v1")
        .edge("e2", "v1", "v2")
        .build();
  }
  if (name == "square") return square_builder().build();
  if (name == "square_plus_tail") {
    auto b = square_builder();
    b.vertex("t", {1, -1}).edge("g", "t", "w10");
    return b.build();
  }
  throw UnknownFixture(name);
}

}  // namespace precubical
