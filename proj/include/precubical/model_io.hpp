#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "precubical/complex.hpp"
#include "precubical/errors.hpp"
#include "precubical/reduce.hpp"

namespace precubical {

inline constexpr std::string_view kFormatVersion = "pcsv1";

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class UnknownFixture : public Error {
 public:
  explicit UnknownFixture(const std::string& name);
};

/// A pcsv1 text document before validation.
///
///     pcsv1
///     #@name <name>
///     <dim> <id> [d<i>_<k>=<id> ...]
///     #@pos <dim> <id> <x> <y>
///
/// `#` starts a comment; `#@name` and `#@pos` comments carry the optional
/// name and layout metadata.
struct ComplexDocument {
  std::string format_version{kFormatVersion};
  std::optional<std::string> name;
  std::vector<CellRecord> cells;
  std::map<CellRef, GridPosition> positions;
};

ComplexDocument parse_document(std::string_view text);
std::string serialize_document(const ComplexDocument& doc);

/// Parses and validates. Throws SyntaxError or ValidationFailed.
Complex parse(std::string_view text);
std::string serialize(const Complex& p, const std::optional<std::string>& name = std::nullopt);

ComplexDocument to_document(const Complex& p, const std::optional<std::string>& name = std::nullopt);
Complex from_document(const ComplexDocument& doc);

// ---------------------------------------------------------------------------
// Generators

using GridCoord = std::pair<int, int>;

struct GridSpec {
  int m = 1;
  int n = 1;
  std::set<GridCoord> holes;
};

/// An m x n grid of squares with the squares at `holes` left out. Vertex
/// (i,j) is named "(i,j)", edges "h(i,j)": (i,j)->(i+1,j) and
/// "v(i,j)": (i,j)->(i,j+1), squares "s(i,j)".
Complex grid_with_holes(int m, int n, const std::set<GridCoord>& holes = {});
Complex grid_with_holes(const GridSpec& spec);

std::string vertex_name(int i, int j);
std::string square_name(int i, int j);

const std::vector<std::string>& fixture_names();
Complex named_fixture(const std::string& name);

/// Grid parameters of the grid-shaped fixtures (shared_memory and the three
/// worked examples); nullopt for the hand-built ones.
std::optional<GridSpec> fixture_grid(const std::string& name);

// ---------------------------------------------------------------------------
// Recipes

/// One step per line: `<kind> <cell> [<a>] <b>`; `#` comments allowed.
std::vector<RecipeStep> parse_recipe(std::string_view text);
std::string format_recipe(const std::vector<RecipeStep>& steps);

/// Square eliminations for a holed grid, row by row from the top left:
/// squares right of a hole in their row use square-two-free (a,b)=(2,0),
/// squares below a hole in their column use (1,1), all others
/// square-one-free b=1. With `turn` set, the top-down pass stops at the
/// square left of that hole and the remaining squares are eliminated with
/// square-one-free b=0, rows from the bottom, right to left.
std::vector<RecipeStep> linewise_square_recipe(const GridSpec& spec,
                                               const std::optional<GridCoord>& turn = std::nullopt);

/// Guaranteed edge collapses with b=0 until none applies, then with b=1,
/// each time taking the first edge in id order.
std::vector<RecipeStep> edge_collapse_recipe(const Complex& p);

/// Full reduction script for holes_example, ordered_holes_example or swiss_flag.
std::vector<RecipeStep> example_recipe(const std::string& fixture);

// ---------------------------------------------------------------------------

/// Graphviz rendering: vertices as nodes, edges as labelled arcs, squares as
/// comment lines plus plaintext nodes tied by dashed lines to point nodes at the
/// midpoints of their four boundary edges.
std::string export_dot(const Complex& p, const std::optional<std::string>& name = std::nullopt);

}  // namespace precubical
