#pragma once

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace precubical {

/// A cell named by its degree and an identifier unique within that degree.
struct CellRef {
  int degree = 0;
  std::string id;

  auto operator<=>(const CellRef&) const = default;
  bool operator==(const CellRef&) const = default;
};

std::ostream& operator<<(std::ostream& os, const CellRef& c);

/// faces[i-1][k] holds d_i^k of the owning cell.
using FaceTable = std::vector<std::array<std::string, 2>>;

/// One row of a raw cell table, as read from a document or built by hand.
struct CellRecord {
  int degree = 0;
  std::string id;
  FaceTable faces;

  bool operator==(const CellRecord&) const = default;
};

/// Integer layout position attached to a cell by the generators.
struct GridPosition {
  int x = 0;
  int y = 0;
  bool operator==(const GridPosition&) const = default;
};

/// A finite precubical set given by explicit boundary-operator tables.
///
/// The tables are stored as given; structural soundness (resolvable faces,
/// the cubical identities) is the business of validate(). Operations that
/// list "P valid" as a precondition assume it.
class Complex {
 public:
  using Level = std::map<std::string, FaceTable>;

  Complex() = default;

  /// Builds a complex from raw records. Throws ValidationFailed if an id is
  /// empty or repeated within a degree, or a face table has the wrong shape.
  static Complex from_records(std::span<const CellRecord> records);

  bool empty() const { return levels_.empty(); }
  /// Largest degree with a cell, or nullopt for the empty complex.
  std::optional<int> dimension() const;
  /// Number of stored degrees (dimension + 1, or 0 when empty).
  int num_levels() const { return static_cast<int>(levels_.size()); }

  /// Cells of the given degree, ordered by id. Empty for unused degrees.
  const Level& level(int degree) const;
  std::size_t count(int degree) const { return level(degree).size(); }
  std::size_t total_cells() const;

  bool contains(const CellRef& c) const;
  bool contains(int degree, const std::string& id) const;

  /// d_i^k of the cell. Throws UnknownCell / std::out_of_range.
  const std::string& face(const CellRef& c, int i, int k) const;
  const FaceTable& faces(const CellRef& c) const;

  /// All cells in canonical order: degree ascending, id ascending.
  std::vector<CellRef> cells() const;
  std::vector<CellRecord> records() const;

  const std::map<CellRef, GridPosition>& positions() const { return positions_; }
  void set_position(const CellRef& c, GridPosition p) { positions_[c] = p; }

  /// Cell-for-cell equality of the face tables. Layout metadata is ignored.
  bool operator==(const Complex& other) const { return levels_ == other.levels_; }

 private:
  friend class ComplexBuilder;
  void trim();

  std::vector<Level> levels_;
  std::map<CellRef, GridPosition> positions_;
};

/// Incremental construction of complexes from code. Ids must be unique per
/// degree; faces are not checked until build() is validated by the caller.
class ComplexBuilder {
 public:
  ComplexBuilder& vertex(const std::string& id);
  ComplexBuilder& vertex(const std::string& id, GridPosition p);
  ComplexBuilder& edge(const std::string& id, const std::string& from, const std::string& to);
  /// A square with left/right faces d_1^0, d_1^1 and bottom/top faces d_2^0, d_2^1.
  ComplexBuilder& square(const std::string& id, const std::string& left, const std::string& right,
                         const std::string& bottom, const std::string& top);
  ComplexBuilder& cell(int degree, const std::string& id, FaceTable faces);
  ComplexBuilder& position(const CellRef& c, GridPosition p);

  Complex build() const;

 private:
  std::vector<CellRecord> records_;
  std::map<CellRef, GridPosition> positions_;
};

// ---------------------------------------------------------------------------
// Validation

enum class ViolationKind { duplicate_id, empty_id, bad_face_table, dangling_face, cubical_identity };

struct Violation {
  ViolationKind kind;
  CellRef cell;
  /// (i, j, k, l) of a violated identity d_i^k d_j^l = d_{j-1}^l d_i^k; for a
  /// dangling face only i and k are meaningful.
  int i = 0, j = 0, k = 0, l = 0;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string to_string() const;
};

ValidationReport validate(std::span<const CellRecord> records);
ValidationReport validate(const Complex& p);

// ---------------------------------------------------------------------------
// Standard cubes and cube morphisms

/// The precubical n-cube: words over {0,1,*} of length n, with d_i^k
/// replacing the i-th star by k.
Complex standard_cube(int n);

/// The image of the Yoneda morphism from the standard cube determined by x.
struct CubeMorphismImage {
  int source_dimension = 0;
  std::map<std::string, CellRef> assignment;  // cube word -> cell of P
};

CubeMorphismImage cube_morphism(const Complex& p, const CellRef& x);
bool is_regular(const Complex& p, const CellRef& x);

// ---------------------------------------------------------------------------
// Duality

Complex opposite(const Complex& p);
Complex transpose(const Complex& p);

// ---------------------------------------------------------------------------
// Extremal vertices

std::set<std::string> minimal_vertices(const Complex& p);
std::set<std::string> maximal_vertices(const Complex& p);
std::set<std::string> extremal_vertices(const Complex& p);

// ---------------------------------------------------------------------------
// Subcomplexes and isomorphism

/// True iff q's cells are cells of p with matching face tables and q is
/// closed under faces.
bool is_subcomplex(const Complex& p, const Complex& q);

/// Restriction of p to a set of cells, keeping p's face tables. The result
/// need not be face-closed.
Complex restrict_to(const Complex& p, const std::set<CellRef>& keep);

/// p with the given cells removed.
Complex remove_cells(const Complex& p, const std::set<CellRef>& drop);

using CellMap = std::map<CellRef, CellRef>;

/// A degree-preserving bijection p -> q commuting with all d_i^k, if one exists.
std::optional<CellMap> are_isomorphic(const Complex& p, const Complex& q);

long euler_characteristic(const Complex& p);

}  // namespace precubical
