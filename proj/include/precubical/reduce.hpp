#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "precubical/complex.hpp"
#include "precubical/errors.hpp"

namespace precubical {

enum class ReductionKind { edge_collapse, square_one_free, square_two_free };

std::string to_string(ReductionKind kind);
/// Parses "edge-collapse", "square-one-free" or "square-two-free".
std::optional<ReductionKind> parse_reduction_kind(const std::string& name);

enum class Mode { check, apply };

struct Condition {
  std::string label;  // "reg", "i", "ii", "iii"
  std::string description;
  bool holds = true;
  std::vector<CellRef> witnesses;

  bool operator==(const Condition&) const = default;
};

/// Key of a redirected face entry: the cell, face index i and side k.
struct FaceSlot {
  CellRef cell;
  int i = 1;
  int k = 0;
  auto operator<=>(const FaceSlot&) const = default;
  bool operator==(const FaceSlot&) const = default;
};

struct ReductionCertificate {
  ReductionKind kind = ReductionKind::edge_collapse;
  CellRef cell;
  /// Only meaningful for square-two-free; 0 otherwise.
  int a = 0;
  int b = 0;
  std::vector<Condition> conditions;
  std::set<CellRef> removed;
  std::map<FaceSlot, std::string> redirected;
  /// The set Y of edge-collapse and square-two-free.
  std::optional<std::set<CellRef>> y;
  /// Cells of the subcomplex R of square-two-free.
  std::optional<std::set<CellRef>> r;
  bool fbg_guaranteed = false;

  bool conditions_hold() const;
  std::vector<std::string> failed_labels() const;
  bool operator==(const ReductionCertificate&) const = default;
};

struct ReductionResult {
  std::optional<Complex> complex;  // set in apply mode
  ReductionCertificate certificate;
};

struct ApplyOptions {
  /// Apply even when Y is empty and the FBG guarantee is lost.
  bool allow_empty_y = false;
};

class ConditionsFailed : public Error {
 public:
  explicit ConditionsFailed(ReductionCertificate cert);
  const ReductionCertificate& certificate() const { return cert_; }

 private:
  ReductionCertificate cert_;
};

class GuaranteeLost : public Error {
 public:
  explicit GuaranteeLost(ReductionCertificate cert);
  const ReductionCertificate& certificate() const { return cert_; }

 private:
  ReductionCertificate cert_;
};

/// Collapse of a regular edge x onto its endpoint d_1^b x, removing the
/// endpoint d_1^{1-b} x and redirecting the edges in Y.
ReductionResult edge_collapse(const Complex& p, const std::string& x, int b, Mode mode,
                              ApplyOptions options = {});

/// Removal of a square together with its free faces d_1^{1-b} x, d_2^b x and
/// their shared corner.
ReductionResult square_one_free(const Complex& p, const std::string& x, int b, Mode mode,
                                ApplyOptions options = {});

/// Removal of a square together with its free face d_{3-a}^b x.
ReductionResult square_two_free(const Complex& p, const std::string& x, int a, int b, Mode mode,
                                ApplyOptions options = {});

// ---------------------------------------------------------------------------
// Scheduling

struct RecipeStep {
  ReductionKind kind = ReductionKind::edge_collapse;
  std::string cell;
  int a = 0;  // square-two-free only
  int b = 0;
  bool operator==(const RecipeStep&) const = default;
};

/// Dispatches one step to the matching reduction.
ReductionResult apply_step(const Complex& p, const RecipeStep& step, Mode mode,
                           ApplyOptions options = {});

class RecipeStepFailed : public Error {
 public:
  RecipeStepFailed(std::size_t index, RecipeStep step, ReductionCertificate cert, std::string why);
  std::size_t index() const { return index_; }
  const RecipeStep& step() const { return step_; }
  const ReductionCertificate& certificate() const { return cert_; }

 private:
  std::size_t index_;
  RecipeStep step_;
  ReductionCertificate cert_;
};

enum class Policy { greedy, recipe };

struct AutoReduceResult {
  Complex complex;
  std::vector<ReductionCertificate> trail;
};

/// Recipe mode applies the steps in order; greedy mode repeatedly applies the
/// first guaranteed reduction in canonical scan order until none applies.
AutoReduceResult auto_reduce(const Complex& p, Policy policy,
                             const std::vector<RecipeStep>& recipe = {});

}  // namespace precubical
