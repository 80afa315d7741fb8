#include <algorithm>
#include <sstream>

#include "precubical/reduce.hpp"

namespace precubical {

std::string to_string(ReductionKind kind) {
  switch (kind) {
    case ReductionKind::edge_collapse: return "edge-collapse";
    case ReductionKind::square_one_free: return "square-one-free";
    case ReductionKind::square_two_free: return "square-two-free";
  }
  return "?";
}

std::optional<ReductionKind> parse_reduction_kind(const std::string& name) {
  if (name == "edge-collapse") return ReductionKind::edge_collapse;
  if (name == "square-one-free") return ReductionKind::square_one_free;
  if (name == "square-two-free") return ReductionKind::square_two_free;
  return std::nullopt;
}

bool ReductionCertificate::conditions_hold() const {
  return std::all_of(conditions.begin(), conditions.end(), [](const Condition& c) { return c.holds; });
}

std::vector<std::string> ReductionCertificate::failed_labels() const {
  std::vector<std::string> out;
  for (const auto& c : conditions) {
    if (!c.holds) out.push_back(c.label);
  }
  return out;
}

namespace {

std::string describe_failure(const ReductionCertificate& cert) {
  std::ostringstream os;
  os << to_string(cert.kind) << " of '" << cert.cell.id << "' refused: condition";
  for (const auto& c : cert.conditions) {
    if (c.holds) continue;
    os << " (" << c.label << ")";
    if (!c.witnesses.empty()) {
      os << " [witness";
      for (const auto& w : c.witnesses) os << " " << w.id;
      os << "]";
    }
  }
  os << " failed";
  return os.str();
}

}  // namespace

ConditionsFailed::ConditionsFailed(ReductionCertificate cert)
    : Error(describe_failure(cert)), cert_(std::move(cert)) {}

GuaranteeLost::GuaranteeLost(ReductionCertificate cert)
    : Error(to_string(cert.kind) + " of '" + cert.cell.id +
            "' has empty Y: extremal vertices may change (use the empty-Y override to apply anyway)"),
      cert_(std::move(cert)) {}

RecipeStepFailed::RecipeStepFailed(std::size_t index, RecipeStep step, ReductionCertificate cert,
                                   std::string why)
    : Error("recipe step " + std::to_string(index) + " (" + to_string(step.kind) + " " + step.cell +
            "): " + why),
      index_(index),
      step_(std::move(step)),
      cert_(std::move(cert)) {}

namespace {

// Which squares and edges touch a given lower cell.
struct Incidence {
  std::map<std::string, std::vector<std::string>> squares_of_edge;
  std::map<std::string, std::vector<std::string>> edges_of_vertex;

  explicit Incidence(const Complex& p) {
    for (const auto& [s, f] : p.level(2)) {
      for (const auto& pair : f) {
        for (const auto& e : pair) {
          auto& v = squares_of_edge[e];
          if (std::find(v.begin(), v.end(), s) == v.end()) v.push_back(s);
        }
      }
    }
    for (const auto& [e, f] : p.level(1)) {
      edges_of_vertex[f[0][0]].push_back(e);
      if (f[0][1] != f[0][0]) edges_of_vertex[f[0][1]].push_back(e);
    }
  }

  const std::vector<std::string>& squares(const std::string& e) const {
    static const std::vector<std::string> none;
    auto it = squares_of_edge.find(e);
    return it == squares_of_edge.end() ? none : it->second;
  }
  const std::vector<std::string>& edges(const std::string& v) const {
    static const std::vector<std::string> none;
    auto it = edges_of_vertex.find(v);
    return it == edges_of_vertex.end() ? none : it->second;
  }
};

void require_low_dimension(const Complex& p) {
  if (p.num_levels() > 3) {
    throw DimensionUnsupported("reductions require every cell to have degree <= 2 (complex has dimension " +
                               std::to_string(*p.dimension()) + ")");
  }
}

CellRef require_cell(const Complex& p, const std::string& id, int degree) {
  if (p.contains(degree, id)) return {degree, id};
  for (int d = 0; d < p.num_levels(); ++d) {
    if (p.contains(d, id)) throw WrongDegree(id, degree, d);
  }
  throw UnknownCell(CellRef{degree, id});
}

void require_bit(int value, const char* name) {
  if (value != 0 && value != 1) throw OutOfRange(std::string(name) + " must be 0 or 1");
}

Condition regularity(const Complex& p, const CellRef& x) {
  Condition c{"reg", "'" + x.id + "' is regular", true, {}};
  auto image = cube_morphism(p, x);
  std::map<CellRef, int> hits;
  for (const auto& [_, target] : image.assignment) ++hits[target];
  for (const auto& [target, n] : hits) {
    if (n > 1) c.witnesses.push_back(target);
  }
  c.holds = c.witnesses.empty();
  return c;
}

const std::string& endpoint(const Complex& p, const std::string& e, int k) {
  return p.face({1, e}, 1, k);
}

std::set<CellRef> edge_refs(const std::set<std::string>& ids) {
  std::set<CellRef> out;
  for (const auto& id : ids) out.insert({1, id});
  return out;
}

void finish(ReductionResult& result, const Complex& p, Mode mode, const ApplyOptions& options,
            bool needs_y) {
  auto& cert = result.certificate;
  if (mode == Mode::check) return;
  if (!cert.conditions_hold()) throw ConditionsFailed(cert);
  if (needs_y && !cert.fbg_guaranteed && !options.allow_empty_y) throw GuaranteeLost(cert);

  auto recs = remove_cells(p, cert.removed).records();
  for (auto& r : recs) {
    for (int i = 1; i <= r.degree; ++i) {
      for (int k = 0; k <= 1; ++k) {
        auto it = cert.redirected.find(FaceSlot{{r.degree, r.id}, i, k});
        if (it != cert.redirected.end()) r.faces[i - 1][k] = it->second;
      }
    }
  }
  Complex q = Complex::from_records(recs);
  for (const auto& [c, pos] : p.positions()) {
    if (q.contains(c)) q.set_position(c, pos);
  }
  result.complex = std::move(q);
}

}  // namespace

// ---------------------------------------------------------------------------

ReductionResult edge_collapse(const Complex& p, const std::string& x_id, int b, Mode mode,
                              ApplyOptions options) {
  require_low_dimension(p);
  require_bit(b, "b");
  const CellRef x = require_cell(p, x_id, 1);
  const Incidence inc(p);

  ReductionResult result;
  auto& cert = result.certificate;
  cert.kind = ReductionKind::edge_collapse;
  cert.cell = x;
  cert.b = b;

  const std::string& gone = endpoint(p, x_id, 1 - b);  // d_1^{1-b} x
  const std::string& kept = endpoint(p, x_id, b);      // d_1^b x

  cert.conditions.push_back(regularity(p, x));

  Condition c1{"i", "no edge other than '" + x_id + "' has d1_" + std::to_string(1 - b) + " = '" + gone + "'",
               true, {}};
  for (const auto& [y, _] : p.level(1)) {
    if (y != x_id && endpoint(p, y, 1 - b) == gone) c1.witnesses.push_back({1, y});
  }
  c1.holds = c1.witnesses.empty();
  cert.conditions.push_back(std::move(c1));

  Condition c2{"ii", "no edge touching '" + gone + "' lies in the boundary of a square", true, {}};
  for (const auto& e : inc.edges(gone)) {
    const auto& sq = inc.squares(e);
    if (sq.empty()) continue;
    c2.witnesses.push_back({1, e});
    for (const auto& s : sq) c2.witnesses.push_back({2, s});
  }
  c2.holds = c2.witnesses.empty();
  cert.conditions.push_back(std::move(c2));

  std::set<std::string> y;
  for (const auto& [e, _] : p.level(1)) {
    if (endpoint(p, e, b) == gone) y.insert(e);
  }
  cert.y = edge_refs(y);
  cert.removed = {{0, gone}, x};
  for (const auto& e : y) {
    if (e != x_id) cert.redirected[FaceSlot{{1, e}, 1, b}] = kept;
  }
  cert.fbg_guaranteed = !y.empty();

  finish(result, p, mode, options, true);
  return result;
}

ReductionResult square_one_free(const Complex& p, const std::string& x_id, int b, Mode mode,
                                ApplyOptions options) {
  require_low_dimension(p);
  require_bit(b, "b");
  const CellRef x = require_cell(p, x_id, 2);
  const Incidence inc(p);

  ReductionResult result;
  auto& cert = result.certificate;
  cert.kind = ReductionKind::square_one_free;
  cert.cell = x;
  cert.b = b;

  const std::string& side = p.face(x, 1, 1 - b);   // d_1^{1-b} x
  const std::string& floor = p.face(x, 2, b);      // d_2^b x
  const std::string& corner = endpoint(p, floor, 1 - b);  // d_1^{1-b} d_2^b x

  cert.conditions.push_back(regularity(p, x));

  Condition c1{"i", "no square other than '" + x_id + "' has '" + side + "' or '" + floor + "' in its boundary",
               true, {}};
  std::set<std::string> others;
  for (const auto& e : {side, floor}) {
    for (const auto& s : inc.squares(e)) {
      if (s != x_id) others.insert(s);
    }
  }
  for (const auto& s : others) c1.witnesses.push_back({2, s});
  c1.holds = c1.witnesses.empty();
  cert.conditions.push_back(std::move(c1));

  Condition c2{"ii", "the only edges touching '" + corner + "' are '" + side + "' and '" + floor + "'", true, {}};
  for (const auto& e : inc.edges(corner)) {
    if (e != side && e != floor) c2.witnesses.push_back({1, e});
  }
  c2.holds = c2.witnesses.empty();
  cert.conditions.push_back(std::move(c2));

  cert.removed = {x, {1, side}, {1, floor}, {0, corner}};
  cert.fbg_guaranteed = true;

  finish(result, p, mode, options, false);
  return result;
}

ReductionResult square_two_free(const Complex& p, const std::string& x_id, int a, int b, Mode mode,
                                ApplyOptions options) {
  require_low_dimension(p);
  require_bit(b, "b");
  if (a != 1 && a != 2) throw OutOfRange("a must be 1 or 2");
  const CellRef x = require_cell(p, x_id, 2);
  const Incidence inc(p);

  ReductionResult result;
  auto& cert = result.certificate;
  cert.kind = ReductionKind::square_two_free;
  cert.cell = x;
  cert.a = a;
  cert.b = b;

  const std::string& stay = p.face(x, a, 1 - b);   // d_a^{1-b} x
  const std::string& free = p.face(x, 3 - a, b);   // d_{3-a}^b x, removed
  const std::string& pivot = endpoint(p, stay, b);        // d_1^b d_a^{1-b} x
  const std::string& corner = endpoint(p, free, 1 - b);   // d_1^{1-b} d_{3-a}^b x

  cert.conditions.push_back(regularity(p, x));

  Condition c1{"i", "no square other than '" + x_id + "' has '" + stay + "' or '" + free + "' in its boundary",
               true, {}};
  std::set<std::string> others;
  for (const auto& e : {stay, free}) {
    for (const auto& s : inc.squares(e)) {
      if (s != x_id) others.insert(s);
    }
  }
  for (const auto& s : others) c1.witnesses.push_back({2, s});
  c1.holds = c1.witnesses.empty();
  cert.conditions.push_back(std::move(c1));

  Condition c2{"ii", "no edge other than '" + stay + "' has d1_" + std::to_string(b) + " = '" + pivot + "'",
               true, {}};
  for (const auto& [y, _] : p.level(1)) {
    if (y != stay && endpoint(p, y, b) == pivot) c2.witnesses.push_back({1, y});
  }
  c2.holds = c2.witnesses.empty();
  cert.conditions.push_back(std::move(c2));

  std::set<std::string> y;
  for (const auto& [e, _] : p.level(1)) {
    if (e != free && endpoint(p, e, 1 - b) == corner) y.insert(e);
  }
  Condition c3{"iii", "no edge of Y (other edges with d1_" + std::to_string(1 - b) + " = '" + corner +
                          "') lies in the boundary of a square",
               true, {}};
  for (const auto& e : y) {
    const auto& sq = inc.squares(e);
    if (sq.empty()) continue;
    c3.witnesses.push_back({1, e});
    for (const auto& s : sq) c3.witnesses.push_back({2, s});
  }
  c3.holds = c3.witnesses.empty();
  cert.conditions.push_back(std::move(c3));

  cert.y = edge_refs(y);
  cert.removed = {x, {1, free}};

  std::set<CellRef> r;
  for (const auto& c : p.cells()) {
    if (cert.removed.contains(c)) continue;
    if (c.degree == 0 && c.id == corner) continue;
    if (c.degree == 1 && (c.id == stay || y.contains(c.id))) continue;
    r.insert(c);
  }
  cert.r = std::move(r);
  cert.fbg_guaranteed = !y.empty();

  finish(result, p, mode, options, true);
  return result;
}

}  // namespace precubical
