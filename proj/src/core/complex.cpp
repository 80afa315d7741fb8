#include "precubical/complex.hpp"

#include <algorithm>
#include <sstream>

#include "precubical/errors.hpp"

namespace precubical {

std::ostream& operator<<(std::ostream& os, const CellRef& c) {
  return os << c.id << " (dim " << c.degree << ")";
}

UnknownCell::UnknownCell(const CellRef& c)
    : Error("unknown cell '" + c.id + "' of degree " + std::to_string(c.degree)), cell_(c) {}

WrongDegree::WrongDegree(const std::string& id, int expected, int actual)
    : Error("cell '" + id + "' has degree " + std::to_string(actual) + ", expected " +
            std::to_string(expected)) {}

ValidationFailed::ValidationFailed(ValidationReport report)
    : Error("complex is not a valid precubical set:\n" + report.to_string()),
      report_(std::move(report)) {}

namespace {

const Complex::Level& empty_level() {
  static const Complex::Level level;
  return level;
}

std::string face_key(int i, int k) { return "d" + std::to_string(i) + "_" + std::to_string(k); }

// Shape problems that make a record unusable: bad degree, empty id, wrong
// number of face pairs, empty face ids. The empty id is allowed on vertices
// only, where it names the point of the 0-cube.
void check_shape(const CellRecord& r, std::vector<Violation>& out) {
  CellRef ref{r.degree, r.id};
  if (r.degree < 0) {
    out.push_back({ViolationKind::bad_face_table, ref, 0, 0, 0, 0, "negative degree"});
    return;
  }
  if (r.id.empty() && r.degree > 0) {
    out.push_back({ViolationKind::empty_id, ref, 0, 0, 0, 0,
                   "empty id in degree " + std::to_string(r.degree)});
  }
  if (static_cast<int>(r.faces.size()) != r.degree) {
    out.push_back({ViolationKind::bad_face_table, ref, 0, 0, 0, 0,
                   "cell '" + r.id + "' of degree " + std::to_string(r.degree) + " has " +
                       std::to_string(r.faces.size()) + " face pairs"});
    return;
  }
  for (int i = 1; i <= r.degree; ++i) {
    for (int k = 0; k <= 1; ++k) {
      if (r.faces[i - 1][k].empty()) {
        out.push_back({ViolationKind::bad_face_table, ref, i, 0, k, 0,
                       "cell '" + r.id + "' has empty face " + face_key(i, k)});
      }
    }
  }
}

}  // namespace

// ---------------------------------------------------------------------------

Complex Complex::from_records(std::span<const CellRecord> records) {
  std::vector<Violation> problems;
  Complex out;
  for (const auto& r : records) {
    std::size_t before = problems.size();
    check_shape(r, problems);
    if (problems.size() != before) continue;
    if (static_cast<int>(out.levels_.size()) <= r.degree) out.levels_.resize(r.degree + 1);
    auto [it, inserted] = out.levels_[r.degree].emplace(r.id, r.faces);
    if (!inserted) {
      problems.push_back({ViolationKind::duplicate_id, CellRef{r.degree, r.id}, 0, 0, 0, 0,
                          "duplicate id '" + r.id + "' in degree " + std::to_string(r.degree)});
    }
  }
  if (!problems.empty()) throw ValidationFailed(ValidationReport{std::move(problems)});
  out.trim();
  return out;
}

void Complex::trim() {
  while (!levels_.empty() && levels_.back().empty()) levels_.pop_back();
}

std::optional<int> Complex::dimension() const {
  if (levels_.empty()) return std::nullopt;
  return static_cast<int>(levels_.size()) - 1;
}

const Complex::Level& Complex::level(int degree) const {
  if (degree < 0 || degree >= static_cast<int>(levels_.size())) return empty_level();
  return levels_[degree];
}

std::size_t Complex::total_cells() const {
  std::size_t n = 0;
  for (const auto& l : levels_) n += l.size();
  return n;
}

bool Complex::contains(int degree, const std::string& id) const {
  return level(degree).contains(id);
}

bool Complex::contains(const CellRef& c) const { return contains(c.degree, c.id); }

const FaceTable& Complex::faces(const CellRef& c) const {
  const auto& l = level(c.degree);
  auto it = l.find(c.id);
  if (it == l.end()) throw UnknownCell(c);
  return it->second;
}

const std::string& Complex::face(const CellRef& c, int i, int k) const {
  const auto& f = faces(c);
  if (i < 1 || i > c.degree || (k != 0 && k != 1)) {
    throw std::out_of_range("face index d" + std::to_string(i) + "_" + std::to_string(k) +
                            " out of range for degree " + std::to_string(c.degree));
  }
  return f[i - 1][k];
}

std::vector<CellRef> Complex::cells() const {
  std::vector<CellRef> out;
  out.reserve(total_cells());
  for (int d = 0; d < num_levels(); ++d) {
    for (const auto& [id, _] : levels_[d]) out.push_back({d, id});
  }
  return out;
}

std::vector<CellRecord> Complex::records() const {
  std::vector<CellRecord> out;
  out.reserve(total_cells());
  for (int d = 0; d < num_levels(); ++d) {
    for (const auto& [id, f] : levels_[d]) out.push_back({d, id, f});
  }
  return out;
}

// ---------------------------------------------------------------------------

ComplexBuilder& ComplexBuilder::vertex(const std::string& id) { return cell(0, id, {}); }

ComplexBuilder& ComplexBuilder::vertex(const std::string& id, GridPosition p) {
  cell(0, id, {});
  return position({0, id}, p);
}

ComplexBuilder& ComplexBuilder::edge(const std::string& id, const std::string& from,
                                     const std::string& to) {
  return cell(1, id, {{from, to}});
}

ComplexBuilder& ComplexBuilder::square(const std::string& id, const std::string& left,
                                       const std::string& right, const std::string& bottom,
                                       const std::string& top) {
  return cell(2, id, {{left, right}, {bottom, top}});
}

ComplexBuilder& ComplexBuilder::cell(int degree, const std::string& id, FaceTable faces) {
  records_.push_back({degree, id, std::move(faces)});
  return *this;
}

ComplexBuilder& ComplexBuilder::position(const CellRef& c, GridPosition p) {
  positions_[c] = p;
  return *this;
}

Complex ComplexBuilder::build() const {
  Complex c = Complex::from_records(records_);
  c.positions_ = positions_;
  return c;
}

// ---------------------------------------------------------------------------

std::string ValidationReport::to_string() const {
  std::ostringstream os;
  for (const auto& v : violations) os << "  " << v.message << "\n";
  return os.str();
}

ValidationReport validate(std::span<const CellRecord> records) {
  ValidationReport report;
  auto& out = report.violations;

  std::vector<std::map<std::string, const CellRecord*>> index;
  std::vector<const CellRecord*> usable;
  for (const auto& r : records) {
    std::size_t before = out.size();
    check_shape(r, out);
    if (out.size() != before) continue;
    if (static_cast<int>(index.size()) <= r.degree) index.resize(r.degree + 1);
    if (!index[r.degree].emplace(r.id, &r).second) {
      out.push_back({ViolationKind::duplicate_id, CellRef{r.degree, r.id}, 0, 0, 0, 0,
                     "duplicate id '" + r.id + "' in degree " + std::to_string(r.degree)});
      continue;
    }
    usable.push_back(&r);
  }

  auto lookup = [&](int degree, const std::string& id) -> const CellRecord* {
    if (degree < 0 || degree >= static_cast<int>(index.size())) return nullptr;
    auto it = index[degree].find(id);
    return it == index[degree].end() ? nullptr : it->second;
  };

  for (const CellRecord* r : usable) {
    for (int i = 1; i <= r->degree; ++i) {
      for (int k = 0; k <= 1; ++k) {
        const auto& f = r->faces[i - 1][k];
        if (lookup(r->degree - 1, f) == nullptr) {
          std::string msg = "cell '" + r->id + "' face " + face_key(i, k) + " = '" + f +
                            "' does not name a cell of degree " + std::to_string(r->degree - 1);
          if (lookup(r->degree - 2, f) || lookup(r->degree, f) || lookup(r->degree + 1, f)) {
            msg += " (degree mismatch)";
          }
          out.push_back({ViolationKind::dangling_face, CellRef{r->degree, r->id}, i, 0, k, 0, msg});
        }
      }
    }
  }

  // d_i^k d_j^l z = d_{j-1}^l d_i^k z for i < j, wherever both sides resolve.
  for (const CellRecord* r : usable) {
    const int n = r->degree;
    if (n < 2) continue;
    for (int i = 1; i < n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        for (int k = 0; k <= 1; ++k) {
          for (int l = 0; l <= 1; ++l) {
            const CellRecord* djl = lookup(n - 1, r->faces[j - 1][l]);
            const CellRecord* dik = lookup(n - 1, r->faces[i - 1][k]);
            if (!djl || !dik) continue;
            const auto& lhs = djl->faces[i - 1][k];
            const auto& rhs = dik->faces[j - 2][l];
            if (lhs != rhs) {
              std::ostringstream msg;
              msg << "cell '" << r->id << "' violates d" << i << "^" << k << " d" << j << "^" << l
                  << " = d" << j - 1 << "^" << l << " d" << i << "^" << k << " (i,j,k,l)=(" << i
                  << "," << j << "," << k << "," << l << "): '" << lhs << "' != '" << rhs << "'";
              out.push_back(
                  {ViolationKind::cubical_identity, CellRef{n, r->id}, i, j, k, l, msg.str()});
            }
          }
        }
      }
    }
  }
  return report;
}

ValidationReport validate(const Complex& p) {
  auto recs = p.records();
  return validate(recs);
}

// ---------------------------------------------------------------------------

namespace {

// Words of length n over {0,1,*}, in base-3 order.
std::vector<std::string> cube_words(int n) {
  std::size_t total = 1;
  for (int t = 0; t < n; ++t) total *= 3;
  static constexpr char kSymbols[3] = {'0', '1', '*'};
  std::vector<std::string> out;
  out.reserve(total);
  for (std::size_t code = 0; code < total; ++code) {
    std::string word(n, '0');
    std::size_t c = code;
    for (int t = n - 1; t >= 0; --t) {
      word[t] = kSymbols[c % 3];
      c /= 3;
    }
    out.push_back(std::move(word));
  }
  return out;
}

}  // namespace

Complex standard_cube(int n) {
  if (n < 0) throw OutOfRange("cube dimension must be non-negative");
  std::vector<CellRecord> records;
  for (auto& word : cube_words(n)) {
    CellRecord rec{0, word, {}};
    for (std::size_t pos = 0; pos < word.size(); ++pos) {
      if (word[pos] != '*') continue;
      ++rec.degree;
      std::array<std::string, 2> pair{word, word};
      pair[0][pos] = '0';
      pair[1][pos] = '1';
      rec.faces.push_back(std::move(pair));
    }
    records.push_back(std::move(rec));
  }
  Complex cube = Complex::from_records(records);
  if (n <= 2) {
    for (const auto& v : cube.level(0)) {
      const auto& w = v.first;
      cube.set_position({0, w}, {n >= 1 ? w[0] - '0' : 0, n >= 2 ? w[1] - '0' : 0});
    }
  }
  return cube;
}

CubeMorphismImage cube_morphism(const Complex& p, const CellRef& x) {
  if (!p.contains(x)) throw UnknownCell(x);
  const int n = x.degree;
  CubeMorphismImage image;
  image.source_dimension = n;
  for (const auto& word : cube_words(n)) {
    // Walking fixed positions right to left keeps every position to the left
    // a star, so fixing position pos is the face d_{pos+1}.
    CellRef cur = x;
    for (int pos = n - 1; pos >= 0; --pos) {
      if (word[pos] == '*') continue;
      cur = CellRef{cur.degree - 1, p.face(cur, pos + 1, word[pos] - '0')};
    }
    image.assignment.emplace(word, std::move(cur));
  }
  return image;
}

bool is_regular(const Complex& p, const CellRef& x) {
  auto image = cube_morphism(p, x);
  std::set<CellRef> seen;
  for (const auto& [_, target] : image.assignment) {
    if (!seen.insert(target).second) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

Complex opposite(const Complex& p) {
  auto recs = p.records();
  for (auto& r : recs) {
    for (auto& pair : r.faces) std::swap(pair[0], pair[1]);
  }
  Complex out = Complex::from_records(recs);
  for (const auto& [c, pos] : p.positions()) out.set_position(c, pos);
  return out;
}

Complex transpose(const Complex& p) {
  auto recs = p.records();
  for (auto& r : recs) std::reverse(r.faces.begin(), r.faces.end());
  Complex out = Complex::from_records(recs);
  for (const auto& [c, pos] : p.positions()) out.set_position(c, {pos.y, pos.x});
  return out;
}

// ---------------------------------------------------------------------------

namespace {

std::set<std::string> vertices_without(const Complex& p, int side) {
  std::set<std::string> hit;
  for (const auto& [_, f] : p.level(1)) hit.insert(f[0][side]);
  std::set<std::string> out;
  for (const auto& [v, _] : p.level(0)) {
    if (!hit.contains(v)) out.insert(v);
  }
  return out;
}

}  // namespace

std::set<std::string> minimal_vertices(const Complex& p) { return vertices_without(p, 1); }

std::set<std::string> maximal_vertices(const Complex& p) { return vertices_without(p, 0); }

std::set<std::string> extremal_vertices(const Complex& p) {
  auto out = minimal_vertices(p);
  out.merge(maximal_vertices(p));
  return out;
}

// ---------------------------------------------------------------------------

bool is_subcomplex(const Complex& p, const Complex& q) {
  for (int d = 0; d < q.num_levels(); ++d) {
    for (const auto& [id, f] : q.level(d)) {
      const auto& pl = p.level(d);
      auto it = pl.find(id);
      if (it == pl.end() || it->second != f) return false;
      for (const auto& pair : f) {
        if (!q.contains(d - 1, pair[0]) || !q.contains(d - 1, pair[1])) return false;
      }
    }
  }
  return true;
}

Complex restrict_to(const Complex& p, const std::set<CellRef>& keep) {
  std::vector<CellRecord> recs;
  for (auto& r : p.records()) {
    if (keep.contains(CellRef{r.degree, r.id})) recs.push_back(std::move(r));
  }
  Complex out = Complex::from_records(recs);
  for (const auto& [c, pos] : p.positions()) {
    if (keep.contains(c)) out.set_position(c, pos);
  }
  return out;
}

Complex remove_cells(const Complex& p, const std::set<CellRef>& drop) {
  std::set<CellRef> keep;
  for (auto& c : p.cells()) {
    if (!drop.contains(c)) keep.insert(c);
  }
  return restrict_to(p, keep);
}

long euler_characteristic(const Complex& p) {
  long chi = 0;
  for (int d = 0; d < p.num_levels(); ++d) {
    long n = static_cast<long>(p.count(d));
    chi += (d % 2 == 0) ? n : -n;
  }
  return chi;
}

}  // namespace precubical
