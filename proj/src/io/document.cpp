#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <tuple>
#include <sstream>

#include "precubical/model_io.hpp"

namespace precubical {

SyntaxError::SyntaxError(std::size_t line, const std::string& message)
    : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

namespace {

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    std::size_t start = pos;
    while (pos < s.size() && !std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos > start) out.emplace_back(s.substr(start, pos - start));
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::optional<int> parse_int(std::string_view s) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

bool valid_id(std::string_view id) {
  if (id.empty()) return false;
  return std::none_of(id.begin(), id.end(), [](char c) {
    return c == '#' || c == '=' || std::isspace(static_cast<unsigned char>(c));
  });
}

std::string face_key(int i, int k) { return "d" + std::to_string(i) + "_" + std::to_string(k); }

// "d<i>_<k>" -> (i, k)
std::optional<std::pair<int, int>> parse_face_key(std::string_view key) {
  if (key.size() < 4 || key.front() != 'd') return std::nullopt;
  auto underscore = key.find('_');
  if (underscore == std::string_view::npos) return std::nullopt;
  auto i = parse_int(key.substr(1, underscore - 1));
  auto k = parse_int(key.substr(underscore + 1));
  if (!i || !k || *i < 1 || (*k != 0 && *k != 1)) return std::nullopt;
  return std::make_pair(*i, *k);
}

CellRecord parse_record(const std::vector<std::string>& tokens, std::size_t lineno) {
  auto dim = parse_int(tokens[0]);
  if (!dim || *dim < 0) throw SyntaxError(lineno, "expected a non-negative dimension, got '" + tokens[0] + "'");
  if (tokens.size() < 2) throw SyntaxError(lineno, "missing cell id");
  const std::string& id = tokens[1];
  if (!valid_id(id)) throw SyntaxError(lineno, "invalid cell id '" + id + "'");

  CellRecord rec{*dim, id, FaceTable(static_cast<std::size_t>(*dim))};
  std::set<std::pair<int, int>> seen;
  for (std::size_t t = 2; t < tokens.size(); ++t) {
    const auto& tok = tokens[t];
    auto eq = tok.find('=');
    if (eq == std::string::npos) throw SyntaxError(lineno, "cell '" + id + "': expected key=value, got '" + tok + "'");
    auto key = parse_face_key(std::string_view(tok).substr(0, eq));
    std::string value = tok.substr(eq + 1);
    if (!key) throw SyntaxError(lineno, "cell '" + id + "': bad face key '" + tok.substr(0, eq) + "'");
    auto [i, k] = *key;
    if (i > *dim) {
      throw SyntaxError(lineno, "cell '" + id + "': face key " + face_key(i, k) + " exceeds dimension " +
                                    std::to_string(*dim));
    }
    if (!seen.insert(*key).second) throw SyntaxError(lineno, "cell '" + id + "': repeated face key " + face_key(i, k));
    if (!valid_id(value)) throw SyntaxError(lineno, "cell '" + id + "': invalid face value '" + value + "'");
    rec.faces[i - 1][k] = std::move(value);
  }
  for (int i = 1; i <= *dim; ++i) {
    for (int k = 0; k <= 1; ++k) {
      if (!seen.contains({i, k})) {
        throw SyntaxError(lineno, "cell '" + id + "' is missing face key " + face_key(i, k));
      }
    }
  }
  return rec;
}

}  // namespace

ComplexDocument parse_document(std::string_view text) {
  ComplexDocument doc;
  std::size_t lineno = 0;
  bool header = false;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++lineno;

    if (!header) {
      if (trim(line) != kFormatVersion) {
        throw SyntaxError(lineno, "expected header '" + std::string(kFormatVersion) + "'");
      }
      header = true;
      continue;
    }

    std::string_view body = trim(line);
    if (body.starts_with("#@name")) {
      auto name = trim(body.substr(6));
      if (name.empty()) throw SyntaxError(lineno, "#@name without a name");
      doc.name = std::string(name);
      continue;
    }
    if (body.starts_with("#@pos")) {
      auto tokens = split_ws(body.substr(5));
      if (tokens.size() != 4) throw SyntaxError(lineno, "#@pos expects: <dim> <id> <x> <y>");
      auto d = parse_int(tokens[0]);
      auto x = parse_int(tokens[2]);
      auto y = parse_int(tokens[3]);
      if (!d || !x || !y || *d < 0) throw SyntaxError(lineno, "malformed #@pos directive");
      doc.positions[CellRef{*d, tokens[1]}] = {*x, *y};
      continue;
    }
    if (auto hash = body.find('#'); hash != std::string_view::npos) body = body.substr(0, hash);
    auto tokens = split_ws(body);
    if (tokens.empty()) continue;
    doc.cells.push_back(parse_record(tokens, lineno));
  }
  if (!header) throw SyntaxError(1, "empty document");
  return doc;
}

std::string serialize_document(const ComplexDocument& doc) {
  auto cells = doc.cells;
  std::sort(cells.begin(), cells.end(), [](const CellRecord& a, const CellRecord& b) {
    return std::tie(a.degree, a.id) < std::tie(b.degree, b.id);
  });
  std::ostringstream os;
  os << doc.format_version << "\n";
  if (doc.name) os << "#@name " << *doc.name << "\n";
  for (const auto& r : cells) {
    os << r.degree << " " << r.id;
    for (int i = 1; i <= r.degree; ++i) {
      for (int k = 0; k <= 1; ++k) os << " " << face_key(i, k) << "=" << r.faces[i - 1][k];
    }
    os << "\n";
  }
  for (const auto& [c, p] : doc.positions) {
    os << "#@pos " << c.degree << " " << c.id << " " << p.x << " " << p.y << "\n";
  }
  return os.str();
}

ComplexDocument to_document(const Complex& p, const std::optional<std::string>& name) {
  ComplexDocument doc;
  doc.name = name;
  doc.cells = p.records();
  doc.positions = p.positions();
  return doc;
}

Complex from_document(const ComplexDocument& doc) {
  auto report = validate(doc.cells);
  if (!report.ok()) throw ValidationFailed(std::move(report));
  Complex p = Complex::from_records(doc.cells);
  for (const auto& [c, pos] : doc.positions) {
    if (p.contains(c)) p.set_position(c, pos);
  }
  return p;
}

Complex parse(std::string_view text) { return from_document(parse_document(text)); }

std::string serialize(const Complex& p, const std::optional<std::string>& name) {
  return serialize_document(to_document(p, name));
}

}  // namespace precubical
