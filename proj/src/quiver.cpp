#include "qhorn/quiver.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "qhorn/errors.hpp"

namespace qhorn {

namespace {

bool valid_name(std::string_view name) {
  if (name.empty()) return false;
  return std::none_of(name.begin(), name.end(), [](char c) {
    return c == ':' || c == ';' || c == ',' || c == '=' || c == '{' || c == '}' ||
           c == '#' || static_cast<unsigned char>(c) <= ' ';
  });
}

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::optional<int> parse_int(std::string_view token) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) return std::nullopt;
  return value;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

bool strictly_increasing_positive(const std::vector<int>& labels) {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] <= 0) return false;
    if (i > 0 && labels[i - 1] >= labels[i]) return false;
  }
  return true;
}

}  // namespace

// --- Quiver -----------------------------------------------------------------

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)) {
  std::unordered_set<std::string> seen;
  for (const auto& v : vertices_) {
    if (!valid_name(v)) throw InputError("invalid vertex name '" + v + "'");
    if (!seen.insert(v).second) throw InputError("duplicate vertex '" + v + "'");
  }
  arrows_.reserve(arrows.size());
  for (const auto& a : arrows) {
    if (a.source >= vertices_.size() || a.target >= vertices_.size())
      throw InputError("arrow endpoint out of range");
    if (reaches(a.target, a.source))
      throw InputError("cycle detected through arrow " + vertices_[a.source] + " -> " +
                       vertices_[a.target]);
    arrows_.push_back(a);
  }
}

std::optional<std::size_t> Quiver::find(std::string_view name) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i] == name) return i;
  return std::nullopt;
}

std::size_t Quiver::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw InputError("unknown vertex '" + std::string(name) + "'");
}

bool Quiver::reaches(std::size_t from, std::size_t to) const {
  std::vector<char> visited(vertices_.size(), 0);
  std::vector<std::size_t> stack{from};
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    if (v == to) return true;
    if (visited[v]) continue;
    visited[v] = 1;
    for (const auto& a : arrows_)
      if (a.source == v && !visited[a.target]) stack.push_back(a.target);
  }
  return false;
}

// --- DimensionVector / LabeledFamily ----------------------------------------

DimensionVector::DimensionVector(std::vector<int> v) : values(std::move(v)) {
  for (int a : values)
    if (a < 0) throw InputError("dimension vector entries must be nonnegative");
}

int DimensionVector::total() const { return std::accumulate(values.begin(), values.end(), 0); }

LabeledFamily::LabeledFamily(std::vector<std::vector<int>> labels) : labels_(std::move(labels)) {
  for (const auto& l : labels_)
    if (!strictly_increasing_positive(l))
      throw InputError("labels must be distinct positive integers in ascending order");
}

LabeledFamily LabeledFamily::canonical(const DimensionVector& dims) {
  std::vector<std::vector<int>> labels(dims.size());
  for (std::size_t x = 0; x < dims.size(); ++x) {
    labels[x].resize(static_cast<std::size_t>(dims[x]));
    std::iota(labels[x].begin(), labels[x].end(), 1);
  }
  return LabeledFamily(std::move(labels));
}

DimensionVector LabeledFamily::dims() const {
  std::vector<int> d;
  d.reserve(labels_.size());
  for (const auto& l : labels_) d.push_back(static_cast<int>(l.size()));
  return DimensionVector(std::move(d));
}

int LabeledFamily::total_size() const { return dims().total(); }

bool LabeledFamily::contains(std::size_t x, int label) const {
  const auto& l = labels_.at(x);
  return std::binary_search(l.begin(), l.end(), label);
}

// --- Subfamilies ------------------------------------------------------------

void require_subfamily(const LabeledFamily& ambient, const Subfamily& sub) {
  if (sub.labels.size() != ambient.vertex_count())
    throw ContainmentError("subfamily has " + std::to_string(sub.labels.size()) +
                           " vertices, ambient has " + std::to_string(ambient.vertex_count()));
  for (std::size_t x = 0; x < sub.labels.size(); ++x) {
    const auto& k = sub.labels[x];
    if (!std::is_sorted(k.begin(), k.end()) ||
        std::adjacent_find(k.begin(), k.end()) != k.end())
      throw ContainmentError("subfamily labels must be ascending and distinct");
    for (int label : k)
      if (!ambient.contains(x, label))
        throw ContainmentError("label " + std::to_string(label) + " at vertex #" +
                               std::to_string(x) + " is not in the ambient family");
  }
}

Subfamily full_subfamily(const LabeledFamily& ambient) { return Subfamily{ambient.labels()}; }

Subfamily empty_subfamily(std::size_t vertex_count) {
  return Subfamily{std::vector<std::vector<int>>(vertex_count)};
}

DimensionVector dims_of(const Subfamily& sub) {
  std::vector<int> d;
  for (const auto& k : sub.labels) d.push_back(static_cast<int>(k.size()));
  return DimensionVector(std::move(d));
}

SubQuotient subquotient(const LabeledFamily& ambient, const Subfamily& sub) {
  require_subfamily(ambient, sub);
  std::vector<std::vector<int>> rest(ambient.vertex_count());
  for (std::size_t x = 0; x < ambient.vertex_count(); ++x) {
    const auto& l = ambient.at(x);
    const auto& k = sub.labels[x];
    std::set_difference(l.begin(), l.end(), k.begin(), k.end(), std::back_inserter(rest[x]));
  }
  return {LabeledFamily(sub.labels), LabeledFamily(std::move(rest))};
}

LabeledFamily canonicalize(const LabeledFamily& family) {
  return LabeledFamily::canonical(family.dims());
}

Subfamily to_canonical_positions(const LabeledFamily& ambient, const Subfamily& sub) {
  require_subfamily(ambient, sub);
  Subfamily out = empty_subfamily(ambient.vertex_count());
  for (std::size_t x = 0; x < ambient.vertex_count(); ++x) {
    const auto& l = ambient.at(x);
    for (int label : sub.labels[x]) {
      auto pos = std::lower_bound(l.begin(), l.end(), label) - l.begin();
      out.labels[x].push_back(static_cast<int>(pos) + 1);
    }
  }
  return out;
}

Subfamily from_canonical_positions(const LabeledFamily& ambient, const Subfamily& positions) {
  require_subfamily(canonicalize(ambient), positions);
  Subfamily out = empty_subfamily(ambient.vertex_count());
  for (std::size_t x = 0; x < ambient.vertex_count(); ++x)
    for (int p : positions.labels[x])
      out.labels[x].push_back(ambient.at(x)[static_cast<std::size_t>(p - 1)]);
  return out;
}

// --- Text formats -----------------------------------------------------------

QuiverFile parse_quiver(std::string_view text) {
  std::vector<std::string> names;
  std::vector<std::vector<int>> labels;
  std::vector<Arrow> arrows;
  Quiver partial;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) {
      if (eol == text.size()) break;
      continue;
    }
    auto tokens = split_ws(line);
    if (tokens[0] == "vertex") {
      if (tokens.size() < 2) throw ParseError(line_no, "vertex line needs a name");
      std::string name(tokens[1]);
      if (!valid_name(name)) throw ParseError(line_no, "invalid vertex name '" + name + "'");
      if (std::find(names.begin(), names.end(), name) != names.end())
        throw ParseError(line_no, "duplicate vertex '" + name + "'");
      std::vector<int> ls;
      for (std::size_t i = 2; i < tokens.size(); ++i) {
        auto v = parse_int(tokens[i]);
        if (!v || *v <= 0)
          throw ParseError(line_no, "label '" + std::string(tokens[i]) + "' is not a positive integer");
        if (std::find(ls.begin(), ls.end(), *v) != ls.end())
          throw ParseError(line_no, "duplicate label " + std::to_string(*v));
        if (!ls.empty() && ls.back() > *v)
          throw ParseError(line_no, "labels must be ascending");
        ls.push_back(*v);
      }
      names.push_back(std::move(name));
      labels.push_back(std::move(ls));
    } else if (tokens[0] == "arrow") {
      if (tokens.size() != 3) throw ParseError(line_no, "arrow line needs exactly two vertices");
      auto find = [&](std::string_view n) -> std::size_t {
        auto it = std::find(names.begin(), names.end(), n);
        if (it == names.end()) throw ParseError(line_no, "unknown vertex '" + std::string(n) + "'");
        return static_cast<std::size_t>(it - names.begin());
      };
      Arrow a{find(tokens[1]), find(tokens[2])};
      arrows.push_back(a);
      try {
        partial = Quiver(names, arrows);
      } catch (const InputError&) {
        throw ParseError(line_no, "cycle detected at arrow " + std::string(tokens[1]) + " -> " +
                                      std::string(tokens[2]));
      }
    } else {
      throw ParseError(line_no, "unrecognised directive '" + std::string(tokens[0]) + "'");
    }
    if (eol == text.size()) break;
  }
  return {Quiver(std::move(names), std::move(arrows)), LabeledFamily(std::move(labels))};
}

QuiverFile load_quiver_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_quiver(ss.str());
}

Subfamily parse_subfamily(const Quiver& quiver, std::string_view literal) {
  Subfamily out = empty_subfamily(quiver.vertex_count());
  std::vector<char> seen(quiver.vertex_count(), 0);
  std::size_t pos = 0;
  literal = trim(literal);
  while (pos < literal.size()) {
    auto end = literal.find(';', pos);
    if (end == std::string_view::npos) end = literal.size();
    auto part = trim(literal.substr(pos, end - pos));
    pos = end + 1;
    if (part.empty()) continue;
    auto colon = part.find(':');
    if (colon == std::string_view::npos)
      throw InputError("subfamily entry '" + std::string(part) + "' lacks ':'");
    auto x = quiver.index_of(trim(part.substr(0, colon)));
    if (seen[x]) throw InputError("vertex '" + quiver.name(x) + "' listed twice");
    seen[x] = 1;
    auto list = trim(part.substr(colon + 1));
    if (!list.empty() && list.front() == '{') {
      if (list.back() != '}') throw InputError("unbalanced braces in '" + std::string(part) + "'");
      list = trim(list.substr(1, list.size() - 2));
    }
    std::size_t p = 0;
    while (p < list.size()) {
      auto comma = list.find(',', p);
      if (comma == std::string_view::npos) comma = list.size();
      auto tok = trim(list.substr(p, comma - p));
      p = comma + 1;
      auto v = parse_int(tok);
      if (!v || *v <= 0) throw InputError("label '" + std::string(tok) + "' is not a positive integer");
      out.labels[x].push_back(*v);
    }
    std::sort(out.labels[x].begin(), out.labels[x].end());
    if (std::adjacent_find(out.labels[x].begin(), out.labels[x].end()) != out.labels[x].end())
      throw InputError("duplicate label at vertex '" + quiver.name(x) + "'");
  }
  return out;
}

std::string format_subfamily(const Quiver& quiver, const std::vector<std::vector<int>>& labels) {
  std::string out;
  for (std::size_t x = 0; x < labels.size(); ++x) {
    if (x) out += ';';
    out += quiver.name(x);
    out += ":{";
    for (std::size_t i = 0; i < labels[x].size(); ++i) {
      if (i) out += ',';
      out += std::to_string(labels[x][i]);
    }
    out += '}';
  }
  return out;
}

}  // namespace qhorn
