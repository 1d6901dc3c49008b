#include "qhorn/weight.hpp"

#include <sstream>

#include "qhorn/errors.hpp"

namespace qhorn {

Rational parse_rational(std::string_view token) {
  auto valid = [](std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  auto slash = token.find('/');
  std::string_view num = token.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : token.substr(slash + 1);
  if (!valid(num) || (slash != std::string_view::npos && (!valid(den) || den[0] == '-' || den[0] == '+')))
    throw InputError("'" + std::string(token) + "' is not a rational number");
  std::string n(num);
  if (n[0] == '+') n.erase(0, 1);
  Rational value{boost::multiprecision::mpz_int(n)};
  if (!den.empty()) {
    boost::multiprecision::mpz_int d{std::string(den)};
    if (d == 0) throw InputError("zero denominator in '" + std::string(token) + "'");
    value /= Rational(d);
  }
  return value;
}

Weight Weight::zero(const LabeledFamily& ambient) {
  Weight w;
  for (const auto& l : ambient.labels()) w.values.emplace_back(l.size(), Rational(0));
  return w;
}

Rational Weight::total() const {
  Rational sum = 0;
  for (const auto& v : values)
    for (const auto& c : v) sum += c;
  return sum;
}

Weight Weight::restrict_to(const LabeledFamily& ambient, const Subfamily& sub) const {
  auto positions = to_canonical_positions(ambient, sub);
  Weight out;
  for (std::size_t x = 0; x < positions.labels.size(); ++x) {
    out.values.emplace_back();
    for (int p : positions.labels[x]) out.values.back().push_back(values.at(x).at(p - 1));
  }
  return out;
}

Rational Weight::pair_with(const LabeledFamily& ambient, const Subfamily& sub) const {
  auto positions = to_canonical_positions(ambient, sub);
  Rational sum = 0;
  for (std::size_t x = 0; x < positions.labels.size(); ++x)
    for (int p : positions.labels[x]) sum += values.at(x).at(p - 1);
  return sum;
}

bool is_dominant(const Weight& w) {
  for (const auto& v : w.values)
    for (std::size_t i = 1; i < v.size(); ++i)
      if (v[i - 1] < v[i]) return false;
  return true;
}

DominantWeight::DominantWeight(const LabeledFamily& ambient, Weight weight) : weight_(std::move(weight)) {
  if (weight_.values.size() != ambient.vertex_count())
    throw InputError("weight is defined on " + std::to_string(weight_.values.size()) +
                     " vertices, family has " + std::to_string(ambient.vertex_count()));
  for (std::size_t x = 0; x < ambient.vertex_count(); ++x)
    if (weight_.values[x].size() != ambient.at(x).size())
      throw InputError("weight at vertex #" + std::to_string(x) + " has " +
                       std::to_string(weight_.values[x].size()) + " entries, expected " +
                       std::to_string(ambient.at(x).size()));
  if (!is_dominant(weight_)) throw InputError("weight is not dominant (entries must weakly decrease)");
}

Weight parse_weight_file(const Quiver& quiver, const LabeledFamily& ambient, std::string_view text) {
  Weight w = Weight::zero(ambient);
  std::vector<char> seen(quiver.vertex_count(), 0);
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    if (head != "weight") throw ParseError(line_no, "expected 'weight <vertex> values...'");
    std::string name;
    if (!(ls >> name)) throw ParseError(line_no, "missing vertex name");
    auto x = quiver.find(name);
    if (!x) throw ParseError(line_no, "unknown vertex '" + name + "'");
    if (seen[*x]) throw ParseError(line_no, "vertex '" + name + "' given twice");
    seen[*x] = 1;
    std::vector<Rational> values;
    std::string tok;
    while (ls >> tok) {
      try {
        values.push_back(parse_rational(tok));
      } catch (const InputError& e) {
        throw ParseError(line_no, e.what());
      }
    }
    if (values.size() != ambient.at(*x).size())
      throw ParseError(line_no, "vertex '" + name + "' expects " + std::to_string(ambient.at(*x).size()) +
                                    " values, got " + std::to_string(values.size()));
    w.values[*x] = std::move(values);
  }
  for (std::size_t x = 0; x < quiver.vertex_count(); ++x)
    if (!seen[x] && !ambient.at(x).empty())
      throw InputError("weight file has no line for vertex '" + quiver.name(x) + "'");
  return w;
}

}  // namespace qhorn
