#include <fstream>
#include <set>
#include <sstream>

#include "tropcm/cli.hpp"
#include "tropcm/parse.hpp"

namespace tropcm {

namespace {

std::string strip(const std::string& s) {
  const auto hash = s.find('#');
  const std::string body = s.substr(0, hash);
  const auto b = body.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = body.find_last_not_of(" \t\r");
  return body.substr(b, e - b + 1);
}

bool starts_with(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

}  // namespace

Ideal parse_ideal_text(const std::string& text, const std::optional<Field>& field_override) {
  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  std::optional<std::vector<std::string>> names;
  std::optional<Field> field;
  RingPtr ring;
  std::vector<Polynomial> gens;
  while (std::getline(in, raw)) {
    ++lineno;
    const std::string line = strip(raw);
    if (line.empty()) continue;
    if (starts_with(line, "vars:")) {
      if (names) throw ParseError("duplicate vars line", lineno, 1);
      std::istringstream vs(line.substr(5));
      std::vector<std::string> list;
      for (std::string v; vs >> v;) list.push_back(v);
      if (list.empty()) throw ParseError("vars line declares no variables", lineno, 1);
      std::set<std::string> seen;
      for (const auto& v : list) {
        if (!seen.insert(v).second) throw ParseError("duplicate variable name '" + v + "'", lineno, 1);
      }
      names = std::move(list);
      continue;
    }
    if (starts_with(line, "field:")) {
      if (ring) throw ParseError("field line must precede the generators", lineno, 1);
      try {
        field = Field::parse(strip(line.substr(6)));
      } catch (const std::exception& e) {
        throw ParseError(e.what(), lineno, 7);
      }
      continue;
    }
    if (!names) throw ParseError("generator before the vars line", lineno, 1);
    if (!ring) {
      try {
        ring = make_ring(*names, field_override.value_or(field.value_or(Field::rationals())));
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), lineno, 1);
      }
    }
    Polynomial p = parse_polynomial(raw, ring, lineno);
    if (!p.is_homogeneous()) throw ParseError("generator is not homogeneous: " + p.to_string(), lineno, 1);
    gens.push_back(std::move(p));
  }
  if (!names) throw ParseError("missing vars line", lineno == 0 ? 1 : lineno, 1);
  if (!ring) ring = make_ring(*names, field_override.value_or(field.value_or(Field::rationals())));
  return Ideal(ring, std::move(gens));
}

Ideal load_ideal_file(const std::string& path, const std::optional<Field>& field_override) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open ideal file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_ideal_text(buf.str(), field_override);
}

std::string format_ideal(const Ideal& ideal, const std::vector<std::string>& comments) {
  std::ostringstream out;
  for (const auto& c : comments) out << "# " << c << '\n';
  out << "vars:";
  for (const auto& n : ideal.ring()->names()) out << ' ' << n;
  out << "\nfield: " << ideal.ring()->field().to_string() << '\n';
  for (const auto& g : ideal.generators()) out << g.to_string() << '\n';
  return out.str();
}

void save_ideal_file(const std::string& path, const Ideal& ideal, const std::vector<std::string>& comments) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write ideal file '" + path + "'");
  out << format_ideal(ideal, comments);
}

}  // namespace tropcm
