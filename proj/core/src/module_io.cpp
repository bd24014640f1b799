#include "sjt/module_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <nlohmann/json.hpp>
#include <sstream>
#include <tuple>

#include "sjt/error.hpp"
#include "sjt/rational.hpp"

namespace sjt {

using nlohmann::json;

std::string to_string(Parity p) { return p == Parity::even ? "ev" : "od"; }

Parity parse_parity(std::string_view text) {
  if (text == "ev" || text == "even" || text == "0") return Parity::even;
  if (text == "od" || text == "odd" || text == "1") return Parity::odd;
  throw ParseError(0, "parity must be 'ev' or 'od', got '" + std::string(text) + "'");
}

namespace {

[[noreturn]] void field_error(const std::string& field, const std::string& what) {
  throw ParseError(0, "field '" + field + "': " + what);
}

const json& require(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) field_error(key, "missing");
  return *it;
}

std::size_t as_index(const json& v, const std::string& field, std::size_t bound) {
  if (!v.is_number_integer()) field_error(field, "expected an integer index");
  auto i = v.get<long long>();
  if (i < 0 || static_cast<std::size_t>(i) >= bound) {
    field_error(field, "index " + std::to_string(i) + " out of range [0, " + std::to_string(bound) + ")");
  }
  return static_cast<std::size_t>(i);
}

Rational as_rational(const json& v, const std::string& field) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (!v.is_string()) field_error(field, "expected a rational string \"p/q\"");
  try {
    return parse_rational(v.get<std::string>());
  } catch (const ParseError& e) {
    field_error(field, e.what());
  }
}

}  // namespace

Supermodule parse_module(std::string_view text, bool check_relations) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.byte, "malformed JSON: " + std::string(e.what()));
  }
  if (!doc.is_object()) field_error("<root>", "expected an object");
  const json& format = require(doc, "format");
  if (format != kModuleFormat) field_error("format", std::string("expected \"") + kModuleFormat + "\"");
  const json& alg_field = require(doc, "algebra");
  if (!alg_field.is_string()) field_error("algebra", "expected a string");
  AlgebraSpec algebra = AlgebraSpec::exterior(1);
  try {
    algebra = AlgebraSpec::parse(alg_field.get<std::string>());
  } catch (const Error& e) {
    field_error("algebra", e.what());
  }
  const json& dim_field = require(doc, "dim");
  if (!dim_field.is_number_integer() || dim_field.get<long long>() < 0) field_error("dim", "expected a nonnegative integer");
  const auto dim = dim_field.get<std::size_t>();
  const json& parity_field = require(doc, "parity");
  if (!parity_field.is_array()) field_error("parity", "expected an array");
  if (parity_field.size() != dim) {
    field_error("parity", "length " + std::to_string(parity_field.size()) + " does not match dim " + std::to_string(dim));
  }
  std::vector<Parity> parity;
  for (std::size_t i = 0; i < dim; ++i) {
    const json& p = parity_field[i];
    const std::string f = "parity[" + std::to_string(i) + "]";
    if (p.is_number_integer()) {
      parity.push_back(p.get<int>() == 0 ? Parity::even : Parity::odd);
      if (p.get<int>() != 0 && p.get<int>() != 1) field_error(f, "expected 0 or 1");
    } else if (p.is_string()) {
      try {
        parity.push_back(parse_parity(p.get<std::string>()));
      } catch (const ParseError& e) {
        field_error(f, e.what());
      }
    } else {
      field_error(f, "expected \"ev\" or \"od\"");
    }
  }
  std::map<std::string, SparseMatrix> actions;
  if (auto it = doc.find("actions"); it != doc.end()) {
    if (!it->is_object()) field_error("actions", "expected an object");
    for (const auto& [name, entries] : it->items()) {
      const std::string f = "actions." + name;
      if (!algebra.find(name)) field_error(f, "unknown generator for " + algebra.to_string());
      std::string canonical = algebra.canonical(name);
      if (actions.count(canonical)) field_error(f, "generator listed twice");
      if (!entries.is_array()) field_error(f, "expected an array of [row, col, \"p/q\"] triplets");
      SparseMatrix a(dim, dim);
      for (std::size_t k = 0; k < entries.size(); ++k) {
        const json& t = entries[k];
        const std::string g = f + "[" + std::to_string(k) + "]";
        if (!t.is_array() || t.size() != 3) field_error(g, "expected [row, col, \"p/q\"]");
        std::size_t r = as_index(t[0], g + ".row", dim);
        std::size_t c = as_index(t[1], g + ".col", dim);
        a.add_to(r, c, as_rational(t[2], g + ".value"));
      }
      actions.emplace(canonical, std::move(a));
    }
  }
  Supermodule m(algebra, parity, actions);
  std::vector<std::string> violations;
  if (check_relations || doc.contains("valid")) violations = validate(m);
  if (auto it = doc.find("valid"); it != doc.end()) {
    if (!it->is_boolean()) field_error("valid", "expected a boolean");
    if (it->get<bool>() && !violations.empty()) {
      std::string msg = "field 'valid': file states true but the module violates:";
      for (const auto& v : violations) msg += "\n  " + v;
      throw ValidationError(msg);
    }
    if (it->get<bool>() != violations.empty()) {
      field_error("valid", std::string("file states ") + (it->get<bool>() ? "true" : "false") + " but the module is " +
                               (violations.empty() ? "valid" : "invalid"));
    }
  }
  if (check_relations && !violations.empty()) {
    std::string msg = "module violates the defining relations:";
    for (const auto& v : violations) msg += "\n  " + v;
    throw ValidationError(msg);
  }
  return m;
}

std::string serialize_module(const Supermodule& m) {
  std::ostringstream out;
  out << "{\n";
  out << "  \"format\": \"" << kModuleFormat << "\",\n";
  out << "  \"algebra\": \"" << m.algebra().to_string() << "\",\n";
  out << "  \"dim\": " << m.dim() << ",\n";
  out << "  \"parity\": [";
  for (std::size_t i = 0; i < m.dim(); ++i) out << (i ? ", " : "") << '"' << to_string(m.parity(i)) << '"';
  out << "],\n";
  out << "  \"actions\": {";
  const auto& gens = m.algebra().generators();
  for (std::size_t g = 0; g < gens.size(); ++g) {
    out << (g ? "," : "") << "\n    \"" << gens[g].name << "\": [";
    auto triplets = m.actions()[g].triplets();
    std::sort(triplets.begin(), triplets.end(),
              [](const auto& a, const auto& b) { return std::tie(std::get<0>(a), std::get<1>(a)) < std::tie(std::get<0>(b), std::get<1>(b)); });
    for (std::size_t k = 0; k < triplets.size(); ++k) {
      const auto& [r, c, v] = triplets[k];
      out << (k ? "," : "") << "\n      [" << r << ", " << c << ", \"" << to_string(v) << "\"]";
    }
    out << (triplets.empty() ? "]" : "\n    ]");
  }
  out << "\n  },\n";
  out << "  \"valid\": " << (validate(m).empty() ? "true" : "false") << "\n";
  out << "}\n";
  return out.str();
}

Supermodule read_module_file(const std::string& path, bool check_relations) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_module(buf.str(), check_relations);
}

void write_module_file(const std::string& path, const Supermodule& m) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << serialize_module(m);
  if (!out) throw Error("write to '" + path + "' failed");
}

namespace {

class PointParser {
 public:
  PointParser(std::string_view text, const AlgebraSpec& a)
      : text_(text), algebra_(a), coeffs_(a.odd_count(), Rational(0)) {}

  std::vector<Rational> parse() {
    skip();
    if (at_end()) throw ParseError(pos_, "expected a term");
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = peek() == '-';
      ++pos_;
    }
    term(negative);
    while (true) {
      skip();
      if (at_end()) break;
      char op = peek();
      if (op != '+' && op != '-') throw ParseError(pos_, "expected '+' or '-'");
      ++pos_;
      term(op == '-');
    }
    return coeffs_;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  void term(bool negative) {
    skip();
    if (at_end()) throw ParseError(pos_, "expected a term");
    Rational c(1);
    if (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '-') {
      std::size_t start = pos_;
      if (peek() == '-') ++pos_;
      digits();
      if (!at_end() && peek() == '/') {
        ++pos_;
        digits();
      }
      try {
        c = parse_rational(text_.substr(start, pos_ - start));
      } catch (const ParseError& e) {
        throw ParseError(start, e.what());
      }
      skip();
      if (at_end() || peek() != '*') throw ParseError(pos_, "expected '*' after coefficient");
      ++pos_;
      skip();
    }
    std::size_t start = pos_;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
    if (start == pos_) throw ParseError(pos_, "expected a generator name");
    std::string name(text_.substr(start, pos_ - start));
    auto idx = algebra_.find(name) ? algebra_.odd_index(algebra_.canonical(name)) : std::nullopt;
    if (!idx) throw UnknownGenerator("'" + name + "' is not an odd generator of " + algebra_.to_string());
    coeffs_[*idx] += negative ? Rational(-c) : c;
  }

  void digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) throw ParseError(pos_, "expected digits");
  }

  std::string_view text_;
  const AlgebraSpec& algebra_;
  std::vector<Rational> coeffs_;
  std::size_t pos_ = 0;
};

}  // namespace

OddPoint parse_point(std::string_view text, const AlgebraSpec& algebra, bool require_nonzero) {
  OddPoint p(algebra, PointParser(text, algebra).parse());
  if (require_nonzero && p.is_zero()) throw ZeroPoint();
  return p;
}

}  // namespace sjt
