#include "sjt/recipe.hpp"

#include <cctype>

#include "sjt/constructions.hpp"
#include "sjt/error.hpp"
#include "sjt/module_io.hpp"

namespace sjt {

namespace {

class RecipeParser {
 public:
  explicit RecipeParser(std::string_view text) : text_(text) {}

  RecipeNode parse() {
    RecipeNode n = node();
    skip();
    if (!at_end()) throw ParseError(pos_, "unexpected trailing input");
    return n;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  void expect(char c) {
    skip();
    if (at_end() || peek() != c) throw ParseError(pos_, std::string("expected '") + c + "'");
    ++pos_;
  }

  RecipeNode node() {
    skip();
    RecipeNode n;
    n.position = pos_;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
    if (n.position == pos_) throw ParseError(pos_, "expected a construction name");
    n.tag = std::string(text_.substr(n.position, pos_ - n.position));
    skip();
    if (at_end() || peek() != '(') return n;
    ++pos_;
    skip();
    if (!at_end() && peek() == ')') {
      ++pos_;
      return n;
    }
    while (true) {
      n.args.push_back(arg());
      skip();
      if (at_end()) throw ParseError(pos_, "expected ',' or ')'");
      if (peek() == ')') {
        ++pos_;
        return n;
      }
      expect(',');
    }
  }

  RecipeNode::Arg arg() {
    skip();
    if (at_end()) throw ParseError(pos_, "expected an argument");
    char c = peek();
    if (c == '"') {
      std::size_t start = ++pos_;
      while (!at_end() && peek() != '"') ++pos_;
      if (at_end()) throw ParseError(start - 1, "unterminated string");
      std::string s(text_.substr(start, pos_ - start));
      ++pos_;
      return s;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+') {
      std::size_t start = pos_++;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      std::string digits(text_.substr(start, pos_ - start));
      if (digits == "-" || digits == "+") throw ParseError(start, "expected digits");
      try {
        return std::stoll(digits);
      } catch (const std::exception&) {
        throw ParseError(start, "integer out of range");
      }
    }
    return node();
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void visit(const RecipeNode& n, const std::function<void(const RecipeNode&)>& f) {
  f(n);
  for (const auto& a : n.args) {
    if (const auto* child = std::get_if<RecipeNode>(&a)) visit(*child, f);
  }
}

class Evaluator {
 public:
  Evaluator(AlgebraSpec algebra, const ModuleLoader& loader) : algebra_(std::move(algebra)), loader_(loader) {}

  Supermodule eval(const RecipeNode& n) {
    const std::string& t = n.tag;
    if (t == "kac0" || t == "dual_kac0") {
      arity(n, 0);
      Supermodule k = t == "kac0" ? kac0() : dual_kac0();
      if (algebra_ == AlgebraSpec::sl11()) return k;
      if (algebra_ == AlgebraSpec::exterior(2)) return as_exterior(k);
      throw AlgebraMismatch(t + " is defined over sl11 or exterior(2), not " + algebra_.to_string());
    }
    if (t == "trivial") {
      arity(n, 1);
      return trivial(algebra_, parity(n, 0));
    }
    if (t == "free") {
      if (n.args.empty() || n.args.size() > 2) fail(n, "expects (rank[, ev|od])");
      return free_module(algebra_, count(n, 0), n.args.size() == 2 ? parity(n, 1) : Parity::even);
    }
    if (t == "w") {
      arity(n, 1);
      return w_module(algebra_, count(n, 0));
    }
    if (t == "random") {
      arity(n, 2);
      return random_module(algebra_, count(n, 0), static_cast<std::uint64_t>(integer(n, 1)));
    }
    if (t == "file") {
      arity(n, 1);
      const auto* path = std::get_if<std::string>(&n.args[0]);
      if (!path) fail(n, "expects a quoted path");
      if (!loader_) fail(n, "file leaves are not available here");
      return loader_(*path);
    }
    if (t == "pi") {
      arity(n, 1);
      return parity_shift(child(n, 0));
    }
    if (t == "dual") {
      arity(n, 1);
      return dual(child(n, 0));
    }
    if (t == "quotient_by_socle") {
      arity(n, 1);
      return quotient_by_socle(child(n, 0));
    }
    if (t == "radical") {
      arity(n, 1);
      return radical_module(child(n, 0));
    }
    if (t == "head") {
      arity(n, 1);
      return head(child(n, 0));
    }
    if (t == "omega") {
      arity(n, 2);
      return omega(child(n, 0), static_cast<int>(integer(n, 1)));
    }
    if (t == "sum" || t == "tensor") {
      if (n.args.size() < 2) fail(n, "expects at least two modules");
      Supermodule acc = child(n, 0);
      for (std::size_t i = 1; i < n.args.size(); ++i) acc = t == "sum" ? direct_sum(acc, child(n, i)) : tensor(acc, child(n, i));
      return acc;
    }
    if (t == "hom") {
      arity(n, 2);
      return hom(child(n, 0), child(n, 1));
    }
    throw ParseError(n.position, "unknown construction '" + t + "'");
  }

 private:
  [[noreturn]] static void fail(const RecipeNode& n, const std::string& what) {
    throw ParseError(n.position, n.tag + " " + what);
  }
  static void arity(const RecipeNode& n, std::size_t k) {
    if (n.args.size() != k) fail(n, "expects " + std::to_string(k) + " argument(s)");
  }
  Supermodule child(const RecipeNode& n, std::size_t i) {
    const auto* c = std::get_if<RecipeNode>(&n.args[i]);
    if (!c) fail(n, "argument " + std::to_string(i + 1) + " must be a module");
    return eval(*c);
  }
  static long long integer(const RecipeNode& n, std::size_t i) {
    const auto* v = std::get_if<long long>(&n.args[i]);
    if (!v) fail(n, "argument " + std::to_string(i + 1) + " must be an integer");
    return *v;
  }
  static std::size_t count(const RecipeNode& n, std::size_t i) {
    long long v = integer(n, i);
    if (v < 0) fail(n, "argument " + std::to_string(i + 1) + " must be nonnegative");
    return static_cast<std::size_t>(v);
  }
  static Parity parity(const RecipeNode& n, std::size_t i) {
    const auto* c = std::get_if<RecipeNode>(&n.args[i]);
    if (c && c->args.empty() && (c->tag == "ev" || c->tag == "od" || c->tag == "even" || c->tag == "odd")) {
      return parse_parity(c->tag);
    }
    if (const auto* v = std::get_if<long long>(&n.args[i]); v && (*v == 0 || *v == 1)) {
      return *v == 0 ? Parity::even : Parity::odd;
    }
    fail(n, "argument " + std::to_string(i + 1) + " must be ev or od");
  }

  AlgebraSpec algebra_;
  const ModuleLoader& loader_;
};

}  // namespace

RecipeNode parse_recipe(std::string_view text) { return RecipeParser(text).parse(); }

AlgebraSpec infer_algebra(const RecipeNode& recipe, const ModuleLoader& loader) {
  bool kac = false;
  std::optional<std::string> first_file;
  visit(recipe, [&](const RecipeNode& n) {
    if (n.tag == "kac0" || n.tag == "dual_kac0") kac = true;
    if (n.tag == "file" && !first_file && n.args.size() == 1) {
      if (const auto* p = std::get_if<std::string>(&n.args[0])) first_file = *p;
    }
  });
  if (kac) return AlgebraSpec::sl11();
  if (first_file && loader) return loader(*first_file).algebra();
  return AlgebraSpec::exterior(2);
}

Supermodule build_recipe(std::string_view text, std::optional<AlgebraSpec> algebra, const ModuleLoader& loader) {
  RecipeNode root = parse_recipe(text);
  AlgebraSpec a = algebra ? *algebra : infer_algebra(root, loader);
  return Evaluator(a, loader).eval(root);
}

}  // namespace sjt
