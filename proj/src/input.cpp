#include "multimult/input.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "multimult/error.hpp"

namespace multimult {

bool IdealSpec::is_monomial() const {
  for (const auto& g : generators) {
    if (!g.is_zero() && !g.is_monomial()) return false;
  }
  return true;
}

MonomialIdeal IdealSpec::to_monomial(const RingPtr& ring) const {
  if (unit) return MonomialIdeal::unit(ring);
  std::vector<Monomial> ms;
  for (const auto& g : generators) {
    if (g.is_zero()) continue;
    if (!g.is_monomial()) {
      throw Error(ErrorCode::InvalidArgument, "generator " + g.to_string() + " is not a monomial");
    }
    ms.push_back(g.monomial());
  }
  return MonomialIdeal(ring, std::move(ms));
}

std::string IdealSpec::to_string() const {
  if (unit) return "(1)";
  std::string out = "(";
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (i) out += ", ";
    out += generators[i].to_string();
  }
  return out + ")";
}

const IdealSpec* InputDocument::find_ideal(const std::string& name) const {
  for (const auto& [n, spec] : ideals) {
    if (n == name) return &spec;
  }
  return nullptr;
}

GradedModule InputDocument::build_module() const {
  if (!module) throw Error(ErrorCode::InvalidArgument, "the input has no module line");
  auto gens = [](const IdealSpec& s) {
    return s.generators;
  };
  std::optional<std::vector<HomogeneousElement>> outer;
  if (module->outer && !module->outer->unit) outer = gens(*module->outer);
  if (module->inner.unit) {
    // V = R forces U = R as well; the module is zero.
    return GradedModule::monomial(MonomialIdeal::unit(ring), MonomialIdeal::unit(ring));
  }
  return GradedModule::from_generators(ring, outer, gens(module->inner));
}

namespace {

enum class Tok { Ident, Number, Punct, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  int line = 1;
  int column = 1;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  int line = 1, column = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t j = 0; j < n; ++j) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
      ++i;
    }
  };
  while (i < text.size()) {
    const char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    Token t;
    t.line = line;
    t.column = column;
    std::size_t j = i;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
      t.kind = Tok::Ident;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      t.kind = Tok::Number;
    } else if (std::string_view("=(),+-*^/{};").find(c) != std::string_view::npos) {
      j = i + 1;
      t.kind = Tok::Punct;
    } else {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ", column " +
                                             std::to_string(column) + ": unexpected character '" +
                                             std::string(1, c) + "'");
    }
    t.text = std::string(text.substr(i, j - i));
    advance(j - i);
    out.push_back(std::move(t));
  }
  Token end;
  end.line = line;
  end.column = column;
  out.push_back(end);
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  // Ring known up front: used for element lists given on the command line.
  Parser(std::vector<Token> tokens, RingPtr ring) : toks_(std::move(tokens)) { doc_.ring = std::move(ring); }

  InputDocument document() {
    while (!at_end()) statement();
    if (doc_.grading == 0) fail(peek(), ErrorCode::ParseError, "missing 'grading' line");
    ensure_ring();
    return std::move(doc_);
  }

  std::vector<HomogeneousElement> element_list() {
    std::vector<HomogeneousElement> out;
    if (at_end()) return out;
    out.push_back(polynomial());
    while (accept(",")) out.push_back(polynomial());
    if (!at_end()) fail(peek(), ErrorCode::ParseError, "unexpected '" + peek().text + "'");
    return out;
  }

 private:
  [[noreturn]] void fail(const Token& t, ErrorCode code, const std::string& msg) const {
    throw Error(code, "line " + std::to_string(t.line) + ", column " + std::to_string(t.column) + ": " + msg);
  }

  const Token& peek() const { return toks_[pos_]; }
  bool at_end() const { return peek().kind == Tok::End; }
  Token next() {
    Token t = peek();
    if (!at_end()) ++pos_;
    return t;
  }
  bool is(const std::string& text) const { return peek().kind != Tok::End && peek().text == text; }
  bool accept(const std::string& text) {
    if (!is(text)) return false;
    ++pos_;
    return true;
  }
  Token expect(const std::string& text) {
    if (!is(text)) {
      fail(peek(), ErrorCode::ParseError,
           "expected '" + text + "' but found " + (at_end() ? "end of input" : "'" + peek().text + "'"));
    }
    return next();
  }
  Token expect_ident() {
    if (peek().kind != Tok::Ident) fail(peek(), ErrorCode::ParseError, "expected a name");
    return next();
  }
  long long expect_number() {
    if (peek().kind != Tok::Number) fail(peek(), ErrorCode::ParseError, "expected a number");
    const Token t = next();
    if (t.text.size() > 18) fail(t, ErrorCode::ParseError, "number too large");
    return std::stoll(t.text);
  }

  void statement() {
    const Token t = expect_ident();
    if (t.text == "grading") {
      if (doc_.grading != 0) fail(t, ErrorCode::ParseError, "grading declared twice");
      const Token n = peek();
      const long long d = expect_number();
      if (d < 1 || d > 64) fail(n, ErrorCode::BadSlot, "grading dimension must be between 1 and 64");
      doc_.grading = static_cast<std::size_t>(d);
    } else if (t.text == "var") {
      if (doc_.grading == 0) fail(t, ErrorCode::ParseError, "'grading' must come before variables");
      if (doc_.ring) fail(t, ErrorCode::ParseError, "variables must be declared before ideals");
      std::vector<Token> names;
      while (peek().kind == Tok::Ident && peek().text != "slot") names.push_back(next());
      if (names.empty()) fail(peek(), ErrorCode::ParseError, "expected a variable name");
      expect("slot");
      const Token s = peek();
      const long long slot = expect_number();
      if (slot < 1 || slot > static_cast<long long>(doc_.grading)) {
        fail(s, ErrorCode::BadSlot,
             "slot " + s.text + " outside 1.." + std::to_string(doc_.grading));
      }
      for (const auto& n : names) {
        if (reserved(n.text)) fail(n, ErrorCode::ParseError, "'" + n.text + "' is reserved");
        for (const auto& v : var_names_) {
          if (v == n.text) fail(n, ErrorCode::ParseError, "variable " + n.text + " declared twice");
        }
        var_names_.push_back(n.text);
        var_slots_.push_back(static_cast<int>(slot - 1));
      }
    } else if (t.text == "ideal") {
      ensure_ring(t);
      const Token name = expect_ident();
      if (reserved(name.text) || doc_.ring->find(name.text) >= 0) {
        fail(name, ErrorCode::ParseError, "'" + name.text + "' cannot name an ideal");
      }
      if (doc_.find_ideal(name.text)) fail(name, ErrorCode::ParseError, "ideal " + name.text + " defined twice");
      expect("=");
      doc_.ideals.emplace_back(name.text, expression());
    } else if (t.text == "module") {
      ensure_ring(t);
      if (doc_.module) fail(t, ErrorCode::ParseError, "module declared twice");
      ModuleSpec spec;
      bool have_inner = false;
      while (is("outer") || is("inner")) {
        const std::string key = next().text;
        expect("=");
        IdealSpec e = expression();
        if (key == "outer") {
          spec.outer = std::move(e);
        } else {
          spec.inner = std::move(e);
          have_inner = true;
        }
      }
      if (!have_inner) fail(peek(), ErrorCode::ParseError, "module needs inner=<ideal>");
      doc_.module = std::move(spec);
    } else if (t.text == "system") {
      ensure_ring(t);
      if (doc_.system) fail(t, ErrorCode::ParseError, "system declared twice");
      system_block(t);
    } else if (t.text == "seed") {
      doc_.seed = static_cast<std::uint64_t>(expect_number());
    } else {
      fail(t, ErrorCode::ParseError, "unknown statement '" + t.text + "'");
    }
    accept(";");
  }

  static bool reserved(const std::string& s) {
    return s == "grading" || s == "var" || s == "slot" || s == "ideal" || s == "module" || s == "system" ||
           s == "seed" || s == "intersect" || s == "outer" || s == "inner";
  }

  void ensure_ring(const Token& where) {
    if (doc_.grading == 0) fail(where, ErrorCode::ParseError, "'grading' must come first");
    ensure_ring();
  }
  void ensure_ring() {
    if (!doc_.ring) doc_.ring = make_ring(doc_.grading, var_names_, var_slots_);
  }

  void system_block(const Token& start) {
    expect("{");
    std::optional<IdealSpec> j;
    std::map<int, std::pair<Token, IdealSpec>> ideals;
    std::optional<IdealSpec> outer, inner;
    while (!accept("}")) {
      if (at_end()) fail(peek(), ErrorCode::ParseError, "unterminated system block");
      const Token name = expect_ident();
      expect("=");
      if (name.text == "J") {
        j = expression();
      } else if (name.text == "N") {
        if (accept("R")) {
          outer.reset();
        } else {
          outer = term();
        }
        expect("/");
        inner = term();
      } else if (name.text.size() > 1 && name.text[0] == 'I' &&
                 name.text.find_first_not_of("0123456789", 1) == std::string::npos) {
        const int idx = std::stoi(name.text.substr(1));
        if (idx < 1 || ideals.count(idx)) fail(name, ErrorCode::ParseError, "bad ideal slot " + name.text);
        ideals.emplace(idx, std::make_pair(name, expression()));
      } else {
        fail(name, ErrorCode::ParseError, "expected J, I<i> or N in system block");
      }
      accept(";");
    }
    if (!j) fail(start, ErrorCode::ParseError, "system block needs J");
    std::vector<MonomialIdeal> is;
    int expected = 1;
    for (auto& [idx, entry] : ideals) {
      if (idx != expected++) fail(entry.first, ErrorCode::ParseError, "ideals must be numbered I1, I2, ...");
      is.push_back(monomial_or_fail(entry.first, entry.second));
    }
    const MonomialIdeal jm = monomial_or_fail(start, *j);
    const MonomialIdeal q = inner ? monomial_or_fail(start, *inner) : MonomialIdeal::zero(doc_.ring);
    try {
      IdealSystem sys(MonomialIdeal::zero(doc_.ring), jm, is);
      if (outer) {
        sys = sys.with_module(monomial_or_fail(start, *outer), q);
      } else {
        sys = sys.with_module(MonomialIdeal::unit(doc_.ring), q);
      }
      doc_.system = std::move(sys);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::InvalidArgument) throw;
      fail(start, ErrorCode::InvalidArgument, e.what());
    }
  }

  MonomialIdeal monomial_or_fail(const Token& where, const IdealSpec& s) {
    if (!s.is_monomial()) fail(where, ErrorCode::InvalidArgument, "system ideals must be monomial");
    return s.to_monomial(doc_.ring);
  }

  IdealSpec expression() {
    IdealSpec acc = term();
    while (accept("+")) {
      IdealSpec rhs = term();
      acc.unit = acc.unit || rhs.unit;
      for (auto& g : rhs.generators) acc.generators.push_back(std::move(g));
    }
    if (acc.unit) acc.generators.clear();
    return acc;
  }

  IdealSpec term() {
    IdealSpec acc = power();
    while (is("*")) {
      next();
      acc = product(acc, power());
    }
    return acc;
  }

  IdealSpec power() {
    IdealSpec base = atom();
    if (!accept("^")) return base;
    const Token t = peek();
    const long long e = expect_number();
    if (e > 64) fail(t, ErrorCode::ParseError, "exponent too large");
    IdealSpec out;
    out.unit = true;
    for (long long i = 0; i < e; ++i) out = product(out, base);
    return out;
  }

  IdealSpec product(const IdealSpec& a, const IdealSpec& b) {
    if (a.unit) return b;
    if (b.unit) return a;
    IdealSpec out;
    for (const auto& g : a.generators) {
      for (const auto& h : b.generators) {
        HomogeneousElement p = g * h;
        if (!p.is_zero()) out.generators.push_back(std::move(p));
      }
    }
    return out;
  }

  IdealSpec atom() {
    const Token t = peek();
    if (accept("(")) {
      IdealSpec out;
      if (accept(")")) return out;
      do {
        HomogeneousElement g = polynomial();
        if (g.is_zero()) continue;
        if (g.degree().is_zero()) out.unit = true;
        out.generators.push_back(std::move(g));
      } while (accept(","));
      expect(")");
      if (out.unit) out.generators.clear();
      return out;
    }
    if (t.kind == Tok::Number) {
      next();
      if (t.text == "1") {
        IdealSpec unit;
        unit.unit = true;
        return unit;
      }
      if (t.text == "0") return IdealSpec{};
      fail(t, ErrorCode::ParseError, "only 0 and 1 may stand for an ideal");
    }
    if (t.kind == Tok::Ident) {
      next();
      if (t.text == "intersect") return intersection(t);
      if (const IdealSpec* s = doc_.find_ideal(t.text)) return *s;
      if (doc_.ring->find(t.text) >= 0) {
        fail(t, ErrorCode::ParseError, "variable " + t.text + " used as an ideal; write (" + t.text + ")");
      }
      fail(t, ErrorCode::UndeclaredName, "undeclared ideal " + t.text);
    }
    fail(t, ErrorCode::ParseError, at_end() ? "unexpected end of input" : "unexpected '" + t.text + "'");
  }

  IdealSpec intersection(const Token& t) {
    expect("(");
    std::vector<IdealSpec> parts{expression()};
    while (accept(",")) parts.push_back(expression());
    expect(")");
    for (const auto& p : parts) {
      if (!p.is_monomial()) fail(t, ErrorCode::InvalidArgument, "intersect needs monomial ideals");
    }
    MonomialIdeal acc = parts[0].to_monomial(doc_.ring);
    for (std::size_t i = 1; i < parts.size(); ++i) acc = acc.intersect(parts[i].to_monomial(doc_.ring));
    IdealSpec out;
    if (acc.is_unit()) {
      out.unit = true;
      return out;
    }
    for (const auto& m : acc.generators()) out.generators.emplace_back(doc_.ring, m);
    return out;
  }

  HomogeneousElement polynomial() {
    const Token start = peek();
    HomogeneousElement::Terms terms;
    std::optional<MultiDegree> degree;
    bool first = true;
    while (true) {
      Rational sign = 1;
      if (accept("-")) {
        sign = -1;
      } else if (!accept("+") && !first) {
        break;
      }
      first = false;
      const Token at = peek();
      auto [coeff, mono] = monomial_term();
      const MultiDegree deg = mono.degree(*doc_.ring);
      if (degree && *degree != deg) {
        fail(at, ErrorCode::ParseError, "polynomial is not homogeneous");
      }
      degree = deg;
      terms[mono] += sign * coeff;
      if (!is("+") && !is("-")) break;
    }
    if (!degree) fail(start, ErrorCode::ParseError, "expected a polynomial");
    return HomogeneousElement(doc_.ring, std::move(terms), *degree);
  }

  std::pair<Rational, Monomial> monomial_term() {
    Rational coeff = 1;
    Monomial mono(doc_.ring->variable_count());
    bool any = false;
    do {
      const Token t = peek();
      if (t.kind == Tok::Number) {
        next();
        Rational c(t.text);
        if (accept("/")) {
          const Token den = peek();
          if (den.kind != Tok::Number || den.text.find_first_not_of('0') == std::string::npos) {
            fail(den, ErrorCode::ParseError, "expected a nonzero denominator");
          }
          next();
          c /= Rational(den.text);
        }
        coeff *= c;
      } else if (t.kind == Tok::Ident) {
        next();
        const int v = doc_.ring->find(t.text);
        if (v < 0) fail(t, ErrorCode::UndeclaredName, "undeclared variable " + t.text);
        int e = 1;
        if (accept("^")) {
          const Token et = peek();
          const long long x = expect_number();
          if (x > 1000) fail(et, ErrorCode::ParseError, "exponent too large");
          e = static_cast<int>(x);
        }
        mono[v] += e;
      } else {
        fail(t, ErrorCode::ParseError, at_end() ? "unexpected end of input" : "unexpected '" + t.text + "'");
      }
      any = true;
    } while (accept("*"));
    (void)any;
    coeff.canonicalize();
    return {coeff, mono};
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  InputDocument doc_;
  std::vector<std::string> var_names_;
  std::vector<int> var_slots_;
};

}  // namespace

InputDocument parse_document(std::string_view text) { return Parser(tokenize(text)).document(); }

InputDocument parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str());
}

std::vector<HomogeneousElement> parse_elements(const RingPtr& ring, std::string_view text) {
  return Parser(tokenize(text), ring).element_list();
}

MultiDegree parse_multidegree(std::string_view text) {
  std::vector<int> out;
  std::string item;
  std::stringstream ss{std::string(text)};
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
    if (used != item.size() || item.empty()) {
      throw Error(ErrorCode::ParseError, "bad integer list '" + std::string(text) + "'");
    }
    out.push_back(v);
  }
  if (out.empty()) throw Error(ErrorCode::ParseError, "empty integer list");
  return MultiDegree(std::move(out));
}

}  // namespace multimult
