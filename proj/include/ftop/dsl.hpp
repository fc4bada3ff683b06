#ifndef FTOP_DSL_HPP_
#define FTOP_DSL_HPP_

// A small language for defining set classes and map classes:
//
//   semiopen(A) := A <= Cl(Int(A))
//   contrasemi(f) := forall V in open(Y): pre(V) in semiclosed(X)
//
// A definition is a map class when its body mentions pre(...) or im(...);
// otherwise it is a set class over the variable named in its header.

#include <cctype>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ftop/error.hpp"
#include "ftop/map_classes.hpp"
#include "ftop/set_classes.hpp"
#include "ftop/space_map.hpp"

namespace ftop::dsl {

struct Pos {
  int line = 1;
  int column = 1;
};

inline std::string where(Pos p) {
  return std::to_string(p.line) + ":" + std::to_string(p.column);
}

/// Which space a set-valued term lives in.
enum class Side { any, x, y };

struct Term {
  enum class Kind { var, full, empty, interior, closure, semi_closure, ro_hull, complement,
                    pre, im, join, meet };
  Kind kind = Kind::var;
  std::string name;  // variable name
  std::vector<Term> args;
  Pos pos;
  Side side = Side::any;  // filled in by analysis
};

struct FamilyRef {
  std::string name;
  Side side = Side::x;
  Pos pos;
};

struct Formula {
  enum class Kind { subset, equal, member, conj, disj, negation, forall };
  Kind kind = Kind::subset;
  std::vector<Term> terms;     // subset/equal: 2, member: 1
  std::vector<Formula> parts;  // conj/disj: 2, negation/forall: 1
  FamilyRef family;            // member, forall
  std::string var;             // forall
  Pos pos;
};

struct Definition {
  std::string name;
  std::string param;
  Formula body;
  bool map_class = false;  // filled in by analysis
  Pos pos;
};

// Structural equality, ignoring positions and inferred sides.
inline bool operator==(const Term& a, const Term& b) {
  return a.kind == b.kind && a.name == b.name && a.args == b.args;
}
inline bool operator==(const FamilyRef& a, const FamilyRef& b) {
  return a.name == b.name && a.side == b.side;
}
inline bool operator==(const Formula& a, const Formula& b) {
  if (a.kind != b.kind || a.terms != b.terms || a.parts != b.parts) return false;
  if (a.kind == Formula::Kind::member || a.kind == Formula::Kind::forall) {
    if (!(a.family == b.family)) return false;
  }
  return a.var == b.var;
}
inline bool operator==(const Definition& a, const Definition& b) {
  return a.name == b.name && a.param == b.param && a.body == b.body;
}

// ---------------------------------------------------------------------------
// Lexer
// ---------------------------------------------------------------------------

struct Token {
  enum class Kind { ident, zero, define, le, eq, bar, amp, lparen, rparen, colon, comma, end };
  Kind kind = Kind::end;
  std::string text;
  Pos pos;
};

inline std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  Pos pos;
  std::size_t i = 0;
  auto advance = [&](std::size_t k) {
    for (std::size_t j = 0; j < k; ++j) {
      if (src[i] == '\n') {
        ++pos.line;
        pos.column = 1;
      } else {
        ++pos.column;
      }
      ++i;
    }
  };
  while (i < src.size()) {
    const char c = src[i];
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    Token t;
    t.pos = pos;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      t.kind = Token::Kind::ident;
      t.text = std::string(src.substr(i, j - i));
      advance(j - i);
      out.push_back(std::move(t));
      continue;
    }
    auto two = src.substr(i, 2);
    if (two == ":=") {
      t.kind = Token::Kind::define;
    } else if (two == "<=") {
      t.kind = Token::Kind::le;
    } else {
      switch (c) {
        case '0': t.kind = Token::Kind::zero; break;
        case '=': t.kind = Token::Kind::eq; break;
        case '|': t.kind = Token::Kind::bar; break;
        case '&': t.kind = Token::Kind::amp; break;
        case '(': t.kind = Token::Kind::lparen; break;
        case ')': t.kind = Token::Kind::rparen; break;
        case ':': t.kind = Token::Kind::colon; break;
        case ',': t.kind = Token::Kind::comma; break;
        default:
          throw Error(ErrorKind::kSyntaxError,
                      where(pos) + ": unexpected character '" + std::string(1, c) + "'");
      }
      if (c == '0' && i + 1 < src.size() && std::isalnum(static_cast<unsigned char>(src[i + 1]))) {
        throw Error(ErrorKind::kSyntaxError, where(pos) + ": only the literal 0 is a number");
      }
    }
    const std::size_t len = (t.kind == Token::Kind::define || t.kind == Token::Kind::le) ? 2 : 1;
    t.text = std::string(src.substr(i, len));
    advance(len);
    out.push_back(std::move(t));
  }
  Token end;
  end.kind = Token::Kind::end;
  end.pos = pos;
  out.push_back(end);
  return out;
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

namespace detail {

inline const std::map<std::string_view, Term::Kind>& operators() {
  static const std::map<std::string_view, Term::Kind> ops = {
      {"Int", Term::Kind::interior},  {"Cl", Term::Kind::closure},
      {"sCl", Term::Kind::semi_closure}, {"roInt", Term::Kind::ro_hull},
      {"comp", Term::Kind::complement}, {"pre", Term::Kind::pre},
      {"im", Term::Kind::im},
  };
  return ops;
}

inline bool is_keyword(std::string_view s) {
  return s == "and" || s == "or" || s == "not" || s == "forall" || s == "in" || s == "X" ||
         s == "Y";
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  std::vector<Definition> file() {
    std::vector<Definition> defs;
    while (peek().kind != Token::Kind::end) defs.push_back(definition());
    if (defs.empty()) fail(peek(), "expected at least one definition");
    return defs;
  }

 private:
  const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
  const Token& take() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  bool at_ident(std::string_view text) const {
    return peek().kind == Token::Kind::ident && peek().text == text;
  }
  [[noreturn]] static void fail(const Token& t, const std::string& msg) {
    const std::string got = t.kind == Token::Kind::end ? "end of input" : "'" + t.text + "'";
    throw Error(ErrorKind::kSyntaxError, where(t.pos) + ": " + msg + ", got " + got);
  }
  const Token& expect(Token::Kind kind, const std::string& what) {
    if (peek().kind != kind) fail(peek(), "expected " + what);
    return take();
  }
  std::string identifier(const std::string& what) {
    const Token& t = expect(Token::Kind::ident, what);
    if (is_keyword(t.text)) fail(t, "expected " + what);
    return t.text;
  }

  Definition definition() {
    Definition d;
    d.pos = peek().pos;
    d.name = identifier("definition name");
    expect(Token::Kind::lparen, "'('");
    d.param = identifier("parameter name");
    expect(Token::Kind::rparen, "')'");
    expect(Token::Kind::define, "':='");
    d.body = disjunction();
    return d;
  }

  Formula disjunction() {
    Formula lhs = conjunction();
    while (at_ident("or")) {
      const Pos p = take().pos;
      Formula f;
      f.kind = Formula::Kind::disj;
      f.pos = p;
      f.parts.push_back(std::move(lhs));
      f.parts.push_back(conjunction());
      lhs = std::move(f);
    }
    return lhs;
  }

  Formula conjunction() {
    Formula lhs = unary();
    while (at_ident("and")) {
      const Pos p = take().pos;
      Formula f;
      f.kind = Formula::Kind::conj;
      f.pos = p;
      f.parts.push_back(std::move(lhs));
      f.parts.push_back(unary());
      lhs = std::move(f);
    }
    return lhs;
  }

  Formula unary() {
    if (at_ident("not")) {
      Formula f;
      f.kind = Formula::Kind::negation;
      f.pos = take().pos;
      f.parts.push_back(unary());
      return f;
    }
    if (at_ident("forall")) {
      Formula f;
      f.kind = Formula::Kind::forall;
      f.pos = take().pos;
      f.var = identifier("bound variable");
      if (!at_ident("in")) fail(peek(), "expected 'in'");
      take();
      f.family = family();
      expect(Token::Kind::colon, "':'");
      f.parts.push_back(disjunction());
      return f;
    }
    return atom();
  }

  Formula atom() {
    if (peek().kind == Token::Kind::lparen) {
      // Either a parenthesized formula or a comparison whose left term starts
      // with '('. Try the comparison first.
      const std::size_t save = pos_;
      try {
        return comparison();
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::kSyntaxError) throw;
        pos_ = save;
      }
      take();
      Formula inner = disjunction();
      expect(Token::Kind::rparen, "')'");
      return inner;
    }
    return comparison();
  }

  Formula comparison() {
    Formula f;
    f.pos = peek().pos;
    f.terms.push_back(term());
    if (peek().kind == Token::Kind::le) {
      take();
      f.kind = Formula::Kind::subset;
      f.terms.push_back(term());
    } else if (peek().kind == Token::Kind::eq) {
      take();
      f.kind = Formula::Kind::equal;
      f.terms.push_back(term());
    } else if (at_ident("in")) {
      take();
      f.kind = Formula::Kind::member;
      f.family = family();
    } else {
      fail(peek(), "expected '<=', '=' or 'in'");
    }
    return f;
  }

  FamilyRef family() {
    FamilyRef ref;
    ref.pos = peek().pos;
    ref.name = identifier("family name");
    expect(Token::Kind::lparen, "'('");
    if (at_ident("X")) {
      ref.side = Side::x;
    } else if (at_ident("Y")) {
      ref.side = Side::y;
    } else {
      fail(peek(), "expected X or Y");
    }
    take();
    expect(Token::Kind::rparen, "')'");
    return ref;
  }

  Term term() {
    Term lhs = meet();
    while (peek().kind == Token::Kind::bar) {
      Term t;
      t.kind = Term::Kind::join;
      t.pos = take().pos;
      t.args.push_back(std::move(lhs));
      t.args.push_back(meet());
      lhs = std::move(t);
    }
    return lhs;
  }

  Term meet() {
    Term lhs = primary();
    while (peek().kind == Token::Kind::amp) {
      Term t;
      t.kind = Term::Kind::meet;
      t.pos = take().pos;
      t.args.push_back(std::move(lhs));
      t.args.push_back(primary());
      lhs = std::move(t);
    }
    return lhs;
  }

  Term primary() {
    Term t;
    t.pos = peek().pos;
    if (peek().kind == Token::Kind::zero) {
      take();
      t.kind = Term::Kind::empty;
      return t;
    }
    if (peek().kind == Token::Kind::lparen) {
      take();
      Term inner = term();
      expect(Token::Kind::rparen, "')'");
      return inner;
    }
    if (peek().kind != Token::Kind::ident) fail(peek(), "expected a term");
    if (at_ident("X")) {
      take();
      t.kind = Term::Kind::full;
      return t;
    }
    const Token& name = peek();
    if (is_keyword(name.text)) fail(name, "expected a term");
    take();
    if (peek().kind != Token::Kind::lparen) {
      t.kind = Term::Kind::var;
      t.name = name.text;
      return t;
    }
    const auto op = operators().find(name.text);
    if (op == operators().end()) {
      throw Error(ErrorKind::kUnknownName, where(name.pos) + ": unknown operator " + name.text);
    }
    t.kind = op->second;
    take();  // '('
    if (peek().kind == Token::Kind::rparen) {
      throw Error(ErrorKind::kArityError, where(name.pos) + ": " + name.text + " takes one argument");
    }
    t.args.push_back(term());
    if (peek().kind == Token::Kind::comma) {
      throw Error(ErrorKind::kArityError, where(name.pos) + ": " + name.text + " takes one argument");
    }
    expect(Token::Kind::rparen, "')'");
    return t;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace detail

// ---------------------------------------------------------------------------
// Environment and analysis
// ---------------------------------------------------------------------------

/// Built-in set class for a family name: the registry id itself or the id
/// with underscores dropped (semi_closed / semiclosed).
inline std::optional<SetClassId> builtin_set_class(std::string_view name) {
  if (auto id = parse_set_class(name)) return id;
  for (SetClassId id : kAllSetClasses) {
    std::string compact;
    for (char c : name_of(id)) {
      if (c != '_') compact += c;
    }
    if (compact == name) return id;
  }
  return std::nullopt;
}

inline std::string compact_name(std::string_view name) {
  std::string out;
  for (char c : name) {
    if (c != '_') out += c;
  }
  return out;
}

class Environment;
inline void analyze(std::vector<Definition>& defs, const Environment& env);

/// Named definitions over the built-in registries. User definitions shadow
/// built-in family names; extending returns a new environment.
class Environment {
 public:
  static Environment builtin() { return Environment(); }

  Environment extend(std::vector<Definition> defs) const {
    Environment next = *this;
    auto all = std::make_shared<std::vector<Definition>>(*defs_);
    for (Definition& d : defs) {
      if (next.index_.count(d.name) != 0) {
        throw Error(ErrorKind::kDuplicateDefinition,
                    where(d.pos) + ": '" + d.name + "' is already defined");
      }
      next.index_[d.name] = all->size();
      all->push_back(std::move(d));
    }
    next.defs_ = all;
    analyze(*all, next);
    return next;
  }

  const Definition* find(std::string_view name) const {
    const auto it = index_.find(std::string(name));
    return it == index_.end() ? nullptr : &(*defs_)[it->second];
  }
  const std::vector<Definition>& definitions() const { return *defs_; }

 private:
  Environment() : defs_(std::make_shared<std::vector<Definition>>()) {}

  std::shared_ptr<const std::vector<Definition>> defs_;
  std::unordered_map<std::string, std::size_t> index_;
};

namespace detail {

struct Scope {
  std::vector<std::pair<std::string, Side>> vars;
  const Side* lookup(const std::string& name) const {
    for (auto it = vars.rbegin(); it != vars.rend(); ++it) {
      if (it->first == name) return &it->second;
    }
    return nullptr;
  }
};

inline bool mentions_map(const Term& t) {
  if (t.kind == Term::Kind::pre || t.kind == Term::Kind::im) return true;
  for (const Term& a : t.args) {
    if (mentions_map(a)) return true;
  }
  return false;
}

inline bool mentions_map(const Formula& f) {
  for (const Term& t : f.terms) {
    if (mentions_map(t)) return true;
  }
  for (const Formula& p : f.parts) {
    if (mentions_map(p)) return true;
  }
  return false;
}

inline const char* side_name(Side s) { return s == Side::y ? "Y" : "X"; }

inline Side unify(Side a, Side b, Pos pos) {
  if (a == Side::any) return b;
  if (b == Side::any || a == b) return a;
  throw Error(ErrorKind::kArityError,
              where(pos) + ": sets of X and Y cannot be combined");
}

// Bottom-up side inference; returns the side of the term (any for constants).
inline Side infer(Term& t, const Scope& scope) {
  switch (t.kind) {
    case Term::Kind::var: {
      const Side* s = scope.lookup(t.name);
      if (s == nullptr) {
        throw Error(ErrorKind::kUnknownName, where(t.pos) + ": unbound variable " + t.name);
      }
      return t.side = *s;
    }
    case Term::Kind::full:
    case Term::Kind::empty:
      return t.side = Side::any;
    case Term::Kind::pre: {
      const Side arg = infer(t.args[0], scope);
      if (arg == Side::x) {
        throw Error(ErrorKind::kArityError, where(t.pos) + ": pre expects a subset of Y");
      }
      return t.side = Side::x;
    }
    case Term::Kind::im: {
      const Side arg = infer(t.args[0], scope);
      if (arg == Side::y) {
        throw Error(ErrorKind::kArityError, where(t.pos) + ": im expects a subset of X");
      }
      return t.side = Side::y;
    }
    case Term::Kind::join:
    case Term::Kind::meet:
      return t.side = unify(infer(t.args[0], scope), infer(t.args[1], scope), t.pos);
    default:
      return t.side = infer(t.args[0], scope);
  }
}

// Top-down: resolve constants left as `any` to a concrete side.
inline void settle(Term& t, Side side) {
  if (t.side == Side::any) t.side = side;
  switch (t.kind) {
    case Term::Kind::pre: settle(t.args[0], Side::y); break;
    case Term::Kind::im: settle(t.args[0], Side::x); break;
    default:
      for (Term& a : t.args) settle(a, t.side);
  }
}

struct Analyzer {
  const Environment& env;
  const Definition* current = nullptr;
  std::set<std::string> deps;

  void family(const FamilyRef& ref) {
    if (!current->map_class && ref.side == Side::y) {
      throw Error(ErrorKind::kArityError,
                  where(ref.pos) + ": set class " + current->name + " cannot range over Y");
    }
    if (const Definition* d = env.find(ref.name)) {
      if (d->map_class) {
        throw Error(ErrorKind::kArityError,
                    where(ref.pos) + ": " + ref.name + " is a map class, not a family of sets");
      }
      deps.insert(ref.name);
      return;
    }
    if (!builtin_set_class(ref.name)) {
      throw Error(ErrorKind::kUnknownName, where(ref.pos) + ": unknown family " + ref.name);
    }
  }

  void formula(Formula& f, Scope& scope) {
    switch (f.kind) {
      case Formula::Kind::subset:
      case Formula::Kind::equal: {
        const Side s = unify(infer(f.terms[0], scope), infer(f.terms[1], scope), f.pos);
        const Side concrete = s == Side::any ? Side::x : s;
        settle(f.terms[0], concrete);
        settle(f.terms[1], concrete);
        break;
      }
      case Formula::Kind::member: {
        family(f.family);
        const Side s = unify(infer(f.terms[0], scope), f.family.side, f.pos);
        settle(f.terms[0], s);
        break;
      }
      case Formula::Kind::conj:
      case Formula::Kind::disj:
      case Formula::Kind::negation:
        for (Formula& p : f.parts) formula(p, scope);
        break;
      case Formula::Kind::forall:
        family(f.family);
        scope.vars.emplace_back(f.var, f.family.side);
        formula(f.parts[0], scope);
        scope.vars.pop_back();
        break;
    }
  }
};

}  // namespace detail

/// Resolves names and sides in place and rejects cyclic definitions.
inline void analyze(std::vector<Definition>& defs, const Environment& env) {
  std::map<std::string, std::set<std::string>> graph;
  for (Definition& d : defs) d.map_class = detail::mentions_map(d.body);
  for (Definition& d : defs) {
    detail::Analyzer an{env, &d, {}};
    detail::Scope scope;
    if (!d.map_class) scope.vars.emplace_back(d.param, Side::x);
    an.formula(d.body, scope);
    graph[d.name] = std::move(an.deps);
  }
  // Depth-first search for a back edge.
  std::map<std::string, int> state;  // 0 new, 1 on stack, 2 done
  auto visit = [&](auto&& self, const std::string& name) -> void {
    state[name] = 1;
    for (const std::string& next : graph[name]) {
      if (state[next] == 1) {
        throw Error(ErrorKind::kCyclicDefinition,
                    "definition '" + name + "' depends on itself through '" + next + "'");
      }
      if (state[next] == 0) self(self, next);
    }
    state[name] = 2;
  };
  for (const Definition& d : defs) {
    if (state[d.name] == 0) visit(visit, d.name);
  }
}

/// Parses and checks a definition file against the built-in registries.
inline std::vector<Definition> parse(std::string_view source) {
  std::vector<Definition> defs = detail::Parser(tokenize(source)).file();
  const Environment env = Environment::builtin().extend(defs);
  std::vector<Definition> out;
  for (const Definition& d : defs) out.push_back(*env.find(d.name));
  return out;
}

// ---------------------------------------------------------------------------
// Pretty printer
// ---------------------------------------------------------------------------

namespace detail {

inline const char* operator_name(Term::Kind k) {
  switch (k) {
    case Term::Kind::interior: return "Int";
    case Term::Kind::closure: return "Cl";
    case Term::Kind::semi_closure: return "sCl";
    case Term::Kind::ro_hull: return "roInt";
    case Term::Kind::complement: return "comp";
    case Term::Kind::pre: return "pre";
    case Term::Kind::im: return "im";
    default: return "";
  }
}

inline std::string print(const Term& t, int ctx) {
  switch (t.kind) {
    case Term::Kind::var: return t.name;
    case Term::Kind::full: return "X";
    case Term::Kind::empty: return "0";
    case Term::Kind::join: {
      std::string s = print(t.args[0], 1) + " | " + print(t.args[1], 2);
      return ctx > 1 ? "(" + s + ")" : s;
    }
    case Term::Kind::meet: {
      std::string s = print(t.args[0], 2) + " & " + print(t.args[1], 3);
      return ctx > 2 ? "(" + s + ")" : s;
    }
    default:
      return std::string(operator_name(t.kind)) + "(" + print(t.args[0], 0) + ")";
  }
}

inline std::string print(const FamilyRef& f) {
  return f.name + "(" + side_name(f.side) + ")";
}

// Precedence: disj 1, conj 2, not 3. A forall body extends as far right as
// possible, so a forall anywhere but the top of a body is parenthesized.
inline std::string print(const Formula& f, int ctx) {
  switch (f.kind) {
    case Formula::Kind::subset: return print(f.terms[0], 0) + " <= " + print(f.terms[1], 0);
    case Formula::Kind::equal: return print(f.terms[0], 0) + " = " + print(f.terms[1], 0);
    case Formula::Kind::member: return print(f.terms[0], 0) + " in " + print(f.family);
    case Formula::Kind::disj: {
      std::string s = print(f.parts[0], 1) + " or " + print(f.parts[1], 2);
      return ctx > 1 ? "(" + s + ")" : s;
    }
    case Formula::Kind::conj: {
      std::string s = print(f.parts[0], 2) + " and " + print(f.parts[1], 3);
      return ctx > 2 ? "(" + s + ")" : s;
    }
    case Formula::Kind::negation: return "not " + print(f.parts[0], 3);
    case Formula::Kind::forall: {
      std::string s = "forall " + f.var + " in " + print(f.family) + ": " + print(f.parts[0], 0);
      return ctx > 0 ? "(" + s + ")" : s;
    }
  }
  return "";
}

}  // namespace detail

inline std::string pretty(const Definition& d) {
  return d.name + "(" + d.param + ") := " + detail::print(d.body, 0);
}

inline std::string pretty(const std::vector<Definition>& defs) {
  std::string out;
  for (const Definition& d : defs) out += pretty(d) + "\n";
  return out;
}

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

/// Evaluates definitions against spaces and maps. Families computed for a
/// space are memoized by address, so the spaces must outlive the evaluator.
class Evaluator {
 public:
  explicit Evaluator(const Environment& env) : env_(env) {}

  const SetFamily& family_of(const FiniteSpace& space, const std::string& name) {
    const auto key = std::make_pair(&space, name);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    SetFamily fam;
    if (const Definition* d = env_.find(name)) {
      fam = set_class(space, *d);
    } else {
      fam = family(space, *builtin_set_class(name));
    }
    return cache_.emplace(key, std::move(fam)).first->second;
  }

  SetFamily set_class(const FiniteSpace& space, const Definition& d) {
    if (d.map_class) {
      throw Error(ErrorKind::kArityError, d.name + " is a map class, not a set class");
    }
    std::vector<Subset> members;
    Context ctx{&space, &space, nullptr, {}};
    for (std::size_t i = 0; i < space.subset_count(); ++i) {
      const Subset a(static_cast<Subset::Bits>(i));
      ctx.bindings.assign(1, {d.param, a});
      if (holds(d.body, ctx)) members.push_back(a);
    }
    return SetFamily(std::move(members));
  }

  bool map_class(const SpaceMap& f, const Definition& d) {
    if (!d.map_class) {
      throw Error(ErrorKind::kArityError, d.name + " is a set class, not a map class");
    }
    Context ctx{&f.domain(), &f.codomain(), &f, {}};
    return holds(d.body, ctx);
  }

 private:
  struct Context {
    const FiniteSpace* x;
    const FiniteSpace* y;
    const SpaceMap* map;
    std::vector<std::pair<std::string, Subset>> bindings;

    const FiniteSpace& space(Side s) const { return s == Side::y ? *y : *x; }
    Subset lookup(const std::string& name) const {
      for (auto it = bindings.rbegin(); it != bindings.rend(); ++it) {
        if (it->first == name) return it->second;
      }
      return Subset{};  // unreachable after analysis
    }
  };

  Subset value(const Term& t, const Context& ctx) {
    const FiniteSpace& sp = ctx.space(t.side);
    switch (t.kind) {
      case Term::Kind::var: return ctx.lookup(t.name);
      case Term::Kind::full: return sp.full();
      case Term::Kind::empty: return Subset{};
      case Term::Kind::interior: return sp.interior(value(t.args[0], ctx));
      case Term::Kind::closure: return sp.closure(value(t.args[0], ctx));
      case Term::Kind::semi_closure: return sp.semi_closure(value(t.args[0], ctx));
      case Term::Kind::ro_hull: return regular_open_hull(sp, value(t.args[0], ctx));
      case Term::Kind::complement: return value(t.args[0], ctx).complement_in(sp.size());
      case Term::Kind::pre: return preimage(*ctx.map, value(t.args[0], ctx));
      case Term::Kind::im: return image(*ctx.map, value(t.args[0], ctx));
      case Term::Kind::join: return value(t.args[0], ctx) | value(t.args[1], ctx);
      case Term::Kind::meet: return value(t.args[0], ctx) & value(t.args[1], ctx);
    }
    return Subset{};
  }

  bool holds(const Formula& f, Context& ctx) {
    switch (f.kind) {
      case Formula::Kind::subset:
        return value(f.terms[0], ctx).subset_of(value(f.terms[1], ctx));
      case Formula::Kind::equal:
        return value(f.terms[0], ctx) == value(f.terms[1], ctx);
      case Formula::Kind::member:
        return family_of(ctx.space(f.family.side), f.family.name).contains(value(f.terms[0], ctx));
      case Formula::Kind::conj:
        return holds(f.parts[0], ctx) && holds(f.parts[1], ctx);
      case Formula::Kind::disj:
        return holds(f.parts[0], ctx) || holds(f.parts[1], ctx);
      case Formula::Kind::negation:
        return !holds(f.parts[0], ctx);
      case Formula::Kind::forall: {
        // Copy: evaluating the body may grow the cache and move entries.
        const std::vector<Subset> members =
            family_of(ctx.space(f.family.side), f.family.name).members();
        for (Subset v : members) {
          ctx.bindings.emplace_back(f.var, v);
          const bool ok = holds(f.parts[0], ctx);
          ctx.bindings.pop_back();
          if (!ok) return false;
        }
        return true;
      }
    }
    return false;
  }

  const Environment& env_;
  std::map<std::pair<const FiniteSpace*, std::string>, SetFamily> cache_;
};

inline SetFamily eval_set_class(const FiniteSpace& space, const Definition& d,
                                const Environment& env) {
  Evaluator ev(env);
  return ev.set_class(space, d);
}

inline bool eval_map_class(const SpaceMap& f, const Definition& d, const Environment& env) {
  Evaluator ev(env);
  return ev.map_class(f, d);
}

}  // namespace ftop::dsl

#endif  // FTOP_DSL_HPP_
