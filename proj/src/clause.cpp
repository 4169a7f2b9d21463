#include "uaw/clause.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>
#include <sstream>

namespace uaw {

TermPtr t_var(const std::string& name) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::var;
  t->var = name;
  return t;
}
TermPtr t_bot() {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::bot;
  return t;
}
TermPtr t_top() {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::top;
  return t;
}
TermPtr t_neg(TermPtr x) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::neg;
  t->a = std::move(x);
  return t;
}
TermPtr t_star(TermPtr x) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::star;
  t->a = std::move(x);
  return t;
}
TermPtr t_meet(TermPtr x, TermPtr y) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::meet;
  t->a = std::move(x);
  t->b = std::move(y);
  return t;
}
TermPtr t_join(TermPtr x, TermPtr y) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::join;
  t->a = std::move(x);
  t->b = std::move(y);
  return t;
}

int term_cmp(const TermPtr& x, const TermPtr& y) {
  if (x->kind != y->kind) return x->kind < y->kind ? -1 : 1;
  switch (x->kind) {
    case Term::Kind::var:
      return x->var.compare(y->var) < 0 ? -1 : (x->var == y->var ? 0 : 1);
    case Term::Kind::bot:
    case Term::Kind::top: return 0;
    case Term::Kind::neg:
    case Term::Kind::star: return term_cmp(x->a, y->a);
    case Term::Kind::meet:
    case Term::Kind::join: {
      int c = term_cmp(x->a, y->a);
      return c != 0 ? c : term_cmp(x->b, y->b);
    }
  }
  return 0;
}

bool term_eq(const TermPtr& x, const TermPtr& y) { return term_cmp(x, y) == 0; }

void collect_vars(const TermPtr& t, std::vector<std::string>& out) {
  switch (t->kind) {
    case Term::Kind::var: out.push_back(t->var); break;
    case Term::Kind::neg:
    case Term::Kind::star: collect_vars(t->a, out); break;
    case Term::Kind::meet:
    case Term::Kind::join:
      collect_vars(t->a, out);
      collect_vars(t->b, out);
      break;
    default: break;
  }
}

int identity_cmp(const Identity& x, const Identity& y) {
  int c = term_cmp(x.lhs, y.lhs);
  return c != 0 ? c : term_cmp(x.rhs, y.rhs);
}

bool identity_eq(const Identity& x, const Identity& y) { return identity_cmp(x, y) == 0; }

void Clause::normalize() {
  auto norm = [](std::vector<Identity>& v) {
    std::sort(v.begin(), v.end(),
              [](const Identity& a, const Identity& b) { return identity_cmp(a, b) < 0; });
    v.erase(std::unique(v.begin(), v.end(),
                        [](const Identity& a, const Identity& b) { return identity_eq(a, b); }),
            v.end());
  };
  norm(premises);
  norm(conclusions);
}

std::vector<std::string> Clause::variables() const {
  std::vector<std::string> vars;
  for (const auto& i : premises) {
    collect_vars(i.lhs, vars);
    collect_vars(i.rhs, vars);
  }
  for (const auto& i : conclusions) {
    collect_vars(i.lhs, vars);
    collect_vars(i.rhs, vars);
  }
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

bool Clause::operator==(const Clause& o) const {
  if (premises.size() != o.premises.size() || conclusions.size() != o.conclusions.size())
    return false;
  for (size_t i = 0; i < premises.size(); ++i)
    if (!identity_eq(premises[i], o.premises[i])) return false;
  for (size_t i = 0; i < conclusions.size(); ++i)
    if (!identity_eq(conclusions[i], o.conclusions[i])) return false;
  return true;
}

// ---- parser -----------------------------------------------------------------

namespace {

struct Lexer {
  const std::string& text;
  size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }
  bool peek(const char* tok) {
    skip_ws();
    size_t len = std::strlen(tok);
    return text.compare(pos, len, tok) == 0;
  }
  bool eat(const char* tok) {
    if (!peek(tok)) return false;
    pos += std::strlen(tok);
    return true;
  }
  void expect(const char* tok, const char* what) {
    if (!eat(tok))
      throw ParseError(std::string("expected ") + what + " at offset " + std::to_string(pos),
                       static_cast<int>(pos));
  }
  std::optional<std::string> word() {
    skip_ws();
    if (pos >= text.size() || !std::isalpha(static_cast<unsigned char>(text[pos])))
      return std::nullopt;
    size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    return text.substr(start, pos - start);
  }
};

struct Parser {
  Lexer lex;

  TermPtr atom() {
    lex.skip_ws();
    if (lex.eat("(")) {
      TermPtr t = join();
      lex.expect(")", "')'");
      return postfix(t);
    }
    if (lex.eat("~")) return t_neg(atom());
    size_t start = lex.pos;
    auto w = lex.word();
    if (!w)
      throw ParseError("expected a term at offset " + std::to_string(lex.pos),
                       static_cast<int>(lex.pos));
    if (*w == "bot") return postfix(t_bot());
    if (*w == "top") return postfix(t_top());
    if (*w == "true" || *w == "false")
      throw ParseError("'" + *w + "' is not a term (offset " + std::to_string(start) + ")",
                       static_cast<int>(start));
    return postfix(t_var(*w));
  }

  TermPtr postfix(TermPtr t) {
    while (true) {
      lex.skip_ws();
      if (lex.pos < lex.text.size() && lex.text[lex.pos] == '*') {
        ++lex.pos;
        t = t_star(std::move(t));
      } else {
        return t;
      }
    }
  }

  TermPtr meet() {
    TermPtr t = atom();
    while (lex.eat("/\\")) t = t_meet(std::move(t), atom());
    return t;
  }

  TermPtr join() {
    TermPtr t = meet();
    while (lex.eat("\\/")) t = t_join(std::move(t), meet());
    return t;
  }

  Identity identity() {
    TermPtr l = join();
    lex.skip_ws();
    if (lex.eat("<=")) {
      TermPtr r = join();
      return Identity{t_meet(l, r), l};  // phi <= psi  ~~>  phi /\ psi = phi
    }
    if (lex.peek("=>"))
      throw ParseError("expected '=' or '<=' before '=>' at offset " + std::to_string(lex.pos),
                       static_cast<int>(lex.pos));
    lex.expect("=", "'=' or '<='");
    TermPtr r = join();
    return Identity{std::move(l), std::move(r)};
  }

  Clause clause() {
    Clause c;
    if (lex.eat("true")) {
      // empty premise set
    } else {
      c.premises.push_back(identity());
      while (lex.eat(",")) c.premises.push_back(identity());
    }
    lex.expect("=>", "'=>'");
    if (lex.eat("false")) {
      // empty conclusion set
    } else {
      c.conclusions.push_back(identity());
      while (lex.eat("|")) c.conclusions.push_back(identity());
    }
    if (!lex.at_end())
      throw ParseError("trailing input at offset " + std::to_string(lex.pos),
                       static_cast<int>(lex.pos));
    c.normalize();
    return c;
  }
};

}  // namespace

TermPtr parse_term(const std::string& text) {
  Parser p{Lexer{text}};
  TermPtr t = p.join();
  if (!p.lex.at_end())
    throw ParseError("trailing input at offset " + std::to_string(p.lex.pos),
                     static_cast<int>(p.lex.pos));
  return t;
}

Clause parse_clause(const std::string& text) {
  Parser p{Lexer{text}};
  return p.clause();
}

// ---- printer ----------------------------------------------------------------

namespace {

// precedence levels: join 0, meet 1, neg 2, star 3, atoms 4
int term_level(const TermPtr& t) {
  switch (t->kind) {
    case Term::Kind::join: return 0;
    case Term::Kind::meet: return 1;
    case Term::Kind::neg: return 2;
    case Term::Kind::star: return 3;
    default: return 4;
  }
}

void print_at(const TermPtr& t, int min_level, std::string& out) {
  bool paren = term_level(t) < min_level;
  if (paren) out += "(";
  switch (t->kind) {
    case Term::Kind::var: out += t->var; break;
    case Term::Kind::bot: out += "bot"; break;
    case Term::Kind::top: out += "top"; break;
    case Term::Kind::neg:
      out += "~";
      print_at(t->a, 2, out);
      break;
    case Term::Kind::star:
      print_at(t->a, 3, out);
      out += "*";
      break;
    case Term::Kind::meet:
      print_at(t->a, 1, out);
      out += " /\\ ";
      print_at(t->b, 2, out);
      break;
    case Term::Kind::join:
      print_at(t->a, 0, out);
      out += " \\/ ";
      print_at(t->b, 1, out);
      break;
  }
  if (paren) out += ")";
}

}  // namespace

std::string print_term(const TermPtr& t) {
  std::string out;
  print_at(t, 0, out);
  return out;
}

std::string print_identity(const Identity& i) {
  return print_term(i.lhs) + " = " + print_term(i.rhs);
}

std::string print_clause(const Clause& c) {
  std::string out;
  if (c.premises.empty()) {
    out += "true";
  } else {
    for (size_t i = 0; i < c.premises.size(); ++i) {
      if (i) out += ", ";
      out += print_identity(c.premises[i]);
    }
  }
  out += " => ";
  if (c.conclusions.empty()) {
    out += "false";
  } else {
    for (size_t i = 0; i < c.conclusions.size(); ++i) {
      if (i) out += " | ";
      out += print_identity(c.conclusions[i]);
    }
  }
  return out;
}

// ---- satisfaction -----------------------------------------------------------

SatResult satisfies(const FiniteAlgebra& a, const Clause& c, const Budgets& budgets) {
  std::vector<std::string> vars = c.variables();
  const int k = static_cast<int>(vars.size());
  long long count = 1;
  for (int i = 0; i < k; ++i) {
    count *= a.size;
    if (count > budgets.max_assignments)
      throw BudgetError("satisfies: assignment space exceeds budget",
                        static_cast<std::uint64_t>(count),
                        static_cast<std::uint64_t>(budgets.max_assignments));
  }
  std::vector<std::pair<std::string, int>> assignment;
  for (const auto& v : vars) assignment.emplace_back(v, 0);
  for (long long code = 0; code < count; ++code) {
    long long cc = code;
    for (int i = k - 1; i >= 0; --i) {
      assignment[i].second = static_cast<int>(cc % a.size);
      cc /= a.size;
    }
    bool premises_hold = true;
    for (const auto& id : c.premises) {
      if (eval_term(a, id.lhs, assignment) != eval_term(a, id.rhs, assignment)) {
        premises_hold = false;
        break;
      }
    }
    if (!premises_hold) continue;
    bool some_conclusion = false;
    for (const auto& id : c.conclusions) {
      if (eval_term(a, id.lhs, assignment) == eval_term(a, id.rhs, assignment)) {
        some_conclusion = true;
        break;
      }
    }
    if (!some_conclusion) {
      SatResult r;
      r.ok = false;
      r.witness = assignment;
      return r;
    }
  }
  return {};
}

ClassResult valid_in_class(const std::vector<FiniteAlgebra>& algebras, const Clause& c,
                           const Budgets& budgets) {
  for (size_t i = 0; i < algebras.size(); ++i) {
    SatResult s = satisfies(algebras[i], c, budgets);
    if (!s) {
      ClassResult r;
      r.ok = false;
      r.failing_index = static_cast<int>(i);
      r.failure = std::move(s);
      return r;
    }
  }
  return {};
}

// ---- registry ---------------------------------------------------------------

const std::vector<RegistryEntry>& clause_registry() {
  static const std::vector<RegistryEntry> reg = [] {
    std::vector<std::pair<std::string, std::string>> texts = {
        {"C1", "top = bot => false"},
        {"C2", "x /\\ y = bot => x = bot | y = bot"},
        {"C3", "x \\/ y = top => x = top | y = top"},
        {"C4", "x = ~x => false"},
        {"C5", "x = ~x => x = y"},
        {"C6", "x <= ~x, ~(x \\/ y) <= x \\/ y, ~y \\/ z = top => z = top"},
        {"C7", "x <= ~x, y <= ~y, x /\\ y = bot => x \\/ y <= ~(x \\/ y)"},
        {"C8", "~x <= x, x /\\ ~y <= ~x \\/ y => ~y <= y"},
    };
    std::vector<RegistryEntry> out;
    for (auto& [id, text] : texts) out.push_back({id, parse_clause(text), text});
    return out;
  }();
  return reg;
}

const RegistryEntry& registry_entry(const std::string& id) {
  for (const auto& e : clause_registry())
    if (e.id == id) return e;
  throw DataError("unknown registry clause '" + id + "'");
}

std::optional<std::string> registry_lookup(const Clause& c) {
  for (const auto& e : clause_registry())
    if (e.clause == c) return e.id;
  return std::nullopt;
}

std::string format_assignment(const std::vector<std::pair<std::string, int>>& assignment,
                              const FiniteAlgebra& a) {
  std::string out;
  for (size_t i = 0; i < assignment.size(); ++i) {
    if (i) out += ", ";
    out += assignment[i].first + ":=" + a.label(assignment[i].second);
  }
  return out;
}

}  // namespace uaw
