#include "mvmlab/term.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace mvmlab {

Term Term::variable(std::size_t index) {
  Term t;
  t.kind_ = Kind::Variable;
  t.index_ = index;
  return t;
}

Term Term::constant(std::string name) {
  Term t;
  t.kind_ = Kind::Constant;
  t.name_ = std::move(name);
  return t;
}

Term Term::apply(std::string op, std::vector<Term> args) {
  Term t;
  t.kind_ = Kind::Operation;
  t.name_ = std::move(op);
  t.args_ = std::move(args);
  return t;
}

std::size_t Term::variable_count() const {
  switch (kind_) {
    case Kind::Variable:
      return index_ + 1;
    case Kind::Constant:
      return 0;
    case Kind::Operation: {
      std::size_t n = 0;
      for (const Term& a : args_) n = std::max(n, a.variable_count());
      return n;
    }
  }
  return 0;
}

namespace {

const std::map<std::string, std::string, std::less<>>& infix_symbols() {
  static const std::map<std::string, std::string, std::less<>> symbols = {
      {"(+)", std::string(sig::kOplus)},
      {"(.)", std::string(sig::kOdot)},
      {"\\/", std::string(sig::kJoin)},
      {"/\\", std::string(sig::kMeet)},
  };
  return symbols;
}

std::string symbol_for(const std::string& op) {
  for (const auto& [sym, name] : infix_symbols()) {
    if (name == op) return sym;
  }
  return {};
}

std::string constant_symbol(const std::string& name) {
  if (name == sig::kZero) return "0";
  if (name == sig::kOne) return "1";
  return name;
}

}  // namespace

std::string Term::to_string(std::span<const std::string> names) const {
  switch (kind_) {
    case Kind::Variable:
      if (index_ < names.size()) return names[index_];
      return "v" + std::to_string(index_);
    case Kind::Constant:
      return constant_symbol(name_);
    case Kind::Operation:
      break;
  }
  auto wrap = [&](const Term& t) {
    std::string s = t.to_string(names);
    if (t.kind_ == Kind::Operation && t.args_.size() == 2 &&
        !symbol_for(t.name_).empty()) {
      return "(" + s + ")";
    }
    return s;
  };
  std::string sym = symbol_for(name_);
  if (args_.size() == 2 && !sym.empty()) {
    return wrap(args_[0]) + " " + sym + " " + wrap(args_[1]);
  }
  if (args_.size() == 1 && name_ == sig::kNeg) return "~" + wrap(args_[0]);
  std::string out = name_ + "(";
  for (std::size_t i = 0; i < args_.size(); ++i) {
    if (i) out += ", ";
    out += args_[i].to_string(names);
  }
  return out + ")";
}

Equation::Equation(Term l, Term r, std::vector<std::string> names,
                   std::string label_text)
    : lhs(std::move(l)),
      rhs(std::move(r)),
      var_count(std::max(lhs.variable_count(), rhs.variable_count())),
      var_names(std::move(names)),
      label(std::move(label_text)) {
  var_count = std::max(var_count, var_names.size());
}

std::string Equation::to_string() const {
  return lhs.to_string(var_names) + " = " + rhs.to_string(var_names);
}

namespace {

enum class Tok { Ident, Number, Infix, Neg, LParen, RParen, Comma, Equals, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::string_view rest = s.substr(i);
    bool matched = false;
    for (const auto& [sym, name] : infix_symbols()) {
      if (rest.substr(0, sym.size()) == sym) {
        out.push_back({Tok::Infix, sym, i});
        i += sym.size();
        matched = true;
        break;
      }
    }
    if (matched) continue;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) ||
                              s[j] == '_')) {
        ++j;
      }
      out.push_back({Tok::Ident, std::string(s.substr(i, j - i)), i});
      i = j;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::Number, std::string(s.substr(i, j - i)), i});
      i = j;
      continue;
    }
    switch (c) {
      case '(': out.push_back({Tok::LParen, "(", i}); break;
      case ')': out.push_back({Tok::RParen, ")", i}); break;
      case ',': out.push_back({Tok::Comma, ",", i}); break;
      case '=': out.push_back({Tok::Equals, "=", i}); break;
      case '~': out.push_back({Tok::Neg, "~", i}); break;
      default:
        throw ParseError("unexpected character '" + std::string(1, c) +
                         "' at column " + std::to_string(i + 1));
    }
    ++i;
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

/// Parses with variables recorded by name; indices are assigned afterwards.
class Parser {
 public:
  Parser(std::vector<Token> toks, const std::set<std::string>& constants)
      : toks_(std::move(toks)), constants_(constants) {}

  Term expression() {
    Term first = unary();
    if (peek().kind != Tok::Infix) return first;
    const std::string sym = peek().text;
    Term acc = std::move(first);
    while (peek().kind == Tok::Infix) {
      if (peek().text != sym) {
        throw error("mixed operators '" + sym + "' and '" + peek().text +
                    "' need parentheses");
      }
      ++pos_;
      Term rhs = unary();
      acc = Term::apply(infix_symbols().find(sym)->second,
                        {std::move(acc), std::move(rhs)});
    }
    return acc;
  }

  Term unary() {
    if (peek().kind == Tok::Neg) {
      ++pos_;
      return Term::apply(std::string(sig::kNeg), {unary()});
    }
    return primary();
  }

  Term primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::LParen: {
        ++pos_;
        Term inner = expression();
        expect(Tok::RParen, ")");
        return inner;
      }
      case Tok::Number:
        ++pos_;
        if (t.text == "0") return Term::constant(std::string(sig::kZero));
        if (t.text == "1") return Term::constant(std::string(sig::kOne));
        throw error("only the constants 0 and 1 are numeric");
      case Tok::Ident: {
        ++pos_;
        if (peek().kind == Tok::LParen) {
          ++pos_;
          std::vector<Term> args;
          if (peek().kind != Tok::RParen) {
            args.push_back(expression());
            while (peek().kind == Tok::Comma) {
              ++pos_;
              args.push_back(expression());
            }
          }
          expect(Tok::RParen, ")");
          return Term::apply(t.text, std::move(args));
        }
        if (constants_.count(t.text)) return Term::constant(t.text);
        // Placeholder index; renumbered once all names are known.
        names_.insert(t.text);
        return Term::apply("\x01var:" + t.text, {});
      }
      default:
        throw error("unexpected token '" + t.text + "'");
    }
  }

  const Token& peek() const { return toks_[pos_]; }

  void expect(Tok kind, const char* what) {
    if (peek().kind != kind) {
      throw error(std::string("expected '") + what + "'");
    }
    ++pos_;
  }

  ParseError error(const std::string& msg) const {
    return ParseError(msg + " at column " + std::to_string(peek().pos + 1));
  }

  const std::set<std::string>& names() const { return names_; }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  const std::set<std::string>& constants_;
  std::set<std::string> names_;
};

Term resolve_variables(const Term& t, const std::vector<std::string>& order) {
  if (t.kind() != Term::Kind::Operation) return t;
  const std::string& n = t.name();
  if (n.rfind("\x01var:", 0) == 0) {
    std::string name = n.substr(5);
    auto it = std::find(order.begin(), order.end(), name);
    return Term::variable(static_cast<std::size_t>(it - order.begin()));
  }
  std::vector<Term> args;
  args.reserve(t.args().size());
  for (const Term& a : t.args()) args.push_back(resolve_variables(a, order));
  return Term::apply(n, std::move(args));
}

}  // namespace

Equation parse_equation(std::string_view text,
                        const std::set<std::string>& constants,
                        std::string label) {
  Parser p(tokenize(text), constants);
  Term lhs = p.expression();
  p.expect(Tok::Equals, "=");
  Term rhs = p.expression();
  if (p.peek().kind != Tok::End) throw p.error("trailing input");
  std::vector<std::string> order(p.names().begin(), p.names().end());
  return Equation(resolve_variables(lhs, order), resolve_variables(rhs, order),
                  order, std::move(label));
}

Element eval_term(const FiniteAlgebra& algebra, const Term& term,
                  std::span<const Element> env) {
  switch (term.kind()) {
    case Term::Kind::Variable:
      if (term.index() >= env.size()) {
        throw AlgebraError("environment too short for variable " +
                           std::to_string(term.index()));
      }
      if (env[term.index()] >= algebra.size()) {
        throw AlgebraError("environment value out of range");
      }
      return env[term.index()];
    case Term::Kind::Constant:
      return algebra.constant(term.name());
    case Term::Kind::Operation:
      break;
  }
  const Operation& op = algebra.operation(term.name());
  if (op.arity != term.args().size()) {
    throw AlgebraError("arity mismatch for '" + op.name + "': expected " +
                       std::to_string(op.arity) + ", got " +
                       std::to_string(term.args().size()));
  }
  std::vector<Element> args;
  args.reserve(op.arity);
  for (const Term& a : term.args()) args.push_back(eval_term(algebra, a, env));
  return op.table[tuple_index(args, algebra.size())];
}

CompiledTerm::CompiledTerm(const FiniteAlgebra& algebra, const Term& term)
    : algebra_(&algebra) {
  std::size_t depth = 0;
  auto emit = [&](auto& self, const Term& t) -> void {
    switch (t.kind()) {
      case Term::Kind::Variable:
        program_.push_back({Code::Var, t.index(), 0});
        depth_ = std::max(depth_, ++depth);
        return;
      case Term::Kind::Constant:
        program_.push_back({Code::Value, algebra.constant(t.name()), 0});
        depth_ = std::max(depth_, ++depth);
        return;
      case Term::Kind::Operation:
        break;
    }
    auto idx = algebra.find_operation(t.name());
    if (!idx) throw AlgebraError("unbound operation '" + t.name() + "'");
    const Operation& op = algebra.operations()[*idx];
    if (op.arity != t.args().size()) {
      throw AlgebraError("arity mismatch for '" + op.name + "'");
    }
    for (const Term& a : t.args()) self(self, a);
    Code code = op.arity == 1   ? Code::Unary
                : op.arity == 2 ? Code::Binary
                                : Code::General;
    program_.push_back({code, *idx, op.arity});
    depth -= op.arity;
    depth_ = std::max(depth_, ++depth);
  };
  emit(emit, term);
}

Element CompiledTerm::eval(std::span<const Element> env) const {
  // Terms here are shallow; a small fixed stack covers them, with a heap
  // fallback for deep ones.
  Element small[32] = {};
  std::vector<Element> big;
  Element* stack = small;
  if (depth_ > 32) {
    big.resize(depth_);
    stack = big.data();
  }
  std::size_t sp = 0;
  const std::size_t n = algebra_->size();
  for (const Instr& in : program_) {
    switch (in.code) {
      case Code::Var:
        stack[sp++] = env[in.arg];
        break;
      case Code::Value:
        stack[sp++] = static_cast<Element>(in.arg);
        break;
      case Code::Unary:
        stack[sp - 1] = algebra_->operations()[in.arg].table[stack[sp - 1]];
        break;
      case Code::Binary: {
        Element b = stack[--sp];
        Element a = stack[sp - 1];
        stack[sp - 1] = algebra_->operations()[in.arg].table[a * n + b];
        break;
      }
      case Code::General: {
        sp -= in.arity;
        std::span<const Element> args(stack + sp, in.arity);
        stack[sp++] = algebra_->operations()[in.arg].table[tuple_index(args, n)];
        break;
      }
    }
  }
  return stack[0];
}

HoldsResult holds(const FiniteAlgebra& algebra, const Equation& equation) {
  CompiledTerm lhs(algebra, equation.lhs);
  CompiledTerm rhs(algebra, equation.rhs);
  std::vector<Element> env(equation.var_count, 0);
  do {
    if (lhs.eval(env) != rhs.eval(env)) return HoldsResult{false, env};
  } while (next_tuple(env, algebra.size()));
  return HoldsResult{};
}

}  // namespace mvmlab
