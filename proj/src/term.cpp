#include "specker/term.hpp"

#include <cctype>

#include "specker/error.hpp"

namespace specker {

bool operator==(const Term& a, const Term& b) {
  const Term::Node& x = a.node();
  const Term::Node& y = b.node();
  if (x.index() != y.index()) return false;
  return std::visit(
      [&](const auto& lhs) -> bool {
        using T = std::decay_t<decltype(lhs)>;
        const T& rhs = std::get<T>(y);
        if constexpr (std::is_same_v<T, Term::Zero> || std::is_same_v<T, Term::Unit>) {
          return true;
        } else if constexpr (std::is_same_v<T, Term::Generator>) {
          return lhs.index == rhs.index;
        } else if constexpr (std::is_same_v<T, Term::Negate> || std::is_same_v<T, Term::Abs>) {
          return *lhs.arg == *rhs.arg;
        } else if constexpr (std::is_same_v<T, Term::ScalarMultiple>) {
          return lhs.scalar == rhs.scalar && *lhs.arg == *rhs.arg;
        } else {
          return lhs.kind == rhs.kind && *lhs.lhs == *rhs.lhs && *lhs.rhs == *rhs.rhs;
        }
      },
      x);
}

namespace {

using TermPtr = std::shared_ptr<const Term>;

TermPtr make(Term::Node node) { return std::make_shared<const Term>(std::move(node)); }

enum class TokKind { number, unit, generator, abs_name, plus, minus, star, join, meet, lparen, rparen, end };

struct Token {
  TokKind kind;
  std::size_t pos;
  Rational number{0};
  int generator = 0;
};

class Lexer {
 public:
  Lexer(std::string_view input, int generator_count)
      : input_(input), generator_count_(generator_count) {
    advance();
  }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < input_.size() && std::isspace(static_cast<unsigned char>(input_[pos_]))) ++pos_;
    current_.pos = pos_;
    if (pos_ >= input_.size()) {
      current_.kind = TokKind::end;
      return;
    }
    char c = input_[pos_];
    switch (c) {
      case '+': current_.kind = TokKind::plus; ++pos_; return;
      case '-': current_.kind = TokKind::minus; ++pos_; return;
      case '*': current_.kind = TokKind::star; ++pos_; return;
      case '(': current_.kind = TokKind::lparen; ++pos_; return;
      case ')': current_.kind = TokKind::rparen; ++pos_; return;
      case '\\':
        if (pos_ + 1 < input_.size() && input_[pos_ + 1] == '/') {
          current_.kind = TokKind::join;
          pos_ += 2;
          return;
        }
        throw ParseError("expected \"\\/\"", pos_);
      case '/':
        if (pos_ + 1 < input_.size() && input_[pos_ + 1] == '\\') {
          current_.kind = TokKind::meet;
          pos_ += 2;
          return;
        }
        throw ParseError("expected \"/\\\"", pos_);
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < input_.size() && std::isdigit(static_cast<unsigned char>(input_[pos_]))) ++pos_;
      // "p/q" is one token; "/" continues the number only when a digit follows.
      if (pos_ + 1 < input_.size() && input_[pos_] == '/' &&
          std::isdigit(static_cast<unsigned char>(input_[pos_ + 1]))) {
        ++pos_;
        while (pos_ < input_.size() && std::isdigit(static_cast<unsigned char>(input_[pos_]))) ++pos_;
      }
      current_.kind = TokKind::number;
      current_.number = Rational::from_string(input_.substr(start, pos_ - start));
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < input_.size() &&
             (std::isalnum(static_cast<unsigned char>(input_[pos_])) || input_[pos_] == '_')) {
        ++pos_;
      }
      std::string_view word = input_.substr(start, pos_ - start);
      if (word == "u") {
        current_.kind = TokKind::unit;
        return;
      }
      if (word == "abs") {
        current_.kind = TokKind::abs_name;
        return;
      }
      if (word.size() >= 2 && word[0] == 'g') {
        bool digits = true;
        for (char d : word.substr(1)) digits = digits && std::isdigit(static_cast<unsigned char>(d));
        if (digits) {
          int idx = 0;
          for (char d : word.substr(1)) {
            idx = idx * 10 + (d - '0');
            if (idx > 1'000'000) throw ParseError("generator index too large", start);
          }
          if (idx >= generator_count_) {
            throw ParseError("unknown generator \"" + std::string(word) + "\" (declared count " +
                                 std::to_string(generator_count_) + ")",
                             start);
          }
          current_.kind = TokKind::generator;
          current_.generator = idx;
          return;
        }
      }
      throw ParseError("unknown name \"" + std::string(word) + "\"", start);
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  std::string_view input_;
  int generator_count_;
  std::size_t pos_ = 0;
  Token current_{TokKind::end, 0};
};

/// Parser intermediate: either a term or a bare scalar still waiting for '*'.
struct Parsed {
  TermPtr term;       // null when scalar
  Rational scalar{0};
  std::size_t pos = 0;
};

class Parser {
 public:
  Parser(std::string_view input, int generator_count) : lexer_(input, generator_count) {}

  Term parse() {
    Parsed p = parse_additive();
    if (lexer_.peek().kind != TokKind::end) {
      throw ParseError("unexpected trailing input", lexer_.peek().pos);
    }
    return Term(require_term(p)->node());
  }

 private:
  /// A scalar literal is only a term when it is zero.
  TermPtr require_term(const Parsed& p) {
    if (p.term) return p.term;
    if (p.scalar.is_zero()) return make(Term::Zero{});
    throw ParseError("rational literal must be the left operand of '*'", p.pos);
  }

  Parsed parse_additive() {
    Parsed lhs = parse_join();
    while (lexer_.peek().kind == TokKind::plus || lexer_.peek().kind == TokKind::minus) {
      Token op = lexer_.take();
      Parsed rhs = parse_join();
      Term::BinaryKind kind =
          op.kind == TokKind::plus ? Term::BinaryKind::add : Term::BinaryKind::subtract;
      lhs = Parsed{make(Term::Binary{kind, require_term(lhs), require_term(rhs)}), Rational(0),
                   lhs.pos};
    }
    return lhs;
  }

  Parsed parse_join() {
    Parsed lhs = parse_meet();
    while (lexer_.peek().kind == TokKind::join) {
      std::size_t pos = lexer_.take().pos;
      Parsed rhs = parse_meet();
      lhs = Parsed{make(Term::Binary{Term::BinaryKind::join, require_term(lhs), require_term(rhs)}),
                   Rational(0), pos};
    }
    return lhs;
  }

  Parsed parse_meet() {
    Parsed lhs = parse_unary();
    while (lexer_.peek().kind == TokKind::meet) {
      std::size_t pos = lexer_.take().pos;
      Parsed rhs = parse_unary();
      lhs = Parsed{make(Term::Binary{Term::BinaryKind::meet, require_term(lhs), require_term(rhs)}),
                   Rational(0), pos};
    }
    return lhs;
  }

  Parsed parse_unary() {
    const Token& tok = lexer_.peek();
    if (tok.kind == TokKind::minus) {
      std::size_t pos = lexer_.take().pos;
      Parsed arg = parse_unary();
      if (!arg.term) return Parsed{nullptr, -arg.scalar, pos};
      return Parsed{make(Term::Negate{arg.term}), Rational(0), pos};
    }
    if (tok.kind == TokKind::abs_name) {
      std::size_t pos = lexer_.take().pos;
      expect(TokKind::lparen, "expected '(' after abs");
      Parsed arg = parse_additive();
      expect(TokKind::rparen, "expected ')'");
      return Parsed{make(Term::Abs{require_term(arg)}), Rational(0), pos};
    }
    Parsed prim = parse_primary();
    if (!prim.term && lexer_.peek().kind == TokKind::star) {
      lexer_.take();
      Parsed arg = parse_unary();
      return Parsed{make(Term::ScalarMultiple{prim.scalar, require_term(arg)}), Rational(0),
                    prim.pos};
    }
    return prim;
  }

  Parsed parse_primary() {
    Token tok = lexer_.take();
    switch (tok.kind) {
      case TokKind::number:
        return Parsed{nullptr, tok.number, tok.pos};
      case TokKind::unit:
        return Parsed{make(Term::Unit{}), Rational(0), tok.pos};
      case TokKind::generator:
        return Parsed{make(Term::Generator{tok.generator}), Rational(0), tok.pos};
      case TokKind::lparen: {
        Parsed inner = parse_additive();
        expect(TokKind::rparen, "expected ')'");
        inner.pos = tok.pos;
        return inner;
      }
      default:
        throw ParseError("expected a term", tok.pos);
    }
  }

  void expect(TokKind kind, const char* message) {
    if (lexer_.peek().kind != kind) throw ParseError(message, lexer_.peek().pos);
    lexer_.take();
  }

  Lexer lexer_;
};

int precedence_of(const Term& t) {
  return std::visit(
      [](const auto& node) -> int {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, Term::Binary>) {
          switch (node.kind) {
            case Term::BinaryKind::add:
            case Term::BinaryKind::subtract: return 0;
            case Term::BinaryKind::join: return 1;
            case Term::BinaryKind::meet: return 2;
          }
          return 0;
        } else if constexpr (std::is_same_v<T, Term::Negate> ||
                             std::is_same_v<T, Term::ScalarMultiple>) {
          return 3;
        } else {
          return 4;  // atoms and abs(...) never need parentheses
        }
      },
      t.node());
}

void print_into(const Term& t, std::string& out, int min_precedence) {
  bool needs_parens = precedence_of(t) < min_precedence;
  if (needs_parens) out += '(';
  std::visit(
      [&](const auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, Term::Zero>) {
          out += '0';
        } else if constexpr (std::is_same_v<T, Term::Unit>) {
          out += 'u';
        } else if constexpr (std::is_same_v<T, Term::Generator>) {
          out += 'g';
          out += std::to_string(node.index);
        } else if constexpr (std::is_same_v<T, Term::Negate>) {
          out += '-';
          print_into(*node.arg, out, 3);
        } else if constexpr (std::is_same_v<T, Term::Abs>) {
          out += "abs(";
          print_into(*node.arg, out, 0);
          out += ')';
        } else if constexpr (std::is_same_v<T, Term::ScalarMultiple>) {
          if (node.scalar.sign() < 0) {
            out += '(';
            out += node.scalar.str();
            out += ')';
          } else {
            out += node.scalar.str();
          }
          out += '*';
          print_into(*node.arg, out, 3);
        } else {
          const char* op = nullptr;
          int prec = 0;
          switch (node.kind) {
            case Term::BinaryKind::add: op = " + "; prec = 0; break;
            case Term::BinaryKind::subtract: op = " - "; prec = 0; break;
            case Term::BinaryKind::join: op = " \\/ "; prec = 1; break;
            case Term::BinaryKind::meet: op = " /\\ "; prec = 2; break;
          }
          print_into(*node.lhs, out, prec);
          out += op;
          print_into(*node.rhs, out, prec + 1);
        }
      },
      t.node());
  if (needs_parens) out += ')';
}

template <typename Value, typename Context>
Value eval_with(const Term& t, const Context& ctx) {
  return std::visit(
      [&](const auto& node) -> Value {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, Term::Zero>) {
          return ctx.zero();
        } else if constexpr (std::is_same_v<T, Term::Unit>) {
          return ctx.unit();
        } else if constexpr (std::is_same_v<T, Term::Generator>) {
          return ctx.generator(node.index);
        } else if constexpr (std::is_same_v<T, Term::Negate>) {
          return -eval_with<Value>(*node.arg, ctx);
        } else if constexpr (std::is_same_v<T, Term::Abs>) {
          return abs_val(eval_with<Value>(*node.arg, ctx));
        } else if constexpr (std::is_same_v<T, Term::ScalarMultiple>) {
          return node.scalar * eval_with<Value>(*node.arg, ctx);
        } else {
          Value lhs = eval_with<Value>(*node.lhs, ctx);
          Value rhs = eval_with<Value>(*node.rhs, ctx);
          switch (node.kind) {
            case Term::BinaryKind::add: return lhs + rhs;
            case Term::BinaryKind::subtract: return lhs - rhs;
            case Term::BinaryKind::meet: return meet(lhs, rhs);
            case Term::BinaryKind::join: return join(lhs, rhs);
          }
          throw Error("unreachable");
        }
      },
      t.node());
}

struct SpeckerEval {
  const SpeckerLattice& lattice;
  const std::vector<SpeckerElement>& generators;

  SpeckerElement zero() const { return lattice.zero(); }
  SpeckerElement unit() const { return lattice.unit(); }
  SpeckerElement generator(int i) const {
    if (i < 0 || i >= static_cast<int>(generators.size())) {
      throw DomainError("generator g" + std::to_string(i) + " not available in this context");
    }
    return generators[i];
  }
};

struct FreeEval {
  FreeElement zero() const { return FreeElement::zero(); }
  FreeElement unit() const { return FreeElement::unit(); }
  FreeElement generator(int i) const { return FreeElement::generator(i); }
};

}  // namespace

Term parse_term(std::string_view input, int generator_count) {
  return Parser(input, generator_count).parse();
}

std::string print_term(const Term& t) {
  std::string out;
  print_into(t, out, 0);
  return out;
}

LatticeContext atom_context(BooleanAlgebra algebra) {
  std::vector<SpeckerElement> generators;
  generators.reserve(algebra.atom_count());
  for (int a = 0; a < algebra.atom_count(); ++a) {
    generators.push_back(SpeckerElement::indicator(atom_element(algebra, a)));
  }
  return {SpeckerLattice(algebra), std::move(generators)};
}

SpeckerElement eval_term(const Term& t, const LatticeContext& context) {
  return eval_with<SpeckerElement>(t, SpeckerEval{context.lattice, context.generators});
}

SpeckerElement eval_term(const Term& t, const FreeLattice& context) {
  return eval_with<SpeckerElement>(t, SpeckerEval{context.lattice, context.generators});
}

FreeElement eval_term_free(const Term& t) { return eval_with<FreeElement>(t, FreeEval{}); }

}  // namespace specker
