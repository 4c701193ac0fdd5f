#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "specker/free.hpp"
#include "specker/rational.hpp"

namespace specker {

/// Abstract syntax of vector-lattice expressions over named generators.
///
/// Grammar (precedence low -> high), ASCII spellings:
///   expr  :=  expr ('+' | '-') join   |  join
///   join  :=  join "\/" meetx         |  meetx
///   meetx :=  meetx "/\" unary        |  unary
///   unary :=  '-' unary  |  'abs' '(' expr ')'  |  rational '*' unary  |  prim
///   prim  :=  'u'  |  'g'<digits>  |  rational  |  '(' expr ')'
/// A rational literal is a scalar: it must be the left operand of '*'. The
/// literal 0 standing alone denotes the zero element.
class Term {
 public:
  enum class BinaryKind { add, subtract, meet, join };

  struct Zero {};
  struct Unit {};
  struct Generator {
    int index;
  };
  struct Negate {
    std::shared_ptr<const Term> arg;
  };
  struct Abs {
    std::shared_ptr<const Term> arg;
  };
  struct ScalarMultiple {
    Rational scalar;
    std::shared_ptr<const Term> arg;
  };
  struct Binary {
    BinaryKind kind;
    std::shared_ptr<const Term> lhs;
    std::shared_ptr<const Term> rhs;
  };

  using Node = std::variant<Zero, Unit, Generator, Negate, Abs, ScalarMultiple, Binary>;

  explicit Term(Node node) : node_(std::move(node)) {}
  const Node& node() const { return node_; }

 private:
  Node node_;
};

bool operator==(const Term& a, const Term& b);

/// Parses an expression with generators g0..g(n-1). Throws ParseError with a
/// byte position on malformed input or out-of-range generator names.
Term parse_term(std::string_view input, int generator_count);

/// Canonical rendering; parse_term(print_term(t), n) reproduces t.
std::string print_term(const Term& t);

/// A Specker lattice together with named generator elements g0..g(k-1).
struct LatticeContext {
  SpeckerLattice lattice;
  std::vector<SpeckerElement> generators;
};

/// The lattice H(B) with one generator per atom, g(i) = the atom indicator.
LatticeContext atom_context(BooleanAlgebra algebra);

SpeckerElement eval_term(const Term& t, const LatticeContext& context);
SpeckerElement eval_term(const Term& t, const FreeLattice& context);

/// Evaluation in the countably generated free lattice.
FreeElement eval_term_free(const Term& t);

}  // namespace specker
