#pragma once

#include <map>
#include <memory>
#include <string>
#include <variant>

#include "polyq/algebra.hpp"

namespace polyq {

struct TermNode;
using Term = std::shared_ptr<const TermNode>;

// Expression tree over named generators, element constants, and the algebra
// operations.  Rendered terms are valid inputs for the expression parser.
struct TermNode {
  struct Const {
    Element value;
  };
  struct Var {
    std::string name;
  };
  struct Not {
    Term arg;
  };
  struct And {
    Term lhs, rhs;
  };
  struct Or {
    Term lhs, rhs;
  };
  struct Cyl {
    GammaSpec gamma;
    Term arg;
  };
  struct Sub {
    Transform tau;
    Term arg;
  };

  std::variant<Const, Var, Not, And, Or, Cyl, Sub> node;
};

Term t_const(Element e);
Term t_var(std::string name);
Term t_not(Term a);
Term t_and(Term a, Term b);
Term t_or(Term a, Term b);
Term t_cyl(GammaSpec g, Term a);
Term t_sub(Transform t, Term a);

using Env = std::map<std::string, Element>;

// Throws std::invalid_argument on an unbound generator name.
Element eval_term(const Term& t, const Env& env);

// Expression-grammar rendering: '+' for join, '*' for meet, '~' prefix,
// c{..}/C{..}/s[..]/s{..} applications, constants as a(q)/d(i,j)/H(..)/0/1 or
// a parenthesized disjunction for compound elements.
std::string render_term(const Term& t);

// Expression text for a bare element (as used for constants above).
std::string element_expr_text(const Element& e);

// Replaces every occurrence of the named variable.
Term term_substitute_var(const Term& t, const std::string& name, const Term& replacement);

}  // namespace polyq
