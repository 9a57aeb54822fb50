#include "polyq/term.hpp"

#include <stdexcept>

namespace polyq {

Term t_const(Element e) { return std::make_shared<TermNode>(TermNode{TermNode::Const{std::move(e)}}); }
Term t_var(std::string name) { return std::make_shared<TermNode>(TermNode{TermNode::Var{std::move(name)}}); }
Term t_not(Term a) { return std::make_shared<TermNode>(TermNode{TermNode::Not{std::move(a)}}); }
Term t_and(Term a, Term b) {
  return std::make_shared<TermNode>(TermNode{TermNode::And{std::move(a), std::move(b)}});
}
Term t_or(Term a, Term b) {
  return std::make_shared<TermNode>(TermNode{TermNode::Or{std::move(a), std::move(b)}});
}
Term t_cyl(GammaSpec g, Term a) {
  return std::make_shared<TermNode>(TermNode{TermNode::Cyl{std::move(g), std::move(a)}});
}
Term t_sub(Transform t, Term a) {
  return std::make_shared<TermNode>(TermNode{TermNode::Sub{std::move(t), std::move(a)}});
}

Element eval_term(const Term& t, const Env& env) {
  const auto& n = t->node;
  if (auto c = std::get_if<TermNode::Const>(&n)) return c->value;
  if (auto v = std::get_if<TermNode::Var>(&n)) {
    auto it = env.find(v->name);
    if (it == env.end()) throw std::invalid_argument("unbound identifier: " + v->name);
    return it->second;
  }
  if (auto nn = std::get_if<TermNode::Not>(&n)) return complement(eval_term(nn->arg, env));
  if (auto a = std::get_if<TermNode::And>(&n))
    return meet(eval_term(a->lhs, env), eval_term(a->rhs, env));
  if (auto o = std::get_if<TermNode::Or>(&n))
    return join(eval_term(o->lhs, env), eval_term(o->rhs, env));
  if (auto cy = std::get_if<TermNode::Cyl>(&n)) return cylindrify(eval_term(cy->arg, env), cy->gamma);
  auto s = std::get_if<TermNode::Sub>(&n);
  return substitute(eval_term(s->arg, env), s->tau);
}

namespace {

// Single-atom constants get the dedicated atom syntax.
std::string atom_expr_text(const Atom& a) {
  const CoeffSeq& c = a.coeffs();
  if (is_zero(c.tail) && c.entries.size() == 2 && is_zero(a.rhs())) {
    auto it = c.entries.begin();
    auto jt = std::next(it);
    if (it->second == Rat{1, 1} && jt->second == Rat{-1, 1})
      return "d(" + std::to_string(it->first) + "," + std::to_string(jt->first) + ")";
  }
  if (c.entries.empty() && c.tail == Rat{1, 1}) return "a(" + render_rat(a.rhs()) + ")";
  std::string s = "H(" + render_rat(a.rhs()) + ";";
  for (const auto& [i, v] : c.entries) s += " " + std::to_string(i) + ":" + render_rat(v);
  s += " | " + render_rat(c.tail) + ")";
  return s;
}

}  // namespace

std::string element_expr_text(const Element& e) {
  if (e.no_cells()) return "0";
  if (e.is_full()) return "1";
  std::string s;
  bool outer_first = true;
  for (const auto& cell : e.cells()) {
    if (!outer_first) s += " + ";
    outer_first = false;
    bool inner_first = true;
    for (const auto& l : cell.lits()) {
      if (!inner_first) s += "*";
      inner_first = false;
      if (!l.positive) s += '~';
      s += atom_expr_text(l.atom);
    }
  }
  // Anything that is not a single factor gets parenthesized so the text can
  // sit inside any expression context.
  if (e.cells().size() > 1 || e.cells()[0].lits().size() > 1) return "(" + s + ")";
  return s;
}

namespace {

// Precedence levels: 0 = or, 1 = and, 2 = unary/atom.
std::string render(const Term& t, int parent_level) {
  const auto& n = t->node;
  std::string s;
  int level;
  if (auto c = std::get_if<TermNode::Const>(&n)) {
    s = element_expr_text(c->value);
    level = 2;
  } else if (auto v = std::get_if<TermNode::Var>(&n)) {
    s = v->name;
    level = 2;
  } else if (auto nn = std::get_if<TermNode::Not>(&n)) {
    s = "~" + render(nn->arg, 2);
    level = 2;
  } else if (auto a = std::get_if<TermNode::And>(&n)) {
    s = render(a->lhs, 1) + "*" + render(a->rhs, 1);
    level = 1;
  } else if (auto o = std::get_if<TermNode::Or>(&n)) {
    s = render(o->lhs, 0) + " + " + render(o->rhs, 0);
    level = 0;
  } else if (auto cy = std::get_if<TermNode::Cyl>(&n)) {
    s = render_gamma(cy->gamma) + "(" + render(cy->arg, 0) + ")";
    level = 2;
  } else {
    auto su = std::get_if<TermNode::Sub>(&n);
    s = render_transform(su->tau) + "(" + render(su->arg, 0) + ")";
    level = 2;
  }
  if (level < parent_level) return "(" + s + ")";
  return s;
}

}  // namespace

std::string render_term(const Term& t) { return render(t, 0); }

Term term_substitute_var(const Term& t, const std::string& name, const Term& replacement) {
  const auto& n = t->node;
  if (std::get_if<TermNode::Const>(&n)) return t;
  if (auto v = std::get_if<TermNode::Var>(&n)) return v->name == name ? replacement : t;
  if (auto nn = std::get_if<TermNode::Not>(&n))
    return t_not(term_substitute_var(nn->arg, name, replacement));
  if (auto a = std::get_if<TermNode::And>(&n))
    return t_and(term_substitute_var(a->lhs, name, replacement),
                 term_substitute_var(a->rhs, name, replacement));
  if (auto o = std::get_if<TermNode::Or>(&n))
    return t_or(term_substitute_var(o->lhs, name, replacement),
                term_substitute_var(o->rhs, name, replacement));
  if (auto cy = std::get_if<TermNode::Cyl>(&n))
    return t_cyl(cy->gamma, term_substitute_var(cy->arg, name, replacement));
  auto su = std::get_if<TermNode::Sub>(&n);
  return t_sub(su->tau, term_substitute_var(su->arg, name, replacement));
}

}  // namespace polyq
