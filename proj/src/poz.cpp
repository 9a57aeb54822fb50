#include "polyq/poz.hpp"

#include <stdexcept>

namespace polyq {

PozVerdict in_poz(const Element& x) {
  for (const auto& c : x.cells())
    for (const auto& l : c.lits())
      if (!is_po_atom(l.atom))
        throw std::invalid_argument("in_poz: atom outside Po: " + l.atom.text() + " (" +
                                    family_name(classify(l.atom)) + ")");
  PozVerdict v;
  std::set<std::string> seen;
  for (const auto& c : x.cells()) {
    const Literal* pos = nullptr;
    for (const auto& l : c.lits())
      if (l.positive) {
        pos = &l;
        break;
      }
    if (!pos) return PozVerdict{};  // a satisfiable all-negative cell is large
    if (seen.insert(pos->atom.text()).second) v.covering.push_back(pos->atom);
  }
  v.in_poz = true;  // vacuously for the empty element
  return v;
}

DecomposeResult decompose(const Term& g, const std::vector<Element>& ys) {
  const size_t n = ys.size();
  for (size_t i = 0; i < n; ++i) {
    const Element& y = ys[i];
    bool shape_ok = y.cells().size() == 1 && y.cells()[0].lits().size() == 1 &&
                    y.cells()[0].lits()[0].positive && is_pof_atom(y.cells()[0].lits()[0].atom);
    if (!shape_ok)
      throw std::invalid_argument("decompose: generator " + std::to_string(i) +
                                  " is not a single all-ones hyperplane: " + serialize(y));
  }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (!is_empty(meet(ys[i], ys[j])))
        throw std::invalid_argument("decompose: generators " + std::to_string(i) + " and " +
                                    std::to_string(j) + " are not disjoint");

  auto var_name = [](size_t i) { return "y" + std::to_string(i); };

  DecomposeResult out;
  for (size_t i = 0; i <= n; ++i) {
    Env env;
    for (size_t j = 0; j < n; ++j)
      env[var_name(j)] = (i == j) ? element_full() : element_empty();
    out.sigmas.push_back(eval_term(g, env));
  }

  // Semantic verification of the identity; the syntactic extraction is never
  // trusted on its own.
  Env env;
  for (size_t j = 0; j < n; ++j) env[var_name(j)] = ys[j];
  Element lhs = eval_term(g, env);
  Element rhs = element_empty();
  for (size_t j = 0; j < n; ++j) rhs = join(rhs, meet(ys[j], out.sigmas[j]));
  Element off = out.sigmas[n];
  for (size_t j = 0; j < n; ++j) off = meet(off, complement(ys[j]));
  rhs = join(rhs, off);
  out.verified = equal(lhs, rhs);

  for (const auto& s : out.sigmas) out.classes.push_back(in_poz(s));
  return out;
}

}  // namespace polyq
