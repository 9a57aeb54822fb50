#include "polyq/closure.hpp"

#include <algorithm>

namespace polyq {

namespace {

std::set<Coord> derive_window(const std::vector<Element>& xs, const GBounds& bounds) {
  if (!bounds.window.empty()) return bounds.window;
  std::set<Coord> w;
  for (const auto& x : xs)
    for (Coord i : element_support(x)) w.insert(i);
  for (const auto& p : bounds.po_pool)
    for (Coord i : element_support(p)) w.insert(i);
  return w;
}

struct Base {
  Element value;
  Term term;
};

std::vector<Base> base_elements(const std::vector<Element>& xs, const GBounds& bounds) {
  std::set<Coord> window = derive_window(xs, bounds);
  std::vector<Element> orbit = s_closure(xs, window);
  ElementIndex seen;
  std::vector<Base> out;
  for (const auto& e : orbit) {
    if (seen.insert(e).second) out.push_back(Base{e, t_const(e)});
  }
  for (const auto& p : bounds.po_pool) {
    if (seen.insert(p).second) out.push_back(Base{p, t_const(p)});
  }
  return out;
}

}  // namespace

std::vector<SignedProduct> g_products(const std::vector<Element>& xs, const GBounds& bounds) {
  std::vector<Base> base = base_elements(xs, bounds);
  // Canonical text is the dedup key here: panel fingerprints degenerate on
  // tens of thousands of thin products and equal() tie-breaking would turn
  // the enumeration quadratic.
  std::set<std::string> seen;
  std::vector<SignedProduct> out;
  auto emit = [&](const Element& e, Term t) {
    if (seen.insert(e.text()).second) out.push_back(SignedProduct{e, std::move(t)});
  };
  emit(element_full(), t_const(element_full()));  // the empty product

  // Subsets of the base, one sign per member, at most product_width factors.
  std::vector<std::pair<Element, Term>> current;
  std::function<void(size_t, unsigned)> rec = [&](size_t start, unsigned used) {
    if (used == bounds.product_width) return;
    for (size_t k = start; k < base.size(); ++k) {
      for (bool positive : {true, false}) {
        Element factor = positive ? base[k].value : complement(base[k].value);
        Term factor_term = positive ? base[k].term : t_not(base[k].term);
        Element parent = current.empty() ? element_full() : current.back().first;
        Element prod = current.empty() ? factor : meet(parent, factor);
        Term prod_term =
            current.empty() ? factor_term : t_and(current.back().second, factor_term);
        emit(prod, prod_term);
        // Extensions of an empty product stay empty; prune the subtree.
        if (prod.no_cells()) continue;
        current.emplace_back(prod, prod_term);
        rec(k + 1, used + 1);
        current.pop_back();
      }
    }
  };
  rec(0, 0);
  return out;
}

void enumerate_g(const std::vector<Element>& xs, const GBounds& bounds,
                 const std::function<bool(const Element&, const Term&)>& sink) {
  std::vector<SignedProduct> products = g_products(xs, bounds);
  std::set<std::string> emitted;
  bool stop = false;
  auto emit = [&](const Element& e, const Term& t) {
    if (!emitted.insert(e.text()).second) return;
    if (!sink(e, t)) stop = true;
  };
  emit(element_empty(), t_const(element_empty()));  // the empty sum
  std::vector<std::pair<Element, Term>> current;
  std::function<void(size_t, unsigned)> rec = [&](size_t start, unsigned used) {
    if (stop || used == bounds.sum_width) return;
    for (size_t k = start; k < products.size() && !stop; ++k) {
      Element sum = current.empty() ? products[k].value : join(current.back().first, products[k].value);
      Term sum_term =
          current.empty() ? products[k].term : t_or(current.back().second, products[k].term);
      emit(sum, sum_term);
      if (stop) return;
      current.emplace_back(sum, sum_term);
      rec(k + 1, used + 1);
      current.pop_back();
    }
  };
  rec(0, 0);
}

namespace {

// Exact cover search: choose at most budget candidates whose union is the
// target.  Branches on a witness point of the uncovered region, so only
// candidates containing that point are ever tried.
bool cover_search(const Element& target, const std::vector<const SignedProduct*>& candidates,
                  unsigned budget, Element uncovered, std::vector<const SignedProduct*>& chosen) {
  if (is_empty(uncovered)) return true;
  if (budget == 0) return false;
  SatResult w = cell_sat(uncovered.cells().front());
  for (const SignedProduct* cand : candidates) {
    if (!element_contains(cand->value, *w.witness)) continue;
    if (std::find(chosen.begin(), chosen.end(), cand) != chosen.end()) continue;
    chosen.push_back(cand);
    if (cover_search(target, candidates, budget - 1, meet(uncovered, complement(cand->value)),
                     chosen))
      return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

GMemberReport g_member(const std::vector<Element>& xs, const Element& target,
                       const GBounds& bounds) {
  return g_member(g_products(xs, bounds), target, bounds.sum_width);
}

GMemberReport g_member(const std::vector<SignedProduct>& products, const Element& target,
                       unsigned sum_width) {
  GMemberReport report;
  report.products = products.size();

  std::vector<const SignedProduct*> candidates;
  for (const auto& p : products)
    if (is_leq(p.value, target).holds) candidates.push_back(&p);
  report.candidates = candidates.size();

  std::vector<const SignedProduct*> chosen;
  if (cover_search(target, candidates, sum_width, target, chosen)) {
    Term t;
    if (chosen.empty()) {
      t = t_const(element_empty());
    } else {
      t = chosen.front()->term;
      for (size_t k = 1; k < chosen.size(); ++k) t = t_or(t, chosen[k]->term);
    }
    // The certificate is re-verified before it is claimed.
    if (!equal(eval_term(t, {}), target))
      throw std::logic_error("g_member: cover certificate failed verification");
    report.status = GMemberReport::Status::found;
    report.witness = std::move(t);
  }
  return report;
}

SearchReport generator_search(const std::vector<Element>& targets,
                              const std::vector<Element>& candidates, const SearchBounds& bounds) {
  SearchReport report;
  report.outcomes.resize(targets.size());

  auto within_height = [&](const Element& e) {
    for (const auto& c : e.cells())
      for (const auto& l : c.lits()) {
        auto big = [&](const Rat& r) {
          return r.num > bounds.coeff_height || -r.num > bounds.coeff_height ||
                 r.den > bounds.coeff_height;
        };
        if (big(l.atom.rhs()) || big(l.atom.coeffs().tail)) return false;
        for (const auto& [i, v] : l.atom.coeffs().entries) {
          (void)i;
          if (big(v)) return false;
        }
      }
    return true;
  };

  ElementIndex index;
  std::vector<Term> terms;
  std::vector<unsigned> level_of;
  std::vector<size_t> unfound;
  for (size_t t = 0; t < targets.size(); ++t) unfound.push_back(t);

  auto note = [&](const Element& e, Term term, unsigned level) -> bool {
    auto [idx, fresh] = index.insert(e);
    if (!fresh) return false;
    terms.push_back(std::move(term));
    level_of.push_back(level);
    for (auto it = unfound.begin(); it != unfound.end();) {
      if (equal(targets[*it], e)) {
        report.outcomes[*it] = SearchOutcome{true, terms[idx], level};
        it = unfound.erase(it);
      } else {
        ++it;
      }
    }
    return true;
  };

  for (size_t g = 0; g < candidates.size(); ++g)
    note(candidates[g], t_var("g" + std::to_string(g)), 0);
  for (Coord i = 0; i < bounds.window; ++i)
    for (Coord j = i + 1; j < bounds.window; ++j) note(diagonal(i, j), t_const(diagonal(i, j)), 0);

  size_t level_begin = 0;
  for (unsigned level = 1; level <= bounds.depth && !unfound.empty(); ++level) {
    size_t level_end = index.size();
    if (index.size() >= bounds.max_items) {
      report.complete = false;
      break;
    }
    bool capped = false;
    auto push = [&](const Element& e, Term term) {
      if (capped) return;
      if (!within_height(e)) return;
      note(e, std::move(term), level);
      if (index.size() >= bounds.max_items) {
        capped = true;
        report.complete = false;
      }
    };
    // Unary derivations across the whole level first, then the binary fan-out,
    // so a tight item cap still surfaces shallow witnesses.
    for (size_t a = level_begin; a < level_end && !capped && !unfound.empty(); ++a) {
      Element ea = index.at(a);
      push(complement(ea), t_not(terms[a]));
      for (Coord i = 0; i < bounds.window && !capped; ++i)
        push(cyl(ea, i), t_cyl(gamma_finite({i}), terms[a]));
      for (Coord i = 0; i < bounds.window && !capped; ++i)
        for (Coord j = i + 1; j < bounds.window && !capped; ++j)
          push(substitute(ea, make_transposition(i, j)), t_sub(make_transposition(i, j), terms[a]));
    }
    for (size_t a = level_begin; a < level_end && !capped && !unfound.empty(); ++a) {
      Element ea = index.at(a);
      for (size_t b = 0; b < level_end && !capped && !unfound.empty(); ++b) {
        Element eb = index.at(b);
        push(meet(ea, eb), t_and(terms[a], terms[b]));
        push(join(ea, eb), t_or(terms[a], terms[b]));
        push(meet(ea, complement(eb)), t_and(terms[a], t_not(terms[b])));
        push(meet(eb, complement(ea)), t_and(terms[b], t_not(terms[a])));
      }
    }
    report.levels_done = level;
    level_begin = level_end;
    if (index.size() == level_end) break;  // closure stabilized early
  }
  report.explored = index.size();
  return report;
}

}  // namespace polyq
