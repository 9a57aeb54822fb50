#include "polyq/fusion.hpp"

#include <stdexcept>

namespace polyq {

Dilation make_dilation(const std::vector<Element>& gens, size_t fresh_count) {
  Dilation d;
  Coord high = 0;
  bool any = false;
  for (const auto& g : gens)
    for (Coord i : element_support(g)) {
      d.base_window.insert(i);
      if (!any || i > high) high = i;
      any = true;
    }
  Coord next = any ? high + 1 : 0;
  for (size_t k = 0; k < fresh_count; ++k) d.fresh.push_back(next + static_cast<Coord>(k));
  return d;
}

namespace {

void check_fresh(const Element& e, const char* which, Coord k, Coord l) {
  std::set<Coord> supp = element_support(e);
  for (Coord c : {k, l})
    if (supp.count(c))
      throw std::invalid_argument(std::string("fuse_pair: coordinate ") + std::to_string(c) +
                                  " lies in the explicit support of " + which);
}

}  // namespace

Element fuse_pair(const Element& x, const Element& y, Coord k, Coord l) {
  if (k == l) throw std::invalid_argument("fuse_pair: fresh coordinates must differ");
  check_fresh(x, "x", k, l);
  check_fresh(y, "y", k, l);
  Element mask = diagonal(k, l);
  return join(meet(x, mask), meet(y, complement(mask)));
}

Element recover(const Element& b, Coord k, Coord l, Branch branch) {
  if (k == l) throw std::invalid_argument("recover: coordinates must differ");
  Element mask = diagonal(k, l);
  Element masked = branch == Branch::first ? meet(b, mask) : meet(b, complement(mask));
  return cyl(masked, k);
}

FusionCertificate fuse_with_certificate(const Element& x, const Element& y, Coord k, Coord l) {
  FusionCertificate cert;
  cert.b = fuse_pair(x, y, k, l);
  cert.k = k;
  cert.l = l;
  cert.x_back = recover(cert.b, k, l, Branch::first);
  cert.y_back = recover(cert.b, k, l, Branch::second);
  cert.ok = equal(cert.x_back, x) && equal(cert.y_back, y);
  return cert;
}

namespace {

Term recover_term(Term base, Coord k, Coord l, Branch branch) {
  Term mask = t_const(diagonal(k, l));
  Term masked =
      branch == Branch::first ? t_and(std::move(base), mask) : t_and(std::move(base), t_not(mask));
  return t_cyl(gamma_finite({k}), std::move(masked));
}

}  // namespace

FuseAllResult fuse_all(const std::vector<Element>& gens, const Dilation& d) {
  if (gens.empty()) throw std::invalid_argument("fuse_all: no generators");
  size_t need = 2 * (gens.size() - 1);
  if (d.fresh.size() < need)
    throw std::invalid_argument("fuse_all: need " + std::to_string(need) +
                                " fresh coordinates, have " + std::to_string(d.fresh.size()));

  FuseAllResult out;
  out.b = gens[0];
  out.recovery_terms.assign(1, t_var("b"));
  for (size_t t = 1; t < gens.size(); ++t) {
    Coord k = d.fresh[2 * (t - 1)];
    Coord l = d.fresh[2 * (t - 1) + 1];
    out.b = fuse_pair(out.b, gens[t], k, l);
    // Everything recovered so far now lives behind the first branch.
    Term first = recover_term(t_var("b"), k, l, Branch::first);
    for (auto& term : out.recovery_terms) term = term_substitute_var(term, "b", first);
    out.recovery_terms.push_back(recover_term(t_var("b"), k, l, Branch::second));
  }

  Env env{{"b", out.b}};
  for (size_t i = 0; i < gens.size(); ++i)
    out.verified.push_back(equal(eval_term(out.recovery_terms[i], env), gens[i]));
  return out;
}

bool compress_check(const Element& x, const std::set<Coord>& j) {
  return equal(cylindrify(x, gamma_cofinite(j)), x);
}

}  // namespace polyq
