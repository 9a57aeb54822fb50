#include "polyq/suites.hpp"

#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "polyq/closure.hpp"
#include "polyq/fusion.hpp"
#include "polyq/poz.hpp"
#include "polyq/sampling.hpp"

namespace polyq {

namespace {

struct Check {
  bool ok = true;
  long long checks = 0;
  std::string first_failure;

  void expect(bool cond, const std::string& what) {
    ++checks;
    if (!cond && ok) {
      ok = false;
      first_failure = what;
    }
  }
};

std::string describe(const Check& c, const std::string& extra) {
  std::ostringstream os;
  os << c.checks << " checks";
  if (!extra.empty()) os << ", " << extra;
  if (!c.ok) os << "; FIRST FAILURE: " << c.first_failure;
  return os.str();
}

// ---- 1: axiom battery -----------------------------------------------------

CriterionResult crit_axioms() {
  CriterionResult r{1, "axioms", false, 0, 120, ""};
  Rng rng(0x5eed0001);
  ElemGenOpts opts;  // window {0..7}, |num|,den <= 8
  Check ck;
  const int kElems = 200;
  std::vector<Element> prev;
  for (int t = 0; t < kElems && ck.ok; ++t) {
    Element x = random_element(rng, opts);
    Element y = prev.empty() ? random_element(rng, opts) : prev.back();
    prev.push_back(x);
    Coord i = static_cast<Coord>(rng.below(opts.window));
    Coord j = static_cast<Coord>(rng.below(opts.window));
    while (j == i) j = static_cast<Coord>(rng.below(opts.window));
    Coord k = static_cast<Coord>(rng.below(opts.window));

    ck.expect(equal(cyl(cyl(x, i), j), cyl(cyl(x, j), i)), "c_i c_j x = c_j c_i x @" + x.text());
    ck.expect(is_leq(x, cyl(x, i)).holds, "x <= c_i x @" + x.text());
    ck.expect(equal(cyl(meet(x, cyl(y, i)), i), meet(cyl(x, i), cyl(y, i))),
              "c_i(x * c_i y) = c_i x * c_i y @" + x.text());

    Transform tij = make_transposition(i, j);
    ck.expect(equal(substitute(substitute(x, tij), tij), x), "transposition involution @" + x.text());
    ck.expect(equal(substitute(join(x, y), tij), join(substitute(x, tij), substitute(y, tij))),
              "s distributes over + @" + x.text());
    ck.expect(equal(substitute(complement(x), tij), complement(substitute(x, tij))),
              "s commutes with - @" + x.text());

    ck.expect(equal(cyl(diagonal(i, j), i), element_full()), "c_i d_ij = 1");
    ck.expect(equal(diagonal(i, i), element_full()), "d_ii = 1");
    ck.expect(is_leq(meet(diagonal(i, j), diagonal(j, k)), diagonal(i, k)).holds,
              "d_ij * d_jk <= d_ik");
    ck.expect(equal(substitute(diagonal(i, j), tij), diagonal(i, j)), "s_[i,j] d_ij = d_ij");
    ck.expect(equal(substitute(x, Transform{}), x), "identity substitution @" + x.text());

    // Scopes for the dual laws: a random finite set and a random retained set.
    std::set<Coord> g1, g2;
    for (int n = 0; n < 3; ++n) g1.insert(static_cast<Coord>(rng.below(opts.window)));
    for (int n = 0; n < 2; ++n) g2.insert(static_cast<Coord>(rng.below(opts.window)));
    for (const GammaSpec& g : {gamma_finite(g1), gamma_cofinite(g2)}) {
      ck.expect(is_leq(complement(cylindrify(complement(x), g)), x).holds,
                "-c_G(-x) <= x @" + render_gamma(g) + " " + x.text());
      Element lhs = substitute(complement(cylindrify(complement(x), g)), tij);
      Element rhs = complement(cylindrify(complement(substitute(x, tij)), gamma_map(g, tij)));
      ck.expect(equal(lhs, rhs), "dual cylindrification vs substitution @" + render_gamma(g));
    }

    Point p = random_point(rng, opts.window + 2, 4);
    Transform tau = tij;
    if (rng.chance(30)) tau = make_transform({{i, j}, {k, j}});  // non-injective case
    ck.expect(element_contains(substitute(x, tau), p) == element_contains(x, point_compose(p, tau)),
              "pointwise substitution semantics @" + x.text());
  }
  r.detail = describe(ck, std::to_string(kElems) + " elements");
  r.pass = ck.ok;
  return r;
}

// ---- 2: qe differential ----------------------------------------------------

CriterionResult crit_qe() {
  CriterionResult r{2, "qe", false, 0, 300, ""};
  Rng rng(0x5eed0002);
  ElemGenOpts opts;
  opts.window = 4;
  opts.num_bound = 4;
  opts.den_bound = 4;
  opts.max_lits = 4;
  opts.tail_percent = 12;  // grid points carry no tail mass, keep it rare
  // Half the sample uses a narrow window and more literals so the unsat side
  // of the differential gets real traffic.
  ElemGenOpts crowded = opts;
  crowded.window = 2;
  crowded.max_lits = 5;
  crowded.num_bound = 2;
  Check ck;
  int sat_count = 0, unsat_count = 0;
  for (int t = 0; t < 500; ++t) {
    std::optional<Cell> cell;
    while (!cell) cell = make_cell(random_literals(rng, t % 2 ? crowded : opts));
    SatResult sr = cell_sat(*cell);  // the witness audit runs inside
    if (sr.sat) {
      ++sat_count;
      ck.expect(cell_eval(*cell, *sr.witness), "witness re-evaluation @" + cell->text());
      continue;
    }
    ++unsat_count;
    // Brute force over the grid {-6..6}/12 on coordinates 0..3.
    struct DenseAtom {
      Rat c[4];
      Rat rhs;
      bool positive;
    };
    std::vector<DenseAtom> atoms;
    for (const auto& l : cell->lits()) {
      DenseAtom d;
      for (Coord i = 0; i < 4; ++i) d.c[i] = l.atom.coeff(i);
      d.rhs = l.atom.rhs();
      d.positive = l.positive;
      atoms.push_back(d);
    }
    bool counterexample = false;
    std::vector<Rat> grid;
    for (long long n = -6; n <= 6; ++n) grid.push_back(make_rat(n, 12));
    for (const Rat& v0 : grid) {
      for (const Rat& v1 : grid) {
        for (const Rat& v2 : grid) {
          for (const Rat& v3 : grid) {
            bool all = true;
            for (const auto& a : atoms) {
              Rat sum = a.c[0] * v0 + a.c[1] * v1 + a.c[2] * v2 + a.c[3] * v3;
              if ((sum == a.rhs) != a.positive) {
                all = false;
                break;
              }
            }
            if (all) {
              counterexample = true;
              break;
            }
          }
          if (counterexample) break;
        }
        if (counterexample) break;
      }
      if (counterexample) break;
    }
    ck.expect(!counterexample, "unsat verdict has grid counterexample @" + cell->text());
    if (!ck.ok) break;
  }
  r.detail = describe(ck, std::to_string(sat_count) + " sat / " + std::to_string(unsat_count) +
                              " unsat of 500 cells");
  r.pass = ck.ok;
  return r;
}

// ---- 3: weak-space tail semantics -------------------------------------------

CriterionResult crit_tails() {
  CriterionResult r{3, "tails", false, 0, 10, ""};
  Check ck;
  ck.expect(equal(meet(pof_generator(0), pof_generator(1)), element_empty()), "a_0 * a_1 = 0");
  for (Coord i = 0; i <= 5; ++i)
    for (long long n = 0; n <= 10; ++n)
      ck.expect(equal(cyl(pof_generator(n), i), element_full()),
                "c_" + std::to_string(i) + " a_" + std::to_string(n) + " = 1");
  ck.expect(equal(cylindrify(pof_generator(0), gamma_cofinite({})), element_full()),
            "cofinite cylindrification of a_0 (retain nothing) = 1");
  ck.expect(equal(cylindrify(pof_generator(0), gamma_cofinite({0, 1})), element_full()),
            "cofinite cylindrification of a_0 (retain {0,1}) = 1");
  r.detail = describe(ck, "");
  r.pass = ck.ok;
  return r;
}

// ---- 4: the all-ones family is an antichain ---------------------------------

CriterionResult crit_antichain() {
  CriterionResult r{4, "antichain", false, 0, 30, ""};
  Check ck;
  for (long long n = 0; n <= 50; ++n) {
    ck.expect(!is_empty(pof_generator(n)), "a_" + std::to_string(n) + " != 0");
    for (long long m = n + 1; m <= 50; ++m)
      ck.expect(is_empty(meet(pof_generator(n), pof_generator(m))),
                "a_" + std::to_string(n) + " * a_" + std::to_string(m) + " = 0");
  }
  r.detail = describe(ck, "n,m <= 50");
  r.pass = ck.ok;
  return r;
}

// ---- 5: Neg/Poz dichotomy ----------------------------------------------------

CriterionResult crit_dichotomy() {
  CriterionResult r{5, "dichotomy", false, 0, 60, ""};
  Rng rng(0x5eed0005);
  std::vector<Element> pool = make_po_pool(4, 3);
  Check ck;
  for (int t = 0; t < 100; ++t) {
    Element x = eval_term(random_pool_term(rng, pool, 4, 3), {});
    bool a = in_poz(x).in_poz;
    bool b = in_poz(complement(x)).in_poz;
    ck.expect(a != b, "exactly one of x, -x small @" + x.text());
  }
  r.detail = describe(ck, "100 sampled terms over <=4 Po atoms");
  r.pass = ck.ok;
  return r;
}

// ---- 6: coefficient decomposition identity -----------------------------------

CriterionResult crit_decomposition() {
  CriterionResult r{6, "decomposition", false, 0, 180, ""};
  Rng rng(0x5eed0006);
  std::vector<Element> pool = make_po_pool(4, 3);
  Check ck;
  for (int t = 0; t < 100 && ck.ok; ++t) {
    size_t n = 1 + rng.below(5);
    std::vector<Element> ys;
    for (size_t i = 0; i < n; ++i) ys.push_back(pof_generator(static_cast<long long>(i)));
    Term g = random_generator_term(rng, n, pool, 4);
    DecomposeResult d = decompose(g, ys);
    ck.expect(d.verified, "decomposition verified @" + render_term(g));
  }
  r.detail = describe(ck, "100 random terms, depth <= 4, Y within {a_0..a_4}");
  r.pass = ck.ok;
  return r;
}

// ---- 7: fuse/recover round trip ------------------------------------------------

CriterionResult crit_fusion() {
  CriterionResult r{7, "fusion", false, 0, 120, ""};
  Rng rng(0x5eed0007);
  ElemGenOpts opts;
  opts.window = 6;       // supports within {0..5}
  opts.tail_percent = 0; // finite-dimensional inputs: full coefficient support in the window
  Check ck;
  for (int t = 0; t < 200 && ck.ok; ++t) {
    Element x = random_element(rng, opts);
    Element y = random_element(rng, opts);
    Element b = fuse_pair(x, y, 6, 7);
    ck.expect(equal(recover(b, 6, 7, Branch::first), x), "first recovery @" + x.text());
    ck.expect(equal(recover(b, 6, 7, Branch::second), y), "second recovery @" + y.text());
    for (Coord c : element_support(b))
      ck.expect(c <= 7, "support hygiene of the fused element");
  }
  int triples = 0;
  for (int t = 0; t < 50 && ck.ok; ++t, ++triples) {
    std::vector<Element> gens{random_element(rng, opts), random_element(rng, opts),
                              random_element(rng, opts)};
    Dilation d;
    d.fresh = {6, 7, 8, 9};
    FuseAllResult fr = fuse_all(gens, d);
    for (size_t i = 0; i < gens.size(); ++i)
      ck.expect(fr.verified[i], "triple fusion recovery of generator " + std::to_string(i));
  }
  r.detail = describe(ck, "200 pairs + " + std::to_string(triples) + " triples, fresh pair (6,7)");
  r.pass = ck.ok;
  return r;
}

// ---- 8: bounded closure keeps the all-ones atoms apart -------------------------

CriterionResult crit_separation() {
  CriterionResult r{8, "separation", false, 0, 300, ""};
  GBounds bounds;
  bounds.product_width = 3;
  bounds.sum_width = 3;
  bounds.po_pool = make_po_pool(4, 3);
  std::vector<Element> gens{pof_generator(0)};
  std::vector<SignedProduct> products = g_products(gens, bounds);

  Check ck;
  // Positive control: a_0 itself is found.
  GMemberReport self = g_member(products, pof_generator(0), bounds.sum_width);
  ck.expect(self.status == GMemberReport::Status::found, "a_0 found in its own closure");
  for (long long n = 1; n <= 20; ++n) {
    GMemberReport rep = g_member(products, pof_generator(n), bounds.sum_width);
    ck.expect(rep.status == GMemberReport::Status::unknown_within_bounds,
              "a_" + std::to_string(n) + " must not appear within bounds");
  }
  std::string extra = std::to_string(products.size()) +
                      " products at width 3; a_1..a_20 absent: consistent within bounds";
  r.detail = describe(ck, extra);
  r.pass = ck.ok;
  return r;
}

// ---- 9: every nonzero element cylindrifies to 1 --------------------------------

CriterionResult crit_simplicity() {
  CriterionResult r{9, "simplicity", false, 0, 120, ""};
  Rng rng(0x5eed0009);
  ElemGenOpts opts;
  Check ck;
  for (int t = 0; t < 100 && ck.ok; ++t) {
    Element x = random_nonzero_element(rng, opts);
    std::set<Coord> gamma = element_support(x);
    Coord high = gamma.empty() ? 0 : *gamma.rbegin() + 1;
    gamma.insert(high);
    gamma.insert(high + 1);
    ck.expect(equal(cylindrify(x, gamma_finite(gamma)), element_full()),
              "finding: c_(supp+2 fresh) x != 1 @" + x.text());
  }
  r.detail = describe(ck, "100 nonzero samples");
  r.pass = ck.ok;
  return r;
}

// ---- 10: serialization determinism across processes ----------------------------

CriterionResult crit_serialization(const std::string& exe_path) {
  CriterionResult r{10, "serialization", false, 0, 60, ""};
  if (exe_path.empty()) {
    r.detail = "needs the path to the CLI binary to respawn";
    return r;
  }
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path();
  fs::path f1 = dir / ("polyq_ser_1_" + std::to_string(::getpid()) + ".txt");
  fs::path f2 = dir / ("polyq_ser_2_" + std::to_string(::getpid()) + ".txt");
  std::string base = "'" + exe_path + "' --emit-sample-elements 1000 --seed 20260808 > '";
  int rc1 = std::system((base + f1.string() + "'").c_str());
  int rc2 = std::system((base + f2.string() + "'").c_str());
  auto slurp = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
  };
  std::string s1 = slurp(f1), s2 = slurp(f2);
  fs::remove(f1);
  fs::remove(f2);
  long lines = std::count(s1.begin(), s1.end(), '\n');
  bool ok = rc1 == 0 && rc2 == 0 && !s1.empty() && s1 == s2 && lines == 1000;
  r.pass = ok;
  r.detail = ok ? "1000 canonical texts byte-identical across two process runs"
                : "runs differ or failed (rc1=" + std::to_string(rc1) +
                      ", rc2=" + std::to_string(rc2) + ", lines=" + std::to_string(lines) + ")";
  return r;
}

}  // namespace

CriterionResult run_criterion(int number, const std::string& exe_path) {
  auto start = std::chrono::steady_clock::now();
  CriterionResult r;
  switch (number) {
    case 1: r = crit_axioms(); break;
    case 2: r = crit_qe(); break;
    case 3: r = crit_tails(); break;
    case 4: r = crit_antichain(); break;
    case 5: r = crit_dichotomy(); break;
    case 6: r = crit_decomposition(); break;
    case 7: r = crit_fusion(); break;
    case 8: r = crit_separation(); break;
    case 9: r = crit_simplicity(); break;
    case 10: r = crit_serialization(exe_path); break;
    default: throw std::invalid_argument("no criterion " + std::to_string(number));
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (r.pass && r.seconds > r.budget) {
    r.pass = false;
    r.detail += " [exceeded " + std::to_string(r.budget) + "s budget]";
  }
  return r;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"axioms",    "qe",     "tails",  "antichain",
                                              "dichotomy", "decomposition", "fusion", "separation",
                                              "simplicity", "serialization"};
  return names;
}

std::vector<CriterionResult> run_suite(const std::string& name, const std::string& exe_path) {
  const auto& names = suite_names();
  std::vector<CriterionResult> out;
  if (name == "all") {
    for (int n = 1; n <= 10; ++n) out.push_back(run_criterion(n, exe_path));
    return out;
  }
  for (size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) {
      out.push_back(run_criterion(static_cast<int>(i) + 1, exe_path));
      return out;
    }
  throw std::invalid_argument("unknown suite: " + name + " (try 'all' or a criterion name)");
}

std::string format_criterion_line(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.pass ? "PASS" : "FAIL") << "\t" << r.number << "\t" << r.name << "\t";
  os.precision(1);
  os << std::fixed << r.seconds << "s\t" << r.detail;
  return os.str();
}

}  // namespace polyq
