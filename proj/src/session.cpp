#include "polyq/session.hpp"

#include <cctype>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "polyq/closure.hpp"
#include "polyq/families.hpp"
#include "polyq/fusion.hpp"
#include "polyq/parser.hpp"
#include "polyq/poz.hpp"
#include "polyq/qe.hpp"
#include "polyq/suites.hpp"

namespace polyq {

std::vector<std::string> tokenize_command(const std::string& line) {
  std::vector<std::string> toks;
  std::string cur;
  bool in_quote = false;
  bool have = false;
  for (char c : line) {
    if (in_quote) {
      if (c == '"')
        in_quote = false;
      else
        cur += c;
      continue;
    }
    if (c == '"') {
      in_quote = true;
      have = true;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (have) toks.push_back(cur);
      cur.clear();
      have = false;
      continue;
    }
    if (c == '#' && !have) return toks;  // comment to end of line
    cur += c;
    have = true;
  }
  if (have) toks.push_back(cur);
  return toks;
}

namespace {

// Split on commas at paren/brace/bracket depth zero.
std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(' || c == '{' || c == '[') ++depth;
    if (c == ')' || c == '}' || c == ']') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
      continue;
    }
    cur += c;
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

Element eval_text(const std::string& text, const Session& s) {
  if (!text.empty() && text[0] == '@') {
    auto it = s.bindings.find(text.substr(1));
    if (it == s.bindings.end()) throw std::invalid_argument("unbound identifier: " + text.substr(1));
    return it->second;
  }
  return eval_term(parse_expr(text), s.bindings);
}

std::vector<Element> eval_list(const std::string& text, const Session& s) {
  std::vector<Element> out;
  for (const auto& part : split_list(text)) out.push_back(eval_text(part, s));
  return out;
}

struct Emit {
  std::ostream& out;
  bool records;

  // Every report leads with the session options.
  void header(const Options& o) {
    if (records)
      out << "options\twindow=" << o.window << "\tcoeff_height=" << o.coeff_height
          << "\tdepth=" << o.depth << "\n";
    else
      out << "# options: window=" << o.window << " coeff_height=" << o.coeff_height
          << " depth=" << o.depth << "\n";
  }
};

struct Args {
  std::map<std::string, std::string> flags;
  std::vector<std::string> positional;
};

Args parse_args(const std::vector<std::string>& toks, size_t from) {
  Args a;
  for (size_t i = from; i < toks.size(); ++i) {
    if (toks[i].rfind("--", 0) == 0) {
      std::string key = toks[i].substr(2);
      if (i + 1 >= toks.size()) throw std::invalid_argument("missing value for --" + key);
      a.flags[key] = toks[++i];
    } else {
      a.positional.push_back(toks[i]);
    }
  }
  return a;
}

long long int_flag(const Args& a, const std::string& key, long long fallback) {
  auto it = a.flags.find(key);
  return it == a.flags.end() ? fallback : std::stoll(it->second);
}

std::set<Coord> coord_list(const std::string& text) {
  std::set<Coord> out;
  for (const auto& p : split_list(text)) out.insert(static_cast<Coord>(std::stoul(p)));
  return out;
}

const Atom* single_positive_atom(const Element& e) {
  if (e.cells().size() != 1) return nullptr;
  const auto& lits = e.cells()[0].lits();
  if (lits.size() != 1 || !lits[0].positive) return nullptr;
  return &lits[0].atom;
}

std::string joined(const std::vector<std::string>& toks, size_t from, size_t to) {
  std::string s;
  for (size_t i = from; i < to && i < toks.size(); ++i) {
    if (!s.empty()) s += ' ';
    s += toks[i];
  }
  return s;
}

std::string joined(const std::vector<std::string>& toks, size_t from) {
  return joined(toks, from, toks.size());
}

int cmd_closure(const Args& args, Session& s, Emit& em) {
  GBounds bounds;
  bounds.product_width = static_cast<unsigned>(int_flag(args, "product-width", 2));
  bounds.sum_width = static_cast<unsigned>(int_flag(args, "sum-width", 2));
  auto gens_it = args.flags.find("gens");
  if (gens_it == args.flags.end()) throw std::invalid_argument("closure: --gens required");
  std::vector<Element> gens = eval_list(gens_it->second, s);
  if (auto it = args.flags.find("pool"); it != args.flags.end() && it->second != "default")
    bounds.po_pool = eval_list(it->second, s);
  else
    bounds.po_pool = make_po_pool(s.opts.window, s.opts.coeff_height);
  if (auto it = args.flags.find("window"); it != args.flags.end())
    bounds.window = coord_list(it->second);

  if (auto it = args.flags.find("target"); it != args.flags.end()) {
    Element target = eval_text(it->second, s);
    GMemberReport rep = g_member(gens, target, bounds);
    bool found = rep.status == GMemberReport::Status::found;
    std::string witness = found ? render_term(*rep.witness) : "-";
    size_t summands = 0;
    if (found && rep.witness) {
      // Number of summands in the certificate.
      Term t = *rep.witness;
      summands = 1;
      while (auto o = std::get_if<TermNode::Or>(&t->node)) {
        ++summands;
        t = o->lhs;
      }
    }
    em.out << (found ? "found" : "unknown-within-bounds") << "\t" << serialize(target) << "\t"
           << witness << "\t" << summands << "\n";
    if (!em.records && !found)
      em.out << "# not in the enumerated fragment (products=" << rep.products
             << ", candidates=" << rep.candidates << "); no claim beyond these bounds\n";
    return 0;
  }

  size_t limit = static_cast<size_t>(int_flag(args, "limit", 50));
  size_t count = 0;
  enumerate_g(gens, bounds, [&](const Element& e, const Term& t) {
    em.out << "enum\t" << serialize(e) << "\t" << render_term(t) << "\n";
    return ++count < limit;
  });
  em.out << (em.records ? "done\tcount=" : "# enumerated ") << count
         << (em.records ? "" : " elements") << "\n";
  return 0;
}

int cmd_search(const Args& args, Session& s, Emit& em) {
  auto t_it = args.flags.find("targets");
  auto c_it = args.flags.find("cands");
  if (t_it == args.flags.end() || c_it == args.flags.end())
    throw std::invalid_argument("search: --targets and --cands required");
  std::vector<Element> targets = eval_list(t_it->second, s);
  std::vector<Element> cands = eval_list(c_it->second, s);
  SearchBounds bounds;
  bounds.depth = static_cast<unsigned>(int_flag(args, "depth", s.opts.depth));
  bounds.window = static_cast<Coord>(int_flag(args, "window", s.opts.window));
  bounds.coeff_height = int_flag(args, "height", 8);
  bounds.max_items = static_cast<size_t>(int_flag(args, "max-items", 4000));
  SearchReport rep = generator_search(targets, cands, bounds);
  for (size_t i = 0; i < targets.size(); ++i) {
    const auto& o = rep.outcomes[i];
    em.out << (o.found ? "found" : "unknown-within-bounds") << "\t" << serialize(targets[i]) << "\t"
           << (o.found ? render_term(o.witness) : "-") << "\t" << o.depth << "\n";
  }
  em.out << (rep.complete ? "complete" : "partial") << "\texplored=" << rep.explored
         << "\tlevels=" << rep.levels_done << "\n";
  return 0;
}

int cmd_decompose(const Args& args, Session& s, Emit& em) {
  auto g_it = args.flags.find("g");
  auto y_it = args.flags.find("ys");
  if (g_it == args.flags.end() || y_it == args.flags.end())
    throw std::invalid_argument("decompose: --g and --ys required");
  Term g = parse_expr(g_it->second);
  std::vector<Element> ys = eval_list(y_it->second, s);
  DecomposeResult r = decompose(g, ys);
  for (size_t i = 0; i < r.sigmas.size(); ++i) {
    em.out << "sigma\t" << i << "\t" << serialize(r.sigmas[i]) << "\t"
           << (r.classes[i].in_poz ? "Poz" : "Neg") << "\n";
  }
  em.out << (r.verified ? "verified\ttrue" : "verified\tfalse") << "\n";
  return r.verified ? 0 : 1;
}

int cmd_fuse(const Args& args, Session& s, Emit& em) {
  auto g_it = args.flags.find("gens");
  if (g_it == args.flags.end()) throw std::invalid_argument("fuse: --gens required");
  std::vector<Element> gens = eval_list(g_it->second, s);
  Dilation d;
  if (auto it = args.flags.find("fresh"); it != args.flags.end()) {
    d = make_dilation(gens, 0);
    for (Coord c : coord_list(it->second)) d.fresh.push_back(c);
  } else {
    d = make_dilation(gens, gens.size() < 2 ? 0 : 2 * (gens.size() - 1));
  }
  FuseAllResult r = fuse_all(gens, d);
  em.out << "b\t" << serialize(r.b) << "\n";
  bool all_ok = true;
  for (size_t i = 0; i < gens.size(); ++i) {
    em.out << "recover\t" << i << "\t" << render_term(r.recovery_terms[i]) << "\t"
           << (r.verified[i] ? "verified" : "not-recovered") << "\n";
    all_ok = all_ok && r.verified[i];
  }
  if (args.flags.count("bind")) s.bindings[args.flags.at("bind")] = r.b;
  return all_ok ? 0 : 1;
}

int cmd_recover(const Args& args, Session& s, Emit& em) {
  auto b_it = args.flags.find("b");
  if (b_it == args.flags.end()) throw std::invalid_argument("recover: --b required");
  Element b = eval_text(b_it->second, s);
  Coord k = static_cast<Coord>(int_flag(args, "k", 0));
  Coord l = static_cast<Coord>(int_flag(args, "l", 1));
  std::string branch = args.flags.count("branch") ? args.flags.at("branch") : "first";
  if (branch != "first" && branch != "second")
    throw std::invalid_argument("recover: --branch must be first or second");
  Element r = recover(b, k, l, branch == "first" ? Branch::first : Branch::second);
  em.out << "recovered\t" << serialize(r) << "\n";
  return 0;
}

}  // namespace

int run_command_tokens(const std::vector<std::string>& toks, Session& s, std::ostream& out) {
  if (toks.empty()) return 0;
  Emit em{out, s.opts.records};
  const std::string& cmd = toks[0];
  try {
    if (cmd == "let") {
      // let name = expr   |   let name expr
      if (toks.size() < 3) throw std::invalid_argument("let: expected 'let name = expr'");
      size_t expr_at = toks[2] == "=" ? 3 : 2;
      if (toks.size() <= expr_at) throw std::invalid_argument("let: missing expression");
      std::string expr_text;
      for (size_t i = expr_at; i < toks.size(); ++i) {
        if (i > expr_at) expr_text += ' ';
        expr_text += toks[i];
      }
      Element e = eval_text(expr_text, s);
      s.bindings[toks[1]] = e;
      em.header(s.opts);
      out << "let\t" << toks[1] << "\t" << serialize(e) << "\n";
      return 0;
    }
    if (cmd == "eq") {
      if (toks.size() != 3) throw std::invalid_argument("eq: expected two expressions");
      Element a = eval_text(toks[1], s);
      Element b = eval_text(toks[2], s);
      EqResult r = equal_witness(a, b);
      em.header(s.opts);
      if (r.equal) {
        out << "equal\ttrue\n";
      } else {
        out << "equal\tfalse\twitness=" << render_point(*r.witness) << "\tside="
            << (r.witness_in_left ? "first" : "second") << "\n";
      }
      return 0;
    }
    if (cmd == "empty") {
      if (toks.size() < 2) throw std::invalid_argument("empty: expected one expression");
      em.header(s.opts);
      out << "empty\t" << (is_empty(eval_text(joined(toks, 1), s)) ? "true" : "false") << "\n";
      return 0;
    }
    if (cmd == "member") {
      // The point is the balanced {...} prefix, the expression is the rest.
      std::string rest = joined(toks, 1);
      size_t close = rest.find('}');
      if (rest.empty() || rest[0] != '{' || close == std::string::npos)
        throw std::invalid_argument("member: expected point and expression");
      Point p = parse_point(rest.substr(0, close + 1));
      Element e = eval_text(rest.substr(close + 1), s);
      em.header(s.opts);
      out << "member\t" << (element_contains(e, p) ? "true" : "false") << "\n";
      return 0;
    }
    if (cmd == "witness") {
      if (toks.size() < 2) throw std::invalid_argument("witness: expected one expression");
      Element e = eval_text(joined(toks, 1), s);
      em.header(s.opts);
      if (e.no_cells()) {
        out << "witness\tnone\n";
      } else {
        out << "witness\t" << render_point(*cell_sat(e.cells().front()).witness) << "\n";
      }
      return 0;
    }
    if (cmd == "dims") {
      if (toks.size() < 2) throw std::invalid_argument("dims: expected one expression");
      DimSet d = dim_set(eval_text(joined(toks, 1), s));
      em.header(s.opts);
      out << "dims\t" << render_dimset(d) << "\n";
      return 0;
    }
    if (cmd == "classify") {
      if (toks.size() < 2) throw std::invalid_argument("classify: expected one expression");
      Element e = eval_text(joined(toks, 1), s);
      const Atom* a = nullptr;
      Atom constant = full_atom();
      if (e.no_cells()) {
        constant = empty_atom();
        a = &constant;
      } else if (e.is_full()) {
        a = &constant;
      } else {
        a = single_positive_atom(e);
      }
      if (!a)
        throw std::invalid_argument("classify: element is not a single hyperplane: " + serialize(e));
      em.header(s.opts);
      out << "family\t" << family_name(classify(*a)) << "\t" << a->text() << "\n";
      return 0;
    }
    if (cmd == "poz") {
      if (toks.size() < 2) throw std::invalid_argument("poz: expected one expression");
      PozVerdict v = in_poz(eval_text(joined(toks, 1), s));
      em.header(s.opts);
      out << "poz\t" << (v.in_poz ? "true" : "false");
      if (v.in_poz) {
        out << "\tcovering=";
        for (size_t i = 0; i < v.covering.size(); ++i) {
          if (i) out << " + ";
          out << v.covering[i].text();
        }
      }
      out << "\n";
      return 0;
    }
    Args args = parse_args(toks, 1);
    if (cmd == "closure") {
      em.header(s.opts);
      return cmd_closure(args, s, em);
    }
    if (cmd == "search") {
      em.header(s.opts);
      return cmd_search(args, s, em);
    }
    if (cmd == "decompose") {
      em.header(s.opts);
      return cmd_decompose(args, s, em);
    }
    if (cmd == "fuse") {
      em.header(s.opts);
      return cmd_fuse(args, s, em);
    }
    if (cmd == "recover") {
      em.header(s.opts);
      return cmd_recover(args, s, em);
    }
    if (cmd == "suite") {
      if (toks.size() != 2) throw std::invalid_argument("suite: expected a suite name");
      em.header(s.opts);
      auto results = run_suite(toks[1], s.opts.exe_path);
      bool all = true;
      for (const auto& r : results) {
        out << format_criterion_line(r) << "\n";
        all = all && r.pass;
      }
      out << (all ? "suite\tpass" : "suite\tFAIL") << "\n";
      return all ? 0 : 1;
    }
    throw std::invalid_argument("unknown command: " + cmd);
  } catch (const std::exception& ex) {
    out << "error: " << ex.what() << "\n";
    return 1;
  }
}

int run_command(const std::string& line, Session& s, std::ostream& out) {
  return run_command_tokens(tokenize_command(line), s, out);
}

}  // namespace polyq
