#include <fstream>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "cli.hpp"
#include "itermag/errors.hpp"
#include "itermag/iterated.hpp"
#include "itermag/magnitude.hpp"
#include "itermag/oracles.hpp"
#include "json.hpp"

namespace itermag::cli {

using nlohmann::ordered_json;

namespace {

struct HomologyOptions {
  int                      max_degree = 2;
  std::vector<std::string> gradings;
  bool                     all_gradings   = false;
  std::string              route          = "tot";
  bool                     normalize_rows = false;
  std::string              output         = "text";
};

bool is_graded(Structure const& s) {
  return std::holds_alternative<GenMetricSpace>(s.value) || std::holds_alternative<NormedGroup>(s.value);
}

GenMetricSpace point() { return discrete_space(1, Extended(0)); }

// Lengths of every cell of Tot in total degrees <= D: at most
// floor(D/2) * ceil(D/2) nonzero norms, any of which may repeat.
std::vector<Rational> normed_gradings(NormedGroup const& g, int D) {
  int const             terms = (D / 2) * ((D + 1) / 2);
  std::set<Rational>    sums{Rational(0)};
  std::vector<Rational> vals;
  for (auto const& v : norm_values(g)) {
    if (v > 0) {
      vals.push_back(v);
    }
  }
  for (int k = 0; k < terms; ++k) {
    std::set<Rational> next = sums;
    for (auto const& s : sums) {
      for (auto const& v : vals) {
        next.insert(Rational(s + v));
      }
    }
    sums = std::move(next);
  }
  return {sums.begin(), sums.end()};
}

std::vector<Rational> all_gradings(Structure const& s, int D) {
  if (auto const* n = std::get_if<NormedGroup>(&s.value)) {
    return normed_gradings(*n, D);
  }
  return reachable_gradings(std::get<GenMetricSpace>(s.value), D);
}

// Ungraded homology in degrees 0..max_degree.
HomologyTable ungraded_homology(Structure const& s, int max_degree, Route route, bool norm) {
  int const D = max_degree + 1;
  if (s.kind == "product") {
    return category_product_homology(std::get<FinCategory>(s.factors[0].value),
                                     std::get<FinCategory>(s.factors[1].value), D, route, norm);
  }
  StrictNCat x;
  if (auto const* c = std::get_if<FinCategory>(&s.value)) {
    x = as_ncat(*c);
  } else if (auto const* g = std::get_if<CatGroup>(&s.value)) {
    x = as_ncat(*g);
  } else if (auto const* p = std::get_if<PreorderedGroup>(&s.value)) {
    x = as_ncat(as_cat_group(*p));
  } else {
    x = std::get<StrictNCat>(s.value);
  }
  return homology_table(iterated_complex(x, D, route, norm), max_degree);
}

HomologyTable graded_homology(Structure const& s, Rational const& ell, int max_degree, Route route, bool norm) {
  int const D = max_degree + 1;
  if (auto const* n = std::get_if<NormedGroup>(&s.value)) {
    return homology_table(normed_group_complex(*n, ell, D, route, norm), max_degree);
  }
  if (s.kind == "tensor") {
    return metric_product_homology(std::get<GenMetricSpace>(s.factors[0].value),
                                   std::get<GenMetricSpace>(s.factors[1].value), ell, D, route, norm);
  }
  return metric_product_homology(std::get<GenMetricSpace>(s.value), point(), ell, D, route, norm);
}

ordered_json group_json(FgAbelianGroup const& g) {
  ordered_json t = ordered_json::array();
  for (auto const& d : g.torsion()) {
    if (d.fits_slong_p()) {
      t.push_back(d.get_si());
    } else {
      t.push_back(d.get_str());
    }
  }
  return ordered_json{{"rank", g.free_rank()}, {"torsion", t}};
}

ordered_json table_json(HomologyTable const& t) {
  ordered_json out = ordered_json::array();
  for (std::size_t k = 0; k < t.size(); ++k) {
    ordered_json e = group_json(t[k]);
    out.push_back(ordered_json{{"degree", k}, {"rank", e["rank"]}, {"torsion", e["torsion"]}});
  }
  return out;
}

void print_table(std::ostream& out, HomologyTable const& t, std::string const& indent) {
  for (std::size_t k = 0; k < t.size(); ++k) {
    out << indent << "MH_" << k << " = " << t[k].to_string() << "\n";
  }
}

Route parse_route(std::string const& r) { return r == "diag" ? Route::diagonal : Route::tot; }

int homology_command(Structure const& s, HomologyOptions const& o, std::ostream& out) {
  Route const route = parse_route(o.route);
  if (!is_graded(s)) {
    if (!o.gradings.empty() || o.all_gradings) {
      throw InputError(s.kind + " is ungraded; --grading and --all-gradings do not apply");
    }
    auto t = ungraded_homology(s, o.max_degree, route, o.normalize_rows);
    if (o.output == "json") {
      out << ordered_json{{"kind", s.kind}, {"max_degree", o.max_degree}, {"homology", table_json(t)}}.dump(2)
          << "\n";
    } else {
      out << s.kind << "\n";
      print_table(out, t, "  ");
    }
    return 0;
  }
  std::vector<Rational> ells;
  if (!o.gradings.empty() && o.all_gradings) {
    throw InputError("--grading and --all-gradings are exclusive");
  }
  for (auto const& g : o.gradings) {
    Rational ell;
    try {
      ell = parse_rational(g);
    } catch (std::invalid_argument const& e) {
      throw InputError("--grading " + g + ": " + e.what());
    }
    if (ell < 0) {
      throw InputError("--grading " + g + ": must be nonnegative");
    }
    ells.push_back(ell);
  }
  if (ells.empty()) {
    ells = all_gradings(s, o.max_degree + 1);
  }
  std::sort(ells.begin(), ells.end());
  ells.erase(std::unique(ells.begin(), ells.end()), ells.end());

  ordered_json graded = ordered_json::array();
  if (o.output == "text") {
    out << s.kind << "\n";
  }
  for (auto const& ell : ells) {
    auto t = graded_homology(s, ell, o.max_degree, route, o.normalize_rows);
    if (o.output == "json") {
      graded.push_back(ordered_json{{"grading", rational_to_string(ell)}, {"homology", table_json(t)}});
    } else {
      out << "l = " << rational_to_string(ell) << "\n";
      print_table(out, t, "  ");
    }
  }
  if (o.output == "json") {
    out << ordered_json{{"kind", s.kind}, {"max_degree", o.max_degree}, {"gradings", graded}}.dump(2) << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// verify

struct Verdicts {
  std::ostream& out;
  bool          all = true;

  void line(std::string const& name, bool ok, std::string const& detail, std::string const& why = {}) {
    all = all && ok;
    out << name << ": " << (ok ? "PASS" : "FAIL") << " (" << detail << ")";
    if (!ok && !why.empty()) {
      out << " " << why;
    }
    out << "\n";
  }
};

std::string ell_set(std::vector<Rational> const& ells) {
  std::string s = "ℓ∈{";
  for (std::size_t i = 0; i < ells.size(); ++i) {
    s += (i ? "," : "") + rational_to_string(ells[i]);
  }
  return s + "}";
}

std::string mismatch(HomologyTable const& got, HomologyTable const& want) {
  return "got " + table_to_string(got) + ", expected " + table_to_string(want);
}

void verify_routes(Structure const& s, int max_degree, std::vector<Rational> const& ells, Verdicts& v) {
  bool        ok = true;
  std::string why;
  auto        check = [&](auto compute) {
    HomologyTable ref = compute(Route::tot, false);
    for (auto route : {Route::diagonal, Route::tot}) {
      for (bool norm : {false, true}) {
        auto t = compute(route, norm);
        if (t != ref && ok) {
          ok  = false;
          why = mismatch(t, ref);
        }
      }
    }
  };
  if (ells.empty()) {
    check([&](Route r, bool n) { return ungraded_homology(s, max_degree, r, n); });
  } else {
    for (auto const& ell : ells) {
      check([&](Route r, bool n) { return graded_homology(s, ell, max_degree, r, n); });
    }
  }
  v.line("Routes diag/tot", ok, "degrees 0.." + std::to_string(max_degree) + ", rows normalized and not", why);
}

void verify_metric(Structure const& s, Verdicts& v) {
  auto const& x    = std::get<GenMetricSpace>(s.value);
  auto        ells = reachable_gradings(x, 2);
  bool        ok   = true;
  std::string why;
  for (auto const& ell : ells) {
    auto got  = graded_homology(s, ell, 1, Route::tot, false)[1];
    auto want = oracle_mh1_metric(x, ell);
    if (got != want && ok) {
      ok  = false;
      why = "at ℓ=" + rational_to_string(ell) + " got " + got.to_string() + ", expected " + want.to_string();
    }
  }
  v.line("Thm MH_1 metric", ok, ell_set(ells) + ", degree 1", why);
  if (s.kind == "tensor") {
    auto r = kunneth_check(std::get<GenMetricSpace>(s.factors[0].value),
                           std::get<GenMetricSpace>(s.factors[1].value), 2);
    v.line("Thm Kunneth metric", r.ok, "degrees 0..2", r.message);
  }
  std::vector<Rational> some(ells.begin(), ells.begin() + static_cast<long>(std::min<std::size_t>(ells.size(), 4)));
  verify_routes(s, 1, some, v);
}

void verify_normed(Structure const& s, Verdicts& v) {
  auto const& g = std::get<NormedGroup>(s.value);
  int const   D = 3;
  auto        h0   = normed_group_homology(g, {Rational(0)}, D).at(Rational(0));
  auto        want = oracle_group_homology(g.group, 2);
  v.line("Thm ℓ=0 group homology", h0 == want, "degrees 0..2", mismatch(h0, want));

  std::vector<Rational> pos;
  for (auto const& ell : norm_values(g)) {
    if (ell > 0) {
      pos.push_back(ell);
    }
  }
  auto        table = normed_group_homology(g, pos, D);
  bool        low = true, top = true;
  std::string low_why, top_why;
  for (auto const& ell : pos) {
    auto const& t = table.at(ell);
    if ((!t[0].is_trivial() || !t[1].is_trivial()) && low) {
      low     = false;
      low_why = "at ℓ=" + rational_to_string(ell) + " got " + table_to_string(t);
    }
    auto o = oracle_mh2_normed(g, ell);
    if (t[2] != o && top) {
      top     = false;
      top_why = "at ℓ=" + rational_to_string(ell) + " got " + t[2].to_string() + ", expected " + o.to_string();
    }
  }
  v.line("Thm MH_0, MH_1 vanish", low, ell_set(pos) + ", degrees 0..1", low_why);
  v.line("Thm MH_normed_gps", top, ell_set(pos) + ", degree 2", top_why);

  auto adj = check_adjacency_factorization(g);
  v.line("Adjacency factorization", adj.ok, "all pairs", adj.message);

  std::vector<Rational> ells{Rational(0)};
  ells.insert(ells.end(), pos.begin(), pos.end());
  verify_routes(s, 2, ells, v);
}

void verify_cat_group(Structure const& s, Verdicts& v) {
  CatGroup g = std::holds_alternative<CatGroup>(s.value) ? std::get<CatGroup>(s.value)
                                                          : as_cat_group(std::get<PreorderedGroup>(s.value));
  auto got      = ungraded_homology(s, 1, Route::tot, false);
  auto [h0, h1] = oracle_mh01_catgroup(g);
  HomologyTable want{h0, h1};
  v.line("Thm MH_0/MH_1 cat-groups", got == want, "degrees 0..1", mismatch(got, want));
  verify_routes(s, 1, {}, v);
}

HomologyTable discrete_homology(StrictNCat const& x, int max_degree) {
  HomologyTable t(static_cast<std::size_t>(max_degree) + 1);
  t[0] = FgAbelianGroup::free(x.count(0));
  return t;
}

void verify_ncat(Structure const& s, Verdicts& v) {
  auto const& x = std::get<StrictNCat>(s.value);
  if (x.n >= 1) {
    auto low = check_mb_n_low_degrees(x);
    v.line("MB^n low degrees", low.ok, "degrees 0..1", low.message);
  }
  int const max_degree = std::max(2, s.times + 1);
  if (!s.inner.empty()) {
    auto const& in    = s.inner.front();
    int const   inner = max_degree - s.times;
    auto        base  = in.n == 0 ? discrete_homology(in, inner)
                                  : homology_table(iterated_complex(in, inner + 1, Route::tot, false), inner);
    for (int k = 0; k < s.times; ++k) {
      base = oracle_suspension(base);
    }
    auto got = homology_table(iterated_complex(x, max_degree + 1, Route::tot, false), max_degree);
    v.line("Thm suspension", got == base, "degrees 0.." + std::to_string(max_degree), mismatch(got, base));
  }
  verify_routes(s, max_degree, {}, v);
}

void verify_category(Structure const& s, Verdicts& v) {
  auto const& c    = std::get<FinCategory>(s.value);
  auto        got  = ungraded_homology(s, 1, Route::tot, false)[0];
  auto        want = FgAbelianGroup::free(connected_components(c).size());
  v.line("MH_0 components", got == want, "degree 0", "got " + got.to_string() + ", expected " + want.to_string());
  if (s.kind == "product") {
    auto r = kunneth_check(std::get<FinCategory>(s.factors[0].value), std::get<FinCategory>(s.factors[1].value), 2);
    v.line("Thm Kunneth categorical", r.ok, "degrees 0..2", r.message);
  }
  verify_routes(s, 2, {}, v);
}

int verify_command(Structure const& s, std::ostream& out) {
  Verdicts v{out};
  if (std::holds_alternative<GenMetricSpace>(s.value)) {
    verify_metric(s, v);
  } else if (std::holds_alternative<NormedGroup>(s.value)) {
    verify_normed(s, v);
  } else if (std::holds_alternative<CatGroup>(s.value) || std::holds_alternative<PreorderedGroup>(s.value)) {
    verify_cat_group(s, v);
  } else if (std::holds_alternative<StrictNCat>(s.value)) {
    verify_ncat(s, v);
  } else {
    verify_category(s, v);
  }
  return v.all ? 0 : 1;
}

// ---------------------------------------------------------------------------
// info

std::size_t metric_components(GenMetricSpace const& x) {
  std::vector<std::size_t> parent(x.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  std::function<std::size_t(std::size_t)> find = [&](std::size_t a) {
    return parent[a] == a ? a : parent[a] = find(parent[a]);
  };
  for (std::size_t a = 0; a < x.size(); ++a) {
    for (std::size_t b = 0; b < x.size(); ++b) {
      if (x.d[a][b].is_finite()) {
        parent[find(a)] = find(b);
      }
    }
  }
  std::size_t n = 0;
  for (std::size_t a = 0; a < x.size(); ++a) {
    n += find(a) == a;
  }
  return n;
}

int info_command(Structure const& s, std::ostream& out) {
  out << "kind: " << s.kind << "\nvalid: yes\n";
  if (auto const* c = std::get_if<FinCategory>(&s.value)) {
    out << "objects: " << c->objects.size() << "\nmorphisms: " << c->morphisms.size()
        << "\ncomponents: " << connected_components(*c).size() << "\n";
  } else if (auto const* x = std::get_if<GenMetricSpace>(&s.value)) {
    std::size_t inf = 0;
    for (auto const& row : x->d) {
      inf += static_cast<std::size_t>(std::count_if(row.begin(), row.end(), [](Extended const& e) { return e.is_infinite(); }));
    }
    out << "points: " << x->size() << "\ninfinite distances: " << inf << "\ncomponents: " << metric_components(*x)
        << "\n";
  } else if (auto const* n = std::get_if<NormedGroup>(&s.value)) {
    auto vals = norm_values(*n);
    out << "order: " << n->group.order() << "\nnorm values: " << vals.size()
        << "\nconjugacy classes: " << conjugacy_classes(n->group).size() << "\n";
  } else if (auto const* g = std::get_if<CatGroup>(&s.value)) {
    out << "order: " << g->group.order() << "\ncomponents: " << component_group(*g).quotient.group.order() << "\n";
  } else if (auto const* p = std::get_if<PreorderedGroup>(&s.value)) {
    auto cg = as_cat_group(*p);
    out << "order: " << p->group.order() << "\ncomponents: " << component_group(cg).quotient.group.order() << "\n";
  } else if (auto const* x = std::get_if<StrictNCat>(&s.value)) {
    out << "level: " << x->n << "\n";
    for (int k = 0; k <= x->n; ++k) {
      out << k << "-cells: " << x->count(k) << "\n";
    }
    out << "components: " << connected_components(*x).size() << "\n";
  }
  return 0;
}

std::string read_all(std::string const& path, std::istream& in) {
  std::ostringstream buf;
  if (path.empty() || path == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream f(path);
    if (!f) {
      throw InputError("cannot open " + path);
    }
    buf << f.rdbuf();
  }
  return buf.str();
}

}  // namespace

int run(std::vector<std::string> const& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Magnitude homology and iterated magnitude homology with exact arithmetic", "itermag"};
  app.require_subcommand(1);

  HomologyOptions h;
  std::string     input;
  auto*           hom = app.add_subcommand("homology", "Homology table of the input structure");
  hom->add_option("input", input, "Input document (default: standard input)");
  hom->add_option("--max-degree", h.max_degree, "Highest degree reported")->check(CLI::Range(0, 12));
  hom->add_option("--grading", h.gradings, "Length grading, e.g. 1 or 1/2 (repeatable)");
  hom->add_flag("--all-gradings", h.all_gradings, "Every grading that can carry homology up to --max-degree");
  hom->add_option("--route", h.route, "diag or tot")->check(CLI::IsMember({"diag", "tot"}));
  hom->add_flag("--normalize-rows", h.normalize_rows, "Quotient by degenerate rows (or diagonal degeneracies)");
  hom->add_option("--output", h.output, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* ver = app.add_subcommand("verify", "Check the input against the independent oracles for its kind");
  ver->add_option("input", input, "Input document (default: standard input)");

  std::string builder;
  auto*       bld = app.add_subcommand("builders", "List canned documents, or print one by name");
  bld->add_option("name", builder, "Builder name");

  auto* inf = app.add_subcommand("info", "Validation report and component counts");
  inf->add_option("input", input, "Input document (default: standard input)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (CLI::CallForHelp const&) {
    out << app.help();
    return 0;
  } catch (CLI::CallForAllHelp const&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (CLI::ParseError const& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (bld->parsed()) {
      if (builder.empty()) {
        for (auto const& n : builder_names()) {
          out << n << "\n";
        }
      } else {
        out << builder_document(builder) << "\n";
      }
      return 0;
    }
    Structure s = parse_input(read_all(input, in));
    if (hom->parsed()) {
      return homology_command(s, h, out);
    }
    if (ver->parsed()) {
      return verify_command(s, out);
    }
    return info_command(s, out);
  } catch (InputError const& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (ValidationError const& e) {
    err << "validation failed: " << e.what() << "\n";
    return 1;
  } catch (TruncationError const& e) {
    err << "truncated: " << e.what() << "; rerun with --max-degree " << e.required_max_degree() << " or higher\n";
    return 1;
  }
}

}  // namespace itermag::cli
