#include <algorithm>
#include <map>
#include <set>

#include "cli.hpp"
#include "itermag/errors.hpp"
#include "json.hpp"

namespace itermag::cli {

using nlohmann::json;

namespace {

[[noreturn]] void fail(std::string const& msg) { throw InputError(msg); }

void check_fields(json const& j, std::string const& where, std::set<std::string> const& allowed,
                  std::set<std::string> const& required) {
  if (!j.is_object()) {
    fail(where + ": expected an object");
  }
  for (auto const& [k, v] : j.items()) {
    if (!allowed.count(k)) {
      fail(where + ": unknown field \"" + k + "\"");
    }
  }
  for (auto const& k : required) {
    if (!j.contains(k)) {
      fail(where + ": missing field \"" + k + "\"");
    }
  }
}

std::string as_string(json const& j, std::string const& where) {
  if (!j.is_string()) {
    fail(where + ": expected a string");
  }
  return j.get<std::string>();
}

std::vector<std::string> string_list(json const& j, std::string const& where) {
  if (!j.is_array()) {
    fail(where + ": expected an array of strings");
  }
  std::vector<std::string> out;
  for (auto const& v : j) {
    out.push_back(as_string(v, where));
  }
  std::set<std::string> seen(out.begin(), out.end());
  if (seen.size() != out.size()) {
    fail(where + ": duplicate names");
  }
  return out;
}

long as_int(json const& j, std::string const& where) {
  if (!j.is_number_integer()) {
    fail(where + ": expected an integer");
  }
  return j.get<long>();
}

// integers, or decimal / fraction strings, parsed exactly
Rational as_rational(json const& j, std::string const& where) {
  if (j.is_number_float()) {
    fail(where + ": floating-point numbers are not accepted, write \"" + j.dump() + "\" as a string");
  }
  if (j.is_number_integer()) {
    return Rational(j.get<long>());
  }
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (std::invalid_argument const& e) {
      fail(where + ": " + e.what());
    }
  }
  fail(where + ": expected an integer or a decimal string");
}

Extended as_extended(json const& j, std::string const& where) {
  if (j.is_string() && j.get<std::string>() == "inf") {
    return Extended::infinity();
  }
  return Extended(as_rational(j, where));
}

Index index_in(std::vector<std::string> const& names, std::string const& name, std::string const& where) {
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) {
    fail(where + ": unknown name \"" + name + "\"");
  }
  return static_cast<Index>(it - names.begin());
}

void require_valid(ValidationReport const& r, std::string const& what) {
  if (!r.ok) {
    throw ValidationError(what + ": " + r.message);
  }
}

// Group from "group": name or from top-level "elements" + "table".
FiniteGroup parse_group(json const& j, std::string const& where) {
  if (j.contains("group")) {
    if (j.contains("elements") || j.contains("table")) {
      fail(where + ": give either \"group\" or \"elements\" and \"table\"");
    }
    try {
      return named_group(as_string(j["group"], where + ".group"));
    } catch (std::invalid_argument const& e) {
      fail(where + ".group: " + e.what());
    }
  }
  if (!j.contains("elements") || !j.contains("table")) {
    fail(where + ": missing \"group\" (or \"elements\" and \"table\")");
  }
  auto names = string_list(j["elements"], where + ".elements");
  auto const& t = j["table"];
  if (!t.is_array() || t.size() != names.size()) {
    fail(where + ".table: expected " + std::to_string(names.size()) + " rows");
  }
  std::vector<std::vector<Elem>> table;
  for (std::size_t r = 0; r < t.size(); ++r) {
    std::string const w = where + ".table[" + std::to_string(r) + "]";
    if (!t[r].is_array() || t[r].size() != names.size()) {
      fail(w + ": expected " + std::to_string(names.size()) + " entries");
    }
    std::vector<Elem> row;
    for (auto const& v : t[r]) {
      row.push_back(index_in(names, as_string(v, w), w));
    }
    table.push_back(std::move(row));
  }
  return group_from_table(std::move(names), std::move(table));
}

Subset parse_subset(FiniteGroup const& g, json const& j, std::string const& where) {
  Subset s;
  for (auto const& name : string_list(j, where)) {
    s.push_back(index_in(g.names, name, where));
  }
  std::sort(s.begin(), s.end());
  return s;
}

std::set<std::string> const kGroupFields = {"kind", "group", "elements", "table"};

std::set<std::string> with_group(std::set<std::string> extra) {
  extra.insert(kGroupFields.begin(), kGroupFields.end());
  return extra;
}

FinCategory parse_category(json const& j) {
  check_fields(j, "category", {"kind", "objects", "morphisms", "compose"}, {"objects"});
  FinCategory c;
  c.objects = string_list(j["objects"], "category.objects");
  std::vector<std::string> names;
  for (auto const& o : c.objects) {
    c.identity.push_back(static_cast<Index>(c.morphisms.size()));
    c.morphisms.push_back({"id_" + o, index_in(c.objects, o, "category.objects"),
                           index_in(c.objects, o, "category.objects")});
  }
  if (j.contains("morphisms")) {
    if (!j["morphisms"].is_array()) {
      fail("category.morphisms: expected an array");
    }
    for (std::size_t k = 0; k < j["morphisms"].size(); ++k) {
      auto const&       m = j["morphisms"][k];
      std::string const w = "category.morphisms[" + std::to_string(k) + "]";
      check_fields(m, w, {"name", "src", "tgt"}, {"name", "src", "tgt"});
      c.morphisms.push_back({as_string(m["name"], w + ".name"),
                             index_in(c.objects, as_string(m["src"], w + ".src"), w + ".src"),
                             index_in(c.objects, as_string(m["tgt"], w + ".tgt"), w + ".tgt")});
    }
  }
  for (auto const& m : c.morphisms) {
    names.push_back(m.name);
  }
  if (std::set<std::string>(names.begin(), names.end()).size() != names.size()) {
    fail("category.morphisms: duplicate names (identities are named id_<object>)");
  }
  std::size_t const n = c.morphisms.size();
  c.then.assign(n, std::vector<std::int32_t>(n, kUndefined));
  for (std::size_t f = 0; f < n; ++f) {
    for (std::size_t g = 0; g < n; ++g) {
      if (c.morphisms[f].tgt != c.morphisms[g].src) {
        continue;
      }
      if (f < c.objects.size()) {
        c.then[f][g] = static_cast<std::int32_t>(g);
      } else if (g < c.objects.size()) {
        c.then[f][g] = static_cast<std::int32_t>(f);
      }
    }
  }
  if (j.contains("compose")) {
    if (!j["compose"].is_array()) {
      fail("category.compose: expected an array of [f, g, \"f then g\"] triples");
    }
    for (std::size_t k = 0; k < j["compose"].size(); ++k) {
      auto const&       t = j["compose"][k];
      std::string const w = "category.compose[" + std::to_string(k) + "]";
      if (!t.is_array() || t.size() != 3) {
        fail(w + ": expected [f, g, \"f then g\"]");
      }
      Index f = index_in(names, as_string(t[0], w), w);
      Index g = index_in(names, as_string(t[1], w), w);
      Index h = index_in(names, as_string(t[2], w), w);
      c.then[f][g] = static_cast<std::int32_t>(h);
    }
  }
  require_valid(validate(c), "category");
  return c;
}

GenMetricSpace parse_metric(json const& j) {
  check_fields(j, "metric", {"kind", "points", "d"}, {"points", "d"});
  GenMetricSpace x;
  x.points      = string_list(j["points"], "metric.points");
  auto const& d = j["d"];
  if (!d.is_array() || d.size() != x.size()) {
    fail("metric.d: expected " + std::to_string(x.size()) + " rows");
  }
  for (std::size_t a = 0; a < d.size(); ++a) {
    std::string const w = "metric.d[" + std::to_string(a) + "]";
    if (!d[a].is_array() || d[a].size() != x.size()) {
      fail(w + ": expected " + std::to_string(x.size()) + " entries");
    }
    std::vector<Extended> row;
    for (std::size_t b = 0; b < d[a].size(); ++b) {
      row.push_back(as_extended(d[a][b], w + "[" + std::to_string(b) + "]"));
    }
    x.d.push_back(std::move(row));
  }
  require_valid(validate(x), "metric");
  return x;
}

GenMetricSpace parse_digraph(json const& j) {
  check_fields(j, "digraph", {"kind", "vertices", "edges", "undirected"}, {"vertices", "edges"});
  auto vs         = string_list(j["vertices"], "digraph.vertices");
  bool undirected = false;
  if (j.contains("undirected")) {
    if (!j["undirected"].is_boolean()) {
      fail("digraph.undirected: expected true or false");
    }
    undirected = j["undirected"].get<bool>();
  }
  std::vector<std::pair<Index, Index>> edges;
  if (!j["edges"].is_array()) {
    fail("digraph.edges: expected an array of [from, to] pairs");
  }
  for (std::size_t k = 0; k < j["edges"].size(); ++k) {
    auto const&       e = j["edges"][k];
    std::string const w = "digraph.edges[" + std::to_string(k) + "]";
    if (!e.is_array() || e.size() != 2) {
      fail(w + ": expected [from, to]");
    }
    Index a = index_in(vs, as_string(e[0], w), w);
    Index b = index_in(vs, as_string(e[1], w), w);
    edges.emplace_back(a, b);
    if (undirected) {
      edges.emplace_back(b, a);
    }
  }
  auto x = digraph_metric(vs, edges);
  require_valid(validate(x), "digraph");
  return x;
}

NormedGroup parse_normed(json const& j) {
  check_fields(j, "normed-group", with_group({"norm", "word-norm"}), {});
  NormedGroup n{parse_group(j, "normed-group"), {}};
  if (j.contains("norm") == j.contains("word-norm")) {
    fail("normed-group: give exactly one of \"norm\" and \"word-norm\"");
  }
  if (j.contains("word-norm")) {
    return word_norm_group(n.group, parse_subset(n.group, j["word-norm"], "normed-group.word-norm"));
  }
  auto const& m = j["norm"];
  if (!m.is_object()) {
    fail("normed-group.norm: expected an object mapping element names to values");
  }
  n.norm.assign(n.group.order(), Rational(0));
  std::vector<char> given(n.group.order(), 0);
  for (auto const& [k, v] : m.items()) {
    Index g  = index_in(n.group.names, k, "normed-group.norm");
    n.norm[g] = as_rational(v, "normed-group.norm." + k);
    given[g]  = 1;
  }
  for (Elem g = 0; g < n.group.order(); ++g) {
    if (!given[g]) {
      fail("normed-group.norm: no value for \"" + n.group.names[g] + "\"");
    }
  }
  require_valid(validate(n), "normed-group");
  return n;
}

StrictNCat to_ncat(Structure const& s) {
  if (auto const* c = std::get_if<FinCategory>(&s.value)) {
    return as_ncat(*c);
  }
  if (auto const* g = std::get_if<CatGroup>(&s.value)) {
    return as_ncat(*g);
  }
  if (auto const* p = std::get_if<PreorderedGroup>(&s.value)) {
    return as_ncat(as_cat_group(*p));
  }
  if (auto const* x = std::get_if<StrictNCat>(&s.value)) {
    return *x;
  }
  fail(s.kind + " cannot be read as a strict n-category");
}

Structure parse_doc(json const& j, std::string const& where);

std::vector<Structure> parse_factors(json const& j, std::string const& kind) {
  check_fields(j, kind, {"kind", "factors"}, {"factors"});
  if (!j["factors"].is_array() || j["factors"].size() != 2) {
    fail(kind + ".factors: expected two documents");
  }
  return {parse_doc(j["factors"][0], kind + ".factors[0]"), parse_doc(j["factors"][1], kind + ".factors[1]")};
}

Structure parse_doc(json const& j, std::string const& where) {
  if (!j.is_object() || !j.contains("kind")) {
    fail(where + ": expected an object with a \"kind\"");
  }
  Structure s;
  s.kind = as_string(j["kind"], where + ".kind");
  if (s.kind == "category") {
    s.value = parse_category(j);
  } else if (s.kind == "metric") {
    s.value = parse_metric(j);
  } else if (s.kind == "digraph") {
    s.value = parse_digraph(j);
  } else if (s.kind == "normed-group") {
    s.value = parse_normed(j);
  } else if (s.kind == "cat-group") {
    check_fields(j, "cat-group", with_group({"normal-subgroup"}), {"normal-subgroup"});
    auto g  = parse_group(j, "cat-group");
    auto n  = parse_subset(g, j["normal-subgroup"], "cat-group.normal-subgroup");
    auto cg = two_group_from_normal_subgroup(g, n);
    require_valid(validate(cg), "cat-group");
    s.value = std::move(cg);
  } else if (s.kind == "preordered-group") {
    check_fields(j, "preordered-group", with_group({"positive-cone"}), {"positive-cone"});
    auto g  = parse_group(j, "preordered-group");
    auto pg = preordered_group_from_cone(g, parse_subset(g, j["positive-cone"], "preordered-group.positive-cone"));
    require_valid(validate(pg), "preordered-group");
    s.value = std::move(pg);
  } else if (s.kind == "sphere") {
    check_fields(j, "sphere", {"kind", "n"}, {"n"});
    long n = as_int(j["n"], "sphere.n");
    if (n < 1 || n > 6) {
      fail("sphere.n: expected 1..6");
    }
    s.inner.push_back(discrete_ncat({"N", "S"}));
    s.times = static_cast<int>(n);
    s.value = sphere_ncat(static_cast<int>(n));
  } else if (s.kind == "ncat-suspension") {
    check_fields(j, "ncat-suspension", {"kind", "of", "points", "times"}, {});
    if (j.contains("of") == j.contains("points")) {
      fail("ncat-suspension: give exactly one of \"of\" and \"points\"");
    }
    StrictNCat x = j.contains("points") ? discrete_ncat(string_list(j["points"], "ncat-suspension.points"))
                                        : to_ncat(parse_doc(j["of"], "ncat-suspension.of"));
    long times = j.contains("times") ? as_int(j["times"], "ncat-suspension.times") : 1;
    if (times < 1 || times > 4) {
      fail("ncat-suspension.times: expected 1..4");
    }
    s.inner.push_back(x);
    s.times = static_cast<int>(times);
    for (long k = 0; k < times; ++k) {
      x = suspension(x);
    }
    require_valid(validate(x), "ncat-suspension");
    s.value = std::move(x);
  } else if (s.kind == "product") {
    s.factors = parse_factors(j, "product");
    auto const* a = std::get_if<FinCategory>(&s.factors[0].value);
    auto const* b = std::get_if<FinCategory>(&s.factors[1].value);
    if (!a || !b) {
      fail("product: both factors must be categories");
    }
    s.value = product_category(*a, *b);
  } else if (s.kind == "tensor") {
    s.factors = parse_factors(j, "tensor");
    auto const* a = std::get_if<GenMetricSpace>(&s.factors[0].value);
    auto const* b = std::get_if<GenMetricSpace>(&s.factors[1].value);
    if (!a || !b) {
      fail("tensor: both factors must be metric spaces (metric, digraph or tensor)");
    }
    s.value = tensor_metric(*a, *b);
  } else {
    fail(where + ".kind: unknown kind \"" + s.kind + "\"");
  }
  return s;
}

}  // namespace

Structure parse_input(std::string const& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (json::parse_error const& e) {
    std::size_t line = 1, col = 1;
    std::size_t const end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string what = e.what();
    auto        pos  = what.find("syntax error");
    throw InputError("line " + std::to_string(line) + ", column " + std::to_string(col) + ": "
                     + (pos == std::string::npos ? what : what.substr(pos)));
  }
  return parse_doc(j, "input");
}

namespace {

std::map<std::string, std::string> const& builders() {
  static std::map<std::string, std::string> const b = {
      {"circle",
       R"J({"kind": "category", "objects": ["A", "B"], "morphisms": [{"name": "f", "src": "A", "tgt": "B"}, {"name": "g", "src": "A", "tgt": "B"}]})J"},
      {"torus",
       R"J({"kind": "product", "factors": [{"kind": "category", "objects": ["A", "B"], "morphisms": [{"name": "f", "src": "A", "tgt": "B"}, {"name": "g", "src": "A", "tgt": "B"}]}, {"kind": "category", "objects": ["A", "B"], "morphisms": [{"name": "f", "src": "A", "tgt": "B"}, {"name": "g", "src": "A", "tgt": "B"}]}]})J"},
      {"two-point", R"J({"kind": "metric", "points": ["a", "b"], "d": [[0, 1], [1, 0]]})J"},
      {"square",
       R"J({"kind": "tensor", "factors": [{"kind": "metric", "points": ["a", "b"], "d": [[0, 1], [1, 0]]}, {"kind": "metric", "points": ["a", "b"], "d": [[0, 1], [1, 0]]}]})J"},
      {"cycle-digraph-3", R"J({"kind": "digraph", "vertices": ["0", "1", "2"], "edges": [["0", "1"], ["1", "2"], ["2", "0"]]})J"},
      {"half-line", R"J({"kind": "metric", "points": ["x", "y", "z"], "d": [[0, "0.5", 1], ["0.5", 0, "1/2"], [1, "1/2", 0]]})J"},
      {"s3-word-norm", R"J({"kind": "normed-group", "group": "S3", "word-norm": ["(1 2)"]})J"},
      {"z2-norm", R"J({"kind": "normed-group", "elements": ["e", "t"], "table": [["e", "t"], ["t", "e"]], "norm": {"e": 0, "t": 1}})J"},
      {"s3-a3", R"J({"kind": "cat-group", "group": "S3", "normal-subgroup": ["e", "(1 2 3)", "(1 3 2)"]})J"},
      {"s3-cone", R"J({"kind": "preordered-group", "group": "S3", "positive-cone": ["e", "(1 2 3)", "(1 3 2)"]})J"},
      {"sphere-2", R"J({"kind": "sphere", "n": 2})J"},
      {"suspended-points", R"J({"kind": "ncat-suspension", "points": ["p", "q", "r"]})J"},
  };
  return b;
}

}  // namespace

std::vector<std::string> builder_names() {
  std::vector<std::string> out;
  for (auto const& [k, v] : builders()) {
    out.push_back(k);
  }
  return out;
}

std::string builder_document(std::string const& name) {
  auto it = builders().find(name);
  if (it == builders().end()) {
    throw InputError("unknown builder \"" + name + "\"");
  }
  return json::parse(it->second).dump(2);
}

}  // namespace itermag::cli
