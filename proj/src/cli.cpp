#include "equichar/cli.hpp"

#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "equichar/harness.hpp"

namespace equichar {

namespace {

struct Args {
  std::string input;
  int N = 4;
  int k = 1;
  std::string weights;
  std::string format = "text";
  std::string cache_dir;
  std::string ring = "all";
  std::uint64_t seed = 1;
  int trials = 100;
  bool no_timings = false;
  bool no_cross_check = false;
  bool serial = false;
  Budget budget;
  bool n_given = false;
};

class Session {
public:
  Session(const Args& a, std::ostream& out) : a_(a), out_(out) {
    if (auto dir = DiskLatticeStore::resolve_dir(a.cache_dir)) store_.emplace(*dir);
  }

  bool json() const { return a_.format == "json"; }

  HarnessOptions harness() const {
    HarnessOptions h;
    h.budget = a_.budget;
    h.cross_check = !a_.no_cross_check;
    h.parallel = !a_.serial;
    h.store = store_ ? &*store_ : nullptr;
    return h;
  }

  EulerOptions euler() const { return EulerOptions{!a_.no_cross_check, 400, a_.budget}; }

  Json input() const {
    require(!a_.input.empty(), "this command needs --input <file.json>");
    return load_json_file(a_.input);
  }

  BurnsidePtr burnside(const GroupPtr& g) const { return BurnsideRing::create(g, a_.budget, harness().store); }

  std::vector<Rational> weights(int k) const {
    std::vector<Rational> w;
    if (a_.weights.empty()) return std::vector<Rational>(static_cast<std::size_t>(k), Rational(1));
    std::stringstream ss(a_.weights);
    std::string item;
    while (std::getline(ss, item, ',')) w.push_back(parse_rational(item));
    require(w.size() == static_cast<std::size_t>(k),
            "--weights needs " + std::to_string(k) + " entries, got " + std::to_string(w.size()));
    return w;
  }

  void emit(const Json& j, const std::string& text) const {
    if (json())
      out_ << j.dump(2) << "\n";
    else
      out_ << text << (text.empty() || text.back() == '\n' ? "" : "\n");
  }

  int emit_reports(const std::vector<VerificationReport>& reports) const {
    bool pass = true;
    for (const auto& r : reports) pass = pass && r.pass();
    const bool timings = !a_.no_timings;
    if (json()) {
      if (reports.size() == 1) {
        out_ << report_json(reports.front(), timings).dump(2) << "\n";
      } else {
        Json arr = Json::array();
        for (const auto& r : reports) arr.push_back(report_json(r, timings));
        out_ << arr.dump(2) << "\n";
      }
    } else {
      for (const auto& r : reports) out_ << report_text(r, timings);
    }
    return pass ? 0 : 2;
  }

  const Args& args() const { return a_; }

private:
  const Args& a_;
  std::ostream& out_;
  std::optional<DiskLatticeStore> store_;
};

GroupPtr group_input(const Json& j) {
  if (j.is_object() && j.contains("group")) return parse_group(j["group"], "$.group");
  return parse_group(j);
}

std::uint64_t element_order(const FiniteGroup& g, Index x) {
  std::uint64_t n = 1;
  for (Index y = x; y != g.identity(); y = g.mul(y, x)) ++n;
  return n;
}

std::string join_names(const FiniteGroup& g, std::span<const Index> elems) {
  std::string s;
  for (auto e : elems) s += (s.empty() ? "" : ", ") + g.element_name(e);
  return s.empty() ? "-" : s;
}

int cmd_group(const Session& s, const std::string& what) {
  const auto g = group_input(s.input());
  if (what == "show") {
    const auto classes = conjugacy_classes(g);
    Json j = Json::object();
    j["label"] = g->label();
    j["order"] = g->order();
    Json gens = Json::array();
    for (auto x : g->generators()) gens.push_back(g->element_name(x));
    j["generators"] = gens;
    j["element_classes"] = classes.size();
    std::ostringstream t;
    t << "group " << g->label() << "\norder " << g->order() << "\ngenerators "
      << join_names(*g, g->generators()) << "\nelement classes " << classes.size() << "\n";
    s.emit(j, t.str());
    return 0;
  }
  if (what == "classes") {
    const auto classes = conjugacy_classes(g);
    Json arr = Json::array();
    std::ostringstream t;
    t << classes.size() << " conjugacy classes of " << g->label() << "\n";
    for (std::size_t i = 0; i < classes.size(); ++i) {
      const auto rep = classes[i].front();
      Json c = Json::object();
      c["size"] = classes[i].size();
      c["order"] = element_order(*g, rep);
      c["representative"] = rep;
      c["name"] = g->element_name(rep);
      arr.push_back(c);
      t << "  " << i << ": size " << classes[i].size() << ", order " << element_order(*g, rep) << ", rep " << rep
        << " " << g->element_name(rep) << "\n";
    }
    Json j = Json::object();
    j["group"] = g->label();
    j["classes"] = arr;
    s.emit(j, t.str());
    return 0;
  }
  const auto ring = s.burnside(g);
  if (what == "subgroups") {
    Json arr = Json::array();
    std::ostringstream t;
    t << ring->rank() << " subgroup classes of " << g->label() << "\n";
    for (std::size_t i = 0; i < ring->rank(); ++i) {
      const auto& h = ring->classes()[i];
      Json c = Json::object();
      c["label"] = ring->basis_label(i);
      c["order"] = h.order();
      c["elements"] = h.elements;
      Json gens = Json::array();
      for (auto x : h.generators) gens.push_back(g->element_name(x));
      c["generators"] = gens;
      arr.push_back(c);
      t << "  " << ring->basis_label(i) << ": order " << h.order() << ", generators " << join_names(*g, h.generators)
        << "\n";
    }
    Json j = Json::object();
    j["group"] = g->label();
    j["subgroups"] = arr;
    s.emit(j, t.str());
    return 0;
  }
  // marks
  const auto& m = ring->table_of_marks();
  Json j = Json::object();
  j["group"] = g->label();
  j["basis"] = basis_json(*ring);
  j["marks"] = m;
  std::size_t width = 1;
  for (std::size_t i = 0; i < ring->rank(); ++i) width = std::max(width, ring->basis_label(i).size());
  for (const auto& row : m)
    for (auto v : row) width = std::max(width, std::to_string(v).size());
  std::ostringstream t;
  t << std::setw(static_cast<int>(width)) << "";
  for (std::size_t i = 0; i < ring->rank(); ++i) t << "  " << std::setw(static_cast<int>(width)) << ring->basis_label(i);
  t << "\n";
  for (std::size_t k = 0; k < m.size(); ++k) {
    t << std::setw(static_cast<int>(width)) << ring->basis_label(k);
    for (auto v : m[k]) t << "  " << std::setw(static_cast<int>(width)) << v;
    t << "\n";
  }
  s.emit(j, t.str());
  return 0;
}

int cmd_chi(const Session& s, const std::string& verb) {
  const auto x = parse_cellspace(s.input());
  const int k = s.args().k;
  Json j = Json::object();
  if (verb == "chi-k-eq") {
    const auto ring = s.burnside(x.gB());
    const auto v = chi_k_equivariant(*ring, x, k, s.euler());
    j["k"] = k;
    j["value"] = to_json(v);
    s.emit(j, v.to_string());
    return 0;
  }
  Int v;
  if (verb == "chi") {
    v = chi(x);
  } else if (verb == "chi-orb") {
    v = chi_orb(x, s.euler());
  } else {
    j["k"] = k;
    v = chi_k(x, k, s.euler());
  }
  j["value"] = int_json(v);
  s.emit(j, v.str());
  return 0;
}

int cmd_power(const Session& s) {
  const auto in = s.input();
  const auto& series = json_field(in, "series");
  if (!series.is_array() || series.empty()) throw InputError("$.series", "expected a non-empty array");
  const int n = s.args().n_given ? s.args().N : static_cast<int>(series.size()) - 1;
  auto coefficient = [&](std::size_t i) -> const Json* { return i < series.size() ? &series[i] : nullptr; };
  const bool lext = in.value("lext", false);
  if (!in.contains("gB") && !lext) {
    auto ring = IntegerRing::get();
    auto a = IntSeries::one(ring, n);
    for (int i = 0; i <= n; ++i)
      if (const auto* c = coefficient(static_cast<std::size_t>(i)))
        a[i] = parse_int_json(*c, "$.series[" + std::to_string(i) + "]");
    require(a[0] == 1, "$.series[0]: constant term must be 1");
    const Int m = parse_int_json(json_field(in, "exponent"), "$.exponent");
    const auto r = power(a, m);
    Json j = Json::object();
    j["series"] = to_json(r);
    s.emit(j, to_string(r));
    return 0;
  }
  const auto g = in.contains("gB") ? parse_group(in["gB"], "$.gB") : FiniteGroup::trivial();
  const auto ring = s.burnside(g);
  if (lext) {
    const auto L = LExtLambda::create(ring);
    auto a = LExtSeries::one(L, n);
    for (int i = 0; i <= n; ++i)
      if (const auto* c = coefficient(static_cast<std::size_t>(i)))
        a[i] = parse_lext(*c, ring, "$.series[" + std::to_string(i) + "]");
    require(a[0] == L->one(), "$.series[0]: constant term must be 1");
    const auto r = power_L(a, parse_lext(json_field(in, "exponent"), ring, "$.exponent"));
    Json j = Json::object();
    j["series"] = to_json(r);
    s.emit(j, to_string(r));
    return 0;
  }
  const auto lam = BurnsideLambda::create(ring);
  auto a = BurnsideSeries::one(lam, n);
  for (int i = 0; i <= n; ++i)
    if (const auto* c = coefficient(static_cast<std::size_t>(i)))
      a[i] = parse_burnside(*c, ring, "$.series[" + std::to_string(i) + "]");
  require(a[0] == ring->one(), "$.series[0]: constant term must be 1");
  const auto r = power(a, parse_burnside(json_field(in, "exponent"), ring, "$.exponent"));
  Json j = Json::object();
  j["series"] = to_json(r);
  s.emit(j, to_string(r));
  return 0;
}

int cmd_zeta(const Session& s) {
  const auto x = parse_biset(s.input());
  require(x.o_side_trivial(), "zeta takes a G_B-set: the O-side action must be trivial");
  const auto ring = s.burnside(x.gB());
  const auto lam = BurnsideLambda::create(ring);
  auto z = BurnsideSeries::one(lam, s.args().N);
  for (int i = 1; i <= s.args().N; ++i) z[i] = ring->class_of(symmetric_power(x, i, s.args().budget));
  Json j = Json::object();
  j["series"] = to_json(z);
  s.emit(j, to_string(z));
  return 0;
}

int cmd_orbifold_class(const Session& s) {
  const auto in = s.input();
  const bool is_datum = in.is_object() && in.contains("strata");
  GroupPtr gB = FiniteGroup::trivial();
  if (in.is_object() && in.contains("gB")) gB = parse_group(in["gB"], "$.gB");
  const auto L = LExtLambda::create(s.burnside(gB));
  OrbifoldDatum datum;
  if (is_datum) {
    datum = parse_datum(in, *L);
  } else {
    const auto x = parse_biset(in);
    datum = datum_from_biset(*L, x, s.args().k, s.weights(s.args().k), s.args().budget);
  }
  const auto v = orbifold_class_from_datum(*L, datum);
  Json j = Json::object();
  j["k"] = datum.k;
  j["strata"] = datum.strata.size();
  j["basis"] = basis_json(*L->burnside());
  j["value"] = to_json(v);
  s.emit(j, v.to_string());
  return 0;
}

int cmd_verify(const Session& s, const std::string& what) {
  const auto& a = s.args();
  const auto h = s.harness();
  if (what == "theorem1") return s.emit_reports({verify_theorem1(parse_biset(s.input()), a.k, a.N, h)});
  if (what == "lemma1") return s.emit_reports({verify_lemma1(parse_biset(s.input()), a.N, h)});
  const int n = a.n_given ? a.N : 6;
  GroupPtr g;
  if (!a.input.empty()) g = group_input(s.input());
  if (what == "props12")
    return s.emit_reports({verify_props12(g ? g : FiniteGroup::cyclic(2), a.trials, n, a.seed, h)});
  std::vector<VerificationReport> reports;
  if (a.ring == "z" || a.ring == "all") reports.push_back(verify_axioms(AxiomRing::integer, nullptr, a.trials, n, a.seed, h));
  if (a.ring == "burnside" || a.ring == "all")
    reports.push_back(verify_axioms(AxiomRing::burnside, g ? g : FiniteGroup::symmetric(3), a.trials, n, a.seed, h));
  if (a.ring == "lext" || a.ring == "all")
    reports.push_back(verify_axioms(AxiomRing::lext, g ? g : FiniteGroup::cyclic(2), a.trials, n, a.seed, h));
  return s.emit_reports(reports);
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Burnside ring valued Euler characteristics and Macdonald type identities"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  Args a;
  app.add_option("--input", a.input, "JSON input file");
  auto* n_opt = app.add_option("--N", a.N, "truncation degree")->check(CLI::Range(0, 64));
  app.add_option("--k", a.k, "order k")->check(CLI::Range(0, 16));
  app.add_option("--weights", a.weights, "comma separated rational weights, e.g. 1,1/2");
  app.add_option("--format", a.format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--cache-dir", a.cache_dir, "table of marks cache directory (default: $EQUICHAR_CACHE)");
  app.add_option("--seed", a.seed, "random seed for randomized checks");
  app.add_option("--trials", a.trials, "randomized trials")->check(CLI::Range(1, 100000));
  app.add_option("--ring", a.ring, "ring for verify axioms")->check(CLI::IsMember({"z", "burnside", "lext", "all"}));
  app.add_flag("--no-timings", a.no_timings, "report 0 ms everywhere (byte-identical output)");
  app.add_flag("--no-cross-check", a.no_cross_check, "skip the second computation path");
  app.add_flag("--serial", a.serial, "verify degrees one after another");
  app.add_option("--max-points", a.budget.max_points, "point budget");
  app.add_option("--max-wreath-order-k1", a.budget.max_wreath_order_k1, "wreath order budget for k <= 1");
  app.add_option("--max-wreath-order-k2", a.budget.max_wreath_order_k2, "wreath order budget for k >= 2");
  app.add_option("--max-subgroup-order", a.budget.max_subgroup_lattice_order, "largest group with a subgroup lattice");
  app.add_option("--max-tuples", a.budget.max_tuple_classes, "tuple class and recursion budget");
  app.add_option("--max-configurations", a.budget.max_configurations, "configuration budget");

  std::string group_what, verify_what;
  auto* group = app.add_subcommand("group", "group information");
  group->add_option("what", group_what, "show | classes | subgroups | marks")
      ->required()
      ->check(CLI::IsMember({"show", "classes", "subgroups", "marks"}));
  auto* verify = app.add_subcommand("verify", "verify an identity degree by degree");
  verify->add_option("identity", verify_what, "theorem1 | lemma1 | axioms | props12")
      ->required()
      ->check(CLI::IsMember({"theorem1", "lemma1", "axioms", "props12"}));
  const std::vector<std::string> simple{"chi", "chi-orb", "chi-k", "chi-k-eq", "power", "zeta", "orbifold-class"};
  app.add_subcommand("chi", "compactly supported Euler characteristic of X");
  app.add_subcommand("chi-orb", "orbifold Euler characteristic");
  app.add_subcommand("chi-k", "order k Euler characteristic");
  app.add_subcommand("chi-k-eq", "order k equivariant Euler characteristic in A(G_B)");
  app.add_subcommand("power", "(A(t))^m for a series and exponent from --input");
  app.add_subcommand("zeta", "Kapranov zeta series of a G_B-set");
  app.add_subcommand("orbifold-class",
                     "generalized orbifold class from a datum; variety classes are never computed, every "
                     "stratum class is taken from the input as given");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  a.n_given = n_opt->count() > 0;

  try {
    Session s(a, out);
    if (group->parsed()) return cmd_group(s, group_what);
    if (verify->parsed()) return cmd_verify(s, verify_what);
    for (const auto& name : simple) {
      if (!app.get_subcommand(name)->parsed()) continue;
      if (name == "power") return cmd_power(s);
      if (name == "zeta") return cmd_zeta(s);
      if (name == "orbifold-class") return cmd_orbifold_class(s);
      return cmd_chi(s, name);
    }
    return 1;
  } catch (const InvariantViolation& e) {
    err << "invariant violation: " << e.what() << "\n";
    return 2;
  } catch (const ResourceError& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return 1;
  } catch (const Json::exception& e) {
    err << "input error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace equichar
