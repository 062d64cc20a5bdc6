#include "equichar/harness.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <random>
#include <sstream>

namespace equichar {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

Json group_json(const FiniteGroup& g) {
  Json out = Json::object();
  out["label"] = g.label();
  out["order"] = g.order();
  return out;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::size_t element_class_count(const FiniteGroup& g) {
  // non-owning handle; the caller keeps g alive
  const GroupPtr borrowed(GroupPtr{}, &g);
  return conjugacy_classes(borrowed).size();
}

// Runs one task per degree, concurrently when requested; results keep degree order.
template <class F>
std::vector<DegreeResult> run_degrees(int n, bool parallel, F&& task) {
  std::vector<DegreeResult> out;
  if (!parallel) {
    for (int j = 0; j <= n; ++j) out.push_back(task(j));
    return out;
  }
  std::vector<std::future<DegreeResult>> futures;
  for (int j = 0; j <= n; ++j) futures.push_back(std::async(std::launch::async, task, j));
  for (auto& f : futures) out.push_back(f.get());
  return out;
}

std::uint64_t checked_pow(std::uint64_t base, int e, std::uint64_t cap) {
  std::uint64_t out = 1;
  for (int i = 0; i < e; ++i) {
    if (base != 0 && out > cap / base) return cap + 1;
    out *= base;
  }
  return out;
}

// Per-ring random generators for the axiom and proposition suites.
struct IntegerGen {
  std::shared_ptr<const IntegerRing> ring = IntegerRing::get();
  Int element(std::mt19937& rng) const { return std::uniform_int_distribution<int>(-3, 3)(rng); }
};

struct BurnsideGen {
  std::shared_ptr<const BurnsideLambda> ring;
  BurnsideElement element(std::mt19937& rng) const {
    std::uniform_int_distribution<int> d(-2, 2);
    std::vector<Int> c;
    for (std::size_t i = 0; i < ring->burnside()->rank(); ++i) c.push_back(d(rng));
    return BurnsideElement(ring->burnside(), std::move(c));
  }
};

struct LExtGen {
  std::shared_ptr<const LExtLambda> ring;
  LExtElement element(std::mt19937& rng) const {
    std::uniform_int_distribution<int> d(-2, 2), half(-2, 3), count(1, 2);
    auto out = ring->zero();
    const int terms = count(rng);
    for (int t = 0; t < terms; ++t) {
      std::vector<Int> c;
      for (std::size_t i = 0; i < ring->burnside()->rank(); ++i) c.push_back(d(rng));
      out += LExtElement::monomial(Rational(half(rng), 2), BurnsideElement(ring->burnside(), std::move(c)));
    }
    return out;
  }
};

template <class Gen>
auto random_series(const Gen& gen, std::mt19937& rng, int n) {
  auto s = TruncatedSeries<std::decay_t<decltype(*gen.ring)>>::one(gen.ring, n);
  for (int k = 1; k <= n; ++k) s[k] = gen.element(rng);
  return s;
}

// Tally of one law over all trials.
struct Law {
  std::string label;
  int passed = 0;
  int trials = 0;
  double ms = 0;
};

DegreeResult law_result(int index, const Law& law) {
  DegreeResult d;
  d.n = index;
  d.label = law.label;
  d.lhs = std::to_string(law.passed) + "/" + std::to_string(law.trials);
  d.rhs = std::to_string(law.trials) + "/" + std::to_string(law.trials);
  d.equal = law.passed == law.trials;
  d.ms = law.ms;
  return d;
}

template <class F>
void tally(Law& law, F&& check) {
  const auto start = Clock::now();
  law.passed += check() ? 1 : 0;
  ++law.trials;
  law.ms += elapsed_ms(start);
}

template <class Gen>
std::vector<Law> axiom_suite(const Gen& gen, int trials, int n, std::mt19937& rng) {
  std::vector<Law> laws{{"1) linear coefficient m·a1"},
                        {"2) (A·B)^m = A^m · B^m"},
                        {"3) A^(m+n) = A^m · A^n"},
                        {"4) A^(mn) = (A^m)^n"},
                        {"A^1 = A and A^0 = 1"},
                        {"finite determinacy"}};
  const auto& ring = gen.ring;
  for (int t = 0; t < trials; ++t) {
    const auto a = random_series(gen, rng, n);
    const auto b = random_series(gen, rng, n);
    const auto m = gen.element(rng);
    const auto k = gen.element(rng);
    const auto am = power(a, m);
    tally(laws[0], [&] { return am[1] == m * a[1]; });
    tally(laws[1], [&] { return power(a * b, m) == am * power(b, m); });
    tally(laws[2], [&] { return power(a, m + k) == am * power(a, k); });
    tally(laws[3], [&] { return power(a, m * k) == power(am, k); });
    tally(laws[4], [&] {
      return power(a, ring->one()) == a && power(a, ring->zero()) == decltype(a)::one(ring, n);
    });
    // coefficients up to j of A^m depend only on a_1..a_j
    const int j = std::uniform_int_distribution<int>(1, n)(rng);
    auto other = a;
    for (int i = j + 1; i <= n; ++i) other[i] = gen.element(rng);
    tally(laws[5], [&] { return truncate(am, j) == truncate(power(other, m), j); });
  }
  return laws;
}

}  // namespace

bool VerificationReport::pass() const {
  for (const auto& d : degrees)
    if (!d.equal) return false;
  return true;
}

Json report_json(const VerificationReport& r, bool timings) {
  Json out = Json::object();
  out["identity"] = r.identity;
  out["params"] = r.params;
  Json degrees = Json::array();
  for (const auto& d : r.degrees) {
    Json e = Json::object();
    e["n"] = d.n;
    if (!d.label.empty()) e["label"] = d.label;
    e["lhs"] = d.lhs;
    e["rhs"] = d.rhs;
    e["equal"] = d.equal;
    e["ms"] = timings ? std::round(d.ms * 1000.0) / 1000.0 : 0.0;
    degrees.push_back(std::move(e));
  }
  out["degrees"] = std::move(degrees);
  out["pass"] = r.pass();
  return out;
}

std::string report_text(const VerificationReport& r, bool timings) {
  std::ostringstream out;
  out << r.identity << " " << r.params.dump() << "\n";
  for (const auto& d : r.degrees) {
    out << "  " << (d.label.empty() ? "n=" + std::to_string(d.n) : d.label) << ": " << d.lhs
        << (d.equal ? " == " : " != ") << d.rhs;
    if (timings) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.1f", d.ms);
      out << "  [" << buf << " ms]";
    }
    out << "\n";
  }
  out << (r.pass() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

DiskLatticeStore::DiskLatticeStore(std::string dir) : dir_(std::move(dir)) {
  require(!dir_.empty(), "cache directory must not be empty");
}

std::optional<std::string> DiskLatticeStore::resolve_dir(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("EQUICHAR_CACHE"); env && *env) return std::string(env);
  return std::nullopt;
}

std::string DiskLatticeStore::path_for(const FiniteGroup& g) const {
  return (std::filesystem::path(dir_) / ("lattice-" + hex64(g.cayley_digest()) + ".json")).string();
}

std::optional<LatticeData> DiskLatticeStore::load(const FiniteGroup& g) const {
  namespace fs = std::filesystem;
  const auto file = path_for(g);
  std::error_code ec;
  if (!fs::exists(file, ec)) return std::nullopt;
  auto evict = [&] {
    fs::remove(file, ec);
    return std::nullopt;
  };
  Json j;
  try {
    std::ifstream in(file);
    j = Json::parse(in);
  } catch (const std::exception&) {
    return evict();
  }
  if (!j.is_object() || j.value("version", -1) != kVersion) return evict();
  try {
    if (j.at("order").get<std::uint64_t>() != g.order() || j.at("digest").get<std::string>() != hex64(g.cayley_digest()))
      return evict();
    // recomputed fingerprint: element class count
    if (j.at("element_classes").get<std::size_t>() != element_class_count(g)) return evict();
    LatticeData data;
    data.class_elements = j.at("classes").get<std::vector<std::vector<Index>>>();
    data.marks = j.at("marks").get<std::vector<std::vector<std::int64_t>>>();
    const std::size_t r = data.class_elements.size();
    if (r == 0 || data.marks.size() != r) return evict();
    if (data.class_elements.front() != std::vector<Index>{0}) return evict();
    if (data.class_elements.back().size() != g.order()) return evict();
    for (std::size_t k = 0; k < r; ++k) {
      const auto& elems = data.class_elements[k];
      if (elems.empty() || elems.front() != 0 || !std::is_sorted(elems.begin(), elems.end())) return evict();
      if (elems.back() >= g.order() || g.order() % elems.size() != 0) return evict();
      if (k > 0 && data.class_elements[k - 1].size() > elems.size()) return evict();
      if (data.marks[k].size() != r) return evict();
      if (data.marks[k][0] != static_cast<std::int64_t>(g.order() / elems.size())) return evict();
      if (data.marks[k][k] <= 0 || data.marks[r - 1][k] != 1) return evict();
      for (std::size_t h = k + 1; h < r; ++h)
        if (data.marks[k][h] != 0) return evict();
      // closed and stored in canonical form; from_elements throws otherwise
      const GroupPtr borrowed(GroupPtr{}, &g);
      if (canonical_conjugate(Subgroup::from_elements(borrowed, elems)) != elems) return evict();
    }
    return data;
  } catch (const std::exception&) {
    return evict();
  }
}

void DiskLatticeStore::store(const FiniteGroup& g, const LatticeData& data) const {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) throw std::runtime_error("cannot create cache directory " + dir_ + ": " + ec.message());
  Json j = Json::object();
  j["version"] = kVersion;
  j["order"] = g.order();
  j["digest"] = hex64(g.cayley_digest());
  j["element_classes"] = element_class_count(g);
  j["classes"] = data.class_elements;
  j["marks"] = data.marks;
  write_file_atomic(path_for(g), j.dump());
}

VerificationReport verify_theorem1(const BiSet& x, int k, int n, const HarnessOptions& opts) {
  require(k >= 0, "verify theorem1 requires k >= 0");
  require(n >= 0, "verify theorem1 requires N >= 0");
  const auto& budget = opts.budget;
  const std::uint64_t wreath_cap = k <= 1 ? budget.max_wreath_order_k1 : budget.max_wreath_order_k2;
  for (int j = 1; j <= n; ++j) {
    std::uint64_t order = checked_pow(x.gO()->order(), j, wreath_cap);
    for (int f = 2; f <= j && order <= wreath_cap; ++f) order *= static_cast<std::uint64_t>(f);
    if (order > wreath_cap) throw ResourceError("wreath order |G_O|^n n! at n = " + std::to_string(j), order, wreath_cap);
    const auto points = checked_pow(x.size(), j, budget.max_points);
    if (points > budget.max_points) throw ResourceError("points |X|^n at n = " + std::to_string(j), points, budget.max_points);
  }

  const auto ring = BurnsideRing::create(x.gB(), budget, opts.store);
  const EulerOptions eo{opts.cross_check, 400, budget};
  const auto m = chi_k_equivariant(*ring, x, k, eo);
  const auto rhs = rhs_theorem1(BurnsideLambda::create(ring), m, k, n);

  VerificationReport report;
  report.identity = "theorem1";
  report.params["k"] = k;
  report.params["N"] = n;
  report.params["gO"] = group_json(*x.gO());
  report.params["gB"] = group_json(*x.gB());
  report.params["size"] = x.size();
  report.params["basis"] = basis_json(*ring);
  report.params["exponent"] = m.to_string();

  report.degrees = run_degrees(n, opts.parallel, [&](int j) {
    const auto start = Clock::now();
    BurnsideElement lhs = ring->zero();
    if (j == 0)
      lhs = chi_k_equivariant(*ring, BiSet::trivial_set(FiniteGroup::trivial(), x.gB(), 1), k, eo);
    else
      lhs = chi_k_equivariant(*ring, wreath_power(x, j, budget), k, eo);
    DegreeResult d;
    d.n = j;
    d.lhs = lhs.to_string();
    d.rhs = rhs[j].to_string();
    d.equal = lhs == rhs[j];
    d.ms = elapsed_ms(start);
    return d;
  });
  return report;
}

VerificationReport verify_lemma1(const BiSet& x, int n, const HarnessOptions& opts) {
  require(n >= 0, "verify lemma1 requires N >= 0");
  require(x.o_side_trivial(), "verify lemma1 takes a G_B-set: the O-side action must be trivial");
  const auto& budget = opts.budget;
  // |S^N X| = C(|X| + N - 1, N)
  Int multisets = 1;
  for (int j = 1; j <= n; ++j) multisets = multisets * (Int(x.size()) + j - 1) / j;
  if (multisets > Int(budget.max_points))
    throw ResourceError("points of S^N X", multisets > Int(UINT64_MAX) ? UINT64_MAX : static_cast<std::uint64_t>(multisets),
                        budget.max_points);

  const auto ring = BurnsideRing::create(x.gB(), budget, opts.store);
  const auto lam = BurnsideLambda::create(ring);
  const auto chi = chi_equivariant(*ring, x);
  auto one_minus_t = BurnsideSeries::one(lam, n);
  if (n >= 1) one_minus_t[1] = ring->from_int(-1);
  const auto rhs = power(invert(one_minus_t), chi);

  VerificationReport report;
  report.identity = "lemma1";
  report.params["N"] = n;
  report.params["gB"] = group_json(*x.gB());
  report.params["size"] = x.size();
  report.params["basis"] = basis_json(*ring);
  report.params["exponent"] = chi.to_string();

  report.degrees = run_degrees(n, opts.parallel, [&](int j) {
    const auto start = Clock::now();
    const auto lhs = ring->class_of(symmetric_power(x, j, budget));
    DegreeResult d;
    d.n = j;
    d.lhs = lhs.to_string();
    d.rhs = rhs[j].to_string();
    d.equal = lhs == rhs[j];
    d.ms = elapsed_ms(start);
    return d;
  });
  return report;
}

VerificationReport verify_axioms(AxiomRing which, const GroupPtr& g, int trials, int n, std::uint64_t seed,
                                 const HarnessOptions& opts) {
  require(trials >= 1, "verify axioms requires at least one trial");
  require(n >= 1, "verify axioms requires N >= 1");
  std::mt19937 rng(static_cast<std::mt19937::result_type>(seed));
  VerificationReport report;
  report.identity = "axioms";
  std::vector<Law> laws;
  switch (which) {
    case AxiomRing::integer:
      report.params["ring"] = "Z";
      laws = axiom_suite(IntegerGen{}, trials, n, rng);
      break;
    case AxiomRing::burnside: {
      require(g != nullptr, "verify axioms over A(G) needs a group");
      auto ring = BurnsideRing::create(g, opts.budget, opts.store);
      report.params["ring"] = "A(" + g->label() + ")";
      report.params["basis"] = basis_json(*ring);
      laws = axiom_suite(BurnsideGen{BurnsideLambda::create(ring)}, trials, n, rng);
      break;
    }
    case AxiomRing::lext: {
      require(g != nullptr, "verify axioms over A(G)[L^(1/2)] needs a group");
      auto ring = BurnsideRing::create(g, opts.budget, opts.store);
      report.params["ring"] = "A(" + g->label() + ")[L^(±1/2)]";
      report.params["basis"] = basis_json(*ring);
      laws = axiom_suite(LExtGen{LExtLambda::create(ring)}, trials, n, rng);
      break;
    }
  }
  report.params["trials"] = trials;
  report.params["N"] = n;
  report.params["seed"] = seed;
  for (std::size_t i = 0; i < laws.size(); ++i) report.degrees.push_back(law_result(static_cast<int>(i), laws[i]));
  return report;
}

VerificationReport verify_props12(const GroupPtr& g, int trials, int n, std::uint64_t seed, const HarnessOptions& opts) {
  require(g != nullptr, "verify props12 needs a group");
  require(trials >= 1, "verify props12 requires at least one trial");
  require(n >= 1, "verify props12 requires N >= 1");
  std::mt19937 rng(static_cast<std::mt19937::result_type>(seed));
  const auto ring = BurnsideRing::create(g, opts.budget, opts.store);
  const LExtGen gen{LExtLambda::create(ring)};
  const auto& L = gen.ring;
  const auto lam = BurnsideLambda::create(ring);

  std::vector<Law> laws{{"Proposition 1: (A(L^s t))^m = (A(t))^m at t -> L^s t, s in {1/2, 1, 2}"},
                        {"Proposition 2: zeta of L·b = zeta of b at t -> L t"},
                        {"L -> 1 commutes with power"},
                        {"Theorem 2 right hand side at d = 0 specializes to Theorem 1"},
                        {"Theorem 2 right hand side with zero weights equals d = 0"}};
  std::uniform_int_distribution<int> half(-2, 3), order(1, 2), weight(-2, 4);
  for (int t = 0; t < trials; ++t) {
    const auto a = random_series(gen, rng, n);
    const auto m = gen.element(rng);
    const auto am = power_L(a, m);
    tally(laws[0], [&] {
      for (auto s : {Rational(1, 2), Rational(1), Rational(2)}) {
        const auto ls = L->L(s);
        if (!(power_L(substitute(a, ls, 1), m) == substitute(am, ls, 1))) return false;
      }
      return true;
    });
    tally(laws[1], [&] {
      const Rational q(half(rng), 2);
      for (std::size_t i = 0; i < ring->rank(); ++i)
        if (!(zeta_L(L, q + Rational(1), i, n) == substitute(zeta_L(L, q, i, n), L->L(1), 1))) return false;
      return true;
    });
    tally(laws[2], [&] { return specialize(lam, am) == power(specialize(lam, a), m.specialize()); });
    const int k = order(rng);
    std::vector<Rational> w;
    for (int i = 0; i < k; ++i) w.emplace_back(weight(rng), 2);
    const auto d0 = rhs_theorem2(L, m, k, 0, w, n);
    tally(laws[3], [&] { return specialize(lam, d0) == rhs_theorem1(lam, m.specialize(), k, n); });
    tally(laws[4], [&] {
      const std::vector<Rational> zero(static_cast<std::size_t>(k), Rational(0));
      return rhs_theorem2(L, m, k, 2 * order(rng), zero, n) == d0;
    });
  }

  VerificationReport report;
  report.identity = "props12";
  report.params["ring"] = "A(" + g->label() + ")[L^(±1/2)]";
  report.params["basis"] = basis_json(*ring);
  report.params["trials"] = trials;
  report.params["N"] = n;
  report.params["seed"] = seed;
  for (std::size_t i = 0; i < laws.size(); ++i) report.degrees.push_back(law_result(static_cast<int>(i), laws[i]));
  return report;
}

}  // namespace equichar
