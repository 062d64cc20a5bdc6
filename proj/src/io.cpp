#include "equichar/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

namespace equichar {

namespace {

std::string key_path(const std::string& path, const std::string& key) { return path + "." + key; }
std::string item_path(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

const char* type_name(const Json& j) { return j.type_name(); }

const Json& field(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) throw InputError(path, std::string("expected an object, found ") + type_name(j));
  auto it = j.find(key);
  if (it == j.end()) throw InputError(key_path(path, key), "missing field");
  return *it;
}

const Json* optional_field(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) throw InputError(path, std::string("expected an object, found ") + type_name(j));
  auto it = j.find(key);
  return it == j.end() ? nullptr : &*it;
}

const Json& array(const Json& j, const std::string& path) {
  if (!j.is_array()) throw InputError(path, std::string("expected an array, found ") + type_name(j));
  return j;
}

std::int64_t integer(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) throw InputError(path, std::string("expected an integer, found ") + type_name(j));
  return j.get<std::int64_t>();
}

int small_int(const Json& j, const std::string& path, std::int64_t lo, std::int64_t hi) {
  const auto v = integer(j, path);
  if (v < lo || v > hi)
    throw InputError(path, "value " + std::to_string(v) + " outside [" + std::to_string(lo) + ", " +
                               std::to_string(hi) + "]");
  return static_cast<int>(v);
}

Int big_int(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    const bool ok = !s.empty() && s.find_first_not_of("0123456789", s[0] == '-' ? 1 : 0) == std::string::npos &&
                    s != "-";
    if (!ok) throw InputError(path, "expected an integer string, found \"" + s + "\"");
    return Int(s);
  }
  throw InputError(path, std::string("expected an integer, found ") + type_name(j));
}

// Re-raises library precondition failures with the path of the value that caused them.
template <class F>
auto at_path(const std::string& path, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const InputError&) {
    throw;
  } catch (const UsageError& e) {
    throw InputError(path, e.what());
  } catch (const InvariantViolation& e) {
    throw InputError(path, e.what());
  }
}

std::vector<Perm> parse_action(const Json* j, const GroupPtr& g, std::size_t size, const std::string& path) {
  const std::size_t gens = g->generators().size();
  std::vector<Perm> out;
  if (j == nullptr) {
    Perm id(size);
    for (Index x = 0; x < size; ++x) id[x] = x;
    return std::vector<Perm>(gens, id);
  }
  array(*j, path);
  if (j->size() != gens)
    throw InputError(path, "expected " + std::to_string(gens) + " permutations (one per generator), found " +
                               std::to_string(j->size()));
  for (std::size_t s = 0; s < gens; ++s) {
    const auto p = item_path(path, s);
    const auto& perm = array((*j)[s], p);
    if (perm.size() != size)
      throw InputError(p, "expected a permutation of " + std::to_string(size) + " points, found length " +
                              std::to_string(perm.size()));
    Perm out_perm(size);
    std::vector<char> seen(size, 0);
    for (std::size_t x = 0; x < size; ++x) {
      const auto v = static_cast<Index>(small_int(perm[x], item_path(p, x), 0, static_cast<std::int64_t>(size) - 1));
      if (seen[v]) throw InputError(item_path(p, x), "repeated image " + std::to_string(v));
      seen[v] = 1;
      out_perm[x] = v;
    }
    out.push_back(std::move(out_perm));
  }
  return out;
}

GroupPtr group_or_trivial(const Json& j, const std::string& key, const std::string& path) {
  const auto* g = optional_field(j, key, path);
  return g ? parse_group(*g, key_path(path, key)) : FiniteGroup::trivial();
}

std::vector<Int> coefficient_vector(const Json& j, std::size_t rank, const std::string& path) {
  array(j, path);
  if (j.size() != rank)
    throw InputError(path, "expected " + std::to_string(rank) + " coefficients, found " + std::to_string(j.size()));
  std::vector<Int> c;
  for (std::size_t i = 0; i < j.size(); ++i) c.push_back(big_int(j[i], item_path(path, i)));
  return c;
}

}  // namespace

const Json& json_field(const Json& j, const std::string& key, const std::string& path) { return field(j, key, path); }

Int parse_int_json(const Json& j, const std::string& path) { return big_int(j, path); }

Json load_json_file(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw UsageError(file + ": cannot open input file");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return Json::parse(buf.str());
  } catch (const Json::parse_error& e) {
    throw InputError(file, "malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

GroupSpec parse_group_spec(const Json& j, const std::string& path) {
  if (j.is_string()) {
    if (j.get_ref<const std::string&>() == "trivial") return GroupSpec{};
    throw InputError(path, "unknown group shorthand \"" + j.get<std::string>() + "\"");
  }
  const auto& type_json = field(j, "type", path);
  if (!type_json.is_string()) throw InputError(key_path(path, "type"), "expected a string");
  const auto type = type_json.get<std::string>();
  GroupSpec spec;
  auto order_param = [&](int lo) { return small_int(field(j, "n", path), key_path(path, "n"), lo, 1 << 20); };
  if (type == "trivial") {
    spec.kind = GroupSpec::Kind::trivial;
  } else if (type == "cyclic") {
    spec.kind = GroupSpec::Kind::cyclic;
    spec.n = order_param(1);
  } else if (type == "symmetric") {
    spec.kind = GroupSpec::Kind::symmetric;
    spec.n = order_param(1);
  } else if (type == "dihedral") {
    spec.kind = GroupSpec::Kind::dihedral;
    spec.n = order_param(1);
  } else if (type == "product") {
    spec.kind = GroupSpec::Kind::product;
    const auto p = key_path(path, "factors");
    const auto& f = array(field(j, "factors", path), p);
    for (std::size_t i = 0; i < f.size(); ++i) spec.factors.push_back(parse_group_spec(f[i], item_path(p, i)));
  } else if (type == "perm") {
    spec.kind = GroupSpec::Kind::perm;
    spec.degree = small_int(field(j, "degree", path), key_path(path, "degree"), 1, 65535);
    const auto p = key_path(path, "generators");
    const auto& gens = array(field(j, "generators", path), p);
    for (std::size_t s = 0; s < gens.size(); ++s) {
      const auto& g = array(gens[s], item_path(p, s));
      std::vector<int> perm;
      for (std::size_t x = 0; x < g.size(); ++x)
        perm.push_back(small_int(g[x], item_path(item_path(p, s), x), 0, 65535));
      spec.generators.push_back(std::move(perm));
    }
  } else if (type == "wreath") {
    spec.kind = GroupSpec::Kind::wreath;
    spec.n = order_param(1);
    spec.factors.push_back(parse_group_spec(field(j, "inner", path), key_path(path, "inner")));
  } else {
    throw InputError(key_path(path, "type"), "unknown group type \"" + type + "\"");
  }
  return spec;
}

GroupPtr parse_group(const Json& j, const std::string& path) {
  const auto spec = parse_group_spec(j, path);
  return at_path(path, [&] { return make_group(spec); });
}

BiSet parse_biset(const Json& j, const std::string& path) {
  auto gO = group_or_trivial(j, "gO", path);
  auto gB = group_or_trivial(j, "gB", path);
  if (const auto* kind = optional_field(j, "kind", path)) {
    if (!kind->is_string()) throw InputError(key_path(path, "kind"), "expected a string");
    const auto k = kind->get<std::string>();
    if (k == "regular") return BiSet::regular(gO, gB);
    if (k == "biregular") return BiSet::biregular(gO, gB);
    if (k == "trivial") {
      const auto size = small_int(field(j, "size", path), key_path(path, "size"), 0, 1 << 30);
      return BiSet::trivial_set(gO, gB, static_cast<std::size_t>(size));
    }
    throw InputError(key_path(path, "kind"), "unknown set kind \"" + k + "\"");
  }
  const auto size =
      static_cast<std::size_t>(small_int(field(j, "size", path), key_path(path, "size"), 0, 1 << 30));
  auto ao = parse_action(optional_field(j, "actO", path), gO, size, key_path(path, "actO"));
  auto ab = parse_action(optional_field(j, "actB", path), gB, size, key_path(path, "actB"));
  BiSet x(gO, gB, size, std::move(ao), std::move(ab));
  at_path(path, [&] {
    x.validate();
    return 0;
  });
  return x;
}

CellSpace parse_cellspace(const Json& j, const std::string& path) {
  const auto* cells_json = optional_field(j, "cells", path);
  if (cells_json == nullptr) return CellSpace::from_biset(parse_biset(j, path));
  const auto p = key_path(path, "cells");
  array(*cells_json, p);
  if (cells_json->empty()) {
    auto gO = group_or_trivial(j, "gO", path);
    auto gB = group_or_trivial(j, "gB", path);
    return CellSpace(gO, gB, {});
  }
  std::vector<Cell> cells;
  for (std::size_t i = 0; i < cells_json->size(); ++i) {
    const auto cp = item_path(p, i);
    const auto& c = (*cells_json)[i];
    const int dim = small_int(field(c, "dim", cp), key_path(cp, "dim"), 0, 1 << 20);
    cells.push_back(Cell{dim, parse_biset(field(c, "biset", cp), key_path(cp, "biset"))});
  }
  auto gO = cells.front().fiber.gO();
  auto gB = cells.front().fiber.gB();
  return at_path(path, [&] { return CellSpace(gO, gB, std::move(cells)); });
}

BurnsideElement parse_burnside(const Json& j, const BurnsidePtr& ring, const std::string& path) {
  if (j.is_number_integer() || j.is_string()) return ring->from_int(big_int(j, path));
  if (j.is_object()) {
    const auto p = key_path(path, "coeffs");
    return BurnsideElement(ring, coefficient_vector(field(j, "coeffs", path), ring->rank(), p));
  }
  return BurnsideElement(ring, coefficient_vector(j, ring->rank(), path));
}

Rational parse_rational_json(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) return at_path(path, [&] { return parse_rational(j.get<std::string>()); });
  throw InputError(path, std::string("expected an integer or an \"a/b\" string, found ") + type_name(j));
}

LExtElement parse_lext(const Json& j, const BurnsidePtr& ring, const std::string& path) {
  if (!j.is_array() || j.empty() || !j.front().is_object())
    return LExtElement::monomial(Rational(0), parse_burnside(j, ring, path));
  LExtElement out(ring);
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto p = item_path(path, i);
    const auto* e = optional_field(j[i], "exp", p);
    const Rational q = e ? parse_rational_json(*e, key_path(p, "exp")) : Rational(0);
    out += LExtElement::monomial(q, parse_burnside(j[i], ring, p));
  }
  return out;
}

OrbifoldDatum parse_datum(const Json& j, const LExtLambda& ring, const std::string& path) {
  OrbifoldDatum d;
  d.gO = group_or_trivial(j, "gO", path);
  const auto& gB = ring.burnside()->group();
  if (const auto* b = optional_field(j, "gB", path)) {
    auto g = parse_group(*b, key_path(path, "gB"));
    if (!g->same_as(*gB)) throw InputError(key_path(path, "gB"), "does not match the coefficient ring group");
  }
  d.k = small_int(field(j, "k", path), key_path(path, "k"), 0, 64);
  if (const auto* w = optional_field(j, "weights", path)) {
    const auto p = key_path(path, "weights");
    array(*w, p);
    for (std::size_t i = 0; i < w->size(); ++i) d.weights.push_back(parse_rational_json((*w)[i], item_path(p, i)));
  } else {
    d.weights.assign(static_cast<std::size_t>(d.k), Rational(1));
  }
  if (d.weights.size() != static_cast<std::size_t>(d.k))
    throw InputError(key_path(path, "weights"), "expected " + std::to_string(d.k) + " weights");
  const auto sp = key_path(path, "strata");
  const auto& strata = array(field(j, "strata", path), sp);
  for (std::size_t i = 0; i < strata.size(); ++i) {
    const auto p = item_path(sp, i);
    const auto& s = strata[i];
    const auto tp = key_path(p, "tuple");
    const auto& t = array(field(s, "tuple", p), tp);
    CommutingTuple tuple;
    for (std::size_t e = 0; e < t.size(); ++e)
      tuple.entries.push_back(static_cast<Index>(
          small_int(t[e], item_path(tp, e), 0, static_cast<std::int64_t>(d.gO->order()) - 1)));
    if (tuple.entries.size() != static_cast<std::size_t>(d.k))
      throw InputError(tp, "expected a " + std::to_string(d.k) + "-tuple");
    if (!is_commuting(*d.gO, tuple.entries)) throw InputError(tp, "entries do not commute");
    auto cls = parse_lext(field(s, "class", p), ring.burnside(), key_path(p, "class"));
    const auto* sh = optional_field(s, "shift", p);
    const Rational shift = sh ? parse_rational_json(*sh, key_path(p, "shift")) : Rational(0);
    d.strata.push_back(OrbifoldStratum{std::move(tuple), std::move(cls), shift});
  }
  return d;
}

Json int_json(const Int& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return Json(static_cast<std::int64_t>(x));
  return Json(x.str());
}

Json rational_json(const Rational& q) {
  if (q.denominator() == 1) return Json(q.numerator());
  return Json(to_string(q));
}

Json basis_json(const BurnsideRing& ring) {
  Json out = Json::array();
  for (std::size_t i = 0; i < ring.rank(); ++i) out.push_back(ring.basis_label(i));
  return out;
}

Json coeffs_json(const BurnsideElement& x) {
  Json out = Json::array();
  for (const auto& c : x.coeffs()) out.push_back(int_json(c));
  return out;
}

Json to_json(const BurnsideElement& x) {
  Json out = Json::object();
  out["basis"] = basis_json(x.ring());
  out["coeffs"] = coeffs_json(x);
  return out;
}

namespace {

Json lext_terms(const LExtElement& x) {
  Json out = Json::array();
  for (const auto& [q, b] : x.terms()) {
    Json t = Json::object();
    t["exp"] = rational_json(q);
    t["coeffs"] = coeffs_json(b);
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace

Json to_json(const LExtElement& x) { return lext_terms(x); }

Json to_json(const IntSeries& a) {
  Json out = Json::array();
  for (const auto& c : a.coeffs()) out.push_back(int_json(c));
  return out;
}

Json to_json(const BurnsideSeries& a) {
  Json out = Json::object();
  out["basis"] = basis_json(*a.ring().burnside());
  Json c = Json::array();
  for (const auto& x : a.coeffs()) c.push_back(coeffs_json(x));
  out["coeffs"] = std::move(c);
  return out;
}

Json to_json(const LExtSeries& a) {
  Json out = Json::object();
  out["basis"] = basis_json(*a.ring().burnside());
  Json c = Json::array();
  for (const auto& x : a.coeffs()) c.push_back(lext_terms(x));
  out["coeffs"] = std::move(c);
  return out;
}

void write_file_atomic(const std::string& file, const std::string& text) {
  namespace fs = std::filesystem;
  const fs::path target(file);
  const fs::path tmp = target.string() + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << text;
    out.flush();
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw std::runtime_error("cannot replace " + target.string());
  }
}

}  // namespace equichar
