#pragma once

#include <optional>
#include <string>
#include <vector>

#include "equichar/euler.hpp"
#include "equichar/io.hpp"

namespace equichar {

struct DegreeResult {
  int n = 0;
  std::string label;  // empty for series degrees
  std::string lhs;
  std::string rhs;
  bool equal = false;
  double ms = 0;
};

struct VerificationReport {
  std::string identity;
  Json params = Json::object();
  std::vector<DegreeResult> degrees;

  bool pass() const;
};

/// {"identity", "params", "degrees":[{"n","lhs","rhs","equal","ms"}], "pass"}.
Json report_json(const VerificationReport& r, bool timings = true);
std::string report_text(const VerificationReport& r, bool timings = true);

/// Table of marks cache on disk, one JSON file per group keyed by the Cayley digest.
/// Entries are validated on load; a version mismatch evicts the file.
class DiskLatticeStore : public LatticeStore {
public:
  static constexpr int kVersion = 1;

  explicit DiskLatticeStore(std::string dir);
  /// --cache-dir wins, then EQUICHAR_CACHE; nullopt when neither is set.
  static std::optional<std::string> resolve_dir(const std::string& flag);

  const std::string& dir() const { return dir_; }
  std::string path_for(const FiniteGroup& g) const;

  std::optional<LatticeData> load(const FiniteGroup& g) const override;
  void store(const FiniteGroup& g, const LatticeData& data) const override;

private:
  std::string dir_;
};

struct HarnessOptions {
  Budget budget = default_budget();
  bool cross_check = true;
  bool parallel = true;
  const LatticeStore* store = nullptr;
};

/// Sum chi^{(k,G_B)}(X^n; G_O wr S_n, G_B) t^n against the power structure form, n = 0..N.
VerificationReport verify_theorem1(const BiSet& x, int k, int n, const HarnessOptions& opts = {});

/// Sum class_of(S^n X) t^n against (1 - t)^{-chi^G(X)} for a G_B-set X, n = 0..N.
VerificationReport verify_lemma1(const BiSet& x, int n, const HarnessOptions& opts = {});

enum class AxiomRing { integer, burnside, lext };

/// Randomized power structure axioms 1)-4) and finite determinacy. `g` is the
/// Burnside group for the burnside and lext rings (ignored for the integers).
VerificationReport verify_axioms(AxiomRing ring, const GroupPtr& g, int trials, int n, std::uint64_t seed,
                                 const HarnessOptions& opts = {});

/// Propositions 1 and 2, the L -> 1 specialization law and the d = 0 degeneration
/// of the Theorem 2 right hand side, over A(g)[L^{1/2}].
VerificationReport verify_props12(const GroupPtr& g, int trials, int n, std::uint64_t seed,
                                  const HarnessOptions& opts = {});

}  // namespace equichar
