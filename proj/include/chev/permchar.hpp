#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "chev/chevalley.hpp"
#include "chev/cosets.hpp"
#include "chev/mpoly.hpp"
#include "chev/unipotent.hpp"

namespace chev {

// Roots of the factors of v (psi_prime) and the subset psi of roots that
// occur in exactly one factor and have no other root of v below them.
struct SupportSets {
  std::vector<RootIndex> psi_prime;
  std::vector<RootIndex> psi;
};

SupportSets support_sets(const RootSystem& rs, const UnipotentWord<Fq>& v);

// True when some r in psi is an inversion of w; the family then has no fixed coset.
bool prune(const RootSystem& rs, const WeylElement& w, const SupportSets& support);

// Equations y_i - b_i = 0. Variable y_k belongs to the positive root with
// canonical index k (1-based, as in the x-word format).
struct PolynomialSystem {
  FieldPtr field;
  std::vector<VarIndex> variables;
  std::vector<Polynomial> equations;
};

inline VarIndex root_variable(RootIndex r) { return static_cast<VarIndex>(r + 1); }

PolynomialSystem build_system(const StructureConstants& sc, const FieldPtr& field, const CosetFamily& family,
                              const UnipotentWord<Fq>& v);

enum class CountStrategy { kHeuristic, kBruteForce };

struct CountOptions {
  CountStrategy strategy = CountStrategy::kHeuristic;
  // Linear elimination stops once the system would exceed this many terms.
  std::size_t term_budget = 200000;
};

BigInt count_solutions(const PolynomialSystem& system, const CountOptions& options = {});

struct FamilyRecord {
  std::string word;
  int num_vars = 0;
  int num_equations = 0;
  BigInt count;
};

struct PermCharOptions {
  CountOptions count;
  // 0 selects std::thread::hardware_concurrency().
  unsigned threads = 0;
  bool audit = false;
};

struct PermCharReport {
  BigInt value;
  std::uint64_t families = 0;
  std::uint64_t unpruned = 0;
  // One record per unpruned family, sorted by length and then word (audit only).
  std::vector<FamilyRecord> records;
};

// 1_{P_J(q)}^{G(q)}(v): number of cosets P_J x with P_J x v = P_J x.
PermCharReport perm_char_value(const StructureConstants& sc, const FieldPtr& field, std::span<const int> J,
                               const UnipotentWord<Fq>& v, const PermCharOptions& options = {});

}  // namespace chev
