#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "chev/gfq.hpp"
#include "chev/matrix.hpp"
#include "chev/rootsys.hpp"

namespace chev {

// Sign eps_r of N_{rtilde, alpha_a} for the extraspecial pair of every
// non-simple positive root r. Entries for simple roots are 0.
class ExtraspecialSigns {
 public:
  explicit ExtraspecialSigns(const RootSystem& rs) : signs_(rs.num_positive(), 0) {}
  static ExtraspecialSigns all_plus(const RootSystem& rs);

  // Text format:
  //   # comment
  //   type E8
  //   order height-lex
  //   [0,1,1,1,0,0,0,0] +1
  // one line per non-simple positive root (root as coefficients over the
  // simple roots in Bourbaki numbering). Missing roots are left unset.
  static ExtraspecialSigns parse(const RootSystem& rs, std::string_view text);
  std::string to_text(const RootSystem& rs) const;

  int operator[](RootIndex r) const { return signs_[r]; }
  void set(RootIndex r, int sign);
  // Index of the first non-simple positive root without a sign, or -1.
  RootIndex first_missing(const RootSystem& rs) const;

 private:
  std::vector<int> signs_;
};

// One correction factor x_{i r1 + j r2}(C (-a1)^i a2^j) of the commutator formula.
struct CommutatorTerm {
  int i;
  int j;
  RootIndex root;
  int C;
};

// Structure constants N_{r,s} of the Chevalley basis determined by a set of
// extraspecial signs, plus the constants C_{i j r1 r2} of the group
// commutator formula for positive roots.
class StructureConstants {
 public:
  // Throws std::invalid_argument naming the first root without a sign.
  static std::shared_ptr<const StructureConstants> compute(const RootSystem& rs, const ExtraspecialSigns& signs);

  const RootSystem& root_system() const { return *rs_; }
  const ExtraspecialSigns& signs() const { return signs_; }

  // N_{r,s} for arbitrary roots; 0 when r+s is not a root.
  int N(RootIndex r, RootIndex s) const { return n_[r * rs_->num_roots() + s]; }

  // Terms for x_{r2}(a2) x_{r1}(a1) = x_{r1}(a1) x_{r2}(a2) prod x_{i r1 + j r2}(...),
  // sorted by i + j. Both roots positive and distinct.
  const std::vector<CommutatorTerm>& commutator(RootIndex r1, RootIndex r2) const {
    return comm_[r1 * rs_->num_positive() + r2];
  }
  // C_{i j r1 r2}, or 0 if i r1 + j r2 is not a root.
  int C(int i, int j, RootIndex r1, RootIndex r2) const;

  // Greatest p with s - p r a root.
  int string_below(RootIndex r, RootIndex s) const;

 private:
  StructureConstants(const RootSystem& rs, const ExtraspecialSigns& signs) : rs_(&rs), signs_(signs) {}

  const RootSystem* rs_;
  ExtraspecialSigns signs_;
  std::vector<int> n_;
  std::vector<std::vector<CommutatorTerm>> comm_;
};

using StructureConstantsPtr = std::shared_ptr<const StructureConstants>;

// Sign map lambda with e_r -> lambda_r e'_r between the Chevalley bases of
// two sign tables; x_r(a) -> x'_r(lambda_r a) is a group isomorphism.
class BaseChange {
 public:
  static BaseChange compute(const RootSystem& rs, const ExtraspecialSigns& from, const ExtraspecialSigns& to);
  int operator[](RootIndex r) const { return lambda_[r]; }
  const std::vector<int>& values() const { return lambda_; }

 private:
  std::vector<int> lambda_;
};

BaseChange base_change(const RootSystem& rs, const ExtraspecialSigns& signs, const ExtraspecialSigns& signs2);

// Lie bracket of two Chevalley basis vectors, as a sparse integer combination.
// Basis numbering: 0..rank-1 are h_{alpha_1..alpha_rank}, rank + r is e_r.
struct BasisTerm {
  int index;
  std::int64_t coeff;
};
std::vector<BasisTerm> bracket(const StructureConstants& sc, int a, int b);

// Adjoint representation of the Chevalley group on the Chevalley basis,
// reduced to F_q: x_r(a) = sum_k a^k (ad e_r)^k / k!.
class AdjointRepresentation {
 public:
  AdjointRepresentation(StructureConstantsPtr sc, FieldPtr field);

  int dim() const { return dim_; }
  const FieldPtr& field() const { return field_; }
  const StructureConstants& constants() const { return *sc_; }

  // Any root, any coefficient.
  Matrix x(RootIndex r, Fq a) const;
  // n_r(1) = x_r(1) x_{-r}(-1) x_r(1).
  Matrix n(RootIndex r) const;
  // Product of n_{alpha}(1) along the element's reduced word.
  Matrix weyl_representative(const WeylElement& w) const;

  // Basis index of h_a / e_r.
  int h_index(int a) const { return a; }
  int e_index(RootIndex r) const { return rank_ + r; }

 private:
  StructureConstantsPtr sc_;
  FieldPtr field_;
  int rank_;
  int dim_;
  struct Entry {
    int row;
    int col;
    std::int64_t value;
  };
  // divided_[r][k-1]: nonzero entries of the integer matrix (ad e_r)^k / k!.
  std::vector<std::vector<std::vector<Entry>>> divided_;
};

}  // namespace chev
