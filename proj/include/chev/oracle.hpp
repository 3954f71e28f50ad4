#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "chev/chevalley.hpp"
#include "chev/cosets.hpp"
#include "chev/matrix.hpp"
#include "chev/unipotent.hpp"

namespace chev {

// p_J = span{h_a, e_r : r in Phi^+ or r in Phi_J^-} in the adjoint module.
class ParabolicSubalgebra {
 public:
  ParabolicSubalgebra(const AdjointRepresentation& ad, std::span<const int> J);

  const Subspace& space() const { return space_; }
  const std::vector<int>& basis() const { return basis_; }
  int dim() const { return space_.dim(); }

 private:
  Subspace space_;
  std::vector<int> basis_;
};

// g maps p_J into itself, i.e. g lies in P_J (up to the adjoint kernel).
bool parabolic_membership(const Matrix& g, const ParabolicSubalgebra& pj);

class FeasibilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kOracleIndexLimit = 1000000;

// Counts the cosets P_J x (x = wdot prod x_r(a_r)) with x v x^{-1} in P_J.
// Throws FeasibilityError when [G : P_J] exceeds `index_limit`.
BigInt perm_char_value_matrix(const AdjointRepresentation& ad, std::span<const int> J, const UnipotentWord<Fq>& v,
                              std::uint64_t index_limit = kOracleIndexLimit);

Matrix word_matrix(const AdjointRepresentation& ad, const UnipotentWord<Fq>& word);

}  // namespace chev
