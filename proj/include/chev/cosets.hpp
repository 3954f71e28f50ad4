#pragma once

#include <functional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "chev/rootsys.hpp"
#include "chev/unipotent.hpp"

namespace chev {

using BigInt = boost::multiprecision::cpp_int;

// The q^{l(w)} cosets P_J wdot u, u = prod x_r(y_r) over the inversion roots of w.
struct CosetFamily {
  WeylElement w;
  // Positive roots with w(r) > 0 first, then the inversion roots, each part
  // in canonical order.
  RootOrder order;
  // Number of roots with w(r) > 0; order.at(l..N-1) are the inversion roots.
  int l = 0;

  int num_indeterminates() const { return order.size() - l; }
  std::span<const RootIndex> inversion_roots() const {
    return std::span<const RootIndex>(order.sequence()).subspan(l);
  }
};

CosetFamily make_coset_family(const RootSystem& rs, const WeylElement& w);

void coset_families(const RootSystem& rs, std::span<const int> J,
                    const std::function<void(const CosetFamily&)>& visit);

// [G(q) : P_J(q)] = P_W(q) / P_{W_J}(q), with Poincare polynomials obtained
// from the exponents (read off the root height distribution).
BigInt parabolic_index(const RootSystem& rs, std::span<const int> J, std::uint64_t q);

// Coefficients of sum_{w in W_J} t^{l(w)}; J = all simple roots gives W.
std::vector<BigInt> poincare_polynomial(const RootSystem& rs, std::span<const int> J);

// Parses "1,3,4" (1-based simple roots), "" and the named subsets
// "d4-standard" (E8 only: {2,3,4,5}). Result is 0-based and sorted.
std::vector<int> parse_J(const RootSystem& rs, std::string_view text);

}  // namespace chev
