#include "chev/oracle.hpp"

#include <algorithm>
#include <string>

namespace chev {

ParabolicSubalgebra::ParabolicSubalgebra(const AdjointRepresentation& ad, std::span<const int> J)
    : space_(ad.field(), ad.dim()) {
  const RootSystem& rs = ad.constants().root_system();
  for (int a = 0; a < rs.rank(); ++a) basis_.push_back(ad.h_index(a));
  for (RootIndex r = 0; r < rs.num_positive(); ++r) basis_.push_back(ad.e_index(r));
  for (RootIndex r : rs.positive_subsystem(J)) basis_.push_back(ad.e_index(rs.negate(r)));
  for (int i : basis_) {
    std::vector<Fq> v(ad.dim(), Fq{0});
    v[i] = Fq{1};
    space_.add(std::move(v));
  }
}

bool parabolic_membership(const Matrix& g, const ParabolicSubalgebra& pj) {
  for (int i : pj.basis())
    if (!pj.space().contains(g.column(i))) return false;
  return true;
}

Matrix word_matrix(const AdjointRepresentation& ad, const UnipotentWord<Fq>& word) {
  Matrix m = Matrix::identity(ad.field(), ad.dim());
  for (const auto& f : word) m = m * ad.x(f.root, f.coeff);
  return m;
}

BigInt perm_char_value_matrix(const AdjointRepresentation& ad, std::span<const int> J, const UnipotentWord<Fq>& v,
                              std::uint64_t index_limit) {
  const RootSystem& rs = ad.constants().root_system();
  const Field& field = *ad.field();
  const BigInt index = parabolic_index(rs, J, field.q());
  if (index > index_limit)
    throw FeasibilityError("coset count " + index.str() + " exceeds the matrix oracle limit " +
                           std::to_string(index_limit) + "; use the symbolic engine (permchar)");

  const ParabolicSubalgebra pj(ad, J);
  const Matrix vm = word_matrix(ad, v);
  BigInt fixed = 0;
  enumerate_J_reduced(rs, J, [&](const WeylElement& w) {
    const Matrix wdot = ad.weyl_representative(w);
    const auto inv = w.inversions(rs);
    std::vector<std::uint32_t> a(inv.size(), 0);
    while (true) {
      Matrix x = wdot;
      for (std::size_t k = 0; k < inv.size(); ++k) x = x * ad.x(inv[k], Fq{a[k]});
      if (parabolic_membership(x * vm * x.inverse(), pj)) ++fixed;
      std::size_t k = 0;
      while (k < a.size() && a[k] + 1 == field.q()) a[k++] = 0;
      if (k == a.size()) break;
      ++a[k];
    }
  });
  return fixed;
}

}  // namespace chev
