#pragma once

#include <concepts>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "chev/chevalley.hpp"
#include "chev/gfq.hpp"
#include "chev/mpoly.hpp"
#include "chev/rootsys.hpp"

namespace chev {

// Coefficient domains for root elements x_r(a).
template <class R>
concept CoefficientRing = requires(const R& ring, const typename R::Elem& a, const typename R::Elem& b) {
  { ring.zero() } -> std::same_as<typename R::Elem>;
  { ring.is_zero(a) } -> std::same_as<bool>;
  { ring.add(a, b) } -> std::same_as<typename R::Elem>;
  { ring.mul(a, b) } -> std::same_as<typename R::Elem>;
  { ring.neg(a) } -> std::same_as<typename R::Elem>;
  { ring.from_int(1) } -> std::same_as<typename R::Elem>;
};

struct ScalarRing {
  using Elem = Fq;
  FieldPtr field;

  Fq zero() const { return Fq{0}; }
  bool is_zero(Fq a) const { return a.v == 0; }
  Fq add(Fq a, Fq b) const { return field->add(a, b); }
  Fq mul(Fq a, Fq b) const { return field->mul(a, b); }
  Fq neg(Fq a) const { return field->neg(a); }
  Fq from_int(std::int64_t n) const { return field->from_int(n); }
};

// Polynomials in the y_i; products are Frobenius-reduced eagerly.
struct PolyRing {
  using Elem = Polynomial;
  FieldPtr field;

  Polynomial zero() const { return Polynomial(field); }
  bool is_zero(const Polynomial& a) const { return a.is_zero(); }
  Polynomial add(const Polynomial& a, const Polynomial& b) const { return a + b; }
  Polynomial mul(const Polynomial& a, const Polynomial& b) const { return a.mul_reduced(b); }
  Polynomial neg(const Polynomial& a) const { return -a; }
  Polynomial from_int(std::int64_t n) const { return Polynomial::constant(field, field->from_int(n)); }
};

template <class E>
struct RootFactor {
  RootIndex root;
  E coeff;
};

template <class E>
using UnipotentWord = std::vector<RootFactor<E>>;

// A total order r_1..r_N of the positive roots.
class RootOrder {
 public:
  static RootOrder canonical(const RootSystem& rs);
  // `sequence` must be a permutation of 0..N-1.
  static RootOrder from_sequence(std::vector<RootIndex> sequence);

  int size() const { return static_cast<int>(roots_.size()); }
  RootIndex at(int position) const { return roots_[position]; }
  int position(RootIndex r) const { return position_[r]; }
  const std::vector<RootIndex>& sequence() const { return roots_; }

 private:
  std::vector<RootIndex> roots_;
  std::vector<int> position_;
};

// x_{r_1}(a_1) ... x_{r_N}(a_N); coefficients are indexed by root index and
// read in the order that produced the normal form.
template <class E>
struct NormalForm {
  std::vector<E> coeff;

  bool operator==(const NormalForm&) const = default;
};

template <CoefficientRing R>
NormalForm<typename R::Elem> identity_nf(const RootSystem& rs, const R& ring) {
  return NormalForm<typename R::Elem>{std::vector<typename R::Elem>(rs.num_positive(), ring.zero())};
}

template <CoefficientRing R>
UnipotentWord<typename R::Elem> nf_to_word(const NormalForm<typename R::Elem>& nf, const RootOrder& order,
                                           const R& ring) {
  UnipotentWord<typename R::Elem> word;
  for (int p = 0; p < order.size(); ++p) {
    const RootIndex r = order.at(p);
    if (!ring.is_zero(nf.coeff[r])) word.push_back({r, nf.coeff[r]});
  }
  return word;
}

template <CoefficientRing R>
typename R::Elem ring_pow(const R& ring, const typename R::Elem& a, int e) {
  typename R::Elem out = ring.from_int(1);
  for (int k = 0; k < e; ++k) out = ring.mul(out, a);
  return out;
}

// Right-hand side of x_{r2}(a2) x_{r1}(a1) = x_{r1}(a1) x_{r2}(a2) prod x_{i r1 + j r2}(C (-a1)^i a2^j).
// Correction factors are sorted by i + j; zero coefficients are kept.
template <CoefficientRing R>
UnipotentWord<typename R::Elem> commutator_expand(const StructureConstants& sc, const R& ring, RootIndex r2,
                                                  const typename R::Elem& a2, RootIndex r1,
                                                  const typename R::Elem& a1) {
  if (r1 == r2) throw std::invalid_argument("commutator_expand needs two different roots");
  UnipotentWord<typename R::Elem> out{{r1, a1}, {r2, a2}};
  const auto minus_a1 = ring.neg(a1);
  for (const auto& t : sc.commutator(r1, r2)) {
    auto c = ring.mul(ring.from_int(t.C), ring.mul(ring_pow(ring, minus_a1, t.i), ring_pow(ring, a2, t.j)));
    out.push_back({t.root, std::move(c)});
  }
  return out;
}

enum class PairStrategy {
  // Commuting swaps and merges first, then the non-commuting pair of lowest height sum.
  kCommutingFirst,
  // Always the leftmost out-of-order pair.
  kLeftmost,
  // Collection: right-multiply factor by factor into a normal form.
  kCollect,
};

// Collection into a normal form with respect to a fixed root order.
template <CoefficientRing R>
class Collector {
 public:
  using Elem = typename R::Elem;

  Collector(const StructureConstants& sc, R ring, const RootOrder& order)
      : sc_(&sc), ring_(std::move(ring)), order_(&order) {}

  const R& ring() const { return ring_; }

  // nf <- nf * x_t(c)
  void multiply(NormalForm<Elem>& nf, RootIndex t, const Elem& c) const {
    if (ring_.is_zero(c)) return;
    const int P = order_->position(t);
    UnipotentWord<Elem> suffix;
    for (int p = P + 1; p < order_->size(); ++p) {
      const RootIndex r = order_->at(p);
      if (ring_.is_zero(nf.coeff[r])) continue;
      suffix.push_back({r, std::move(nf.coeff[r])});
      nf.coeff[r] = ring_.zero();
    }
    if (suffix.empty()) {
      nf.coeff[t] = ring_.add(nf.coeff[t], c);
      return;
    }
    // Move x_t(c) to the left through the suffix; each passage leaves the
    // correction factors right behind the factor it passed.
    std::vector<UnipotentWord<Elem>> corrections(suffix.size());
    const Elem minus_c = ring_.neg(c);
    for (std::size_t k = suffix.size(); k-- > 0;) {
      const auto& s = suffix[k];
      for (const auto& term : sc_->commutator(t, s.root)) {
        Elem coeff = ring_.mul(ring_.from_int(term.C),
                               ring_.mul(ring_pow(ring_, minus_c, term.i), ring_pow(ring_, s.coeff, term.j)));
        if (!ring_.is_zero(coeff)) corrections[k].push_back({term.root, std::move(coeff)});
      }
    }
    nf.coeff[t] = ring_.add(nf.coeff[t], c);
    for (std::size_t k = 0; k < suffix.size(); ++k) {
      multiply(nf, suffix[k].root, suffix[k].coeff);
      for (const auto& f : corrections[k]) multiply(nf, f.root, f.coeff);
    }
  }

  void multiply(NormalForm<Elem>& nf, const UnipotentWord<Elem>& word) const {
    for (const auto& f : word) multiply(nf, f.root, f.coeff);
  }

 private:
  const StructureConstants* sc_;
  R ring_;
  const RootOrder* order_;
};

// Rewrites the word into normal form by adjacent-pair steps (merge equal
// roots, otherwise apply the commutator formula), or by collection.
template <CoefficientRing R>
NormalForm<typename R::Elem> normal_form(const StructureConstants& sc, const R& ring,
                                         UnipotentWord<typename R::Elem> word, const RootOrder& order,
                                         PairStrategy strategy = PairStrategy::kCommutingFirst) {
  using Elem = typename R::Elem;
  const RootSystem& rs = sc.root_system();
  for (const auto& f : word)
    if (!rs.is_positive(f.root)) throw std::invalid_argument("unipotent words use positive roots only");

  if (strategy == PairStrategy::kCollect) {
    NormalForm<Elem> nf = identity_nf(rs, ring);
    Collector<R>(sc, ring, order).multiply(nf, word);
    return nf;
  }

  while (true) {
    std::erase_if(word, [&](const RootFactor<Elem>& f) { return ring.is_zero(f.coeff); });
    int chosen = -1;
    bool chosen_cheap = false;
    int chosen_height = 0;
    for (int i = 0; i + 1 < static_cast<int>(word.size()); ++i) {
      const RootIndex a = word[i].root;
      const RootIndex b = word[i + 1].root;
      if (order.position(b) > order.position(a)) continue;
      if (strategy == PairStrategy::kLeftmost) {
        chosen = i;
        break;
      }
      const bool cheap = a == b || sc.commutator(b, a).empty();
      if (cheap) {
        chosen = i;
        chosen_cheap = true;
        break;
      }
      const int h = rs.height(a) + rs.height(b);
      if (chosen < 0 || (!chosen_cheap && h < chosen_height)) {
        chosen = i;
        chosen_height = h;
      }
    }
    if (chosen < 0) break;
    auto& left = word[chosen];
    auto& right = word[chosen + 1];
    if (left.root == right.root) {
      left.coeff = ring.add(left.coeff, right.coeff);
      word.erase(word.begin() + chosen + 1);
      continue;
    }
    // left = x_{r2}(a2), right = x_{r1}(a1)
    auto replacement = commutator_expand(sc, ring, left.root, left.coeff, right.root, right.coeff);
    word.erase(word.begin() + chosen, word.begin() + chosen + 2);
    word.insert(word.begin() + chosen, replacement.begin(), replacement.end());
  }

  NormalForm<Elem> nf = identity_nf(rs, ring);
  for (auto& f : word) nf.coeff[f.root] = std::move(f.coeff);
  return nf;
}

template <CoefficientRing R>
NormalForm<typename R::Elem> nf_multiply(const StructureConstants& sc, const R& ring,
                                         const NormalForm<typename R::Elem>& u,
                                         const NormalForm<typename R::Elem>& v, const RootOrder& order) {
  NormalForm<typename R::Elem> out = u;
  Collector<R>(sc, ring, order).multiply(out, nf_to_word(v, order, ring));
  return out;
}

template <CoefficientRing R>
NormalForm<typename R::Elem> nf_inverse(const StructureConstants& sc, const R& ring,
                                        const NormalForm<typename R::Elem>& u, const RootOrder& order) {
  auto word = nf_to_word(u, order, ring);
  UnipotentWord<typename R::Elem> inv;
  for (auto it = word.rbegin(); it != word.rend(); ++it) inv.push_back({it->root, ring.neg(it->coeff)});
  return normal_form(sc, ring, std::move(inv), order, PairStrategy::kCollect);
}

// Text form "x12(1)*x33(2)": 1-based canonical root indices, coefficients as
// packed field elements. "1" denotes the empty word.
UnipotentWord<Fq> parse_word(const RootSystem& rs, const Field& field, std::string_view text);
std::string format_word(const Field& field, const UnipotentWord<Fq>& word);
std::string format_word(const UnipotentWord<Polynomial>& word);
std::string format_nf(const Field& field, const NormalForm<Fq>& nf, const RootOrder& order);

}  // namespace chev
