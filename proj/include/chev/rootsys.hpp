#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace chev {

using RootIndex = int;
using Root = std::vector<int>;

// Crystallographic root system of type A-G with Bourbaki numbering of the
// simple roots.
//
// Root indices: 0..N-1 are the positive roots sorted by height, ties broken
// by descending lexicographic order of the coefficient vectors (so the
// simple roots occupy 0..rank-1 in Bourbaki order). Index N+i holds -root(i).
class RootSystem {
 public:
  // "A2", "B3", "E8", "G2", ... Throws std::invalid_argument.
  static RootSystem build(std::string_view type_label);

  const std::string& label() const { return label_; }
  char series() const { return label_[0]; }
  int rank() const { return rank_; }
  int num_positive() const { return num_positive_; }
  int num_roots() const { return 2 * num_positive_; }

  const Root& root(RootIndex i) const { return roots_[i]; }
  int height(RootIndex i) const { return heights_[i]; }
  bool is_positive(RootIndex i) const { return i < num_positive_; }
  bool is_simple(RootIndex i) const { return i < rank_; }
  RootIndex negate(RootIndex i) const { return i < num_positive_ ? i + num_positive_ : i - num_positive_; }
  std::optional<RootIndex> find(std::span<const int> coeffs) const;

  // Index of r_i + r_j, or -1 when the sum is not a root.
  RootIndex sum(RootIndex i, RootIndex j) const { return sum_[i * num_roots() + j]; }

  // Symmetric bilinear form (r_i, r_j); shortest roots have squared length 2.
  int inner(RootIndex i, RootIndex j) const;
  // <r_i, r_j^vee> = 2 (r_i, r_j) / (r_j, r_j).
  int pairing(RootIndex i, RootIndex j) const { return 2 * inner(i, j) / inner(j, j); }
  int norm(RootIndex i) const { return inner(i, i); }
  int gram(int a, int b) const { return gram_[a * rank_ + b]; }
  // A_{ab} = <alpha_a^vee, alpha_b>.
  int cartan(int a, int b) const { return 2 * gram(a, b) / gram(a, a); }

  // r_i < r_j: r_j - r_i is a non-zero non-negative combination of simple roots.
  bool dominance_prec(RootIndex i, RootIndex j) const;

  // Permutation of root indices induced by the simple reflection s_a.
  const std::vector<RootIndex>& reflection(int a) const { return reflections_[a]; }

  // Extraspecial decomposition r = rtilde + alpha_a with a maximal; only for
  // non-simple positive roots.
  struct Extraspecial {
    RootIndex rtilde;
    int simple;
  };
  const Extraspecial& extraspecial(RootIndex r) const { return extraspecial_[r]; }

  std::string root_to_string(RootIndex i) const;
  RootIndex parse_root(std::string_view text) const;

  // |W| and the highest root index.
  std::uint64_t weyl_order() const;
  RootIndex highest_root() const { return num_positive_ - 1; }

  // Positive roots in the span of the given simple roots.
  std::vector<RootIndex> positive_subsystem(std::span<const int> simple_subset) const;

 private:
  RootSystem() = default;

  std::string label_;
  int rank_ = 0;
  int num_positive_ = 0;
  std::vector<int> gram_;
  std::vector<Root> roots_;
  std::vector<int> heights_;
  std::map<Root, RootIndex> index_;
  std::vector<RootIndex> sum_;
  std::vector<std::vector<RootIndex>> reflections_;
  std::vector<Extraspecial> extraspecial_;
};

// Weyl group element: permutation of root indices plus one reduced word
// (0-based simple reflection indices). Equality is decided on the permutation.
class WeylElement {
 public:
  static WeylElement identity(const RootSystem& rs);
  // Product s_{word[0]} s_{word[1]} ... ; the word need not be reduced.
  static WeylElement from_word(const RootSystem& rs, std::span<const int> word);

  RootIndex act(RootIndex i) const { return perm_[i]; }
  const std::vector<RootIndex>& perm() const { return perm_; }
  const std::vector<int>& word() const { return word_; }
  int length() const { return static_cast<int>(word_.size()); }

  WeylElement operator*(const WeylElement& other) const;
  WeylElement inverse() const;

  // {r in Phi^+ : w(r) in Phi^-}, in canonical order.
  std::vector<RootIndex> inversions(const RootSystem& rs) const;
  int inversion_count(const RootSystem& rs) const;

  bool operator==(const WeylElement& other) const { return perm_ == other.perm_; }

  // "s3*s2*s4" with 1-based indices; "1" for the identity.
  std::string word_string() const;

 private:
  friend class JReducedEnumerator;
  const RootSystem* rs_ = nullptr;
  std::vector<RootIndex> perm_;
  std::vector<int> word_;
};

WeylElement parse_weyl_word(const RootSystem& rs, std::string_view text);

bool dominance_prec(const RootSystem& rs, RootIndex i, RootIndex j);
RootIndex weyl_act(const RootSystem& rs, const WeylElement& w, RootIndex i);

// w is J-reduced iff l(s_a w) > l(w) for all a in J, i.e. w^{-1}(alpha_a) > 0.
bool is_J_reduced(const RootSystem& rs, const WeylElement& w, std::span<const int> J);

// Depth-first enumeration of the J-reduced elements (minimal representatives
// of the cosets W_J w). Each element is produced exactly once from its parent
// w' = w s, where s is the largest right descent of w. Nothing beyond the
// current search path is kept in memory.
class JReducedEnumerator {
 public:
  using Visitor = std::function<void(const WeylElement&)>;

  JReducedEnumerator(const RootSystem& rs, std::vector<int> J);

  // Visits every J-reduced element.
  void for_each(const Visitor& visit) const;

  // Splits the enumeration: elements of length < depth are handed to
  // `shallow`; each element of length == depth roots an independent subtree
  // that may be enumerated with for_each_below (possibly on another thread).
  std::vector<WeylElement> split(int depth, const Visitor& shallow) const;
  void for_each_below(const WeylElement& root, const Visitor& visit) const;

  // Number of J-reduced elements of each length.
  std::vector<std::uint64_t> length_distribution() const;

  const RootSystem& root_system() const { return *rs_; }
  const std::vector<int>& J() const { return J_; }

 private:
  void descend(WeylElement& w, std::vector<RootIndex>& winv_J, int max_depth, const Visitor& visit,
               std::vector<WeylElement>* frontier) const;

  const RootSystem* rs_;
  std::vector<int> J_;
};

void enumerate_J_reduced(const RootSystem& rs, std::span<const int> J,
                         const JReducedEnumerator::Visitor& visit);

}  // namespace chev
