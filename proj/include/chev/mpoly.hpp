#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "chev/gfq.hpp"

namespace chev {

using VarIndex = std::uint32_t;

struct VarPower {
  VarIndex var;
  std::uint32_t exp;
  bool operator==(const VarPower&) const = default;
};

// Product of variable powers, sorted by variable index, exponents > 0.
class Monomial {
 public:
  Monomial() = default;
  static Monomial variable(VarIndex v, std::uint32_t exp = 1);

  std::span<const VarPower> powers() const { return {powers_.data(), powers_.size()}; }
  std::uint32_t degree() const { return degree_; }
  std::uint32_t exponent(VarIndex v) const;
  bool is_one() const { return powers_.empty(); }

  // exponent_cap == 0 disables reduction; otherwise exponents e >= cap are
  // mapped to ((e - 1) mod (cap - 1)) + 1, i.e. y^q -> y.
  static Monomial product(const Monomial& a, const Monomial& b, std::uint32_t exponent_cap);
  Monomial reduced(std::uint32_t q) const;
  Monomial without(VarIndex v) const;

  bool operator==(const Monomial& other) const { return powers_ == other.powers_; }

 private:
  boost::container::small_vector<VarPower, 6> powers_;
  std::uint32_t degree_ = 0;
};

// Graded lexicographic comparison: higher total degree first, then the
// larger exponent of the smallest variable index. Returns <0, 0, >0.
int grlex_compare(const Monomial& a, const Monomial& b);

struct Term {
  Monomial mono;
  Fq coeff;
};

class MixedFieldError : public std::invalid_argument {
 public:
  MixedFieldError() : std::invalid_argument("polynomials over different fields") {}
};

// Sparse polynomial over F_q in variables y_i. Terms are kept in strictly
// decreasing grlex order with nonzero coefficients, so equal polynomials
// have identical term lists.
class Polynomial {
 public:
  explicit Polynomial(FieldPtr field) : field_(std::move(field)) {}
  static Polynomial constant(FieldPtr field, Fq c);
  static Polynomial variable(FieldPtr field, VarIndex v);
  // Builds a canonical polynomial from arbitrary (possibly repeated/zero) terms.
  static Polynomial from_terms(FieldPtr field, std::vector<Term> terms);

  const FieldPtr& field() const { return field_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  Fq constant_term() const;
  bool contains(VarIndex v) const;
  std::vector<VarIndex> variables() const;
  std::uint32_t degree() const { return terms_.empty() ? 0 : terms_.front().mono.degree(); }

  Polynomial operator+(const Polynomial& g) const;
  Polynomial operator-(const Polynomial& g) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& g) const;
  Polynomial scaled(Fq c) const;
  // Product followed by y^q -> y on every exponent.
  Polynomial mul_reduced(const Polynomial& g) const;
  Polynomial pow_reduced(unsigned e) const;

  Polynomial& operator+=(const Polynomial& g) { return *this = *this + g; }

  // Replaces var by g. Throws std::invalid_argument when g contains var.
  Polynomial substitute(VarIndex var, const Polynomial& g) const;
  Polynomial substitute(VarIndex var, Fq value) const;
  // y^e -> y^(((e-1) mod (q-1)) + 1) for every e >= q.
  Polynomial frobenius_reduce() const;

  // values[v] is the value of y_v.
  Fq evaluate(std::span<const Fq> values) const;

  bool operator==(const Polynomial& g) const;

  // "2*y5^2*y7 + y6 + 1"; coefficients printed as packed integers in [0, q).
  std::string to_string() const;
  static Polynomial parse(FieldPtr field, std::string_view text);

 private:
  void check_field(const Polynomial& g) const;
  static Polynomial multiply(const Polynomial& f, const Polynomial& g, std::uint32_t cap);

  FieldPtr field_;
  std::vector<Term> terms_;
};

Polynomial poly_substitute(const Polynomial& f, VarIndex var, const Polynomial& g);
Polynomial poly_frobenius_reduce(const Polynomial& f);

}  // namespace chev
