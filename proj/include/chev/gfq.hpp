#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace chev {

// Element of F_q, stored as the integer sum c_i p^i of its coefficient
// vector (c_0 is the constant coefficient, least significant digit).
struct Fq {
  std::uint32_t v = 0;
  constexpr auto operator<=>(const Fq&) const = default;
};

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero in finite field") {}
};

// Largest supported field order.
inline constexpr std::uint32_t kMaxFieldOrder = 1u << 16;

class Field {
 public:
  // F_p^k with the lexicographically least monic irreducible modulus.
  static std::shared_ptr<const Field> make(std::uint32_t p, std::uint32_t k = 1);
  // modulus: coefficients c_0..c_{k-1} of the monic polynomial t^k + ... + c_0.
  static std::shared_ptr<const Field> with_modulus(std::uint32_t p,
                                                   std::vector<std::uint32_t> modulus);
  // Accepts a prime power q.
  static std::shared_ptr<const Field> of_order(std::uint32_t q);

  std::uint32_t p() const { return p_; }
  std::uint32_t k() const { return k_; }
  std::uint32_t q() const { return q_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  Fq zero() const { return Fq{0}; }
  Fq one() const { return Fq{1}; }
  Fq element(std::uint32_t packed) const;
  Fq from_int(std::int64_t n) const;
  Fq generator() const { return Fq{exp_[1]}; }

  Fq add(Fq a, Fq b) const;
  Fq sub(Fq a, Fq b) const { return add(a, neg(b)); }
  Fq neg(Fq a) const;
  Fq mul(Fq a, Fq b) const {
    if (a.v == 0 || b.v == 0) return Fq{0};
    std::uint32_t e = log_[a.v] + log_[b.v];
    if (e >= q_ - 1) e -= q_ - 1;
    return Fq{exp_[e]};
  }
  Fq inv(Fq a) const;
  Fq div(Fq a, Fq b) const { return mul(a, inv(b)); }
  Fq pow(Fq a, std::uint64_t e) const;

  // Multiplicative order of a nonzero element.
  std::uint32_t order(Fq a) const;

  std::vector<Fq> elements() const;
  std::vector<std::uint32_t> digits(Fq a) const;

  std::string to_string(Fq a) const { return std::to_string(a.v); }
  Fq parse(const std::string& text) const;

  bool operator==(const Field& other) const {
    return p_ == other.p_ && k_ == other.k_ && modulus_ == other.modulus_;
  }

 private:
  Field(std::uint32_t p, std::uint32_t k, std::vector<std::uint32_t> modulus);
  Fq poly_mul_mod(Fq a, Fq b) const;

  std::uint32_t p_;
  std::uint32_t k_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> neg_;
};

using FieldPtr = std::shared_ptr<const Field>;

bool is_prime(std::uint32_t n);
// Monic polynomial over F_p given by coefficients c_0..c_{k-1} (leading 1 implied).
bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& monic_low);

}  // namespace chev
