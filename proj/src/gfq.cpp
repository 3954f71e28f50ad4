#include "chev/gfq.hpp"

#include <charconv>
#include <sstream>

namespace chev {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

using Coeffs = std::vector<std::uint32_t>;

// Remainder of a by the monic polynomial m (both low-to-high, m includes its leading 1).
Coeffs poly_rem(Coeffs a, const Coeffs& m, std::uint32_t p) {
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const std::uint32_t lead = a.back() % p;
    const std::size_t shift = a.size() - 1 - dm;
    if (lead != 0)
      for (std::size_t i = 0; i <= dm; ++i)
        a[shift + i] = (a[shift + i] + (p - lead) * m[i]) % p;
    a.pop_back();
  }
  return a;
}

bool is_zero_poly(const Coeffs& a) {
  for (auto c : a)
    if (c != 0) return false;
  return true;
}

Coeffs unpack(std::uint32_t packed, std::uint32_t p, std::uint32_t k) {
  Coeffs c(k);
  for (std::uint32_t i = 0; i < k; ++i) {
    c[i] = packed % p;
    packed /= p;
  }
  return c;
}

std::uint32_t pack(const Coeffs& c, std::uint32_t p) {
  std::uint32_t v = 0;
  for (std::size_t i = c.size(); i-- > 0;) v = v * p + c[i];
  return v;
}

std::uint32_t ipow(std::uint32_t b, std::uint32_t e) {
  std::uint32_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& monic_low) {
  const std::uint32_t k = static_cast<std::uint32_t>(monic_low.size());
  if (k <= 1) return true;
  Coeffs m = monic_low;
  m.push_back(1);
  // Trial division by every monic polynomial of degree 1..k/2.
  for (std::uint32_t d = 1; 2 * d <= k; ++d) {
    const std::uint32_t count = ipow(p, d);
    for (std::uint32_t low = 0; low < count; ++low) {
      Coeffs f = unpack(low, p, d);
      f.push_back(1);
      Coeffs a = m;
      const std::size_t df = f.size() - 1;
      while (a.size() > df) {
        const std::uint32_t lead = a.back() % p;
        const std::size_t shift = a.size() - 1 - df;
        if (lead != 0)
          for (std::size_t i = 0; i <= df; ++i)
            a[shift + i] = (a[shift + i] + (p - lead) * f[i]) % p;
        a.pop_back();
      }
      if (is_zero_poly(a)) return false;
    }
  }
  return true;
}

std::shared_ptr<const Field> Field::make(std::uint32_t p, std::uint32_t k) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
  if (k == 0) throw std::invalid_argument("field degree must be positive");
  if (k == 1) return with_modulus(p, {});
  const std::uint32_t count = ipow(p, k);
  for (std::uint32_t low = 0; low < count; ++low) {
    Coeffs c = unpack(low, p, k);
    if (is_irreducible(p, c)) return with_modulus(p, c);
  }
  throw std::logic_error("no irreducible polynomial found");
}

std::shared_ptr<const Field> Field::with_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
  std::uint32_t k = modulus.empty() ? 1 : static_cast<std::uint32_t>(modulus.size());
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) q *= p;
  if (q > kMaxFieldOrder) throw std::invalid_argument("field order " + std::to_string(q) + " exceeds 2^16");
  for (auto& c : modulus) {
    if (c >= p) throw std::invalid_argument("modulus coefficient out of range");
  }
  if (k > 1 && !is_irreducible(p, modulus)) throw std::invalid_argument("modulus is not irreducible");
  return std::shared_ptr<const Field>(new Field(p, k, std::move(modulus)));
}

std::shared_ptr<const Field> Field::of_order(std::uint32_t q) {
  if (q < 2) throw std::invalid_argument("field order must be a prime power >= 2");
  std::uint32_t p = 2;
  while (q % p != 0) ++p;
  std::uint32_t k = 0;
  std::uint32_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++k;
  }
  if (rest != 1) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
  return make(p, k);
}

Field::Field(std::uint32_t p, std::uint32_t k, std::vector<std::uint32_t> modulus)
    : p_(p), k_(k), q_(ipow(p, k)), modulus_(std::move(modulus)) {
  neg_.resize(q_);
  for (std::uint32_t a = 0; a < q_; ++a) {
    Coeffs c = unpack(a, p_, k_);
    for (auto& x : c) x = (p_ - x) % p_;
    neg_[a] = pack(c, p_);
  }
  // Find a primitive element and build exp/log tables.
  exp_.assign(q_, 0);
  log_.assign(q_, 0);
  for (std::uint32_t g = 1; g < q_; ++g) {
    std::uint32_t x = 1;
    std::uint32_t n = 0;
    do {
      x = poly_mul_mod(Fq{x}, Fq{g}).v;
      ++n;
    } while (x != 1);
    if (n != q_ - 1) continue;
    x = 1;
    for (std::uint32_t e = 0; e < q_ - 1; ++e) {
      exp_[e] = x;
      log_[x] = e;
      x = poly_mul_mod(Fq{x}, Fq{g}).v;
    }
    exp_[q_ - 1] = 1;
    return;
  }
  throw std::logic_error("no primitive element");
}

Fq Field::poly_mul_mod(Fq a, Fq b) const {
  if (k_ == 1) return Fq{static_cast<std::uint32_t>((std::uint64_t{a.v} * b.v) % p_)};
  Coeffs x = unpack(a.v, p_, k_);
  Coeffs y = unpack(b.v, p_, k_);
  Coeffs prod(2 * k_ - 1, 0);
  for (std::uint32_t i = 0; i < k_; ++i)
    for (std::uint32_t j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p_;
  Coeffs m = modulus_;
  m.push_back(1);
  Coeffs r = poly_rem(prod, m, p_);
  r.resize(k_, 0);
  return Fq{pack(r, p_)};
}

Fq Field::element(std::uint32_t packed) const {
  if (packed >= q_) throw std::out_of_range("field element " + std::to_string(packed) + " out of range for q=" + std::to_string(q_));
  return Fq{packed};
}

Fq Field::from_int(std::int64_t n) const {
  std::int64_t r = n % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return Fq{static_cast<std::uint32_t>(r)};
}

Fq Field::add(Fq a, Fq b) const {
  if (k_ == 1) {
    std::uint32_t s = a.v + b.v;
    return Fq{s >= p_ ? s - p_ : s};
  }
  if (p_ == 2) return Fq{a.v ^ b.v};
  std::uint32_t r = 0;
  std::uint32_t scale = 1;
  std::uint32_t x = a.v;
  std::uint32_t y = b.v;
  for (std::uint32_t i = 0; i < k_; ++i) {
    r += ((x % p_ + y % p_) % p_) * scale;
    x /= p_;
    y /= p_;
    scale *= p_;
  }
  return Fq{r};
}

Fq Field::neg(Fq a) const { return Fq{neg_[a.v]}; }

Fq Field::inv(Fq a) const {
  if (a.v == 0) throw DivisionByZero();
  std::uint32_t e = log_[a.v];
  return Fq{exp_[e == 0 ? 0 : q_ - 1 - e]};
}

Fq Field::pow(Fq a, std::uint64_t e) const {
  if (e == 0) return one();
  if (a.v == 0) return zero();
  std::uint64_t l = (std::uint64_t{log_[a.v]} * (e % (q_ - 1))) % (q_ - 1);
  return Fq{exp_[l]};
}

std::uint32_t Field::order(Fq a) const {
  if (a.v == 0) throw DivisionByZero();
  std::uint32_t n = 1;
  Fq x = a;
  while (x.v != 1) {
    x = mul(x, a);
    ++n;
  }
  return n;
}

std::vector<Fq> Field::elements() const {
  std::vector<Fq> out(q_);
  for (std::uint32_t i = 0; i < q_; ++i) out[i] = Fq{i};
  return out;
}

std::vector<std::uint32_t> Field::digits(Fq a) const { return unpack(a.v, p_, k_); }

Fq Field::parse(const std::string& text) const {
  std::int64_t value = 0;
  std::size_t start = 0;
  bool negative = false;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
    negative = text[0] == '-';
    start = 1;
  }
  auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || start == text.size())
    throw std::invalid_argument("malformed field element '" + text + "'");
  if (value >= static_cast<std::int64_t>(q_))
    throw std::invalid_argument("field element '" + text + "' out of range for q=" + std::to_string(q_));
  Fq x{static_cast<std::uint32_t>(value)};
  return negative ? neg(x) : x;
}

}  // namespace chev
