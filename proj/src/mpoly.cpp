#include "chev/mpoly.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <stdexcept>

namespace chev {

namespace {

std::uint32_t reduce_exponent(std::uint32_t e, std::uint32_t cap) {
  if (cap == 0 || e < cap) return e;
  return ((e - 1) % (cap - 1)) + 1;
}

}  // namespace

Monomial Monomial::variable(VarIndex v, std::uint32_t exp) {
  Monomial m;
  if (exp > 0) {
    m.powers_.push_back({v, exp});
    m.degree_ = exp;
  }
  return m;
}

std::uint32_t Monomial::exponent(VarIndex v) const {
  for (const auto& p : powers_)
    if (p.var == v) return p.exp;
  return 0;
}

Monomial Monomial::product(const Monomial& a, const Monomial& b, std::uint32_t cap) {
  Monomial m;
  m.powers_.reserve(a.powers_.size() + b.powers_.size());
  auto i = a.powers_.begin();
  auto j = b.powers_.begin();
  auto push = [&](VarIndex v, std::uint32_t e) {
    e = reduce_exponent(e, cap);
    m.powers_.push_back({v, e});
    m.degree_ += e;
  };
  while (i != a.powers_.end() || j != b.powers_.end()) {
    if (j == b.powers_.end() || (i != a.powers_.end() && i->var < j->var)) {
      push(i->var, i->exp);
      ++i;
    } else if (i == a.powers_.end() || j->var < i->var) {
      push(j->var, j->exp);
      ++j;
    } else {
      push(i->var, i->exp + j->exp);
      ++i;
      ++j;
    }
  }
  return m;
}

Monomial Monomial::reduced(std::uint32_t q) const {
  Monomial m;
  for (const auto& p : powers_) {
    const auto e = reduce_exponent(p.exp, q);
    m.powers_.push_back({p.var, e});
    m.degree_ += e;
  }
  return m;
}

Monomial Monomial::without(VarIndex v) const {
  Monomial m;
  for (const auto& p : powers_) {
    if (p.var == v) continue;
    m.powers_.push_back(p);
    m.degree_ += p.exp;
  }
  return m;
}

int grlex_compare(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
  const auto pa = a.powers();
  const auto pb = b.powers();
  std::size_t i = 0;
  for (; i < pa.size() && i < pb.size(); ++i) {
    if (pa[i].var != pb[i].var) return pa[i].var < pb[i].var ? 1 : -1;
    if (pa[i].exp != pb[i].exp) return pa[i].exp > pb[i].exp ? 1 : -1;
  }
  if (i < pa.size()) return 1;
  if (i < pb.size()) return -1;
  return 0;
}

// ---------------------------------------------------------------------------

Polynomial Polynomial::constant(FieldPtr field, Fq c) {
  Polynomial p(std::move(field));
  if (c.v != 0) p.terms_.push_back({Monomial(), c});
  return p;
}

Polynomial Polynomial::variable(FieldPtr field, VarIndex v) {
  Polynomial p(std::move(field));
  p.terms_.push_back({Monomial::variable(v), Fq{1}});
  return p;
}

Polynomial Polynomial::from_terms(FieldPtr field, std::vector<Term> terms) {
  const Field& f = *field;
  std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) { return grlex_compare(x.mono, y.mono) > 0; });
  Polynomial p(std::move(field));
  p.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff = f.add(p.terms_.back().coeff, t.coeff);
      if (p.terms_.back().coeff.v == 0) p.terms_.pop_back();
    } else if (t.coeff.v != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

void Polynomial::check_field(const Polynomial& g) const {
  if (field_ != g.field_ && !(*field_ == *g.field_)) throw MixedFieldError();
}

Fq Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
  return Fq{0};
}

bool Polynomial::contains(VarIndex v) const {
  for (const auto& t : terms_)
    if (t.mono.exponent(v) != 0) return true;
  return false;
}

std::vector<VarIndex> Polynomial::variables() const {
  std::vector<VarIndex> vars;
  for (const auto& t : terms_)
    for (const auto& p : t.mono.powers()) vars.push_back(p.var);
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

Polynomial Polynomial::operator+(const Polynomial& g) const {
  check_field(g);
  const Field& f = *field_;
  Polynomial out(field_);
  out.terms_.reserve(terms_.size() + g.terms_.size());
  auto i = terms_.begin();
  auto j = g.terms_.begin();
  while (i != terms_.end() && j != g.terms_.end()) {
    const int c = grlex_compare(i->mono, j->mono);
    if (c > 0) {
      out.terms_.push_back(*i++);
    } else if (c < 0) {
      out.terms_.push_back(*j++);
    } else {
      const Fq s = f.add(i->coeff, j->coeff);
      if (s.v != 0) out.terms_.push_back({i->mono, s});
      ++i;
      ++j;
    }
  }
  out.terms_.insert(out.terms_.end(), i, terms_.end());
  out.terms_.insert(out.terms_.end(), j, g.terms_.end());
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& t : out.terms_) t.coeff = field_->neg(t.coeff);
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& g) const { return *this + (-g); }

Polynomial Polynomial::scaled(Fq c) const {
  if (c.v == 0) return Polynomial(field_);
  Polynomial out = *this;
  for (auto& t : out.terms_) t.coeff = field_->mul(t.coeff, c);
  return out;
}

Polynomial Polynomial::multiply(const Polynomial& f, const Polynomial& g, std::uint32_t cap) {
  f.check_field(g);
  const Field& field = *f.field_;
  if (f.is_zero() || g.is_zero()) return Polynomial(f.field_);
  if (f.is_constant() || g.is_constant()) {
    Polynomial r = f.is_constant() ? g.scaled(f.terms_[0].coeff) : f.scaled(g.terms_[0].coeff);
    return cap == 0 ? r : r.frobenius_reduce();
  }
  std::vector<Term> terms;
  terms.reserve(f.terms_.size() * g.terms_.size());
  for (const auto& a : f.terms_)
    for (const auto& b : g.terms_) terms.push_back({Monomial::product(a.mono, b.mono, cap), field.mul(a.coeff, b.coeff)});
  return from_terms(f.field_, std::move(terms));
}

Polynomial Polynomial::operator*(const Polynomial& g) const { return multiply(*this, g, 0); }

Polynomial Polynomial::mul_reduced(const Polynomial& g) const { return multiply(*this, g, field_->q()); }

Polynomial Polynomial::pow_reduced(unsigned e) const {
  Polynomial result = constant(field_, field_->one());
  for (unsigned k = 0; k < e; ++k) result = result.mul_reduced(*this);
  return result;
}

Polynomial Polynomial::substitute(VarIndex var, const Polynomial& g) const {
  check_field(g);
  if (g.contains(var)) throw std::invalid_argument("substitution value contains the substituted variable");
  std::vector<Polynomial> powers{constant(field_, field_->one())};
  std::vector<Term> untouched;
  Polynomial out(field_);
  std::map<std::uint32_t, std::vector<Term>> by_exponent;
  for (const auto& t : terms_) {
    const auto e = t.mono.exponent(var);
    if (e == 0)
      untouched.push_back(t);
    else
      by_exponent[e].push_back({t.mono.without(var), t.coeff});
  }
  out.terms_ = std::move(untouched);  // already canonical
  for (auto& [e, rest] : by_exponent) {
    while (powers.size() <= e) powers.push_back(powers.back() * g);
    out = out + from_terms(field_, std::move(rest)) * powers[e];
  }
  return out;
}

Polynomial Polynomial::substitute(VarIndex var, Fq value) const {
  const Field& f = *field_;
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  bool touched = false;
  for (const auto& t : terms_) {
    const auto e = t.mono.exponent(var);
    if (e == 0) {
      terms.push_back(t);
      continue;
    }
    touched = true;
    const Fq c = f.mul(t.coeff, f.pow(value, e));
    if (c.v != 0) terms.push_back({t.mono.without(var), c});
  }
  if (!touched) return *this;
  return from_terms(field_, std::move(terms));
}

Polynomial Polynomial::frobenius_reduce() const {
  const std::uint32_t q = field_->q();
  bool needed = false;
  for (const auto& t : terms_)
    for (const auto& p : t.mono.powers())
      if (p.exp >= q) needed = true;
  if (!needed) return *this;
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) terms.push_back({t.mono.reduced(q), t.coeff});
  return from_terms(field_, std::move(terms));
}

Fq Polynomial::evaluate(std::span<const Fq> values) const {
  const Field& f = *field_;
  Fq sum{0};
  for (const auto& t : terms_) {
    Fq x = t.coeff;
    for (const auto& p : t.mono.powers()) {
      if (p.var >= values.size()) throw std::out_of_range("no value for y" + std::to_string(p.var));
      x = f.mul(x, f.pow(values[p.var], p.exp));
    }
    sum = f.add(sum, x);
  }
  return sum;
}

bool Polynomial::operator==(const Polynomial& g) const {
  if (terms_.size() != g.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].mono == g.terms_[i].mono) || terms_[i].coeff != g.terms_[i].coeff) return false;
  return true;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += " + ";
    std::string mono;
    for (const auto& p : t.mono.powers()) {
      if (!mono.empty()) mono += '*';
      mono += 'y' + std::to_string(p.var);
      if (p.exp != 1) mono += '^' + std::to_string(p.exp);
    }
    if (mono.empty())
      out += field_->to_string(t.coeff);
    else if (t.coeff.v == 1)
      out += mono;
    else
      out += field_->to_string(t.coeff) + '*' + mono;
  }
  return out;
}

Polynomial Polynomial::parse(FieldPtr field, std::string_view text) {
  const Field& f = *field;
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  auto fail = [&] { return std::invalid_argument("malformed polynomial '" + std::string(text) + "'"); };
  if (s.empty()) throw fail();

  auto read_uint = [&](std::size_t& pos) {
    std::uint32_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data() + pos, s.data() + s.size(), v);
    if (ec != std::errc() || ptr == s.data() + pos) throw fail();
    pos = static_cast<std::size_t>(ptr - s.data());
    return v;
  };

  std::vector<Term> terms;
  std::size_t pos = 0;
  while (pos < s.size()) {
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') {
      negative = s[pos] == '-';
      ++pos;
    } else if (pos != 0) {
      throw fail();
    }
    Fq coeff = f.one();
    Monomial mono;
    while (true) {
      if (pos >= s.size()) throw fail();
      if (s[pos] == 'y') {
        ++pos;
        const VarIndex v = read_uint(pos);
        std::uint32_t e = 1;
        if (pos < s.size() && s[pos] == '^') {
          ++pos;
          e = read_uint(pos);
        }
        mono = Monomial::product(mono, Monomial::variable(v, e), 0);
      } else if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
        const std::uint32_t c = read_uint(pos);
        if (c >= f.q()) throw std::invalid_argument("coefficient " + std::to_string(c) + " out of range for q=" + std::to_string(f.q()));
        coeff = f.mul(coeff, Fq{c});
      } else {
        throw fail();
      }
      if (pos < s.size() && s[pos] == '*') {
        ++pos;
        continue;
      }
      break;
    }
    terms.push_back({mono, negative ? f.neg(coeff) : coeff});
  }
  return from_terms(std::move(field), std::move(terms));
}

Polynomial poly_substitute(const Polynomial& f, VarIndex var, const Polynomial& g) { return f.substitute(var, g); }

Polynomial poly_frobenius_reduce(const Polynomial& f) { return f.frobenius_reduce(); }

}  // namespace chev
