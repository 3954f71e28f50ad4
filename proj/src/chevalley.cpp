#include "chev/chevalley.hpp"

#include <sstream>
#include <stdexcept>

namespace chev {

ExtraspecialSigns ExtraspecialSigns::all_plus(const RootSystem& rs) {
  ExtraspecialSigns s(rs);
  for (RootIndex r = rs.rank(); r < rs.num_positive(); ++r) s.signs_[r] = 1;
  return s;
}

void ExtraspecialSigns::set(RootIndex r, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("extraspecial sign must be +1 or -1");
  signs_.at(r) = sign;
}

RootIndex ExtraspecialSigns::first_missing(const RootSystem& rs) const {
  for (RootIndex r = rs.rank(); r < rs.num_positive(); ++r)
    if (signs_[r] == 0) return r;
  return -1;
}

ExtraspecialSigns ExtraspecialSigns::parse(const RootSystem& rs, std::string_view text) {
  ExtraspecialSigns out(rs);
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    line = line.substr(first);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    auto fail = [&](const std::string& why) {
      return std::invalid_argument("sign table line " + std::to_string(lineno) + ": " + why);
    };
    if (line.rfind("type", 0) == 0) {
      std::string label = line.substr(4);
      label.erase(0, label.find_first_not_of(' '));
      if (label != rs.label()) throw fail("table is for type " + label + ", not " + rs.label());
      continue;
    }
    if (line.rfind("order", 0) == 0) {
      std::string order = line.substr(5);
      order.erase(0, order.find_first_not_of(' '));
      if (order != "height-lex") throw fail("unsupported root order '" + order + "'");
      continue;
    }
    const auto close = line.find(']');
    if (line[0] != '[' || close == std::string::npos) throw fail("expected '[coefficients] sign'");
    RootIndex r = rs.parse_root(line.substr(0, close + 1));
    std::string sign = line.substr(close + 1);
    sign.erase(0, sign.find_first_not_of(' '));
    if (!rs.is_positive(r) || rs.is_simple(r)) throw fail("root must be positive and non-simple");
    if (sign == "+1" || sign == "1" || sign == "+")
      out.signs_[r] = 1;
    else if (sign == "-1" || sign == "-")
      out.signs_[r] = -1;
    else
      throw fail("bad sign '" + sign + "'");
  }
  return out;
}

std::string ExtraspecialSigns::to_text(const RootSystem& rs) const {
  std::ostringstream out;
  out << "type " << rs.label() << "\norder height-lex\n";
  for (RootIndex r = rs.rank(); r < rs.num_positive(); ++r)
    if (signs_[r] != 0) out << rs.root_to_string(r) << ' ' << (signs_[r] > 0 ? "+1" : "-1") << '\n';
  return out.str();
}

// ---------------------------------------------------------------------------

int StructureConstants::string_below(RootIndex r, RootIndex s) const {
  const RootSystem& rs = *rs_;
  int p = 0;
  RootIndex cur = s;
  while (true) {
    cur = rs.sum(cur, rs.negate(r));
    if (cur < 0) break;
    ++p;
  }
  return p;
}

namespace {

std::int64_t exact_div(std::int64_t num, std::int64_t den) {
  if (den == 0 || num % den != 0) throw std::logic_error("structure constant is not integral");
  return num / den;
}

}  // namespace

std::shared_ptr<const StructureConstants> StructureConstants::compute(const RootSystem& rs,
                                                                       const ExtraspecialSigns& signs) {
  if (RootIndex missing = signs.first_missing(rs); missing >= 0)
    throw std::invalid_argument("sign table has no entry for root " + rs.root_to_string(missing));

  auto sc = std::shared_ptr<StructureConstants>(new StructureConstants(rs, signs));
  const int N = rs.num_positive();
  const int R = rs.num_roots();
  std::vector<int> pos(N * N, 0);

  // N for arbitrary roots, from the positive table via N_{-r,-s} = -N_{r,s}
  // and N_{r,s}/(t,t) = N_{s,t}/(r,r) = N_{t,r}/(s,s) when r+s+t = 0.
  auto any = [&](RootIndex r, RootIndex s) -> std::int64_t {
    const RootIndex sum = rs.sum(r, s);
    if (sum < 0) return 0;
    const bool pr = rs.is_positive(r);
    const bool ps = rs.is_positive(s);
    auto table = [&](RootIndex a, RootIndex b) -> std::int64_t {
      const int v = pos[a * N + b];
      if (v == 0) throw std::logic_error("structure constant requested before it was computed");
      return v;
    };
    if (pr && ps) return table(r, s);
    if (!pr && !ps) return -table(rs.negate(r), rs.negate(s));
    const RootIndex t = rs.negate(sum);
    auto same_sign_value = [&](RootIndex a, RootIndex b) -> std::int64_t {
      return rs.is_positive(a) ? table(a, b) : -table(rs.negate(a), rs.negate(b));
    };
    if (rs.is_positive(s) == rs.is_positive(t)) return exact_div(rs.norm(t) * same_sign_value(s, t), rs.norm(r));
    return exact_div(rs.norm(t) * same_sign_value(t, r), rs.norm(s));
  };

  for (RootIndex t = rs.rank(); t < N; ++t) {
    const auto [xi, a] = rs.extraspecial(t);
    const RootIndex zeta = a;
    const int p = sc->string_below(xi, zeta);
    const int value = signs[t] * (p + 1);
    pos[xi * N + zeta] = value;
    pos[zeta * N + xi] = -value;
    for (RootIndex r = 0; r < N; ++r) {
      const RootIndex s = rs.sum(t, rs.negate(r));
      if (s < 0 || !rs.is_positive(s)) continue;
      if ((r == xi && s == zeta) || (r == zeta && s == xi)) continue;
      // Four-root relation for r + s + (-xi) + (-zeta) = 0.
      const RootIndex mxi = rs.negate(xi);
      const RootIndex mzeta = rs.negate(zeta);
      std::int64_t num = 0;
      std::int64_t den = 1;
      auto add_term = [&](std::int64_t prod, std::int64_t norm) {
        if (prod == 0) return;
        num = num * norm + prod * den;
        den *= norm;
      };
      const RootIndex u1 = rs.sum(s, mxi);
      if (u1 >= 0) add_term(any(s, mxi) * any(r, mzeta), rs.norm(u1));
      const RootIndex u2 = rs.sum(r, mxi);
      if (u2 >= 0) add_term(any(mxi, r) * any(s, mzeta), rs.norm(u2));
      pos[r * N + s] = static_cast<int>(exact_div(rs.norm(t) * num, den * value));
    }
  }

  sc->n_.assign(R * R, 0);
  for (RootIndex r = 0; r < R; ++r)
    for (RootIndex s = 0; s < R; ++s) sc->n_[r * R + s] = static_cast<int>(any(r, s));

  // Commutator constants (Carter 5.2.2).
  auto M = [&](RootIndex r, RootIndex s, int i) -> std::int64_t {
    std::int64_t prod = 1;
    std::int64_t fact = 1;
    RootIndex cur = s;
    for (int k = 0; k < i; ++k) {
      prod *= sc->N(r, cur);
      fact *= (k + 1);
      cur = rs.sum(r, cur);
    }
    return exact_div(prod, fact);
  };
  sc->comm_.assign(N * N, {});
  for (RootIndex r1 = 0; r1 < N; ++r1) {
    for (RootIndex r2 = 0; r2 < N; ++r2) {
      if (r1 == r2) continue;
      auto& terms = sc->comm_[r1 * N + r2];
      for (int total = 2; total <= 5; ++total) {
        for (int i = 1; i < total; ++i) {
          const int j = total - i;
          Root v = rs.root(r1);
          for (int c = 0; c < rs.rank(); ++c) v[c] = i * rs.root(r1)[c] + j * rs.root(r2)[c];
          auto idx = rs.find(v);
          if (!idx) continue;
          std::int64_t C = 0;
          if (j == 1)
            C = M(r1, r2, i);
          else if (i == 1)
            C = (j % 2 ? -1 : 1) * M(r2, r1, j);
          else if (i == 3 && j == 2)
            C = exact_div(M(rs.sum(r1, r2), r1, 2), 3);
          else if (i == 2 && j == 3)
            C = exact_div(-2 * M(rs.sum(r2, r1), r2, 2), 3);
          else
            throw std::logic_error("unexpected commutator exponent pair");
          terms.push_back(CommutatorTerm{i, j, *idx, static_cast<int>(C)});
        }
      }
    }
  }
  return sc;
}

int StructureConstants::C(int i, int j, RootIndex r1, RootIndex r2) const {
  for (const auto& t : commutator(r1, r2))
    if (t.i == i && t.j == j) return t.C;
  return 0;
}

// ---------------------------------------------------------------------------

BaseChange BaseChange::compute(const RootSystem& rs, const ExtraspecialSigns& from, const ExtraspecialSigns& to) {
  for (const auto* s : {&from, &to})
    if (RootIndex missing = s->first_missing(rs); missing >= 0)
      throw std::invalid_argument("sign table has no entry for root " + rs.root_to_string(missing));
  BaseChange bc;
  const int N = rs.num_positive();
  bc.lambda_.assign(rs.num_roots(), 1);
  for (RootIndex r = rs.rank(); r < N; ++r) {
    const RootIndex rt = rs.extraspecial(r).rtilde;
    bc.lambda_[r] = bc.lambda_[rt] * from[r] * to[r];
  }
  for (RootIndex r = 0; r < N; ++r) bc.lambda_[r + N] = bc.lambda_[r];
  return bc;
}

BaseChange base_change(const RootSystem& rs, const ExtraspecialSigns& signs, const ExtraspecialSigns& signs2) {
  return BaseChange::compute(rs, signs, signs2);
}

// ---------------------------------------------------------------------------

std::vector<BasisTerm> bracket(const StructureConstants& sc, int a, int b) {
  const RootSystem& rs = sc.root_system();
  const int n = rs.rank();
  const bool ha = a < n;
  const bool hb = b < n;
  if (ha && hb) return {};
  if (ha) {  // [h_a, e_r] = <alpha_a^vee, r> e_r
    const int c = rs.pairing(b - n, a);
    if (c == 0) return {};
    return {{b, c}};
  }
  if (hb) {
    const int c = rs.pairing(a - n, b);
    if (c == 0) return {};
    return {{a, -c}};
  }
  const RootIndex r = a - n;
  const RootIndex s = b - n;
  if (s == rs.negate(r)) {  // [e_r, e_{-r}] = h_r
    std::vector<BasisTerm> out;
    const int nr = rs.norm(r);
    for (int c = 0; c < n; ++c) {
      const int coeff = rs.root(r)[c];
      if (coeff == 0) continue;
      const int num = coeff * rs.gram(c, c);
      if (num % nr != 0) throw std::logic_error("non-integral coroot");
      out.push_back({c, num / nr});
    }
    return out;
  }
  const RootIndex t = rs.sum(r, s);
  if (t < 0) return {};
  return {{n + t, sc.N(r, s)}};
}

AdjointRepresentation::AdjointRepresentation(StructureConstantsPtr sc, FieldPtr field)
    : sc_(std::move(sc)), field_(std::move(field)) {
  const RootSystem& rs = sc_->root_system();
  rank_ = rs.rank();
  dim_ = rank_ + rs.num_roots();
  divided_.resize(rs.num_roots());
  for (RootIndex r = 0; r < rs.num_roots(); ++r) {
    const int er = e_index(r);
    for (int b = 0; b < dim_; ++b) {
      std::vector<std::int64_t> v(dim_, 0);
      v[b] = 1;
      for (int k = 1;; ++k) {
        std::vector<std::int64_t> next(dim_, 0);
        bool nonzero = false;
        for (int c = 0; c < dim_; ++c) {
          if (v[c] == 0) continue;
          for (const auto& term : bracket(*sc_, er, c)) {
            next[term.index] += v[c] * term.coeff;
            nonzero = true;
          }
        }
        if (!nonzero) break;
        // next = (ad e_r)^k (e_b) / (k-1)!; divide by k for the divided power.
        for (auto& x : next) {
          if (x % k != 0) throw std::logic_error("divided power is not integral");
          x /= k;
        }
        if (static_cast<int>(divided_[r].size()) < k) divided_[r].resize(k);
        for (int c = 0; c < dim_; ++c)
          if (next[c] != 0) divided_[r][k - 1].push_back(Entry{c, b, next[c]});
        v = std::move(next);
      }
    }
  }
}

Matrix AdjointRepresentation::x(RootIndex r, Fq a) const {
  const Field& f = *field_;
  Matrix m = Matrix::identity(field_, dim_);
  if (a.v == 0) return m;
  Fq power = f.one();
  for (const auto& entries : divided_[r]) {
    power = f.mul(power, a);
    for (const auto& e : entries) m(e.row, e.col) = f.add(m(e.row, e.col), f.mul(power, f.from_int(e.value)));
  }
  return m;
}

Matrix AdjointRepresentation::n(RootIndex r) const {
  const Field& f = *field_;
  const RootIndex neg = sc_->root_system().negate(r);
  return x(r, f.one()) * x(neg, f.neg(f.one())) * x(r, f.one());
}

Matrix AdjointRepresentation::weyl_representative(const WeylElement& w) const {
  Matrix m = Matrix::identity(field_, dim_);
  for (int a : w.word()) m = m * n(a);
  return m;
}

}  // namespace chev
