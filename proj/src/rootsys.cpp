#include "chev/rootsys.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace chev {

namespace {

struct TypeData {
  std::string label;
  int rank;
  std::vector<int> gram;
};

TypeData make_type(std::string_view label) {
  if (label.size() < 2) throw std::invalid_argument("unknown root system type '" + std::string(label) + "'");
  const char series = static_cast<char>(std::toupper(static_cast<unsigned char>(label[0])));
  int n = 0;
  auto [ptr, ec] = std::from_chars(label.data() + 1, label.data() + label.size(), n);
  if (ec != std::errc() || ptr != label.data() + label.size())
    throw std::invalid_argument("unknown root system type '" + std::string(label) + "'");

  auto bad_rank = [&] {
    return std::invalid_argument("rank " + std::to_string(n) + " not allowed for type " + std::string(1, series));
  };
  TypeData t{std::string(1, series) + std::to_string(n), n, std::vector<int>(n * n, 0)};
  auto set = [&](int a, int b, int v) {  // 1-based, symmetric
    t.gram[(a - 1) * n + (b - 1)] = v;
    t.gram[(b - 1) * n + (a - 1)] = v;
  };
  switch (series) {
    case 'A':
      if (n < 1) throw bad_rank();
      for (int i = 1; i <= n; ++i) set(i, i, 2);
      for (int i = 1; i < n; ++i) set(i, i + 1, -1);
      break;
    case 'B':
      if (n < 2) throw bad_rank();
      for (int i = 1; i < n; ++i) set(i, i, 4);
      set(n, n, 2);
      for (int i = 1; i < n; ++i) set(i, i + 1, -2);
      break;
    case 'C':
      if (n < 2) throw bad_rank();
      for (int i = 1; i < n; ++i) set(i, i, 2);
      set(n, n, 4);
      for (int i = 1; i < n - 1; ++i) set(i, i + 1, -1);
      set(n - 1, n, -2);
      break;
    case 'D':
      if (n < 4) throw bad_rank();
      for (int i = 1; i <= n; ++i) set(i, i, 2);
      for (int i = 1; i < n - 1; ++i) set(i, i + 1, -1);
      set(n - 2, n, -1);
      break;
    case 'E':
      if (n < 6 || n > 8) throw bad_rank();
      for (int i = 1; i <= n; ++i) set(i, i, 2);
      set(1, 3, -1);
      set(2, 4, -1);
      for (int i = 3; i < n; ++i) set(i, i + 1, -1);
      break;
    case 'F':
      if (n != 4) throw bad_rank();
      set(1, 1, 4);
      set(2, 2, 4);
      set(3, 3, 2);
      set(4, 4, 2);
      set(1, 2, -2);
      set(2, 3, -2);
      set(3, 4, -1);
      break;
    case 'G':
      if (n != 2) throw bad_rank();
      set(1, 1, 2);
      set(2, 2, 6);
      set(1, 2, -3);
      break;
    default:
      throw std::invalid_argument("unknown root system type '" + std::string(label) + "'");
  }
  return t;
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

}  // namespace

RootSystem RootSystem::build(std::string_view type_label) {
  TypeData t = make_type(type_label);
  RootSystem rs;
  rs.label_ = t.label;
  rs.rank_ = t.rank;
  rs.gram_ = t.gram;
  const int n = t.rank;

  auto form = [&](const Root& x, const Root& y) {
    int s = 0;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) s += x[a] * t.gram[a * n + b] * y[b];
    return s;
  };

  // Closure of the simple roots, height by height, via alpha-strings.
  std::vector<Root> positive;
  std::map<Root, int> seen;
  std::vector<Root> layer;
  for (int a = 0; a < n; ++a) {
    Root r(n, 0);
    r[a] = 1;
    layer.push_back(r);
  }
  while (!layer.empty()) {
    for (const auto& r : layer) {
      seen.emplace(r, 0);
      positive.push_back(r);
    }
    std::vector<Root> next;
    for (const auto& r : layer) {
      for (int a = 0; a < n; ++a) {
        Root down = r;
        int p = 0;
        while (true) {
          down[a] -= 1;
          if (!seen.contains(down)) break;
          ++p;
        }
        Root alpha(n, 0);
        alpha[a] = 1;
        if (r == alpha) continue;
        const int pairing = 2 * form(r, alpha) / t.gram[a * n + a];
        if (p - pairing > 0) {
          Root up = r;
          up[a] += 1;
          if (std::find(next.begin(), next.end(), up) == next.end()) next.push_back(up);
        }
      }
    }
    layer = std::move(next);
  }

  auto height_of = [](const Root& r) {
    int h = 0;
    for (int c : r) h += c;
    return h;
  };
  std::sort(positive.begin(), positive.end(), [&](const Root& x, const Root& y) {
    const int hx = height_of(x);
    const int hy = height_of(y);
    if (hx != hy) return hx < hy;
    return x > y;
  });

  const int N = static_cast<int>(positive.size());
  rs.num_positive_ = N;
  rs.roots_.resize(2 * N);
  rs.heights_.resize(2 * N);
  for (int i = 0; i < N; ++i) {
    rs.roots_[i] = positive[i];
    Root neg = positive[i];
    for (auto& c : neg) c = -c;
    rs.roots_[i + N] = neg;
    rs.heights_[i] = height_of(positive[i]);
    rs.heights_[i + N] = -rs.heights_[i];
  }
  for (int i = 0; i < 2 * N; ++i) rs.index_.emplace(rs.roots_[i], i);

  rs.sum_.assign(4 * N * N, -1);
  for (int i = 0; i < 2 * N; ++i) {
    for (int j = 0; j < 2 * N; ++j) {
      Root s = rs.roots_[i];
      for (int a = 0; a < n; ++a) s[a] += rs.roots_[j][a];
      auto it = rs.index_.find(s);
      if (it != rs.index_.end()) rs.sum_[i * 2 * N + j] = it->second;
    }
  }

  rs.reflections_.resize(n);
  for (int a = 0; a < n; ++a) {
    auto& perm = rs.reflections_[a];
    perm.resize(2 * N);
    for (int i = 0; i < 2 * N; ++i) {
      const int c = rs.pairing(i, a);
      Root img = rs.roots_[i];
      img[a] -= c;
      perm[i] = rs.index_.at(img);
    }
  }

  rs.extraspecial_.assign(N, Extraspecial{-1, -1});
  for (int i = n; i < N; ++i) {
    for (int a = n - 1; a >= 0; --a) {
      Root rest = rs.roots_[i];
      rest[a] -= 1;
      auto it = rs.index_.find(rest);
      if (it != rs.index_.end() && it->second < N) {
        rs.extraspecial_[i] = Extraspecial{it->second, a};
        break;
      }
    }
  }
  return rs;
}

std::optional<RootIndex> RootSystem::find(std::span<const int> coeffs) const {
  auto it = index_.find(Root(coeffs.begin(), coeffs.end()));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int RootSystem::inner(RootIndex i, RootIndex j) const {
  const Root& x = roots_[i];
  const Root& y = roots_[j];
  int s = 0;
  for (int a = 0; a < rank_; ++a) {
    if (x[a] == 0) continue;
    for (int b = 0; b < rank_; ++b) s += x[a] * gram_[a * rank_ + b] * y[b];
  }
  return s;
}

bool RootSystem::dominance_prec(RootIndex i, RootIndex j) const {
  if (i == j) return false;
  const Root& x = roots_[i];
  const Root& y = roots_[j];
  for (int a = 0; a < rank_; ++a)
    if (y[a] < x[a]) return false;
  return true;
}

std::string RootSystem::root_to_string(RootIndex i) const {
  std::ostringstream out;
  out << '[';
  for (int a = 0; a < rank_; ++a) out << (a ? "," : "") << roots_[i][a];
  out << ']';
  return out.str();
}

RootIndex RootSystem::parse_root(std::string_view text) const {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == '[' || c == ']' || c == ' '; }), s.end());
  Root coeffs;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc() || ptr != item.data() + item.size())
      throw std::invalid_argument("malformed root '" + std::string(text) + "'");
    coeffs.push_back(v);
  }
  if (static_cast<int>(coeffs.size()) != rank_)
    throw std::invalid_argument("root '" + std::string(text) + "' has wrong length for " + label_);
  auto idx = find(coeffs);
  if (!idx) throw std::invalid_argument("'" + std::string(text) + "' is not a root of " + label_);
  return *idx;
}

std::uint64_t RootSystem::weyl_order() const {
  const int n = rank_;
  switch (series()) {
    case 'A': return factorial(n + 1);
    case 'B':
    case 'C': return (std::uint64_t{1} << n) * factorial(n);
    case 'D': return (std::uint64_t{1} << (n - 1)) * factorial(n);
    case 'E': return n == 6 ? 51840 : n == 7 ? 2903040 : 696729600;
    case 'F': return 1152;
    case 'G': return 12;
  }
  return 0;
}

std::vector<RootIndex> RootSystem::positive_subsystem(std::span<const int> simple_subset) const {
  std::vector<bool> allowed(rank_, false);
  for (int a : simple_subset) allowed.at(a) = true;
  std::vector<RootIndex> out;
  for (int i = 0; i < num_positive_; ++i) {
    bool ok = true;
    for (int a = 0; a < rank_; ++a)
      if (roots_[i][a] != 0 && !allowed[a]) ok = false;
    if (ok) out.push_back(i);
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

// Reduced word from a permutation by repeatedly stripping the largest right descent.
std::vector<int> reduced_word_of(const RootSystem& rs, std::vector<RootIndex> perm) {
  std::vector<int> word;
  while (true) {
    int descent = -1;
    for (int a = rs.rank() - 1; a >= 0; --a) {
      if (!rs.is_positive(perm[a])) {
        descent = a;
        break;
      }
    }
    if (descent < 0) break;
    word.push_back(descent);
    const auto& s = rs.reflection(descent);
    std::vector<RootIndex> next(perm.size());
    for (std::size_t r = 0; r < perm.size(); ++r) next[r] = perm[s[r]];
    perm = std::move(next);
  }
  std::reverse(word.begin(), word.end());
  return word;
}

}  // namespace

WeylElement WeylElement::identity(const RootSystem& rs) {
  WeylElement w;
  w.rs_ = &rs;
  w.perm_.resize(rs.num_roots());
  for (int i = 0; i < rs.num_roots(); ++i) w.perm_[i] = i;
  return w;
}

WeylElement WeylElement::from_word(const RootSystem& rs, std::span<const int> word) {
  WeylElement w = identity(rs);
  for (int a : word) {
    if (a < 0 || a >= rs.rank()) throw std::invalid_argument("simple reflection index out of range");
    const auto& s = rs.reflection(a);
    std::vector<RootIndex> next(w.perm_.size());
    for (std::size_t r = 0; r < next.size(); ++r) next[r] = w.perm_[s[r]];
    w.perm_ = std::move(next);
  }
  w.word_ = reduced_word_of(rs, w.perm_);
  return w;
}

WeylElement WeylElement::operator*(const WeylElement& other) const {
  WeylElement w;
  w.rs_ = rs_;
  w.perm_.resize(perm_.size());
  for (std::size_t r = 0; r < perm_.size(); ++r) w.perm_[r] = perm_[other.perm_[r]];
  w.word_ = reduced_word_of(*rs_, w.perm_);
  return w;
}

WeylElement WeylElement::inverse() const {
  WeylElement w;
  w.rs_ = rs_;
  w.perm_.resize(perm_.size());
  for (std::size_t r = 0; r < perm_.size(); ++r) w.perm_[perm_[r]] = static_cast<RootIndex>(r);
  w.word_.assign(word_.rbegin(), word_.rend());
  return w;
}

std::vector<RootIndex> WeylElement::inversions(const RootSystem& rs) const {
  std::vector<RootIndex> out;
  for (int i = 0; i < rs.num_positive(); ++i)
    if (!rs.is_positive(perm_[i])) out.push_back(i);
  return out;
}

int WeylElement::inversion_count(const RootSystem& rs) const {
  int n = 0;
  for (int i = 0; i < rs.num_positive(); ++i)
    if (!rs.is_positive(perm_[i])) ++n;
  return n;
}

std::string WeylElement::word_string() const {
  if (word_.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < word_.size(); ++i) {
    if (i) out += '*';
    out += 's' + std::to_string(word_[i] + 1);
  }
  return out;
}

WeylElement parse_weyl_word(const RootSystem& rs, std::string_view text) {
  std::vector<int> word;
  std::string s(text);
  s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
  if (s.empty() || s == "1" || s == "e") return WeylElement::identity(rs);
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, '*')) {
    if (item.size() < 2 || item[0] != 's') throw std::invalid_argument("malformed Weyl word '" + std::string(text) + "'");
    int a = 0;
    auto [ptr, ec] = std::from_chars(item.data() + 1, item.data() + item.size(), a);
    if (ec != std::errc() || ptr != item.data() + item.size() || a < 1 || a > rs.rank())
      throw std::invalid_argument("malformed Weyl word '" + std::string(text) + "'");
    word.push_back(a - 1);
  }
  return WeylElement::from_word(rs, word);
}

bool dominance_prec(const RootSystem& rs, RootIndex i, RootIndex j) { return rs.dominance_prec(i, j); }

RootIndex weyl_act(const RootSystem&, const WeylElement& w, RootIndex i) { return w.act(i); }

bool is_J_reduced(const RootSystem& rs, const WeylElement& w, std::span<const int> J) {
  const WeylElement inv = w.inverse();
  for (int a : J)
    if (!rs.is_positive(inv.act(a))) return false;
  return true;
}

// ---------------------------------------------------------------------------

JReducedEnumerator::JReducedEnumerator(const RootSystem& rs, std::vector<int> J) : rs_(&rs), J_(std::move(J)) {
  std::sort(J_.begin(), J_.end());
  J_.erase(std::unique(J_.begin(), J_.end()), J_.end());
  for (int a : J_)
    if (a < 0 || a >= rs.rank()) throw std::invalid_argument("J index " + std::to_string(a + 1) + " out of range");
}

void JReducedEnumerator::descend(WeylElement& w, std::vector<RootIndex>& winv_J, int max_depth,
                                 const Visitor& visit, std::vector<WeylElement>* frontier) const {
  const RootSystem& rs = *rs_;
  const int n = rs.rank();
  const int depth = w.length();
  if (frontier && depth == max_depth) {
    frontier->push_back(w);
    return;
  }
  visit(w);

  WeylElement child;
  std::vector<RootIndex> child_winv(winv_J.size());
  for (int s = 0; s < n; ++s) {
    if (!rs.is_positive(w.perm_[s])) continue;  // l(ws) > l(w)
    const auto& refl = rs.reflection(s);
    bool ok = true;
    // s must be the largest right descent of ws.
    for (int t = s + 1; t < n && ok; ++t)
      if (!rs.is_positive(w.perm_[refl[t]])) ok = false;
    for (std::size_t k = 0; k < winv_J.size() && ok; ++k) {
      child_winv[k] = refl[winv_J[k]];
      if (!rs.is_positive(child_winv[k])) ok = false;
    }
    if (!ok) continue;
    if (child.perm_.size() != w.perm_.size()) child.perm_.resize(w.perm_.size());
    for (std::size_t r = 0; r < w.perm_.size(); ++r) child.perm_[r] = w.perm_[refl[r]];
    child.rs_ = w.rs_;
    child.word_ = w.word_;
    child.word_.push_back(s);
    descend(child, child_winv, max_depth, visit, frontier);
  }
}

void JReducedEnumerator::for_each(const Visitor& visit) const {
  WeylElement e = WeylElement::identity(*rs_);
  std::vector<RootIndex> winv_J(J_.begin(), J_.end());
  descend(e, winv_J, -1, visit, nullptr);
}

std::vector<WeylElement> JReducedEnumerator::split(int depth, const Visitor& shallow) const {
  std::vector<WeylElement> frontier;
  WeylElement e = WeylElement::identity(*rs_);
  std::vector<RootIndex> winv_J(J_.begin(), J_.end());
  descend(e, winv_J, depth, shallow, &frontier);
  return frontier;
}

void JReducedEnumerator::for_each_below(const WeylElement& root, const Visitor& visit) const {
  WeylElement w = root;
  const WeylElement inv = root.inverse();
  std::vector<RootIndex> winv_J;
  for (int a : J_) winv_J.push_back(inv.act(a));
  descend(w, winv_J, -1, visit, nullptr);
}

std::vector<std::uint64_t> JReducedEnumerator::length_distribution() const {
  std::vector<std::uint64_t> counts;
  for_each([&](const WeylElement& w) {
    const auto l = static_cast<std::size_t>(w.length());
    if (counts.size() <= l) counts.resize(l + 1, 0);
    ++counts[l];
  });
  return counts;
}

void enumerate_J_reduced(const RootSystem& rs, std::span<const int> J, const JReducedEnumerator::Visitor& visit) {
  JReducedEnumerator(rs, std::vector<int>(J.begin(), J.end())).for_each(visit);
}

}  // namespace chev
