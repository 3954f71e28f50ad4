#include "chev/cosets.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace chev {

CosetFamily make_coset_family(const RootSystem& rs, const WeylElement& w) {
  std::vector<RootIndex> seq;
  seq.reserve(rs.num_positive());
  for (RootIndex r = 0; r < rs.num_positive(); ++r)
    if (rs.is_positive(w.act(r))) seq.push_back(r);
  const int l = static_cast<int>(seq.size());
  for (RootIndex r = 0; r < rs.num_positive(); ++r)
    if (!rs.is_positive(w.act(r))) seq.push_back(r);
  return CosetFamily{w, RootOrder::from_sequence(std::move(seq)), l};
}

void coset_families(const RootSystem& rs, std::span<const int> J,
                    const std::function<void(const CosetFamily&)>& visit) {
  enumerate_J_reduced(rs, J, [&](const WeylElement& w) { visit(make_coset_family(rs, w)); });
}

namespace {

std::vector<BigInt> multiply(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
  std::vector<BigInt> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

}  // namespace

std::vector<BigInt> poincare_polynomial(const RootSystem& rs, std::span<const int> J) {
  const std::vector<RootIndex> roots = rs.positive_subsystem(J);
  std::map<int, int> by_height;
  int max_height = 0;
  for (RootIndex r : roots) {
    ++by_height[rs.height(r)];
    max_height = std::max(max_height, rs.height(r));
  }
  // The number of exponents equal to k is n_k - n_{k+1}; each exponent m
  // contributes the factor 1 + t + ... + t^m.
  std::vector<BigInt> poly{1};
  for (int k = 1; k <= max_height; ++k) {
    const int mult = by_height[k] - by_height[k + 1];
    for (int i = 0; i < mult; ++i) poly = multiply(poly, std::vector<BigInt>(k + 1, BigInt(1)));
  }
  return poly;
}

BigInt parabolic_index(const RootSystem& rs, std::span<const int> J, std::uint64_t q) {
  auto eval = [q](const std::vector<BigInt>& p) {
    BigInt v = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * q + *it;
    return v;
  };
  std::vector<int> all(rs.rank());
  std::iota(all.begin(), all.end(), 0);
  return eval(poincare_polynomial(rs, all)) / eval(poincare_polynomial(rs, J));
}

std::vector<int> parse_J(const RootSystem& rs, std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  std::vector<int> J;
  if (s == "d4-standard") {
    if (rs.label() != "E8") throw std::invalid_argument("d4-standard is defined for E8 only");
    return {1, 2, 3, 4};
  }
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t comma = s.find(',', pos);
    if (comma == std::string::npos) comma = s.size();
    const std::string item = s.substr(pos, comma - pos);
    if (item.empty() || !std::all_of(item.begin(), item.end(), ::isdigit))
      throw std::invalid_argument("bad simple root index '" + item + "' in J");
    const int a = std::stoi(item);
    if (a < 1 || a > rs.rank())
      throw std::invalid_argument("simple root index " + item + " out of range 1.." + std::to_string(rs.rank()));
    J.push_back(a - 1);
    pos = comma + 1;
    if (comma + 1 == s.size()) throw std::invalid_argument("trailing comma in J");
  }
  std::sort(J.begin(), J.end());
  J.erase(std::unique(J.begin(), J.end()), J.end());
  return J;
}

}  // namespace chev
