#include "chev/unipotent.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace chev {

RootOrder RootOrder::canonical(const RootSystem& rs) {
  std::vector<RootIndex> seq(rs.num_positive());
  std::iota(seq.begin(), seq.end(), 0);
  return from_sequence(std::move(seq));
}

RootOrder RootOrder::from_sequence(std::vector<RootIndex> sequence) {
  RootOrder order;
  order.position_.assign(sequence.size(), -1);
  for (std::size_t p = 0; p < sequence.size(); ++p) {
    const RootIndex r = sequence[p];
    if (r < 0 || r >= static_cast<RootIndex>(sequence.size()) || order.position_[r] != -1)
      throw std::invalid_argument("root order must be a permutation of the positive roots");
    order.position_[r] = static_cast<int>(p);
  }
  order.roots_ = std::move(sequence);
  return order;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

UnipotentWord<Fq> parse_word(const RootSystem& rs, const Field& field, std::string_view text) {
  UnipotentWord<Fq> word;
  text = trim(text);
  if (text.empty() || text == "1") return word;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t star = text.find('*', pos);
    if (star == std::string_view::npos) star = text.size();
    std::string_view factor = trim(text.substr(pos, star - pos));
    const auto open = factor.find('(');
    if (factor.size() < 4 || factor[0] != 'x' || open == std::string_view::npos || factor.back() != ')')
      throw std::invalid_argument("bad factor '" + std::string(factor) + "', expected x<root>(<coeff>)");
    const std::string index_text(trim(factor.substr(1, open - 1)));
    const std::string coeff_text(trim(factor.substr(open + 1, factor.size() - open - 2)));
    if (index_text.empty() || !std::all_of(index_text.begin(), index_text.end(), ::isdigit))
      throw std::invalid_argument("bad root index in '" + std::string(factor) + "'");
    const long idx = std::stol(index_text);
    if (idx < 1 || idx > rs.num_positive())
      throw std::invalid_argument("root index " + index_text + " out of range 1.." +
                                  std::to_string(rs.num_positive()));
    word.push_back({static_cast<RootIndex>(idx - 1), field.parse(coeff_text)});
    pos = star + 1;
  }
  return word;
}

std::string format_word(const Field& field, const UnipotentWord<Fq>& word) {
  if (word.empty()) return "1";
  std::string out;
  for (const auto& f : word) {
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(f.root + 1) + '(' + field.to_string(f.coeff) + ')';
  }
  return out;
}

std::string format_word(const UnipotentWord<Polynomial>& word) {
  if (word.empty()) return "1";
  std::string out;
  for (const auto& f : word) {
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(f.root + 1) + '(' + f.coeff.to_string() + ')';
  }
  return out;
}

std::string format_nf(const Field& field, const NormalForm<Fq>& nf, const RootOrder& order) {
  UnipotentWord<Fq> word;
  for (int p = 0; p < order.size(); ++p) {
    const RootIndex r = order.at(p);
    if (nf.coeff[r].v != 0) word.push_back({r, nf.coeff[r]});
  }
  return format_word(field, word);
}

}  // namespace chev
