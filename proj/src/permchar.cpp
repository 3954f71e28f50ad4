#include "chev/permchar.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <thread>

namespace chev {

SupportSets support_sets(const RootSystem& rs, const UnipotentWord<Fq>& v) {
  std::map<RootIndex, int> occurrences;
  for (const auto& f : v)
    if (f.coeff.v != 0) ++occurrences[f.root];
  SupportSets out;
  for (const auto& [r, n] : occurrences) out.psi_prime.push_back(r);
  for (const auto& [r, n] : occurrences) {
    if (n != 1) continue;
    const bool minimal = std::none_of(out.psi_prime.begin(), out.psi_prime.end(),
                                      [&](RootIndex s) { return s != r && rs.dominance_prec(s, r); });
    if (minimal) out.psi.push_back(r);
  }
  return out;
}

bool prune(const RootSystem& rs, const WeylElement& w, const SupportSets& support) {
  return std::any_of(support.psi.begin(), support.psi.end(), [&](RootIndex r) { return !rs.is_positive(w.act(r)); });
}

PolynomialSystem build_system(const StructureConstants& sc, const FieldPtr& field, const CosetFamily& family,
                              const UnipotentWord<Fq>& v) {
  const RootSystem& rs = sc.root_system();
  PolyRing ring{field};
  Collector<PolyRing> collector(sc, ring, family.order);
  NormalForm<Polynomial> nf = identity_nf(rs, ring);
  PolynomialSystem system{field, {}, {}};
  for (RootIndex r : family.inversion_roots()) {
    nf.coeff[r] = Polynomial::variable(field, root_variable(r));
    system.variables.push_back(root_variable(r));
  }
  for (const auto& f : v) collector.multiply(nf, f.root, Polynomial::constant(field, f.coeff));
  for (RootIndex r : family.inversion_roots())
    system.equations.push_back(Polynomial::variable(field, root_variable(r)) - nf.coeff[r]);
  return system;
}

namespace {

BigInt power(std::uint32_t q, std::size_t e) {
  BigInt out = 1;
  for (std::size_t i = 0; i < e; ++i) out *= q;
  return out;
}

class HeuristicCounter {
 public:
  HeuristicCounter(const Field& field, std::size_t term_budget) : field_(field), budget_(term_budget) {}

  // Solutions in F_q^{num_vars}, where num_vars counts every variable not yet
  // fixed (including ones absent from the equations).
  BigInt count(std::vector<Polynomial> eqs, std::size_t num_vars) const {
    while (true) {
      if (!simplify(eqs)) return 0;
      if (eqs.empty()) return power(field_.q(), num_vars);
      if (!eliminate_one(eqs)) break;
      --num_vars;
    }
    const VarIndex var = branch_variable(eqs);
    BigInt total = 0;
    for (std::uint32_t value = 0; value < field_.q(); ++value) {
      const Fq a{value};
      std::vector<Polynomial> next;
      next.reserve(eqs.size());
      for (const auto& e : eqs) next.push_back(e.substitute(var, a));
      total += count(std::move(next), num_vars - 1);
    }
    return total;
  }

 private:
  // Frobenius-reduces, drops zero equations; false on a nonzero constant.
  static bool simplify(std::vector<Polynomial>& eqs) {
    std::vector<Polynomial> kept;
    kept.reserve(eqs.size());
    for (auto& e : eqs) {
      Polynomial r = e.frobenius_reduce();
      if (r.is_zero()) continue;
      if (r.is_constant()) return false;
      kept.push_back(std::move(r));
    }
    eqs = std::move(kept);
    return true;
  }

  // Solves some equation c*y + g = 0 (y not in g) for y and substitutes.
  bool eliminate_one(std::vector<Polynomial>& eqs) const {
    std::size_t best_eq = 0;
    VarIndex best_var = 0;
    std::size_t best_size = 0;
    bool found = false;
    for (std::size_t i = 0; i < eqs.size(); ++i) {
      if (found && eqs[i].size() >= best_size) continue;
      // per variable: number of terms containing it, and whether all of them are linear
      touched_.clear();
      for (const auto& t : eqs[i].terms()) {
        const bool linear = t.mono.powers().size() == 1 && t.mono.powers()[0].exp == 1;
        for (const auto& p : t.mono.powers()) {
          if (p.var >= terms_with_.size()) {
            terms_with_.resize(p.var + 1, 0);
            all_linear_.resize(p.var + 1, true);
          }
          if (terms_with_[p.var]++ == 0) touched_.push_back(p.var);
          all_linear_[p.var] = all_linear_[p.var] && linear;
        }
      }
      std::sort(touched_.begin(), touched_.end());
      for (VarIndex var : touched_) {
        if (!found || eqs[i].size() < best_size) {
          if (terms_with_[var] == 1 && all_linear_[var]) {
            best_eq = i;
            best_var = var;
            best_size = eqs[i].size();
            found = true;
          }
        }
        terms_with_[var] = 0;
        all_linear_[var] = true;
      }
    }
    if (!found) return false;

    const Polynomial& e = eqs[best_eq];
    Fq c{0};
    std::vector<Term> rest;
    for (const auto& t : e.terms()) {
      if (t.mono.powers().size() == 1 && t.mono.powers()[0].var == best_var)
        c = t.coeff;
      else
        rest.push_back(t);
    }
    const Fq scale = field_.neg(field_.inv(c));
    const Polynomial value = Polynomial::from_terms(e.field(), std::move(rest)).scaled(scale);

    std::vector<Polynomial> next;
    next.reserve(eqs.size() - 1);
    std::size_t terms = 0;
    for (std::size_t i = 0; i < eqs.size(); ++i) {
      if (i == best_eq) continue;
      next.push_back(eqs[i].contains(best_var) ? eqs[i].substitute(best_var, value).frobenius_reduce() : eqs[i]);
      terms += next.back().size();
      if (terms > budget_) return false;
    }
    eqs = std::move(next);
    return true;
  }

  VarIndex branch_variable(const std::vector<Polynomial>& eqs) const {
    std::vector<int> occurrences;
    for (const auto& e : eqs) {
      for (VarIndex v : e.variables()) {
        if (v >= occurrences.size()) occurrences.resize(v + 1, 0);
        ++occurrences[v];
      }
    }
    VarIndex best = 0;
    int best_count = -1;
    for (VarIndex v = 0; v < occurrences.size(); ++v) {
      if (occurrences[v] > best_count) {
        best = v;
        best_count = occurrences[v];
      }
    }
    return best;
  }

  const Field& field_;
  std::size_t budget_;
  mutable std::vector<int> terms_with_;
  mutable std::vector<bool> all_linear_;
  mutable std::vector<VarIndex> touched_;
};

BigInt brute_force(const PolynomialSystem& system) {
  const Field& f = *system.field;
  const auto& vars = system.variables;
  VarIndex max_var = 0;
  for (VarIndex v : vars) max_var = std::max(max_var, v);
  for (const auto& e : system.equations)
    for (VarIndex v : e.variables())
      if (std::find(vars.begin(), vars.end(), v) == vars.end())
        throw std::invalid_argument("equation uses an undeclared variable");
  std::vector<Fq> values(max_var + 1);
  BigInt total = 0;
  while (true) {
    bool ok = true;
    for (const auto& e : system.equations) {
      if (e.evaluate(values).v != 0) {
        ok = false;
        break;
      }
    }
    if (ok) ++total;
    std::size_t i = 0;
    while (i < vars.size() && values[vars[i]].v + 1 == f.q()) values[vars[i++]].v = 0;
    if (i == vars.size()) return total;
    ++values[vars[i]].v;
  }
}

}  // namespace

BigInt count_solutions(const PolynomialSystem& system, const CountOptions& options) {
  if (options.strategy == CountStrategy::kBruteForce) return brute_force(system);
  for (const auto& e : system.equations)
    for (VarIndex v : e.variables())
      if (std::find(system.variables.begin(), system.variables.end(), v) == system.variables.end())
        throw std::invalid_argument("equation uses an undeclared variable");
  return HeuristicCounter(*system.field, options.term_budget).count(system.equations, system.variables.size());
}

namespace {

struct Partial {
  BigInt value;
  std::uint64_t families = 0;
  std::uint64_t unpruned = 0;
  std::vector<FamilyRecord> records;

  void absorb(Partial&& other) {
    value += other.value;
    families += other.families;
    unpruned += other.unpruned;
    std::move(other.records.begin(), other.records.end(), std::back_inserter(records));
  }
};

}  // namespace

PermCharReport perm_char_value(const StructureConstants& sc, const FieldPtr& field, std::span<const int> J,
                               const UnipotentWord<Fq>& v, const PermCharOptions& options) {
  const RootSystem& rs = sc.root_system();
  const RootOrder canonical = RootOrder::canonical(rs);
  const ScalarRing sring{field};
  const auto v_nf = nf_to_word(normal_form(sc, sring, v, canonical, PairStrategy::kCollect), canonical, sring);
  const SupportSets support = support_sets(rs, v_nf);
  const std::uint32_t q = field->q();

  auto process = [&](const WeylElement& w, Partial& acc) {
    ++acc.families;
    if (v_nf.empty()) {
      ++acc.unpruned;
      BigInt c = power(q, w.length());
      if (options.audit) acc.records.push_back({w.word_string(), w.length(), 0, c});
      acc.value += c;
      return;
    }
    if (prune(rs, w, support)) return;
    ++acc.unpruned;
    const auto system = build_system(sc, field, make_coset_family(rs, w), v_nf);
    BigInt c = count_solutions(system, options.count);
    if (options.audit)
      acc.records.push_back({w.word_string(), static_cast<int>(system.variables.size()),
                             static_cast<int>(system.equations.size()), c});
    acc.value += c;
  };

  JReducedEnumerator enumerator(rs, std::vector<int>(J.begin(), J.end()));
  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());

  Partial total;
  if (threads <= 1) {
    enumerator.for_each([&](const WeylElement& w) { process(w, total); });
  } else {
    int depth = 1;
    while (depth < rs.num_positive() &&
           enumerator.split(depth, [](const WeylElement&) {}).size() < 16 * static_cast<std::size_t>(threads))
      ++depth;
    const auto frontier = enumerator.split(depth, [&](const WeylElement& w) { process(w, total); });
    std::vector<Partial> parts(frontier.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
      try {
        for (std::size_t i = next++; i < frontier.size(); i = next++)
          enumerator.for_each_below(frontier[i], [&](const WeylElement& w) { process(w, parts[i]); });
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next = frontier.size();
      }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
    for (auto& p : parts) total.absorb(std::move(p));
  }

  std::stable_sort(total.records.begin(), total.records.end(), [](const FamilyRecord& a, const FamilyRecord& b) {
    const auto la = std::count(a.word.begin(), a.word.end(), 's');
    const auto lb = std::count(b.word.begin(), b.word.end(), 's');
    return la != lb ? la < lb : a.word < b.word;
  });
  return PermCharReport{std::move(total.value), total.families, total.unpruned, std::move(total.records)};
}

}  // namespace chev
