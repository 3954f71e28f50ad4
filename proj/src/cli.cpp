#include "chev/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "chev/cosets.hpp"
#include "chev/oracle.hpp"
#include "chev/permchar.hpp"

#ifndef CHEV_DATA_DIR
#define CHEV_DATA_DIR "data"
#endif

namespace chev::cli {

namespace {

using nlohmann::json;

class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string trim(std::string s) {
  auto blank = [](unsigned char c) { return std::isspace(c); };
  s.erase(s.begin(), std::find_if_not(s.begin(), s.end(), blank));
  s.erase(std::find_if_not(s.rbegin(), s.rend(), blank).base(), s.end());
  return s;
}

struct Config {
  std::string type;
  std::uint32_t q = 0;
  std::uint32_t p = 0;
  std::uint32_t k = 1;
  std::string modulus;
  std::string J;
  std::string signs = "plus";
  std::string elt = "1";
  std::string elements;
  std::string word;
  std::string strategy;
  unsigned threads = 0;
  std::string format = "text";
  bool audit = false;
  bool count = false;
  bool emit_signs = false;
  std::size_t term_budget = CountOptions{}.term_budget;
  std::string data_dir;
  std::uint64_t seed = 1;
};

FieldPtr make_field(const Config& c) {
  if (c.q != 0 && c.p != 0) throw InputError("give either --q or --p/--k, not both");
  std::vector<std::uint32_t> modulus;
  if (!c.modulus.empty()) {
    std::stringstream ss(c.modulus);
    std::string item;
    while (std::getline(ss, item, ',')) {
      item = trim(item);
      if (item.empty() || !std::all_of(item.begin(), item.end(), ::isdigit))
        throw InputError("bad modulus coefficient '" + item + "'");
      modulus.push_back(static_cast<std::uint32_t>(std::stoul(item)));
    }
  }
  if (c.q != 0) {
    auto f = Field::of_order(c.q);
    if (modulus.empty()) return f;
    return Field::with_modulus(f->p(), modulus);
  }
  if (c.p != 0) return modulus.empty() ? Field::make(c.p, c.k) : Field::with_modulus(c.p, modulus);
  throw InputError("a field is required: --q Q or --p P [--k K]");
}

std::filesystem::path data_dir_of(const Config& c) {
  return c.data_dir.empty() ? default_data_dir() : std::filesystem::path(c.data_dir);
}

std::filesystem::path element_file_of(const Config& c) {
  return c.elements.empty() ? data_dir_of(c) / "mizuno-e8-elements.txt" : std::filesystem::path(c.elements);
}

PairStrategy pair_strategy(const std::string& s) {
  if (s.empty() || s == "commuting-first") return PairStrategy::kCommutingFirst;
  if (s == "leftmost") return PairStrategy::kLeftmost;
  if (s == "collect") return PairStrategy::kCollect;
  throw InputError("unknown normal form strategy '" + s + "' (commuting-first, leftmost, collect)");
}

CountStrategy count_strategy(const std::string& s) {
  if (s.empty() || s == "heuristic") return CountStrategy::kHeuristic;
  if (s == "bruteforce") return CountStrategy::kBruteForce;
  throw InputError("unknown counting strategy '" + s + "' (heuristic, bruteforce)");
}

void check_format(const Config& c) {
  if (c.format != "text" && c.format != "json") throw InputError("--format must be text or json");
}

int cmd_roots(const Config& c, std::ostream& out) {
  auto rs = RootSystem::build(c.type);
  if (c.format == "json") {
    json roots = json::array();
    for (RootIndex r = 0; r < rs.num_positive(); ++r)
      roots.push_back({{"index", r + 1}, {"root", rs.root(r)}, {"height", rs.height(r)}});
    out << json{{"type", rs.label()}, {"positive_roots", roots}}.dump(1) << "\n";
    return kOk;
  }
  for (RootIndex r = 0; r < rs.num_positive(); ++r)
    out << r + 1 << " " << rs.root_to_string(r) << " " << rs.height(r) << "\n";
  return kOk;
}

int cmd_constants(const Config& c, std::ostream& out) {
  auto rs = RootSystem::build(c.type);
  const auto signs = load_signs(rs, c.signs, data_dir_of(c));
  if (c.emit_signs) {
    out << signs.to_text(rs);
    return kOk;
  }
  auto sc = StructureConstants::compute(rs, signs);
  const int n = rs.num_positive();
  if (c.format == "json") {
    json N = json::array(), C = json::array();
    for (RootIndex r = 0; r < n; ++r)
      for (RootIndex s = 0; s < n; ++s) {
        if (rs.sum(r, s) >= 0) N.push_back({r + 1, s + 1, sc->N(r, s)});
        if (r != s)
          for (const auto& t : sc->commutator(r, s)) C.push_back({t.i, t.j, r + 1, s + 1, t.C});
      }
    out << json{{"type", rs.label()}, {"N", N}, {"C", C}}.dump() << "\n";
    return kOk;
  }
  for (RootIndex r = 0; r < n; ++r)
    for (RootIndex s = 0; s < n; ++s)
      if (rs.sum(r, s) >= 0) out << "N " << r + 1 << " " << s + 1 << " " << sc->N(r, s) << "\n";
  for (RootIndex r = 0; r < n; ++r)
    for (RootIndex s = 0; s < n; ++s) {
      if (r == s) continue;
      for (const auto& t : sc->commutator(r, s))
        out << "C " << t.i << " " << t.j << " " << r + 1 << " " << s + 1 << " " << t.C << "\n";
    }
  return kOk;
}

int cmd_normalform(const Config& c, std::ostream& out) {
  auto rs = RootSystem::build(c.type);
  auto field = make_field(c);
  auto sc = StructureConstants::compute(rs, load_signs(rs, c.signs, data_dir_of(c)));
  const std::string text = c.word.empty() ? c.elt : c.word;
  auto word = load_element(rs, *field, text, element_file_of(c), c.signs);
  const RootOrder order = RootOrder::canonical(rs);
  auto nf = normal_form(*sc, ScalarRing{field}, word, order, pair_strategy(c.strategy));
  const std::string result = format_nf(*field, nf, order);
  if (c.format == "json") {
    json coeffs = json::array();
    for (const auto& a : nf.coeff) coeffs.push_back(a.v);
    out << json{{"normal_form", result}, {"coefficients", coeffs}}.dump() << "\n";
  } else {
    out << result << "\n";
  }
  return kOk;
}

int cmd_cosets(const Config& c, std::ostream& out) {
  auto rs = RootSystem::build(c.type);
  auto field = make_field(c);
  const auto J = parse_J(rs, c.J);
  BigInt total = 0;
  std::uint64_t families = 0;
  json list = json::array();
  const bool listing = !c.count;
  coset_families(rs, J, [&](const CosetFamily& f) {
    ++families;
    BigInt size = 1;
    for (int i = 0; i < f.num_indeterminates(); ++i) size *= field->q();
    total += size;
    if (!listing) return;
    std::string inv;
    for (RootIndex r : f.inversion_roots()) inv += (inv.empty() ? "" : ",") + std::to_string(r + 1);
    if (c.format == "json")
      list.push_back({{"w", f.w.word_string()}, {"length", f.w.length()}, {"inversions", inv}});
    else
      out << f.w.word_string() << " length " << f.w.length() << " inversions " << (inv.empty() ? "-" : inv) << "\n";
  });
  if (c.format == "json") {
    json doc{{"families", families}, {"cosets", total.str()}};
    if (listing) doc["list"] = list;
    out << doc.dump() << "\n";
  } else if (c.count) {
    out << total << "\n";
  } else {
    out << "families " << families << " cosets " << total << "\n";
  }
  return kOk;
}

int cmd_permchar(const Config& c, std::ostream& out) {
  auto rs = RootSystem::build(c.type);
  auto field = make_field(c);
  auto sc = StructureConstants::compute(rs, load_signs(rs, c.signs, data_dir_of(c)));
  const auto J = parse_J(rs, c.J);
  auto v = load_element(rs, *field, c.elt, element_file_of(c), c.signs);
  PermCharOptions options;
  options.count.strategy = count_strategy(c.strategy);
  options.count.term_budget = c.term_budget;
  options.threads = c.threads;
  options.audit = c.audit;
  auto report = perm_char_value(*sc, field, J, v, options);
  if (c.format == "json") {
    json records = json::array();
    for (const auto& r : report.records)
      records.push_back({{"w", r.word}, {"vars", r.num_vars}, {"equations", r.num_equations}, {"count", r.count.str()}});
    json doc{{"value", report.value.str()}, {"families", report.families}, {"unpruned", report.unpruned}};
    if (c.audit) doc["records"] = records;
    out << doc.dump() << "\n";
    return kOk;
  }
  if (c.audit) {
    for (const auto& r : report.records)
      out << "family " << r.word << " vars " << r.num_vars << " equations " << r.num_equations << " count "
          << r.count << "\n";
    out << "families " << report.families << " unpruned " << report.unpruned << "\n";
  }
  out << report.value << "\n";
  return kOk;
}

int cmd_oracle(const Config& c, std::ostream& out) {
  auto rs = RootSystem::build(c.type);
  auto field = make_field(c);
  auto sc = StructureConstants::compute(rs, load_signs(rs, c.signs, data_dir_of(c)));
  const auto J = parse_J(rs, c.J);
  auto v = load_element(rs, *field, c.elt, element_file_of(c), c.signs);
  AdjointRepresentation ad(sc, field);
  const BigInt value = perm_char_value_matrix(ad, J, v);
  if (c.format == "json")
    out << json{{"value", value.str()}}.dump() << "\n";
  else
    out << value << "\n";
  return kOk;
}

int cmd_selftest(const Config& c, std::ostream& out) {
  std::mt19937_64 gen(c.seed);
  int checks = 0, failures = 0;
  for (const char* label : {"A2", "B2", "G2", "A3", "B3", "C3"}) {
    auto rs = RootSystem::build(label);
    auto sc = StructureConstants::compute(rs, ExtraspecialSigns::all_plus(rs));
    for (std::uint32_t q : {2u, 3u}) {
      if (rs.rank() == 3 && q == 3) continue;
      auto field = Field::make(q);
      AdjointRepresentation ad(sc, field);
      for (int mask = 0; mask < (1 << rs.rank()); ++mask) {
        std::vector<int> J;
        for (int a = 0; a < rs.rank(); ++a)
          if (mask >> a & 1) J.push_back(a);
        for (int trial = 0; trial < 3; ++trial) {
          UnipotentWord<Fq> v;
          for (int k = 0; k <= trial; ++k)
            v.push_back({static_cast<RootIndex>(gen() % rs.num_positive()), Fq{static_cast<std::uint32_t>(gen() % q)}});
          const BigInt symbolic = perm_char_value(*sc, field, J, v, {{}, 1}).value;
          const BigInt matrix = perm_char_value_matrix(ad, J, v);
          ++checks;
          if (symbolic != matrix) {
            ++failures;
            out << "MISMATCH " << label << " q=" << q << " J=" << mask << " v=" << format_word(*field, v) << " symbolic "
                << symbolic << " matrix " << matrix << "\n";
          }
        }
        ++checks;
        if (perm_char_value(*sc, field, J, {}, {{}, 1}).value != parabolic_index(rs, J, q)) {
          ++failures;
          out << "MISMATCH identity value " << label << " q=" << q << " J=" << mask << "\n";
        }
      }
    }
  }
  out << "selftest " << checks << " checks " << failures << " failures\n";
  return failures == 0 ? kOk : kFailure;
}

}  // namespace

std::filesystem::path default_data_dir() {
  if (const char* env = std::getenv("CHEV_DATA_DIR"); env && *env) return env;
  return CHEV_DATA_DIR;
}

ExtraspecialSigns load_signs(const RootSystem& rs, const std::string& spec, const std::filesystem::path& data_dir) {
  if (spec.empty() || spec == "plus") return ExtraspecialSigns::all_plus(rs);
  std::filesystem::path path = spec;
  const bool preset = spec.find('/') == std::string::npos && !std::filesystem::exists(path);
  if (preset) {
    path = data_dir / (spec + ".signs");
    if (!std::filesystem::exists(path))
      throw InputError("sign preset '" + spec + "' needs " + path.string() +
                       ", which is not available (external data; see data/README.txt)");
  }
  auto signs = ExtraspecialSigns::parse(rs, read_file(path));
  if (RootIndex missing = signs.first_missing(rs); missing >= 0)
    throw InputError("sign table " + path.string() + " has no sign for root " + rs.root_to_string(missing));
  return signs;
}

UnipotentWord<Fq> load_element(const RootSystem& rs, const Field& field, const std::string& spec,
                               const std::filesystem::path& element_file, const std::string& signs_spec) {
  if (spec.empty() || spec[0] != '@') return parse_word(rs, field, spec);
  const std::string name = spec.substr(1);
  if (!std::filesystem::exists(element_file)) throw InputError("element file " + element_file.string() + " not found");
  std::istringstream in(read_file(element_file));
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      std::istringstream header(line);
      std::string key, value;
      header >> key >> value;
      if (key == "type" && value != rs.label())
        throw InputError("element file " + element_file.string() + " is for type " + value + ", not " + rs.label());
      if (key == "signs" && value != signs_spec && !(value == "plus" && signs_spec.empty()))
        throw InputError("element file " + element_file.string() + " refers to sign convention '" + value +
                         "'; pass --signs " + value);
      continue;
    }
    if (trim(line.substr(0, eq)) == name) return parse_word(rs, field, trim(line.substr(eq + 1)));
  }
  throw InputError("element '" + name + "' is not listed in " + element_file.string() +
                   " (the Mizuno representatives are external data that has not been transcribed)");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Chevalley group computations: structure constants, unipotent normal forms, parabolic cosets "
               "and permutation character values"};
  app.require_subcommand(1);
  Config c;

  auto add_type = [&](CLI::App* sub) { sub->add_option("--type", c.type, "Lie type, e.g. A2, G2, E8")->required(); };
  auto add_field = [&](CLI::App* sub) {
    sub->add_option("--q", c.q, "field order q = p^k");
    sub->add_option("--p", c.p, "characteristic");
    sub->add_option("--k", c.k, "extension degree (with --p)");
    sub->add_option("--modulus", c.modulus, "low coefficients c0,...,c_{k-1} of the monic modulus");
  };
  auto add_signs = [&](CLI::App* sub) {
    sub->add_option("--signs", c.signs, "extraspecial signs: plus, a preset name or a sign file");
    sub->add_option("--data-dir", c.data_dir, "directory with sign presets and element files");
  };
  auto add_elt = [&](CLI::App* sub) {
    sub->add_option("--elt", c.elt, "unipotent element: x-word such as x1(1)*x4(2), or @name");
    sub->add_option("--elements", c.elements, "element file used to resolve @name");
  };
  auto add_format = [&](CLI::App* sub) { sub->add_option("--format", c.format, "text or json"); };

  auto* roots = app.add_subcommand("roots", "list the positive roots in canonical order");
  add_type(roots);
  add_format(roots);

  auto* constants = app.add_subcommand("constants", "structure constants N and commutator constants C");
  add_type(constants);
  add_signs(constants);
  add_format(constants);
  constants->add_flag("--emit-signs", c.emit_signs, "print the sign table instead");

  auto* nf = app.add_subcommand("normalform", "normal form of a product of root elements");
  add_type(nf);
  add_field(nf);
  add_signs(nf);
  add_elt(nf);
  add_format(nf);
  nf->add_option("--word", c.word, "x-word to normalize");
  nf->add_option("--strategy", c.strategy, "commuting-first, leftmost or collect");

  auto* cosets = app.add_subcommand("cosets", "J-reduced coset families of P_J");
  add_type(cosets);
  add_field(cosets);
  add_format(cosets);
  cosets->add_option("--J", c.J, "simple roots of the Levi part: \"1,3\", \"\" or d4-standard");
  cosets->add_flag("--count", c.count, "print only the number of cosets");

  auto* permchar = app.add_subcommand("permchar", "permutation character value on a unipotent element");
  add_type(permchar);
  add_field(permchar);
  add_signs(permchar);
  add_elt(permchar);
  add_format(permchar);
  permchar->add_option("--J", c.J, "simple roots of the Levi part");
  permchar->add_option("--strategy", c.strategy, "heuristic or bruteforce");
  permchar->add_option("--threads", c.threads, "worker threads (0: all cores)");
  permchar->add_option("--term-budget", c.term_budget, "term limit for linear elimination");
  permchar->add_flag("--audit", c.audit, "print one record per unpruned coset family");

  auto* oracle = app.add_subcommand("oracle", "permutation character value by adjoint matrices (small cases)");
  add_type(oracle);
  add_field(oracle);
  add_signs(oracle);
  add_elt(oracle);
  add_format(oracle);
  oracle->add_option("--J", c.J, "simple roots of the Levi part");

  auto* selftest = app.add_subcommand("selftest", "compare the symbolic and matrix engines at rank <= 3");
  selftest->add_option("--seed", c.seed, "random seed");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    check_format(c);
    if (*roots) return cmd_roots(c, out);
    if (*constants) return cmd_constants(c, out);
    if (*nf) return cmd_normalform(c, out);
    if (*cosets) return cmd_cosets(c, out);
    if (*permchar) return cmd_permchar(c, out);
    if (*oracle) return cmd_oracle(c, out);
    if (*selftest) return cmd_selftest(c, out);
  } catch (const FeasibilityError& e) {
    err << "error: " << e.what() << "\n";
    return kFeasibility;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kFailure;
  }
  return kInputError;
}

}  // namespace chev::cli
