// Copyright 2026 The detrec Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "detrec/cli.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <variant>

#include "CLI11.hpp"

#include "detrec/combi.hpp"
#include "detrec/emit.hpp"
#include "detrec/families.hpp"
#include "detrec/identities.hpp"
#include "detrec/recurrence.hpp"
#include "detrec/symfunc.hpp"

namespace detrec {
namespace {

// Hard limits. DETREC_MAX_N can lower these, never raise them.
constexpr std::size_t kSequenceCap = 10000;
constexpr std::size_t kSymbolicSequenceCap = 20;
constexpr std::size_t kIntegerMatrixCap = 60;
constexpr std::size_t kQuadMatrixCap = 30;
constexpr std::size_t kSymbolicMatrixCap = 12;
constexpr std::size_t kVarsCap = 8;
constexpr std::size_t kDegreeCap = 12;
constexpr std::size_t kVerifyCap = 30;
constexpr std::size_t kAllWordsCap = std::size_t{1} << 20;

struct Options {
  std::string subject;
  std::optional<std::size_t> n, r, k, m, vars, max_n;
  std::optional<long> a, b;
  std::string coeffs, family, partition, avoid;
  std::string format = "json";
  std::string method = "bareiss";
  std::uint64_t seed = kDefaultSeed;
  bool a_symbolic = false;
  bool b_symbolic = false;
  bool timing = false;
};

std::vector<std::string> split(const std::string& text, const char* flag) {
  std::vector<std::string> items;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) throw InvalidArgument(std::string(flag) + ": empty entry in '" + text + "'");
    items.push_back(item);
  }
  if (items.empty()) throw InvalidArgument(std::string(flag) + ": no entries");
  return items;
}

std::vector<Integer> parse_coeffs(const std::string& text) {
  std::vector<Integer> out;
  for (const auto& item : split(text, "--coeffs")) {
    const std::size_t sign = item[0] == '-' || item[0] == '+';
    Integer value;
    if (item.size() == sign || item.find_first_not_of("0123456789", sign) != std::string::npos ||
        value.set_str(item.substr(item[0] == '+'), 10) != 0) {
      throw InvalidArgument("--coeffs: '" + item + "' is not an integer");
    }
    out.push_back(value);
  }
  return out;
}

Partition parse_partition(const std::string& text) {
  std::vector<unsigned> parts;
  for (const auto& item : split(text, "--partition")) {
    if (!std::all_of(item.begin(), item.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
        item.size() > 3) {
      throw InvalidArgument("--partition: '" + item + "' is not a small non-negative integer");
    }
    parts.push_back(static_cast<unsigned>(std::stoul(item)));
  }
  return Partition(std::move(parts));
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

std::string cycles_label(const std::vector<Cycle>& cycles) {
  std::string out;
  for (const auto& c : cycles) {
    out += '(';
    for (std::size_t i = 0; i < c.size(); ++i) out += (i ? " " : "") + std::to_string(c[i]);
    out += ')';
  }
  return out;
}

template <Scalar S>
S determinant(const SquareMatrix<S>& m, const std::string& method) {
  if (method == "cofactor") return det_cofactor(m);
  if (method == "lsd") return det_via_lsd(m);
  return det_bareiss(m);
}

struct Value {
  std::string text;
  bool numeric = false;
};

struct FamilyMatrix {
  std::variant<SquareMatrix<Integer>, SquareMatrix<MultiPoly>, SquareMatrix<QuadExt>> matrix;
  VariableNames names;
};

struct Item {
  Json json;
  std::string label;
  std::string weight;
};

class Runner {
 public:
  Runner(Options opt, std::ostream& out, std::optional<std::size_t> env_cap)
      : opt_(std::move(opt)), out_(out), env_cap_(env_cap) {}

  int compute();
  int enumerate();
  int verify();

 private:
  std::size_t cap(std::size_t hard) const {
    return env_cap_ ? std::min(hard, *env_cap_) : hard;
  }

  std::size_t need(const std::optional<std::size_t>& value, const char* flag,
                   std::size_t hard) const {
    if (!value) throw InvalidArgument(opt_.subject + ": " + flag + " is required");
    check_cap(flag, static_cast<long long>(*value), static_cast<long long>(cap(hard)));
    return *value;
  }

  std::size_t order(std::size_t hard) const {
    return need(opt_.m ? opt_.m : opt_.n, "--n", hard);
  }

  FamilyMatrix family_matrix() const;
  void print_value(const Value& v, const std::string& dump_text = {}) const;
  int print_items(const std::vector<Item>& items, const std::string& total) const;

  Options opt_;
  std::ostream& out_;
  std::optional<std::size_t> env_cap_;
};

FamilyMatrix Runner::family_matrix() const {
  const std::string& f = opt_.family;
  if (f.empty()) throw InvalidArgument(opt_.subject + ": --family is required");
  if (f == "E") {
    const std::size_t n = order(kSymbolicMatrixCap);
    return {build_E(n, need(opt_.vars, "--vars", kVarsCap)), {}};
  }
  if (f == "C") {
    if (!opt_.coeffs.empty()) {
      return {build_C(parse_coeffs(opt_.coeffs), need(opt_.n, "--n", kIntegerMatrixCap)), {}};
    }
    const std::size_t r = need(opt_.r, "--r", kSymbolicMatrixCap);
    return {build_C(symbolic_recurrence(r).coefficients, need(opt_.n, "--n", kSymbolicMatrixCap)),
            {}};
  }
  if (f == "G") {
    const std::size_t n = need(opt_.n, "--n", kIntegerMatrixCap);
    return {build_G(n, need(opt_.r, "--r", kIntegerMatrixCap)), {}};
  }
  if (f == "F") return {build_F(need(opt_.n, "--n", kIntegerMatrixCap)), {}};
  if (f == "A") return {build_A(need(opt_.n, "--n", kQuadMatrixCap)), {}};

  // S: each of a, b is an integer or the symbol of the same name.
  if ((opt_.a && opt_.a_symbolic) || (opt_.b && opt_.b_symbolic)) {
    throw InvalidArgument("S: give either --a or --a-symbolic (likewise for b), not both");
  }
  if (opt_.a && opt_.b) {
    return {build_S(Integer(*opt_.a), Integer(*opt_.b), need(opt_.n, "--n", kIntegerMatrixCap)),
            {}};
  }
  const MultiPoly a = opt_.a ? MultiPoly(Integer(*opt_.a)) : MultiPoly::variable(0);
  const MultiPoly b = opt_.b ? MultiPoly(Integer(*opt_.b)) : MultiPoly::variable(1);
  return {build_S(a, b, need(opt_.n, "--n", kSymbolicMatrixCap)), VariableNames::ab()};
}

void Runner::print_value(const Value& v, const std::string& dump_text) const {
  if (opt_.format == "pretty") {
    out_ << dump_text << (dump_text.empty() ? "" : "\n") << v.text << '\n';
  } else {
    // A decimal integer of any length is already a JSON number.
    out_ << (v.numeric ? v.text : Json(v.text).dump()) << '\n';
  }
}

int Runner::compute() {
  if (opt_.format == "csv") {
    throw InvalidArgument("compute: csv output is only for enumerate and verify");
  }
  const std::string& s = opt_.subject;
  const auto integer = [](const Integer& v) { return Value{v.get_str(), true}; };
  const auto poly = [](const MultiPoly& p, const VariableNames& names = {}) {
    return Value{p.to_string(names), false};
  };

  if (s == "fib") {
    print_value(integer(fibonacci(need(opt_.n, "--n", kSequenceCap))));
  } else if (s == "lucas") {
    print_value(integer(lucas(need(opt_.n, "--n", kSequenceCap))));
  } else if (s == "racci") {
    const std::size_t n = need(opt_.n, "--n", kSequenceCap);
    print_value(integer(racci(n, need(opt_.r, "--r", kSequenceCap))));
  } else if (s == "recurrence") {
    if (!opt_.coeffs.empty()) {
      const RecurrenceSpec<Integer> spec(parse_coeffs(opt_.coeffs));
      print_value(integer(eval_recurrence(spec, need(opt_.n, "--n", kSequenceCap))));
    } else {
      const auto spec = symbolic_recurrence(need(opt_.r, "--r", kSymbolicSequenceCap));
      print_value(poly(eval_recurrence(spec, need(opt_.n, "--n", kSymbolicSequenceCap))));
    }
  } else if (s == "e" || s == "h") {
    const auto k = static_cast<unsigned>(need(opt_.k, "--k", kDegreeCap));
    const std::size_t vars = need(opt_.vars, "--vars", kVarsCap);
    print_value(poly(s == "e" ? elementary(k, vars) : homogeneous(k, vars)));
  } else if (s == "schur") {
    Partition lambda;
    if (!opt_.partition.empty()) {
      lambda = parse_partition(opt_.partition);
    } else {
      lambda = Partition{static_cast<unsigned>(need(opt_.k, "--k", kDegreeCap))};
    }
    check_cap("schur: partition weight", lambda.weight(), static_cast<long long>(cap(kDegreeCap)));
    print_value(poly(schur(lambda, need(opt_.vars, "--vars", kVarsCap))));
  } else {
    const FamilyMatrix fm = family_matrix();
    std::visit(
        [&](const auto& m) {
          const auto det = determinant(m, opt_.method);
          Value v;
          if constexpr (std::is_same_v<std::decay_t<decltype(det)>, MultiPoly>) {
            v = poly(det, fm.names);
          } else if constexpr (std::is_same_v<std::decay_t<decltype(det)>, QuadExt>) {
            v = Value{det.to_string(), det.is_integer()};
          } else {
            v = integer(det);
          }
          print_value(v, opt_.format == "pretty" ? dump(m, fm.names) : std::string());
        },
        fm.matrix);
  }
  return kExitOk;
}

int Runner::print_items(const std::vector<Item>& items, const std::string& total) const {
  if (opt_.format == "csv") {
    out_ << "index,item,weight\n";
    for (std::size_t i = 0; i < items.size(); ++i) {
      out_ << i + 1 << ',' << csv_field(items[i].label) << ',' << csv_field(items[i].weight)
           << '\n';
    }
  } else if (opt_.format == "pretty") {
    for (const auto& item : items) out_ << item.label << '\t' << item.weight << '\n';
    out_ << "count = " << items.size() << ", total weight = " << total << '\n';
  } else {
    for (const auto& item : items) out_ << item.json.dump() << '\n';
    Json summary;
    summary["count"] = items.size();
    summary["total_weight"] = total;
    out_ << summary.dump() << '\n';
  }
  return kExitOk;
}

int Runner::enumerate() {
  const std::string& s = opt_.subject;
  std::vector<Item> items;

  if (s == "tilings") {
    const std::size_t n = need(opt_.n, "--n", kTilingCap);
    std::vector<Integer> int_coeffs;
    std::vector<MultiPoly> sym_coeffs;
    std::size_t r = 0;
    if (!opt_.coeffs.empty()) {
      int_coeffs = parse_coeffs(opt_.coeffs);
      r = int_coeffs.size();
      if (opt_.r && *opt_.r != r) throw InvalidArgument("tilings: --r disagrees with --coeffs");
    } else {
      r = need(opt_.r, "--r", kTilingCap);
      sym_coeffs = symbolic_recurrence(r).coefficients;
    }
    MultiPoly total;
    for (const auto& t : enumerate_tilings(n, r)) {
      const MultiPoly w = int_coeffs.empty()
                              ? tiling_weight(t, std::span<const MultiPoly>(sym_coeffs))
                              : MultiPoly(tiling_weight(t, std::span<const Integer>(int_coeffs)));
      total += w;
      Json j = tiling_json(t);
      j["weight"] = w.to_string();
      std::string label;
      for (std::size_t part : t.parts) label += (label.empty() ? "" : "+") + std::to_string(part);
      items.push_back({std::move(j), label.empty() ? "()" : label, w.to_string()});
    }
    return print_items(items, total.to_string());
  }

  if (s == "circular-tilings") {
    for (const auto& t : enumerate_circular_tilings(need(opt_.n, "--n", kTilingCap))) {
      std::string label;
      for (const auto& tile : t.tiles) {
        label += (label.empty() ? "" : " ") + std::to_string(tile.start) + ':' +
                 std::to_string(tile.length);
      }
      Json j = circular_tiling_json(t);
      j["weight"] = "1";
      items.push_back({std::move(j), label, "1"});
    }
    return print_items(items, std::to_string(items.size()));
  }

  if (s == "lsds") {
    const FamilyMatrix fm = family_matrix();
    std::string total;
    std::visit(
        [&](const auto& m) {
          using S = std::decay_t<decltype(m(0, 0))>;
          check_cap("lsds: n", static_cast<long long>(m.size()),
                    static_cast<long long>(cap(kLsdVertexCap)));
          S sum = ScalarTraits<S>::zero();
          for (const auto& lsd : enumerate_lsds(from_matrix(m))) {
            sum = sum + lsd.signed_weight();
            std::string weight;
            if constexpr (std::is_same_v<S, MultiPoly>) {
              weight = lsd.weight.to_string(fm.names);
            } else {
              weight = scalar_to_string(lsd.weight);
            }
            items.push_back({lsd_json(lsd, fm.names), cycles_label(lsd.cycles), weight});
          }
          if constexpr (std::is_same_v<S, MultiPoly>) {
            total = sum.to_string(fm.names);
          } else {
            total = scalar_to_string(sum);
          }
        },
        fm.matrix);
    return print_items(items, total);
  }

  if (s == "words") {
    const std::size_t n = need(opt_.n, "--n", kIncreasingWordCap);
    const std::size_t vars = need(opt_.vars, "--vars", kVarsCap);
    std::vector<Word> words;
    if (opt_.avoid == "descent") {
      words = enumerate_increasing_words(n, vars);
    } else if (opt_.avoid.empty()) {
      std::size_t count = 1;
      for (std::size_t i = 0; i < n; ++i) {
        count *= vars;
        check_cap("words: number of words", static_cast<long long>(count), kAllWordsCap);
      }
      for (std::size_t code = 0; code < count; ++code) {
        Word w{std::vector<std::size_t>(n)};
        std::size_t rest = code;
        for (std::size_t p = n; p-- > 0; rest /= vars) w.letters[p] = rest % vars + 1;
        words.push_back(std::move(w));
      }
    } else {
      throw InvalidArgument("words: --avoid accepts only 'descent'");
    }
    MultiPoly total;
    for (const auto& w : words) {
      const MultiPoly weight = word_weight(w);
      total += weight;
      std::string label;
      for (std::size_t letter : w.letters) {
        label += (label.empty() ? "" : " ") + std::to_string(letter);
      }
      items.push_back({word_json(w), label.empty() ? "()" : label, weight.to_string()});
    }
    return print_items(items, total.to_string());
  }

  // cyclic-words
  if (opt_.avoid.find_first_not_of("ab") != std::string::npos) {
    throw InvalidArgument("cyclic-words: --avoid must be a word over a, b");
  }
  const auto names = VariableNames::ab();
  MultiPoly total;
  for (const auto& w : enumerate_cyclic_words(need(opt_.n, "--n", kCyclicWordCap))) {
    if (!opt_.avoid.empty() && contains_cyclic(w, opt_.avoid)) continue;
    const MultiPoly weight = cyclic_word_weight(w);
    total += weight;
    items.push_back({cyclic_word_json(w), w.letters, weight.to_string(names)});
  }
  return print_items(items, total.to_string(names));
}

int Runner::verify() {
  const std::string& s = opt_.subject;
  std::vector<VerificationReport> reports;
  const auto n_arg = [&] { return need(opt_.n, "--n", kVerifyCap); };

  if (s == "all") {
    std::size_t max_n = cap(kVerifyCap);
    if (opt_.max_n) max_n = need(opt_.max_n, "--max-n", kVerifyCap);
    if (max_n == 0) throw InvalidArgument("verify all: --max-n must be >= 1");
    reports = verify_all(max_n, opt_.seed);
  } else if (s == "hom-det") {
    const std::size_t m = order(kVerifyCap);
    reports.push_back(verify_hom_det(m, need(opt_.vars, "--vars", kVerifyCap)));
  } else if (s == "sury") {
    const std::size_t n = n_arg();
    reports.push_back(verify_sury(n, need(opt_.k, "--k", kVerifyCap)));
  } else if (s == "mclaughlin") {
    reports.push_back(verify_mclaughlin(n_arg()));
  } else if (s == "two-var") {
    reports.push_back(verify_two_var(n_arg()));
  } else if (s == "recurrence-det") {
    const std::size_t n = n_arg();
    if (!opt_.coeffs.empty()) {
      reports.push_back(verify_recurrence_det(parse_coeffs(opt_.coeffs), n));
    } else {
      reports.push_back(verify_recurrence_det_symbolic(need(opt_.r, "--r", kVerifyCap), n));
    }
  } else if (s == "racci") {
    const std::size_t n = n_arg();
    reports.push_back(verify_racci(n, need(opt_.r, "--r", kVerifyCap)));
  } else if (s == "fib") {
    reports.push_back(verify_fib(n_arg()));
  } else if (s == "binet-fib") {
    reports.push_back(verify_binet_fib(n_arg()));
  } else if (s == "binet-lucas") {
    reports.push_back(verify_binet_lucas(n_arg()));
  } else {
    reports.push_back(verify_lucas_symbolic(n_arg()));
  }

  if (!opt_.timing) {
    for (auto& r : reports) r.elapsed = {};
  }

  if (opt_.format == "csv") {
    out_ << "identity,params,lhs,rhs,passed,elapsed_ms\n";
    for (const auto& r : reports) {
      out_ << r.identity_id << ',' << csv_field(r.params.dump()) << ',' << csv_field(r.lhs) << ','
           << csv_field(r.rhs) << ',' << (r.passed ? "true" : "false") << ','
           << Json(r.elapsed.count()).dump() << '\n';
    }
  } else if (opt_.format == "pretty") {
    std::size_t passed = 0;
    for (const auto& r : reports) {
      passed += r.passed;
      out_ << (r.passed ? "PASS " : "FAIL ") << r.identity_id << ' ' << r.params.dump() << '\n';
      if (!r.passed) out_ << "  lhs: " << r.lhs << "\n  rhs: " << r.rhs << '\n';
    }
    out_ << passed << " of " << reports.size() << " passed\n";
  } else {
    for (const auto& r : reports) out_ << to_json(r).dump() << '\n';
  }
  return all_passed(reports) ? kExitOk : kExitVerifyFailed;
}

void add_shared_options(CLI::App& cmd, Options& opt) {
  cmd.add_option("--n", opt.n, "size or index");
  cmd.add_option("--m", opt.m, "order of E (defaults to --n)");
  cmd.add_option("--r", opt.r, "recurrence order or tile length bound");
  cmd.add_option("--k", opt.k, "degree or number of variables in sury");
  cmd.add_option("--vars", opt.vars, "number of variables");
  cmd.add_option("--coeffs", opt.coeffs, "integer coefficients c1,c2,...");
  cmd.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "pretty"}));
  cmd.add_flag("--timing", opt.timing, "report measured elapsed_ms instead of 0");
}

void add_family_options(CLI::App& cmd, Options& opt) {
  cmd.add_option("--family", opt.family, "matrix family")
      ->check(CLI::IsMember({"E", "C", "G", "F", "S", "A"}));
  cmd.add_option("--a", opt.a, "integer value of a (family S)");
  cmd.add_option("--b", opt.b, "integer value of b (family S)");
  cmd.add_flag("--a-symbolic", opt.a_symbolic, "keep a as a symbol (family S, default)");
  cmd.add_flag("--b-symbolic", opt.b_symbolic, "keep b as a symbol (family S, default)");
}

std::optional<std::size_t> parse_env_cap(const char* text) {
  if (text == nullptr || *text == '\0') return std::nullopt;
  const std::string s(text);
  if (s.size() > 9 || s.find_first_not_of("0123456789") != std::string::npos ||
      std::stoul(s) == 0) {
    throw InvalidArgument("DETREC_MAX_N must be a positive integer, got '" + s + "'");
  }
  return std::stoul(s);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const char* env_max_n) {
  Options opt;
  CLI::App app("Exact determinant identities: compute, enumerate, verify.", "detrec");
  app.require_subcommand(1, 1);

  auto* compute = app.add_subcommand("compute", "evaluate a sequence, polynomial or determinant");
  compute->add_option("subject", opt.subject)
      ->required()
      ->check(CLI::IsMember({"fib", "lucas", "racci", "recurrence", "e", "h", "schur", "det"}));
  add_shared_options(*compute, opt);
  add_family_options(*compute, opt);
  compute->add_option("--partition", opt.partition, "partition parts, e.g. 2,1");
  compute->add_option("--method", opt.method, "determinant algorithm")
      ->check(CLI::IsMember({"bareiss", "cofactor", "lsd"}));

  auto* enumerate = app.add_subcommand("enumerate", "list combinatorial objects as JSON lines");
  enumerate->add_option("subject", opt.subject)
      ->required()
      ->check(CLI::IsMember({"tilings", "circular-tilings", "lsds", "words", "cyclic-words"}));
  add_shared_options(*enumerate, opt);
  add_family_options(*enumerate, opt);
  enumerate->add_option("--avoid", opt.avoid, "pattern to avoid");

  auto* verify = app.add_subcommand("verify", "check identities and print reports");
  std::vector<std::string> ids = identity_ids();
  ids.push_back("all");
  verify->add_option("subject", opt.subject)->required()->check(CLI::IsMember(ids));
  add_shared_options(*verify, opt);
  verify->add_option("--max-n", opt.max_n, "size bound for verify all");
  verify->add_option("--seed", opt.seed, "seed for the random recurrences");

  std::vector<const char*> argv{"detrec"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    Runner runner(opt, out, parse_env_cap(env_max_n));
    if (compute->parsed()) return runner.compute();
    if (enumerate->parsed()) return runner.enumerate();
    return runner.verify();
  } catch (const TooLarge& e) {
    err << "detrec: " << e.what() << '\n';
    return kExitTooLarge;
  } catch (const InvalidArgument& e) {
    err << "detrec: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "detrec: " << e.what() << '\n';
    return kExitVerifyFailed;
  }
}

}  // namespace detrec
