// rtm: rooted tree maps, derivations, and multiple zeta value relations.
//
// Exit codes: 0 success, 1 a check failed, 2 usage or domain error.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "rtm/errors.hpp"
#include "rtm/hopf.hpp"
#include "rtm/mzv.hpp"
#include "rtm/relations.hpp"
#include "rtm/tree_maps.hpp"
#include "rtm/verify.hpp"

using namespace rtm;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

// "1" names the empty forest on the command line.
Forest forest_arg(const std::string& text) { return text == "1" ? Forest() : parse_forest(text); }

void print_tensor(const TensorSum& t, bool json) {
  if (json) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& [pair, c] : t) arr.push_back({pair.first.key(), pair.second.key(), to_string(c)});
    std::cout << arr.dump() << '\n';
    return;
  }
  for (const auto& [pair, c] : t)
    std::cout << to_string(pair.first) << '\t' << to_string(pair.second) << '\t' << to_string(c) << '\n';
}

int report(const std::vector<CheckResult>& results) {
  for (const auto& r : results) {
    std::cout << (r.pass ? "PASS " : "FAIL ") << r.name << " [" << r.cases << " cases]";
    if (!r.pass) std::cout << ": " << r.detail;
    std::cout << '\n';
  }
  return all_pass(results) ? kOk : kCheckFailed;
}

RelationSet read_relations(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open " + path);
  return read_jsonl(in);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rooted tree maps on Q<x,y>, the derivations ∂_n, and MZV relations"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(RTM_VERSION));

  int status = kOk;

  std::string forest_text;
  std::string word_text;
  bool json = false;

  auto* coproduct_cmd = app.add_subcommand("coproduct", "Connes-Kreimer coproduct of a forest");
  coproduct_cmd->add_option("forest", forest_text, "canonical forest key, or 1")->required();
  coproduct_cmd->add_flag("--json", json, "print [left, right, coefficient] triples as JSON");
  coproduct_cmd->callback([&] { print_tensor(coproduct(forest_arg(forest_text)), json); });

  auto* antipode_cmd = app.add_subcommand("antipode", "Antipode of a forest");
  antipode_cmd->add_option("forest", forest_text)->required();
  antipode_cmd->callback([&] { std::cout << to_string(antipode(forest_arg(forest_text))) << '\n'; });

  auto* dynkin_cmd = app.add_subcommand("dynkin", "Dynkin operator m∘(S⊗Y)∘Δ of a forest");
  dynkin_cmd->add_option("forest", forest_text)->required();
  dynkin_cmd->callback([&] { std::cout << to_string(dynkin(forest_arg(forest_text))) << '\n'; });

  auto* apply_cmd = app.add_subcommand("apply", "Rooted tree map of a forest applied to a word");
  apply_cmd->add_option("forest", forest_text)->required();
  apply_cmd->add_option("word", word_text, "word in x, y (or 1)")->required();
  apply_cmd->callback(
      [&] { std::cout << to_string(rtm::apply(forest_arg(forest_text), Word::parse(word_text))) << '\n'; });

  int n = 1;
  auto* partial_cmd = app.add_subcommand("partial", "Derivation ∂_n applied to a word");
  partial_cmd->add_option("n", n)->required()->check(CLI::PositiveNumber);
  partial_cmd->add_option("word", word_text)->required();
  partial_cmd->callback([&] { std::cout << to_string(partial_n(n, Word::parse(word_text))) << '\n'; });

  auto* decomp_cmd = app.add_subcommand("ladder-decomp", "∂_n as a combination of ladder forests");
  decomp_cmd->add_option("n", n)->required()->check(CLI::PositiveNumber);
  decomp_cmd->callback([&] { std::cout << to_string(partial_as_forest_sum(n)) << '\n'; });

  RunConfig run;
  bool derivations_only = false;
  std::string format = "text";
  std::string out_path;
  auto* relations_cmd = app.add_subcommand("relations", "Generate relation rows in the z-basis");
  relations_cmd->add_option("--max-degree", run.max_degree)->required()->check(CLI::PositiveNumber);
  relations_cmd->add_option("--max-weight", run.max_weight)->required()->check(CLI::PositiveNumber);
  relations_cmd->add_flag("--derivations", run.derivations, "also emit ∂_n rows (source d<n>)");
  relations_cmd->add_flag("--derivations-only", derivations_only, "emit only ∂_n rows");
  relations_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "jsonl"}));
  relations_cmd->add_option("--out", out_path, "output file (default: standard output)");
  relations_cmd->callback([&] {
    if (derivations_only) {
      run.derivations = true;
      run.tree_maps = false;
    }
    const RelationSet set = generate(run);
    std::ofstream file;
    if (!out_path.empty()) {
      file.open(out_path);
      if (!file) throw DomainError("cannot write " + out_path);
    }
    std::ostream& out = out_path.empty() ? std::cout : file;
    if (format == "jsonl") {
      write_jsonl(out, set);
    } else {
      write_text(out, set);
    }
  });

  auto* verify_cmd = app.add_subcommand("verify", "Exact symbolic verification suites");
  verify_cmd->require_subcommand(1);
  int max_n = 6;
  int max_word_weight = 7;
  auto* main_cmd = verify_cmd->add_subcommand("main-theorem", "D(λ_n) = (2^n-1) ∂_n and the ladder decomposition");
  main_cmd->add_option("--n", max_n)->check(CLI::PositiveNumber);
  main_cmd->add_option("--max-word-weight", max_word_weight)->check(CLI::PositiveNumber);
  main_cmd->callback([&] { status = report(verify_main_theorem(max_n, max_word_weight)); });

  int max_degree = 5;
  auto* axioms_cmd = verify_cmd->add_subcommand("hopf-axioms", "Coassociativity, counit and antipode laws");
  axioms_cmd->add_option("--max-degree", max_degree)->check(CLI::NonNegativeNumber);
  axioms_cmd->callback([&] { status = report(verify_hopf_axioms(max_degree)); });

  int order = 6;
  int log_order = 8;
  auto* series_cmd = verify_cmd->add_subcommand("series", "Truncated power series identities in u");
  series_cmd->add_option("--order", order)->check(CLI::NonNegativeNumber);
  series_cmd->add_option("--log-order", log_order, "truncation order for log Λ_u")->check(CLI::NonNegativeNumber);
  series_cmd->callback([&] { status = report(verify_series(order, log_order)); });

  std::string eps_text = "1e-30";
  int digits = 0;
  std::string target;
  auto* mzv_cmd = app.add_subcommand("mzv", "Multiple zeta values");
  mzv_cmd->require_subcommand(1);
  auto* eval_cmd = mzv_cmd->add_subcommand("eval", "Evaluate ζ of an index such as (2,1) or a word such as xyy");
  eval_cmd->add_option("target", target)->required();
  eval_cmd->add_option("--eps", eps_text, "absolute error target");
  eval_cmd->add_option("--digits", digits, "significant digits to print");
  eval_cmd->callback([&] {
    const PrecisionConfig cfg = PrecisionConfig::from_string(eps_text);
    const Word w = !target.empty() && target.front() == '(' ? z_decode(parse_zindex(target)) : Word::parse(target);
    const EvalResult r = zeta_num(w, cfg);
    std::cout << r.to_string(digits > 0 ? digits : digits_for(cfg.eps())) << '\n';
  });

  auto* check_cmd = app.add_subcommand("check", "Numeric checks");
  check_cmd->require_subcommand(1);
  auto* kernel_cmd = check_cmd->add_subcommand("kernel", "Check Z(f(w)) = 0 numerically");
  kernel_cmd->add_option("forest", forest_text)->required();
  kernel_cmd->add_option("word", word_text)->required();
  kernel_cmd->add_option("--eps", eps_text);
  kernel_cmd->callback([&] {
    const PrecisionConfig cfg = PrecisionConfig::from_string(eps_text);
    const KernelReport r = kernel_check(ForestSum(forest_arg(forest_text)), Word::parse(word_text), cfg);
    std::cout << "f(w) = " << to_string(r.image) << '\n';
    std::cout << "Z(f(w)) = " << r.result.to_string(digits_for(cfg.eps())) << '\n';
    std::cout << (r.pass ? "PASS" : "FAIL") << '\n';
    status = r.pass ? kOk : kCheckFailed;
  });

  std::string in_path;
  auto* rank_cmd = app.add_subcommand("rank", "Exact rank of each weight block of a relation file");
  rank_cmd->add_option("--in", in_path)->required();
  rank_cmd->callback([&] {
    const RelationSet set = read_relations(in_path);
    const auto blocks = set.by_weight();
    for (const auto& [weight, rank] : rank_by_weight(set))
      std::cout << "weight " << weight << ": rank " << rank << " of " << blocks.at(weight).size() << " rows\n";
  });

  std::string sub_path, sup_path;
  auto* span_cmd = app.add_subcommand("span", "Check that every row of --sub lies in the span of --sup");
  span_cmd->add_option("--sub", sub_path)->required();
  span_cmd->add_option("--sup", sup_path)->required();
  span_cmd->callback([&] {
    const SpanResult r = span_inclusion(read_relations(sub_path), read_relations(sup_path));
    if (r.included) {
      std::cout << "included\n";
    } else {
      std::cout << "not included; witness: " << to_string(*r.witness) << '\n';
      status = kCheckFailed;
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DimensionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return status;
}
