// Command-line front end: evaluate states/characters on wreath-product
// elements, decompose elements into generalized cycles, run the property
// suites, compare against the tensor oracle, decide KMS.
//
// Exit codes: 0 success (and all checks passed), 1 a check failed,
// 2 parse error, 3 validation error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "wreath/io.hpp"
#include "wreath/oracle.hpp"
#include "wreath/verify.hpp"

namespace {

using namespace wreath;

const Group& group_of(const ParamsVariant& pv) {
  return std::visit([](const auto& p) -> const Group& { return p.group; }, pv);
}

cplx eval_any(const ParamsVariant& pv, const Element& e) {
  return std::visit([&](const auto& p) { return eval(p, e); }, pv);
}

std::vector<Element> read_elements_file(const std::string& path, const Group& g) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open elements file " + path);
  std::vector<Element> out;
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto last = line.find_last_not_of(" \t\r");
    out.push_back(parse_element(line.substr(first, last - first + 1), g));
  }
  return out;
}

// generic color list (name strings), used by decompose so no group is needed
struct GenericElement {
  Perm s;
  std::vector<std::pair<int, std::string>> colors;  // sorted by position
};

GenericElement parse_generic(const std::string& text) {
  GenericElement e;
  const size_t lb = text.find('[');
  e.s = Perm::parse(text.substr(0, lb));
  if (lb != std::string::npos) {
    if (text.back() != ']') throw parse_error("element: missing ']' in " + text);
    const std::string body = text.substr(lb + 1, text.size() - lb - 2);
    size_t i = 0;
    while (i < body.size()) {
      size_t comma = body.find(',', i);
      if (comma == std::string::npos) comma = body.size();
      const std::string item = body.substr(i, comma - i);
      const size_t at = item.find('@');
      if (at == std::string::npos) throw parse_error("element: expected name@pos in " + item);
      e.colors.emplace_back(std::stoi(item.substr(at + 1)), item.substr(0, at));
      i = comma + 1;
    }
  }
  std::sort(e.colors.begin(), e.colors.end());
  return e;
}

int run_eval(const std::string& params_path, const std::string& element_text) {
  const ParamsVariant pv = load_params(params_path);
  const Element e = parse_element(element_text, group_of(pv));
  std::cout << format_value(eval_any(pv, e)) << "\n";
  return 0;
}

int run_decompose(const std::string& element_text) {
  const GenericElement e = parse_generic(element_text);
  std::map<int, std::string> colors(e.colors.begin(), e.colors.end());
  std::set<int> in_orbit;
  auto emit = [&](const std::vector<int>& orbit, const Perm& cyc) {
    std::string part = cyc.is_identity() ? "()" : cyc.str();
    std::string word;
    std::vector<std::pair<int, std::string>> carried;
    int pos = orbit[0];
    for (size_t i = 0; i < orbit.size(); ++i) {
      auto it = colors.find(pos);
      if (it != colors.end()) {
        if (!word.empty()) word += "*";
        word += it->second;
        carried.emplace_back(pos, it->second);
      }
      pos = cyc.apply_inv(pos);
    }
    std::sort(carried.begin(), carried.end());
    if (!carried.empty()) {
      part += "[";
      for (size_t i = 0; i < carried.size(); ++i)
        part += (i ? "," : "") + carried[i].second + "@" + std::to_string(carried[i].first);
      part += "]";
    }
    std::cout << part << "  gamma~=" << (word.empty() ? "e" : word) << "\n";
  };
  for (const auto& orbit : e.s.cycles()) {
    for (int p : orbit) in_orbit.insert(p);
    emit(orbit, Perm::from_cycles({orbit}));
  }
  for (const auto& [pos, name] : colors)
    if (!in_orbit.count(pos)) emit({pos}, Perm());
  return 0;
}

int run_gram(const std::string& params_path, const std::string& elements_path,
             const std::string& report_path) {
  const ParamsVariant pv = load_params(params_path);
  const Group& g = group_of(pv);
  const std::vector<Element> elements = read_elements_file(elements_path, g);
  Evaluator phi = [&](const Element& e) { return eval_any(pv, e); };
  const CheckReport rep = gram_check("gram_psd", phi, elements, g, 1e-8);
  std::printf("%s gram_psd over %d elements, worst residual %.3e\n", rep.passed ? "PASS" : "FAIL",
              rep.samples, rep.worst_residual);
  if (!report_path.empty()) save_json(reports_to_json({rep}), report_path);
  return rep.passed ? 0 : 1;
}

int run_verify(const std::string& params_path, uint64_t seed, int max_support,
               const std::string& report_path) {
  std::vector<CheckReport> reports;
  try {
    const ParamsVariant pv = load_params(params_path);
    SuiteBudget budget;
    budget.max_support = max_support;
    reports = std::visit([&](const auto& p) { return full_suite(p, seed, budget); }, pv);
  } catch (const validation_error& e) {
    // invalid parameters are themselves a failed check, not a crash
    CheckReport rep;
    rep.name = "parameter_validation";
    rep.property = "parameters satisfy the admissibility conditions";
    rep.passed = false;
    rep.details.push_back(e.what());
    reports.push_back(std::move(rep));
  }
  bool all = true;
  for (const auto& r : reports) {
    std::printf("%s %-26s residual %.3e (tol %.0e, %d samples)\n", r.passed ? "PASS" : "FAIL",
                r.name.c_str(), r.worst_residual, r.tolerance, r.samples);
    for (const auto& d : r.details) std::printf("       %s\n", d.c_str());
    all = all && r.passed;
  }
  if (!report_path.empty()) save_json(reports_to_json(reports), report_path);
  return all ? 0 : 1;
}

int run_oracle(const std::string& params_path, int trials, int max_support, uint64_t seed,
               double cap, const std::string& report_path) {
  const ParamsVariant pv = load_params(params_path);
  if (!std::holds_alternative<StateParams>(pv))
    throw validation_error("oracle: needs state parameters");
  const StateParams& p = std::get<StateParams>(pv);
  std::mt19937_64 rng(seed);
  bool all = true;
  double worst = 0;
  for (int t = 0; t < trials; ++t) {
    const Element e = random_element(rng, p.group, 1, max_support);
    const cplx closed = eval(p, e);
    const cplx brute = oracle_eval(p, e, max_support, cap);
    const double r = std::abs(closed - brute);
    worst = std::max(worst, r);
    all = all && r <= 1e-9;
    std::printf("%-32s closed=%-24s oracle=%-24s residual=%.3e\n",
                format_element(e, p.group).c_str(), format_value(closed).c_str(),
                format_value(brute).c_str(), r);
  }
  std::printf("%s oracle agreement over %d elements, worst residual %.3e\n",
              all ? "PASS" : "FAIL", trials, worst);
  if (!report_path.empty()) {
    CheckReport rep;
    rep.name = "oracle_agreement";
    rep.property = "closed-form eval = tensor-model trace";
    rep.passed = all;
    rep.worst_residual = worst;
    rep.tolerance = 1e-9;
    rep.samples = trials;
    rep.seed = seed;
    save_json(reports_to_json({rep}), report_path);
  }
  return all ? 0 : 1;
}

int run_kms(const std::string& params_path) {
  const ParamsVariant pv = load_params(params_path);
  if (!std::holds_alternative<StateParams>(pv))
    throw validation_error("kms: needs state parameters");
  const KmsResult r = check_kms(std::get<StateParams>(pv));
  std::cout << "KMS: " << (r.kms ? "true" : "false") << "\n" << r.diagnosis << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"central states on wreath products of finite groups with the infinite symmetric group"};
  app.require_subcommand(1);

  std::string params_path, element_text, elements_path, report_path;
  uint64_t seed = 0;
  int trials = 50, max_support = 5;
  double cap = 200000;

  auto* c_eval = app.add_subcommand("eval", "evaluate a state/character on one element");
  c_eval->add_option("--params", params_path)->required();
  c_eval->add_option("--element", element_text)->required();

  auto* c_dec = app.add_subcommand("decompose", "split an element into generalized cycles");
  c_dec->add_option("--element", element_text)->required();

  auto* c_gram = app.add_subcommand("gram", "positive-definiteness on a list of elements");
  c_gram->add_option("--params", params_path)->required();
  c_gram->add_option("--elements", elements_path)->required();
  c_gram->add_option("--report", report_path);

  auto* c_verify = app.add_subcommand("verify", "run the full property suite");
  c_verify->add_option("--params", params_path)->required();
  c_verify->add_option("--seed", seed);
  c_verify->add_option("--max-support", max_support);
  c_verify->add_option("--report", report_path);

  auto* c_oracle = app.add_subcommand("oracle", "closed forms against the tensor model");
  c_oracle->add_option("--params", params_path)->required();
  c_oracle->add_option("--trials", trials);
  c_oracle->add_option("--max-support", max_support);
  c_oracle->add_option("--seed", seed);
  c_oracle->add_option("--cap", cap);
  c_oracle->add_option("--report", report_path);

  auto* c_kms = app.add_subcommand("kms", "decide the KMS property");
  c_kms->add_option("--params", params_path)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_eval->parsed()) return run_eval(params_path, element_text);
    if (c_dec->parsed()) return run_decompose(element_text);
    if (c_gram->parsed()) return run_gram(params_path, elements_path, report_path);
    if (c_verify->parsed()) return run_verify(params_path, seed, max_support, report_path);
    if (c_oracle->parsed()) return run_oracle(params_path, trials, max_support, seed, cap, report_path);
    if (c_kms->parsed()) return run_kms(params_path);
  } catch (const wreath::parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const wreath::validation_error& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
