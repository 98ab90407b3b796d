// hilbres: command-line front end.
//
//   hilbres eval problem.txt [--json]
//   hilbres severi --r 1 [--surface P2 --degree 4]
//   hilbres ghilb --k 2 --phi "c2^2" [--surface generic-surface]
//   hilbres mdeg --vars x,y --weights a,b --gens "x^2, x*y, y^2"
//   hilbres verify

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>

#include "hilbres/assembler.hpp"
#include "hilbres/config.hpp"
#include "hilbres/multidegree.hpp"

using namespace hilbres;
using nlohmann::ordered_json;

namespace {

ordered_json coefficient_map(const TopDegree& top) {
  ordered_json arr = ordered_json::array();
  for (const auto& [k, v] : top.coeffs)
    arr.push_back({{"monomial", k},
                   {"numerator", v.get_num().get_str()},
                   {"denominator", v.get_den().get_str()}});
  return arr;
}

void print_evaluation(const Evaluation& ev, bool json, ordered_json extra = ordered_json::object()) {
  if (json) {
    ordered_json j = std::move(extra);
    j["residue"] = ev.residue.to_string();
    j["coefficients"] = coefficient_map(ev.top);
    j["remainder"] = ev.top.remainder.to_string();
    j["warnings"] = ev.warnings;
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::cout << ev.residue.to_string() << "\n";
  for (const auto& [k, v] : ev.top.coeffs) std::cout << "  " << k << ": " << to_string(v) << "\n";
  for (const auto& w : ev.warnings) std::cerr << "warning: " << w << "\n";
}

ResidueOptions residue_options(bool parallel, double budget) {
  ResidueOptions o;
  o.exec = parallel ? Exec::parallel : Exec::serial;
  if (budget > 0) o.term_budget = static_cast<std::size_t>(budget);
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Iterated residue formulas for tautological integrals on Hilbert schemes of points"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false, parallel = false;
  double budget = 0;
  app.add_flag("--json", json, "Structured output");
  app.add_flag("--parallel", parallel, "Use the OpenMP product kernel");
  app.add_option("--term-budget", budget, "Abort when an intermediate exceeds this many terms");

  auto* eval = app.add_subcommand("eval", "Evaluate a problem file");
  std::string path;
  eval->add_option("file", path, "Problem file")->required();

  auto* severi = app.add_subcommand("severi", "Nodal curve coefficient a_r");
  int r = 1;
  std::string epd = "1", surface = "generic-surface";
  std::vector<int> degrees;
  severi->add_option("--r", r, "Number of nodes")->required()->check(CLI::PositiveNumber);
  severi->add_option("--epd", epd, "Dual polynomial for r >= 3");
  severi->add_option("--surface", surface, "Surface preset");
  severi->add_option("--degree", degrees, "Curve degrees to evaluate on P2");

  auto* ghilb = app.add_subcommand("ghilb", "Integral over the geometric component");
  int k = 1;
  std::string phi = "1";
  std::vector<std::string> roots{"L"}, qs;
  ghilb->add_option("--k", k, "Number of points")->required()->check(CLI::PositiveNumber);
  ghilb->add_option("--phi", phi, "Chern polynomial in c1, c2, ... of the tautological bundle");
  ghilb->add_option("--surface", surface, "Surface preset");
  ghilb->add_option("--roots", roots, "Chern roots of F")->delimiter(',');
  ghilb->add_option("--q", qs, "Block polynomials as m=text")->delimiter(';');

  auto* mdeg = app.add_subcommand("mdeg", "Multidegree of a monomial ideal");
  std::vector<std::string> vars, weights;
  std::string gens;
  mdeg->add_option("--vars", vars, "Variables")->required()->delimiter(',');
  mdeg->add_option("--weights", weights, "Weight symbols, one per variable")->delimiter(',');
  mdeg->add_option("--gens", gens, "Generators, comma separated")->required();

  auto* verify = app.add_subcommand("verify", "Run the verification suite");

  CLI11_PARSE(app, argc, argv);

  try {
    auto opts = residue_options(parallel, budget);
    if (*eval) {
      Assembled a = load_problem_config(path);
      print_evaluation(evaluate(a, opts), json);
      return 0;
    }
    if (*severi) {
      SurfaceModel X = SurfaceModel::preset(surface);
      Evaluation ev = evaluate(assemble_severi(r, epd, X), opts);
      ordered_json extra{{"r", r}};
      if (!degrees.empty()) {
        ordered_json vals = ordered_json::object();
        for (int d : degrees) {
          Rational v = p2_value(ev.top, X, d);
          vals[std::to_string(d)] = to_string(v);
          if (!json) std::cout << "d=" << d << ": " << to_string(v) << "\n";
        }
        extra["p2_values"] = vals;
      }
      print_evaluation(ev, json, extra);
      return 0;
    }
    if (*ghilb) {
      SurfaceModel X = SurfaceModel::preset(surface);
      BundleModel F{roots};
      std::map<int, std::string> qmap;
      for (const auto& q : qs) {
        auto eq = q.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("--q expects m=text");
        qmap[std::stoi(q.substr(0, eq))] = q.substr(eq + 1);
      }
      auto terms = assemble_ghilb(k, F, X, ChernPolynomial{phi}, [&](int m) {
        auto it = qmap.find(m);
        return it == qmap.end() ? std::string("1") : it->second;
      });
      auto evs = evaluate_terms(terms, opts);
      ordered_json out = ordered_json::array();
      for (std::size_t i = 0; i < terms.size(); ++i) {
        if (json) {
          out.push_back({{"partition", terms[i].alpha.to_string()},
                         {"residue", evs[i]->residue.to_string()},
                         {"coefficients", coefficient_map(evs[i]->top)}});
        } else {
          std::cout << terms[i].alpha.to_string() << ": " << evs[i]->residue.to_string() << "\n";
        }
      }
      if (json) std::cout << out.dump(2) << "\n";
      return 0;
    }
    if (*mdeg) {
      if (weights.empty()) weights = vars;
      if (weights.size() != vars.size()) throw std::invalid_argument("one weight per variable");
      MonomialIdeal I = MonomialIdeal::parse(vars, gens);
      ContextSpec spec;
      for (const auto& w : weights) spec.geometry_symbols.push_back({w, 1});
      auto ctx = VariableContext::make(spec);
      std::vector<MPoly> eta;
      for (const auto& w : weights) eta.push_back(MPoly::variable(ctx, w));
      MPoly m = multidegree(I, eta);
      if (json)
        std::cout << ordered_json{{"codimension", codimension(I)}, {"multidegree", m.to_string()}}.dump(2)
                  << "\n";
      else
        std::cout << m.to_string() << "\n";
      return 0;
    }
    if (*verify) {
      bool ok = true;
      for (const auto& c : verify_suite()) {
        std::cout << (c.passed ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << ": " << c.detail
                  << "\n";
        ok = ok && c.passed;
      }
      return ok ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
