#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "grlie/alexander.hpp"
#include "grlie/cohomology.hpp"
#include "grlie/combinatorics.hpp"
#include "grlie/groups.hpp"
#include "grlie/lie.hpp"
#include "grlie/resonance.hpp"
#include "grlie/verify.hpp"

using nlohmann::json;
using namespace grlie;

namespace {

struct Options {
  std::string format = "table";
  std::uint64_t seed = 12345;
  std::string presentation_path;
};

GroupPresentation load_presentation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open presentation file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return presentation_from_json(ss.str());
}

GroupPresentation group_from_family(const std::string& fam, int n) {
  if (fam == "F") return free_group(n);
  if (fam == "Z") return abelian_group(n);
  if (fam == "vP") return vP(n);
  if (fam == "vPplus") return vP_plus(n);
  if (fam == "Pbar4") return pbar4();
  if (fam == "vP3") return free_product(pbar4(), integers_group());
  throw DomainError("unknown group family: " + fam);
}

TwoStepAlgebra algebra_from_family(const std::string& fam, int n) {
  if (fam == "P") return algebra_family("arnold", n);
  if (fam == "vP") return algebra_family("beer_vP", n);
  if (fam == "vPplus") return algebra_family("beer_vP_plus", n);
  if (fam == "Pbar4") return pbar4_algebra();
  if (fam == "F") return algebra_family("free", n);
  if (fam == "Z") return algebra_family("abelian", n);
  throw DomainError("unknown algebra family: " + fam);
}

std::string closed_family_name(const std::string& fam) {
  if (fam == "P" || fam == "vP") return fam;
  if (fam == "vPplus") return "vP_plus";
  throw DomainError("family must be one of P, vP, vPplus");
}

// one (k, value) table with a fixed column header
void emit_series(const Options& o, const std::string& key,
                 const std::string& value_name, int first_index,
                 const std::vector<long long>& values) {
  if (o.format == "json") {
    json j;
    j["first_index"] = first_index;
    j[key] = values;
    std::cout << j.dump(2) << "\n";
    return;
  }
  if (o.format == "csv") {
    std::cout << "k," << value_name << "\n";
    for (size_t i = 0; i < values.size(); ++i)
      std::cout << first_index + (int)i << "," << values[i] << "\n";
    return;
  }
  std::cout << "  k  " << value_name << "\n";
  for (size_t i = 0; i < values.size(); ++i)
    std::cout << "  " << first_index + (int)i << "  " << values[i] << "\n";
}

int cmd_poincare(const Options& o, const std::string& fam, int n) {
  UniPoly p = poincare_closed(closed_family_name(fam), n);
  if (o.format == "json") {
    json j;
    std::vector<std::string> cs;
    for (int i = 0; i <= p.degree(); ++i) cs.push_back(p.coeff(i).get_str());
    j["coefficients"] = cs;
    j["polynomial"] = p.str();
    std::cout << j.dump(2) << "\n";
  } else if (o.format == "csv") {
    std::cout << "degree,coefficient\n";
    for (int i = 0; i <= p.degree(); ++i)
      std::cout << i << "," << p.coeff(i).get_str() << "\n";
  } else {
    std::cout << p.str() << "\n";
  }
  return 0;
}

int cmd_lcs_ranks(const Options& o, const std::string& fam, int n, int K,
                  const std::string& method) {
  UniPoly p = poincare_closed(closed_family_name(fam), n);
  std::vector<long long> b;
  for (int i = 1; i <= p.degree(); ++i) b.push_back(p.coeff(i).get_num().get_si());
  RankTable t;
  if (method == "mobius")
    t = lcs_ranks_mobius(b, K);
  else if (method == "pbw")
    t = lcs_ranks_pbw(b, K);
  else if (method == "powersum")
    t = lcs_ranks_powersum(b, K);
  else {
    t = lcs_ranks_mobius(b, K);
    if (t.phi != lcs_ranks_pbw(b, K).phi ||
        t.phi != lcs_ranks_powersum(b, K).phi)
      throw DomainError("lcs-ranks: computation routes disagree");
  }
  emit_series(o, "phi", "phi_k", 1, t.phi);
  return 0;
}

int cmd_chen_ranks(const Options& o, const std::string& fam, int n,
                   int max_degree) {
  GroupPresentation g = o.presentation_path.empty()
                            ? group_from_family(fam, n)
                            : load_presentation(o.presentation_path);
  if (max_degree < 2) throw DomainError("chen-ranks: need --max-degree >= 2");
  auto dims = gr_hilbert(alexander_presentation(g), max_degree - 2, o.seed);
  emit_series(o, "theta", "theta_k", 2, dims);
  return 0;
}

int cmd_holonomy_chen(const Options& o, const std::string& fam, int n, int K) {
  LiePresentation L =
      o.presentation_path.empty()
          ? holonomy_presentation(algebra_from_family(fam, n))
          : quadratic_initial_forms(load_presentation(o.presentation_path));
  auto d = chen_dims(L, K, o.seed);
  emit_series(o, "theta", "theta_k", 1, d.dims);
  return 0;
}

int cmd_resonance(const Options& o, const std::string& fam, int n, int depth) {
  TwoStepAlgebra A = algebra_from_family(fam, n);
  Ideal I = resonance_ideal(A, depth);
  int dim = I.gens.empty() ? A.b1 : krull_dimension(I);

  // built-in component lists, in the coordinate order of the algebra basis
  std::vector<LinearSubspaceParam> components;
  if (fam == "vPplus" && n == 4 && depth == 2) {
    const int perm[6] = {0, 1, 3, 2, 4, 5};
    std::vector<std::vector<int>> lines = {
        {1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0},
        {0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 1},
        {1, -1, 1, 0, 0, 0}, {1, 0, 0, -1, 1, 0}, {0, 1, 0, -1, 0, 1},
        {0, 0, 1, 0, -1, 1}, {0, 1, -1, -1, 1, 0}, {1, 0, 1, -1, 0, 1},
        {1, -1, 0, 0, 1, -1}};
    for (auto& ln : lines) {
      LinearSubspaceParam L;
      L.b1 = 6;
      std::vector<Scalar> v(6, Scalar(0));
      for (int j = 0; j < 6; ++j) v[perm[j]] = Scalar((long)ln[j]);
      L.spans.push_back(v);
      components.push_back(L);
    }
  }
  std::vector<std::string> verified;
  for (const auto& L : components) {
    if (!subspace_in_resonance(A, L, depth)) continue;
    std::ostringstream os;
    for (int i = 0; i < A.b1; ++i) {
      if (is_zero(L.spans[0][i])) continue;
      if (!os.str().empty() && sgn(L.spans[0][i]) > 0) os << "+";
      if (L.spans[0][i] == -1)
        os << "-";
      else if (L.spans[0][i] != 1)
        os << L.spans[0][i].get_str() << "*";
      os << A.basis1[i];
    }
    verified.push_back(os.str());
  }

  if (o.format == "json") {
    json j;
    j["depth"] = depth;
    j["generators"] = I.gens.size();
    j["dimension"] = dim;
    j["verified_components"] = verified;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "depth " << depth << ": ideal with " << I.gens.size()
              << " generators, dimension " << dim << "\n";
    if (!verified.empty()) {
      std::cout << verified.size() << " verified components:\n";
      for (const auto& s : verified) std::cout << "  " << s << "\n";
    }
  }
  return 0;
}

int cmd_mildness(const Options& o, const std::string& fam, int n, int K) {
  GroupPresentation g = o.presentation_path.empty()
                            ? group_from_family(fam, n)
                            : load_presentation(o.presentation_path);
  auto m = mildness_check(g, K, o.seed);
  if (o.format == "json") {
    json j;
    j["mild"] = m.mild;
    j["first_failure"] = m.first_failure;
    j["phi"] = m.phi;
    j["report"] = m.report;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << m.report << "\n";
  }
  return m.mild ? 0 : 1;
}

int cmd_egf_check(const Options& o, const std::string& fam, int order) {
  auto r = egf_identity_check(closed_family_name(fam), order);
  if (o.format == "json") {
    json j;
    j["ok"] = r.ok;
    j["report"] = r.report;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << r.report << "\n";
  }
  return r.ok ? 0 : 1;
}

int cmd_chen_formula(const Options& o, const std::string& fam, int n,
                     const std::vector<std::string>& comps, int kmin, int D) {
  GroupPresentation g = o.presentation_path.empty()
                            ? group_from_family(fam, n)
                            : load_presentation(o.presentation_path);
  std::map<int, long long> components;
  for (const auto& c : comps) {
    auto colon = c.find(':');
    if (colon == std::string::npos)
      throw DomainError("chen-formula: components must be m:h pairs");
    components[std::stoi(c.substr(0, colon))] =
        std::stoll(c.substr(colon + 1));
  }
  ThetaSeries theta{gr_hilbert(alexander_presentation(g), D - 2, o.seed)};
  auto v = chen_formula_test(theta, components, kmin, D);
  if (o.format == "json") {
    json j;
    j["holds"] = v.holds;
    j["first_failure"] = v.first_failure;
    j["report"] = v.report;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << v.report << "\n";
  }
  return v.holds ? 0 : 1;
}

int cmd_verify(const Options& o, const std::vector<int>& only) {
  auto results = run_acceptance_suite(o.seed, only);
  int failures = 0;
  for (const auto& r : results) {
    std::cout << "criterion " << r.id << " [" << r.name << "]: "
              << (r.pass ? "pass" : "FAIL") << " (" << (int)(r.seconds * 10) / 10.0
              << "s)\n";
    if (!r.pass) {
      ++failures;
      std::cerr << r.detail;
    }
  }
  std::cout << (failures ? "FAILED" : "OK") << ": " << results.size() - failures
            << "/" << results.size() << " criteria passed\n";
  return failures ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graded Lie invariants of commutator-relators groups"};
  app.require_subcommand(1);

  Options o;
  std::string fam = "vPplus";
  int n = 3, K = 10, max_degree = 10, depth = 1, order = 7, kmin = 3;
  std::string method = "all";
  std::vector<std::string> comps;
  std::vector<int> only;

  auto add_common = [&](CLI::App* sub, bool with_presentation = true) {
    sub->add_option("--format", o.format, "table, json, or csv")
        ->check(CLI::IsMember({"table", "json", "csv"}));
    sub->add_option("--seed", o.seed, "seed for prime selection and sampling");
    if (with_presentation)
      sub->add_option("--presentation", o.presentation_path,
                      "presentation JSON file (overrides --family)");
  };

  auto* poincare = app.add_subcommand("poincare", "closed-form Poincare polynomial");
  poincare->add_option("--family", fam)->required();
  poincare->add_option("--n", n);
  add_common(poincare, false);

  auto* lcs = app.add_subcommand("lcs-ranks", "lower-central-series ranks");
  lcs->add_option("--family", fam)->required();
  lcs->add_option("--n", n);
  lcs->add_option("--max-degree", K);
  lcs->add_option("--method", method)
      ->check(CLI::IsMember({"all", "mobius", "pbw", "powersum"}));
  add_common(lcs, false);

  auto* chen = app.add_subcommand("chen-ranks", "Chen ranks from the module machinery");
  chen->add_option("--family", fam);
  chen->add_option("--n", n);
  chen->add_option("--max-degree", max_degree);
  add_common(chen);

  auto* hchen = app.add_subcommand("holonomy-chen", "Chen ranks of the holonomy Lie algebra");
  hchen->add_option("--family", fam);
  hchen->add_option("--n", n);
  hchen->add_option("--max-degree", K);
  add_common(hchen);

  auto* res = app.add_subcommand("resonance", "resonance ideal dimension and components");
  res->add_option("--family", fam)->required();
  res->add_option("--n", n);
  res->add_option("--depth", depth);
  add_common(res, false);

  auto* mild = app.add_subcommand("mildness", "Hilbert-series mildness criterion");
  mild->add_option("--family", fam);
  mild->add_option("--n", n);
  mild->add_option("--max-degree", K);
  add_common(mild);

  auto* egf = app.add_subcommand("egf-check", "exponential generating function identities");
  egf->add_option("--family", fam)->required();
  egf->add_option("--order", order);
  add_common(egf, false);

  auto* formula = app.add_subcommand("chen-formula", "Chen ranks formula test");
  formula->add_option("--family", fam);
  formula->add_option("--n", n);
  formula->add_option("--components", comps, "m:h pairs");
  formula->add_option("--kmin", kmin);
  formula->add_option("--max-degree", max_degree);
  add_common(formula);

  auto* verify = app.add_subcommand("verify", "run the acceptance suite");
  verify->add_option("--only", only, "criterion ids to run");
  add_common(verify, false);

  CLI11_PARSE(app, argc, argv);

  try {
    if (poincare->parsed()) return cmd_poincare(o, fam, n);
    if (lcs->parsed()) return cmd_lcs_ranks(o, fam, n, K, method);
    if (chen->parsed()) return cmd_chen_ranks(o, fam, n, max_degree);
    if (hchen->parsed()) return cmd_holonomy_chen(o, fam, n, K);
    if (res->parsed()) return cmd_resonance(o, fam, n, depth);
    if (mild->parsed()) return cmd_mildness(o, fam, n, K);
    if (egf->parsed()) return cmd_egf_check(o, fam, order);
    if (formula->parsed())
      return cmd_chen_formula(o, fam, n, comps, kmin, max_degree);
    if (verify->parsed()) return cmd_verify(o, only);
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 3;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
