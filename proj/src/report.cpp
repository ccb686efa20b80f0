#include "graphlie/report.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>

#include "graphlie/json_io.hpp"
#include "graphlie/lie.hpp"

namespace graphlie {

using nlohmann::json;

namespace {

class PhaseTimer {
 public:
  void start() { begin_ = std::chrono::steady_clock::now(); }
  void stop(const std::string& phase) {
    auto elapsed = std::chrono::steady_clock::now() - begin_;
    timings_[phase] = std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
  }
  json to_json() const { return timings_; }

 private:
  std::chrono::steady_clock::time_point begin_;
  std::map<std::string, long long> timings_;
};

}  // namespace

json run_verify(const VerifyOptions& opts) {
  const int n = opts.n;
  std::vector<CheckItem> checks;
  auto add = [&checks](std::string name, bool pass, std::string detail) {
    checks.push_back({std::move(name), pass, std::move(detail)});
  };
  PhaseTimer timer;

  timer.start();
  const EdgeColoredGraph gn = build_gn(n);
  const DirectedEdgeColoredGraph hn = build_hn(n);
  timer.stop("build");

  {
    const auto uniform = is_uniform(gn);
    add("gn_uniform", uniform.uniform,
        uniform.uniform ? "both uniformity conditions hold" : uniform.witness->describe());

    bool sizes_ok = true;
    for (const auto& cls : color_classes(gn)) {
      sizes_ok = sizes_ok && static_cast<int>(cls.size()) == (n - 1) / 2;
    }
    add("gn_color_class_sizes", sizes_ok,
        "every color class has size " + std::to_string((n - 1) / 2));

    bool pairs_once = static_cast<int>(hn.arcs().size()) == n * (n - 1) / 2;
    for (int a = 0; a < n && pairs_once; ++a) {
      for (int b = a + 1; b < n; ++b) {
        const bool fwd = hn.color_of(a, b).has_value();
        const bool bwd = hn.color_of(b, a).has_value();
        if (fwd == bwd) {  // either doubly directed or missing
          pairs_once = false;
          break;
        }
      }
    }
    add("hn_pairs_once", pairs_once, "each unordered pair carries exactly one arc");

    add("hn_underlying_equals_gn", underlying_undirected(hn) == gn,
        "forgetting orientation reproduces the undirected family");
  }

  timer.start();
  const PermutationGroup cpa = enumerate_cpa(gn, opts.method, opts.brute_cap);
  timer.stop("cpa");
  timer.start();
  const PermutationGroup gla = enumerate_gla(hn, opts.method, opts.brute_cap);
  timer.stop("gla");

  timer.start();
  const GroupIdentification cpa_ident = identify(cpa, GroupKind::Holomorph);
  const GroupIdentification gla_ident = identify(gla, GroupKind::Dihedral);
  timer.stop("identify");

  {
    const std::size_t expected_cpa = static_cast<std::size_t>(n) * euler_phi(n);
    add("cpa_order_formula", cpa.order() == expected_cpa,
        "order " + std::to_string(cpa.order()) + ", expected n*phi(n) = " +
            std::to_string(expected_cpa));
    add("cpa_identified_holomorph",
        cpa_ident.kind == GroupKind::Holomorph && cpa_ident.parameter == n && cpa_ident.verified,
        "identified as " + kind_name(cpa_ident.kind) + "(" +
            std::to_string(cpa_ident.parameter) + ")");

    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    add("cpa_transitive", cpa.orbit(0) == all, "orbit of 0 is the full vertex set");

    std::vector<Permutation> units;
    for (int u = 1; u < n; ++u) {
      if (std::gcd(u, n) == 1) units.push_back(affine_map(n, u, 0));
    }
    std::sort(units.begin(), units.end());
    add("cpa_stabilizer_units", cpa.stabilizer(0).elements() == units,
        "stabilizer of 0 is exactly the unit multiplications");

    const std::size_t expected_gla = 2 * static_cast<std::size_t>(n);
    add("gla_order_formula", gla.order() == expected_gla,
        "order " + std::to_string(gla.order()) + ", expected 2n = " +
            std::to_string(expected_gla));
    add("gla_identified_dihedral",
        gla_ident.kind == GroupKind::Dihedral && gla_ident.parameter == n && gla_ident.verified,
        "identified as " + kind_name(gla_ident.kind) + "(" +
            std::to_string(gla_ident.parameter) + ")");

    bool subset = true;
    for (const auto& chi : gla.elements()) subset = subset && cpa.contains(chi);
    add("gla_subset_of_cpa", subset, "every graph Lie automorphism is color permuting");

    const PermutationGroup stab = gla.stabilizer(0);
    add("orbit_stabilizer_equation",
        stab.order() == 2 && gla.order() == static_cast<std::size_t>(n) * stab.order(),
        "|GLA| = " + std::to_string(gla.order()) + " = n * |Stab(0)| with |Stab(0)| = " +
            std::to_string(stab.order()));
  }

  timer.start();
  const LemmaReport lemmas = verify_stabilizer_lemmas(n, opts.brute_cap);
  timer.stop("lemmas");
  {
    std::string detail;
    for (const auto& item : lemmas.checks) {
      if (!item.pass) detail += (detail.empty() ? "" : "; ") + item.name + ": " + item.detail;
    }
    add("stabilizer_lemmas", lemmas.all_pass, lemmas.all_pass ? "all lemma checks hold" : detail);
  }

  timer.start();
  const LieAlgebra2Step alg = LieAlgebra2Step::from_graph(hn);
  add("lie_dimension", alg.dimension() == 2 * n,
      "dimension " + std::to_string(alg.dimension()) + ", expected " + std::to_string(2 * n));
  add("lie_two_step", check_two_step(alg), "all triple brackets vanish");
  add("lie_jacobi", check_jacobi(alg), "Jacobi identity holds on all basis triples");
  add("lie_derived_spans_w", static_cast<int>(derived_subalgebra(alg).size()) == alg.dim_w(),
      "bracket values span all of W");

  {
    const auto mats = gla_image_group(hn, opts.brute_cap);
    bool hom = mats.size() == gla.order();
    for (std::size_t i = 0; i < mats.size() && hom; ++i) {
      for (std::size_t j = 0; j < mats.size() && hom; ++j) {
        const int k = gla.index_of(gla.elements()[i].compose(gla.elements()[j]));
        hom = mats[i] * mats[j] == mats[k];
      }
    }
    add("lie_extension_group", hom,
        std::to_string(mats.size()) +
            " distinct automorphism matrices; extension is a homomorphism");
  }
  timer.stop("lie");

  bool all_pass = true;
  for (const auto& c : checks) all_pass = all_pass && c.pass;

  json report{{"n", n},
              {"method", method_name(opts.method)},
              {"cpa_order", cpa.order()},
              {"cpa_identified", identification_to_json(cpa_ident)},
              {"gla_order", gla.order()},
              {"gla_identified", identification_to_json(gla_ident)},
              {"lie_dimension", alg.dimension()},
              {"checks", check_items_to_json(checks)},
              {"all_pass", all_pass}};
  if (opts.with_timing) report["timing_ms"] = timer.to_json();
  return report;
}

bool report_all_pass(const json& report) { return report.at("all_pass").get<bool>(); }

}  // namespace graphlie
