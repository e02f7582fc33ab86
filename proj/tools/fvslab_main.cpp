#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "fvslab/arboricity.hpp"
#include "fvslab/coating_search.hpp"
#include "fvslab/families.hpp"
#include "fvslab/normal.hpp"
#include "fvslab/parallel.hpp"
#include "fvslab/report.hpp"
#include "fvslab/svg.hpp"
#include "fvslab/valuation.hpp"

using namespace fvslab;
using nlohmann::ordered_json;

namespace {

constexpr int kExitPass = 0, kExitFail = 2, kExitResource = 3, kExitParse = 4;

long long env_budget(long long fallback) {
  const char* env = std::getenv("FVSLAB_BUDGET");
  if (!env) return fallback;
  try {
    return std::stoll(env);
  } catch (const std::exception&) {
    return fallback;
  }
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  long long ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                 start)
        .count();
  }
};

int finish(VerificationReport& report, const Timer& timer) {
  report.elapsed_ms = timer.ms();
  std::cout << report.to_json() << "\n";
  if (!report.all_pass()) return kExitFail;
  if (report.any_skipped()) return kExitResource;
  return kExitPass;
}

std::string join_argv(int argc, char** argv) {
  std::string s;
  for (int i = 0; i < argc; ++i) {
    if (i) s += ' ';
    s += argv[i];
  }
  return s;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  require(out.good(), Errc::ParseError, "cannot write " + path);
  out << content;
}

ordered_json claim_json(const FamilyClaim& claim) {
  ordered_json j;
  j["family"] = claim.family;
  j["params"] = claim.params;
  j["expected"] = claim.expected;
  return j;
}

std::vector<DiCycle> cycles_from_json(const PlaneDigraph& g, const ordered_json& arr) {
  std::map<int, int> by_label;
  for (int a = 0; a < g.m(); ++a) by_label[g.arc_label(a)] = a;
  std::vector<DiCycle> cycles;
  for (const auto& jc : arr) {
    std::vector<int> arcs;
    for (const auto& x : jc) {
      auto it = by_label.find(x.get<int>());
      require(it != by_label.end(), Errc::ParseError,
              "cycle references unknown arc " + x.dump());
      arcs.push_back(it->second);
    }
    DiCycle c(std::move(arcs));
    require(is_valid_dicycle(g, c), Errc::ParseError, "not a directed cycle: " + jc.dump());
    cycles.push_back(std::move(c));
  }
  return cycles;
}

ordered_json load_json(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), Errc::ParseError, "cannot open " + path);
  try {
    return ordered_json::parse(in);
  } catch (const std::exception& e) {
    fail(Errc::ParseError, path + ": " + std::string(e.what()));
  }
}

int cmd_gen(const std::string& family, int k, int l, int g, int r, uint64_t seed, int len,
            const std::string& out_path, const std::string& claims_path, bool to_svg) {
  std::string payload;
  FamilyClaim claim;
  std::set<int> highlight;
  PlaneDigraph graph_for_svg;
  bool have_graph = false;
  if (family == "dicycle") {
    auto gen = gen_dicycle(g);
    payload = print_pdg(gen.graph);
    claim = gen.claim;
    graph_for_svg = gen.graph;
    have_graph = true;
  } else if (family == "ok") {
    auto gen = gen_octahedron_family(k);
    payload = print_pdg(gen.graph);
    claim = gen.claim;
    graph_for_svg = gen.graph;
    have_graph = true;
  } else if (family == "okg") {
    auto gen = gen_okg(k, g);
    payload = print_pdg(gen.graph);
    claim = gen.claim;
    graph_for_svg = gen.graph;
    have_graph = true;
  } else if (family == "frieze") {
    auto gen = gen_frieze(k, g);
    payload = print_pdg(gen.coating.graph);
    claim = gen.claim;
    graph_for_svg = gen.coating.graph;
    for (auto& arcs : gen.coating.link_arcs) highlight.insert(arcs.begin(), arcs.end());
    have_graph = true;
  } else if (family == "cycle-coating") {
    auto gen = gen_cycle_coating(g, len);
    payload = print_pdg(gen.coating.graph);
    claim = gen.claim;
    graph_for_svg = gen.coating.graph;
    for (auto& arcs : gen.coating.link_arcs) highlight.insert(arcs.begin(), arcs.end());
    have_graph = true;
  } else if (family == "small-digirth") {
    auto gen = gen_small_digirth_family(g, k, r);
    payload = print_pdg(gen.coating.graph);
    claim = gen.claim;
    graph_for_svg = gen.coating.graph;
    for (auto& arcs : gen.coating.link_arcs) highlight.insert(arcs.begin(), arcs.end());
    have_graph = true;
  } else if (family == "glk") {
    auto gen = gen_glk_skeleton(k, l);
    payload = print_psk(gen.skeleton);
    claim = gen.claim;
  } else if (family == "glkr") {
    auto gen = gen_glkr_skeleton(k, r, l);
    payload = print_psk(gen.skeleton);
    claim = gen.claim;
  } else if (family == "random") {
    PlaneDigraph g2 = gen_random_plane_digraph(std::max(2, k), seed, std::max(1, g));
    payload = print_pdg(g2);
    claim.family = "random";
    claim.params = {{"n", std::to_string(k)}, {"seed", std::to_string(seed)}};
    graph_for_svg = g2;
    have_graph = true;
  } else {
    fail(Errc::ParseError, "unknown family '" + family +
                               "' (dicycle|ok|okg|frieze|cycle-coating|small-digirth|glk|glkr|random)");
  }
  if (to_svg) {
    require(have_graph, Errc::ParseError, "--svg needs a digraph family");
    payload = dump_svg(graph_for_svg, highlight);
  }
  if (out_path.empty() || out_path == "-")
    std::cout << payload;
  else
    write_file(out_path, payload);
  if (!claims_path.empty()) write_file(claims_path, claim_json(claim).dump(2) + "\n");
  return kExitPass;
}

void report_normal(VerificationReport& report, const PlaneDigraph& g, const std::string& file,
                   long long expect_size) {
  auto girth = digirth(g);
  auto ns = max_normal_set(g);
  report.add(file + ": maximum normal set size",
             expect_size < 0 || static_cast<long long>(ns.size()) == expect_size,
             expect_size < 0 ? "" : std::to_string(expect_size), std::to_string(ns.size()));
  if (girth && *girth >= 3) {
    EnergyReport e = energies(g, ns);
    report.add(file + ": energy identity", energy_identity_check(g, ns),
               "|N| = (n-2)/(g-2) - E_tot/(g-2)",
               "E1=" + rat_str(e.e1) + " E2=" + rat_str(e.e2) + " E3=" + rat_str(e.e3) +
                   " E4=" + rat_str(e.e4));
    bool nonneg = e.e1 >= 0 && e.e2 >= 0 && e.e3 >= 0 && e.e4 >= 0;
    report.add(file + ": energies nonnegative", ns.empty() || nonneg, ">= 0",
               "E_tot=" + rat_str(e.e_tot));
    report.add(file + ": size bound (n-2)/(g-2)",
               Rat(static_cast<long long>(ns.size())) <= Rat(g.n() - 2, *girth - 2),
               "<= " + rat_str(Rat(g.n() - 2, *girth - 2)), std::to_string(ns.size()));
  } else {
    report.skipped(file + ": energy identity", "digirth < 3");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"planar digirth/feedback-vertex-set laboratory"};
  app.require_subcommand(1);
  std::string command_echo = join_argv(argc, argv);

  auto* gen = app.add_subcommand("gen", "generate a family instance");
  std::string gen_family, gen_out = "-", gen_claims;
  int gen_k = 1, gen_l = 1, gen_g = 4, gen_r = 0, gen_len = 4;
  uint64_t gen_seed = 1;
  bool gen_svg = false;
  gen->add_option("family", gen_family)->required();
  gen->add_option("--k", gen_k);
  gen->add_option("--l", gen_l);
  gen->add_option("--g", gen_g);
  gen->add_option("--r", gen_r);
  gen->add_option("--len", gen_len);
  gen->add_option("--seed", gen_seed);
  gen->add_option("-o,--out", gen_out);
  gen->add_option("--claims", gen_claims);
  gen->add_flag("--svg", gen_svg);

  auto* solve = app.add_subcommand("solve", "exact solvers");
  auto* solve_fvs = solve->add_subcommand("fvs", "minimum feedback vertex set");
  std::string solve_file;
  long long solve_budget = 10000000;
  bool solve_oracle = false, solve_parallel = false;
  solve_fvs->add_option("file", solve_file)->required();
  solve_fvs->add_option("--budget", solve_budget);
  solve_fvs->add_flag("--oracle", solve_oracle);
  solve_fvs->add_flag("--parallel", solve_parallel);

  auto* verify = app.add_subcommand("verify", "machine-checked verifications");
  int jobs = 1;
  verify->add_option("--jobs", jobs);
  verify->require_subcommand(1);

  auto* v_digirth = verify->add_subcommand("digirth", "digirth of pdg files");
  std::vector<std::string> vd_files;
  int vd_expect = -1;
  v_digirth->add_option("files", vd_files)->required();
  v_digirth->add_option("--expect", vd_expect);

  auto* v_fvs = verify->add_subcommand("fvs", "fvs upper bound audit");
  std::vector<std::string> vf_files;
  long long vf_expect = -1;
  long long vf_budget = 10000000;
  v_fvs->add_option("files", vf_files)->required();
  v_fvs->add_option("--expect", vf_expect);
  v_fvs->add_option("--budget", vf_budget);

  auto* v_normal = verify->add_subcommand("normal", "maximum normal set + energies");
  std::vector<std::string> vn_files;
  long long vn_expect = -1;
  v_normal->add_option("files", vn_files)->required();
  v_normal->add_option("--expect", vn_expect);

  auto* v_energy = verify->add_subcommand("energy", "energies of a given cycle set");
  std::string ve_graph, ve_cycles;
  v_energy->add_option("file", ve_graph)->required();
  v_energy->add_option("cycles", ve_cycles)->required();

  auto* v_coating = verify->add_subcommand("coating", "coating structural identities");
  std::string vc_skel, vc_cf;
  v_coating->add_option("skeleton", vc_skel)->required();
  v_coating->add_option("cf", vc_cf)->required();

  auto* v_recursive = verify->add_subcommand("recursive", "chain family digirth certificate");
  std::string vr_family;
  int vr_g = 6;
  v_recursive->add_option("family", vr_family)->required();
  v_recursive->add_option("--g", vr_g)->required();

  auto* v_arbo = verify->add_subcommand("arboricity", "fractional arboricity");
  std::string va_skel, va_cert;
  v_arbo->add_option("skeleton", va_skel)->required();
  v_arbo->add_option("--cert", va_cert);

  auto* v_val = verify->add_subcommand("valuation", "valuation weight/multiplicity/laminarity");
  std::string vv_graph, vv_val;
  v_val->add_option("file", vv_graph)->required();
  v_val->add_option("valuation", vv_val)->required();

  auto* search = app.add_subcommand("search", "searches");
  auto* s_coating = search->add_subcommand("coating", "find a digirth-g coating function");
  std::string sc_skel, sc_out = "-";
  int sc_g = 4;
  bool sc_perfect = false;
  long long sc_budget = 2000000;
  s_coating->add_option("skeleton", sc_skel)->required();
  s_coating->add_option("--g", sc_g)->required();
  s_coating->add_flag("--perfect", sc_perfect);
  s_coating->add_option("--budget", sc_budget);
  s_coating->add_option("-o,--out", sc_out);

  auto* coat = app.add_subcommand("coat", "build the coating of (skeleton, cf)");
  std::string coat_skel, coat_cf, coat_out = "-";
  coat->add_option("skeleton", coat_skel)->required();
  coat->add_option("cf", coat_cf)->required();
  coat->add_option("-o,--out", coat_out);

  auto* rep = app.add_subcommand("report", "bound reports");
  auto* rep_tau = rep->add_subcommand("tau", "asymptotic ratio bounds");
  int tau_g = 0, tau_from = 0, tau_to = 0;
  rep_tau->add_option("--g", tau_g);
  rep_tau->add_option("--from", tau_from);
  rep_tau->add_option("--to", tau_to);

  auto* dump = app.add_subcommand("dump", "export formats");
  auto* dump_svg_cmd = dump->add_subcommand("svg", "straight-line drawing");
  std::string ds_file, ds_out = "-";
  dump_svg_cmd->add_option("file", ds_file)->required();
  dump_svg_cmd->add_option("-o,--out", ds_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  Timer timer;
  try {
    if (*gen) return cmd_gen(gen_family, gen_k, gen_l, gen_g, gen_r, gen_seed, gen_len, gen_out,
                             gen_claims, gen_svg);

    if (*solve_fvs) {
      PlaneDigraph g = load_pdg(solve_file);
      ordered_json j;
      FvsResult res;
      if (solve_oracle) {
        res = fvs_bruteforce(g);
      } else {
        FvsOptions opts;
        opts.node_budget = env_budget(solve_budget);
        opts.parallel_root = solve_parallel;
        res = fvs_exact(g, opts);
      }
      j["size"] = res.size;
      ordered_json wit = ordered_json::array();
      for (int v : res.witness) wit.push_back(g.vertex_label(v));
      j["witness"] = wit;
      j["nodes"] = res.nodes;
      j["optimal"] = res.optimal;
      std::cout << j.dump(2) << "\n";
      return kExitPass;
    }

    VerificationReport report;
    report.command = command_echo;

    auto run_per_file = [&](const std::vector<std::string>& files,
                            const std::function<void(VerificationReport&, const std::string&)>& fn) {
      std::vector<VerificationReport> partial(files.size());
      std::vector<std::exception_ptr> errors(files.size());
      auto body = [&](int i) {
        try {
          fn(partial[i], files[i]);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      };
#ifdef _OPENMP
      if (jobs > 1) omp_set_num_threads(jobs);
#endif
      if (jobs > 1)
        for_each_index_omp(static_cast<int>(files.size()), body);
      else
        for_each_index_serial(static_cast<int>(files.size()), body);
      for (size_t i = 0; i < files.size(); ++i) {
        if (errors[i]) std::rethrow_exception(errors[i]);
        for (auto& c : partial[i].checks) report.checks.push_back(std::move(c));
      }
    };

    if (*v_digirth) {
      run_per_file(vd_files, [&](VerificationReport& r, const std::string& file) {
        PlaneDigraph g = load_pdg(file);
        auto girth = digirth(g);
        std::string actual = girth ? std::to_string(*girth) : "none";
        r.add(file + ": digirth", vd_expect < 0 || (girth && *girth == vd_expect),
              vd_expect < 0 ? "" : std::to_string(vd_expect), actual);
      });
      return finish(report, timer);
    }
    if (*v_fvs) {
      run_per_file(vf_files, [&](VerificationReport& r, const std::string& file) {
        PlaneDigraph g = load_pdg(file);
        FvsOptions opts;
        opts.node_budget = env_budget(vf_budget);
        try {
          auto audit = audit_upper_bound(g, opts);
          r.add(file + ": fvs <= (n-2)/(g-2)", audit.holds, "<= " + rat_str(audit.bound),
                std::to_string(audit.fvs), "upper bound theorem");
          r.add(file + ": equality only on C_g", audit.equality == audit.is_cg,
                "equality iff directed g-cycle", audit.equality ? "equality" : "strict");
          if (vf_expect >= 0)
            r.add(file + ": fvs value", audit.fvs == vf_expect, std::to_string(vf_expect),
                  std::to_string(audit.fvs));
        } catch (const Error& e) {
          if (e.code() == Errc::ResourceLimit)
            r.skipped(file + ": fvs audit", e.what());
          else if (e.code() == Errc::HypothesisViolated)
            r.add(file + ": hypotheses (simple, digirth >= 3, n >= 3)", false, "", e.what());
          else
            throw;
        }
      });
      return finish(report, timer);
    }
    if (*v_normal) {
      run_per_file(vn_files, [&](VerificationReport& r, const std::string& file) {
        report_normal(r, load_pdg(file), file, vn_expect);
      });
      return finish(report, timer);
    }
    if (*v_energy) {
      PlaneDigraph g = load_pdg(ve_graph);
      ordered_json spec = load_json(ve_cycles);
      auto cycles = cycles_from_json(g, spec.at("cycles"));
      bool normal = is_normal(g, cycles);
      report.add("cycle set is normal", normal, "normal", "");
      if (normal) {
        EnergyReport e = energies(g, cycles);
        report.add("energy identity", energy_identity_check(g, cycles), "exact",
                   "E_tot=" + rat_str(e.e_tot));
      }
      return finish(report, timer);
    }
    if (*v_coating) {
      Skeleton skel = load_psk(vc_skel);
      CoatingFunction h = load_cf(vc_cf, skel);
      Coating c = build_coating(skel, h);
      for (const auto& item : coating_stats_audit(c))
        report.add(item.name, item.pass, item.expected, item.actual);
      auto girth = digirth(c.graph);
      report.add("coating has directed cycles", girth.has_value(), "digirth finite",
                 girth ? std::to_string(*girth) : "none");
      FvsOptions fopts;
      fopts.node_budget = env_budget(10000000);
      auto fvs_audit = audit_coating_fvs(c, true, fopts);
      if (!fvs_audit.fvs_computed)
        report.skipped("fvs audit", fvs_audit.detail);
      else
        report.add("fvs audit (g-coating: fvs = n_G; otherwise bounds)", fvs_audit.pass,
                   "per coating theorems",
                   "fvs=" + std::to_string(fvs_audit.fvs) + " " + fvs_audit.detail);
      return finish(report, timer);
    }
    if (*v_recursive) {
      ordered_json spec = load_json(vr_family);
      ChainTemplate tmpl = chain_template_for(spec.at("base_g").get<int>());
      RecursiveFamily fam;
      fam.tmpl = tmpl;
      fam.values = spec.at("class_values").get<std::vector<int>>();
      ChainSkeleton c0 = build_chain_skeleton(tmpl, 0), c1 = build_chain_skeleton(tmpl, 1);
      fam.h0 = build_coating(c0.skeleton, chain_coating_function(c0, fam.values));
      fam.h1 = build_coating(c1.skeleton, chain_coating_function(c1, fam.values));
      fam.ring0_edges_g0 = c0.ring0_edges;
      fam.ring0_edges_g1 = c1.ring0_edges;
      auto cert = verify_recursive_digirth(fam, vr_g);
      report.add("digirth(H_0)", cert.digirth_h0 == vr_g, std::to_string(vr_g),
                 std::to_string(cert.digirth_h0));
      report.add("digirth(H_1)", cert.digirth_h1 == vr_g, std::to_string(vr_g),
                 std::to_string(cert.digirth_h1));
      report.add("link distances do not shrink", cert.ok, "d_H1 >= d_H0 per pair", cert.detail);
      return finish(report, timer);
    }
    if (*v_arbo) {
      Skeleton skel = load_psk(va_skel);
      auto result = fractional_arboricity(skel);
      ordered_json j;
      j["report_v"] = 1;
      j["command"] = command_echo;
      j["a_f"] = rat_str(result.value);
      ordered_json cert = ordered_json::array();
      for (int v : result.certificate.vertices) cert.push_back(skel.vertex_label(v));
      j["certificate"] = cert;
      ordered_json adm = ordered_json::array();
      for (int g2 = 3; g2 <= 64; ++g2)
        if (result.value == Rat(2 * g2, g2 + 2)) adm.push_back(g2);
      j["admissible_g"] = adm;
      if (!va_cert.empty()) {
        ordered_json fam_json = load_json(va_cert);
        WeightedForestFamily fam;
        std::map<int, int> by_label;
        for (int e = 0; e < skel.m(); ++e) by_label[skel.edge_label(e)] = e;
        for (const auto& jf : fam_json.at("forests")) {
          std::vector<int> edges;
          for (const auto& x : jf) edges.push_back(by_label.at(x.get<int>()));
          fam.forests.push_back(std::move(edges));
        }
        for (const auto& jw : fam_json.at("weights"))
          fam.weights.push_back(parse_rat(jw.get<std::string>()));
        Rat total(0);
        for (const auto& w : fam.weights) total += w;
        j["certificate_ok"] = verify_arborization(skel, fam, total);
        j["certificate_total"] = rat_str(total);
      }
      std::cout << j.dump(2) << "\n";
      return kExitPass;
    }
    if (*v_val) {
      PlaneDigraph g = load_pdg(vv_graph);
      ordered_json spec = load_json(vv_val);
      Valuation v;
      for (const auto& entry : spec.at("values")) {
        auto cycles = cycles_from_json(g, ordered_json::array({entry.at("cycle")}));
        v.add(cycles[0], entry.at("count").get<long long>());
      }
      ordered_json j;
      j["report_v"] = 1;
      j["command"] = command_echo;
      j["weight"] = v.weight();
      j["multiplicity"] = multiplicity(g, v);
      j["laminar"] = is_laminar_valuation(g, v);
      std::cout << j.dump(2) << "\n";
      return kExitPass;
    }
    if (*s_coating) {
      Skeleton skel = load_psk(sc_skel);
      CoatingSearchOptions opts;
      opts.budget = env_budget(sc_budget);
      auto h = search_coating_function(skel, sc_g, sc_perfect, opts);
      if (!h) {
        report.add("coating function exists", false,
                   "some h with digirth " + std::to_string(sc_g), "none (space exhausted)");
        return finish(report, timer);
      }
      std::string cf = print_cf(skel, *h);
      if (sc_out.empty() || sc_out == "-")
        std::cout << cf;
      else
        write_file(sc_out, cf);
      return kExitPass;
    }
    if (*coat) {
      Skeleton skel = load_psk(coat_skel);
      CoatingFunction h = load_cf(coat_cf, skel);
      Coating c = build_coating(skel, h);
      std::string pdg = print_pdg(c.graph);
      if (coat_out.empty() || coat_out == "-")
        std::cout << pdg;
      else
        write_file(coat_out, pdg);
      return kExitPass;
    }
    if (*rep_tau) {
      ordered_json j;
      j["report_v"] = 1;
      j["command"] = command_echo;
      ordered_json rows = ordered_json::array();
      int lo = tau_g > 0 ? tau_g : tau_from, hi = tau_g > 0 ? tau_g : tau_to;
      require(lo >= 6 && hi >= lo, Errc::ParseError, "need --g or --from/--to with g >= 6");
      for (int gg = lo; gg <= hi; ++gg) {
        TauBounds t = tau_report(gg);
        ordered_json row;
        row["g"] = gg;
        row["lower"] = rat_str(t.lower);
        row["upper"] = rat_str(t.upper);
        row["witness"] = t.witness;
        rows.push_back(row);
      }
      j["tau"] = rows;
      std::cout << j.dump(2) << "\n";
      return kExitPass;
    }
    if (*dump_svg_cmd) {
      PlaneDigraph g = load_pdg(ds_file);
      std::string svg = dump_svg(g);
      if (ds_out.empty() || ds_out == "-")
        std::cout << svg;
      else
        write_file(ds_out, svg);
      return kExitPass;
    }
    std::cerr << "no subcommand executed\n";
    return kExitParse;
  } catch (const Error& e) {
    switch (e.code()) {
      case Errc::ParseError:
        std::cerr << e.what() << "\n";
        return kExitParse;
      case Errc::ResourceLimit:
      case Errc::BudgetExhausted:
      case Errc::CycleBudgetExceeded:
      case Errc::TooLarge:
        std::cerr << e.what() << "\n";
        return kExitResource;
      default:
        std::cerr << e.what() << "\n";
        return kExitFail;
    }
  }
}
