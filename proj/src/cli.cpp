#include "entrec/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <functional>

#include "entrec/applications.hpp"
#include "entrec/general_recovery.hpp"
#include "entrec/json_io.hpp"

namespace entrec {
namespace {

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::ParseError, "cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    fail(ErrorKind::ParseError, "bad JSON in '" + path + "': " + e.what());
  }
}

SchmidtVector load_state(const std::string& path) { return state_from_json(load_json_file(path)); }

void emit(const Json& j, bool pretty, std::ostream& out) {
  if (pretty) {
    out << j.dump(2) << '\n';
  } else {
    out << j.dump() << '\n';
  }
}

// --- recover ----------------------------------------------------------------

Json recover_grouped(const SchmidtVector& psi, const SchmidtVector& phi,
                     const SchmidtVector& chi, const std::vector<int>& user_partition) {
  const NormalDecomposition nd = normal_decompose(psi, phi);
  const auto order = natural_order(nd);

  ConformalPartition partition;
  bool grouped = true;
  if (!user_partition.empty()) {
    partition.block_dims = user_partition;
    if (user_partition.size() == order.size()) {
      grouped = true;
    } else if (static_cast<int>(user_partition.size()) == nd.block_count()) {
      grouped = false;
    } else {
      fail(ErrorKind::BadPartition,
           "--partition must have one entry per grouped element (" +
               std::to_string(order.size()) + ") or per block (" +
               std::to_string(nd.block_count()) + ")");
    }
  } else {
    int needed = 0;
    for (const auto& g : order) {
      partition.block_dims.push_back(g.equal_group ? 1 : 2);
      needed += g.equal_group ? 1 : 2;
    }
    if (needed != chi.dim()) {
      fail(ErrorKind::BadPartition,
           "auxiliary dimension " + std::to_string(chi.dim()) + " does not match the canonical " +
               std::to_string(needed) + "; pass --partition explicitly");
    }
  }

  const bool ok = grouped ? check_grouped(psi, phi, chi, partition)
                          : check_per_block(psi, phi, chi, partition);
  Json j;
  j["method"] = "general";
  j["checker"] = grouped ? "grouped" : "per_block";
  j["partition"] = partition.block_dims;
  if (!ok) {
    // The conditions are sufficient only; failing them proves nothing.
    j["feasible"] = nullptr;
    j["outcome"] = "inconclusive";
    j["witness"] = nullptr;
    return j;
  }
  j["feasible"] = true;
  j["outcome"] = "feasible";
  GeneralWitness w = witness_general(psi, phi, chi, partition);
  j["witness"] = {{"epsilon", w.epsilon.str()},
                  {"omega", rationals_to_json(w.omega.coefficients())},
                  {"perturbed_pieces", w.perturbed_pieces}};
  j["entropy_gain"] = entropy(w.omega) - entropy(chi);
  return j;
}

Json do_recover(const SchmidtVector& psi, const SchmidtVector& phi, const SchmidtVector& chi,
                std::string method, int grid_depth, const std::vector<int>& user_partition) {
  if (method == "auto") {
    method = majorize(psi, phi).strict ? "strict" : "algorithm2";
  }
  if (method == "strict") {
    if (!majorize(psi, phi).strict) {
      fail(ErrorKind::NotStrict, "--method strict needs a strictly majorized pair");
    }
    StrictVerdict verdict = decide_strict(phi, chi);
    Json j = strict_verdict_to_json(verdict);
    j["method"] = "strict";
    if (verdict.feasible) {
      TransferWitness w = witness_strict(psi, phi, chi, verdict);
      j["witness"] = witness_to_json(w);
      j["entropy_gain"] = entropy(w.omega) - entropy(chi);
    } else {
      j["witness"] = nullptr;
    }
    return j;
  }
  if (method == "algorithm2") {
    Algorithm2Verdict verdict = algorithm2(psi, phi, chi);
    Json j;
    j["feasible"] = verdict.feasible;
    j["method"] = "algorithm2";
    j["pairs_examined"] = verdict.pairs_examined;
    if (verdict.witness) {
      j["witness"] = witness_to_json(*verdict.witness);
      j["entropy_gain"] = entropy(verdict.witness->omega) - entropy(chi);
    } else {
      j["witness"] = nullptr;
    }
    return j;
  }
  if (method == "oracle") {
    Json j;
    j["feasible"] = oracle(psi, phi, chi, grid_depth);
    j["method"] = "oracle";
    j["grid_depth"] = grid_depth;
    return j;
  }
  if (method == "general") {
    return recover_grouped(psi, phi, chi, user_partition);
  }
  fail(ErrorKind::BadParameters, "unknown method '" + method + "'");
}

// --- selftest ---------------------------------------------------------------

struct SelfCheck {
  const char* name;
  std::function<bool()> run;
};

SchmidtVector st(const std::vector<std::string>& raw, bool normalized = true) {
  return SchmidtVector::parse(raw, static_cast<int>(raw.size()), normalized);
}

std::vector<SelfCheck> selfchecks() {
  return {
      {"compact_form_worked_values",
       [] {
         CompactForm f = compact(st({"0.5", "0.25", "0.25"}));
         CompactForm g = compact(st({"0.5", "0.25", "0.25", "0"}));
         return f.values == std::vector<Rational>{Rational(1, 2), Rational(1, 4)} &&
                f.multiplicities == std::vector<int>{1, 2} &&
                g.multiplicities == std::vector<int>{1, 2, 1};
       }},
      {"uniformity_worked_values",
       [] {
         UniformityIndices a = indices(st({"0.5", "0.25", "0.25"}));
         UniformityIndices b = indices(st({"0.5", "0.25", "0.25", "0"}));
         return a.l_u == Rational(1, 2) && a.L_u == Rational(1, 2) && a.g_u == Rational(1, 2) &&
                b.l_u.is_zero() && b.g_u.is_zero() && b.L_u == Rational(1, 2);
       }},
      {"critical_ratio_triple",
       [] {
         SchmidtVector chi = st({"3/5", "2/5"});
         bool good = decide_strict(st({"3/10", "3/10", "1/5", "1/5"}), chi).feasible;
         bool bad1 = decide_strict(st({"3/8", "3/8", "1/4"}), chi).feasible;
         bool bad2 = decide_strict(st({"3/7", "2/7", "2/7"}), chi).feasible;
         return good && !bad1 && !bad2;
       }},
      {"concentration_2x2",
       [] {
         ConcentrationBounds b = concentration_bounds(Rational(3, 5), Rational(4, 5), 2);
         bool at = verify_concentration(st({"3/5", "2/5"}), st({"4/5", "1/5"}),
                                        st({"2/3", "1/3"}), 2);
         bool above = verify_concentration(st({"3/5", "2/5"}), st({"4/5", "1/5"}),
                                           st({"2003/3000", "997/3000"}), 2);
         return b.feasible && b.gamma_max == Rational(2, 3) && at && !above;
       }},
      {"mutual_catalysis_quad",
       [] {
         return mutual_catalysis_check(st({"0.33", "0.32", "0.3", "0.05"}),
                                       st({"0.6", "0.2", "0.14", "0.06"}),
                                       st({"0.6", "0.3", "0.1", "0"}),
                                       st({"0.46", "0.46", "0.08", "0"}))
             .is_mutual_catalysis;
       }},
      {"relabeled_transfer_feasible",
       [] {
         Algorithm2Verdict v =
             algorithm2(st({"0.33", "0.32", "0.3", "0.05"}), st({"0.46", "0.46", "0.08", "0"}),
                        st({"0.6", "0.3", "0.1", "0"}));
         return v.feasible && v.witness.has_value();
       }},
      {"entropy_values",
       [] {
         double a = entropy(st({"0.6", "0.3", "0.1", "0"}));
         double b = entropy(st({"0.6", "0.2", "0.14", "0.06"}));
         return std::abs(a - 1.2955) < 1e-3 && std::abs(b - 1.5472) < 1e-3;
       }},
      {"two_copy_threshold",
       [] {
         SchmidtVector phi = st({"3/16", "3/16", "3/16", "3/16", "1/8", "1/8"});
         SchmidtVector chi = st({"3/5", "2/5"});
         return !decide_strict(phi, chi).feasible &&
                decide_strict(phi, tensor(chi, chi)).feasible;
       }},
      {"transfer_sweep_example",
       [] {
         SchmidtVector psi = st({"11/20", "9/20"}), phi = st({"7/10", "3/10"});
         SchmidtVector chi = st({"3/5", "2/5"});
         auto eps = decide_pair(psi, phi, chi, make_perturbation(chi, 1, 2));
         return eps && *eps == Rational(1, 10);
       }},
      {"ratio_invariance_powers",
       [] {
         SchmidtVector chi = st({"3/5", "2/5"});
         for (int k = 1; k <= 6; ++k) {
           if (indices(tensor_power(chi, k)).L_u != Rational(2, 3)) return false;
         }
         return true;
       }},
  };
}

Json run_selftest(bool& all_pass) {
  Json results = Json::array();
  all_pass = true;
  for (const SelfCheck& check : selfchecks()) {
    bool pass = false;
    std::string note;
    try {
      pass = check.run();
    } catch (const std::exception& e) {
      note = e.what();
    }
    all_pass = all_pass && pass;
    Json entry = {{"name", check.name}, {"pass", pass}};
    if (!note.empty()) entry["note"] = note;
    results.push_back(std::move(entry));
  }
  return results;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact majorization toolkit for entanglement transformations"};
  app.name("entrec");
  app.require_subcommand(1);

  bool pretty = false, json_compact = false;
  app.add_flag("--pretty", pretty, "indent JSON output");
  app.add_flag("--json", json_compact, "compact JSON output (default)");

  std::string file_a, file_b, file_c, file_d;

  auto* cmd_majorize = app.add_subcommand("majorize", "prefix-sum comparison of two states");
  cmd_majorize->add_option("x", file_a)->required();
  cmd_majorize->add_option("y", file_b)->required();

  auto* cmd_indices = app.add_subcommand("indices", "uniformity indices and compact form");
  cmd_indices->add_option("state", file_a)->required();

  auto* cmd_entropy = app.add_subcommand("entropy", "entropy of entanglement");
  cmd_entropy->add_option("state", file_a)->required();

  auto* cmd_decompose = app.add_subcommand("decompose", "normal decomposition of a majorized pair");
  cmd_decompose->add_option("x", file_a)->required();
  cmd_decompose->add_option("y", file_b)->required();

  std::string method = "auto";
  int grid_depth = 20;
  std::vector<int> partition;
  std::string batch_file;
  auto* cmd_recover = app.add_subcommand("recover", "decide partial entanglement recovery");
  cmd_recover->add_option("psi", file_a);
  cmd_recover->add_option("phi", file_b);
  cmd_recover->add_option("chi", file_c);
  cmd_recover->add_option("--method", method)
      ->check(CLI::IsMember({"auto", "strict", "general", "algorithm2", "oracle"}));
  cmd_recover->add_option("--grid-depth", grid_depth);
  cmd_recover->add_option("--partition", partition)->delimiter(',');
  cmd_recover->add_option("--batch", batch_file, "JSON array of {psi, phi, chi, method?}");

  std::string scheme_name = "auto";
  auto* cmd_construct = app.add_subcommand("construct-aux", "build an auxiliary state");
  cmd_construct->add_option("psi", file_a)->required();
  cmd_construct->add_option("phi", file_b)->required();
  cmd_construct->add_option("--scheme", scheme_name)
      ->check(CLI::IsMember({"auto", "delta1", "deltan1", "delta1n1", "general"}));

  std::string a_str, b_str;
  int k_dim = 2;
  auto* cmd_concentrate =
      app.add_subcommand("concentrate", "maximally entangled state generation bounds/check");
  cmd_concentrate->add_option("psi", file_a);
  cmd_concentrate->add_option("phi", file_b);
  cmd_concentrate->add_option("chi", file_c);
  cmd_concentrate->add_option("--a", a_str);
  cmd_concentrate->add_option("--b", b_str);
  cmd_concentrate->add_option("--k", k_dim);

  auto* cmd_mutual = app.add_subcommand("mutual-catalysis", "joint transformation check");
  cmd_mutual->add_option("psi", file_a)->required();
  cmd_mutual->add_option("phi", file_b)->required();
  cmd_mutual->add_option("alpha", file_c)->required();
  cmd_mutual->add_option("beta", file_d)->required();

  auto* cmd_k0 = app.add_subcommand("multicopy-k0", "copy threshold for recovery");
  cmd_k0->add_option("chi", file_a)->required();
  cmd_k0->add_option("phi", file_b)->required();

  int copies = 1;
  std::string copy_mode = "source";
  auto* cmd_multicopy = app.add_subcommand("multicopy-recover", "strict decision on tensor powers");
  cmd_multicopy->add_option("psi", file_a)->required();
  cmd_multicopy->add_option("phi", file_b)->required();
  cmd_multicopy->add_option("chi", file_c)->required();
  cmd_multicopy->add_option("--copies", copies)->required();
  cmd_multicopy->add_option("--mode", copy_mode)->check(CLI::IsMember({"source", "aux"}));

  auto* cmd_selftest = app.add_subcommand("selftest", "run the bundled example suite");

  // Let global flags like --pretty appear after the subcommand.
  for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

  std::vector<const char*> argv;
  argv.push_back("entrec");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());

    if (cmd_majorize->parsed()) {
      emit(report_to_json(majorize(load_state(file_a), load_state(file_b))), pretty, out);
    } else if (cmd_indices->parsed()) {
      SchmidtVector v = load_state(file_a);
      Json j = indices_to_json(indices(v));
      j["entropy"] = entropy(v);
      j["compact"] = compact_to_json(compact(v));
      emit(j, pretty, out);
    } else if (cmd_entropy->parsed()) {
      emit(Json{{"entropy", entropy(load_state(file_a))}}, pretty, out);
    } else if (cmd_decompose->parsed()) {
      emit(decomposition_to_json(normal_decompose(load_state(file_a), load_state(file_b))),
           pretty, out);
    } else if (cmd_recover->parsed()) {
      if (!batch_file.empty()) {
        Json instances = load_json_file(batch_file);
        if (!instances.is_array()) fail(ErrorKind::ParseError, "--batch file must be an array");
        Json results = Json::array();
        int worst = 0;
        for (const Json& inst : instances) {
          try {
            results.push_back(do_recover(state_from_json(inst.at("psi")),
                                          state_from_json(inst.at("phi")),
                                          state_from_json(inst.at("chi")),
                                          inst.value("method", method), grid_depth, partition));
          } catch (const Error& e) {
            results.push_back(Json{{"error", {{"kind", to_string(e.kind())},
                                              {"message", e.what()}}}});
            worst = std::max(worst, e.internal() ? 3 : 2);
          } catch (const Json::exception& e) {
            results.push_back(Json{{"error", {{"kind", "parse_error"}, {"message", e.what()}}}});
            worst = std::max(worst, 2);
          }
        }
        emit(results, pretty, out);
        return worst;
      }
      if (file_a.empty() || file_b.empty() || file_c.empty()) {
        fail(ErrorKind::BadParameters, "recover needs psi, phi, chi (or --batch)");
      }
      emit(do_recover(load_state(file_a), load_state(file_b), load_state(file_c), method,
                      grid_depth, partition),
           pretty, out);
    } else if (cmd_construct->parsed()) {
      Scheme scheme = scheme_name == "delta1"     ? Scheme::Delta1
                      : scheme_name == "deltan1"  ? Scheme::DeltaN1
                      : scheme_name == "delta1n1" ? Scheme::Delta1N1
                      : scheme_name == "general"  ? Scheme::General
                                                  : Scheme::Auto;
      AuxConstruction c = construct_aux(load_state(file_a), load_state(file_b), scheme);
      Json slacks = Json::object();
      for (const auto& [name, value] : c.slacks) slacks[name] = value.str();
      Json j = {{"chi", state_to_json(c.chi)},
                {"partition", c.partition.block_dims},
                {"scheme", to_string(c.scheme)},
                {"checker", c.grouped ? "grouped" : "per_block"},
                {"slacks", slacks}};
      emit(j, pretty, out);
    } else if (cmd_concentrate->parsed()) {
      if (!a_str.empty() || !b_str.empty()) {
        if (a_str.empty() || b_str.empty()) {
          fail(ErrorKind::BadParameters, "bounds mode needs both --a and --b");
        }
        ConcentrationBounds bounds = concentration_bounds(
            Rational::from_string(a_str), Rational::from_string(b_str), k_dim);
        emit(Json{{"mode", "bounds"},
                  {"k", bounds.k},
                  {"gamma_min", bounds.gamma_min.str()},
                  {"gamma_max", bounds.gamma_max.str()},
                  {"feasible", bounds.feasible}},
             pretty, out);
      } else {
        if (file_a.empty() || file_b.empty() || file_c.empty()) {
          fail(ErrorKind::BadParameters, "verify mode needs psi, phi, chi");
        }
        bool ok = verify_concentration(load_state(file_a), load_state(file_b),
                                       load_state(file_c), k_dim);
        emit(Json{{"mode", "verify"}, {"k", k_dim}, {"feasible", ok}}, pretty, out);
      }
    } else if (cmd_mutual->parsed()) {
      MutualCatalysisReport r =
          mutual_catalysis_check(load_state(file_a), load_state(file_b), load_state(file_c),
                                 load_state(file_d));
      emit(Json{{"psi_to_phi", r.psi_to_phi},
                {"alpha_to_beta", r.alpha_to_beta},
                {"joint", r.joint},
                {"trivial_cross", r.trivial_cross},
                {"is_mutual_catalysis", r.is_mutual_catalysis}},
           pretty, out);
    } else if (cmd_k0->parsed()) {
      emit(Json{{"k0", multicopy_k0(load_state(file_a), load_state(file_b))}}, pretty, out);
    } else if (cmd_multicopy->parsed()) {
      StrictVerdict verdict = multicopy_recover(
          load_state(file_a), load_state(file_b), load_state(file_c), copies,
          copy_mode == "aux" ? MulticopyMode::AuxCopies : MulticopyMode::SourceCopies);
      Json j = strict_verdict_to_json(verdict);
      j["copies"] = copies;
      j["mode"] = copy_mode;
      emit(j, pretty, out);
    } else if (cmd_selftest->parsed()) {
      bool all_pass = false;
      Json results = run_selftest(all_pass);
      emit(Json{{"all_pass", all_pass}, {"checks", results}}, pretty, out);
      return all_pass ? 0 : 3;
    }
    return 0;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help() << '\n';
      return 0;
    }
    err << Json{{"error", {{"kind", "cli_usage"}, {"message", e.what()}}}}.dump() << '\n';
    return 2;
  } catch (const Error& e) {
    err << Json{{"error", {{"kind", to_string(e.kind())}, {"message", e.what()}}}}.dump() << '\n';
    return e.internal() ? 3 : 2;
  } catch (const Json::exception& e) {
    err << Json{{"error", {{"kind", "parse_error"}, {"message", e.what()}}}}.dump() << '\n';
    return 2;
  }
}

}  // namespace entrec
