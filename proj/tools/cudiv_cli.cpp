#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cudiv/config.hpp"
#include "cudiv/divisibility.hpp"
#include "cudiv/extnat.hpp"
#include "cudiv/model.hpp"
#include "cudiv/poly.hpp"
#include "cudiv/propsuite.hpp"
#include "cudiv/records.hpp"
#include "cudiv/setfamily.hpp"
#include "cudiv/villadsen.hpp"

namespace {

using Json = nlohmann::json;

// exit codes: 0 ok, 1 requested check failed, 2 usage, 3 input/schema, 4 guard
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInput = 3;
constexpr int kExitGuard = 4;

bool g_records = false;

void emit(const Json& record, const std::string& table_line) {
  if (g_records)
    std::cout << record.dump() << "\n";
  else
    std::cout << table_line << "\n";
}

int run_matrix_div(long long m, long long k) {
  cudiv::ExtNat v = cudiv::matrix_div(m, k);
  Json j{{"record", "matrix-div"}, {"m", m}, {"k", k}, {"value", v.is_infinite() ? Json("inf") : Json(v.value())}};
  emit(j, "matrix-div m=" + std::to_string(m) + " k=" + std::to_string(k) + " -> " + v.to_string());
  return 0;
}

int run_analyze(const std::string& model_path, long long m, const std::string& kind, long long cutoff) {
  cudiv::FiniteCuModel model = cudiv::load_model_file(model_path);
  Json header{{"record", "model"}, {"name", model.name}, {"size", model.size}, {"unit", model.unit}};
  emit(header, "model " + model.name + " (" + std::to_string(model.size) + " elements, unit " +
                   model.label(model.unit) + ")");
  std::vector<cudiv::DivKind> kinds;
  if (kind.empty())
    kinds = {cudiv::DivKind::Div, cudiv::DivKind::Decomp, cudiv::DivKind::WeakDiv, cudiv::DivKind::Cov};
  else
    kinds = {cudiv::div_kind_from_string(kind)};
  for (cudiv::DivKind k : kinds) {
    cudiv::DivisibilityReport rep = cudiv::least(model, model.unit, k, m, cutoff);
    Json j = cudiv::report_record(rep);
    j["record"] = "divisibility";
    std::string line = "  " + cudiv::to_string(k) + "_" + std::to_string(m) + " = " + rep.value.to_string();
    if (!rep.witness.elems.empty()) {
      line += "  witness:";
      for (int x : rep.witness.elems) line += " " + model.label(x);
    }
    if (!rep.proof_tag.empty()) line += "  [" + rep.proof_tag + "]";
    emit(j, line);
  }
  return 0;
}

int run_euler(const std::string& family_path) {
  cudiv::SetFamily f = cudiv::load_family_file(family_path);
  cudiv::HallCertificate hall = cudiv::hall_check(f);
  Json j{{"record", "euler"}, {"family", cudiv::family_record(f)}};
  std::string line;
  try {
    cudiv::MultilinearPoly p = cudiv::euler_of_family(f);
    j["polynomial"] = cudiv::poly_record(p);
    j["nonvanishing"] = !p.is_zero();
    line = "euler class: " + p.to_string() + (p.is_zero() ? " (vanishes)" : " (nonzero)");
  } catch (const cudiv::GuardError&) {
    j["polynomial"] = "term-budget-exceeded";
    j["nonvanishing"] = hall.feasible;
    line = std::string("euler class: term budget exceeded; transversal oracle says ") +
           (hall.feasible ? "nonzero" : "zero");
  }
  j["hall"] = cudiv::hall_certificate_record(hall);
  emit(j, line);
  return 0;
}

int run_hall(const std::string& family_path) {
  cudiv::SetFamily f = cudiv::load_family_file(family_path);
  cudiv::HallCertificate cert = cudiv::hall_check(f);
  Json j = cudiv::hall_certificate_record(cert);
  j["record"] = "hall";
  j["family"] = cudiv::family_record(f);
  if (cert.feasible) {
    std::string line = "feasible; transversal:";
    for (auto [member, element] : cert.transversal)
      line += " (" + std::to_string(member) + "->" + std::to_string(element) + ")";
    emit(j, line);
    return 0;
  }
  std::string line = "infeasible; violating members:";
  for (int i : cert.violator) line += " " + std::to_string(i);
  emit(j, line);
  return kExitCheckFailed;
}

int run_villadsen(const std::string& variant, long long N, int n, int k, int tensor_m) {
  using Variant = cudiv::ConstructionSpec::Variant;
  Variant v = cudiv::variant_from_string(variant);
  if (v == Variant::Simple1) {
    cudiv::ConstructionSpec spec = cudiv::build_simple1(N, n);
    Json jc = cudiv::construction_record(spec);
    jc["record"] = "construction";
    emit(jc, "simple1 N=" + std::to_string(N) + " n=" + std::to_string(n) + ": d_n=" + std::to_string(spec.d_n) +
                 " rank=" + std::to_string(spec.q.rank()));
    cudiv::CertifiedInterval iv = cudiv::verify_thm_simple(N, n);
    Json ji = cudiv::interval_record(iv);
    ji["record"] = "interval";
    emit(ji, "certified interval: (" + std::to_string(iv.lower) + ", " + iv.upper.to_string() + "]");
    return iv.lower_cert.proved ? 0 : kExitCheckFailed;
  }
  if (v == Variant::Simple2) {
    cudiv::DivmLowerBound res = cudiv::verify_lm_simple2(k, n);
    Json j = cudiv::divm_lower_record(res);
    j["record"] = "divm-lower";
    switch (res.status) {
      case cudiv::DivmLowerBound::Status::Proved:
        emit(j, "certified: the weak divisibility number at m=" + std::to_string(res.m) + " exceeds " +
                    std::to_string(res.bound));
        return 0;
      case cudiv::DivmLowerBound::Status::InfiniteByRank:
        emit(j, res.note);
        return 0;
      case cudiv::DivmLowerBound::Status::NotProved:
        emit(j, "not certified: the transversal check failed");
        return kExitCheckFailed;
    }
  }
  cudiv::InfTensorResult res = cudiv::verify_thm_inf_tensor(N, tensor_m, n);
  Json j = cudiv::inf_tensor_record(res);
  j["record"] = "inf-tensor";
  emit(j, std::string(res.proved ? "certified" : "not certified") + ": tensor weak-divisibility bound " +
              std::to_string(res.bound) + " across " + std::to_string(tensor_m) + " factors at stage " +
              std::to_string(n));
  return res.proved ? 0 : kExitCheckFailed;
}

int run_verify_suite(const std::string& filter, unsigned long long seed) {
  std::vector<cudiv::PropertyResult> results = cudiv::run_property_suites(filter, seed);
  Json header{{"record", "verify-suite"}, {"seed", seed}, {"filter", filter}};
  emit(header, "verify-suite seed=" + std::to_string(seed) + (filter.empty() ? "" : " filter=" + filter));
  bool all = true;
  for (const auto& r : results) {
    Json j{{"record", "property"}, {"name", r.name}, {"pass", r.pass}};
    if (!r.detail.empty()) j["detail"] = r.detail;
    emit(j, std::string(r.pass ? "PASS " : "FAIL ") + r.name + (r.detail.empty() ? "" : ": " + r.detail));
    all = all && r.pass;
  }
  return all ? 0 : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact divisibility solvers for finite Cuntz-semigroup models"};
  app.require_subcommand(1);

  std::string format = "table";
  app.add_option("--format", format, "output format: table or records")
      ->check(CLI::IsMember({"table", "records"}));

  auto* cmd_matrix = app.add_subcommand("matrix-div", "closed-form divisibility number of a matrix model");
  long long arg_m = 2, arg_k = 2;
  cmd_matrix->add_option("--m", arg_m, "divisor")->required();
  cmd_matrix->add_option("--k", arg_k, "matrix size")->required();

  auto* cmd_analyze = app.add_subcommand("analyze", "least-n reports for a model file");
  std::string arg_model, arg_kind;
  long long arg_cutoff = cudiv::kDefaultCutoff;
  cmd_analyze->add_option("--model", arg_model, "model file (canonical record format)")->required();
  cmd_analyze->add_option("--m", arg_m, "divisor")->required();
  cmd_analyze->add_option("--kind", arg_kind, "restrict to one kind: Div, Decomp, WeakDiv, Cov");
  cmd_analyze->add_option("--cutoff", arg_cutoff, "search cutoff for least-n");

  auto* cmd_euler = app.add_subcommand("euler", "product class of a family, with nonvanishing verdict");
  std::string arg_family;
  cmd_euler->add_option("--family", arg_family, "family file")->required();

  auto* cmd_hall = app.add_subcommand("hall", "transversal feasibility with certificate");
  cmd_hall->add_option("--family", arg_family, "family file")->required();

  auto* cmd_vill = app.add_subcommand("villadsen", "construction builders and certified bounds");
  std::string arg_variant = "simple1";
  long long arg_N = 1;
  int arg_n = 2, arg_kk = 1, arg_tm = 1;
  cmd_vill->add_option("--variant", arg_variant, "simple1 | simple2 | inf_tensor")->required();
  cmd_vill->add_option("--N", arg_N, "bound parameter (simple1, inf_tensor)");
  cmd_vill->add_option("--n", arg_n, "stage")->required();
  cmd_vill->add_option("--k", arg_kk, "power index (simple2: bounds at m = 2^k)");
  cmd_vill->add_option("--tensor-m", arg_tm, "number of tensor factors (inf_tensor)");

  auto* cmd_suite = app.add_subcommand("verify-suite", "run the invariant suites");
  std::string arg_filter;
  unsigned long long arg_seed = 0;
  cmd_suite->add_option("--filter", arg_filter, "substring filter on suite names");
  cmd_suite->add_option("--seed", arg_seed, "seed for the randomized sweeps")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  g_records = (format == "records");

  try {
    if (cmd_matrix->parsed()) return run_matrix_div(arg_m, arg_k);
    if (cmd_analyze->parsed()) return run_analyze(arg_model, arg_m, arg_kind, arg_cutoff);
    if (cmd_euler->parsed()) return run_euler(arg_family);
    if (cmd_hall->parsed()) return run_hall(arg_family);
    if (cmd_vill->parsed()) return run_villadsen(arg_variant, arg_N, arg_n, arg_kk, arg_tm);
    if (cmd_suite->parsed()) return run_verify_suite(arg_filter, arg_seed);
  } catch (const cudiv::GuardError& e) {
    std::cerr << "guard: " << e.what() << "\n";
    return kExitGuard;
  } catch (const cudiv::ModelError& e) {
    std::cerr << "model: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitUsage;
}
