// reflect96 CLI: exact reconstruction and verification of the representation
// theory of the order-96 unitary reflection group H1 (Shephard-Todd No. 8),
// with exports for the character table, tensor-power diagram, centralizer
// dimensions, Molien series, and the coding-theory checks.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "reflect96/bratteli.hpp"
#include "reflect96/exports.hpp"
#include "reflect96/verify.hpp"

namespace {

std::size_t closure_bound_from_env() {
  const char* v = std::getenv("REFLECT96_MAX_CLOSURE");
  if (!v) return reflect96::kDefaultClosureBound;
  char* end = nullptr;
  unsigned long long n = std::strtoull(v, &end, 10);
  if (end == v || *end != '\0' || n == 0) {
    throw reflect96::parse_error("REFLECT96_MAX_CLOSURE must be a positive integer");
  }
  return static_cast<std::size_t>(n);
}

void emit(const std::string& content, const std::string& path) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw reflect96::parse_error("cannot open output file: " + path);
  out << content;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw reflect96::parse_error("cannot open input file: " + path);
  return std::string(std::istreambuf_iterator<char>(in),
                     std::istreambuf_iterator<char>());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact representation-theory engine for the order-96 unitary "
               "reflection group (Shephard-Todd No. 8)"};
  app.require_subcommand(1);

  std::string output_path;
  app.add_option("-o,--output", output_path, "write output to a file (default stdout)");

  auto* cmd_group = app.add_subcommand("group", "group order, classes, order row");

  auto* cmd_irreps =
      app.add_subcommand("irreps", "generator images and characters per irrep");

  auto* cmd_chartab = app.add_subcommand("chartab", "the 16x16 character table");
  std::string chartab_format = "csv";
  cmd_chartab->add_option("--format", chartab_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  auto* cmd_decomp =
      app.add_subcommand("decompose", "multiplicities of chi_i * chi_j");
  int dec_i = 10, dec_j = 1;
  cmd_decomp->add_option("--i", dec_i, "first character label")
      ->required()
      ->check(CLI::Range(1, 16));
  cmd_decomp->add_option("--j", dec_j, "second character label")
      ->required()
      ->check(CLI::Range(1, 16));

  auto* cmd_bratteli = app.add_subcommand("bratteli", "tensor-power diagram");
  int levels = 9;
  std::string bratteli_format = "json";
  cmd_bratteli->add_option("--levels", levels, "number of levels (>= 1)")
      ->check(CLI::PositiveNumber);
  cmd_bratteli->add_option("--format", bratteli_format, "dot or json")
      ->check(CLI::IsMember({"dot", "json"}));

  auto* cmd_dims =
      app.add_subcommand("dims", "centralizer dimensions, four routes");
  int max_k = 20;
  bool dims_check = false;
  cmd_dims->add_option("--max-k", max_k, "largest tensor power")
      ->check(CLI::PositiveNumber);
  cmd_dims->add_flag("--check", dims_check, "exit 1 unless all routes agree");

  auto* cmd_molien = app.add_subcommand("molien", "Molien series of one irrep");
  int rep_label = 10, series_order = 40;
  cmd_molien->add_option("--rep", rep_label, "irrep label 1..16")
      ->check(CLI::Range(1, 16));
  cmd_molien->add_option("--order", series_order, "truncation order")
      ->check(CLI::PositiveNumber);

  auto* cmd_codes =
      app.add_subcommand("codes", "weight enumerator, predicates, invariance");
  std::string codes_file;
  cmd_codes->add_option("--file", codes_file, "generator rows, one 0/1 line each")
      ->required();

  auto* cmd_theta = app.add_subcommand("theta", "modular-form q-expansion");
  std::string theta_file;
  int theta_order = 10;
  cmd_theta->add_option("--file", theta_file, "generator rows, one 0/1 line each")
      ->required();
  cmd_theta->add_option("--order", theta_order, "q-expansion order")
      ->check(CLI::PositiveNumber);

  auto* cmd_verify =
      app.add_subcommand("verify-all", "run every check; exit 0 only on full agreement");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // usage problems exit 2, --help exits 0
  }

  try {
    reflect96::Context ctx = reflect96::Context::build(closure_bound_from_env());

    if (cmd_group->parsed()) {
      emit(reflect96::group_json(ctx), output_path);
    } else if (cmd_irreps->parsed()) {
      emit(reflect96::irreps_json(ctx.irreps), output_path);
    } else if (cmd_chartab->parsed()) {
      emit(chartab_format == "csv" ? reflect96::chartab_csv(ctx.table)
                                   : reflect96::chartab_json(ctx.table),
           output_path);
    } else if (cmd_decomp->parsed()) {
      emit(reflect96::decomposition_json(ctx, dec_i, dec_j), output_path);
    } else if (cmd_bratteli->parsed()) {
      reflect96::BratteliDiagram d = reflect96::build_diagram(levels, ctx.table);
      emit(bratteli_format == "dot" ? reflect96::to_dot(d) : reflect96::to_json(d),
           output_path);
    } else if (cmd_dims->parsed()) {
      emit(reflect96::dims_json(ctx, max_k), output_path);
      if (dims_check && !reflect96::dims_agree(ctx, max_k)) return 1;
    } else if (cmd_molien->parsed()) {
      emit(reflect96::molien_json(ctx, rep_label, series_order), output_path);
    } else if (cmd_codes->parsed()) {
      reflect96::BinaryCode code = reflect96::BinaryCode::parse(slurp(codes_file));
      emit(reflect96::codes_json(code, ctx), output_path);
    } else if (cmd_theta->parsed()) {
      reflect96::BinaryCode code = reflect96::BinaryCode::parse(slurp(theta_file));
      emit(reflect96::theta_json(code, theta_order), output_path);
    } else if (cmd_verify->parsed()) {
      reflect96::CheckReport report = reflect96::run_all_checks(ctx);
      emit(reflect96::report_json(report), output_path);
      if (!report.all_pass()) return 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
