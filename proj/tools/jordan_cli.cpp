#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <map>
#include <string>

#include "jordan/cgc.hpp"
#include "jordan/json_io.hpp"
#include "jordan/render.hpp"
#include "jordan/suites.hpp"
#include "jordan/uh_rep.hpp"

namespace {

using namespace jordan;

const std::map<std::string, uh::Gen> kGenByName = {
    {"H", uh::Gen::H},           {"X", uh::Gen::X},
    {"Y", uh::Gen::Y},           {"Z+", uh::Gen::Zplus},
    {"Z-", uh::Gen::Zminus},     {"expHX", uh::Gen::ExpHX},
    {"expNegHX", uh::Gen::ExpNegHX}, {"coshHalfInv", uh::Gen::CoshHalfInv},
    {"sinhHX", uh::Gen::SinhOverH}};

int default_max_2j() {
  if (const char* env = std::getenv("JORDAN_MAX_2J")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v >= 0 && v <= 64) return static_cast<int>(v);
    std::cerr << "warning: ignoring invalid JORDAN_MAX_2J value\n";
  }
  return 8;
}

int run_rep(int twice_j, const std::string& gen, const std::string& basis,
            const std::string& format) {
  HalfInt j = half(twice_j);
  PolyMat v_mat = uh::generator_matrix(kGenByName.at(gen), j);
  SqrtPolyMat mat = basis == "e" ? su2::to_e_basis(v_mat, j) : sqrt_lift(v_mat);
  if (format == "json") {
    jsonio::json args{{"twice_j", twice_j}, {"gen", gen}, {"basis", basis}};
    std::cout << jsonio::output_record("rep", args, jsonio::encode_matrix(mat)).dump(2) << "\n";
  } else if (format == "latex") {
    std::cout << matrix_latex(mat) << "\n";
  } else {
    std::cout << matrix_text(mat);
  }
  return 0;
}

int run_cgc(int twice_j1, int twice_j2, int twice_j, int twice_m, bool has_j, bool has_m,
            const std::string& format) {
  HalfInt j1 = half(twice_j1), j2 = half(twice_j2);
  cgc::CgcTable full = cgc::deformed_cgc_table(j1, j2);

  cgc::CgcTable table{j1, j2, {}};
  for (const auto& [key, value] : full.entries) {
    if (has_j && key.j.twice() != twice_j) continue;
    if (has_m && key.m.twice() != twice_m) continue;
    table.entries.emplace(key, value);
  }
  if (table.entries.empty())
    std::cerr << "warning: no admissible entries for the requested filter\n";

  if (format == "json") {
    jsonio::json args{{"twice_j1", twice_j1}, {"twice_j2", twice_j2}};
    if (has_j) args["twice_j"] = twice_j;
    if (has_m) args["twice_m"] = twice_m;
    std::cout << jsonio::output_record("cgc", args, jsonio::encode_table(table)).dump(2) << "\n";
    return 0;
  }
  for (auto [j, m] : cgc::col_labels(j1, j2)) {
    if (has_j && j.twice() != twice_j) continue;
    if (has_m && m.twice() != twice_m) continue;
    for (auto [n1, n2] : cgc::row_labels(j1, j2)) {
      const auto& value = table.at(j, n1, n2, m);
      std::string text = format == "latex" ? to_latex(value) : to_text(value);
      std::cout << "C[j=" << j.str() << " m=" << m.str() << " | n1=" << n1.str()
                << " n2=" << n2.str() << "] = " << text << "\n";
    }
  }
  return 0;
}

int run_verify(const std::string& suite, int max_2j, std::uint64_t seed) {
  suites::Options opt;
  opt.max_2j = max_2j;
  opt.seed = seed;
  auto reports = suites::run(suite, opt);
  int failed = 0;
  for (const auto& r : reports) {
    if (r.pass) {
      std::cout << "[PASS] " << r.name << "\n";
    } else {
      ++failed;
      std::cout << "[FAIL] " << r.name << ": " << r.detail << "\n";
    }
  }
  std::cout << reports.size() << " checks, " << failed << " failed\n";
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact representation matrices and Clebsch-Gordan tables for the "
      "Jordanian quantum algebra U_h(sl(2)). All spin arguments are doubled "
      "integers (--j 3 means j = 3/2); all results are exact, with h formal."};
  app.require_subcommand(1);

  // rep
  auto* rep = app.add_subcommand("rep", "Print one generator matrix on V^(j)");
  int twice_j = 0;
  std::string gen = "H", basis = "v", format = "text";
  rep->add_option("--j", twice_j, "2j (doubled spin)")->required()->check(CLI::NonNegativeNumber);
  std::vector<std::string> gen_names;
  for (const auto& [name, g] : kGenByName) gen_names.push_back(name);
  rep->add_option("--gen", gen, "generator")->check(CLI::IsMember(gen_names));
  rep->add_option("--basis", basis, "basis")->check(CLI::IsMember({"v", "e"}));
  rep->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json", "latex"}));

  // cgc
  auto* cgc_cmd = app.add_subcommand("cgc", "Print a Clebsch-Gordan table");
  int twice_j1 = 0, twice_j2 = 0, twice_jf = 0, twice_mf = 0;
  std::string cgc_format = "text";
  cgc_cmd->add_option("--j1", twice_j1, "2j1 (doubled spin)")->required()->check(CLI::NonNegativeNumber);
  cgc_cmd->add_option("--j2", twice_j2, "2j2 (doubled spin)")->required()->check(CLI::NonNegativeNumber);
  auto* jopt = cgc_cmd->add_option("--j", twice_jf, "filter by 2j");
  auto* mopt = cgc_cmd->add_option("--m", twice_mf, "filter by 2m");
  cgc_cmd->add_option("--format", cgc_format, "output format")
      ->check(CLI::IsMember({"text", "json", "latex"}));

  // verify
  auto* verify = app.add_subcommand("verify", "Run exact verification suites");
  std::string suite = "all";
  int max_2j = default_max_2j();
  std::uint64_t seed = 1;
  verify->add_option("--suite", suite, "suite to run")
      ->check(CLI::IsMember({"relations", "coproduct", "props", "cgc", "lemmas", "all"}));
  verify->add_option("--max-2j", max_2j, "spin bound (doubled)")->check(CLI::NonNegativeNumber);
  verify->add_option("--seed", seed, "seed for randomized cases");

  CLI11_PARSE(app, argc, argv);

  try {
    if (rep->parsed()) return run_rep(twice_j, gen, basis, format);
    if (cgc_cmd->parsed())
      return run_cgc(twice_j1, twice_j2, twice_jf, twice_mf, jopt->count() > 0,
                     mopt->count() > 0, cgc_format);
    return run_verify(suite, max_2j, seed);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
