// verify: runs the named verification suites and writes JSON reports or DOT
// graph exports.  Two extra commands handle the relator interchange format:
//
//   verify relators <a3|affine_a5|petersen> [--no-deflation] [--out file]
//   verify enumerate <relator-file> [--budget N] [--table]
//
// Exit codes: 0 every check passed, 1 some check failed, 2 usage error,
// 3 internal error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "oddpres/coset_enum.hpp"
#include "oddpres/presentation.hpp"
#include "oddpres/verify.hpp"

namespace {

namespace fs = std::filesystem;
using namespace oddpres;

constexpr int kUsage = 2;
constexpr int kInternal = 3;

void emit(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + out);
  f << text;
}

int run_suite_command(verify::Suite suite, const verify::SuiteOptions& options, const std::string& format,
                      const std::string& out) {
  if (format == "dot") {
    const fs::path dir = out.empty() ? fs::path(".") : fs::path(out);
    fs::create_directories(dir);
    for (const auto& f : verify::dot_exports(suite, options)) {
      emit(f.contents, (dir / f.name).string());
      std::cerr << "wrote " << (dir / f.name).string() << "\n";
    }
    return 0;
  }
  const auto reports = verify::run_suite(suite, options);
  emit(verify::to_json(suite, reports).dump(2) + "\n", out);
  for (const auto& r : reports) {
    std::cerr << verify::to_string(r.status) << "  " << r.check_id;
    if (r.n) std::cerr << " n=" << *r.n;
    std::cerr << "\n";
  }
  return verify::exit_code(reports);
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot read " + path);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification suites for reflection-group presentations of W(E6)"};
  app.require_subcommand(1);

  verify::SuiteOptions options;
  std::optional<int> n;
  std::string out;
  std::string format = "json";

  std::vector<std::pair<verify::Suite, CLI::App*>> suites;
  for (const std::string& name : verify::suite_names()) {
    auto* sub = app.add_subcommand(name, "run the " + name + " checks");
    sub->add_option("--n", n, "dimension for Gosset-dependent checks")->check(CLI::Range(2, 4));
    sub->add_option("--max-n", options.max_n, "largest n for the congruence kernel checks")->check(CLI::Range(2, 7));
    sub->add_option("--budget", options.budget, "coset budget for enumerations")->check(CLI::PositiveNumber);
    sub->add_option("--out", out, "report file (json) or output directory (dot)");
    sub->add_option("--format", format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
    sub->add_option("--seed", options.seed, "seed for random braid identity vectors");
    suites.emplace_back(verify::parse_suite(name), sub);
  }

  std::string kind_name;
  bool no_deflation = false;
  auto* relators = app.add_subcommand("relators", "print a presentation in relator text format");
  relators->add_option("kind", kind_name, "a3, affine_a5 or petersen")->required();
  relators->add_flag("--no-deflation", no_deflation, "omit deflation relators");
  relators->add_option("--out", out, "output file");

  std::string file;
  bool dump_table = false;
  auto* enumerate = app.add_subcommand("enumerate", "coset-enumerate a relator file over the trivial subgroup");
  enumerate->add_option("file", file, "relator text file")->required()->check(CLI::ExistingFile);
  enumerate->add_option("--budget", options.budget, "coset budget")->check(CLI::PositiveNumber);
  enumerate->add_flag("--table", dump_table, "print the standardized coset table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }
  options.n = n;

  std::string suite_name;
  try {
    if (relators->parsed()) {
      const auto p = presentation::build_presentation(presentation::parse_kind(kind_name), !no_deflation);
      emit(presentation::to_relator_text(p), out);
      return 0;
    }
    if (enumerate->parsed()) {
      const auto input = presentation::parse_relator_text(slurp(file));
      const auto table = coset_enum::todd_coxeter(static_cast<int>(input.generators.size()), input.relators, {},
                                                  options.budget);
      if (dump_table) {
        std::cout << table.to_text(input.generators);
      } else {
        std::cout << coset_enum::to_string(table.status()) << ' ' << table.live_count() << "\n";
      }
      return table.closed() ? 0 : 1;
    }
    for (const auto& [suite, sub] : suites) {
      if (!sub->parsed()) continue;
      suite_name = sub->get_name();
      return run_suite_command(suite, options, format, out);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    nlohmann::json err = {{"version", verify::kReportVersion}, {"suite", suite_name}, {"error", e.what()}};
    std::cout << err.dump(2) << "\n";
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}
