// dlim: derived limits, metrics on order complexes and the verification suite.
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "dlim/commands.hpp"

namespace {

int emit(const dlim::Report& report, const std::string& output) {
  std::cout << report.text << "\n";
  if (!output.empty()) {
    std::ofstream out(output, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write '" << output << "'\n";
      return 2;
    }
    out << report.json.dump(2) << "\n";
  }
  return report.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Derived limits over finite posets and metrics on order complexes"};
  app.require_subcommand(1);

  std::string input, output, subcommand, field = "q", suite = "all";
  std::optional<dlim::Index> max_degree, gap_family;
  std::uint64_t seed = 42;
  bool timing = false;

  auto* limp = app.add_subcommand("limp", "derived limits lim^p of a diagram of abelian groups");
  limp->add_option("--input", input, "diagram JSON")->required();
  limp->add_option("--max-degree", max_degree, "highest degree to report");
  limp->add_option("--output", output, "write the JSON report here");

  auto* metric = app.add_subcommand("metric", "exact distances on a finite metric space");
  metric->add_option("kind", subcommand, "hausdorff | kantorovich | hm | simhyp")
      ->required()
      ->check(CLI::IsMember({"hausdorff", "kantorovich", "hm", "simhyp"}));
  metric->add_option("--input", input, "metric space JSON with subsets, measures, chains or hyperpoints");
  metric->add_option("--gap-family", gap_family, "hm: the chain pair with L1 = 1 and rho = 1/N")
      ->check(CLI::PositiveNumber);
  metric->add_option("--output", output, "write the JSON report here");

  auto* e2 = app.add_subcommand("e2", "E2 page and consistency checks for a diagram of complexes");
  e2->add_option("--input", input, "space diagram JSON")->required();
  e2->add_option("--field", field, "q or z")->check(CLI::IsMember({"q", "z"}));
  e2->add_option("--output", output, "write the JSON report here");

  auto* verify = app.add_subcommand("verify", "run the acceptance suite");
  verify->add_option("--suite", suite, "all | metrics | limits | spectral")
      ->check(CLI::IsMember({"all", "metrics", "limits", "spectral"}));
  verify->add_option("--seed", seed, "random seed");
  verify->add_option("--output", output, "write the JSON report here");
  verify->add_flag("--timing", timing, "include elapsed times in the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*limp) return emit(dlim::cmd_limp(dlim::read_text_file(input), input, max_degree), output);
    if (*metric) {
      std::optional<std::string> text;
      if (!input.empty()) text = dlim::read_text_file(input);
      return emit(dlim::cmd_metric(subcommand, text, input, gap_family), output);
    }
    if (*e2)
      return emit(dlim::cmd_e2(dlim::read_text_file(input), input,
                               field == "z" ? dlim::Field::integers : dlim::Field::rational),
                  output);
    if (*verify) return emit(dlim::cmd_verify(*dlim::parse_suite(suite), seed, timing), output);
  } catch (const dlim::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
