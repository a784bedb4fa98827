// lpi: command-line front end over the lpinterp C API.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "lpinterp/lpinterp.h"

namespace {

struct ProblemDeleter {
  void operator()(lpi_problem* p) const { lpi_problem_free(p); }
};
struct TextDeleter {
  void operator()(lpi_text* t) const { lpi_text_free(t); }
};
using ProblemHandle = std::unique_ptr<lpi_problem, ProblemDeleter>;
using TextHandle = std::unique_ptr<lpi_text, TextDeleter>;

struct Arguments {
  std::string problem;
  std::string lattice;
  std::uint64_t cap = 0;
  std::uint64_t seed = 0;
  std::uint64_t samples = 0;
  unsigned arity = 0;
  std::string format = "text";
};

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

int report_error(lpi_status status) {
  std::cerr << "lpi: " << lpi_last_error() << '\n';
  return static_cast<int>(status);
}

// A lattice argument names a file when one exists at that path, otherwise it
// is taken as an inline lattice term.
std::optional<std::string> lattice_text(const std::string& argument) {
  if (argument.empty()) return std::nullopt;
  std::error_code ec;
  if (std::filesystem::is_regular_file(argument, ec)) return read_file(argument);
  return argument;
}

int print(lpi_status status, lpi_text* raw) {
  TextHandle text(raw);
  if (status != LPI_OK && status != LPI_NEGATIVE) return report_error(status);
  std::fwrite(lpi_text_data(text.get()), 1, lpi_text_size(text.get()), stdout);
  return static_cast<int>(status);
}

int run_problem_command(lpi_command command, const Arguments& args) {
  std::optional<std::string> text;
  std::string base_dir;
  if (!args.problem.empty()) {
    text = read_file(args.problem);
    if (!text) {
      std::cerr << "lpi: cannot read problem file " << args.problem << '\n';
      return LPI_INPUT_ERROR;
    }
    base_dir = std::filesystem::path(args.problem).parent_path().string();
  }
  const auto lattice = lattice_text(args.lattice);
  if (!args.lattice.empty() && !lattice) {
    std::cerr << "lpi: cannot read lattice file " << args.lattice << '\n';
    return LPI_INPUT_ERROR;
  }
  if (!text && !lattice) {
    std::cerr << "lpi: a problem file or a lattice is required\n";
    return LPI_INPUT_ERROR;
  }

  lpi_problem* raw = nullptr;
  const lpi_status parsed = lpi_problem_parse(text ? text->c_str() : nullptr, base_dir.c_str(),
                                              lattice ? lattice->c_str() : nullptr, &raw);
  if (parsed != LPI_OK) return report_error(parsed);
  ProblemHandle problem(raw);

  lpi_options options;
  lpi_options_init(&options);
  if (args.cap) options.cap = args.cap;
  if (args.seed) options.seed = args.seed;
  if (args.samples) options.samples = args.samples;
  options.arity = args.arity;
  options.format = args.format == "machine" ? LPI_FORMAT_MACHINE : LPI_FORMAT_TEXT;

  lpi_text* out = nullptr;
  const lpi_status status = lpi_run(command, problem.get(), &options, &out);
  return print(status, out);
}

int run_from_utility(const Arguments& args) {
  const auto text = read_file(args.problem);
  if (!text) {
    std::cerr << "lpi: cannot read utility file " << args.problem << '\n';
    return LPI_INPUT_ERROR;
  }
  const auto lattice = lattice_text(args.lattice);
  const std::string base_dir = std::filesystem::path(args.problem).parent_path().string();
  lpi_text* out = nullptr;
  const lpi_status status = lpi_from_utility(text->c_str(), base_dir.c_str(),
                                             lattice ? lattice->c_str() : nullptr, &out);
  return print(status, out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lattice polynomial interpolation on finite distributive lattices"};
  app.require_subcommand(1);
  app.set_version_flag("--version", lpi_version());

  Arguments args;
  const auto add_common = [&](CLI::App* sub, bool needs_problem) {
    auto* problem = sub->add_option("problem,--problem", args.problem, "Problem file");
    if (needs_problem) problem->required();
    sub->add_option("--lattice", args.lattice, "Lattice term or lattice file (overrides LATTICE)");
    sub->add_option("--format", args.format, "Output format")
        ->check(CLI::IsMember({"text", "machine"}));
  };

  struct Entry {
    const char* name;
    const char* help;
    lpi_command command;
  };
  const Entry entries[] = {
      {"solve", "Decide feasibility and describe all interpolants of a cuboid problem", LPI_CMD_SOLVE},
      {"enumerate", "List every interpolant in lexicographic coefficient order", LPI_CMD_ENUMERATE},
      {"oracle", "List interpolants by exhaustive search over all polynomial functions", LPI_CMD_ORACLE},
      {"goodstein", "Decide interpolation of a function on the Boolean cube", LPI_CMD_GOODSTEIN},
      {"rg", "Check the pairwise separation condition on the given points", LPI_CMD_RG},
      {"eval", "Evaluate the POLY section (or the canonical interpolant)", LPI_CMD_EVAL},
      {"check", "Random cross-check of the solver against the oracle", LPI_CMD_CHECK},
  };

  std::optional<lpi_command> selected;
  for (const auto& entry : entries) {
    auto* sub = app.add_subcommand(entry.name, entry.help);
    const bool is_check = entry.command == LPI_CMD_CHECK;
    add_common(sub, !is_check);
    if (entry.command == LPI_CMD_SOLVE || entry.command == LPI_CMD_ENUMERATE ||
        entry.command == LPI_CMD_ORACLE || is_check)
      sub->add_option("--cap", args.cap, "Refuse work beyond this many candidates")
          ->check(CLI::PositiveNumber);
    if (is_check) {
      sub->add_option("--seed", args.seed, "Random seed");
      sub->add_option("--samples", args.samples, "Number of random problems")
          ->check(CLI::PositiveNumber);
      sub->add_option("--arity", args.arity, "Arity of the random problems")
          ->check(CLI::Range(1u, 4u));
    }
    sub->callback([&selected, command = entry.command] { selected = command; });
  }

  bool from_utility = false;
  auto* utility = app.add_subcommand("from-utility", "Build a problem file from a utility boundary file");
  utility->add_option("file", args.problem, "Utility boundary file")->required();
  utility->add_option("--lattice", args.lattice, "Lattice term or lattice file (overrides LATTICE)");
  utility->callback([&from_utility] { from_utility = true; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : LPI_INPUT_ERROR;
  }

  if (from_utility) return run_from_utility(args);
  return run_problem_command(*selected, args);
}
