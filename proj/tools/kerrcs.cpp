// kerrcs command-line tool.

#include <cstdio>
#include <exception>

#include "kerrcs/app.hpp"

int main(int argc, char** argv) {
  using namespace kerrcs;
  CLI::App cli{"Kerr-medium nonlinear coherent states: statistics and phase-space data"};
  cli.set_version_flag("--version", KERRCS_VERSION);
  app::RawFlags flags;
  app::build_cli(cli, flags);
  try {
    cli.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return cli.exit(e);
  }
  try {
    const app::Invocation inv = app::finish_invocation(cli, flags);
    const app::RunReport report = inv.is_figure ? app::reproduce_figure(inv.figure, inv.figure_options)
                                                : app::run(inv.config);
    for (const auto& f : report.files) std::printf("wrote %s\n", f.c_str());
    if (!report.ok()) {
      for (const auto& f : report.failures) std::fprintf(stderr, "uncertified: %s\n", f.c_str());
      return 3;
    }
    return 0;
  } catch (const app::ConfigError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const IoError& e) {
    std::fprintf(stderr, "I/O error: %s\n", e.what());
    return 4;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  }
}
