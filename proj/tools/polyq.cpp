#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "polyq/sampling.hpp"
#include "polyq/session.hpp"

namespace {

std::string self_path(const char* argv0) {
  std::error_code ec;
  auto p = std::filesystem::read_symlink("/proc/self/exe", ec);
  if (!ec) return p.string();
  return argv0 ? argv0 : "";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"polyq: exact workbench for polyadic equality set algebras over rational sequences"};
  polyq::Session session;
  std::string script;
  std::string format = "text";
  size_t emit_n = 0;
  uint64_t seed = 1;
  app.add_option("--window", session.opts.window, "coordinate window for pools and searches");
  app.add_option("--coeff-height", session.opts.coeff_height, "bound on pool constants");
  app.add_option("--depth", session.opts.depth, "default search depth");
  app.add_option("--script", script, "run commands from a file, one per line");
  app.add_option("--format", format, "text | records")
      ->check(CLI::IsMember({"text", "records"}));
  app.add_option("--emit-sample-elements", emit_n,
                 "print N deterministic canonical elements and exit (used by the serialization "
                 "suite)");
  app.add_option("--seed", seed, "seed for --emit-sample-elements");
  app.allow_extras();
  CLI11_PARSE(app, argc, argv);

  session.opts.records = format == "records";
  session.opts.exe_path = self_path(argc > 0 ? argv[0] : nullptr);

  if (emit_n > 0) {
    polyq::Rng rng(seed);
    polyq::ElemGenOpts opts;
    for (size_t i = 0; i < emit_n; ++i)
      std::cout << polyq::serialize(polyq::random_element(rng, opts)) << "\n";
    return 0;
  }

  if (!script.empty()) {
    std::ifstream in(script);
    if (!in) {
      std::cerr << "error: cannot open script " << script << "\n";
      return 1;
    }
    int rc = 0;
    std::string line;
    while (std::getline(in, line)) rc |= polyq::run_command(line, session, std::cout);
    return rc;
  }

  std::vector<std::string> rest = app.remaining();
  if (!rest.empty()) return polyq::run_command_tokens(rest, session, std::cout);

  // REPL / piped batch.
  bool tty = ::isatty(STDIN_FILENO);
  int rc = 0;
  std::string line;
  while (true) {
    if (tty) std::cout << "polyq> " << std::flush;
    if (!std::getline(std::cin, line)) break;
    if (line == "exit" || line == "quit") break;
    rc |= polyq::run_command(line, session, std::cout);
  }
  return tty ? 0 : rc;
}
