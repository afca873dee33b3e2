#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "wcpx/commands.hpp"
#include "wcpx/report_json.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact checks and constructions for weak crossed products"};
  app.set_version_flag("--version", std::string(wcpx::tool_version()));
  app.require_subcommand(1);

  wcpx::RunOptions options;
  std::vector<std::string> paths;
  std::string chosen;
  for (auto name : wcpx::command_names()) {
    CLI::App* sub = app.add_subcommand(std::string(name));
    sub->add_option("files", paths, "structure files")->required()->check(CLI::ExistingFile);
    sub->add_option("--report", options.report_path, "write the JSON report here");
    sub->add_option("--field", options.field, "field for files that declare none (Q or F<p>)");
    sub->callback([&chosen, name] { chosen = std::string(name); });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  return wcpx::run(chosen, paths, options, std::cout, std::cerr);
}
