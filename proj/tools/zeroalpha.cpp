#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "zeroalpha/cli.hpp"

// Exit codes: 0 success, 1 verification failure, 2 usage error.
int main(int argc, char** argv) {
  CLI::App app{"flat {0,alpha}-set constructions from diameter-four graphs"};
  app.require_subcommand(1);

  std::string graph_name, kasami_spec, out_dir, field_name = "real";
  std::int64_t max_k = 200;
  bool deep = false;

  const std::string graph_help = "8-cycle, 4-cube, folded-8-cube, vls, golay or kasami";
  const std::string kasami_help = "kasami parameters: q=<q>,variant=<i|ii>[,j=<j>,m=<m>]";

  CLI::App* build = app.add_subcommand("build", "construct and verify one family's vector set");
  build->add_option("graph", graph_name, graph_help)->required();
  build->add_option("--kasami", kasami_spec, kasami_help);
  build->add_flag("--deep", deep, "also run the spectral identity and tensor rank checks");
  build->add_option("--out", out_dir, "directory for adjacency/vector files");

  CLI::App* search = app.add_subcommand("search", "enumerate arrays meeting a flat bound exactly");
  search->add_option("--max-k", max_k, "largest valency to scan (default 200)");
  search->add_option("--field", field_name, "real or complex (default real)");

  CLI::App* table1 = app.add_subcommand("table1", "rebuild all four bound-attaining families and check every cell");
  table1->add_flag("--deep", deep, "also run the tensor rank checks");

  CLI::App* export_cmd = app.add_subcommand("export", "build one family and write its files");
  export_cmd->add_option("graph", graph_name, graph_help)->required();
  export_cmd->add_option("--kasami", kasami_spec, kasami_help);
  export_cmd->add_flag("--deep", deep, "also run the spectral identity and tensor rank checks");
  export_cmd->add_option("--out", out_dir, "directory for adjacency/vector files")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    za::CliOptions opts;
    if (!kasami_spec.empty()) opts.kasami = za::parse_kasami_spec(kasami_spec);
    if (!out_dir.empty()) opts.out_dir = out_dir;
    opts.deep = deep;

    za::Json report;
    if (build->parsed()) report = za::cmd_build(graph_name, opts);
    else if (search->parsed()) report = za::cmd_search(max_k, za::parse_field(field_name));
    else if (table1->parsed()) report = za::cmd_table1(opts);
    else report = za::cmd_export(graph_name, opts);

    std::cout << report.dump(2) << "\n";
    if (report.contains("ok") && !report["ok"].get<bool>()) return 1;
    return 0;
  } catch (const za::ParameterError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const za::SizeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const za::DegenerateCodeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const za::InvalidGroupError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const za::Error& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return 1;
  }
}
