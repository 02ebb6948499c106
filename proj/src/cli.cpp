#include "mislab/cli.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "mislab/closed_forms.hpp"
#include "mislab/complexity.hpp"
#include "mislab/duality.hpp"
#include "mislab/graph.hpp"
#include "mislab/oracles.hpp"

namespace mislab::cli {

namespace {

// Raised by a command whose check ran but failed (exit code 1, no "error:" prefix).
struct CheckFailed {};

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
  return in;
}

// Writes through `emit` to `path`, or to `out` when no path was given.
void write_to(const std::string& path, std::ostream& out,
              const std::function<void(std::ostream&)>& emit) {
  if (path.empty()) {
    emit(out);
    return;
  }
  std::ofstream file(path);
  if (!file) throw std::runtime_error("cannot open '" + path + "' for writing");
  emit(file);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Maximal independent sets, separating covers and integer complexity", "mislab"};
  app.require_subcommand(1);

  std::function<void()> action;

  std::size_t n_arg = 0;
  std::string text_arg;
  std::string graph_path;
  std::string cover_path;
  std::string out_path;
  std::string csv_path;
  std::string variant = "default";
  std::string level = "quick";
  bool count_flag = false;
  bool list_flag = false;

  auto* ell_cmd = app.add_subcommand("ell", "largest product of positive integers summing to N");
  ell_cmd->add_option("N", n_arg)->required();
  ell_cmd->callback([&] { action = [&] { out << to_string(ell(n_arg)) << '\n'; }; });

  auto* s_cmd = app.add_subcommand("s", "fewest sets in a separating cover on M elements");
  s_cmd->add_option("M", text_arg)->required();
  s_cmd->callback([&] { action = [&] { out << s_of(parse_bignat(text_arg)) << '\n'; }; });

  auto* perrin_cmd = app.add_subcommand("perrin", "J-th Perrin number (MIS count of the J-cycle)");
  perrin_cmd->add_option("J", n_arg)->required();
  perrin_cmd->callback([&] { action = [&] { out << to_string(perrin(n_arg)) << '\n'; }; });

  auto* maxones_cmd = app.add_subcommand("maxones", "largest integer written with N ones");
  maxones_cmd->add_option("N", n_arg)->required();
  maxones_cmd->callback([&] { action = [&] { out << to_string(max_with_ones(n_arg)) << '\n'; }; });

  auto* complexity_cmd = app.add_subcommand("complexity", "integer complexity table as m,c lines");
  complexity_cmd->add_option("--max", n_arg, "table limit")->required();
  complexity_cmd->add_option("--csv", csv_path, "write CSV here instead of standard output");
  complexity_cmd->callback([&] {
    action = [&] {
      const ComplexityTable table(n_arg);
      write_to(csv_path, out, [&](std::ostream& o) { write_complexity_csv(o, table); });
    };
  });

  auto* expr_cmd = app.add_subcommand("expr", "a minimal expression for M");
  expr_cmd->add_option("M", n_arg)->required();
  expr_cmd->callback([&] {
    action = [&] {
      const ComplexityTable table(n_arg);
      const Expression e = minimal_expression(n_arg, table);
      out << format_expression(e) << '\t' << to_string(e.value()) << '\t' << e.ones() << '\n';
    };
  });

  auto* expr_graph_cmd = app.add_subcommand("expr-graph", "graph built from an expression");
  expr_graph_cmd->add_option("EXPR", text_arg)->required();
  expr_graph_cmd->add_option("--out", out_path);
  expr_graph_cmd->callback([&] {
    action = [&] {
      const Graph g = graph_from_expression(parse_expression(text_arg));
      write_to(out_path, out, [&](std::ostream& o) { write_graph(o, g); });
    };
  });

  auto* mis_cmd = app.add_subcommand("mis", "count or list maximal independent sets");
  mis_cmd->add_option("--graph", graph_path)->required();
  auto* count_opt = mis_cmd->add_flag("--count", count_flag);
  auto* list_opt = mis_cmd->add_flag("--list", list_flag);
  count_opt->excludes(list_opt);
  mis_cmd->callback([&] {
    if (!count_flag && !list_flag) throw CLI::RequiredError("--count or --list");
    action = [&] {
      auto in = open_input(graph_path);
      const Graph g = read_graph(in);
      if (count_flag) {
        out << to_string(count_mis(g)) << '\n';
        return;
      }
      for (const auto& s : enumerate_mis(g)) {
        const auto elems = s.elements();
        for (std::size_t i = 0; i < elems.size(); ++i) out << (i ? " " : "") << elems[i];
        out << '\n';
      }
    };
  });

  const std::map<std::string, ExtremalVariant> variants{
      {"default", ExtremalVariant::Default},
      {"two-edges", ExtremalVariant::TwoEdges},
      {"k4", ExtremalVariant::K4}};
  auto* extremal_cmd = app.add_subcommand("extremal", "graph on N vertices with the most MISes");
  extremal_cmd->add_option("N", n_arg)->required();
  extremal_cmd->add_option("--variant", variant)->check(CLI::IsMember({"default", "two-edges", "k4"}));
  extremal_cmd->add_option("--out", out_path);
  extremal_cmd->callback([&] {
    action = [&] {
      const Graph g = extremal_graph(n_arg, variants.at(variant));
      write_to(out_path, out, [&](std::ostream& o) { write_graph(o, g); });
    };
  });

  auto* c2g_cmd = app.add_subcommand("cover-from-graph", "separating cover from a graph's MISes");
  c2g_cmd->add_option("--graph", graph_path)->required();
  c2g_cmd->add_option("--out", out_path);
  c2g_cmd->callback([&] {
    action = [&] {
      auto in = open_input(graph_path);
      const SeparatingCover c = cover_from_graph(read_graph(in));
      write_to(out_path, out, [&](std::ostream& o) { write_cover(o, c); });
    };
  });

  auto* g2c_cmd = app.add_subcommand("graph-from-cover", "disjointness graph of a separating cover");
  g2c_cmd->add_option("--cover", cover_path)->required();
  g2c_cmd->add_option("--out", out_path);
  g2c_cmd->callback([&] {
    action = [&] {
      auto in = open_input(cover_path);
      const Graph g = graph_from_cover(read_cover(in));
      write_to(out_path, out, [&](std::ostream& o) { write_graph(o, g); });
    };
  });

  auto* minimal_cmd = app.add_subcommand("minimal-cover", "separating cover on M elements with s(M) sets");
  minimal_cmd->add_option("M", n_arg)->required();
  minimal_cmd->add_option("--out", out_path);
  minimal_cmd->callback([&] {
    action = [&] {
      const SeparatingCover c = minimal_cover(n_arg);
      write_to(out_path, out, [&](std::ostream& o) { write_cover(o, c); });
    };
  });

  auto* validate_cmd = app.add_subcommand("validate-cover", "check covering and separation");
  validate_cmd->add_option("--cover", cover_path)->required();
  validate_cmd->callback([&] {
    action = [&] {
      auto in = open_input(cover_path);
      const CoverReport r = validate_cover(read_cover(in));
      out << "covering\t" << (r.covering ? "yes" : "no") << '\n';
      out << "separating\t" << (r.separating ? "yes" : "no") << '\n';
      if (r.uncovered) out << "uncovered\t" << *r.uncovered << '\n';
      if (r.unseparated) {
        out << "unseparated\t" << r.unseparated->first << ' ' << r.unseparated->second << '\n';
      }
      if (!r.valid()) throw CheckFailed{};
    };
  });

  auto* verify_cmd = app.add_subcommand("verify", "oracle agreement suite");
  verify_cmd->add_option("--level", level)->check(CLI::IsMember({"quick", "full"}));
  verify_cmd->callback([&] {
    action = [&] {
      const auto reports =
          oracle::verify(level == "full" ? oracle::Level::Full : oracle::Level::Quick);
      bool all = true;
      double seconds = 0.0;
      std::size_t failed = 0;
      for (const auto& r : reports) {
        oracle::write_report(out, r);
        all = all && r.agree;
        seconds += r.elapsed_seconds;
        failed += r.agree ? 0 : 1;
      }
      // Timing stays off standard output so reruns are byte-identical.
      err << reports.size() << " checks, " << failed << " mismatches, " << seconds << " s\n";
      if (!all) throw CheckFailed{};
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n' << app.help();
    return 2;
  }

  try {
    action();
  } catch (const CheckFailed&) {
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace mislab::cli
