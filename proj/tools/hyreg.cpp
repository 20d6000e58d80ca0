// Command line front end: invariants and theorem reports for hypergraphs in
// the {"n": ..., "edges": [[...], ...]} interchange format.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "hyreg/enumerate.hpp"
#include "hyreg/io.hpp"
#include "hyreg/verify.hpp"

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path);
  if (!in) hyreg::fail(hyreg::Errc::parse_error, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Exact rational probability: "3/8", "0.25", "1".
void parse_probability(const std::string& text, std::uint64_t& num, std::uint64_t& den) {
  auto bad = [&]() { hyreg::fail(hyreg::Errc::config_error, "bad probability: " + text); };
  if (text.empty()) bad();
  auto slash = text.find('/');
  try {
    if (slash != std::string::npos) {
      num = std::stoull(text.substr(0, slash));
      den = std::stoull(text.substr(slash + 1));
    } else {
      auto dot = text.find('.');
      if (dot == std::string::npos) {
        num = std::stoull(text);
        den = 1;
      } else {
        std::string digits = text.substr(0, dot) + text.substr(dot + 1);
        std::size_t frac = text.size() - dot - 1;
        if (frac > 18) bad();
        num = std::stoull(digits.empty() ? "0" : digits);
        den = 1;
        for (std::size_t i = 0; i < frac; ++i) den *= 10;
      }
    }
  } catch (const std::exception&) {
    bad();
  }
  if (den == 0 || num > den) bad();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact matching invariants and Stanley-Reisner regularity for small hypergraphs"};
  app.require_subcommand(1);

  int field_char = 2;
  auto add_field_option = [&field_char](CLI::App* cmd) {
    cmd->add_option("--field", field_char, "coefficient field characteristic: 0 or a prime")
        ->capture_default_str();
  };

  std::string input_path;
  auto* cmd_invariants =
      app.add_subcommand("invariants", "matching numbers, complex, homology and regularity");
  cmd_invariants->add_option("file", input_path, "input document, or - for stdin")->required();
  add_field_option(cmd_invariants);

  auto* cmd_verify = app.add_subcommand("verify", "evaluate every registered claim");
  cmd_verify->add_option("file", input_path, "input document, or - for stdin")->required();
  add_field_option(cmd_verify);

  int max_n = 5, max_m = 8, min_edge = 1, max_edge = hyreg::kMaxVertices;
  auto* cmd_enum = app.add_subcommand("enum", "stream isomorphism-reduced hypergraphs");
  cmd_enum->add_option("--max-n", max_n, "largest ground size")->required();
  cmd_enum->add_option("--max-m", max_m, "largest edge count")->required();
  cmd_enum->add_option("--min-edge-size", min_edge, "smallest admissible edge size");
  cmd_enum->add_option("--max-edge-size", max_edge, "largest admissible edge size");

  std::string claim_id;
  bool random_mode = false;
  std::uint64_t seed = 0;
  long long trials = 100;
  int gen_n = 6;
  std::string prob_text = "1/4";
  auto* cmd_search = app.add_subcommand("search", "hunt for counterexamples to one claim");
  cmd_search->add_option("--claim", claim_id, "claim identifier")->required();
  cmd_search->add_option("--max-n", max_n, "largest ground size (enumeration mode)");
  cmd_search->add_option("--max-m", max_m, "largest edge count (enumeration mode)");
  cmd_search->add_option("--min-edge-size", min_edge, "smallest admissible edge size");
  cmd_search->add_option("--max-edge-size", max_edge, "largest admissible edge size");
  cmd_search->add_flag("--random", random_mode, "sample seeded random hypergraphs instead");
  cmd_search->add_option("--seed", seed, "base seed for random mode");
  cmd_search->add_option("--trials", trials, "number of random hypergraphs");
  cmd_search->add_option("--n", gen_n, "ground size for random mode");
  cmd_search->add_option("--prob", prob_text, "edge probability (rational) for random mode");
  add_field_option(cmd_search);

  auto* cmd_flaw = app.add_subcommand("flaw-demo", "run the collage-bound defect example");
  add_field_option(cmd_flaw);

  CLI11_PARSE(app, argc, argv);

  try {
    hyreg::VerifyOptions opts;
    opts.field = hyreg::FieldChar::of(field_char);

    if (cmd_invariants->parsed()) {
      hyreg::SimpleHypergraph h = hyreg::parse_hypergraph(read_input(input_path));
      std::cout << hyreg::invariants_report(h, opts).dump(2) << "\n";
      return 0;
    }

    if (cmd_verify->parsed()) {
      hyreg::VerificationReport report = hyreg::verify(
          hyreg::parse_hypergraph(read_input(input_path)), opts);
      std::cout << hyreg::to_json(report).dump(2) << "\n";
      return report.has_findings() ? 2 : 0;
    }

    if (cmd_enum->parsed()) {
      hyreg::EnumerationOptions enum_opts;
      enum_opts.min_edge_size = min_edge;
      enum_opts.max_edge_size = max_edge;
      long long count = 0;
      hyreg::enumerate_hypergraphs(max_n, max_m, enum_opts,
                                   [&](const hyreg::SimpleHypergraph& h) {
                                     std::cout << hyreg::to_json(h).dump() << "\n";
                                     ++count;
                                   });
      std::cerr << count << " hypergraphs\n";
      return 0;
    }

    if (cmd_search->parsed()) {
      hyreg::SearchBounds bounds;
      bounds.n_max = max_n;
      bounds.m_max = max_m;
      bounds.enumeration.min_edge_size = min_edge;
      bounds.enumeration.max_edge_size = max_edge;
      bounds.random = random_mode;
      if (random_mode) {
        bounds.seed = seed;
        bounds.trials = trials;
        bounds.generator.n = gen_n;
        bounds.generator.min_edge_size = min_edge;
        bounds.generator.max_edge_size = std::min(max_edge, gen_n);
        parse_probability(prob_text, bounds.generator.prob_num, bounds.generator.prob_den);
      }
      long long findings = 0;
      long long examined = hyreg::search_counterexamples(
          claim_id, bounds, opts, [&](const hyreg::Finding& finding) {
            std::cout << hyreg::to_json(finding).dump() << "\n";
            ++findings;
          });
      std::cerr << "examined " << examined << " hypergraphs, " << findings << " findings\n";
      return findings > 0 ? 2 : 0;
    }

    if (cmd_flaw->parsed()) {
      hyreg::VerificationReport report = hyreg::flaw_demo(opts);
      std::cout << hyreg::to_json(report).dump(2) << "\n";
      return report.has_findings() ? 2 : 0;
    }
  } catch (const hyreg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
