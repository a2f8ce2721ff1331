#include "stoim/cli.hpp"

#include <CLI11.hpp>

#include <istream>
#include <iterator>
#include <ostream>

#include "stoim/ascent.hpp"
#include "stoim/bijection.hpp"
#include "stoim/enumerate.hpp"
#include "stoim/matching.hpp"
#include "stoim/render.hpp"

namespace stoim::cli {

namespace {

// Positional argument if given, otherwise the whole of stdin.
std::string read_input(const std::string& arg, std::istream& in) {
  if (!arg.empty()) return arg;
  return std::string(std::istreambuf_iterator<char>(in),
                     std::istreambuf_iterator<char>());
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  CLI::App app{"Stoimenow matchings and ascent sequences"};
  app.name("stoim");
  app.require_subcommand(1);

  std::string arg;
  int n = 1;
  std::string kind = "matchings";
  std::string sample_kind = "sequences";
  std::uint64_t seed = 0;
  int draws = 1;
  std::string format = "ascii";
  int jobs = 1;

  const char* input_help =
      "matching or sequence text; read from stdin when omitted";
  const auto kind_check = CLI::IsMember({"matchings", "sequences"});

  auto* validate_cmd = app.add_subcommand(
      "validate", "Check a matching for forbidden neighbor nestings");
  validate_cmd->add_option("input", arg, input_help);

  auto* encode_cmd = app.add_subcommand(
      "encode", "Encode a Stoimenow matching as an ascent sequence");
  encode_cmd->add_option("input", arg, input_help);

  auto* decode_cmd = app.add_subcommand(
      "decode", "Decode an ascent sequence into a Stoimenow matching");
  decode_cmd->add_option("input", arg, input_help);

  auto* enumerate_cmd =
      app.add_subcommand("enumerate", "List all objects of a given size");
  enumerate_cmd->add_option("--n", n, "number of arcs / sequence length")
      ->required();
  enumerate_cmd->add_option("--kind", kind, "matchings or sequences")
      ->check(kind_check);
  enumerate_cmd->add_option("--jobs", jobs, "worker threads for matchings");

  auto* count_cmd =
      app.add_subcommand("count", "Count all objects of a given size");
  count_cmd->add_option("--n", n, "number of arcs / sequence length")
      ->required();
  count_cmd->add_option("--kind", kind, "matchings or sequences")
      ->check(kind_check);
  count_cmd->add_option("--jobs", jobs, "worker threads for matchings");

  auto* sample_cmd = app.add_subcommand(
      "sample", "Draw exactly uniform ascent sequences (or matchings)");
  sample_cmd->add_option("--n", n, "sequence length")->required();
  sample_cmd->add_option("--seed", seed, "random seed")->required();
  sample_cmd->add_option("--count", draws, "number of draws");
  sample_cmd->add_option("--kind", sample_kind, "sequences or matchings")
      ->check(kind_check);

  auto* trace_cmd = app.add_subcommand(
      "trace", "Show the removal steps that encode a matching");
  trace_cmd->add_option("input", arg, input_help);

  auto* render_cmd = app.add_subcommand("render", "Draw a matching");
  render_cmd->add_option("input", arg, input_help);
  render_cmd->add_option("--format", format, "ascii or svg")
      ->check(CLI::IsMember({"ascii", "svg"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);  // --help and friends
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (validate_cmd->parsed()) {
      const Matching m = Matching::parse(read_input(arg, in));
      const auto violations = find_violations(m);
      if (!violations.empty()) {
        for (const auto& v : violations) err << v.to_string() << '\n';
        return 1;
      }
      out << "ok\n";
    } else if (encode_cmd->parsed()) {
      const Matching m = Matching::parse(read_input(arg, in));
      out << encode(m).to_string() << '\n';
    } else if (decode_cmd->parsed()) {
      const auto x = AscentSequence::parse(read_input(arg, in));
      out << decode(x).involution_text() << '\n';
    } else if (enumerate_cmd->parsed()) {
      if (kind == "matchings") {
        for (const Matching& m : enumerate_matchings(n, jobs))
          out << m.involution_text() << '\n';
      } else {
        for (const AscentSequence& x : enumerate_sequences(n))
          out << x.to_string() << '\n';
      }
    } else if (count_cmd->parsed()) {
      if (kind == "matchings") {
        out << count_matchings(n, jobs) << '\n';
      } else {
        out << count_sequences(n) << '\n';
      }
    } else if (sample_cmd->parsed()) {
      Sampler sampler(n, seed);
      for (int k = 0; k < draws; ++k) {
        const AscentSequence x = sampler.next();
        if (sample_kind == "sequences") {
          out << x.to_string() << '\n';
        } else {
          out << decode(x).involution_text() << '\n';
        }
      }
    } else if (trace_cmd->parsed()) {
      const Matching m = Matching::parse(read_input(arg, in));
      for (const TraceEntry& step : trace_encode(m))
        out << step.to_string() << '\n';
    } else if (render_cmd->parsed()) {
      const Matching m = Matching::parse(read_input(arg, in));
      out << render(m, format == "ascii" ? RenderFormat::Ascii
                                         : RenderFormat::Svg);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace stoim::cli
