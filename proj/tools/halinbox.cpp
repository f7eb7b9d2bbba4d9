// halinbox: rectangle representations for trees plus a cycle on their leaves.
//
// Exit codes:
//   0  success
//   1  I/O or usage error
//   2  invalid instance (or unparsable document)
//   3  construction failed: leaves below some vertex are not consecutive
//   4  representation does not reproduce the graph
//   5  selftest failure

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "halinbox/embed.hpp"
#include "halinbox/gen.hpp"
#include "halinbox/io.hpp"
#include "halinbox/selftest.hpp"
#include "halinbox/verify.hpp"

namespace {

using namespace halinbox;

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kInvalid = 2;
constexpr int kNotConsecutive = 3;
constexpr int kMismatch = 4;
constexpr int kSelftestFailed = 5;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw IoError("cannot write '" + path + "'");
}

std::uint64_t effective_seed(std::uint64_t flag) {
  if (const char* env = std::getenv("HALINBOX_SEED"); env && *env) {
    return std::stoull(env, nullptr, 0);
  }
  return flag;
}

void print_edges(std::ostream& os, const char* label, const std::vector<Edge>& edges) {
  os << label << ":";
  for (const auto& [a, b] : edges) os << " " << a << "-" << b;
  os << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-dimensional box representations of trees closed by a leaf cycle"};
  app.require_subcommand(1);

  std::string file, repr_file, format, svg_out;
  std::uint64_t seed = 1;
  int internal = 2;
  int max_children = 2;
  bool strict = false;
  std::size_t count = 100;
  bool verbose = false;

  auto* validate = app.add_subcommand("validate", "Check an instance file");
  validate->add_option("file", file, "Instance JSON")->required();

  auto* embed = app.add_subcommand("embed", "Build and print a box representation");
  embed->add_option("file", file, "Instance JSON")->required();
  embed->add_option("--out", format, "structured (default), svg or dot");

  auto* verify = app.add_subcommand("verify", "Check a representation against an instance");
  verify->add_option("file", file, "Instance JSON")->required();
  verify->add_option("repr", repr_file, "Representation JSON")->required();

  auto* certify = app.add_subcommand("certify", "Print an induced cycle of length >= 4");
  certify->add_option("file", file, "Instance JSON")->required();

  auto* gen = app.add_subcommand("generate", "Print a random planar instance");
  gen->add_option("--seed", seed, "Seed (HALINBOX_SEED overrides)");
  gen->add_option("--internal", internal, "Number of internal tree vertices")->check(CLI::PositiveNumber);
  gen->add_option("--max-children", max_children, "Random leaf children per internal vertex");
  gen->add_flag("--strict", strict, "No tree vertex of degree 2");

  auto* render = app.add_subcommand("render", "Embed and write an SVG");
  render->add_option("file", file, "Instance JSON")->required();
  render->add_option("--svg", svg_out, "Output SVG path")->required();

  auto* selftest = app.add_subcommand("selftest", "Run the pipeline and oracle on a seeded corpus");
  selftest->add_option("--count", count, "Number of instances");
  selftest->add_option("--seed", seed, "Corpus seed (HALINBOX_SEED overrides)");
  selftest->add_flag("--verbose", verbose, "One line per instance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*validate) {
      HalinInstance inst = parse_instance(read_file(file));
      std::cout << "valid: " << inst.num_vertices() << " vertices, " << inst.num_leaves()
                << " leaves, kind " << to_string(classify_instance(inst)) << "\n";
      return kOk;
    }
    if (*embed || *render) {
      HalinInstance inst = parse_instance(read_file(file));
      BoxRepresentation rep = build_boxes(inst);
      if (*render) {
        write_file(svg_out, representation_to_svg(rep));
      } else {
        std::cout << emit_representation(inst, rep, parse_format(format));
      }
      return kOk;
    }
    if (*verify) {
      HalinInstance inst = parse_instance(read_file(file));
      BoxRepresentation rep = parse_representation(read_file(repr_file));
      VerificationReport report = verify_representation(compose_graph(inst), rep);
      std::cout << "exact_match: " << (report.exact_match ? "true" : "false") << "\n"
                << "supergraph_x: " << (report.supergraph_f1 ? "true" : "false") << "\n"
                << "supergraph_y: " << (report.supergraph_f2 ? "true" : "false") << "\n";
      if (!report.exact_match) {
        print_edges(std::cout, "missing", report.missing_edges);
        print_edges(std::cout, "extra", report.extra_edges);
        return kMismatch;
      }
      return kOk;
    }
    if (*certify) {
      HalinInstance inst = parse_instance(read_file(file));
      auto cert = lower_bound_certificate(inst);
      if (!cert) {
        std::cout << "K4: boxicity 1\n";
      } else {
        std::cout << "induced cycle:";
        for (const auto& v : cert->cycle_vertices) std::cout << " " << v;
        std::cout << "\nboxicity 2\n";
      }
      return kOk;
    }
    if (*gen) {
      GenConfig cfg{effective_seed(seed), internal, max_children, strict};
      std::cout << serialize_instance(generate(cfg));
      return kOk;
    }
    if (*selftest) {
      SelftestResult result = run_selftest(count, effective_seed(seed), verbose);
      std::cout << result.report;
      return result.ok() ? kOk : kSelftestFailed;
    }
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const NotConsecutiveError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNotConsecutive;
  } catch (const HalinError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::VertexSetMismatch ? kMismatch : kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
