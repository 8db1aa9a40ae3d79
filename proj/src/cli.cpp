#include "affsel/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "affsel/errors.hpp"
#include "affsel/io.hpp"

namespace affsel {

namespace {

using io::json;

json load_json(const std::string& path, std::istream& in) {
  if (path == "-") {
    return json::parse(in);
  }
  std::ifstream file(path);
  if (!file) {
    throw std::invalid_argument("cannot read file \"" + path + "\"");
  }
  return json::parse(file);
}

GraphMultifunction require_graph(io::Instance instance, const char* verb) {
  if (auto* g = std::get_if<GraphMultifunction>(&instance)) {
    return std::move(*g);
  }
  throw std::invalid_argument(std::string(verb) +
                              " requires a \"graph\" instance");
}

SampledMultifunction require_sampled(io::Instance instance, const char* verb) {
  if (auto* m = std::get_if<SampledMultifunction>(&instance)) {
    return std::move(*m);
  }
  throw std::invalid_argument(std::string(verb) +
                              " requires a \"sampled\" instance");
}

void emit(const json& doc, bool pretty, std::ostream& out) {
  out << doc.dump(pretty ? 2 : -1) << "\n";
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("AFFSEL_SEED")) {
    return std::strtoull(env, nullptr, 10);
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err) {
  CLI::App app{"affine selections of convex multifunctions"};
  app.fallthrough();
  bool pretty = false;
  app.add_flag("--pretty", pretty,
               "indent output and add decimal *_approx fields");

  auto* audit = app.add_subcommand(
      "audit", "convexity and intersection audits of a sampled instance");
  std::string audit_file = "-";
  audit->add_option("file", audit_file, "instance file (- for stdin)");

  auto* global = app.add_subcommand(
      "select-global", "decide an affine selection over the whole domain");
  std::string global_file = "-";
  global->add_option("file", global_file, "instance file (- for stdin)");

  auto* local = app.add_subcommand(
      "select-local", "construct a local affine selection at a point");
  std::string local_file = "-";
  std::string point_text;
  local->add_option("file", local_file, "instance file (- for stdin)");
  local->add_option("--point", point_text, "interior point, e.g. 0,1/2")
      ->required();

  auto* sand = app.add_subcommand(
      "sandwich", "affine map between lower and upper point data");
  std::string sandwich_file = "-";
  sand->add_option("file", sandwich_file, "instance file (- for stdin)");

  auto* example = app.add_subcommand("example", "write a built-in instance");
  std::string example_name;
  example->add_option("name", example_name, "olsen | hahn-banach | random")
      ->required();
  std::string out_path;
  example->add_option("--out", out_path, "write to a file instead of stdout");
  std::uint64_t seed = default_seed();
  example->add_option("--seed", seed, "generator seed (default $AFFSEL_SEED)");
  std::size_t rand_n = 1, rand_m = 1, rand_vertices = 4;
  bool simplex_domain = false;
  example->add_option("--n", rand_n, "random: domain dimension");
  example->add_option("--m", rand_m, "random: codomain dimension");
  example->add_option("--vertices", rand_vertices, "random: graph vertices");
  example->add_flag("--simplex-domain", simplex_domain,
                    "random: project the domain onto the standard simplex");

  auto* verify = app.add_subcommand(
      "verify", "re-check a candidate map against a graph instance");
  std::string verify_file = "-";
  std::string map_path;
  long trials = 100;
  std::uint64_t verify_seed = default_seed();
  verify->add_option("file", verify_file, "instance file (- for stdin)");
  verify->add_option("--map", map_path, "affine-map document")->required();
  verify->add_option("--trials", trials, "number of sampled points");
  verify->add_option("--seed", verify_seed, "sampling seed");

  app.require_subcommand(1);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (audit->parsed()) {
      const auto instance =
          require_sampled(io::parse_instance(load_json(audit_file, in)), "audit");
      emit(json{{"kind", "audit-report"},
                {"convexity", io::audit_json(audit_convexity(instance), pretty)},
                {"intersection",
                 io::audit_json(audit_intersection(instance), pretty)}},
           pretty, out);
    } else if (global->parsed()) {
      const auto instance = require_graph(
          io::parse_instance(load_json(global_file, in)), "select-global");
      emit(io::selection_json(global_selection(instance), pretty), pretty, out);
    } else if (local->parsed()) {
      const auto instance = require_graph(
          io::parse_instance(load_json(local_file, in)), "select-local");
      const RatVec x0 = parse_rational_list(point_text);
      emit(io::local_selection_json(local_selection(instance, x0), pretty),
           pretty, out);
    } else if (sand->parsed()) {
      const auto doc = io::parse_instance(load_json(sandwich_file, in));
      const auto* data = std::get_if<io::SandwichData>(&doc);
      if (!data) {
        throw std::invalid_argument("sandwich requires a \"sandwich\" instance");
      }
      emit(io::selection_json(sandwich(data->lower, data->upper), pretty),
           pretty, out);
    } else if (example->parsed()) {
      json doc;
      if (example_name == "olsen") {
        doc = io::instance_json(olsen());
      } else if (example_name == "hahn-banach") {
        doc = io::instance_json(hahn_banach(hahn_banach_canonical_spec()));
      } else if (example_name == "random") {
        std::optional<Simplex> domain;
        if (simplex_domain) domain = standard_simplex(rand_n);
        doc = io::instance_json(
            random_convex_graph(rand_n, rand_m, rand_vertices, seed, domain));
      } else {
        throw std::invalid_argument("unknown example \"" + example_name +
                                    "\" (olsen | hahn-banach | random)");
      }
      if (out_path.empty()) {
        emit(doc, pretty, out);
      } else {
        std::ofstream file(out_path);
        if (!file) {
          throw std::invalid_argument("cannot write file \"" + out_path + "\"");
        }
        file << doc.dump(pretty ? 2 : -1) << "\n";
      }
    } else if (verify->parsed()) {
      const auto instance = require_graph(
          io::parse_instance(load_json(verify_file, in)), "verify");
      const AffineMap map = io::map_from(load_json(map_path, in));
      emit(io::verify_json(verify_selection(instance, map, trials, verify_seed)),
           pretty, out);
    }
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const NotInteriorError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace affsel
