#include <algorithm>
#include <fstream>
#include <functional>
#include <future>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "threeplane/census.hpp"
#include "threeplane/certificate.hpp"
#include "threeplane/constraints.hpp"
#include "threeplane/errors.hpp"
#include "threeplane/generators.hpp"
#include "threeplane/geometry.hpp"
#include "threeplane/report.hpp"
#include "threeplane/saturate.hpp"
#include "threeplane/tdr.hpp"

using namespace threeplane;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

// A failure that maps to an exit code, with its message for the error stream.
struct Exit {
  int code;
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path == "-" ? "/dev/stdin" : path, std::ios::binary);
  if (!in) throw Exit{kUsage, "cannot read " + path};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Drawing load(const std::string& path, bool saturate_first) {
  Drawing d;
  try {
    d = parse_tdr(read_file(path));
  } catch (const TdrSyntaxError& e) {
    throw Exit{kUsage, path + ": " + e.what()};
  } catch (const TdrSemanticError& e) {
    throw Exit{kUsage, path + ": " + e.what()};
  }
  if (saturate_first) {
    try {
      d = saturate(d);
    } catch (const PreconditionError& e) {
      throw Exit{kFailed, path + ": " + e.what()};
    }
  }
  return d;
}

void require_valid(const Drawing& d, const std::string& path) {
  ValidationReport report = validate(d);
  for (const auto& c : report.checks) {
    if (!c.pass) throw Exit{kFailed, path + ": invalid drawing (" + c.name + ": " + c.witness + ")"};
  }
}

struct Outcome {
  json output;
  int code = kOk;
  std::string message;
};

using Task = std::function<Outcome(const std::string&)>;

Outcome guarded(const Task& task, const std::string& path) {
  try {
    return task(path);
  } catch (const Exit& e) {
    return {json(), e.code, e.message};
  } catch (const LemmaWitnessFailure& e) {
    return {json(), kFailed, path + ": " + e.what()};
  } catch (const std::exception& e) {
    return {json(), kUsage, path + ": " + e.what()};
  }
}

// Runs `task` over the files, at most `jobs` at a time, and prints results in input order.
int run_files(const std::vector<std::string>& files, int jobs, const Task& task) {
  std::vector<Outcome> results(files.size());
  const std::size_t width = static_cast<std::size_t>(std::max(1, jobs));
  for (std::size_t start = 0; start < files.size(); start += width) {
    std::vector<std::future<Outcome>> batch;
    for (std::size_t i = start; i < std::min(files.size(), start + width); ++i) {
      batch.push_back(std::async(width > 1 ? std::launch::async : std::launch::deferred, guarded, task, files[i]));
    }
    for (std::size_t i = 0; i < batch.size(); ++i) results[start + i] = batch[i].get();
  }
  int code = kOk;
  json all = json::array();
  for (const auto& r : results) {
    if (!r.message.empty()) std::cerr << r.message << "\n";
    code = std::max(code, r.code);
    all.push_back(r.output);
  }
  if (files.size() == 1) {
    if (!results[0].output.is_null()) std::cout << results[0].output.dump(2) << "\n";
  } else {
    std::cout << all.dump(2) << "\n";
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for 3-plane drawings"};
  app.require_subcommand(1);

  std::vector<std::string> files;
  int jobs = 1;
  bool saturate_flag = false;

  auto* validate_cmd = app.add_subcommand("validate", "Check a drawing against the model assumptions");
  validate_cmd->add_option("files", files, "TDR files")->required();
  validate_cmd->add_option("--jobs", jobs, "Files processed in parallel");

  auto* census_cmd = app.add_subcommand("census", "Cell, trail and configuration counts");
  census_cmd->add_option("files", files, "TDR files")->required();
  census_cmd->add_flag("--saturate", saturate_flag, "Saturate before counting");
  census_cmd->add_option("--jobs", jobs, "Files processed in parallel");

  auto* check_cmd = app.add_subcommand("check", "Evaluate the 21 counting constraints");
  check_cmd->add_option("files", files, "TDR files")->required();
  check_cmd->add_flag("--saturate", saturate_flag, "Saturate before checking");
  check_cmd->add_option("--jobs", jobs, "Files processed in parallel");

  std::string target_text;
  bool symbolic = false;
  auto* certify_cmd = app.add_subcommand("certify", "Verify the edge or crossing certificate");
  certify_cmd->add_option("files", files, "TDR files");
  certify_cmd->add_option("--target", target_text, "edges or crossings")
      ->required()
      ->check(CLI::IsMember({"edges", "crossings"}));
  certify_cmd->add_flag("--saturate", saturate_flag, "Saturate before certifying");
  certify_cmd->add_flag("--symbolic", symbolic, "Sum the rows symbolically instead of evaluating a drawing");
  certify_cmd->add_option("--jobs", jobs, "Files processed in parallel");

  auto* generate_cmd = app.add_subcommand("generate", "Print a generated drawing");
  generate_cmd->require_subcommand(1);
  int layers = 2, rings = 1;
  std::string basic_name;
  auto* fig3_cmd = generate_cmd->add_subcommand("fig3", "Stacked hexagon cylinder");
  fig3_cmd->add_option("--layers", layers, "Number of layers")->check(CLI::PositiveNumber);
  auto* fig2_cmd = generate_cmd->add_subcommand("fig2", "Pentagonal rings with all diagonals");
  fig2_cmd->add_option("--rings", rings, "Number of rings")->check(CLI::PositiveNumber);
  auto* basic_cmd = generate_cmd->add_subcommand("basic", "Small named instance");
  basic_cmd->add_option("name", basic_name, "Instance name")->required()->check(CLI::IsMember(basic_names()));

  std::string scene_file;
  auto* ingest_cmd = app.add_subcommand("ingest", "Convert a straight-line scene to TDR");
  ingest_cmd->add_option("scene", scene_file, "Scene JSON")->required();

  int n = 12, budget = 40;
  std::uint64_t seed = 1;
  auto* random_cmd = app.add_subcommand("random", "Seeded random straight-line drawing");
  random_cmd->add_option("--n", n, "Vertices")->check(CLI::Range(3, 1000));
  random_cmd->add_option("--budget", budget, "Edge budget");
  random_cmd->add_option("--seed", seed, "Seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*validate_cmd) {
      return run_files(files, jobs, [&](const std::string& path) {
        ValidationReport r = validate(load(path, false));
        return Outcome{to_json(r), r.valid() ? kOk : kFailed, ""};
      });
    }
    if (*census_cmd) {
      return run_files(files, jobs, [&](const std::string& path) {
        Drawing d = load(path, saturate_flag);
        require_valid(d, path);
        return Outcome{to_json(census(d)), kOk, ""};
      });
    }
    if (*check_cmd) {
      return run_files(files, jobs, [&](const std::string& path) {
        Drawing d = load(path, saturate_flag);
        require_valid(d, path);
        CensusCounts c = census(d);
        ConstraintReport r = evaluate_constraints(c, c.saturated);
        return Outcome{to_json(r), r.all_applicable_pass() ? kOk : kFailed,
                       r.all_applicable_pass() ? "" : path + ": constraint rows failed"};
      });
    }
    if (*certify_cmd) {
      Target target = parse_target(target_text);
      if (symbolic) {
        if (!files.empty()) {
          std::cerr << "certify --symbolic takes no file\n";
          return kUsage;
        }
        SymbolicResult r = verify_symbolic(builtin_certificate(target));
        std::cout << to_json(target, r).dump(2) << "\n";
        if (!r.exact()) std::cerr << "residual: " << to_string(r.residual) << "\n";
        return r.exact() ? kOk : kFailed;
      }
      if (files.empty()) {
        std::cerr << "certify needs a FILE or --symbolic\n";
        return kUsage;
      }
      return run_files(files, jobs, [&](const std::string& path) {
        Drawing d = load(path, saturate_flag);
        if (!is_3saturated(d)) throw Exit{kUsage, path + ": not 3-saturated; rerun with --saturate"};
        NumericResult r = verify_numeric(d, target);
        bool ok = r.within_bound() && r.decomposition_holds;
        return Outcome{to_json(r), ok ? kOk : kFailed, ok ? "" : path + ": bound violated"};
      });
    }
    if (*generate_cmd) {
      Drawing d;
      if (*fig3_cmd) {
        d = gen_fig3(layers);
      } else if (*fig2_cmd) {
        d = gen_fig2(rings);
      } else {
        d = gen_basic(basic_name);
      }
      std::cout << serialize_tdr(d);
      return kOk;
    }
    if (*ingest_cmd) {
      std::string text = read_file(scene_file);
      try {
        std::cout << serialize_tdr(ingest_geometry(parse_scene(text)));
      } catch (const GeometryError& e) {
        std::cerr << scene_file << ": " << e.what() << "\n";
        return kFailed;
      }
      return kOk;
    }
    if (*random_cmd) {
      std::cout << serialize_tdr(random_drawing(n, budget, seed));
      return kOk;
    }
  } catch (const Exit& e) {
    std::cerr << e.message << "\n";
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
