#include <cmath>
#include <cstdint>
#include <ctime>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "degseq/acceptance.hpp"
#include "degseq/bounds.hpp"
#include "degseq/codec.hpp"
#include "degseq/degree_sequence.hpp"
#include "degseq/enumeration.hpp"
#include "degseq/errors.hpp"
#include "degseq/io.hpp"
#include "degseq/order_transforms.hpp"
#include "degseq/rng.hpp"
#include "degseq/samplers.hpp"
#include "degseq/tree.hpp"
#include "degseq/weights.hpp"

// Command-line surface over the library. Exit codes: 0 success, 1 a verified
// property or requested check failed, 2 usage or input errors. Every
// randomized subcommand embeds its seed in the output so a rerun with that
// seed reproduces the report byte for byte (timestamps live in one header
// field and are the only exception).

namespace {

struct UsageError {
  std::string message;
};

[[noreturn]] void usage_fail(const std::string& message) { throw UsageError{message}; }

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> out;
  std::size_t at = 0;
  while (at <= text.size()) {
    std::size_t next = text.find(',', at);
    if (next == std::string::npos) next = text.size();
    const std::string token = text.substr(at, next - at);
    try {
      std::size_t used = 0;
      const double value = std::stod(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      out.push_back(value);
    } catch (const std::exception&) {
      usage_fail("not a number in list: '" + token + "'");
    }
    at = next + 1;
  }
  return out;
}

std::string join_ints(const std::vector<int>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(values[i]);
  }
  return out;
}

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::uint64_t entropy_seed() {
  std::random_device rd;
  const std::uint64_t hi = rd(), lo = rd();
  return (hi << 32) ^ lo ^ static_cast<std::uint64_t>(std::time(nullptr));
}

// Shared source selection: a degree file fixes n, the distribution inputs
// need --n. Randomized commands need --seed unless --entropy opts in.
struct SourceOptions {
  std::string degrees_path, offspring_path, weights_path;
  int n = 0;

  void attach(CLI::App* cmd, bool with_n) {
    auto* deg = cmd->add_option("--degrees", degrees_path, "degree sequence file");
    auto* off = cmd->add_option("--offspring", offspring_path,
                                "offspring law JSON; tree drawn via conditioning");
    auto* wts = cmd->add_option("--weights", weights_path,
                                "weight sequence JSON; tree drawn via the tilted law");
    deg->excludes(off)->excludes(wts);
    off->excludes(wts);
    if (with_n) {
      auto* n_opt = cmd->add_option("--n", n, "tree size for --offspring/--weights");
      n_opt->excludes(deg);
    }
  }

  void require_one() const {
    const int picked = !degrees_path.empty() + !offspring_path.empty() + !weights_path.empty();
    if (picked != 1) usage_fail("pick exactly one of --degrees, --offspring, --weights");
    if (degrees_path.empty() && n <= 0)
      usage_fail("--offspring/--weights need --n at least 1");
  }
};

struct SeedOptions {
  std::uint64_t seed = 0;
  bool entropy = false;
  CLI::Option* seed_opt = nullptr;

  void attach(CLI::App* cmd) {
    seed_opt = cmd->add_option("--seed", seed, "rng seed; reruns reproduce the report");
    auto* ent = cmd->add_flag("--entropy", entropy, "draw the seed from system entropy");
    seed_opt->excludes(ent);
  }

  std::uint64_t resolve() const {
    if (seed_opt->count() > 0) return seed;
    if (entropy) return entropy_seed();
    usage_fail("randomized subcommand: pass --seed N or opt in with --entropy");
  }
};

void write_report(const std::string& out_path, const std::string& content) {
  if (out_path.empty() || out_path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) usage_fail("cannot open output file: " + out_path);
  file << content;
}

int cmd_encode(const std::string& degrees_path, const std::string& code_text) {
  const degseq::DegreeSequence d = degseq::read_degree_file(degrees_path);
  const degseq::SequenceCode code(degseq::parse_int_list(code_text), d);
  std::cout << degseq::format_tree(degseq::tree_from_sequence(code)) << "\n";
  return 0;
}

int cmd_decode(const std::string& tree_text, bool with_degrees) {
  const degseq::LabeledRootedTree t = degseq::parse_tree(tree_text);
  const degseq::SequenceCode code = degseq::sequence_from_tree(t);
  std::cout << join_ints(code.values) << "\n";
  if (with_degrees) std::cout << join_ints(code.degrees.entries()) << "\n";
  return 0;
}

int cmd_sample(const SourceOptions& source, const SeedOptions& seed_opts, long long count,
               bool heights) {
  source.require_one();
  const std::uint64_t seed = seed_opts.resolve();
  degseq::RngStream rng(seed);
  std::cout << "# seed: " << seed << "\n";

  const auto emit_tree = [&](const degseq::LabeledRootedTree& t) {
    if (heights)
      std::cout << t.height() << "\n";
    else
      std::cout << degseq::format_tree(t) << "\n";
  };

  if (!source.degrees_path.empty()) {
    const degseq::DegreeSequence d = degseq::read_degree_file(source.degrees_path);
    for (long long i = 0; i < count; ++i) {
      if (heights)
        std::cout << degseq::sample_uniform_height(d, rng) << "\n";
      else
        std::cout << degseq::format_tree(degseq::sample_uniform_tree(d, rng)) << "\n";
    }
    return 0;
  }

  if (!source.offspring_path.empty()) {
    const degseq::WeightSequence mu = degseq::read_weights_json(source.offspring_path);
    degseq::BienaymeSampler sampler(mu, source.n);
    for (long long i = 0; i < count; ++i) {
      if (heights)
        std::cout << sampler.draw_height(rng) << "\n";
      else
        emit_tree(sampler.draw_tree(rng));
    }
    return 0;
  }

  const degseq::WeightSequence w = degseq::read_weights_json(source.weights_path);
  const degseq::WeightSequence tilted(degseq::tilt(w).mu_hat);
  degseq::BienaymeSampler sampler(tilted, source.n);
  for (long long i = 0; i < count; ++i) {
    if (heights)
      std::cout << sampler.draw_height(rng) << "\n";
    else
      emit_tree(sampler.draw_tree(rng));
  }
  return 0;
}

int cmd_enumerate(const std::string& degrees_path, long long budget) {
  const degseq::DegreeSequence d = degseq::read_degree_file(degrees_path);
  const degseq::HeightDistribution law =
      degseq::exact_height_distribution(d, degseq::BigInt(budget));
  nlohmann::ordered_json out = nlohmann::ordered_json::object();
  for (const auto& [height, trees] : law.counts) out[std::to_string(height)] = trees.str();
  std::cout << out.dump() << "\n";
  return 0;
}

int cmd_dominance(const std::string& a_path, const std::string& b_path, long long budget) {
  const degseq::DegreeSequence a = degseq::read_degree_file(a_path);
  const degseq::DegreeSequence b = degseq::read_degree_file(b_path);
  const degseq::CompareResult cmp =
      degseq::stochastic_compare(degseq::exact_height_distribution(a, degseq::BigInt(budget)),
                                 degseq::exact_height_distribution(b, degseq::BigInt(budget)));
  switch (cmp.verdict) {
    case degseq::CompareVerdict::a_dominates:
      std::cout << (cmp.strict ? "a-dominates strict\n" : "a-dominates\n");
      return 0;
    case degseq::CompareVerdict::equal:
      std::cout << "equal\n";
      return 0;
    case degseq::CompareVerdict::b_dominates:
      std::cout << (cmp.strict ? "b-dominates strict\n" : "b-dominates\n");
      return 1;
    case degseq::CompareVerdict::incomparable:
      std::cout << "incomparable\n";
      return 1;
  }
  return 1;
}

int cmd_tails(const SourceOptions& source, const SeedOptions& seed_opts, long long samples,
              const std::string& grid_text, const std::string& check, const std::string& format,
              const std::string& out_path) {
  source.require_one();
  if (check != "none" && source.degrees_path.empty())
    usage_fail("--check needs a fixed degree sequence; use --degrees");
  const std::uint64_t seed = seed_opts.resolve();

  std::vector<double> grid;
  if (!grid_text.empty()) grid = parse_double_list(grid_text);

  degseq::EmpiricalTail tail;
  degseq::BoundVerdict verdict;
  bool have_verdict = false;
  if (!source.degrees_path.empty()) {
    const degseq::DegreeSequence d = degseq::read_degree_file(source.degrees_path);
    tail = degseq::tail_experiment(d, samples, grid, seed);
    if (check == "gaussian") {
      verdict = degseq::check_gaussian_bound(tail, degseq::sigma_stats(d).delta);
      have_verdict = true;
    } else if (check == "logsigma") {
      const degseq::SigmaStats st = degseq::sigma_stats(d);
      verdict = degseq::check_logsigma_bound(tail, st.sigma_d, st.sigma_prime);
      have_verdict = true;
    }
  } else if (!source.offspring_path.empty()) {
    const degseq::WeightSequence mu = degseq::read_weights_json(source.offspring_path);
    tail = degseq::tail_experiment_offspring(mu, source.n, samples, grid, seed);
  } else {
    const degseq::WeightSequence w = degseq::read_weights_json(source.weights_path);
    tail = degseq::tail_experiment_weights(w, source.n, samples, grid, seed);
  }

  const degseq::BoundVerdict* verdict_ptr = have_verdict ? &verdict : nullptr;
  const std::string stamp = utc_timestamp();
  const std::string report = format == "json" ? degseq::tail_report_json(tail, verdict_ptr, stamp)
                                              : degseq::tail_report_csv(tail, verdict_ptr, stamp);
  write_report(out_path, report);
  return have_verdict && !verdict.pass ? 1 : 0;
}

int cmd_attach(const std::string& degrees_path, int x, int y, int b, bool exact,
               const SeedOptions& seed_opts, long long samples) {
  const degseq::DegreeSequence d = degseq::read_degree_file(degrees_path);
  const double bound = std::pow(1.0 - static_cast<double>(x) / (d.n() - 1), b);
  if (exact) {
    const degseq::ExactEvent e = degseq::attachment_probability_exact(d, x, y, b);
    const bool holds = e.probability <= bound + 1e-12;
    std::cout << "favorable: " << e.favorable << "\ntotal: " << e.total
              << "\nprobability: " << e.probability << "\nbound: " << bound
              << "\nholds: " << (holds ? "true" : "false") << "\n";
    return holds ? 0 : 1;
  }
  const std::uint64_t seed = seed_opts.resolve();
  const degseq::EventBound e = degseq::geometric_attachment_experiment(d, x, y, b, samples, seed);
  std::cout << "# seed: " << seed << "\nsamples: " << e.samples << "\nestimate: " << e.estimate
            << "\nupper_ci: " << e.upper_ci << "\nbound: " << e.bound
            << "\nholds: " << (e.holds ? "true" : "false") << "\n";
  return e.holds ? 0 : 1;
}

int cmd_transform(const std::string& degrees_path, const std::string& move_name, int i, int j) {
  const degseq::DegreeSequence d = degseq::read_degree_file(degrees_path);
  degseq::CoverMove move;
  move.kind = move_name == "merge" ? degseq::CoverKind::merge : degseq::CoverKind::skew;
  move.i = i;
  move.j = j;
  std::cout << join_ints(degseq::apply_cover(d, move).entries()) << "\n";
  return 0;
}

int cmd_reduce(const std::string& degrees_path) {
  const degseq::DegreeSequence d = degseq::read_degree_file(degrees_path);
  for (const degseq::DegreeSequence& step : degseq::sub_binary_chain(d))
    std::cout << join_ints(step.entries()) << "\n";
  return 0;
}

int cmd_verify(const std::vector<int>& only, bool quick) {
  const int failures = degseq::run_acceptance(only, quick, std::cout);
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fixed-degree random tree laboratory"};
  app.require_subcommand(1);
  int workers = 1;
  app.add_option("--workers", workers,
                 "worker-count hint; results never depend on it (this build runs one worker)")
      ->check(CLI::PositiveNumber);

  // encode
  auto* encode = app.add_subcommand("encode", "decode a sequence code into its tree");
  std::string encode_degrees, encode_code;
  encode->add_option("--degrees", encode_degrees, "degree sequence file")->required();
  encode->add_option("--code", encode_code, "comma-separated code values")->required();

  // decode
  auto* decode = app.add_subcommand("decode", "read a tree back into its sequence code");
  std::string decode_tree;
  bool decode_with_degrees = false;
  decode->add_option("--tree", decode_tree, "tree as root;p_1,...,p_n")->required();
  decode->add_flag("--print-degrees", decode_with_degrees, "also print the degree sequence");

  // sample
  auto* sample = app.add_subcommand("sample", "draw trees or heights");
  SourceOptions sample_source;
  SeedOptions sample_seed;
  long long sample_count = 1;
  bool sample_heights = false;
  sample_source.attach(sample, true);
  sample_seed.attach(sample);
  sample->add_option("--count", sample_count, "number of draws")->check(CLI::PositiveNumber);
  sample->add_flag("--heights", sample_heights, "print heights instead of trees");

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "exact height distribution as JSON");
  std::string enumerate_degrees;
  long long enumerate_budget = 10000000;
  enumerate->add_option("--degrees", enumerate_degrees, "degree sequence file")->required();
  enumerate->add_option("--budget", enumerate_budget, "enumeration budget")
      ->check(CLI::PositiveNumber);

  // dominance
  auto* dominance = app.add_subcommand("dominance", "exact stochastic comparison of two height laws");
  std::string dominance_a, dominance_b;
  long long dominance_budget = 10000000;
  dominance->add_option("--a", dominance_a, "first degree sequence file")->required();
  dominance->add_option("--b", dominance_b, "second degree sequence file")->required();
  dominance->add_option("--budget", dominance_budget, "enumeration budget")
      ->check(CLI::PositiveNumber);

  // tails
  auto* tails = app.add_subcommand("tails", "survival of ht/sqrt(n) with optional ceilings");
  SourceOptions tails_source;
  SeedOptions tails_seed;
  long long tails_samples = 10000;
  std::string tails_grid, tails_check = "none", tails_format = "csv", tails_out = "-";
  tails_source.attach(tails, true);
  tails_seed.attach(tails);
  tails->add_option("--samples", tails_samples, "monte-carlo sample count")
      ->check(CLI::PositiveNumber);
  tails->add_option("--grid", tails_grid, "comma-separated grid of x values");
  tails->add_option("--check", tails_check, "ceiling to verify: none, gaussian, logsigma")
      ->check(CLI::IsMember({"none", "gaussian", "logsigma"}));
  tails->add_option("--format", tails_format, "report format")
      ->check(CLI::IsMember({"csv", "json"}));
  tails->add_option("--out", tails_out, "output file, - for stdout");

  // attach
  auto* attach = app.add_subcommand("attach", "geometric attachment-distance event vs its ceiling");
  std::string attach_degrees;
  SeedOptions attach_seed;
  int attach_x = 0, attach_y = 0, attach_b = 1;
  bool attach_exact = false;
  long long attach_samples = 10000;
  attach->add_option("--degrees", attach_degrees, "degree sequence file")->required();
  attach->add_option("--x", attach_x, "prefix index of the target tree")->required();
  attach->add_option("--y", attach_y, "prefix index of the arriving vertex")->required();
  attach->add_option("--b", attach_b, "distance threshold")->required();
  attach->add_flag("--exact", attach_exact, "enumerate instead of sampling");
  attach_seed.attach(attach);
  attach->add_option("--samples", attach_samples, "monte-carlo sample count")
      ->check(CLI::PositiveNumber);

  // transform
  auto* transform = app.add_subcommand("transform", "apply one covering move");
  std::string transform_degrees, transform_move;
  int transform_i = 0, transform_j = 0;
  transform->add_option("--degrees", transform_degrees, "degree sequence file")->required();
  transform->add_option("--move", transform_move, "skew or merge")
      ->required()
      ->check(CLI::IsMember({"skew", "merge"}));
  transform->add_option("--i", transform_i, "position that grows (1-based)")->required();
  transform->add_option("--j", transform_j, "position that shrinks (1-based)")->required();

  // reduce
  auto* reduce = app.add_subcommand("reduce", "reduction chain of covering moves");
  std::string reduce_degrees;
  bool reduce_sub_binary = false;
  reduce->add_option("--degrees", reduce_degrees, "degree sequence file")->required();
  reduce->add_flag("--sub-binary", reduce_sub_binary, "reduce until no entry exceeds 2");

  // verify
  auto* verify = app.add_subcommand("verify", "run the pinned verification suite");
  std::vector<int> verify_only;
  bool verify_quick = false;
  verify->add_flag("--quick", verify_quick, "smaller sweeps, identical tolerances");
  verify->add_option("--only", verify_only, "criterion ids to run");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*encode) return cmd_encode(encode_degrees, encode_code);
    if (*decode) return cmd_decode(decode_tree, decode_with_degrees);
    if (*sample) return cmd_sample(sample_source, sample_seed, sample_count, sample_heights);
    if (*enumerate) return cmd_enumerate(enumerate_degrees, enumerate_budget);
    if (*dominance) return cmd_dominance(dominance_a, dominance_b, dominance_budget);
    if (*tails)
      return cmd_tails(tails_source, tails_seed, tails_samples, tails_grid, tails_check,
                       tails_format, tails_out);
    if (*attach)
      return cmd_attach(attach_degrees, attach_x, attach_y, attach_b, attach_exact, attach_seed,
                        attach_samples);
    if (*transform)
      return cmd_transform(transform_degrees, transform_move, transform_i, transform_j);
    if (*reduce) {
      if (!reduce_sub_binary) usage_fail("reduce: pass --sub-binary");
      return cmd_reduce(reduce_degrees);
    }
    if (*verify) return cmd_verify(verify_only, verify_quick);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.message << "\n";
    return 2;
  } catch (const degseq::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
