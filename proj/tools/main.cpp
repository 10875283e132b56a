// swapchain command-line tool.

#include <cstdint>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "swapchain/canonical_path.hpp"
#include "swapchain/cycle_decomp.hpp"
#include "swapchain/errors.hpp"
#include "swapchain/mixing_lab.hpp"
#include "swapchain/realization.hpp"
#include "swapchain/ryser.hpp"
#include "swapchain/swap_chain.hpp"
#include "swapchain/text_io.hpp"

namespace sc = swapchain;

namespace {

constexpr std::uint64_t kDefaultSeed = 20240601;

std::string fmt_double(double x) {
  std::ostringstream os;
  os.precision(10);
  os << x;
  return os.str();
}

int run_check(const std::string& path) {
  const auto ds = sc::read_degree_sequence_file(path);
  if (!ds.sums_agree()) {
    std::cout << "not graphical: degree sums differ\n";
    return 1;
  }
  if (!sc::is_graphical(ds)) {
    std::cout << "not graphical: Gale-Ryser condition fails\n";
    return 1;
  }
  std::cout << "graphical\n";
  return 0;
}

int run_sample(const std::string& path, std::uint64_t steps, std::uint64_t seed,
               std::size_t count, bool stats) {
  const auto ds = sc::read_degree_sequence_file(path);
  const auto graphs = sc::sample_many(ds, steps, seed, count);
  if (!stats) {
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      if (i > 0) std::cout << '\n';
      std::cout << sc::format_graph(graphs[i]);
    }
    return 0;
  }
  std::map<std::string, std::size_t> hist;
  for (const auto& g : graphs) ++hist[g.key()];
  std::cout << "realization,count,frequency\n";
  for (const auto& [key, n] : hist) {
    std::cout << key << ',' << n << ','
              << fmt_double(static_cast<double>(n) / static_cast<double>(graphs.size())) << '\n';
  }
  return 0;
}

int run_decompose(const std::string& xf, const std::string& yf, std::uint64_t seed, bool all) {
  const auto x = sc::read_graph_file(xf);
  const auto y = sc::read_graph_file(yf);
  sc::require_same_degrees(x, y);
  auto print = [](const sc::Pairing& s) {
    const auto d = sc::decompose(s);
    for (const auto& c : d.circuits) std::cout << "circuit " << sc::format_circuit(c) << '\n';
    for (const auto& c : d.cycles) std::cout << "cycle " << sc::format_cycle(c) << '\n';
  };
  if (!all) {
    print(sc::random_pairing(x, y, seed));
    return 0;
  }
  sc::PairingEnumerator it(x, y);
  std::size_t i = 0;
  while (auto s = it.next()) {
    std::cout << "# pairing " << i++ << '\n';
    print(*s);
  }
  return 0;
}

int run_canonical_path(const std::string& xf, const std::string& yf, std::uint64_t seed,
                       const std::string& index, bool certify) {
  const auto x = sc::read_graph_file(xf);
  const auto y = sc::read_graph_file(yf);
  sc::require_same_degrees(x, y);
  const sc::Pairing s = index.empty() ? sc::random_pairing(x, y, seed)
                                      : sc::pairing_at(x, y, sc::BigInt(index));
  const auto path = sc::canonical_path(x, y, s);
  for (std::size_t i = 0; i < path.states.size(); ++i) {
    std::cout << "# state " << i << '\n' << sc::format_graph(path.states[i]);
  }
  if (!certify) return 0;
  std::cout << "step,swap,switch_distance\n";
  for (const auto& c : sc::certify(x, y, path)) {
    std::cout << c.step << ',' << (c.swap ? sc::format_swap(*c.swap) : std::string()) << ','
              << (c.switch_distance ? std::to_string(*c.switch_distance) : std::string(">cap"))
              << '\n';
  }
  return 0;
}

int run_mix_report(const std::string& path, double eps, bool with_congestion) {
  const auto ds = sc::read_degree_sequence_file(path);
  const auto space = sc::enumerate_states(ds);
  const auto kernel = sc::build_kernel(space);
  std::cout << "n_states,lambda2,tau_rel,tv_mix_time,kappa,kappa_float,max_edge,"
               "max_hat_switch_distance\n";
  std::cout << space.size() << ',';
  if (space.size() < 2) {
    std::cout << ",,0,,,,\n";
    return 0;
  }
  const auto spec = sc::spectral_gap(kernel);
  std::cout << fmt_double(spec.lambda2) << ',' << fmt_double(spec.tau_rel) << ','
            << sc::tv_mixing_time(kernel, eps) << ',';
  sc::CongestionOptions opts;
  opts.certify = true;
  if (!with_congestion || space.size() > opts.max_states) {
    std::cout << ",,,\n";
    return 0;
  }
  const auto cong = sc::congestion(space, kernel, opts);
  const int msd = cong.max_switch_distance.value_or(-1);
  std::cout << cong.kappa << ',' << fmt_double(cong.kappa_float) << ',' << cong.edge_a << '-'
            << cong.edge_b << ',' << (msd < 0 ? std::string(">cap") : std::to_string(msd))
            << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bipartite degree-sequence swap chain tool"};
  app.set_version_flag("--version", "swapchain 0.1.0");
  app.require_subcommand(1);

  std::string ds_file;
  std::string x_file;
  std::string y_file;
  std::uint64_t seed = kDefaultSeed;
  std::uint64_t steps = 0;
  std::size_t count = 1;
  bool stats = false;
  bool all = false;
  bool certify = false;
  bool no_congestion = false;
  std::string pairing_index;
  double eps = 0.01;

  auto* check = app.add_subcommand("check", "Test whether a degree sequence is graphical");
  check->add_option("ds", ds_file, "degree sequence file")->required()->check(CLI::ExistingFile);

  auto* realize = app.add_subcommand("realize", "Greedy realization of a degree sequence");
  realize->add_option("ds", ds_file, "degree sequence file")->required()->check(CLI::ExistingFile);

  auto* sample = app.add_subcommand("sample", "Run the swap chain from the greedy realization");
  sample->add_option("--ds", ds_file, "degree sequence file")->required()->check(CLI::ExistingFile);
  sample->add_option("--steps", steps, "chain steps per sample")->required();
  sample->add_option("--seed", seed, "random seed")->capture_default_str();
  sample->add_option("--count", count, "number of samples")->capture_default_str();
  sample->add_flag("--stats", stats, "print a realization frequency table as CSV");

  auto* transform = app.add_subcommand("transform", "Swap sequence from g1 to g2");
  transform->add_option("g1", x_file)->required()->check(CLI::ExistingFile);
  transform->add_option("g2", y_file)->required()->check(CLI::ExistingFile);

  auto* decompose = app.add_subcommand("decompose", "Circuit and cycle decomposition of X ^ Y");
  decompose->add_option("x", x_file)->required()->check(CLI::ExistingFile);
  decompose->add_option("y", y_file)->required()->check(CLI::ExistingFile);
  auto* dseed = decompose->add_option("--seed", seed, "pairing seed")->capture_default_str();
  decompose->add_flag("--all", all, "every pairing")->excludes(dseed);

  auto* canon = app.add_subcommand("canonical-path", "Canonical path from X to Y");
  canon->add_option("x", x_file)->required()->check(CLI::ExistingFile);
  canon->add_option("y", y_file)->required()->check(CLI::ExistingFile);
  auto* cseed = canon->add_option("--seed", seed, "pairing seed")->capture_default_str();
  canon->add_option("--pairing-index", pairing_index, "pairing position in lexicographic order")
      ->check(CLI::NonNegativeNumber)
      ->excludes(cseed);
  canon->add_flag("--certify", certify, "print the switch-distance certificate");

  auto* mix = app.add_subcommand("mix-report", "Exact mixing diagnostics of a small instance");
  mix->add_option("--ds", ds_file, "degree sequence file")->required()->check(CLI::ExistingFile);
  mix->add_option("--eps", eps, "total-variation threshold")->capture_default_str()
      ->check(CLI::Range(1e-12, 1.0));
  mix->add_flag("--no-congestion", no_congestion, "skip the canonical-path congestion");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*check) return run_check(ds_file);
    if (*realize) {
      std::cout << sc::format_graph(sc::greedy_realize(sc::read_degree_sequence_file(ds_file)));
      return 0;
    }
    if (*sample) return run_sample(ds_file, steps, seed, count, stats);
    if (*transform) {
      const auto g1 = sc::read_graph_file(x_file);
      const auto g2 = sc::read_graph_file(y_file);
      for (const auto& s : sc::ryser_sequence(g1, g2)) std::cout << sc::format_swap(s) << '\n';
      return 0;
    }
    if (*decompose) return run_decompose(x_file, y_file, seed, all);
    if (*canon) return run_canonical_path(x_file, y_file, seed, pairing_index, certify);
    if (*mix) return run_mix_report(ds_file, eps, !no_congestion);
  } catch (const sc::Error& e) {
    std::cerr << "error: " << sc::error_code_name(e.code()) << ": " << e.what() << '\n';
    return 1;
  }
  return 2;
}
