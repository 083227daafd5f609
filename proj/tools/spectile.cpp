#include <algorithm>
#include <iostream>
#include <vector>

#include "CLI11.hpp"
#include "spectile/cli.hpp"
#include "spectile/errors.hpp"

int main(int argc, char** argv) {
  using spectile::cli::Command;
  using spectile::cli::RunConfig;

  CLI::App app{"Exact verification of spectral and tiling properties of interval unions"};
  app.require_subcommand(1);
  RunConfig config;
  std::int64_t jobs = 0;
  std::int64_t d_max = 0, grid = 0, order = 0, p_max = 0;
  std::string omega, spectrum, exponents, system;

  std::vector<CLI::Option*> jobs_options;
  auto add = [&](const char* name, const char* about) {
    auto* sub = app.add_subcommand(name, about);
    sub->add_option("--output,-o", config.output, "Output path, '-' for stdout");
    jobs_options.push_back(sub->add_option("--jobs,-j", jobs, "Worker threads (default: SPECTILE_JOBS or 1)"));
    return sub;
  };
  auto* verify = add("verify", "Check orthogonality and completeness of a candidate spectrum");
  auto* tiles = add("tiles", "Decide whether the set tiles R and print a certificate");
  auto* classify2 = add("classify2", "Replay the two-interval case analysis");
  auto* classify3 = add("classify3", "Replay the three-interval case analysis");
  auto* gv = add("gv", "Expand R_(j,k,l) and its quotients");
  auto* torus = add("torus", "Common zeros of a Vandermonde system at N-th roots of unity");
  auto* search = add("search", "Exhaustive three-interval search on a 1/d cell grid");

  for (auto* sub : {verify, tiles, classify2, classify3})
    sub->add_option("--omega", omega, "Intervals as 'left,length;...'")->required();
  for (auto* sub : {verify, classify2, classify3})
    sub->add_option("--spectrum", spectrum, "Spectrum as 'd=2;0,1/2'")->required();
  auto* p_max_opt = tiles->add_option("--p-max", p_max, "Largest greedy window in cells");
  gv->add_option("--exponents", exponents, "Exponents 'j,k,l'")->required();
  torus->add_option("--system,--exponents", system, "Exponent triples 'j,k,l|j,k,l'")->required();
  auto* order_opt = torus->add_option("--order", order, "Root of unity order N")->required();
  auto* d_max_opt = search->add_option("--d-max", d_max, "Largest d (default 6)");
  auto* grid_opt = search->add_option("--grid", grid, "Residue grid 1/grid (default d)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : spectile::cli::kInvalidInput;
  }

  auto* chosen = app.get_subcommands().front();
  try {
    config.command = spectile::cli::parse_command(chosen->get_name());
    config.jobs = jobs > 0 ? static_cast<unsigned>(jobs) : spectile::cli::jobs_from_environment();
  } catch (const spectile::Error& e) {
    std::cerr << "spectile: " << e.what() << '\n';
    return spectile::cli::kInvalidInput;
  }
  const bool jobs_given = std::any_of(jobs_options.begin(), jobs_options.end(), [](CLI::Option* o) { return o->count() > 0; });
  if (jobs_given && jobs < 1) {
    std::cerr << "spectile: --jobs must be >= 1\n";
    return spectile::cli::kInvalidInput;
  }
  if (!omega.empty()) config.omega = omega;
  if (!spectrum.empty()) config.spectrum = spectrum;
  if (!exponents.empty()) config.exponents = exponents;
  if (!system.empty()) config.system = system;
  if (d_max_opt->count()) config.d_max = d_max;
  if (grid_opt->count()) config.grid = grid;
  if (order_opt->count()) config.order = order;
  if (p_max_opt->count()) config.p_max = p_max;
  return spectile::cli::execute(config, std::cout, std::cerr);
}
