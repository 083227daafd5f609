#include "spectile/search.hpp"

#include <algorithm>
#include <atomic>
#include <bitset>
#include <thread>

#include "spectile/errors.hpp"
#include "spectile/exactnum.hpp"
#include "spectile/geometry.hpp"
#include "spectile/verify.hpp"

namespace spectile::search {

using classify::Json;

namespace {
constexpr std::size_t kMaxVertices = 512;
using VertexSet = std::bitset<kMaxVertices>;

void extend(const std::vector<VertexSet>& adjacent, const VertexSet& candidates, std::size_t first, std::int64_t n,
            std::size_t remaining, std::vector<std::int64_t>& chosen, std::vector<std::vector<std::int64_t>>& out) {
  if (remaining == 0) {
    out.push_back(chosen);
    return;
  }
  if (candidates.count() < remaining) return;
  for (std::size_t v = first; v < static_cast<std::size_t>(n); ++v) {
    if (!candidates[v]) continue;
    chosen.push_back(static_cast<std::int64_t>(v));
    extend(adjacent, candidates & adjacent[v], v + 1, n, remaining - 1, chosen, out);
    chosen.pop_back();
  }
}

Json counts(const std::map<std::string, std::uint64_t>& m) {
  Json out = Json::object();
  for (const auto& [k, v] : m) out[k] = v;
  return out;
}
}  // namespace

std::vector<ConfigResult> enumerate_configs(std::int64_t d, std::int64_t grid) {
  std::vector<ConfigResult> out;
  const std::int64_t window = d * grid;
  for (std::int64_t k1 = 1; k1 <= d - 2; ++k1)
    for (std::int64_t k2 = 1; k1 + k2 <= d - 1; ++k2) {
      const std::int64_t k3 = d - k1 - k2;
      for (std::int64_t l2 = k1 + 1; l2 + k2 + 1 + k3 <= window; ++l2)
        for (std::int64_t l3 = l2 + k2 + 1; l3 + k3 <= window; ++l3) {
          ConfigResult c;
          c.d = d;
          c.grid = grid;
          c.k = {k1, k2, k3};
          c.l2 = l2;
          c.l3 = l3;
          for (std::int64_t i = 0; i < k1; ++i) c.cells.push_back(i);
          for (std::int64_t i = 0; i < k2; ++i) c.cells.push_back(l2 + i);
          for (std::int64_t i = 0; i < k3; ++i) c.cells.push_back(l3 + i);
          c.omega = geometry::from_cells(d, c.cells).to_string();
          out.push_back(std::move(c));
        }
    }
  return out;
}

std::vector<std::vector<std::int64_t>> spectra_on_grid(const std::vector<std::int64_t>& cells, std::int64_t d,
                                                       std::int64_t grid) {
  const std::int64_t n = d * grid;
  if (n > static_cast<std::int64_t>(kMaxVertices)) throw LimitExceeded("d * grid exceeds " + std::to_string(kMaxVertices));
  const auto order = static_cast<exactnum::Order>(n);
  VertexSet zeros;
  exactnum::RootSumAccumulator acc(order);
  for (std::int64_t t = 1; t < n; ++t) {
    acc.clear();
    for (auto c : cells) acc.add(1, static_cast<std::uint64_t>((c * t) % n));
    zeros[static_cast<std::size_t>(t)] = acc.is_zero();
  }
  std::vector<VertexSet> adjacent(static_cast<std::size_t>(n));
  for (std::int64_t v = 0; v < n; ++v)
    for (std::int64_t u = 0; u < n; ++u)
      adjacent[v][u] = u != v && zeros[static_cast<std::size_t>(((u - v) % n + n) % n)];
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> chosen{0};
  extend(adjacent, adjacent[0], 1, n, static_cast<std::size_t>(d - 1), chosen, out);
  return out;
}

void run_config(ConfigResult& config, bool cross_check) {
  try {
    const auto omega = geometry::from_cells(config.d, config.cells);
    const auto tiling = classify::tiles_decision(omega);
    config.tiles = tiling.tiles();
    config.tiling_method = tiling.method;
    std::map<std::string, vandermonde::TorusSolutionSet> torus_cache;
    const auto n = static_cast<std::uint64_t>(config.d * config.grid);
    for (const auto& residues : spectra_on_grid(config.cells, config.d, config.grid)) {
      std::vector<Rational> rs;
      for (auto m : residues) rs.push_back(make_rational(m, config.grid));
      const classify::PeriodicSpectrum lambda(config.d, rs);
      if (cross_check) {
        if (!classify::verify_orthogonality(omega, lambda))
          throw InvariantViolation("mask-zero spectrum " + lambda.to_string() + " fails verify_orthogonality");
        if (!classify::verify_completeness(omega, lambda).accepted())
          throw InvariantViolation("mask-zero spectrum " + lambda.to_string() + " fails verify_completeness");
      }
      ++config.spectral_count;
      if (!config.tiles && !config.counterexample) config.counterexample = lambda.to_string();
      const auto report = classify::classify_three_intervals(omega, lambda);
      ++config.branches[report.branch];
      if (!report.exceptional) continue;
      ExceptionalHit hit;
      hit.spectrum = lambda.to_string();
      hit.payload = *report.exceptional;
      hit.torus_order = n;
      std::string key;
      for (const auto& e : hit.payload.system) key += e.to_string() + "|";
      auto it = torus_cache.find(key);
      if (it == torus_cache.end()) it = torus_cache.emplace(key, vandermonde::torus_solutions(hit.payload.system, n)).first;
      const auto& solutions = it->second;
      if (n % hit.payload.order != 0) throw InvariantViolation("spectrum point is not an N-th root of unity");
      std::array<std::uint64_t, 3> point{};
      for (int m = 0; m < 3; ++m) point[m] = hit.payload.point[m] * (n / hit.payload.order);
      hit.trivial_solutions = solutions.trivial_count;
      hit.nontrivial_solutions = solutions.nontrivial_count;
      hit.point_in_solutions = std::binary_search(solutions.solutions.begin(), solutions.solutions.end(), point);
      if (!hit.point_in_solutions) throw InvariantViolation("spectrum point missing from the torus solutions");
      config.exceptional.push_back(std::move(hit));
    }
  } catch (const std::exception& e) {
    config.error = e.what();
  }
}

Json ConfigResult::to_json() const {
  Json out;
  out["kind"] = "config";
  out["d"] = d;
  out["grid"] = grid;
  out["cells"] = cells;
  out["omega"] = omega;
  out["k"] = {k[0], k[1], k[2]};
  out["l"] = {l2, l3};
  out["spectralCount"] = spectral_count;
  out["tiles"] = tiles;
  out["tilingMethod"] = tiling_method;
  out["tilesAll"] = tiles_all();
  out["exceptionalCount"] = exceptional.size();
  out["branches"] = counts(branches);
  if (!exceptional.empty()) {
    Json hits = Json::array();
    for (const auto& h : exceptional) {
      Json j;
      j["spectrum"] = h.spectrum;
      j["payload"] = h.payload.to_json();
      j["torusOrder"] = h.torus_order;
      j["trivialSolutions"] = h.trivial_solutions;
      j["nontrivialSolutions"] = h.nontrivial_solutions;
      j["pointInSolutions"] = h.point_in_solutions;
      hits.push_back(j);
    }
    out["exceptional"] = hits;
  }
  if (counterexample) {
    out["counterexample"] = {{"omega", omega}, {"spectrum", *counterexample}};
  } else {
    out["counterexample"] = nullptr;
  }
  if (error) out["error"] = *error;
  return out;
}

Json DSummary::to_json() const {
  Json out;
  out["kind"] = "summary";
  out["d"] = d;
  out["grid"] = grid;
  out["configs"] = configs;
  out["spectralSets"] = spectral_sets;
  out["spectra"] = spectra;
  out["tilingSets"] = tiling_sets;
  out["exceptionalHits"] = exceptional_hits;
  out["counterexamples"] = counterexamples;
  out["errors"] = errors;
  return out;
}

std::uint64_t SearchReport::counterexamples() const {
  std::uint64_t n = 0;
  for (const auto& s : summaries) n += s.counterexamples;
  return n;
}

std::uint64_t SearchReport::errors() const {
  std::uint64_t n = 0;
  for (const auto& s : summaries) n += s.errors;
  return n;
}

SearchReport exceptional_search(const SearchOptions& options,
                                const std::function<void(const std::vector<ConfigResult>&, const DSummary&)>& sink) {
  if (options.d_min < 1 || options.d_max < options.d_min) throw PreconditionViolated("invalid d range");
  if (options.grid < 0) throw PreconditionViolated("grid must be positive");
  SearchReport report;
  for (std::int64_t d = std::max<std::int64_t>(options.d_min, 3); d <= options.d_max; ++d) {
    const std::int64_t grid = options.grid ? options.grid : d;
    auto configs = enumerate_configs(d, grid);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i; (i = next.fetch_add(1)) < configs.size();) run_config(configs[i], options.cross_check);
    };
    const unsigned jobs = std::max(1u, options.jobs);
    if (jobs == 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(worker);
      for (auto& t : pool) t.join();
    }
    DSummary summary;
    summary.d = d;
    summary.grid = grid;
    for (const auto& c : configs) {
      ++summary.configs;
      summary.spectra += c.spectral_count;
      summary.spectral_sets += c.spectral_count > 0;
      summary.tiling_sets += c.tiles;
      summary.exceptional_hits += c.exceptional.size();
      summary.counterexamples += c.counterexample.has_value();
      summary.errors += c.error.has_value();
    }
    if (sink) sink(configs, summary);
    report.summaries.push_back(summary);
    report.configs.insert(report.configs.end(), std::make_move_iterator(configs.begin()),
                          std::make_move_iterator(configs.end()));
  }
  return report;
}

}  // namespace spectile::search
