#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "spectile/classify.hpp"

namespace spectile::search {

struct SearchOptions {
  std::int64_t d_min = 3;
  std::int64_t d_max = 6;
  /// Residues of candidate spectra lie on (1/grid)Z; 0 means grid = d.
  std::int64_t grid = 0;
  unsigned jobs = 1;
  /// Re-run every spectrum found through verify_orthogonality/verify_completeness.
  bool cross_check = true;
};

struct ExceptionalHit {
  std::string spectrum;
  classify::ExceptionalPayload payload;
  std::uint64_t torus_order = 0;
  std::uint64_t trivial_solutions = 0;
  std::uint64_t nontrivial_solutions = 0;
  bool point_in_solutions = false;
};

struct ConfigResult {
  std::int64_t d = 0;
  std::int64_t grid = 0;
  std::array<std::int64_t, 3> k{};
  std::int64_t l2 = 0, l3 = 0;
  std::vector<std::int64_t> cells;  // units of 1/d
  std::string omega;
  std::uint64_t spectral_count = 0;
  bool tiles = false;
  std::string tiling_method;
  std::map<std::string, std::uint64_t> branches;
  std::vector<ExceptionalHit> exceptional;
  /// First spectrum of a spectral set that does not tile.
  std::optional<std::string> counterexample;
  std::optional<std::string> error;

  bool tiles_all() const { return spectral_count == 0 || tiles; }
  classify::Json to_json() const;
};

struct DSummary {
  std::int64_t d = 0;
  std::int64_t grid = 0;
  std::uint64_t configs = 0;
  std::uint64_t spectral_sets = 0;
  std::uint64_t spectra = 0;
  std::uint64_t tiling_sets = 0;
  std::uint64_t exceptional_hits = 0;
  std::uint64_t counterexamples = 0;
  std::uint64_t errors = 0;

  classify::Json to_json() const;
};

struct SearchReport {
  std::vector<ConfigResult> configs;
  std::vector<DSummary> summaries;

  std::uint64_t counterexamples() const;
  std::uint64_t errors() const;
};

/// Cell configurations [0,k1) u [l2,l2+k2) u [l3,l3+k3) (units of 1/d) with
/// k1+k2+k3 = d, nonempty gaps, and l3 + k3 <= d * grid.
std::vector<ConfigResult> enumerate_configs(std::int64_t d, std::int64_t grid);

/// Residue sets {0 = m_1 < ... < m_d} in Z_N, N = d * grid, whose pairwise
/// differences are all zeros of the cell mask A(x) = sum_c x^c at zeta_N: for
/// cells on the 1/d grid these are exactly the spectra {m_i / grid} + dZ.
std::vector<std::vector<std::int64_t>> spectra_on_grid(const std::vector<std::int64_t>& cells, std::int64_t d,
                                                       std::int64_t grid);

void run_config(ConfigResult& config, bool cross_check);

/// Every configuration for d_min..d_max; `sink` (optional) sees each finished
/// d block in order.
SearchReport exceptional_search(const SearchOptions& options,
                                const std::function<void(const std::vector<ConfigResult>&, const DSummary&)>& sink = {});

}  // namespace spectile::search
