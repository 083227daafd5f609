#include "spectile/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "spectile/errors.hpp"
#include "spectile/geometry.hpp"
#include "spectile/tiling.hpp"
#include "spectile/vandermonde.hpp"
#include "spectile/verify.hpp"

namespace spectile::cli {

Command parse_command(std::string_view name) {
  if (name == "verify") return Command::Verify;
  if (name == "tiles") return Command::Tiles;
  if (name == "classify2") return Command::Classify2;
  if (name == "classify3") return Command::Classify3;
  if (name == "gv") return Command::GV;
  if (name == "torus") return Command::Torus;
  if (name == "search") return Command::Search;
  throw ParseError("unknown command '" + std::string(name) + "'");
}

std::string to_string(Command command) {
  switch (command) {
    case Command::Verify: return "verify";
    case Command::Tiles: return "tiles";
    case Command::Classify2: return "classify2";
    case Command::Classify3: return "classify3";
    case Command::GV: return "gv";
    case Command::Torus: return "torus";
    case Command::Search: return "search";
  }
  return "?";
}

unsigned jobs_from_environment() {
  const char* env = std::getenv("SPECTILE_JOBS");
  if (!env || !*env) return 1;
  const auto value = parse_rational(env);
  if (!is_integer(value) || value < 1) throw ParseError("SPECTILE_JOBS must be a positive integer: '" + std::string(env) + "'");
  return static_cast<unsigned>(to_int64(value.get_num()));
}

Json verify_json(std::string_view omega_text, std::string_view spectrum_text) {
  const auto omega = geometry::parse_interval_union(omega_text);
  const auto lambda = classify::PeriodicSpectrum::parse(spectrum_text);
  Json out;
  const bool orthogonal = classify::verify_orthogonality(omega, lambda);
  out["orthogonal"] = orthogonal;
  if (!orthogonal) {
    out["complete"] = nullptr;
    out["spectral"] = false;
    return out;
  }
  const auto complete = classify::verify_completeness(omega, lambda);
  out["complete"] = complete.to_string();
  out["spectral"] = complete.accepted();
  if (complete.kind == classify::Completeness::Kind::NumericCertified) out["bound"] = complete.bound;
  return out;
}

Json tiles_json(std::string_view omega_text, std::optional<std::int64_t> p_max) {
  const auto omega = geometry::parse_interval_union(omega_text);
  classify::TilingOptions options;
  if (p_max) options.p_max = *p_max;
  Json out;
  out["omega"] = omega.to_string();
  const auto decision = classify::to_json(classify::tiles_decision(omega, options));
  for (const auto& [k, v] : decision.items()) out[k] = v;
  return out;
}

Json classify_json(std::string_view omega_text, std::string_view spectrum_text, int intervals) {
  const auto omega = geometry::parse_interval_union(omega_text);
  const auto lambda = classify::PeriodicSpectrum::parse(spectrum_text);
  if (static_cast<int>(omega.size()) != intervals)
    throw InvalidGeometry("expected " + std::to_string(intervals) + " intervals, got " + std::to_string(omega.size()));
  const auto report = intervals == 2 ? classify::classify_two_intervals(omega, lambda)
                                     : classify::classify_three_intervals(omega, lambda);
  return report.to_json();
}

namespace {
Json polynomial_json(const vandermonde::GVPolynomial& p) {
  Json terms = Json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
    terms.push_back({{"monomial", {it->first[0], it->first[1], it->first[2]}}, {"coeff", it->second.get_str()}});
  return terms;
}
}  // namespace

Json gv_json(std::string_view exponents_text) {
  const auto exps = vandermonde::GVExponents::parse(exponents_text);
  const auto r = vandermonde::gv_det(exps);
  const auto st = vandermonde::schur_and_t(exps);
  Json out;
  out["exponents"] = exps.to_string();
  out["g"] = exps.g();
  out["terms"] = polynomial_json(r);
  out["polynomial"] = r.to_string();
  out["schur"] = st.s.to_string();
  out["t"] = st.t.to_string();
  return out;
}

Json torus_json(std::string_view system_text, std::int64_t order, unsigned jobs) {
  const auto system = vandermonde::parse_system(system_text);
  if (order < 1) throw PreconditionViolated("order must be positive");
  const auto set = vandermonde::torus_solutions(system, static_cast<std::uint64_t>(order), jobs);
  Json out;
  Json sys = Json::array();
  for (const auto& e : system) sys.push_back(e.to_string());
  out["system"] = sys;
  out["order"] = set.order;
  Json sols = Json::array();
  for (const auto& s : set.solutions) sols.push_back({s[0], s[1], s[2]});
  out["solutions"] = sols;
  out["trivialCount"] = set.trivial_count;
  out["nontrivialCount"] = set.nontrivial_count;
  return out;
}

Json search_config_json(const search::ConfigResult& config) { return config.to_json(); }

namespace {

const std::string& require(const std::optional<std::string>& value, const char* flag, Command command) {
  if (!value) throw PreconditionViolated(to_string(command) + " requires " + flag);
  return *value;
}

void check_positive(const std::optional<std::int64_t>& value, const char* flag) {
  if (value && *value < 1) throw PreconditionViolated(std::string(flag) + " must be >= 1");
}

void emit(std::ostream& out, const Json& line) { out << line.dump() << '\n' << std::flush; }

int run(const RunConfig& config, std::ostream& out) {
  check_positive(config.d_max, "--d-max");
  check_positive(config.grid, "--grid");
  check_positive(config.order, "--order");
  check_positive(config.p_max, "--p-max");
  if (config.jobs < 1) throw PreconditionViolated("--jobs must be >= 1");
  switch (config.command) {
    case Command::Verify:
      emit(out, verify_json(require(config.omega, "--omega", config.command),
                            require(config.spectrum, "--spectrum", config.command)));
      return kOk;
    case Command::Tiles:
      emit(out, tiles_json(require(config.omega, "--omega", config.command), config.p_max));
      return kOk;
    case Command::Classify2:
    case Command::Classify3:
      emit(out, classify_json(require(config.omega, "--omega", config.command),
                              require(config.spectrum, "--spectrum", config.command),
                              config.command == Command::Classify2 ? 2 : 3));
      return kOk;
    case Command::GV:
      emit(out, gv_json(require(config.exponents, "--exponents", config.command)));
      return kOk;
    case Command::Torus: {
      if (!config.order) throw PreconditionViolated("torus requires --order");
      const auto& text = config.system ? *config.system : require(config.exponents, "--system", config.command);
      emit(out, torus_json(text, *config.order, config.jobs));
      return kOk;
    }
    case Command::Search: {
      search::SearchOptions options;
      options.d_max = config.d_max.value_or(6);
      if (options.d_max < 3) throw PreconditionViolated("--d-max must be >= 3");
      options.grid = config.grid.value_or(0);
      options.jobs = config.jobs;
      const auto report = search::exceptional_search(
          options, [&](const std::vector<search::ConfigResult>& configs, const search::DSummary& summary) {
            for (const auto& c : configs) emit(out, c.to_json());
            emit(out, summary.to_json());
          });
      if (report.errors()) return kInternalFailure;
      return report.counterexamples() ? kCounterexample : kOk;
    }
  }
  return kOk;
}

int fail(std::ostream& out, std::ostream& err, const char* kind, const std::exception& e, int status) {
  emit(out, Json{{"error", kind}, {"message", e.what()}});
  err << "spectile: " << kind << ": " << e.what() << '\n';
  return status;
}

}  // namespace

int execute(const RunConfig& config, std::ostream& out_default, std::ostream& err) {
  std::ofstream file;
  std::ostream* out = &out_default;
  if (config.output != "-") {
    file.open(config.output);
    if (!file) {
      err << "spectile: cannot open " << config.output << '\n';
      return kInvalidInput;
    }
    out = &file;
  }
  try {
    return run(config, *out);
  } catch (const NotDivisible& e) {
    return fail(*out, err, "NotDivisible", e, kInternalFailure);
  } catch (const InvariantViolation& e) {
    return fail(*out, err, "InvariantViolation", e, kInternalFailure);
  } catch (const ParseError& e) {
    return fail(*out, err, "ParseError", e, kInvalidInput);
  } catch (const InvalidGeometry& e) {
    return fail(*out, err, "InvalidGeometry", e, kInvalidInput);
  } catch (const InvalidSpectrum& e) {
    return fail(*out, err, "InvalidSpectrum", e, kInvalidInput);
  } catch (const LimitExceeded& e) {
    return fail(*out, err, "LimitExceeded", e, kInvalidInput);
  } catch (const PreconditionViolated& e) {
    return fail(*out, err, "PreconditionViolated", e, kInvalidInput);
  } catch (const Error& e) {
    return fail(*out, err, "Error", e, kInvalidInput);
  } catch (const std::exception& e) {
    return fail(*out, err, "InternalError", e, kInternalFailure);
  }
}

}  // namespace spectile::cli
