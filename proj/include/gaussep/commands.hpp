// Copyright 2026 The gaussep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command implementations behind the gaussep CLI: input parsing, the analysis pipeline
// and its JSON report, region scans, random-state generation and P-function sampling.
// Each command returns its payload together with the process exit code:
//   0 ok, 2 parse/validation error, 3 domain (unphysical / no certificate),
//   4 internal cross-check failure.

#ifndef GAUSSEP_COMMANDS_HPP_
#define GAUSSEP_COMMANDS_HPP_

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"

#include "gaussep/criteria.hpp"
#include "gaussep/dgcz_simon.hpp"
#include "gaussep/prep.hpp"
#include "gaussep/standard_form.hpp"
#include "gaussep/states.hpp"
#include "gaussep/symplectic.hpp"

namespace gaussep::cli {

using json = nlohmann::ordered_json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 2;
inline constexpr int kExitDomain = 3;
inline constexpr int kExitInconsistent = 4;

// Margins closer to zero than this are not used to judge agreement between routes.
inline constexpr double kConsistencyBand = 1e-8;

class ParseError : public Error {
 public:
  using Error::Error;
};

enum class Convention { half, dgcz };

struct ParsedInput {
  CovarianceMatrix v;
  Vector<4> mean{};
  std::optional<double> tol;
  Convention convention = Convention::half;
};

struct CommandResult {
  json report;
  int exit_code = kExitOk;
};

template <std::size_t N>
json to_json(const Matrix<N>& m) {
  return json(std::vector<double>(m.data.begin(), m.data.end()));
}

template <std::size_t N>
json to_json(const Vector<N>& v) {
  return json(std::vector<double>(v.begin(), v.end()));
}

inline json to_json(const StandardForm& s) { return {{"a", s.a}, {"b", s.b}, {"c1", s.c1}, {"c2", s.c2}}; }

inline json to_json(const std::vector<NamedMargin>& ms) {
  json j = json::object();
  for (const auto& m : ms) j[m.name] = m.value;
  return j;
}

namespace detail {

template <std::size_t K>
std::array<double, K> numbers(const json& j, const char* what) {
  if (!j.is_array() || j.size() != K)
    throw ParseError(std::string("input: \"") + what + "\" must be an array of " + std::to_string(K) + " numbers");
  std::array<double, K> out{};
  for (std::size_t i = 0; i < K; ++i) {
    if (!j[i].is_number()) throw ParseError(std::string("input: \"") + what + "\" entries must be numbers");
    out[i] = j[i].get<double>();
    if (!std::isfinite(out[i])) throw ParseError(std::string("input: \"") + what + "\" entries must be finite");
  }
  return out;
}

inline Matrix2 matrix2(const std::array<double, 4>& a) { return Matrix2{a}; }

}  // namespace detail

/// Accepts {"V": [16 numbers, row-major]} or {"blocks": {"A": [4], "B": [4], "C": [4]}},
/// with optional "mean" (4 numbers) and "tol". Unknown keys are ignored. With the dgcz
/// convention the matrix is read as M = 2V.
inline ParsedInput parse_input(const json& j, Convention convention = Convention::half) {
  if (!j.is_object()) throw ParseError("input: top level must be an object");
  const bool has_v = j.contains("V"), has_blocks = j.contains("blocks");
  if (has_v == has_blocks) throw ParseError("input: exactly one of \"V\" or \"blocks\" is required");

  Matrix4 m;
  if (has_v) {
    m.data = detail::numbers<16>(j["V"], "V");
    const double scale = std::max(1.0, max_abs(m));
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = r + 1; c < 4; ++c)
        if (std::abs(m(r, c) - m(c, r)) > 1e-12 * scale) throw ParseError("input: \"V\" is not symmetric");
  } else {
    const json& blocks = j["blocks"];
    if (!blocks.is_object() || !blocks.contains("A") || !blocks.contains("B") || !blocks.contains("C"))
      throw ParseError("input: \"blocks\" must contain \"A\", \"B\" and \"C\"");
    try {
      m = CovarianceMatrix::from_blocks(detail::matrix2(detail::numbers<4>(blocks["A"], "A")),
                                        detail::matrix2(detail::numbers<4>(blocks["B"], "B")),
                                        detail::matrix2(detail::numbers<4>(blocks["C"], "C")))
              .matrix();
    } catch (const InvalidInput& e) {
      throw ParseError(e.what());
    }
  }
  if (convention == Convention::dgcz) m = 0.5 * m;

  ParsedInput in{CovarianceMatrix(m), {}, std::nullopt, convention};
  if (j.contains("mean")) in.mean = detail::numbers<4>(j["mean"], "mean");
  if (j.contains("tol")) {
    if (!j["tol"].is_number() || !(j["tol"].get<double>() >= 0.0))
      throw ParseError("input: \"tol\" must be a non-negative number");
    in.tol = j["tol"].get<double>();
  }
  return in;
}

inline ParsedInput parse_input_text(const std::string& text, Convention convention = Convention::half) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("input: ") + e.what());
  }
  return parse_input(j, convention);
}

struct AnalyzeOptions {
  double tol = kDefaultTol;
  std::uint64_t seed = 1;
  bool timings = false;
};

namespace detail {

class Stopwatch {
 public:
  double lap_us() {
    const auto now = std::chrono::steady_clock::now();
    const double us = std::chrono::duration<double, std::micro>(now - last_).count();
    last_ = now;
    return us;
  }

 private:
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

inline json dgcz_cross_check(const StandardForm& form, const Verdict& verdict, double tol) {
  json j;
  const DgczForm g = to_dgcz(form, tol);
  j["n"] = g.n;
  j["m"] = g.m;
  j["c"] = g.c;
  j["cprime"] = g.cprime;
  bool certified = false;
  try {
    const double r1 = find_root(g);
    const auto sf2 = standard_form_ii(g, r1);
    const auto check = prep_conditions_dgcz(sf2, tol);
    certified = check.passed && check.psd;
    j["status"] = certified ? "certified" : "not_certified";
    j["r1"] = r1;
    j["r2"] = r2_of(r1, g.n, g.m);
    j["f_residual"] = f_dgcz(r1, g);
    j["constraint_residual"] = constraint_residual(g.n, g.m, r1, r2_of(r1, g.n, g.m));
    j["margins"] = to_json(check.margins);
    j["m_minus_identity_psd"] = check.psd;
  } catch (const NoBracket&) {
    j["status"] = "no_bracket";
  }
  const bool decided = std::abs(verdict.min_margin()) > kConsistencyBand;
  j["consistent"] = !decided || certified == verdict.is_separable();
  return j;
}

inline json simon_cross_check(const StandardForm& form, const Verdict& verdict, double tol) {
  json j;
  if (form.c1 == 0.0) {
    j["status"] = "skipped";
    j["consistent"] = true;
    return j;
  }
  const double x4 = simon_x4(form);
  const auto sp = squeeze_params(form.a, form.b, std::min(1.0, std::abs(form.c2) / std::abs(form.c1)));
  const double ratio = sp.r1 / sp.r2;
  j["x4"] = x4;
  j["ratio_r1_r2"] = ratio;
  bool consistent = std::abs(x4 - ratio) <= 1e-10 * std::max(1.0, x4);
  try {
    const double y4 = simon_y4(form, x4);
    const auto kappa = kappa_eigs(form, std::pow(x4, 0.25), std::pow(y4, 0.25));
    const double residual = kappa[2] - kappa[3];
    const bool certified = kappa[2] >= 0.5 - tol;
    j["y4"] = y4;
    j["kappa"] = json(std::vector<double>(kappa.begin(), kappa.end()));
    j["kappa_residual"] = residual;
    j["status"] = certified ? "certified" : "not_certified";
    consistent = consistent && std::abs(residual) <= 1e-9 * std::max(1.0, kappa[2]);
    if (std::abs(verdict.min_margin()) > kConsistencyBand) consistent = consistent && certified == verdict.is_separable();
  } catch (const DomainError&) {
    j["status"] = "domain_error";
  }
  j["consistent"] = consistent;
  return j;
}

}  // namespace detail

/// reduce -> physicality -> separability -> certificate -> DGCZ and Simon cross-checks.
inline CommandResult cmd_analyze(const ParsedInput& in, const AnalyzeOptions& opt = {}) {
  const double tol = in.tol.value_or(opt.tol);
  detail::Stopwatch clock;
  json timings;
  CommandResult out;
  json& r = out.report;
  r["input"] = {{"V", to_json(in.v.matrix())},
                {"mean", to_json(in.mean)},
                {"convention", in.convention == Convention::half ? "half" : "dgcz"},
                {"tol", tol}};

  ReductionResult red;
  try {
    red = reduce(in.v);
  } catch (const NotAState& e) {
    r["error"] = e.what();
    out.exit_code = kExitDomain;
    return out;
  }
  if (opt.timings) timings["reduce_us"] = clock.lap_us();
  r["standard_form"] = to_json(red.form);
  r["transform"] = {{"S1", to_json(red.transform.s1)}, {"S2", to_json(red.transform.s2)}};

  const auto phys = physicality(red.form, tol);
  const double emb = uncertainty_min_eigenvalue(in.v);
  const bool emb_physical = emb >= -tol;
  const bool phys_decided = std::abs(min_margin(phys.margins)) > kConsistencyBand && std::abs(emb) > kConsistencyBand;
  const bool phys_consistent = !phys_decided || emb_physical == phys.physical;
  r["physicality"] = {{"physical", phys.physical},
                      {"margin", phys.margin},
                      {"margins", to_json(phys.margins)},
                      {"embedding_min_eigenvalue", emb},
                      {"consistent", phys_consistent}};
  if (opt.timings) timings["physicality_us"] = clock.lap_us();

  bool consistent = phys_consistent;
  if (!phys.physical) {
    r["verdict"] = {{"physical", false}, {"separable", "no"}, {"margins", json::object()}};
    r["certificate"] = nullptr;
    r["consistent"] = consistent;
    if (opt.timings) r["timings"] = timings;
    out.exit_code = consistent ? kExitDomain : kExitInconsistent;
    return out;
  }

  const Verdict verdict = simon_separable(red.form, tol);
  r["verdict"] = {{"physical", verdict.physical},
                  {"separable", to_string(verdict.separable)},
                  {"margins", to_json(verdict.margins)}};
  if (opt.timings) timings["separability_us"] = clock.lap_us();

  const auto cert = prep_certificate(red.form, tol);
  if (cert) {
    const Matrix4 vprime = cert->pfun.cov.matrix() + 0.5 * Matrix4::identity();
    r["certificate"] = {{"t", cert->squeeze.t},
                        {"r1", cert->squeeze.r1},
                        {"r2", cert->squeeze.r2},
                        {"lambda_eigs", json(std::vector<double>(cert->lambda_eigs.begin(), cert->lambda_eigs.end()))},
                        {"squeezed_covariance", to_json(vprime)},
                        {"pfunction", {{"mean", to_json(cert->pfun.mean)}, {"cov", to_json(cert->pfun.cov.matrix())}}}};
  } else {
    r["certificate"] = nullptr;
  }
  if (cert && !verdict.is_separable()) consistent = false;
  if (!cert && verdict.is_separable() && verdict.min_margin() > kConsistencyBand) consistent = false;
  if (opt.timings) timings["certificate_us"] = clock.lap_us();

  r["witness"] = nullptr;
  if (!verdict.is_separable()) {
    if (const auto w = search_witness(in.v, opt.seed)) {
      r["witness"] = {{"d", to_json(w->d)},
                      {"f", to_json(w->f)},
                      {"g", to_json(w->g)},
                      {"h", to_json(w->h)},
                      {"margin", witness_value(in.v, *w)}};
    }
  }
  if (opt.timings) timings["witness_us"] = clock.lap_us();

  r["dgcz"] = detail::dgcz_cross_check(red.form, verdict, tol);
  r["simon"] = detail::simon_cross_check(red.form, verdict, tol);
  consistent = consistent && r["dgcz"]["consistent"].get<bool>() && r["simon"]["consistent"].get<bool>();
  if (opt.timings) timings["cross_checks_us"] = clock.lap_us();

  r["consistent"] = consistent;
  if (opt.timings) r["timings"] = timings;
  out.exit_code = consistent ? kExitOk : kExitInconsistent;
  return out;
}

inline std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

struct RegionScanRow {
  double t = 0.0;
  double bound = 0.0;       // c1sq_bound
  ExtremalSearch grid;      // brute-force maximum of the P-representation bound
  SqueezeParams squeeze;    // closed-form squeezing parameters
  double rel_gap = 0.0;
};

inline constexpr const char* kRegionScanHeader = "t,c1sq_bound,grid_max_bound,grid_r1,grid_r2,r1,r2,rel_gap";

/// One row per t in {0, 1/(steps-1), ..., 1}; rows are computed on up to `threads` workers
/// and returned in t order.
inline std::vector<RegionScanRow> region_scan(double a, double b, std::size_t t_steps, std::size_t grid,
                                              unsigned threads = 1) {
  if (!(a >= 0.5) || !(b >= 0.5)) throw InvalidInput("region-scan: requires a, b >= 1/2");
  if (t_steps < 2) throw InvalidInput("region-scan: at least 2 t steps are required");
  if (grid < 2) throw InvalidInput("region-scan: grid must have at least 2 points");
  std::vector<RegionScanRow> rows(t_steps);
  auto work = [&](std::size_t first, std::size_t stride) {
    for (std::size_t i = first; i < t_steps; i += stride) {
      RegionScanRow& row = rows[i];
      row.t = i + 1 == t_steps ? 1.0 : static_cast<double>(i) / static_cast<double>(t_steps - 1);
      row.bound = c1sq_bound(a, b, row.t);
      row.grid = maximize_prep_bound(a, b, row.t, grid);
      row.squeeze = squeeze_params(a, b, row.t);
      const double diff = std::abs(row.grid.value - row.bound);
      row.rel_gap = diff == 0.0 ? 0.0 : diff / std::max(std::abs(row.bound), 1e-300);
    }
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(t_steps)));
  if (threads == 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned k = 0; k < threads; ++k) pool.emplace_back(work, k, threads);
  }
  return rows;
}

inline std::string region_scan_csv(const std::vector<RegionScanRow>& rows) {
  std::ostringstream os;
  os << kRegionScanHeader << '\n';
  for (const auto& row : rows) {
    os << format_double(row.t) << ',' << format_double(row.bound) << ',' << format_double(row.grid.value) << ','
       << format_double(row.grid.r1) << ',' << format_double(row.grid.r2) << ',' << format_double(row.squeeze.r1)
       << ',' << format_double(row.squeeze.r2) << ',' << format_double(row.rel_gap) << '\n';
  }
  return os.str();
}

/// `count` input documents of the requested class, each a random standard form conjugated
/// by a random local symplectic transformation (spread 1).
inline std::vector<json> cmd_random_state(std::uint64_t seed, StateKind kind, std::size_t count) {
  std::mt19937_64 rng(seed);
  std::vector<json> docs;
  docs.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const StandardForm form = random_standard_form(rng, kind);
    const LocalSymplectic s = random_local_symplectic(rng, 1.0);
    const CovarianceMatrix v = apply(s, from_standard(form));
    docs.push_back({{"V", to_json(v.matrix())}, {"meta", {{"seed", seed}, {"index", i}, {"standard_form", to_json(form)}}}});
  }
  return docs;
}

/// Samples the certified P-function and compares the reconstructed squeezed-frame
/// covariance against the exact one entry by entry.
inline CommandResult cmd_sample_p(const ParsedInput& in, std::size_t n, std::uint64_t seed,
                                  double default_tol = kDefaultTol) {
  const double tol = in.tol.value_or(default_tol);
  CommandResult out;
  json& r = out.report;
  std::optional<PrepCertificate> cert;
  try {
    const auto red = reduce(in.v);
    r["standard_form"] = to_json(red.form);
    if (physicality(red.form, tol).physical) cert = prep_certificate(red.form, tol);
  } catch (const NotAState& e) {
    r["error"] = e.what();
  }
  if (!cert) {
    if (!r.contains("error")) r["error"] = "no P-representation certificate for this state";
    out.exit_code = kExitDomain;
    return out;
  }
  if (n == 0) throw InvalidInput("sample-p: --n must be positive");

  PFunctionParams pf = cert->pfun;
  pf.mean = in.mean;
  const auto sample = sample_p(pf, n, seed, tol);
  const Matrix4 half = 0.5 * Matrix4::identity();
  const Matrix4 z = covariance_z_scores(sample.cov_estimate, pf.cov, n);
  double max_z = 0.0;
  for (double v : z.data) max_z = std::max(max_z, std::abs(v));
  r["n"] = n;
  r["seed"] = seed;
  r["r1"] = cert->squeeze.r1;
  r["r2"] = cert->squeeze.r2;
  r["squeezed_covariance"] = to_json(pf.cov.matrix() + half);
  r["reconstructed_covariance"] = to_json(sample.cov_estimate.matrix() + half);
  r["z_scores"] = to_json(z);
  r["max_abs_z"] = max_z;
  return out;
}

}  // namespace gaussep::cli

#endif  // GAUSSEP_COMMANDS_HPP_
