/*
 * Copyright 2026 The fbgate Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef FBGATE_COUNTING_HPP
#define FBGATE_COUNTING_HPP

#include <cmath>
#include <limits>
#include <random>

#include "fbgate/counting_types.hpp"
#include "fbgate/rng.hpp"
#include "fbgate/two_photon.hpp"

namespace fbgate {

// Per-pair output statistics for the two-photon input (1_u, 1_v), lossless.

/// Probability of one photon in output bin m and one in n (m != n):
/// |V_mu V_nv + V_mv V_nu|^2.
inline double per_pair_joint(const ModeTransform& v, int u, int v_in, int m, int n) {
    if (m == n) throw std::invalid_argument("per_pair_joint: output bins must differ");
    if (u == v_in) throw std::invalid_argument("per_pair_joint: input bins must differ");
    return std::norm(v(m, u) * v(n, v_in) + v(m, v_in) * v(n, u));
}

/// Probability of both photons in output bin m: 2 |V_mu V_mv|^2, the factor
/// of two from boson statistics.
inline double per_pair_double(const ModeTransform& v, int u, int v_in, int m) {
    if (u == v_in) throw std::invalid_argument("per_pair_double: input bins must differ");
    return 2.0 * std::norm(v(m, u) * v(m, v_in));
}

/// Marginal probability of exactly one photon in bin m, closed form via
/// unitarity: |V_mu|^2 + |V_mv|^2 - 4 |V_mu V_mv|^2.
inline double per_pair_marginal(const ModeTransform& v, int u, int v_in, int m) {
    if (u == v_in) throw std::invalid_argument("per_pair_marginal: input bins must differ");
    const double a = std::norm(v(m, u));
    const double b = std::norm(v(m, v_in));
    return a + b - 4.0 * a * b;
}

/// Same marginal by direct summation over the window; cross-validates the
/// closed form (exact only as far as the window approximates unitarity).
inline double per_pair_marginal_direct(const ModeTransform& v, int u, int v_in, int m) {
    double total = 0.0;
    for (int n = v.grid.n_min; n <= v.grid.n_max; ++n)
        if (n != m) total += per_pair_joint(v, u, v_in, m, n);
    return total;
}

namespace detail {
inline void computational_bins(const ExperimentConfig& cfg, int& row_a, int& row_b, int& col_u, int& col_v) {
    // v4 is ordered (C0, C1, T0, T1): control rows/cols 0..1, target 2..3.
    row_a = cfg.output_r;
    row_b = 2 + cfg.output_s;
    col_u = cfg.input_k;
    col_v = 2 + cfg.input_l;
}
}  // namespace detail

/// Marginal click probabilities (p_A, p_B) for one configuration.
/// The default form drops terms beyond first order in the efficiencies:
///   p_A = mu eta_A (|V_{C_r C_k}|^2 + |V_{C_r T_l}|^2) + d_A.
/// With exact = true, keeps the double-occupancy and two-photon-loss terms:
///   p_A = mu [eta_A + (1-eta_A) eta_A] p(2_m) + mu eta_A p(1_m) + d_A.
inline std::pair<double, double> singles_probs(const CMatrix4& v4, const ExperimentConfig& cfg,
                                               const NoiseParams& p, bool exact = false) {
    int m, n, u, v;
    detail::computational_bins(cfg, m, n, u, v);
    const double au = std::norm(v4(m, u)), av = std::norm(v4(m, v));
    const double bu = std::norm(v4(n, u)), bv = std::norm(v4(n, v));
    if (!exact) {
        return {p.mu * p.eta_a * (au + av) + p.dark_a, p.mu * p.eta_b * (bu + bv) + p.dark_b};
    }
    const double p2_m = 2.0 * au * av;
    const double p1_m = au + av - 4.0 * au * av;
    const double p2_n = 2.0 * bu * bv;
    const double p1_n = bu + bv - 4.0 * bu * bv;
    const double pa = p.mu * (p.eta_a + (1.0 - p.eta_a) * p.eta_a) * p2_m + p.mu * p.eta_a * p1_m + p.dark_a;
    const double pb = p.mu * (p.eta_b + (1.0 - p.eta_b) * p.eta_b) * p2_n + p.mu * p.eta_b * p1_n + p.dark_b;
    return {pa, pb};
}

/// Coincidence probability: correlated pairs plus the accidental term,
///   p_AB = mu eta_A eta_B |V_{C_r C_k} V_{T_s T_l} + V_{C_r T_l} V_{T_s C_k}|^2 + 2 p_A p_B.
inline double coincidence_prob(const CMatrix4& v4, const ExperimentConfig& cfg, const NoiseParams& p) {
    int m, n, u, v;
    detail::computational_bins(cfg, m, n, u, v);
    const auto [pa, pb] = singles_probs(v4, cfg, p);
    const double correlated = std::norm(v4(m, u) * v4(n, v) + v4(m, v) * v4(n, u));
    return p.mu * p.eta_a * p.eta_b * correlated + 2.0 * pa * pb;
}

struct ConfigProbs {
    double p_a = 0.0;
    double p_b = 0.0;
    double p_ab = 0.0;
};

inline ConfigProbs config_probs(const CMatrix4& v4, const ExperimentConfig& cfg, const NoiseParams& p) {
    const auto [pa, pb] = singles_probs(v4, cfg, p);
    return {pa, pb, coincidence_prob(v4, cfg, p)};
}

/// Multinomial log-likelihood over the four exclusive frame outcomes
/// (A only, B only, coincidence, nothing), normalization dropped.
/// A nonpositive (or sub-1e-300) category probability paired with a nonzero
/// count yields -inf; paired with a zero count it contributes nothing.
inline double config_log_likelihood(const ConfigCounts& counts, const ConfigProbs& probs, std::int64_t frames) {
    counts.validate(frames);
    const double inf = std::numeric_limits<double>::infinity();
    const double floor = 1e-300;

    const std::int64_t n_only_a = counts.n_a - counts.n_ab;
    const std::int64_t n_only_b = counts.n_b - counts.n_ab;
    const std::int64_t n_none = frames - counts.n_a - counts.n_b + counts.n_ab;

    double ll = 0.0;
    const auto add = [&](std::int64_t n, double p) -> bool {
        if (p < floor) return n == 0;
        if (n > 0) ll += static_cast<double>(n) * std::log(p);
        return true;
    };
    if (!add(n_only_a, probs.p_a - probs.p_ab)) return -inf;
    if (!add(n_only_b, probs.p_b - probs.p_ab)) return -inf;
    if (!add(counts.n_ab, probs.p_ab)) return -inf;
    // last category sits near 1; log1p keeps the M-weighted term accurate
    const double tail = probs.p_ab - probs.p_a - probs.p_b;
    if (1.0 + tail < floor) {
        if (n_none != 0) return -inf;
    } else if (n_none > 0) {
        ll += static_cast<double>(n_none) * std::log1p(tail);
    }
    return ll;
}

/// Sum of config_log_likelihood over every row of the dataset.
inline double dataset_log_likelihood(const CountDataset& data, const CMatrix4& v4, const NoiseParams& p) {
    double ll = 0.0;
    for (const auto& [cfg, counts] : data.rows) {
        ll += config_log_likelihood(counts, config_probs(v4, cfg, p), cfg.frames);
        if (ll == -std::numeric_limits<double>::infinity()) return ll;
    }
    return ll;
}

/// Forward sampler for the counting model: independently for each of the 16
/// configurations, draws the (A only, B only, AB, none) multinomial. Each
/// configuration owns a content-derived RNG stream, so draws are
/// order-independent.
inline CountDataset simulate_dataset(const CMatrix4& v4, const NoiseParams& p, std::int64_t frames,
                                     std::uint64_t seed, double resolving_time = 0.0) {
    p.validate();
    if (frames <= 0) throw std::invalid_argument("simulate_dataset: frames must be > 0");

    CountDataset out;
    out.metadata = DatasetMetadata{resolving_time, p.dark_a, p.dark_b, ""};
    for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
            for (int r = 0; r < 2; ++r)
                for (int s = 0; s < 2; ++s) {
                    ExperimentConfig cfg{frames, resolving_time, k, l, r, s};
                    const ConfigProbs probs = config_probs(v4, cfg, p);
                    if (probs.p_ab > probs.p_a || probs.p_ab > probs.p_b ||
                        probs.p_a + probs.p_b - probs.p_ab > 1.0)
                        throw std::invalid_argument("simulate_dataset: model probabilities out of range");

                    const std::uint64_t tag = static_cast<std::uint64_t>(k * 8 + l * 4 + r * 2 + s);
                    auto engine = make_engine(derive_seed(seed, tag));
                    const auto draw = [&engine](std::int64_t n, double prob) -> std::int64_t {
                        if (n <= 0 || prob <= 0.0) return 0;
                        if (prob >= 1.0) return n;
                        return std::binomial_distribution<std::int64_t>(n, prob)(engine);
                    };
                    const std::int64_t n_ab = draw(frames, probs.p_ab);
                    const std::int64_t n_only_a =
                        draw(frames - n_ab, (probs.p_a - probs.p_ab) / (1.0 - probs.p_ab));
                    const std::int64_t n_only_b =
                        draw(frames - n_ab - n_only_a, (probs.p_b - probs.p_ab) / (1.0 - probs.p_a));
                    out.rows.emplace_back(cfg, ConfigCounts{n_only_a + n_ab, n_only_b + n_ab, n_ab});
                }
    out.validate_complete();
    return out;
}

}  // namespace fbgate

#endif
