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

#ifndef FBGATE_COUNTING_TYPES_HPP
#define FBGATE_COUNTING_TYPES_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace fbgate {

/// Per-frame source and detector probabilities. The counting model assumes
/// all of them are small; validity degrades well before 1.
struct NoiseParams {
    double mu = 0.0;      // pair generation probability per frame
    double eta_a = 0.0;   // system efficiency, detector A side
    double eta_b = 0.0;   // system efficiency, detector B side
    double dark_a = 0.0;  // dark probability per frame
    double dark_b = 0.0;

    void validate() const {
        for (double p : {mu, eta_a, eta_b, dark_a, dark_b})
            if (!(p >= 0.0) || !(p < 1.0))
                throw std::invalid_argument("NoiseParams: probabilities must lie in [0, 1)");
    }

    /// Parameters large enough to strain the small-probability model.
    std::vector<std::string> warnings() const {
        std::vector<std::string> w;
        const std::pair<const char*, double> named[] = {
            {"mu", mu}, {"eta_a", eta_a}, {"eta_b", eta_b}, {"dark_a", dark_a}, {"dark_b", dark_b}};
        for (const auto& [name, value] : named)
            if (value > 0.1)
                w.push_back(std::string(name) + " = " + std::to_string(value) +
                            " exceeds 0.1; counting model assumes small probabilities");
        return w;
    }
};

/// One preparation/measurement configuration: input |C_k T_l>, detectors set
/// to outputs (C_r, T_s), M frames of length tau.
struct ExperimentConfig {
    std::int64_t frames = 0;        // M
    double resolving_time = 0.0;    // tau, seconds; carried as metadata only
    int input_k = 0, input_l = 0;   // (k, l) in {0,1}^2
    int output_r = 0, output_s = 0; // (r, s) in {0,1}^2

    void validate() const {
        if (frames <= 0) throw std::invalid_argument("ExperimentConfig: frames must be > 0");
        for (int v : {input_k, input_l, output_r, output_s})
            if (v != 0 && v != 1) throw std::invalid_argument("ExperimentConfig: qubit labels must be 0 or 1");
    }
};

/// Click totals for one configuration.
struct ConfigCounts {
    std::int64_t n_a = 0;
    std::int64_t n_b = 0;
    std::int64_t n_ab = 0;

    void validate(std::int64_t frames) const {
        if (n_a < 0 || n_b < 0 || n_ab < 0) throw std::invalid_argument("ConfigCounts: counts must be nonnegative");
        if (n_ab > n_a || n_ab > n_b)
            throw std::invalid_argument("ConfigCounts: coincidences cannot exceed either singles total");
        if (n_a + n_b - n_ab > frames)
            throw std::invalid_argument("ConfigCounts: event totals exceed frame count");
    }
};

struct DatasetMetadata {
    double resolving_time = 0.0;
    double dark_a = 0.0;
    double dark_b = 0.0;
    std::string notes;
};

/// Counting results over preparation/measurement configurations; a complete
/// dataset covers all 16 input/output combinations exactly once.
struct CountDataset {
    std::vector<std::pair<ExperimentConfig, ConfigCounts>> rows;
    std::optional<DatasetMetadata> metadata;

    void validate_rows() const {
        for (const auto& [cfg, counts] : rows) {
            cfg.validate();
            counts.validate(cfg.frames);
        }
    }

    /// Complete-dataset invariant: exactly 16 distinct (input, output) pairs.
    void validate_complete() const {
        validate_rows();
        if (rows.size() != 16) throw std::invalid_argument("CountDataset: expected 16 configurations");
        std::set<int> seen;
        for (const auto& [cfg, counts] : rows)
            seen.insert(cfg.input_k * 8 + cfg.input_l * 4 + cfg.output_r * 2 + cfg.output_s);
        if (seen.size() != 16)
            throw std::invalid_argument("CountDataset: configurations must cover all 16 input/output pairs");
    }
};

}  // namespace fbgate

#endif
