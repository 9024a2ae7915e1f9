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

#ifndef FBGATE_GRID_HPP
#define FBGATE_GRID_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>

namespace fbgate {

/// Wrap an angle to (-pi, pi].
inline double wrap_angle(double theta) {
    const double two_pi = 2.0 * std::numbers::pi;
    double x = std::fmod(theta + std::numbers::pi, two_pi);
    if (x <= 0.0) x += two_pi;
    return x - std::numbers::pi;
}

/// Wrap an angle to [0, 2*pi).
inline double wrap_angle_2pi(double theta) {
    const double two_pi = 2.0 * std::numbers::pi;
    double x = std::fmod(theta, two_pi);
    if (x < 0.0) x += two_pi;
    return x;
}

/// Evenly spaced optical carriers: bin n sits at center_frequency + n * bin_spacing
/// (angular frequencies, rad/s). The window [n_min, n_max] must cover the
/// computational bins plus a guard band absorbing modulation sidebands.
struct FrequencyGrid {
    double center_frequency = 2.0 * std::numbers::pi * 193.45e12;
    double bin_spacing = 2.0 * std::numbers::pi * 25.0e9;
    int n_min = 0;
    int n_max = 0;

    FrequencyGrid() = default;
    FrequencyGrid(double center, double spacing, int lo, int hi)
        : center_frequency(center), bin_spacing(spacing), n_min(lo), n_max(hi) {
        validate();
    }

    void validate() const {
        if (!(bin_spacing > 0.0)) throw std::invalid_argument("FrequencyGrid: bin_spacing must be > 0");
        if (!(n_min < n_max)) throw std::invalid_argument("FrequencyGrid: n_min must be < n_max");
    }

    int size() const { return n_max - n_min + 1; }
    bool contains(int bin) const { return bin >= n_min && bin <= n_max; }
    /// Row/column index of a bin inside the window.
    int index_of(int bin) const {
        if (!contains(bin)) throw std::out_of_range("FrequencyGrid: bin " + std::to_string(bin) + " outside window");
        return bin - n_min;
    }
    double frequency_of(int bin) const { return center_frequency + bin * bin_spacing; }

    bool operator==(const FrequencyGrid&) const = default;
};

/// Assignment of the logical modes {C0, C1, T0, T1} to frequency bins.
/// Pump offsets (when present) are bookkeeping only; nothing computes with them.
struct QubitModeMap {
    int c0 = 0;
    int c1 = 6;
    int t0 = 7;
    int t1 = 8;
    std::optional<std::array<double, 4>> pump_labels;  // Omega_00..Omega_11

    void validate() const {
        std::array<int, 4> b = bins();
        std::sort(b.begin(), b.end());
        if (std::adjacent_find(b.begin(), b.end()) != b.end())
            throw std::invalid_argument("QubitModeMap: mode bins must be distinct");
    }
    void validate(const FrequencyGrid& grid) const {
        validate();
        for (int b : bins())
            if (!grid.contains(b)) throw std::out_of_range("QubitModeMap: bin outside grid window");
    }

    /// Bins in matrix order (C0, C1, T0, T1).
    std::array<int, 4> bins() const { return {c0, c1, t0, t1}; }
    int min_bin() const { return std::min({c0, c1, t0, t1}); }
    int max_bin() const { return std::max({c0, c1, t0, t1}); }

    /// Window covering the computational span plus a guard band on each side.
    FrequencyGrid guarded_grid(int guard = 16, double center = 2.0 * std::numbers::pi * 193.45e12,
                               double spacing = 2.0 * std::numbers::pi * 25.0e9) const {
        return FrequencyGrid(center, spacing, min_bin() - guard, max_bin() + guard);
    }
};

}  // namespace fbgate

#endif
