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

#ifndef FBGATE_TRANSFORM_HPP
#define FBGATE_TRANSFORM_HPP

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "fbgate/circuit.hpp"
#include "fbgate/grid.hpp"

namespace fbgate {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CMatrix4 = Eigen::Matrix4cd;

/// Bessel functions of the first kind J_0(x)..J_kmax(x) for x >= 0, by
/// downward (Miller) recurrence with the sum normalization
/// J_0 + 2*sum_k J_2k = 1. Accurate to ~1e-14 for the modulation depths used
/// here; cheaper than per-order std::cyl_bessel_j when a whole row is needed.
inline std::vector<double> bessel_j_row(double x, int kmax) {
    std::vector<double> out(static_cast<std::size_t>(kmax) + 1, 0.0);
    if (x == 0.0) {
        out[0] = 1.0;
        return out;
    }
    const int start = kmax + 16 + static_cast<int>(std::ceil(1.5 * x + 2.0 * std::sqrt(x * static_cast<double>(kmax) + 1.0)));
    double jp1 = 0.0;
    double j = 1e-300;
    double norm = 0.0;
    for (int k = start; k >= 1; --k) {
        double jm1 = (2.0 * k / x) * j - jp1;
        jp1 = j;
        j = jm1;
        if (k - 1 <= kmax) out[static_cast<std::size_t>(k - 1)] = j;
        if (((k - 1) % 2) == 0) norm += (k - 1 == 0) ? j : 2.0 * j;
        // rescale to dodge overflow of the unnormalized recurrence
        if (std::abs(j) > 1e250) {
            j *= 1e-250;
            jp1 *= 1e-250;
            norm *= 1e-250;
            for (auto& v : out) v *= 1e-250;
        }
    }
    for (auto& v : out) v /= norm;
    return out;
}

/// Signed-order, signed-argument J_k(m) from a nonnegative row:
/// J_{-k}(m) = (-1)^k J_k(m) and J_k(-m) = (-1)^k J_k(m).
inline double bessel_j_signed(const std::vector<double>& row, int k, bool negative_argument) {
    const int a = k < 0 ? -k : k;
    double v = a < static_cast<int>(row.size()) ? row[static_cast<std::size_t>(a)] : 0.0;
    const bool flip = (a % 2 == 1) && ((k < 0) != negative_argument);
    return flip ? -v : v;
}

/// Linear map from input to output bin operators over a grid window,
/// entries indexed (output bin, input bin) via FrequencyGrid::index_of.
struct ModeTransform {
    FrequencyGrid grid;
    CMatrix entries;

    ModeTransform() = default;
    ModeTransform(FrequencyGrid g, CMatrix m) : grid(g), entries(std::move(m)) {
        if (entries.rows() != grid.size() || entries.cols() != grid.size())
            throw std::invalid_argument("ModeTransform: matrix must be square over the grid window");
    }

    Complex operator()(int out_bin, int in_bin) const {
        return entries(grid.index_of(out_bin), grid.index_of(in_bin));
    }

    static ModeTransform identity(const FrequencyGrid& g) {
        return ModeTransform(g, CMatrix::Identity(g.size(), g.size()));
    }

    /// Largest deviation of a column norm from 1; measures window truncation.
    double max_column_norm_deviation() const {
        double worst = 0.0;
        for (Eigen::Index c = 0; c < entries.cols(); ++c)
            worst = std::max(worst, std::abs(entries.col(c).norm() - 1.0));
        return worst;
    }
};

/// Sideband mixing of a single-harmonic phase drive:
/// entries[n, n'] = J_{n-n'}(m) * exp(i (n-n') theta), Toeplitz in n-n'.
inline ModeTransform eom_transform(const EomElement& element, const FrequencyGrid& grid) {
    grid.validate();
    const int n = grid.size();
    const int kmax = n - 1;
    const std::vector<double> row = bessel_j_row(element.modulation_index, kmax);

    std::vector<Complex> by_offset(static_cast<std::size_t>(2 * kmax + 1));
    for (int k = -kmax; k <= kmax; ++k) {
        const double j = bessel_j_signed(row, k, false);
        by_offset[static_cast<std::size_t>(k + kmax)] =
            j * std::polar(1.0, k * element.rf_phase);
    }

    CMatrix m(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) m(r, c) = by_offset[static_cast<std::size_t>(r - c + kmax)];
    return ModeTransform(grid, std::move(m));
}

/// Diagonal spectral phase, exp(i phi_n) per bin.
inline ModeTransform ps_transform(const ShaperElement& element, const FrequencyGrid& grid) {
    grid.validate();
    const int n = grid.size();
    CMatrix m = CMatrix::Zero(n, n);
    for (int bin = grid.n_min; bin <= grid.n_max; ++bin) {
        const int i = grid.index_of(bin);
        m(i, i) = std::polar(1.0, element.phase(bin));
    }
    return ModeTransform(grid, std::move(m));
}

inline ModeTransform element_transform(const CircuitElement& element, const FrequencyGrid& grid) {
    if (const auto* eom = std::get_if<EomElement>(&element)) return eom_transform(*eom, grid);
    return ps_transform(std::get<ShaperElement>(element), grid);
}

/// Cascade of the circuit's elements in propagation order (last element
/// leftmost in the product).
inline ModeTransform compose(const CircuitSpec& circuit) {
    circuit.validate();
    const int n = circuit.grid.size();
    CMatrix total = CMatrix::Identity(n, n);
    for (const auto& element : circuit.elements) {
        if (const auto* ps = std::get_if<ShaperElement>(&element)) {
            // diagonal element: scale rows in place
            for (int bin = circuit.grid.n_min; bin <= circuit.grid.n_max; ++bin)
                total.row(circuit.grid.index_of(bin)) *= std::polar(1.0, ps->phase(bin));
        } else {
            total = eom_transform(std::get<EomElement>(element), circuit.grid).entries * total;
        }
    }
    return ModeTransform(circuit.grid, std::move(total));
}

/// Product of two transforms on the same grid (b after a).
inline ModeTransform compose(const ModeTransform& b, const ModeTransform& a) {
    if (!(b.grid == a.grid)) throw std::invalid_argument("compose: transforms on mismatched grids");
    return ModeTransform(a.grid, b.entries * a.entries);
}

/// Sub-block of the full transform on the computational modes,
/// rows/columns ordered (C0, C1, T0, T1); no renormalization.
inline CMatrix4 project_computational(const ModeTransform& v, const QubitModeMap& map) {
    map.validate(v.grid);
    const auto bins = map.bins();
    CMatrix4 out;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            out(r, c) = v.entries(v.grid.index_of(bins[static_cast<std::size_t>(r)]),
                                  v.grid.index_of(bins[static_cast<std::size_t>(c)]));
    return out;
}

}  // namespace fbgate

#endif
