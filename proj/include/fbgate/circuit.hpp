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

#ifndef FBGATE_CIRCUIT_HPP
#define FBGATE_CIRCUIT_HPP

#include <map>
#include <stdexcept>
#include <variant>
#include <vector>

#include "fbgate/grid.hpp"

namespace fbgate {

/// Single-harmonic electro-optic phase modulator driven at exactly one bin
/// spacing: temporal phase m*sin(dw*t + theta).
struct EomElement {
    double modulation_index = 0.0;  // m, radians
    double rf_phase = 0.0;          // theta, wrapped to (-pi, pi]

    EomElement() = default;
    EomElement(double m, double theta) : modulation_index(m), rf_phase(wrap_angle(theta)) {
        if (m < 0.0) throw std::invalid_argument("EomElement: modulation index must be >= 0");
    }

    /// Canonical form of a signed depth: (m, theta) and (-m, theta+pi) drive
    /// the same temporal phase.
    static EomElement from_signed(double m, double theta) {
        return m < 0.0 ? EomElement(-m, theta + std::numbers::pi) : EomElement(m, theta);
    }
};

/// Line-by-line pulse shaper: an independent spectral phase per bin.
/// Bins absent from the map carry phase 0.
struct ShaperElement {
    std::map<int, double> phases;

    ShaperElement() = default;
    explicit ShaperElement(std::map<int, double> p) {
        for (auto& [bin, rad] : p) phases[bin] = wrap_angle(rad);
    }

    double phase(int bin) const {
        auto it = phases.find(bin);
        return it == phases.end() ? 0.0 : it->second;
    }
};

using CircuitElement = std::variant<EomElement, ShaperElement>;

/// Ordered EOM/PS sequence over a common grid, first element first in
/// propagation order.
struct CircuitSpec {
    std::vector<CircuitElement> elements;
    FrequencyGrid grid;

    void validate() const {
        grid.validate();
        if (elements.empty()) throw std::invalid_argument("CircuitSpec: circuit must contain at least one element");
    }

    std::size_t eom_count() const {
        std::size_t n = 0;
        for (const auto& e : elements) n += std::holds_alternative<EomElement>(e) ? 1 : 0;
        return n;
    }
    std::size_t shaper_count() const { return elements.size() - eom_count(); }

    /// Total modulation depth, sum of m over all EOMs.
    double total_modulation() const {
        double s = 0.0;
        for (const auto& e : elements)
            if (const auto* eom = std::get_if<EomElement>(&e)) s += eom->modulation_index;
        return s;
    }

    /// Element-wise inverse: negated shaper phases, EOM drives shifted by pi,
    /// applied in reverse order.
    CircuitSpec inverse() const {
        CircuitSpec inv;
        inv.grid = grid;
        for (auto it = elements.rbegin(); it != elements.rend(); ++it) {
            if (const auto* eom = std::get_if<EomElement>(&*it)) {
                inv.elements.emplace_back(EomElement(eom->modulation_index, eom->rf_phase + std::numbers::pi));
            } else {
                const auto& ps = std::get<ShaperElement>(*it);
                std::map<int, double> neg;
                for (auto& [bin, rad] : ps.phases) neg[bin] = -rad;
                inv.elements.emplace_back(ShaperElement(neg));
            }
        }
        return inv;
    }
};

}  // namespace fbgate

#endif
