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

#ifndef FBGATE_TWO_PHOTON_HPP
#define FBGATE_TWO_PHOTON_HPP

#include <cmath>
#include <stdexcept>

#include "fbgate/transform.hpp"

namespace fbgate {

/// Two-photon coincidence-basis transform, ordered (C0T0, C0T1, C1T0, C1T1).
/// Entry ((r,s),(k,l)) is the permanent of the 2x2 sub-block of the one-photon
/// matrix picking rows {C_r, T_s} and columns {C_k, T_l}.
struct TwoPhotonTransform {
    CMatrix4 entries = CMatrix4::Zero();
};

/// Permanent amplitude for one 2x2 sub-block of a (C0, C1, T0, T1)-ordered
/// matrix: V_{C_r C_k} V_{T_s T_l} + V_{C_r T_l} V_{T_s C_k}.
inline Complex coincidence_amplitude(const CMatrix4& v4, int r, int s, int k, int l) {
    return v4(r, k) * v4(2 + s, 2 + l) + v4(r, 2 + l) * v4(2 + s, k);
}

inline TwoPhotonTransform two_photon_map(const CMatrix4& v4) {
    TwoPhotonTransform w;
    for (int r = 0; r < 2; ++r)
        for (int s = 0; s < 2; ++s)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l)
                    w.entries(2 * r + s, 2 * k + l) = coincidence_amplitude(v4, r, s, k, l);
    return w;
}

/// Tr(W^dag W) / 4: amplitude fraction surviving coincidence post-selection.
inline double success_probability(const TwoPhotonTransform& w) {
    return w.entries.squaredNorm() / 4.0;
}

/// |Tr(U^dag W)|^2 / (16 P): success-normalized overlap with the target
/// unitary. Undefined at zero success probability.
inline double fidelity(const TwoPhotonTransform& w, const CMatrix4& target) {
    const double p = success_probability(w);
    if (!(p > 0.0)) throw std::domain_error("fidelity: undefined at zero success probability");
    const Complex tr = (target.adjoint() * w.entries).trace();
    return std::norm(tr) / (16.0 * p);
}

/// Controlled-NOT on the coincidence basis (control = first qubit).
inline CMatrix4 cnot() {
    CMatrix4 u = CMatrix4::Zero();
    u(0, 0) = 1.0;
    u(1, 1) = 1.0;
    u(2, 3) = 1.0;
    u(3, 2) = 1.0;
    return u;
}

/// Success and fidelity of a circuit against a target, via the projected
/// computational sub-block.
inline std::pair<double, double> gate_metrics(const CircuitSpec& circuit, const QubitModeMap& map,
                                              const CMatrix4& target) {
    const CMatrix4 v4 = project_computational(compose(circuit), map);
    const TwoPhotonTransform w = two_photon_map(v4);
    return {success_probability(w), fidelity(w, target)};
}

}  // namespace fbgate

#endif
