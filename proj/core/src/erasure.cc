// Copyright 2026 The muxqec Authors
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

#include "muxqec/erasure.h"

#include <stdexcept>
#include <string>

namespace muxqec {

ErasurePattern ErasurePattern::from_qubits(std::size_t n, std::span<const std::size_t> qubits) {
    return ErasurePattern(BitVector::from_support(n, qubits));
}

ErasurePattern sample_loss(const PhotonAssignment& a, const ChannelConfig& cfg, Rng& rng) {
    if (!(cfg.p_loss >= 0.0 && cfg.p_loss <= 1.0)) {
        throw std::invalid_argument("p_loss must lie in [0, 1], got " + std::to_string(cfg.p_loss));
    }
    ErasurePattern e(a.code_n);
    for (const Photon& p : a.photons) {
        if (uniform01(rng) < cfg.p_loss) {
            for (std::size_t q : p) e.mask.set(q);
        }
    }
    return e;
}

PauliFrame erasure_to_pauli(const ErasurePattern& e, Rng& rng) {
    PauliFrame f(e.n());
    std::uint64_t bits = 0;
    int left = 0;
    for (std::size_t q : e.qubits()) {
        if (left == 0) {
            bits = rng();
            left = 32;
        }
        if (bits & 1u) f.x.set(q);
        if (bits & 2u) f.z.set(q);
        bits >>= 2;
        --left;
    }
    return f;
}

}  // namespace muxqec
