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

#ifndef MUXQEC_ERASURE_H
#define MUXQEC_ERASURE_H

#include <cstddef>
#include <vector>

#include "muxqec/assignment.h"
#include "muxqec/gf2.h"
#include "muxqec/rng.h"

namespace muxqec {

/// Set of lost qubits, as a mask over the n code qubits.
struct ErasurePattern {
    BitVector mask;

    ErasurePattern() = default;
    explicit ErasurePattern(std::size_t n) : mask(n) {}
    explicit ErasurePattern(BitVector m) : mask(std::move(m)) {}
    static ErasurePattern from_qubits(std::size_t n, std::span<const std::size_t> qubits);

    std::size_t n() const { return mask.size(); }
    bool contains(std::size_t q) const { return mask.get(q); }
    std::size_t count() const { return mask.popcount(); }
    bool empty() const { return mask.none(); }
    std::vector<std::size_t> qubits() const { return mask.support(); }
    friend bool operator==(const ErasurePattern&, const ErasurePattern&) = default;
};

/// A Pauli error as X and Z components; Y sets both.
struct PauliFrame {
    BitVector x;
    BitVector z;

    PauliFrame() = default;
    explicit PauliFrame(std::size_t n) : x(n), z(n) {}
    PauliFrame(BitVector xs, BitVector zs) : x(std::move(xs)), z(std::move(zs)) {}
    friend bool operator==(const PauliFrame&, const PauliFrame&) = default;
};

struct ChannelConfig {
    double p_loss = 0.0;
};

/// Each photon is lost independently with probability p_loss, one uniform
/// draw per photon in photon order.
ErasurePattern sample_loss(const PhotonAssignment& a, const ChannelConfig& cfg, Rng& rng);

/// Two independent fair bits (x, z) per erased qubit, in ascending qubit order.
PauliFrame erasure_to_pauli(const ErasurePattern& e, Rng& rng);

/// s = H · err over GF(2).
inline BitVector syndrome(const BinaryMatrix& h, const BitVector& err) { return h * err; }

}  // namespace muxqec

#endif  // MUXQEC_ERASURE_H
