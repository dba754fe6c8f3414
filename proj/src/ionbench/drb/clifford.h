// Copyright 2026 The ionbench Authors
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

#ifndef IONBENCH_DRB_CLIFFORD_H
#define IONBENCH_DRB_CLIFFORD_H

#include <cstdint>
#include <vector>

#include "ionbench/circuit/gate.h"

namespace ionbench {

/// Pauli operator i^phase X^x Z^z on at most two qubits (bit q = qubit q).
struct PauliString {
    uint8_t x = 0;
    uint8_t z = 0;
    uint8_t phase = 0;  // mod 4

    static PauliString x_on(uint32_t q) { return {static_cast<uint8_t>(1u << q), 0, 0}; }
    static PauliString z_on(uint32_t q) { return {0, static_cast<uint8_t>(1u << q), 0}; }

    bool commutes_with(const PauliString &other) const;
    /// Sign of a Hermitian Pauli: +1 or -1.
    int sign() const;
    bool operator==(const PauliString &) const = default;
};

PauliString operator*(const PauliString &a, const PauliString &b);

/// Clifford on one or two qubits, stored as the images of X_q and Z_q under
/// conjugation U P U^dagger.
class Tableau {
   public:
    explicit Tableau(size_t num_qubits);

    size_t num_qubits() const { return n_; }
    const PauliString &x_image(uint32_t q) const { return images_[2 * q]; }
    const PauliString &z_image(uint32_t q) const { return images_[2 * q + 1]; }

    /// Appends a Clifford gate (X90, Y90, RZ(k pi/2), XX(+-pi/4), ZZ(+-pi/4), H,
    /// CNOT, CZ, SWAP). Throws std::invalid_argument for non-Clifford gates.
    void apply(const Gate &gate);

    /// Image of an arbitrary Pauli.
    PauliString conjugate(const PauliString &p) const;
    Tableau inverse() const;
    bool is_identity() const;

    /// Dense key, 5 bits per generator image.
    uint32_t key() const;

    bool operator==(const Tableau &) const = default;

   private:
    size_t n_;
    std::vector<PauliString> images_;
};

/// Shortest native-gate sequence for every Clifford on `num_qubits` (1 or 2)
/// qubits, over {X90, Y90, RZ(pi/2), XX(pi/4)}. "Shortest" minimises XX count
/// first, then physical pulses, then RZ. 24 entries for one qubit, 11520 for two.
class CliffordTable {
   public:
    static const CliffordTable &get(size_t num_qubits);

    size_t num_qubits() const { return n_; }
    size_t size() const { return sequences_.size(); }

    /// Sequence realising the Clifford with this tableau (up to global phase).
    /// Throws std::out_of_range for a tableau not in the table.
    const std::vector<Gate> &synthesize(const Tableau &tableau) const;
    /// Sequence undoing `tableau`.
    const std::vector<Gate> &inverse_of(const Tableau &tableau) const;

    /// Entry by dense index in discovery order; entry 0 is the identity.
    const std::vector<Gate> &sequence(size_t index) const { return sequences_[index]; }
    const Tableau &tableau(size_t index) const { return tableaus_[index]; }

   private:
    explicit CliffordTable(size_t num_qubits);

    size_t n_;
    std::vector<std::vector<Gate>> sequences_;
    std::vector<Tableau> tableaus_;
    std::vector<int32_t> index_of_key_;
};

}  // namespace ionbench

#endif
