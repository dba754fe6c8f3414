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

#include "ionbench/drb/clifford.h"

#include <bit>
#include <cmath>
#include <numbers>
#include <queue>
#include <stdexcept>
#include <string>

namespace ionbench {

bool PauliString::commutes_with(const PauliString &o) const {
    return ((std::popcount(static_cast<unsigned>(x & o.z)) + std::popcount(static_cast<unsigned>(z & o.x))) & 1) == 0;
}

int PauliString::sign() const {
    int p = (phase - std::popcount(static_cast<unsigned>(x & z))) & 3;
    if (p == 0) {
        return 1;
    }
    if (p == 2) {
        return -1;
    }
    throw std::logic_error("Pauli string is not Hermitian");
}

PauliString operator*(const PauliString &a, const PauliString &b) {
    // X^x1 Z^z1 X^x2 Z^z2 = (-1)^{z1.x2} X^{x1+x2} Z^{z1+z2}
    int phase = a.phase + b.phase + 2 * std::popcount(static_cast<unsigned>(a.z & b.x));
    return {static_cast<uint8_t>(a.x ^ b.x), static_cast<uint8_t>(a.z ^ b.z), static_cast<uint8_t>(phase & 3)};
}

namespace {

constexpr double PI = std::numbers::pi;

PauliString y_on(uint32_t q) {
    return {static_cast<uint8_t>(1u << q), static_cast<uint8_t>(1u << q), 1};
}

/// Conjugation by exp(-i pi/4 g) for Hermitian Pauli g:
/// p -> p if [p, g] = 0, else -i g p.
PauliString rotate(const PauliString &p, const PauliString &g) {
    if (p.commutes_with(g)) {
        return p;
    }
    PauliString r = g * p;
    r.phase = static_cast<uint8_t>((r.phase + 3) & 3);
    return r;
}

/// Quarter-turn count k of angle = k * unit, or -1 if not a multiple.
int quarter_turns(double angle, double unit) {
    double k = angle / unit;
    double r = std::round(k);
    if (std::abs(k - r) > 1e-9) {
        return -1;
    }
    return static_cast<int>(((static_cast<long>(r) % 4) + 4) % 4);
}

}  // namespace

Tableau::Tableau(size_t num_qubits) : n_(num_qubits) {
    if (num_qubits < 1 || num_qubits > 2) {
        throw std::invalid_argument("Tableau supports 1 or 2 qubits");
    }
    for (uint32_t q = 0; q < n_; q++) {
        images_.push_back(PauliString::x_on(q));
        images_.push_back(PauliString::z_on(q));
    }
}

void Tableau::apply(const Gate &gate) {
    for (size_t k = 0; k < gate.arity(); k++) {
        if (gate.qubits[k] >= n_) {
            throw std::invalid_argument("Tableau::apply: qubit index out of range");
        }
    }
    auto rotate_all = [&](const PauliString &g, int times) {
        for (int t = 0; t < times; t++) {
            for (auto &img : images_) {
                img = rotate(img, g);
            }
        }
    };
    const uint32_t a = gate.qubits[0];
    const uint32_t b = gate.qubits[1];
    switch (gate.kind) {
        case GateKind::X90:
            rotate_all(PauliString::x_on(a), 1);
            return;
        case GateKind::Y90:
            rotate_all(y_on(a), 1);
            return;
        case GateKind::RZ: {
            int k = quarter_turns(gate.angle, PI / 2);
            if (k < 0) {
                throw std::invalid_argument("Tableau::apply: RZ angle is not a multiple of pi/2");
            }
            rotate_all(PauliString::z_on(a), k);
            return;
        }
        case GateKind::XX:
        case GateKind::ZZ: {
            int k = quarter_turns(gate.angle, PI / 4);
            if (k < 0) {
                throw std::invalid_argument("Tableau::apply: entangling angle is not a multiple of pi/4");
            }
            PauliString g = gate.kind == GateKind::XX ? PauliString::x_on(a) * PauliString::x_on(b)
                                                      : PauliString::z_on(a) * PauliString::z_on(b);
            rotate_all(g, k);
            return;
        }
        case GateKind::H:
            // H = i exp(-i pi/4 Y) exp(-i pi/2 Z) up to phase: RZ(pi) then Y90.
            rotate_all(PauliString::z_on(a), 2);
            rotate_all(y_on(a), 1);
            return;
        case GateKind::CZ:
            apply(Gate::rz(a, PI / 2));
            apply(Gate::rz(b, PI / 2));
            apply(Gate::zz(a, b, -PI / 4));
            return;
        case GateKind::CNOT:
            apply(Gate::h(b));
            apply(Gate::cz(a, b));
            apply(Gate::h(b));
            return;
        case GateKind::SWAP:
            apply(Gate::cnot(a, b));
            apply(Gate::cnot(b, a));
            apply(Gate::cnot(a, b));
            return;
        case GateKind::CPHASE: {
            int k = quarter_turns(gate.angle, PI);
            if (k < 0) {
                throw std::invalid_argument("Tableau::apply: CPHASE angle is not a multiple of pi");
            }
            if (k % 2 == 1) {
                apply(Gate::cz(a, b));
            }
            return;
        }
    }
}

PauliString Tableau::conjugate(const PauliString &p) const {
    // p = i^phase prod_q X_q^{x_q} prod_q Z_q^{z_q}
    PauliString r{0, 0, p.phase};
    for (uint32_t q = 0; q < n_; q++) {
        if ((p.x >> q) & 1) {
            r = r * x_image(q);
        }
    }
    for (uint32_t q = 0; q < n_; q++) {
        if ((p.z >> q) & 1) {
            r = r * z_image(q);
        }
    }
    return r;
}

Tableau Tableau::inverse() const {
    Tableau inv(n_);
    const uint32_t dim = 1u << n_;
    for (uint32_t q = 0; q < n_; q++) {
        for (int which = 0; which < 2; which++) {
            PauliString target = which == 0 ? PauliString::x_on(q) : PauliString::z_on(q);
            bool found = false;
            for (uint8_t x = 0; x < dim && !found; x++) {
                for (uint8_t z = 0; z < dim && !found; z++) {
                    PauliString cand{x, z, static_cast<uint8_t>(std::popcount(static_cast<unsigned>(x & z)) & 3)};
                    PauliString img = conjugate(cand);
                    if (img.x == target.x && img.z == target.z) {
                        if (img.sign() < 0) {
                            cand.phase = static_cast<uint8_t>((cand.phase + 2) & 3);
                        }
                        inv.images_[2 * q + which] = cand;
                        found = true;
                    }
                }
            }
            if (!found) {
                throw std::logic_error("Tableau::inverse: tableau is not a Clifford");
            }
        }
    }
    return inv;
}

bool Tableau::is_identity() const {
    return *this == Tableau(n_);
}

uint32_t Tableau::key() const {
    uint32_t k = 0;
    for (const auto &img : images_) {
        uint32_t s = img.sign() < 0 ? 1 : 0;
        k = (k << 5) | (static_cast<uint32_t>(img.x) << 3) | (static_cast<uint32_t>(img.z) << 1) | s;
    }
    return k;
}

const CliffordTable &CliffordTable::get(size_t num_qubits) {
    if (num_qubits == 1) {
        static const CliffordTable one(1);
        return one;
    }
    if (num_qubits == 2) {
        static const CliffordTable two(2);
        return two;
    }
    throw std::invalid_argument("CliffordTable supports 1 or 2 qubits");
}

CliffordTable::CliffordTable(size_t num_qubits) : n_(num_qubits) {
    std::vector<Gate> moves;
    std::vector<int64_t> costs;
    for (uint32_t q = 0; q < n_; q++) {
        moves.push_back(Gate::x90(q));
        costs.push_back(1000);
        moves.push_back(Gate::y90(q));
        costs.push_back(1000);
        moves.push_back(Gate::rz(q, PI / 2));
        costs.push_back(1);
    }
    if (n_ == 2) {
        moves.push_back(Gate::xx(0, 1, PI / 4));
        costs.push_back(1000000);
    }

    index_of_key_.assign(size_t{1} << (10 * n_), -1);
    std::vector<int64_t> dist;
    std::vector<int32_t> parent;
    std::vector<int32_t> parent_move;
    std::vector<bool> done;

    using Item = std::pair<int64_t, int32_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;

    auto visit = [&](const Tableau &t, int64_t d, int32_t from, int32_t move) {
        uint32_t key = t.key();
        int32_t idx = index_of_key_[key];
        if (idx < 0) {
            idx = static_cast<int32_t>(tableaus_.size());
            index_of_key_[key] = idx;
            tableaus_.push_back(t);
            dist.push_back(d);
            parent.push_back(from);
            parent_move.push_back(move);
            done.push_back(false);
            queue.emplace(d, idx);
        } else if (!done[idx] && d < dist[idx]) {
            dist[idx] = d;
            parent[idx] = from;
            parent_move[idx] = move;
            queue.emplace(d, idx);
        }
    };

    visit(Tableau(n_), 0, -1, -1);
    while (!queue.empty()) {
        auto [d, idx] = queue.top();
        queue.pop();
        if (done[idx] || d > dist[idx]) {
            continue;
        }
        done[idx] = true;
        for (size_t m = 0; m < moves.size(); m++) {
            Tableau next = tableaus_[idx];
            next.apply(moves[m]);
            visit(next, d + costs[m], idx, static_cast<int32_t>(m));
        }
    }

    sequences_.resize(tableaus_.size());
    for (size_t i = 0; i < tableaus_.size(); i++) {
        std::vector<Gate> seq;
        for (int32_t at = static_cast<int32_t>(i); parent[at] >= 0; at = parent[at]) {
            seq.push_back(moves[parent_move[at]]);
        }
        sequences_[i].assign(seq.rbegin(), seq.rend());
    }
}

const std::vector<Gate> &CliffordTable::synthesize(const Tableau &tableau) const {
    if (tableau.num_qubits() != n_) {
        throw std::invalid_argument("CliffordTable: qubit count mismatch");
    }
    int32_t idx = index_of_key_[tableau.key()];
    if (idx < 0) {
        throw std::out_of_range("CliffordTable: tableau not found");
    }
    return sequences_[idx];
}

const std::vector<Gate> &CliffordTable::inverse_of(const Tableau &tableau) const {
    return synthesize(tableau.inverse());
}

}  // namespace ionbench
