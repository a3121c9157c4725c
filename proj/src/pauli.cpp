// Copyright 2026 The clustercert Authors
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

#include "clustercert/pauli.hpp"

#include <algorithm>
#include <tuple>

#include "clustercert/errors.hpp"
#include "clustercert/gf2.hpp"

namespace clustercert {

namespace {

// sigma_a * sigma_b = i^g * sigma_{a xor b} for single-qubit Paulis in (x,z) form.
int product_phase(bool x1, bool z1, bool x2, bool z2) {
    if (!x1 && !z1) return 0;
    if (x1 && z1) return int(z2) - int(x2);        // Y
    if (x1) return int(z2) * (2 * int(x2) - 1);    // X
    return int(x2) * (1 - 2 * int(z2));            // Z
}

void require_same_size(const PauliString& p, const PauliString& q) {
    if (p.n_qubits() != q.n_qubits()) {
        throw DimensionError("Pauli size mismatch: " + std::to_string(p.n_qubits()) + " vs " +
                             std::to_string(q.n_qubits()));
    }
}

}  // namespace

PauliString::PauliString(std::size_t n_qubits) : x_(n_qubits, 0), z_(n_qubits, 0) {}

PauliString PauliString::parse(std::string_view text) {
    unsigned phase = 0;
    std::size_t pos = 0;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        phase = text[pos] == '-' ? 2u : 0u;
        ++pos;
    } else {
        throw DomainError("Pauli text must start with '+' or '-': '" + std::string(text) + "'");
    }
    if (pos < text.size() && text[pos] == 'i') {
        phase += 1;
        ++pos;
    }
    PauliString p(text.size() - pos);
    for (std::size_t q = 0; pos < text.size(); ++pos, ++q) {
        switch (text[pos]) {
            case 'I': break;
            case 'X': p.set(q, true, false); break;
            case 'Y': p.set(q, true, true); break;
            case 'Z': p.set(q, false, true); break;
            default:
                throw DomainError("invalid Pauli letter '" + std::string(1, text[pos]) + "' in '" +
                                  std::string(text) + "'");
        }
    }
    if (p.n_qubits() == 0) throw DomainError("empty Pauli string");
    p.phase_ = phase & 3u;
    return p;
}

PauliString PauliString::single(std::size_t n_qubits, std::size_t q, char letter) {
    if (q >= n_qubits) throw DomainError("qubit index out of range");
    PauliString p(n_qubits);
    switch (letter) {
        case 'I': break;
        case 'X': p.set(q, true, false); break;
        case 'Y': p.set(q, true, true); break;
        case 'Z': p.set(q, false, true); break;
        default: throw DomainError("invalid Pauli letter");
    }
    return p;
}

void PauliString::set(std::size_t q, bool x, bool z) {
    x_[q] = x;
    z_[q] = z;
}

char PauliString::letter(std::size_t q) const {
    static constexpr char kLetters[4] = {'I', 'Z', 'X', 'Y'};
    return kLetters[2 * x_[q] + z_[q]];
}

int PauliString::sign() const {
    if (!is_hermitian()) throw DomainError("non-Hermitian Pauli has no real sign");
    return phase_ == 0 ? 1 : -1;
}

bool PauliString::is_identity() const noexcept {
    return std::none_of(x_.begin(), x_.end(), [](auto b) { return b != 0; }) &&
           std::none_of(z_.begin(), z_.end(), [](auto b) { return b != 0; });
}

std::size_t PauliString::weight() const noexcept {
    std::size_t w = 0;
    for (std::size_t q = 0; q < x_.size(); ++q) w += (x_[q] | z_[q]) != 0;
    return w;
}

std::uint64_t PauliString::x_mask() const {
    if (n_qubits() > 64) throw DomainError("bit masks need n <= 64");
    std::uint64_t m = 0;
    for (std::size_t q = 0; q < x_.size(); ++q) {
        if (x_[q]) m |= std::uint64_t{1} << (x_.size() - 1 - q);
    }
    return m;
}

std::uint64_t PauliString::z_mask() const {
    if (n_qubits() > 64) throw DomainError("bit masks need n <= 64");
    std::uint64_t m = 0;
    for (std::size_t q = 0; q < z_.size(); ++q) {
        if (z_[q]) m |= std::uint64_t{1} << (z_.size() - 1 - q);
    }
    return m;
}

std::size_t PauliString::y_count() const noexcept {
    std::size_t c = 0;
    for (std::size_t q = 0; q < x_.size(); ++q) c += (x_[q] & z_[q]) != 0;
    return c;
}

std::string PauliString::str() const {
    static constexpr const char* kPrefix[4] = {"+", "+i", "-", "-i"};
    std::string out = kPrefix[phase_];
    out.reserve(out.size() + x_.size());
    for (std::size_t q = 0; q < x_.size(); ++q) out.push_back(letter(q));
    return out;
}

PauliString& PauliString::operator*=(const PauliString& rhs) {
    require_same_size(*this, rhs);
    int acc = int(phase_) + int(rhs.phase_);
    for (std::size_t q = 0; q < x_.size(); ++q) {
        acc += product_phase(x_[q], z_[q], rhs.x_[q], rhs.z_[q]);
        x_[q] ^= rhs.x_[q];
        z_[q] ^= rhs.z_[q];
    }
    phase_ = unsigned(((acc % 4) + 4) % 4);
    return *this;
}

PauliString multiply(const PauliString& p, const PauliString& q) {
    PauliString r = p;
    r *= q;
    return r;
}

bool commutes(const PauliString& p, const PauliString& q) {
    require_same_size(p, q);
    unsigned acc = 0;
    for (std::size_t k = 0; k < p.n_qubits(); ++k) {
        acc ^= (p.x(k) & q.z(k)) ^ (p.z(k) & q.x(k));
    }
    return acc == 0;
}

GeneratorSet cluster_generators(std::size_t n) {
    if (n < 2) throw DomainError("a linear cluster needs n >= 2 qubits");
    GeneratorSet set;
    set.generators.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        PauliString k(n);
        k.set(i, true, false);
        if (i > 0) k.set(i - 1, false, true);
        if (i + 1 < n) k.set(i + 1, false, true);
        set.generators.push_back(std::move(k));
    }
    return set;
}

StabilizerElement compose(const GeneratorSet& gens, std::span<const std::size_t> indices) {
    std::vector<std::uint8_t> exps(gens.size(), 0);
    for (auto i : indices) {
        if (i >= gens.size()) {
            throw DomainError("generator index " + std::to_string(i) + " out of range for n=" +
                              std::to_string(gens.size()));
        }
        exps[i] = 1;
    }
    return compose_exponents(gens, exps);
}

StabilizerElement compose_exponents(const GeneratorSet& gens, std::span<const std::uint8_t> exponents) {
    if (exponents.size() != gens.size()) throw DimensionError("exponent vector length mismatch");
    StabilizerElement e;
    e.op = PauliString(gens.n_qubits());
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        if (!exponents[i]) continue;
        e.op *= gens[i];
        e.generator_indices.push_back(i);
    }
    e.m = e.generator_indices.size();
    return e;
}

bool decompose_cluster_stabilizer(const PauliString& op, StabilizerElement& element, int& sign) {
    const std::size_t n = op.n_qubits();
    if (n < 2 || !op.is_hermitian()) return false;
    // Only K_j carries X on qubit j, so the exponent vector is the x-part.
    std::vector<std::uint8_t> exps(n);
    for (std::size_t j = 0; j < n; ++j) exps[j] = op.x(j);
    StabilizerElement candidate = compose_exponents(cluster_generators(n), exps);
    for (std::size_t j = 0; j < n; ++j) {
        if (candidate.op.z(j) != op.z(j)) return false;
    }
    sign = candidate.op.phase_exponent() == op.phase_exponent() ? 1 : -1;
    element = std::move(candidate);
    return true;
}

std::vector<MeasurementBasis> parse_bases(std::string_view text) {
    std::vector<MeasurementBasis> out;
    out.reserve(text.size());
    for (char c : text) {
        if (c == 'X' || c == 'x') {
            out.push_back(MeasurementBasis::X);
        } else if (c == 'Y' || c == 'y') {
            out.push_back(MeasurementBasis::Y);
        } else {
            throw DomainError("measurement bases must be X or Y, got '" + std::string(1, c) + "'");
        }
    }
    return out;
}

std::vector<StabilizerElement> surviving_triplet(std::size_t n, std::span<const MeasurementBasis> bases) {
    if (n < 3) throw DomainError("surviving_triplet needs n >= 3");
    if (bases.size() != n - 2) {
        throw DomainError("expected " + std::to_string(n - 2) + " basis labels, got " +
                          std::to_string(bases.size()));
    }
    gf2::BitMatrix constraints(n - 2, n);
    for (std::size_t j = 1; j + 1 < n; ++j) {
        const std::size_t row = j - 1;
        constraints.flip(row, j - 1);
        constraints.flip(row, j + 1);
        if (bases[row] == MeasurementBasis::Y) constraints.flip(row, j);
    }
    const auto basis = constraints.nullspace();
    if (basis.size() != 2) {
        throw std::logic_error("surviving stabilizer space has dimension " + std::to_string(basis.size()));
    }

    const auto gens = cluster_generators(n);
    std::vector<StabilizerElement> out;
    for (unsigned combo = 1; combo < 4; ++combo) {
        std::vector<std::uint8_t> exps(n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            exps[i] = ((combo & 1u) ? basis[0][i] : 0) ^ ((combo & 2u) ? basis[1][i] : 0);
        }
        out.push_back(compose_exponents(gens, exps));
    }
    std::sort(out.begin(), out.end(), [](const StabilizerElement& a, const StabilizerElement& b) {
        return std::forward_as_tuple(a.m, a.op.str()) < std::forward_as_tuple(b.m, b.op.str());
    });
    return out;
}

std::size_t triplet_m_sum(std::size_t n) {
    if (n < 3) throw DomainError("triplet_m_sum needs n >= 3");
    return 4 + 2 * (n - 2);
}

double backbone_floor_raw(std::size_t m, double z) { return double(m) * (z - 1.0) + 1.0; }

double backbone_floor(std::size_t m, double z) { return std::max(-1.0, backbone_floor_raw(m, z)); }

double pairwise_floor(double a, double b) { return a + b - 1.0; }

}  // namespace clustercert
