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

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace clustercert {

/// An n-qubit Pauli operator i^phase * (P_0 ⊗ ... ⊗ P_{n-1}) in symplectic form.
///
/// Qubit q carries (x_q, z_q): (0,0)=I, (1,0)=X, (1,1)=Y, (0,1)=Z. Note that Y is
/// the Hermitian Pauli matrix itself, not the product XZ. The phase is stored
/// as an exponent of i modulo 4. Qubit 0 is the first chain position.
class PauliString {
   public:
    PauliString() = default;
    explicit PauliString(std::size_t n_qubits);

    /// Parses "+XZI", "-YY", "+iX", "-iZ". Accepts only the letters IXYZ.
    static PauliString parse(std::string_view text);

    /// Single Pauli letter ('I','X','Y','Z') on qubit q of an n-qubit register.
    static PauliString single(std::size_t n_qubits, std::size_t q, char letter);

    std::size_t n_qubits() const noexcept { return x_.size(); }
    bool x(std::size_t q) const { return x_[q] != 0; }
    bool z(std::size_t q) const { return z_[q] != 0; }
    void set(std::size_t q, bool x, bool z);
    char letter(std::size_t q) const;

    /// Phase exponent e with overall phase i^e, e in {0,1,2,3}.
    unsigned phase_exponent() const noexcept { return phase_; }
    void set_phase_exponent(unsigned e) noexcept { phase_ = e & 3u; }
    bool is_hermitian() const noexcept { return (phase_ & 1u) == 0; }
    /// +1 or -1 for Hermitian operators.
    int sign() const;

    bool is_identity() const noexcept;
    std::size_t weight() const noexcept;

    /// Bit masks with qubit q at bit (n-1-q); valid for n <= 64.
    std::uint64_t x_mask() const;
    std::uint64_t z_mask() const;
    /// Number of Y letters.
    std::size_t y_count() const noexcept;

    /// Canonical text, e.g. "+ZXZII". Round-trips through parse().
    std::string str() const;

    PauliString& operator*=(const PauliString& rhs);
    bool operator==(const PauliString& other) const = default;

   private:
    std::vector<std::uint8_t> x_;
    std::vector<std::uint8_t> z_;
    unsigned phase_ = 0;
};

/// p·q with exact phase. Throws DimensionError on size mismatch.
PauliString multiply(const PauliString& p, const PauliString& q);

/// True iff the symplectic inner product of p and q vanishes.
bool commutes(const PauliString& p, const PauliString& q);

/// The n stabilizer generators of a linear cluster state, ordered by qubit.
struct GeneratorSet {
    std::vector<PauliString> generators;

    std::size_t size() const noexcept { return generators.size(); }
    std::size_t n_qubits() const noexcept {
        return generators.empty() ? 0 : generators.front().n_qubits();
    }
    const PauliString& operator[](std::size_t i) const { return generators[i]; }
};

/// K_0 = X_0 Z_1, K_i = Z_{i-1} X_i Z_{i+1}, K_{n-1} = Z_{n-2} X_{n-1}. n >= 2.
GeneratorSet cluster_generators(std::size_t n);

/// A stabilizer-group element together with the generators that compose it.
struct StabilizerElement {
    PauliString op;
    std::vector<std::size_t> generator_indices;  // sorted, unique
    std::size_t m = 0;                            // generator count
};

/// Ordered product of the indexed generators. Indices are deduplicated and
/// sorted; out-of-range indices raise DomainError.
StabilizerElement compose(const GeneratorSet& gens, std::span<const std::size_t> indices);

/// Composes from a 0/1 exponent vector (one entry per generator).
StabilizerElement compose_exponents(const GeneratorSet& gens, std::span<const std::uint8_t> exponents);

/// If `op` equals ±(an element of the linear-cluster stabilizer group),
/// returns that element and writes the relative sign. Otherwise returns false.
bool decompose_cluster_stabilizer(const PauliString& op, StabilizerElement& element, int& sign);

enum class MeasurementBasis : char { X = 'X', Y = 'Y' };

/// Parses a string over {X, Y} into bases.
std::vector<MeasurementBasis> parse_bases(std::string_view text);

/// The three non-identity stabilizer elements that commute with single-qubit
/// X/Y measurements on qubits 1..n-2 (`bases` has n-2 entries).
///
/// Solved as a GF(2) nullspace on generator exponent vectors: on a measured
/// qubit j the element has x_j = a_j and z_j = a_{j-1} + a_{j+1}; an X
/// measurement requires z_j = 0 and a Y measurement requires x_j = z_j.
/// The result is sorted by m, then by operator text.
std::vector<StabilizerElement> surviving_triplet(std::size_t n, std::span<const MeasurementBasis> bases);

/// 4 + 2(n-2): the generator count summed over a surviving triplet.
std::size_t triplet_m_sum(std::size_t n);

/// Raw lower bound m(z-1)+1 on a product of m generators.
double backbone_floor_raw(std::size_t m, double z);
/// backbone_floor_raw clamped below at -1 for reporting.
double backbone_floor(std::size_t m, double z);

/// <P1 P2> >= <P1> + <P2> - 1 for commuting Paulis.
double pairwise_floor(double a, double b);

}  // namespace clustercert
