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
#include <vector>

namespace clustercert::gf2 {

/// Dense bit matrix over GF(2), rows packed into 64-bit words.
class BitMatrix {
   public:
    BitMatrix(std::size_t rows, std::size_t cols);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    bool get(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, bool v);
    void flip(std::size_t r, std::size_t c);

    /// In-place reduced row echelon form; returns pivot columns in row order.
    std::vector<std::size_t> rref();

    /// Basis of {v : A v = 0}, each vector of length cols() with 0/1 entries.
    std::vector<std::vector<std::uint8_t>> nullspace() const;

   private:
    void xor_row(std::size_t dst, std::size_t src);
    void swap_rows(std::size_t a, std::size_t b);

    std::size_t rows_;
    std::size_t cols_;
    std::size_t words_;
    std::vector<std::uint64_t> data_;
};

}  // namespace clustercert::gf2
