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

#include "clustercert/gf2.hpp"

#include <utility>

namespace clustercert::gf2 {

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64), data_(rows * ((cols + 63) / 64), 0) {}

bool BitMatrix::get(std::size_t r, std::size_t c) const {
    return (data_[r * words_ + c / 64] >> (c % 64)) & 1u;
}

void BitMatrix::set(std::size_t r, std::size_t c, bool v) {
    auto& w = data_[r * words_ + c / 64];
    const std::uint64_t bit = std::uint64_t{1} << (c % 64);
    w = v ? (w | bit) : (w & ~bit);
}

void BitMatrix::flip(std::size_t r, std::size_t c) {
    data_[r * words_ + c / 64] ^= std::uint64_t{1} << (c % 64);
}

void BitMatrix::xor_row(std::size_t dst, std::size_t src) {
    for (std::size_t k = 0; k < words_; ++k) {
        data_[dst * words_ + k] ^= data_[src * words_ + k];
    }
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t k = 0; k < words_; ++k) {
        std::swap(data_[a * words_ + k], data_[b * words_ + k]);
    }
}

std::vector<std::size_t> BitMatrix::rref() {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
        std::size_t pivot = row;
        while (pivot < rows_ && !get(pivot, col)) ++pivot;
        if (pivot == rows_) continue;
        swap_rows(row, pivot);
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r != row && get(r, col)) xor_row(r, row);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::vector<std::vector<std::uint8_t>> BitMatrix::nullspace() const {
    BitMatrix reduced = *this;
    const auto pivots = reduced.rref();

    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivots) is_pivot[c] = true;

    std::vector<std::vector<std::uint8_t>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<std::uint8_t> v(cols_, 0);
        v[free] = 1;
        // Row i of the RREF reads x_{pivot_i} + sum_{free f} A[i][f] x_f = 0.
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            if (reduced.get(i, free)) v[pivots[i]] = 1;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace clustercert::gf2
