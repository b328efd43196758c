#pragma once

#include <cstddef>
#include <vector>

#include "deckard/errors.hpp"
#include "deckard/rational.hpp"

namespace deckard {

// Exact rank of an integer matrix by fraction-free (Bareiss) elimination.
// Intermediate entries are minors of the input, so every division is exact;
// a nonzero remainder would mean a bug and is treated as such.
inline std::size_t integer_matrix_rank(std::vector<std::vector<Integer>> m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    for (const auto& row : m)
        if (row.size() != cols) throw ArgumentError("ragged matrix");

    std::size_t rank = 0;
    Integer prev = 1;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                Integer num = m[rank][col] * m[i][j] - m[i][col] * m[rank][j];
                Integer q, r;
                divide_qr(num, prev, q, r);
                if (r != 0) throw Error("fraction-free elimination produced a non-exact division");
                m[i][j] = std::move(q);
            }
            m[i][col] = 0;
        }
        prev = m[rank][col];
        ++rank;
    }
    return rank;
}

// Plain Gaussian elimination over the rationals; slower, used as an
// independent cross-check of the fraction-free path.
inline std::size_t rational_matrix_rank(std::vector<std::vector<Rational>> m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            if (m[i][col] == 0) continue;
            Rational factor = m[i][col] / m[rank][col];
            for (std::size_t j = col; j < cols; ++j) m[i][j] -= factor * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

}  // namespace deckard
