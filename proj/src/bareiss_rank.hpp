#ifndef KOZMO_SRC_BAREISS_RANK_HPP
#define KOZMO_SRC_BAREISS_RANK_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace kozmo::detail {

using BigInt = boost::multiprecision::cpp_int;
using IntMatrix = std::vector<std::vector<BigInt>>;

// Rank by fraction-free (Bareiss) elimination. Every intermediate entry is a
// minor of the input, so the divisions below are exact.
inline std::size_t bareiss_rank(IntMatrix m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size();
    const std::size_t cols = m.front().size();
    std::size_t rank = 0;
    BigInt previous = 1;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[rank]);
        const BigInt& p = m[rank][c];
        for (std::size_t r = rank + 1; r < rows; ++r) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                m[r][j] = (m[r][j] * p - m[r][c] * m[rank][j]) / previous;
            }
            m[r][c] = 0;
        }
        previous = p;
        ++rank;
    }
    return rank;
}

}  // namespace kozmo::detail

#endif  // KOZMO_SRC_BAREISS_RANK_HPP
