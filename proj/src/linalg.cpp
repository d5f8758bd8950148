#include "motivic/linalg.hpp"

#include <utility>

namespace motivic {

long long matrix_rank(IntMatrix m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();

    Int prev = 1;
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t pivot = r;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != r) std::swap(m[pivot], m[r]);

        // One-step fraction-free elimination; division by the previous pivot
        // is exact (Sylvester identity).
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j)
                m[i][j] = (m[r][col] * m[i][j] - m[i][col] * m[r][j]) / prev;
            m[i][col] = 0;
        }
        prev = m[r][col];
        ++r;
    }
    return static_cast<long long>(r);
}

long long kernel_dimension(IntMatrix m, long long cols) {
    return cols - matrix_rank(std::move(m));
}

} // namespace motivic
