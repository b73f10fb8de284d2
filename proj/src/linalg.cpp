#include "f1hall/linalg.hpp"

namespace f1hall {

int row_reduce(RatMatrix& m)
{
    if (m.empty())
        return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && m[pivot][c] == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        std::swap(m[r], m[pivot]);
        const Rat inv = Rat(1) / m[r][c];
        for (std::size_t j = c; j < cols; ++j)
            m[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0)
                continue;
            const Rat f = m[i][c];
            for (std::size_t j = c; j < cols; ++j)
                m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return static_cast<int>(r);
}

int rank(RatMatrix m)
{
    return row_reduce(m);
}

bool in_span(const RatMatrix& basis, const std::vector<Rat>& v)
{
    RatMatrix m = basis;
    int r0 = row_reduce(m);
    m.push_back(v);
    return row_reduce(m) == r0;
}

}  // namespace f1hall
