#include "excolex/rank.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <utility>

namespace excolex {

int rank_rational(const IntMatrix& m)
{
    using boost::multiprecision::cpp_int;
    if (m.rows == 0 || m.cols == 0)
        return 0;
    std::vector<std::vector<cpp_int>> a(m.rows, std::vector<cpp_int>(m.cols));
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c)
            a[r][c] = m(r, c);

    cpp_int prev = 1;
    int rank = 0;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        // Pivot of smallest nonzero magnitude keeps intermediate entries short.
        int pivot = -1;
        for (int r = rank; r < m.rows; ++r)
            if (a[r][col] != 0 && (pivot < 0 || abs(a[r][col]) < abs(a[pivot][col])))
                pivot = r;
        if (pivot < 0)
            continue;
        std::swap(a[rank], a[pivot]);
        const cpp_int& p = a[rank][col];
        for (int r = rank + 1; r < m.rows; ++r) {
            for (int c = col + 1; c < m.cols; ++c)
                a[r][c] = (p * a[r][c] - a[r][col] * a[rank][c]) / prev;
            a[r][col] = 0;
        }
        prev = p;
        ++rank;
    }
    return rank;
}

int rank_mod_p(const IntMatrix& m, std::uint32_t p)
{
    if (m.rows == 0 || m.cols == 0)
        return 0;
    std::vector<std::vector<std::uint64_t>> a(m.rows, std::vector<std::uint64_t>(m.cols));
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c) {
            std::int64_t v = m(r, c) % static_cast<std::int64_t>(p);
            a[r][c] = static_cast<std::uint64_t>(v < 0 ? v + p : v);
        }
    auto inverse = [p](std::uint64_t x) {
        std::uint64_t result = 1;
        std::uint64_t e = p - 2;
        while (e) {
            if (e & 1)
                result = result * x % p;
            x = x * x % p;
            e >>= 1;
        }
        return result;
    };
    int rank = 0;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < m.rows; ++r)
            if (a[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0)
            continue;
        std::swap(a[rank], a[pivot]);
        const std::uint64_t inv = inverse(a[rank][col]);
        for (int r = rank + 1; r < m.rows; ++r) {
            if (a[r][col] == 0)
                continue;
            const std::uint64_t f = a[r][col] * inv % p;
            for (int c = col; c < m.cols; ++c)
                a[r][c] = (a[r][c] + (p - f) * a[rank][c]) % p;
        }
        ++rank;
    }
    return rank;
}

}  // namespace excolex
