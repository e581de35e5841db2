#pragma once

#include <cstdint>
#include <vector>

namespace excolex {

/// Dense integer matrix, row-major. Entries of the Cartan differential are 0 or +-1.
struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::int64_t> data;

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, 0) {}
    std::int64_t& operator()(int r, int c) { return data[static_cast<std::size_t>(r) * cols + c]; }
    std::int64_t operator()(int r, int c) const { return data[static_cast<std::size_t>(r) * cols + c]; }
};

/// Rank over Q by fraction-free (Bareiss) elimination in exact integers.
int rank_rational(const IntMatrix& m);

/// Rank over GF(p), p prime below 2^31.
int rank_mod_p(const IntMatrix& m, std::uint32_t p);

}  // namespace excolex
