#pragma once

#include <cstdint>
#include <vector>

namespace barops::f2 {

// Dense matrix over F_2, rows packed into 64-bit words.
class BitMatrix {
public:
    BitMatrix(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    bool get(int r, int c) const;
    void set(int r, int c, bool v);
    void xor_rows(int dst, int src); // row dst += row src

    // Appends a row given as the set of column indices with a 1.
    void append_row(const std::vector<int>& ones);

private:
    int rows_, cols_, words_per_row_;
    std::vector<std::uint64_t> bits_;
};

int rank(BitMatrix m);

// Basis of { x : sum_i x_i * row_i = 0 }, i.e. of the left null space;
// each vector is returned as the set of row indices with a 1.
std::vector<std::vector<int>> row_null_space(const BitMatrix& m);

// Whether v (set of column indices) lies in the row span of m.
bool in_row_span(const BitMatrix& m, const std::vector<int>& v);

} // namespace barops::f2
