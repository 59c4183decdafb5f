#include "barops/f2linalg.hpp"

#include <stdexcept>

namespace barops::f2 {

BitMatrix::BitMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), words_per_row_((cols + 63) / 64),
      bits_(static_cast<size_t>(rows) * static_cast<size_t>(words_per_row_), 0) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix size");
}

bool BitMatrix::get(int r, int c) const {
    return (bits_[static_cast<size_t>(r) * static_cast<size_t>(words_per_row_) +
                  static_cast<size_t>(c / 64)] >>
            (c % 64)) &
           1u;
}

void BitMatrix::set(int r, int c, bool v) {
    auto& w = bits_[static_cast<size_t>(r) * static_cast<size_t>(words_per_row_) +
                    static_cast<size_t>(c / 64)];
    const std::uint64_t mask = std::uint64_t{1} << (c % 64);
    if (v)
        w |= mask;
    else
        w &= ~mask;
}

void BitMatrix::xor_rows(int dst, int src) {
    const size_t a = static_cast<size_t>(dst) * static_cast<size_t>(words_per_row_);
    const size_t b = static_cast<size_t>(src) * static_cast<size_t>(words_per_row_);
    for (int k = 0; k < words_per_row_; ++k) bits_[a + static_cast<size_t>(k)] ^= bits_[b + static_cast<size_t>(k)];
}

void BitMatrix::append_row(const std::vector<int>& ones) {
    ++rows_;
    bits_.resize(static_cast<size_t>(rows_) * static_cast<size_t>(words_per_row_), 0);
    for (int c : ones) set(rows_ - 1, c, true);
}

int rank(BitMatrix m) {
    int rk = 0;
    for (int c = 0; c < m.cols() && rk < m.rows(); ++c) {
        int pivot = -1;
        for (int r = rk; r < m.rows(); ++r)
            if (m.get(r, c)) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != rk) {
            m.xor_rows(rk, pivot);
            m.xor_rows(pivot, rk);
            m.xor_rows(rk, pivot);
        }
        for (int r = 0; r < m.rows(); ++r)
            if (r != rk && m.get(r, c)) m.xor_rows(r, rk);
        ++rk;
    }
    return rk;
}

std::vector<std::vector<int>> row_null_space(const BitMatrix& m) {
    // Eliminate [M | I]; rows whose M-part vanishes give null combinations.
    BitMatrix aug(0, m.cols() + m.rows());
    for (int r = 0; r < m.rows(); ++r) {
        std::vector<int> ones;
        for (int c = 0; c < m.cols(); ++c)
            if (m.get(r, c)) ones.push_back(c);
        ones.push_back(m.cols() + r);
        aug.append_row(ones);
    }
    int rk = 0;
    for (int c = 0; c < m.cols() && rk < aug.rows(); ++c) {
        int pivot = -1;
        for (int r = rk; r < aug.rows(); ++r)
            if (aug.get(r, c)) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != rk) {
            aug.xor_rows(rk, pivot);
            aug.xor_rows(pivot, rk);
            aug.xor_rows(rk, pivot);
        }
        for (int r = 0; r < aug.rows(); ++r)
            if (r != rk && aug.get(r, c)) aug.xor_rows(r, rk);
        ++rk;
    }
    std::vector<std::vector<int>> null;
    for (int r = rk; r < aug.rows(); ++r) {
        std::vector<int> combo;
        for (int c = 0; c < m.rows(); ++c)
            if (aug.get(r, m.cols() + c)) combo.push_back(c);
        null.push_back(std::move(combo));
    }
    return null;
}

bool in_row_span(const BitMatrix& m, const std::vector<int>& v) {
    BitMatrix ext = m;
    ext.append_row(v);
    return rank(ext) == rank(m);
}

} // namespace barops::f2
