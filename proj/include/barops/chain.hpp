#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "barops/errors.hpp"
#include "barops/f2linalg.hpp"
#include "barops/formal_sum.hpp"

namespace barops::f2 {

// Finite window of a chain complex over F_2.  The differential lowers the
// grade by 1.  Computations need the basis populated on the grades they
// touch and one grade below; a missing grade raises IncompleteSliceError.
template <class Key>
struct ComplexSlice {
    std::map<int, std::vector<Key>> basis;
    std::function<FormalSum<Key>(int grade, const Key&)> diff;
};

namespace detail {

template <class Key>
const std::vector<Key>& basis_at(const ComplexSlice<Key>& s, int grade) {
    auto it = s.basis.find(grade);
    if (it == s.basis.end())
        throw IncompleteSliceError("slice has no basis at grade " + std::to_string(grade));
    return it->second;
}

// Matrix of the differential out of grade g: one row per basis element of
// C_g, holding its image over the basis of C_{g-1}.
template <class Key>
BitMatrix diff_matrix(const ComplexSlice<Key>& s, int grade) {
    const auto& src = basis_at(s, grade);
    const auto& dst = basis_at(s, grade - 1);
    std::map<Key, int> index;
    for (int j = 0; j < static_cast<int>(dst.size()); ++j) index[dst[j]] = j;
    BitMatrix m(0, static_cast<int>(dst.size()));
    for (const Key& k : src) {
        std::vector<int> ones;
        for (const Key& t : s.diff(grade, k)) {
            auto it = index.find(t);
            if (it == index.end())
                throw IncompleteSliceError(
                    "differential image leaves the slice basis at grade " +
                    std::to_string(grade - 1));
            ones.push_back(it->second);
        }
        m.append_row(ones);
    }
    return m;
}

} // namespace detail

// Checks d(d(x)) = 0 for every basis element in grades [lo..hi].
template <class Key>
bool square_zero_check(const ComplexSlice<Key>& s, int lo, int hi) {
    for (int g = lo; g <= hi; ++g) {
        for (const Key& k : detail::basis_at(s, g)) {
            FormalSum<Key> dd;
            for (const Key& t : s.diff(g, k)) dd += s.diff(g - 1, t);
            if (!dd.is_zero()) return false;
        }
    }
    return true;
}

struct HomologyResult {
    std::map<int, int> dims;
    // Homology at this grade ignores boundaries from above the requested
    // range, so it is only an upper bound; request one grade above what
    // you intend to read off.
    int unreliable_grade;
};

// Homology dimensions over grades [lo..hi]; needs basis on [lo-1..hi].
template <class Key>
HomologyResult homology_dims(const ComplexSlice<Key>& s, int lo, int hi) {
    if (lo > hi) throw DomainError("empty grade range");
    HomologyResult res;
    res.unreliable_grade = hi;
    std::map<int, int> out_rank; // rank of d: C_g -> C_{g-1}
    for (int g = lo; g <= hi; ++g) out_rank[g] = rank(detail::diff_matrix(s, g));
    for (int g = lo; g <= hi; ++g) {
        int dim = static_cast<int>(detail::basis_at(s, g).size());
        int h = dim - out_rank[g] - (g < hi ? out_rank[g + 1] : 0);
        res.dims[g] = h;
    }
    return res;
}

// Basis of the cycle space at one grade.
template <class Key>
std::vector<FormalSum<Key>> cycle_basis(const ComplexSlice<Key>& s, int grade) {
    const auto& src = detail::basis_at(s, grade);
    auto null_rows = row_null_space(detail::diff_matrix(s, grade));
    std::vector<FormalSum<Key>> out;
    for (const auto& rows : null_rows) {
        FormalSum<Key> v;
        for (int i : rows) v.add(src[i]);
        out.push_back(std::move(v));
    }
    return out;
}

// Whether x in C_grade is the boundary of something in C_{grade+1}.
template <class Key>
bool is_boundary(const ComplexSlice<Key>& s, int grade, const FormalSum<Key>& x) {
    const auto& dst = detail::basis_at(s, grade);
    std::map<Key, int> index;
    for (int j = 0; j < static_cast<int>(dst.size()); ++j) index[dst[j]] = j;
    std::vector<int> v;
    for (const Key& k : x) {
        auto it = index.find(k);
        if (it == index.end())
            throw IncompleteSliceError("element leaves the slice basis at grade " +
                                       std::to_string(grade));
        v.push_back(it->second);
    }
    std::sort(v.begin(), v.end());
    return in_row_span(detail::diff_matrix(s, grade + 1), v);
}

} // namespace barops::f2
