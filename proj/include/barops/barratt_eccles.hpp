#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "barops/formal_sum.hpp"
#include "barops/perm.hpp"

namespace barops {

// Basis element of arity r and degree d: a (d+1)-tuple of permutations of
// {1..r} with no two equal adjacent levels.  Tuples with equal adjacent
// levels represent zero (make returns nullopt).
class PermSimplex {
public:
    static std::optional<PermSimplex> make(std::vector<Perm> levels);

    int arity() const { return arity_; }
    int degree() const { return static_cast<int>(levels_.size()) - 1; }
    const std::vector<Perm>& levels() const { return levels_; }

    bool operator==(const PermSimplex&) const = default;
    auto operator<=>(const PermSimplex& o) const { return levels_ <=> o.levels_; }

private:
    PermSimplex(std::vector<Perm> ls, int r) : levels_(std::move(ls)), arity_(r) {}
    std::vector<Perm> levels_;
    int arity_;
};

using PermSimplexSum = f2::FormalSum<PermSimplex>;
using PermSimplexPairSum = f2::FormalSum<std::pair<PermSimplex, PermSimplex>>;

// The arity-2 generator in degree d: levels alternate id, transposition.
PermSimplex theta(int d);

// Sum of level deletions; deletions that leave equal adjacent levels drop.
PermSimplexSum differential(const PermSimplex& x);

// Front/back splitting along each level: sum of (levels 0..i, levels i..d).
// Terms with a degenerate factor drop.
PermSimplexPairSum diagonal(const PermSimplex& x);

// n-fold iterate of the splitting: each term cuts the levels at n-1 places
// 0 <= i_1 <= ... <= i_{n-1} <= d into n consecutive ranges.  Terms with a
// degenerate factor drop; distinct cut tuples give distinct terms.
std::vector<std::vector<PermSimplex>> iterated_diagonal(const PermSimplex& x, int n);

// Partial composite x o_slot y: sum over monotone lattice paths from (0,0)
// to (deg x, deg y); level t of a path term substitutes y's level j_t into
// x's level i_t at the slot.
PermSimplexSum compose(const PermSimplex& x, int slot, const PermSimplex& y);

// Value relabeling by sigma in Sigma_r applied to every level.
PermSimplex permute(const Perm& sigma, const PermSimplex& x);

// All basis elements of the given arity and degree.
std::vector<PermSimplex> all_perm_simplices(int arity, int degree);

std::string perm_simplex_to_string(const PermSimplex& x);
PermSimplex parse_perm_simplex(const std::string& text);
std::string perm_simplex_sum_to_string(const PermSimplexSum& s);
std::string perm_simplex_pair_sum_to_string(const PermSimplexPairSum& s);

} // namespace barops
