#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "barops/formal_sum.hpp"
#include "barops/perm.hpp"

namespace barops {

using Word = std::vector<int>;

// Basis element of the surjection operad in arity r and degree d:
// a word of length r+d with values covering {1..r} and no two equal
// adjacent entries.  Words with equal adjacent entries represent zero
// (make returns nullopt); words missing a value are rejected outright.
class Surjection {
public:
    static std::optional<Surjection> make(Word w);

    int arity() const { return arity_; }
    int degree() const { return static_cast<int>(word_.size()) - arity_; }
    const Word& word() const { return word_; }

    bool operator==(const Surjection&) const = default;
    auto operator<=>(const Surjection& o) const { return word_ <=> o.word_; }

private:
    Surjection(Word w, int r) : word_(std::move(w)), arity_(r) {}
    Word word_;
    int arity_;
};

using SurjectionSum = f2::FormalSum<Surjection>;

// Sum of entry deletions; deletions that leave a repeat or lose a value drop.
SurjectionSum differential(const Surjection& u);

// Row arrangement of the word: a row ends right after each non-final
// occurrence of a value (its caesura); the final row takes the rest.
struct Table {
    std::vector<Word> rows;
    std::vector<int> caesuras; // 1-based positions into the word
};
Table table_arrangement(const Surjection& u);

// Partial composite u o_slot v: v's word is cut into t overlapping pieces
// (t = number of occurrences of slot in u, adjacent pieces share one letter),
// piece i replaces the i-th occurrence of slot, all summed over cuts.
SurjectionSum compose(const Surjection& u, int slot, const Surjection& v);

// Value relabeling by sigma in Sigma_r; always lands on a basis element.
Surjection permute(const Perm& sigma, const Surjection& u);

// The permutation of {1..r+s-1} by which a relabeling of u transports across
// composition: permute(sigma,u) composed at slot sigma(k) equals
// block_permutation(sigma, sigma(k), s) acting on u composed at slot k.
Perm block_permutation(const Perm& sigma, int value, int block_size);

// All basis elements of the given arity and degree.
std::vector<Surjection> all_surjections(int arity, int degree);

std::string word_to_string(const Word& w);
Word parse_word(const std::string& text);
std::string surjection_sum_to_string(const SurjectionSum& s);
std::string table_to_string(const Table& t);

} // namespace barops
