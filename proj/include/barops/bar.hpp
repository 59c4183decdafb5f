#pragma once

#include <optional>
#include <string>
#include <vector>

#include "barops/algebra.hpp"
#include "barops/barratt_eccles.hpp"
#include "barops/chain.hpp"
#include "barops/formal_sum.hpp"
#include "barops/surjection.hpp"

namespace barops {

// Word of the reduced tensor coalgebra on the suspended augmentation ideal:
// a sequence of non-unit basis ids of the algebra.  Each letter contributes
// its grade plus one; the empty word is the coalgebra unit.
using BarWord = std::vector<int>;
using BarSum = f2::FormalSum<BarWord>;
using BarTupleSum = f2::FormalSum<std::vector<BarWord>>;

int bar_grade(const SurjAlgebra& A, const BarWord& c);

// Internal differential letterwise plus merging of adjacent letters by the
// degree-0 word (1,2).
BarSum bar_differential(const SurjAlgebra& A, const BarWord& c);

// Sum of the ways to cut c into `parts` consecutive (possibly empty) blocks.
BarTupleSum deconcat(const BarWord& c, int parts);

// The surjections on the union of r intervals of the given sizes whose row
// arrangement is compatible with the permutation levels of w: values of
// interval s are ordered by the position of s in the governing level, rows
// split into deg(w)+1 blocks, a block-initial row is a prefix of the open
// values, any other row is a fresh value followed by such a prefix, and
// each interval's values appear in weakly increasing order.  Labels (k,s)
// are linearized as offset(s)+k, interval 1 first.
std::vector<Surjection> admissible_surjections(const PermSimplex& w,
                                               const std::vector<int>& sizes);

// Operation on single letters: sum over admissible surjections of the
// algebra action, fed the concatenated letters of the input words.
ElemSum tilde_op(const SurjAlgebra& A, const PermSimplex& w,
                 const std::vector<BarWord>& words);

// Operation on full bar words: the counit term plus, for each n >= 1, the
// n-fold diagonal of w paired with n-fold deconcatenations of the inputs,
// each factor acting through tilde_op to produce one output letter.
BarSum full_op(const SurjAlgebra& A, const PermSimplex& w,
               const std::vector<BarWord>& words);
BarSum full_op_linear(const SurjAlgebra& A, const PermSimplex& w,
                      const std::vector<BarSum>& args);

// full_op of the arity-2 degree-d generator.
BarSum cup(const SurjAlgebra& A, int d, const BarWord& c1, const BarWord& c2);

// Slice of the bar complex over grades [lo-1..hi+1].  When some letter
// contributes grade 0 the grade levels are infinite and max_letters is
// required to bound the enumeration.
f2::ComplexSlice<BarWord> bar_complex_slice(const SurjAlgebra& A, int lo, int hi,
                                            std::optional<int> max_letters = {});

std::string bar_word_to_string(const SurjAlgebra& A, const BarWord& c);
BarWord parse_bar_word(const SurjAlgebra& A, const std::string& text);
std::string bar_sum_to_string(const SurjAlgebra& A, const BarSum& s);

} // namespace barops
