#include "doctest.h"

#include <vector>

#include "barops/bar.hpp"
#include "barops/builtin.hpp"
#include "barops/errors.hpp"

using namespace barops;

namespace {

PermSimplex ps(std::vector<Perm> levels) {
    auto x = PermSimplex::make(std::move(levels));
    REQUIRE(x.has_value());
    return *x;
}

struct TruncPoly {
    std::shared_ptr<CommutativeAlgebra> A = builtin::truncated_polynomial();
    int x, xx;
    TruncPoly() : x(A->id_of("x")), xx(A->id_of("xx")) {}
};

} // namespace

TEST_CASE("bar grade adds one to every letter") {
    TruncPoly F;
    CHECK(bar_grade(*F.A, {}) == 0);
    CHECK(bar_grade(*F.A, {F.x}) == -1);
    CHECK(bar_grade(*F.A, {F.x, F.x}) == -2);
    CHECK(bar_grade(*F.A, {F.xx}) == -3);
    CHECK(bar_grade(*F.A, {F.x, F.xx}) == -4);
}

TEST_CASE("bar differential merges adjacent letters and differentiates") {
    TruncPoly F;
    const auto& A = *F.A;
    CHECK(bar_differential(A, {}).is_zero());
    CHECK(bar_differential(A, {F.x}).is_zero());
    CHECK(bar_differential(A, {F.x, F.x}) == BarSum::of({F.xx}));
    CHECK(bar_differential(A, {F.xx}).is_zero());
    BarSum expect;
    expect.add({F.xx, F.x});
    expect.add({F.x, F.xx});
    CHECK(bar_differential(A, {F.x, F.x, F.x}) == expect);
    CHECK(bar_differential(A, {F.x, F.xx}).is_zero()); // x*xx = 0

    CochainAlgebra D(builtin::disk2());
    int e = D.space().id_of("e"), c = D.space().id_of("c");
    CHECK(bar_differential(D, {e}) == BarSum::of({c})); // internal differential
    CHECK(bar_differential(D, {c}).is_zero());

    CHECK_THROWS_AS(bar_differential(A, {A.id_of("one")}), DomainError);
    CHECK_THROWS_AS(bar_differential(A, {99}), DomainError);
}

TEST_CASE("bar differential lowers the grade by one") {
    TruncPoly F;
    for (const BarWord& c : {BarWord{F.x, F.x}, BarWord{F.x, F.x, F.x}, BarWord{F.xx, F.x}}) {
        int g = bar_grade(*F.A, c);
        for (const BarWord& t : bar_differential(*F.A, c))
            CHECK(bar_grade(*F.A, t) == g - 1);
    }
}

TEST_CASE("deconcatenation enumerates all cuts") {
    CHECK(deconcat({1, 2, 3}, 1) == BarTupleSum::of({{1, 2, 3}}));
    CHECK(deconcat({1, 2, 3}, 2).size() == 4);
    CHECK(deconcat({}, 2).size() == 1);
    CHECK(deconcat({1}, 3).size() == 3);
    auto cuts = deconcat({1, 2}, 2);
    CHECK(cuts.contains({{1}, {2}}));
    CHECK(cuts.contains({{}, {1, 2}}));
    CHECK(cuts.contains({{1, 2}, {}}));
    CHECK_FALSE(cuts.contains({{2}, {1}}));
}

TEST_CASE("admissible surjections for the degree-0 generator") {
    auto theta0 = theta(0);
    auto one_one = admissible_surjections(theta0, {1, 1});
    REQUIRE(one_one.size() == 1);
    CHECK(one_one[0].word() == Word{2, 1, 2});

    auto two_one = admissible_surjections(theta0, {2, 1});
    REQUIRE(two_one.size() == 1);
    CHECK(two_one[0].word() == Word{3, 1, 3, 2, 3});

    // a size-0 interval leaves the action of the identity on the rest
    auto left_empty = admissible_surjections(theta0, {0, 1});
    REQUIRE(left_empty.size() == 1);
    CHECK(left_empty[0].word() == Word{1});
    CHECK(admissible_surjections(theta0, {0, 0}).empty());
}

TEST_CASE("admissible surjections for the ternary identity") {
    // one letter per slot: the operadic composite of the binary family with
    // itself plus the two merge-one-pair words; a fresh value opened while a
    // later-ordered value is still open is not allowed, which rules out
    // 2,3,1,2,3
    auto id3 = *PermSimplex::make({{1, 2, 3}});
    auto adm = admissible_surjections(id3, {1, 1, 1});
    REQUIRE(adm.size() == 3);
    CHECK(adm[0].word() == Word{3, 1, 3, 2, 3});
    CHECK(adm[1].word() == Word{3, 2, 1, 2, 3});
    CHECK(adm[2].word() == Word{3, 2, 3, 1, 3});
}

TEST_CASE("admissible surjections for higher generators") {
    auto one_one = admissible_surjections(theta(1), {1, 1});
    REQUIRE(one_one.size() == 1);
    CHECK(one_one[0].word() == Word{2, 1, 2, 1});

    auto d2 = admissible_surjections(theta(2), {1, 1});
    REQUIRE(d2.size() == 1);
    CHECK(d2[0].word() == Word{2, 1, 2, 1, 2});

    // the degree-1 generator cannot act through an empty slot
    CHECK(admissible_surjections(theta(1), {0, 1}).empty());
    CHECK(admissible_surjections(theta(1), {1, 0}).empty());

    CHECK_THROWS_AS(admissible_surjections(theta(0), {1}), DomainError);
    CHECK_THROWS_AS(admissible_surjections(theta(0), {-1, 1}), DomainError);
}

TEST_CASE("admissible words have a fixed arity and degree") {
    // with L labels in total the words have L values and L + deg(w) rows,
    // so their length is 2L + deg(w) - 1
    for (int d = 0; d <= 2; ++d)
        for (int a = 0; a <= 2; ++a)
            for (int b = 0; b <= 2; ++b) {
                int labels = a + b;
                if (labels == 0) continue;
                for (const auto& u : admissible_surjections(theta(d), {a, b})) {
                    CHECK(u.arity() == labels);
                    CHECK(u.degree() == labels + d - 1);
                }
            }
}

TEST_CASE("tilde operation acts through admissible surjections") {
    TruncPoly F;
    const auto& A = *F.A;
    CHECK(tilde_op(A, ps({{1, 2}}), {{F.x}, {F.x}}).is_zero()); // (2,1,2) has degree 1
    CHECK(tilde_op(A, ps({{1}}), {{F.x}}) == ElemSum::of(F.x));
    // multi-letter pieces vanish under the unary identity; the merge of
    // adjacent letters belongs to the bar differential instead
    CHECK(tilde_op(A, ps({{1}}), {{F.x, F.x}}).is_zero());
    CHECK(tilde_op(A, ps({{1, 2}}), {{F.x}, {}}) == ElemSum::of(F.x));
    CHECK_THROWS_AS(tilde_op(A, ps({{1, 2}}), {{F.x}}), DomainError);
}

TEST_CASE("full operation on bar words") {
    TruncPoly F;
    const auto& A = *F.A;
    auto theta0 = theta(0);

    CHECK(full_op(A, theta0, {{}, {}}) == BarSum::of(BarWord{}));
    CHECK(full_op(A, theta(1), {{}, {}}).is_zero()); // positive degree misses the unit
    CHECK(full_op(A, theta0, {{F.x}, {}}) == BarSum::of({F.x}));
    CHECK(full_op(A, theta0, {{}, {F.x}}) == BarSum::of({F.x}));

    // the unary identity operation is the identity on bar words
    auto unary = ps({{1}});
    for (const BarWord& c : {BarWord{}, BarWord{F.x}, BarWord{F.x, F.x}, BarWord{F.x, F.xx}})
        CHECK(full_op(A, unary, {c}) == BarSum::of(c));

    CHECK(cup(A, 0, {F.x}, {F.x}).is_zero()); // the two shuffles cancel
    BarSum mixed;
    mixed.add({F.x, F.xx});
    mixed.add({F.xx, F.x});
    CHECK(cup(A, 0, {F.x}, {F.xx}) == mixed);
    CHECK(cup(A, 1, {F.x}, {F.x}).is_zero());

    CHECK_THROWS_AS(full_op(A, theta0, {{F.x}}), DomainError);
    CHECK_THROWS_AS(full_op(A, theta0, {{A.id_of("one")}, {}}), DomainError);
}

TEST_CASE("full operation expands linearly over sums") {
    TruncPoly F;
    const auto& A = *F.A;
    BarSum left = BarSum::of({F.x}) + BarSum::of({F.xx});
    BarSum expect = BarSum::of({F.x}) + BarSum::of({F.xx});
    CHECK(full_op_linear(A, theta(0), {left, BarSum::of(BarWord{})}) == expect);
}

TEST_CASE("bar complex slice of the truncated polynomial algebra") {
    TruncPoly F;
    auto slice = bar_complex_slice(*F.A, -5, 0);
    // words in letters of grades -1 and -3: compositions into parts 1 and 3
    CHECK(slice.basis.at(0).size() == 1);
    CHECK(slice.basis.at(-1).size() == 1);
    CHECK(slice.basis.at(-2).size() == 1);
    CHECK(slice.basis.at(-3).size() == 2);
    CHECK(slice.basis.at(-4).size() == 3);
    CHECK(slice.basis.at(-5).size() == 4);
    CHECK(slice.basis.at(1).empty());
    REQUIRE(f2::square_zero_check(slice, -5, 1));
    auto h = f2::homology_dims(slice, -5, 1).dims;
    CHECK(h[0] == 1);
    CHECK(h[-1] == 1);
    CHECK(h[-2] == 0);
    CHECK(h[-3] == 0);
    CHECK(h[-4] == 1);
    CHECK(h[-5] == 1);
}

TEST_CASE("flat letters require a length cap") {
    auto E = builtin::exterior();
    int u = E->id_of("u");
    CHECK(bar_grade(*E, {u, u}) == 0); // every word sits in grade 0
    CHECK_THROWS_AS(bar_complex_slice(*E, -1, 0), DomainError);
    auto slice = bar_complex_slice(*E, -1, 0, 3);
    CHECK(slice.basis.at(0).size() == 4); // words of length 0..3
    CHECK(slice.basis.at(-1).empty());
    auto h = f2::homology_dims(slice, -1, 1).dims;
    CHECK(h[0] == 4); // zero differential
}

TEST_CASE("bar words print and parse") {
    TruncPoly F;
    const auto& A = *F.A;
    CHECK(bar_word_to_string(A, {}) == "[]");
    CHECK(bar_word_to_string(A, {F.x, F.xx}) == "[x|xx]");
    CHECK(parse_bar_word(A, "[x|xx]") == BarWord{F.x, F.xx});
    CHECK(parse_bar_word(A, " [ x | xx ] ") == BarWord{F.x, F.xx});
    CHECK(parse_bar_word(A, "[]").empty());
    CHECK_THROWS_AS(parse_bar_word(A, "x|xx"), ParseError);
    CHECK_THROWS_AS(parse_bar_word(A, "[x||xx]"), ParseError);
    CHECK_THROWS_AS(parse_bar_word(A, "[y]"), ParseError);
    CHECK_THROWS_AS(parse_bar_word(A, "[one]"), DomainError);

    BarSum s;
    s.add({F.x, F.x});
    s.add({F.xx});
    CHECK(bar_sum_to_string(A, s) == "[x|x] + [xx]");
    CHECK(bar_sum_to_string(A, BarSum{}) == "0");
}
