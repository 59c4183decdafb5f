#include <doctest.h>

#include "barops/algebra.hpp"
#include "barops/builtin.hpp"
#include "barops/errors.hpp"
#include "barops/surjection.hpp"

using namespace barops;

namespace {
Surjection surj(const Word& w) { return *Surjection::make(w); }

CommutativeAlgebra::Spec base_spec() {
    return parse_commutative_spec("basis one:0 x:2 xx:4\n"
                                  "unit one\n"
                                  "mul one one = one\nmul one x = x\nmul one xx = xx\n"
                                  "mul x x = xx\nmul x xx = 0\nmul xx xx = 0\n");
}
} // namespace

TEST_CASE("truncated polynomial instance") {
    auto A = builtin::truncated_polynomial();
    CHECK(A->basis_size() == 3);
    CHECK(A->unit() == A->id_of("one"));
    CHECK(A->grade(A->id_of("x")) == -2);
    CHECK(A->connected());
    CHECK(A->ideal_basis() == std::vector<int>{A->id_of("x"), A->id_of("xx")});

    const int x = A->id_of("x");
    const int xx = A->id_of("xx");
    CHECK(A->mul(x, x) == ElemSum::of(xx));
    CHECK(A->mul(x, xx).is_zero());
    CHECK(A->apply(surj({1, 2}), {x, x}) == ElemSum::of(xx));
    CHECK(A->apply(surj({2, 1}), {x, x}) == ElemSum::of(xx));
    CHECK(A->apply(surj({1, 2, 1}), {x, x}).is_zero()); // positive degree
    CHECK(A->apply(surj({1}), {x}) == ElemSum::of(x));
    CHECK(A->apply(surj({1, 2, 3}), {x, x, x}).is_zero()); // x^3 = 0
}

TEST_CASE("apply_linear expands multilinearly") {
    auto A = builtin::truncated_polynomial();
    const int one = *A->unit();
    const int x = A->id_of("x");
    ElemSum s;
    s.add(one);
    s.add(x);
    // (one + x)*(one + x) = one + x + x + xx = one + xx
    auto out = A->apply_linear(surj({1, 2}), {s, s});
    ElemSum want;
    want.add(one);
    want.add(A->id_of("xx"));
    CHECK(out == want);
}

TEST_CASE("load validation") {
    CHECK_THROWS_AS((CommutativeAlgebra({})), DomainError);

    auto dup = base_spec();
    dup.basis.emplace_back("x", 2);
    CHECK_THROWS_AS((CommutativeAlgebra(dup)), DomainError);

    auto missing = base_spec();
    missing.products.erase({"x", "xx"});
    CHECK_THROWS_AS((CommutativeAlgebra(missing)), DomainError);

    auto bad_unit = base_spec();
    bad_unit.unit = "x";
    CHECK_THROWS_AS((CommutativeAlgebra(bad_unit)), DomainError);

    auto not_neutral = base_spec();
    not_neutral.products[{"one", "x"}] = "0";
    CHECK_THROWS_AS((CommutativeAlgebra(not_neutral)), DomainError);

    auto bad_grade = base_spec();
    bad_grade.products[{"x", "x"}] = "x";
    CHECK_THROWS_AS((CommutativeAlgebra(bad_grade)), DomainError);

    // (a*a)*b = b*b = d while a*(a*b) = a*c = 0
    auto not_assoc = parse_commutative_spec(
        "basis one:0 a:1 b:2 c:3 d:4\nunit one\n"
        "mul one one = one\nmul one a = a\nmul one b = b\nmul one c = c\nmul one d = d\n"
        "mul a a = b\nmul a b = c\nmul a c = 0\nmul a d = 0\n"
        "mul b b = d\nmul b c = 0\nmul b d = 0\nmul c c = 0\nmul c d = 0\nmul d d = 0\n");
    CHECK_THROWS_AS((CommutativeAlgebra(not_assoc)), DomainError);

    // group algebra of C2: associative, but g*g lands on the unit
    auto ideal_hit = parse_commutative_spec(
        "basis one:0 g:0\nunit one\n"
        "mul one one = one\nmul one g = g\nmul g g = one\n");
    CHECK_THROWS_AS((CommutativeAlgebra(ideal_hit)), DomainError);

    auto bad_diff = base_spec();
    bad_diff.diffs["x"] = "xx"; // wrong direction
    CHECK_THROWS_AS((CommutativeAlgebra(bad_diff)), DomainError);

    // d(x*q) should be dx*q = q*q = 0, not z
    auto not_leibniz = parse_commutative_spec(
        "basis one:0 x:1 q:2 xq:3 z:4\nunit one\n"
        "mul one one = one\nmul one x = x\nmul one q = q\nmul one xq = xq\nmul one z = z\n"
        "mul x x = 0\nmul x q = xq\nmul x xq = 0\nmul x z = 0\n"
        "mul q q = 0\nmul q xq = 0\nmul q z = 0\n"
        "mul xq xq = 0\nmul xq z = 0\nmul z z = 0\n"
        "diff x = q\ndiff xq = z\n");
    CHECK_THROWS_AS((CommutativeAlgebra(not_leibniz)), DomainError);

    // the same shape with d(x*q) = dx*q constructs fine
    auto leibniz_ok = parse_commutative_spec(
        "basis one:0 x:1 q:2 xq:3 z:4\nunit one\n"
        "mul one one = one\nmul one x = x\nmul one q = q\nmul one xq = xq\nmul one z = z\n"
        "mul x x = 0\nmul x q = xq\nmul x xq = 0\nmul x z = 0\n"
        "mul q q = z\nmul q xq = 0\nmul q z = 0\n"
        "mul xq xq = 0\nmul xq z = 0\nmul z z = 0\n"
        "diff x = q\ndiff xq = z\n");
    CHECK_NOTHROW((CommutativeAlgebra(leibniz_ok)));
}

TEST_CASE("spec parsing errors carry line numbers") {
    CHECK_THROWS_AS(parse_commutative_spec("basis a\n"), ParseError);
    CHECK_THROWS_AS(parse_commutative_spec("basis a:z\n"), ParseError);
    CHECK_THROWS_AS(parse_commutative_spec("mul a b c\n"), ParseError);
    CHECK_THROWS_AS(parse_commutative_spec("nonsense\n"), ParseError);
    try {
        parse_commutative_spec("basis a:0\nmul a b c\n");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
}

TEST_CASE("degree-1 words have evenly many differential terms") {
    // needed for the degree-0-product pullback to be a chain map
    for (int r = 2; r <= 4; ++r)
        for (const auto& u : all_surjections(r, 1))
            CHECK(differential(u).size() % 2 == 0);
}

TEST_CASE("exterior instance is connected with a degree-1 letter") {
    auto E = builtin::exterior();
    CHECK(E->connected());
    const int u = E->id_of("u");
    CHECK(E->grade(u) == -1);
    CHECK(E->mul(u, u).is_zero());
}
