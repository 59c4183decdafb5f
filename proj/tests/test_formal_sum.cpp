#include <doctest.h>

#include <string>

#include "barops/formal_sum.hpp"

using barops::f2::FormalSum;

TEST_CASE("add toggles membership") {
    FormalSum<int> s;
    CHECK(s.is_zero());
    s.add(3);
    CHECK(s.contains(3));
    s.add(3);
    CHECK(s.is_zero());
}

TEST_CASE("sum merges with cancellation") {
    FormalSum<int> a, b;
    a.add(1);
    a.add(2);
    b.add(2);
    b.add(5);
    a += b;
    CHECK(a.size() == 2);
    CHECK(a.contains(1));
    CHECK(a.contains(5));
    CHECK_FALSE(a.contains(2));
}

TEST_CASE("terms stay sorted and unique") {
    FormalSum<int> s;
    for (int v : {5, 1, 3, 1, 5, 2}) s.add(v);
    std::vector<int> got(s.begin(), s.end());
    CHECK(got == std::vector<int>{2, 3});
}

TEST_CASE("of builds a singleton") {
    auto s = FormalSum<std::string>::of("w");
    CHECK(s.size() == 1);
    CHECK(s.contains("w"));
}

TEST_CASE("mapped extends linearly with cancellation") {
    FormalSum<int> s;
    s.add(1);
    s.add(2);
    s.add(3);
    // 1 and 3 map to the same pair, cancelling it
    auto out = s.mapped([](int v) {
        FormalSum<int> r;
        r.add(v % 2);
        r.add(10);
        return r;
    });
    CHECK(out.size() == 2); // {0, 10} from the even input; odd pair cancelled
    CHECK(out.contains(0));
    CHECK(out.contains(10));
}

TEST_CASE("a + a = 0 on random-ish sums") {
    FormalSum<int> a;
    for (int v : {7, 2, 9, 4}) a.add(v);
    auto b = a;
    b += a;
    CHECK(b.is_zero());
}
