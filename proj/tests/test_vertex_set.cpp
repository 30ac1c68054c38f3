#include <catch2/catch_amalgamated.hpp>

#include "clawbound/errors.hpp"
#include "clawbound/vertex_set.hpp"

using clawbound::VertexSet;

TEST_CASE("set, test, reset over word boundaries") {
    VertexSet s(130);
    REQUIRE(s.universe_size() == 130);
    REQUIRE(s.empty());
    s.set(0);
    s.set(63);
    s.set(64);
    s.set(129);
    REQUIRE(s.count() == 4);
    REQUIRE(s.test(63));
    REQUIRE(s.test(64));
    REQUIRE_FALSE(s.test(65));
    s.reset(64);
    REQUIRE_FALSE(s.test(64));
    REQUIRE(s.count() == 3);
}

TEST_CASE("out-of-range access throws") {
    VertexSet s(4);
    REQUIRE_THROWS_AS(s.set(4), clawbound::input_error);
    REQUIRE_THROWS_AS(s.test(-1), clawbound::input_error);
    REQUIRE_THROWS_AS(VertexSet(-1), clawbound::input_error);
}

TEST_CASE("bit algebra") {
    VertexSet a(10), b(10);
    a.set(1);
    a.set(3);
    a.set(7);
    b.set(3);
    b.set(8);
    REQUIRE(a.intersects(b));
    VertexSet u = a | b;
    REQUIRE(u.count() == 4);
    REQUIRE(u.contains_all(a));
    REQUIRE(u.contains_all(b));
    VertexSet i = a & b;
    REQUIRE(i.to_vector() == std::vector<int>{3});
    VertexSet d = a - b;
    REQUIRE(d.to_vector() == std::vector<int>{1, 7});
    REQUIRE_FALSE(a.contains_all(b));
    VertexSet c(11);
    REQUIRE_THROWS_AS(a |= c, clawbound::input_error);
}

TEST_CASE("iteration order is ascending") {
    VertexSet s(70);
    s.set(69);
    s.set(2);
    s.set(64);
    REQUIRE(s.first() == 2);
    REQUIRE(s.next_after(2) == 64);
    REQUIRE(s.next_after(64) == 69);
    REQUIRE(s.next_after(69) == -1);
    std::vector<int> seen;
    s.for_each([&](int v) { seen.push_back(v); });
    REQUIRE(seen == std::vector<int>{2, 64, 69});
}

TEST_CASE("full universe and to_string") {
    VertexSet f = VertexSet::full(5);
    REQUIRE(f.count() == 5);
    REQUIRE(f.to_string() == "{0,1,2,3,4}");
    REQUIRE(VertexSet(3).to_string() == "{}");
    VertexSet e = VertexSet::full(0);
    REQUIRE(e.empty());
}

TEST_CASE("precedes orders by smallest differing element") {
    VertexSet a(6), b(6);
    a.set(0);
    a.set(5);
    b.set(1);
    b.set(2);
    REQUIRE(a.precedes(b));  // {0,5} before {1,2}
    REQUIRE_FALSE(b.precedes(a));
    REQUIRE_FALSE(a.precedes(a));
    VertexSet c(6);
    c.set(0);
    c.set(4);
    REQUIRE(c.precedes(a));  // {0,4} before {0,5}
}

TEST_CASE("equality and assignment") {
    VertexSet a(8), b(8);
    a.set(3);
    b.set(3);
    REQUIRE(a == b);
    b.set(4);
    REQUIRE(a != b);
    a |= b;
    REQUIRE(a == b);
}
