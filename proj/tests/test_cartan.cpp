#include <doctest.h>

#include <algorithm>
#include <set>

#include "qsh/cartan.hpp"

using namespace qsh;

namespace {

CartanDatum sl2() { return CartanDatum({{2}}, {1}); }
CartanDatum sl3() { return CartanDatum({{2, -1}, {-1, 2}}, {1, 1}); }
CartanDatum sl4() {
    return CartanDatum({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}, {1, 1, 1});
}
CartanDatum b2() { return CartanDatum({{2, -2}, {-1, 2}}, {1, 2}); }

}  // namespace

TEST_CASE("positive roots of small types") {
    CHECK(positive_roots(sl2()).count() == 1);

    RootSystem a2 = positive_roots(sl3());
    std::set<RootVec> expect{{1, 0}, {0, 1}, {1, 1}};
    CHECK(std::set<RootVec>(a2.positive_roots.begin(), a2.positive_roots.end()) == expect);

    CHECK(positive_roots(sl4()).count() == 6);

    RootSystem rb2 = positive_roots(b2());
    CHECK(rb2.count() == 4);
    std::set<RootVec> eb2{{1, 0}, {0, 1}, {1, 1}, {2, 1}};
    CHECK(std::set<RootVec>(rb2.positive_roots.begin(), rb2.positive_roots.end()) == eb2);
}

TEST_CASE("non-finite type is rejected with a witness") {
    CartanDatum affine({{2, -2}, {-2, 2}}, {1, 1});
    CHECK_THROWS_WITH_AS(positive_roots(affine), doctest::Contains("not of finite type"), CartanError);
}

TEST_CASE("cartan datum invariants are enforced") {
    CHECK_THROWS_AS(CartanDatum({{1}}, {1}), CartanError);                      // diagonal
    CHECK_THROWS_AS(CartanDatum({{2, 1}, {1, 2}}, {1, 1}), CartanError);        // positive off-diag
    CHECK_THROWS_AS(CartanDatum({{2, -1}, {0, 2}}, {1, 1}), CartanError);       // zero symmetry
    CHECK_THROWS_AS(CartanDatum({{2, -2}, {-1, 2}}, {1, 1}), CartanError);      // d c not symmetric
    CHECK_NOTHROW(b2());
}

TEST_CASE("convex order from reduced words") {
    RootSystem r1 = convex_order(sl2(), positive_roots(sl2()), {1});
    CHECK(r1.convex_order == std::vector<RootVec>{{1}});

    RootSystem r121 = convex_order(sl3(), positive_roots(sl3()), {1, 2, 1});
    CHECK(r121.convex_order == std::vector<RootVec>{{1, 0}, {1, 1}, {0, 1}});

    RootSystem r212 = convex_order(sl3(), positive_roots(sl3()), {2, 1, 2});
    CHECK(r212.convex_order == std::vector<RootVec>{{0, 1}, {1, 1}, {1, 0}});

    CHECK(is_convex(sl3(), r121.convex_order));
    CHECK(is_convex(sl3(), r212.convex_order));

    CHECK_THROWS_WITH_AS(convex_order(sl3(), positive_roots(sl3()), {1, 1, 2}),
                         doctest::Contains("not reduced"), CartanError);
    CHECK_THROWS_AS(convex_order(sl3(), positive_roots(sl3()), {1, 2}), CartanError);
}

TEST_CASE("default w0 word is the lexicographically least reduced word") {
    CHECK(default_w0_word(sl2()) == std::vector<int>{1});
    CHECK(default_w0_word(sl3()) == std::vector<int>{1, 2, 1});
    std::vector<int> wb2 = default_w0_word(b2());
    CHECK(wb2.size() == 4);
    CHECK(wb2 == std::vector<int>{1, 2, 1, 2});
    CHECK_NOTHROW(convex_order(b2(), positive_roots(b2()), wb2));
    std::vector<int> w4 = default_w0_word(sl4());
    CHECK(w4.size() == 6);
    CHECK_NOTHROW(convex_order(sl4(), positive_roots(sl4()), w4));
}

TEST_CASE("pairing values and symmetry") {
    CartanDatum a2 = sl3();
    CHECK(a2.pairing({1, 0}, {0, 1}) == -1);
    CHECK(a2.pairing({1, 1}, {1, 0}) == 1);
    WeightSpec two_omega(sl2(), {2});
    CHECK(two_omega.m(0) == 2);

    CartanDatum c = b2();
    for (const RootVec& x : positive_roots(c).positive_roots)
        for (const RootVec& y : positive_roots(c).positive_roots)
            CHECK(c.pairing(x, y) == c.pairing(y, x));
}

TEST_CASE("weyl dimension formula") {
    for (int m = 0; m <= 5; ++m) CHECK(weyl_dim(sl2(), WeightSpec(sl2(), {m})) == m + 1);
    CHECK(weyl_dim(sl3(), WeightSpec(sl3(), {1, 0})) == 3);
    CHECK(weyl_dim(sl3(), WeightSpec(sl3(), {2, 0})) == 6);
    CHECK(weyl_dim(sl3(), WeightSpec(sl3(), {1, 1})) == 8);
    CHECK(weyl_dim(b2(), WeightSpec(b2(), {1, 0})) == 4);  // spin rep of so(5)
    CHECK(weyl_dim(b2(), WeightSpec(b2(), {0, 1})) == 5);  // vector rep
}

TEST_CASE("weyl character by Freudenthal recursion") {
    // sl2, lambda = 2 omega: weights lambda, lambda - alpha, lambda - 2 alpha
    auto ch = weyl_character(sl2(), WeightSpec(sl2(), {2}));
    CHECK(ch.size() == 3);
    CHECK(ch.at({0}) == 1);
    CHECK(ch.at({1}) == 1);
    CHECK(ch.at({2}) == 1);

    auto ch3 = weyl_character(sl3(), WeightSpec(sl3(), {1, 0}));
    CHECK(ch3.size() == 3);
    for (const auto& [nu, m] : ch3) CHECK(m == 1);
    CHECK(ch3.count({0, 0}) == 1);  // highest weight multiplicity 1

    // adjoint of sl3: 8 = 6 weights of mult 1 + zero weight of mult 2
    auto adj = weyl_character(sl3(), WeightSpec(sl3(), {1, 1}));
    CHECK(adj.at({1, 1}) == 2);

    // multiplicities always sum to weyl_dim
    for (auto lam : std::vector<std::vector<int>>{{1, 0}, {0, 1}, {1, 1}, {2, 1}}) {
        long total = 0;
        for (const auto& [nu, m] : weyl_character(sl3(), WeightSpec(sl3(), lam))) total += m;
        CHECK(total == weyl_dim(sl3(), WeightSpec(sl3(), lam)));
    }
    for (auto lam : std::vector<std::vector<int>>{{1, 0}, {0, 1}, {1, 1}}) {
        long total = 0;
        for (const auto& [nu, m] : weyl_character(b2(), WeightSpec(b2(), lam))) total += m;
        CHECK(total == weyl_dim(b2(), WeightSpec(b2(), lam)));
    }
}

TEST_CASE("positive root counts for sl_n") {
    CHECK(positive_roots(sl2()).count() == 1);
    CHECK(positive_roots(sl3()).count() == 3);
    CHECK(positive_roots(sl4()).count() == 6);
}

TEST_CASE("kostant partition counts") {
    RootSystem a2 = positive_roots(sl3());
    // content a*alpha1 + b*alpha2: count = min(a,b)+1
    for (int a = 0; a <= 4; ++a)
        for (int b = 0; b <= 4; ++b)
            CHECK(kostant_partition_count(a2, {a, b}) == std::min(a, b) + 1);
    // restricted variant bounds every root multiplicity by l-1
    CHECK(restricted_kostant_count(positive_roots(sl2()), {2}, 3) == 1);
    CHECK(restricted_kostant_count(positive_roots(sl2()), {3}, 3) == 0);
}

TEST_CASE("weight spec preconditions") {
    CHECK_THROWS_AS(WeightSpec(sl3(), {-1, 0}), CartanError);
    CHECK_THROWS_AS(WeightSpec(sl3(), {1}), CartanError);
    CHECK(WeightSpec(b2(), {1, 1}).m(1) == 2);  // m_i = d_i c_i
    CHECK(WeightSpec(sl2(), {2}).restricted_for(3));
    CHECK_FALSE(WeightSpec(sl2(), {3}).restricted_for(3));
}
