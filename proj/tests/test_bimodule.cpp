#include <doctest.h>

#include "qsh/basis.hpp"

using namespace qsh;

namespace {

CartanDatum sl2() { return CartanDatum({{2}}, {1}); }
CartanDatum sl3() { return CartanDatum({{2, -1}, {-1, 2}}, {1, 1}); }
CartanDatum b2() { return CartanDatum({{2, -2}, {-1, 2}}, {1, 2}); }

BasisContext make_ctx(const CartanDatum& d, std::vector<int> lam, Regime reg = Regime::generic()) {
    return BasisContext(ShuffleContext(d, WeightSpec(d, std::move(lam)), reg));
}

// Poincare scalar for the 1-dim sl2 blocks: prod_{j=1}^{m} (1 + q^2 + ... + q^{2(j-1)})
FieldElem sl2_sigma_scalar(const Regime& reg, int m) {
    FieldElem acc = FieldElem::one(reg);
    for (int j = 1; j <= m; ++j) {
        FieldElem factor = FieldElem::zero(reg);
        for (int i = 0; i < j; ++i) factor += FieldElem::qpow(reg, 2 * i);
        acc *= factor;
    }
    return acc;
}

}  // namespace

TEST_CASE("sl2 components are one-dimensional at generic q") {
    BasisContext bc = make_ctx(sl2(), {1});
    for (int m = 0; m <= 5; ++m) {
        auto cb = bc.component_basis(Content{{m}, 0});
        CHECK(cb->dim == 1);
        // the basis vector is the symmetrization of the unique word
        LinComb expect;
        expect.add(Word(static_cast<size_t>(m), static_cast<char>(1)), sl2_sigma_scalar(Regime::generic(), m));
        CHECK(cb->basis[0] == expect);
    }
}

TEST_CASE("sl2 at l=3: F^3 = 0") {
    BasisContext bc = make_ctx(sl2(), {1}, Regime::root_of_unity(3));
    CHECK(bc.component_basis(Content{{0}, 0})->dim == 1);
    CHECK(bc.component_basis(Content{{1}, 0})->dim == 1);
    CHECK(bc.component_basis(Content{{2}, 0})->dim == 1);
    CHECK(bc.component_basis(Content{{3}, 0})->dim == 0);
    CHECK(bc.component_basis(Content{{4}, 0})->dim == 0);
    CHECK(sl2_sigma_scalar(Regime::root_of_unity(3), 3).is_zero());
}

TEST_CASE("sl2, lambda = omega, c=(1) k=1 block has dim 2") {
    BasisContext bc = make_ctx(sl2(), {1});
    auto cb = bc.component_basis(Content{{1}, 1});
    CHECK(cb->dim == 2);
}

TEST_CASE("serre kernels") {
    BasisContext bc2 = make_ctx(sl2(), {1});
    for (int m = 2; m <= 5; ++m) CHECK(bc2.serre_kernel(Content{{m}, 0}).empty());

    BasisContext bc3 = make_ctx(sl3(), {1, 0});
    CHECK(bc3.serre_kernel(Content{{1, 1}, 0}).empty());
    CHECK(bc3.serre_kernel(Content{{2, 1}, 0}).size() == 1);
    CHECK(bc3.serre_kernel(Content{{1, 2}, 0}).size() == 1);
}

TEST_CASE("graded dims match Kostant partition counts (sl2, sl3, B2; length <= 6)") {
    struct Case {
        CartanDatum datum;
        std::vector<int> lam;
    };
    std::vector<Case> cases{{sl2(), {1}}, {sl3(), {1, 0}}, {b2(), {1, 1}}};
    for (const Case& cs : cases) {
        BasisContext bc = make_ctx(cs.datum, cs.lam);
        RootSystem rs = positive_roots(cs.datum);
        for (const Content& c : contents_up_to(cs.datum.rank(), 6, 0)) {
            long expect = kostant_partition_count(rs, c.c);
            CHECK(bc.component_basis(c)->dim == expect);
        }
    }
}

TEST_CASE("closure: shuffle products of basis elements stay in the span") {
    BasisContext bc = make_ctx(sl3(), {1, 0});
    std::vector<Content> small{{{1, 0}, 0}, {{0, 1}, 0}, {{1, 1}, 0}, {{2, 0}, 0}};
    for (const Content& ca : small)
        for (const Content& cb : small) {
            auto a = bc.component_basis(ca);
            auto b = bc.component_basis(cb);
            for (int i = 0; i < a->dim; ++i)
                for (int j = 0; j < b->dim; ++j) CHECK_NOTHROW(bc.product_coords(ca, i, cb, j));
        }
}

TEST_CASE("deconcatenation coassociativity on M_k blocks up to length 4") {
    // (Delta (x) id) Delta = (id (x) Delta) Delta at the level of raw splits
    BasisContext bc = make_ctx(sl2(), {1});
    for (int c = 0; c <= 3; ++c) {
        auto cb = bc.component_basis(Content{{c}, 1});
        for (const LinComb& x : cb->basis) {
            // compare both iterated splits into (p, q, rest)
            std::map<std::tuple<Word, Word, Word>, FieldElem> lhs, rhs;
            int len = c + 1;
            for (int p = 0; p <= len; ++p)
                for (const DeconcatTerm& t : deconcat_split(x, p)) {
                    for (int q = 0; q <= p; ++q) {
                        // split the left factor again
                        Word l = t.left.substr(0, static_cast<size_t>(q));
                        Word m = t.left.substr(static_cast<size_t>(q));
                        auto key = std::make_tuple(l, m, t.right);
                        auto it = lhs.find(key);
                        if (it == lhs.end())
                            lhs.emplace(key, t.coeff);
                        else
                            it->second += t.coeff;
                    }
                    for (int q = 0; q <= len - p; ++q) {
                        Word m = t.right.substr(0, static_cast<size_t>(q));
                        Word r = t.right.substr(static_cast<size_t>(q));
                        auto key = std::make_tuple(t.left, m, r);
                        auto it = rhs.find(key);
                        if (it == rhs.end())
                            rhs.emplace(key, t.coeff);
                        else
                            it->second += t.coeff;
                    }
                }
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("reduced right coaction examples") {
    BasisContext bc = make_ctx(sl2(), {1});
    FieldElem one = FieldElem::one(bc.regime());

    LinComb v_only;
    v_only.add(word_from_letters({0}), one);
    CHECK(bc.reduced_right_coaction(v_only).empty());

    LinComb fv;
    fv.add(word_from_letters({1, 0}), one);
    CHECK(bc.reduced_right_coaction(fv).empty());

    LinComb vf;
    vf.add(word_from_letters({0, 1}), one);
    auto comps = bc.reduced_right_coaction(vf);
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].first == v_only);
    LinComb f_only;
    f_only.add(word_from_letters({1}), one);
    CHECK(comps[0].second == f_only);

    // single F letters are primitive on the reduced level
    CHECK(bc.reduced_right_coaction(f_only).empty());
}

TEST_CASE("coaction components escaping the subalgebra are an error") {
    // at l = 3 the length-3 component of S vanishes, so a raw word whose
    // deconcatenation produces a factor there cannot be expressed in bases
    BasisContext bc = make_ctx(sl2(), {1}, Regime::root_of_unity(3));
    LinComb x;
    x.add(word_from_letters({0, 1, 1, 1}), FieldElem::one(bc.regime()));
    CHECK_THROWS_AS(bc.reduced_right_coaction(x), SpanError);
}

TEST_CASE("coinvariants of M_1") {
    BasisContext bc = make_ctx(sl2(), {1});
    CoinvariantBasis coinv = bc.coinvariants(1, 4);
    CHECK(coinv.dim_at(Content{{0}, 1}) == 1);
    CHECK(coinv.dim_at(Content{{1}, 1}) == 1);
    CHECK(coinv.dim_at(Content{{2}, 1}) == 0);
    CHECK(coinv.dim_at(Content{{3}, 1}) == 0);
    CHECK(coinv.total_dim() == 2);
    // the trivial coinvariant is exactly (v)
    LinComb v_only;
    v_only.add(word_from_letters({0}), FieldElem::one(bc.regime()));
    CHECK(coinv.vectors.at(Content{{0}, 1})[0] == v_only);
}

TEST_CASE("coinvariant characters match Weyl characters within truncation") {
    struct Case {
        CartanDatum datum;
        std::vector<int> lam;
        int t_max;
    };
    std::vector<Case> cases{
        {sl2(), {1}, 3}, {sl2(), {2}, 3}, {sl2(), {3}, 4}, {sl3(), {1, 0}, 3}, {sl3(), {0, 1}, 3},
    };
    for (const Case& cs : cases) {
        BasisContext bc = make_ctx(cs.datum, cs.lam);
        WeightSpec lam(cs.datum, cs.lam);
        CoinvariantBasis coinv = bc.coinvariants(1, cs.t_max);
        auto ch = weyl_character(cs.datum, lam);
        for (const Content& c : contents_up_to(cs.datum.rank(), cs.t_max, 1)) {
            auto it = ch.find(c.c);
            long expect = it == ch.end() ? 0 : it->second;
            CHECK(coinv.dim_at(c) == expect);
        }
    }
}

TEST_CASE("B2 coinvariants match the Weyl character (non-simply-laced)") {
    // exercises the d_i != 1 path of the lambda braiding exponents
    BasisContext bc = make_ctx(b2(), {0, 1});
    WeightSpec lam(b2(), {0, 1});
    CHECK(weyl_dim(b2(), lam) == 5);
    CoinvariantBasis coinv = bc.coinvariants(1, 3);
    auto ch = weyl_character(b2(), lam);
    for (const Content& c : contents_up_to(2, 3, 1)) {
        auto it = ch.find(c.c);
        long expect = it == ch.end() ? 0 : it->second;
        CHECK(coinv.dim_at(c) == expect);
    }
}

TEST_CASE("sl3 adjoint-weight coinvariants (lambda = omega1 + omega2, t_max 4)") {
    BasisContext bc = make_ctx(sl3(), {1, 1});
    WeightSpec lam(sl3(), {1, 1});
    CoinvariantBasis coinv = bc.coinvariants(1, 4);
    auto ch = weyl_character(sl3(), lam);
    long total = 0;
    for (const auto& [nu, m] : ch) total += m;
    CHECK(total == 8);
    for (const auto& [nu, m] : ch) CHECK(coinv.dim_at(Content{nu, 1}) == m);
}

TEST_CASE("coinvariants of degree 2 contain the symmetrized v v") {
    BasisContext bc = make_ctx(sl2(), {1});
    auto [vecs, coords] = bc.coinvariants_block(Content{{0}, 2});
    REQUIRE(vecs.size() == 1);
    // (1 + q^2)(v,v) spans the block
    LinComb vv;
    vv.add(word_from_letters({0, 0}), FieldElem::one(bc.regime()) + FieldElem::qpow(bc.regime(), 2));
    auto cb = bc.component_basis(Content{{0}, 2});
    CHECK(cb->dim == 1);
    CHECK_NOTHROW(cb->coordinates(vv));
}

TEST_CASE("degree-2 multiplication map") {
    SUBCASE("sl2 lambda = 2 omega (non-critical)") {
        BasisContext bc = make_ctx(sl2(), {2});
        Degree2Report rep = degree2_mult_map(bc, 4);
        CHECK_FALSE(rep.truncation_warning);
        CHECK(rep.image_total == 9);
        CHECK(rep.kernel_dim == 0);
        CHECK(rep.surjective_within_truncation);
    }
    SUBCASE("sl2 lambda = omega (critical)") {
        BasisContext bc = make_ctx(sl2(), {1});
        Degree2Report rep = degree2_mult_map(bc, 3);
        CHECK(rep.image_total == 3);
        CHECK(rep.kernel_dim == 1);
        CHECK(rep.surjective_within_truncation);
    }
    SUBCASE("sl3 lambda = omega1 (critical, J = {1})") {
        BasisContext bc = make_ctx(sl3(), {1, 0});
        Degree2Report rep = degree2_mult_map(bc, 4);
        CHECK(rep.image_total == 6);
        CHECK(rep.kernel_dim == 3);
        CHECK(rep.surjective_within_truncation);
    }
}

TEST_CASE("degree-2 map warns when t_max cannot hold L(lambda)") {
    BasisContext bc = make_ctx(sl2(), {2});
    Degree2Report rep = degree2_mult_map(bc, 1);  // L(2 omega) needs contents up to 2
    CHECK(rep.truncation_warning);
}

TEST_CASE("prop 7: sl2 lambda = omega, dim M_p^coR = p + 1") {
    BasisContext bc = make_ctx(sl2(), {1});
    for (int p = 0; p <= 3; ++p) {
        CoinvariantBasis coinv = bc.coinvariants(p, 5);
        CHECK(coinv.total_dim() == p + 1);
    }
}

TEST_CASE("graded dimension table") {
    BasisContext bc = make_ctx(sl2(), {1});
    auto table = bc.graded_dimension_table(3, 1);
    CHECK(table.at(Content{{2}, 0}) == 1);
    CHECK(table.at(Content{{1}, 1}) == 2);
    CHECK(table.at(Content{{0}, 1}) == 1);
}
