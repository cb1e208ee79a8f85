#include <doctest.h>

#include <numeric>

#include "qsh/words.hpp"

using namespace qsh;

namespace {

CartanDatum sl2() { return CartanDatum({{2}}, {1}); }
CartanDatum sl3() { return CartanDatum({{2, -1}, {-1, 2}}, {1, 1}); }
CartanDatum b2() { return CartanDatum({{2, -2}, {-1, 2}}, {1, 2}); }

ShuffleContext ctx_sl2(int lambda_coord = 1) {
    CartanDatum d = sl2();
    return ShuffleContext(d, WeightSpec(d, {lambda_coord}), Regime::generic());
}

ShuffleContext ctx_sl3() {
    CartanDatum d = sl3();
    return ShuffleContext(d, WeightSpec(d, {1, 0}), Regime::generic());
}

LinComb single(const Word& w, const FieldElem& c) {
    LinComb x;
    x.add(w, c);
    return x;
}

// all reduced expressions of a permutation, by descent recursion
void all_reduced_words(Perm w, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    bool any = false;
    for (size_t i = 0; i + 1 < w.size(); ++i) {
        if (w[i] > w[i + 1]) {
            any = true;
            Perm v = w;
            std::swap(v[i], v[i + 1]);
            cur.push_back(static_cast<int>(i));
            all_reduced_words(v, cur, out);
            cur.pop_back();
        }
    }
    if (!any) {
        std::vector<int> word(cur.rbegin(), cur.rend());
        out.push_back(word);
    }
}

}  // namespace

TEST_CASE("braiding coefficients") {
    ShuffleContext c2 = ctx_sl2();
    CHECK(c2.braiding_coeff(1, 1) == c2.qpow(2));                            // q^{a_11}
    CHECK(c2.braiding_coeff(LAMBDA_LETTER, LAMBDA_LETTER) == c2.qpow(2));    // q^2
    CHECK(c2.braiding_coeff(1, LAMBDA_LETTER) == c2.qpow(-1));               // q^{-(lambda,alpha_1)}
    CHECK(c2.braiding_coeff(LAMBDA_LETTER, 1) == c2.qpow(-1));
    ShuffleContext c3 = ctx_sl3();
    CHECK(c3.braiding_coeff(1, 2) == c3.qpow(-1));
}

TEST_CASE("apply_sigma_i") {
    ShuffleContext c3 = ctx_sl3();
    LinComb x = single(word_from_letters({1, 2}), FieldElem::one(c3.regime()));
    LinComb y = apply_sigma_i(c3, x, 0);
    CHECK(y == single(word_from_letters({2, 1}), c3.qpow(-1)));

    ShuffleContext c2 = ctx_sl2();
    LinComb z = apply_sigma_i(c2, single(word_from_letters({1, 1}), FieldElem::one(c2.regime())), 0);
    CHECK(z == single(word_from_letters({1, 1}), c2.qpow(2)));

    CHECK(apply_sigma_i(c2, LinComb{}, 0).is_zero());
    CHECK_THROWS_AS(apply_sigma_i(c2, x, 5), std::out_of_range);
}

TEST_CASE("matsumoto action") {
    ShuffleContext c2 = ctx_sl2();
    LinComb fff = single(word_from_letters({1, 1, 1}), FieldElem::one(c2.regime()));
    CHECK(matsumoto_action(c2, {0, 1, 2}, fff) == fff);
    // longest element of S_3: three adjacent swaps, q^2 each
    CHECK(matsumoto_action(c2, {2, 1, 0}, fff) == fff * c2.qpow(6));

    ShuffleContext c3 = ctx_sl3();
    LinComb f12 = single(word_from_letters({1, 2}), FieldElem::one(c3.regime()));
    CHECK(matsumoto_action(c3, {1, 0}, f12) == single(word_from_letters({2, 1}), c3.qpow(-1)));
    CHECK_THROWS_AS(matsumoto_action(c3, {0, 1, 2}, f12), std::invalid_argument);
}

TEST_CASE("matsumoto is independent of the reduced expression, all of S4") {
    ShuffleContext c3 = ctx_sl3();
    Content block{{2, 1}, 1};  // letters F1 F1 F2 v
    std::vector<Word> basis = c3.words_of_content(block);
    REQUIRE(basis.size() == 12);
    Perm w(4);
    std::iota(w.begin(), w.end(), 0);
    do {
        std::vector<std::vector<int>> words;
        std::vector<int> cur;
        all_reduced_words(w, cur, words);
        REQUIRE(!words.empty());
        for (const Word& b : basis) {
            LinComb x = single(b, FieldElem::one(c3.regime()));
            LinComb first;
            for (size_t k = 0; k < words.size(); ++k) {
                LinComb y = x;
                for (int i : words[k]) y = apply_sigma_i(c3, y, i);
                if (k == 0)
                    first = y;
                else
                    CHECK(y == first);
            }
        }
    } while (std::next_permutation(w.begin(), w.end()));
}

TEST_CASE("braid relations on all blocks of total length <= 5") {
    std::vector<ShuffleContext> ctxs;
    ctxs.push_back(ctx_sl2());
    ctxs.push_back(ctx_sl3());
    {
        CartanDatum d = b2();
        ctxs.push_back(ShuffleContext(d, WeightSpec(d, {1, 1}), Regime::generic()));
    }
    for (const ShuffleContext& ctx : ctxs) {
        for (int k = 0; k <= 2; ++k) {
            for (int len = 2; len + k <= 5; ++len) {
                // enumerate contents of F-length len
                std::vector<Content> contents;
                if (ctx.rank() == 1) {
                    contents.push_back(Content{{len}, k});
                } else {
                    for (int a = 0; a <= len; ++a) contents.push_back(Content{{a, len - a}, k});
                }
                for (const Content& c : contents) {
                    int total = c.total_letters();
                    for (const Word& w : ctx.words_of_content(c)) {
                        LinComb x = single(w, FieldElem::one(ctx.regime()));
                        for (int i = 0; i + 1 < total - 1; ++i) {
                            LinComb lhs = apply_sigma_i(ctx, apply_sigma_i(ctx, apply_sigma_i(ctx, x, i), i + 1), i);
                            LinComb rhs = apply_sigma_i(ctx, apply_sigma_i(ctx, apply_sigma_i(ctx, x, i + 1), i), i + 1);
                            CHECK(lhs == rhs);
                        }
                        for (int i = 0; i + 1 < total; ++i)
                            for (int j = i + 2; j + 1 < total; ++j) {
                                LinComb lhs = apply_sigma_i(ctx, apply_sigma_i(ctx, x, i), j);
                                LinComb rhs = apply_sigma_i(ctx, apply_sigma_i(ctx, x, j), i);
                                CHECK(lhs == rhs);
                            }
                    }
                }
            }
        }
    }
}

TEST_CASE("shuffle enumeration") {
    CHECK(enumerate_shuffles(1, 1).size() == 2);
    CHECK(enumerate_shuffles(2, 1).size() == 3);
    CHECK(enumerate_shuffles(0, 3).size() == 1);
    CHECK(enumerate_shuffles(0, 3)[0] == Perm{0, 1, 2});
    CHECK(enumerate_shuffles(2, 2).size() == 6);
    // two-chain condition: positions of 0..p-1 ascend, positions of p..n-1 ascend
    for (const Perm& w : enumerate_shuffles(2, 3)) {
        std::vector<int> pos(w.size());
        for (size_t i = 0; i < w.size(); ++i) pos[static_cast<size_t>(w[i])] = static_cast<int>(i);
        CHECK(pos[0] < pos[1]);
        CHECK(pos[2] < pos[3]);
        CHECK(pos[3] < pos[4]);
    }
}

TEST_CASE("total symmetrizer examples") {
    ShuffleContext c2 = ctx_sl2();
    SparseMatrix m = total_symmetrizer(c2, Content{{2}, 0});
    CHECK(m.rows() == 1);
    CHECK(m.get(0, 0) == FieldElem::one(c2.regime()) + c2.qpow(2));

    ShuffleContext c3 = ctx_sl3();
    SparseMatrix m11 = total_symmetrizer(c3, Content{{1, 1}, 0});
    CHECK(m11.rows() == 2);
    CHECK(m11.get(0, 0) == FieldElem::one(c3.regime()));
    CHECK(m11.get(0, 1) == c3.qpow(-1));
    CHECK(m11.get(1, 0) == c3.qpow(-1));
    CHECK(m11.get(1, 1) == FieldElem::one(c3.regime()));
    CHECK(rank_kernel_image(m11).rank == 2);

    SparseMatrix one_letter = total_symmetrizer(c3, Content{{1, 0}, 0});
    CHECK(one_letter.rows() == 1);
    CHECK(one_letter.get(0, 0) == FieldElem::one(c3.regime()));
}

TEST_CASE("sigma_3 block of sl3 at content (2,1), brute force oracle") {
    // Independent of the walk machinery: six permutations with hand-listed
    // reduced words, applied as single generator steps.
    ShuffleContext c3 = ctx_sl3();
    Content block{{2, 1}, 0};
    std::vector<Word> basis = c3.words_of_content(block);
    REQUIRE(basis.size() == 3);
    std::vector<std::vector<int>> reduced_words{{}, {0}, {1}, {0, 1}, {1, 0}, {0, 1, 0}};
    SparseMatrix m(3, 3, c3.regime());
    for (int col = 0; col < 3; ++col) {
        LinComb acc;
        for (const auto& rw : reduced_words) {
            LinComb y = single(basis[static_cast<size_t>(col)], FieldElem::one(c3.regime()));
            // rightmost generator acts first
            for (auto it = rw.rbegin(); it != rw.rend(); ++it) y = apply_sigma_i(c3, y, *it);
            acc += y;
        }
        for (const auto& [w, cf] : acc.terms) {
            auto pos = std::find(basis.begin(), basis.end(), w);
            REQUIRE(pos != basis.end());
            m.set(static_cast<int>(pos - basis.begin()), col, cf);
        }
    }
    CHECK(m == total_symmetrizer(c3, block));
    RankKernelImage rki = rank_kernel_image(m);
    CHECK(rki.rank == 2);
    CHECK(rki.kernel_basis.size() == 1);
}

TEST_CASE("shuffle product") {
    ShuffleContext c3 = ctx_sl3();
    FieldElem one = FieldElem::one(c3.regime());
    LinComb f1 = single(word_from_letters({1}), one);
    LinComb f2 = single(word_from_letters({2}), one);
    LinComb expect;
    expect.add(word_from_letters({1, 2}), one);
    expect.add(word_from_letters({2, 1}), c3.qpow(-1));
    CHECK(shuffle_product(c3, f1, f2) == expect);

    // unit
    LinComb unit = single(Word{}, one);
    CHECK(shuffle_product(c3, f1, unit) == f1);
    CHECK(shuffle_product(c3, unit, f1) == f1);

    ShuffleContext c2 = ctx_sl2();
    FieldElem one2 = FieldElem::one(c2.regime());
    LinComb f = single(word_from_letters({1}), one2);
    LinComb sq = shuffle_product(c2, f, f);
    CHECK(sq == single(word_from_letters({1, 1}), one2 + c2.qpow(2)));
}

TEST_CASE("shuffle product is associative on random words") {
    ShuffleContext c3 = ctx_sl3();
    FieldElem one = FieldElem::one(c3.regime());
    std::vector<Word> pool{word_from_letters({1}),    word_from_letters({2}),    word_from_letters({1, 1}),
                           word_from_letters({1, 2}), word_from_letters({2, 1}), word_from_letters({0}),
                           word_from_letters({1, 0})};
    for (size_t a = 0; a < pool.size(); ++a)
        for (size_t b = 0; b < pool.size(); ++b)
            for (size_t c = 0; c < pool.size(); ++c) {
                LinComb xa = single(pool[a], one), xb = single(pool[b], one), xc = single(pool[c], one);
                CHECK(shuffle_product(c3, shuffle_product(c3, xa, xb), xc) ==
                      shuffle_product(c3, xa, shuffle_product(c3, xb, xc)));
            }
}

TEST_CASE("symmetrizer factorization through shuffles") {
    // Sigma_n = (Sigma_p (x) Sigma_{n-p}) o (sum over (p, n-p)-shuffles)
    for (int rank_case = 0; rank_case < 2; ++rank_case) {
        ShuffleContext ctx = rank_case == 0 ? ctx_sl2() : ctx_sl3();
        std::vector<Content> blocks;
        if (rank_case == 0) {
            blocks.push_back(Content{{3}, 1});
            blocks.push_back(Content{{5}, 0});
            blocks.push_back(Content{{4}, 1});
        } else {
            blocks.push_back(Content{{2, 1}, 1});
            blocks.push_back(Content{{2, 2}, 0});
            blocks.push_back(Content{{3, 2}, 0});
        }
        for (const Content& c : blocks) {
            const int n = c.total_letters();
            for (const Word& w : ctx.words_of_content(c)) {
                LinComb x;
                x.add(w, FieldElem::one(ctx.regime()));
                LinComb total = symmetrize_word(ctx, w);
                for (int p = 0; p <= n; ++p) {
                    LinComb shuffled;
                    for (const Perm& s : enumerate_shuffles(p, n - p)) shuffled += matsumoto_action(ctx, s, x);
                    // apply Sigma_p (x) Sigma_{n-p}: symmetrize both sides of each term
                    LinComb assembled;
                    for (const auto& [word, cf] : shuffled.terms) {
                        LinComb left = symmetrize_word(ctx, word.substr(0, static_cast<size_t>(p)));
                        LinComb right = symmetrize_word(ctx, word.substr(static_cast<size_t>(p)));
                        for (const auto& [wl, cl] : left.terms)
                            for (const auto& [wr, cr] : right.terms) assembled.add(wl + wr, cf * cl * cr);
                    }
                    CHECK(assembled == total);
                }
            }
        }
    }
}

TEST_CASE("deconcatenation splits") {
    ShuffleContext c3 = ctx_sl3();
    LinComb x = single(word_from_letters({1, 2}), FieldElem::one(c3.regime()));
    auto at0 = deconcat_split(x, 0);
    REQUIRE(at0.size() == 1);
    CHECK(at0[0].left.empty());
    CHECK(at0[0].right == word_from_letters({1, 2}));
    auto at2 = deconcat_split(x, 2);
    CHECK(at2[0].right.empty());
    auto at1 = deconcat_split(x, 1);
    CHECK(at1[0].left == word_from_letters({1}));
    CHECK(at1[0].right == word_from_letters({2}));
    CHECK(at1[0].coeff == FieldElem::one(c3.regime()));
}

TEST_CASE("operators preserve content") {
    ShuffleContext c3 = ctx_sl3();
    Content block{{1, 1}, 1};
    for (const Word& w : c3.words_of_content(block)) {
        LinComb x;
        x.add(w, FieldElem::one(c3.regime()));
        for (int i = 0; i + 1 < block.total_letters(); ++i)
            for (const auto& [word, cf] : apply_sigma_i(c3, x, i).terms)
                CHECK(Content::of_word(word, c3.rank()) == block);
    }
}
