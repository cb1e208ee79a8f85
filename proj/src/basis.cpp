#include "qsh/basis.hpp"

#include <algorithm>
#include <iostream>
#include <sstream>

#include "qsh/parallel.hpp"

namespace qsh {

namespace {

std::vector<std::vector<FieldElem>> invert_dense(std::vector<std::vector<FieldElem>> w, const Regime& reg) {
    const int d = static_cast<int>(w.size());
    std::vector<std::vector<FieldElem>> inv(static_cast<size_t>(d),
                                            std::vector<FieldElem>(static_cast<size_t>(d), FieldElem::zero(reg)));
    for (int i = 0; i < d; ++i) inv[static_cast<size_t>(i)][static_cast<size_t>(i)] = FieldElem::one(reg);
    for (int c = 0; c < d; ++c) {
        int pr = -1;
        for (int r = c; r < d; ++r)
            if (!w[static_cast<size_t>(r)][static_cast<size_t>(c)].is_zero()) {
                pr = r;
                break;
            }
        if (pr < 0) throw SpanError("invert_dense: singular matrix");
        std::swap(w[static_cast<size_t>(pr)], w[static_cast<size_t>(c)]);
        std::swap(inv[static_cast<size_t>(pr)], inv[static_cast<size_t>(c)]);
        FieldElem pinv = w[static_cast<size_t>(c)][static_cast<size_t>(c)].inverse();
        for (int j = 0; j < d; ++j) {
            w[static_cast<size_t>(c)][static_cast<size_t>(j)] *= pinv;
            inv[static_cast<size_t>(c)][static_cast<size_t>(j)] *= pinv;
        }
        for (int r = 0; r < d; ++r) {
            if (r == c) continue;
            FieldElem f = w[static_cast<size_t>(r)][static_cast<size_t>(c)];
            if (f.is_zero()) continue;
            for (int j = 0; j < d; ++j) {
                w[static_cast<size_t>(r)][static_cast<size_t>(j)] -= f * w[static_cast<size_t>(c)][static_cast<size_t>(j)];
                inv[static_cast<size_t>(r)][static_cast<size_t>(j)] -= f * inv[static_cast<size_t>(c)][static_cast<size_t>(j)];
            }
        }
    }
    return inv;
}

int word_index_in(const std::vector<Word>& words, const Word& w) {
    auto it = std::lower_bound(words.begin(), words.end(), w);
    if (it == words.end() || *it != w) return -1;
    return static_cast<int>(it - words.begin());
}

bool word_has_lambda(const Word& w) {
    return w.find(static_cast<char>(LAMBDA_LETTER)) != std::string::npos;
}

}  // namespace

void ComponentBasis::build_solver(const Regime& regime) {
    solve_rows.clear();
    solve_inverse.clear();
    if (dim == 0) return;
    const int B = static_cast<int>(words.size());
    SparseMatrix t(dim, B, regime);
    for (int i = 0; i < dim; ++i)
        for (const auto& [w, cf] : basis[static_cast<size_t>(i)].terms)
            t.set(i, word_index_in(words, w), cf);
    RankKernelImage rki = rank_kernel_image(t);
    if (rki.rank != dim) throw SpanError("ComponentBasis: stored basis is not linearly independent");
    solve_rows = rki.image_pivots;
    std::vector<std::vector<FieldElem>> s(static_cast<size_t>(dim),
                                          std::vector<FieldElem>(static_cast<size_t>(dim), FieldElem::zero(regime)));
    for (int j = 0; j < dim; ++j)
        for (int i = 0; i < dim; ++i) {
            auto it = basis[static_cast<size_t>(i)].terms.find(words[static_cast<size_t>(solve_rows[static_cast<size_t>(j)])]);
            if (it != basis[static_cast<size_t>(i)].terms.end()) s[static_cast<size_t>(j)][static_cast<size_t>(i)] = it->second;
        }
    solve_inverse = invert_dense(std::move(s), regime);
}

std::vector<FieldElem> ComponentBasis::coordinates(const LinComb& v) const {
    if (dim == 0) {
        if (!v.is_zero()) throw SpanError("ComponentBasis: nonzero vector in a zero component");
        return {};
    }
    const Regime reg = basis.front().terms.begin()->second.regime();
    std::vector<FieldElem> rhs(static_cast<size_t>(dim), FieldElem::zero(reg));
    for (int j = 0; j < dim; ++j) {
        auto it = v.terms.find(words[static_cast<size_t>(solve_rows[static_cast<size_t>(j)])]);
        if (it != v.terms.end()) rhs[static_cast<size_t>(j)] = it->second;
    }
    std::vector<FieldElem> x(static_cast<size_t>(dim), FieldElem::zero(reg));
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            if (!solve_inverse[static_cast<size_t>(i)][static_cast<size_t>(j)].is_zero() && !rhs[static_cast<size_t>(j)].is_zero())
                x[static_cast<size_t>(i)] += solve_inverse[static_cast<size_t>(i)][static_cast<size_t>(j)] * rhs[static_cast<size_t>(j)];
    // certify membership: the reconstruction must match exactly
    LinComb rec;
    for (int i = 0; i < dim; ++i)
        if (!x[static_cast<size_t>(i)].is_zero()) rec += basis[static_cast<size_t>(i)] * x[static_cast<size_t>(i)];
    if (!(rec == v)) throw SpanError("ComponentBasis: vector is outside the component span");
    return x;
}

LinComb ComponentBasis::from_coordinates(const std::vector<FieldElem>& coords) const {
    LinComb out;
    for (size_t i = 0; i < coords.size(); ++i)
        if (!coords[i].is_zero()) out += basis[i] * coords[i];
    return out;
}

int CoinvariantBasis::total_dim() const {
    int t = 0;
    for (const auto& [c, v] : vectors) t += static_cast<int>(v.size());
    return t;
}

int CoinvariantBasis::dim_at(const Content& c) const {
    auto it = vectors.find(c);
    return it == vectors.end() ? 0 : static_cast<int>(it->second.size());
}

BasisContext::BasisContext(ShuffleContext ctx, BasisCacheStore* store)
    : ctx_(std::move(ctx)), store_(store) {}

std::shared_ptr<const ComponentBasis> BasisContext::build_component_basis(const Content& content) {
    auto cb = std::make_shared<ComponentBasis>();
    cb->content = content;
    cb->words = ctx_.words_of_content(content);
    SparseMatrix sigma = total_symmetrizer(ctx_, content);
    RankKernelImage rki = rank_kernel_image(sigma);
    cb->dim = rki.rank;
    cb->pivot_words = rki.image_pivots;
    for (int p : rki.image_pivots) {
        LinComb v;
        for (int r = 0; r < sigma.rows(); ++r) {
            FieldElem e = sigma.get(r, p);
            if (!e.is_zero()) v.add(cb->words[static_cast<size_t>(r)], e);
        }
        cb->basis.push_back(std::move(v));
    }
    cb->build_solver(ctx_.regime());
    return cb;
}

bool BasisContext::validate_cached(const ComponentBasis& cb) const {
    if (static_cast<int>(cb.pivot_words.size()) != cb.dim ||
        static_cast<int>(cb.basis.size()) != cb.dim)
        return false;
    std::vector<Word> expect_words = ctx_.words_of_content(cb.content);
    if (expect_words != cb.words) return false;
    for (int i = 0; i < cb.dim; ++i) {
        int pw = cb.pivot_words[static_cast<size_t>(i)];
        if (pw < 0 || pw >= static_cast<int>(cb.words.size())) return false;
        // membership in im Sigma, re-established from scratch
        LinComb img = symmetrize_word(ctx_, cb.words[static_cast<size_t>(pw)]);
        if (!(img == cb.basis[static_cast<size_t>(i)])) return false;
    }
    return true;
}

std::shared_ptr<const ComponentBasis> BasisContext::component_basis(const Content& content) {
    {
        std::lock_guard<std::mutex> lock(mtx_);
        auto it = bases_.find(content);
        if (it != bases_.end()) return it->second;
    }
    std::shared_ptr<const ComponentBasis> cb;
    if (store_ != nullptr) {
        auto loaded = std::make_shared<ComponentBasis>();
        if (store_->load(content.key(), *loaded)) {
            loaded->content = content;
            if (validate_cached(*loaded)) {
                loaded->build_solver(ctx_.regime());
                cb = loaded;
            } else {
                std::cerr << "qsh: warning: corrupt cache entry for content " << content.key()
                          << ", recomputing\n";
            }
        }
    }
    if (!cb) {
        cb = build_component_basis(content);
        if (store_ != nullptr) store_->store(content.key(), *cb);
    }
    std::lock_guard<std::mutex> lock(mtx_);
    auto [it, inserted] = bases_.emplace(content, cb);
    return it->second;  // idempotent: a concurrent duplicate wins the race harmlessly
}

std::vector<LinComb> BasisContext::serre_kernel(const Content& content) {
    if (content.k != 0) throw std::invalid_argument("serre_kernel: defined on k = 0 blocks");
    SparseMatrix sigma = total_symmetrizer(ctx_, content);
    RankKernelImage rki = rank_kernel_image(sigma);
    std::vector<Word> words = ctx_.words_of_content(content);
    std::vector<LinComb> out;
    for (const auto& kv : rki.kernel_basis) {
        LinComb v;
        for (size_t i = 0; i < kv.size(); ++i)
            if (!kv[i].is_zero()) v.add(words[i], kv[i]);
        out.push_back(std::move(v));
    }
    return out;
}

namespace {

void enumerate_contents_rec(int rank, int t_max, int pos, Content& cur, std::vector<Content>& out) {
    if (pos == rank) {
        out.push_back(cur);
        return;
    }
    const int used = cur.length();  // positions >= pos are zero here
    for (int v = 0; used + v <= t_max; ++v) {
        cur.c[static_cast<size_t>(pos)] = v;
        enumerate_contents_rec(rank, t_max, pos + 1, cur, out);
    }
    cur.c[static_cast<size_t>(pos)] = 0;
}

}  // namespace

std::vector<Content> contents_up_to(int rank, int t_max, int k) {
    std::vector<Content> out;
    Content cur = Content::zero(rank);
    cur.k = k;
    enumerate_contents_rec(rank, t_max, 0, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::map<Content, int> BasisContext::graded_dimension_table(int t_max, int k_max) {
    if (k_max > 0 && !ctx_.lambda())
        throw std::logic_error("graded_dimension_table: k > 0 requires lambda");
    std::map<Content, int> out;
    for (int k = 0; k <= k_max; ++k)
        for (const Content& c : contents_up_to(rank(), t_max, k))
            out[c] = component_basis(c)->dim;
    return out;
}

std::vector<TensorCoords> BasisContext::split_coords(const Content& content, int idx,
                                                     bool right_degree_zero_only, int min_left_letters) {
    auto cb = component_basis(content);
    const LinComb& x = cb->basis.at(static_cast<size_t>(idx));
    const int L = content.total_letters();
    std::map<std::pair<Content, Content>, std::map<std::pair<Word, Word>, FieldElem>> buckets;
    for (int p = min_left_letters; p <= L - 1; ++p) {
        for (const DeconcatTerm& t : deconcat_split(x, p)) {
            if (right_degree_zero_only && word_has_lambda(t.right)) continue;
            Content cl = Content::of_word(t.left, rank());
            Content cr = Content::of_word(t.right, rank());
            auto& bucket = buckets[{cl, cr}];
            auto it = bucket.find({t.left, t.right});
            if (it == bucket.end()) {
                bucket.emplace(std::make_pair(t.left, t.right), t.coeff);
            } else {
                it->second += t.coeff;
                if (it->second.is_zero()) bucket.erase(it);
            }
        }
    }
    std::vector<TensorCoords> out;
    for (auto& [key, tensor] : buckets) {
        if (tensor.empty()) continue;
        auto bl = component_basis(key.first);
        auto br = component_basis(key.second);
        if (bl->dim == 0 || br->dim == 0)
            throw SpanError("split_coords: nonzero tensor over a zero component at " + key.first.key() +
                            " (x) " + key.second.key());
        // peel the left factor through the solve rows, then express each row
        // in the right-hand basis (which certifies the right side)
        std::vector<LinComb> rows(static_cast<size_t>(bl->dim));
        for (int i = 0; i < bl->dim; ++i) {
            for (int j = 0; j < bl->dim; ++j) {
                const FieldElem& f = bl->solve_inverse[static_cast<size_t>(i)][static_cast<size_t>(j)];
                if (f.is_zero()) continue;
                const Word& wl = bl->words[static_cast<size_t>(bl->solve_rows[static_cast<size_t>(j)])];
                for (const auto& [wpair, cf] : tensor)
                    if (wpair.first == wl) rows[static_cast<size_t>(i)].add(wpair.second, cf * f);
            }
        }
        TensorCoords tc{key.first, key.second, {}};
        std::vector<std::vector<FieldElem>> xcoords(static_cast<size_t>(bl->dim));
        for (int i = 0; i < bl->dim; ++i) {
            xcoords[static_cast<size_t>(i)] = br->coordinates(rows[static_cast<size_t>(i)]);
            for (int j = 0; j < br->dim; ++j)
                if (!xcoords[static_cast<size_t>(i)][static_cast<size_t>(j)].is_zero())
                    tc.entries.emplace_back(i, j, xcoords[static_cast<size_t>(i)][static_cast<size_t>(j)]);
        }
        // full reconstruction certifies the left side as well
        std::map<std::pair<Word, Word>, FieldElem> rec;
        for (const auto& [i, j, cf] : tc.entries) {
            for (const auto& [wl, cl] : bl->basis[static_cast<size_t>(i)].terms)
                for (const auto& [wr, cr2] : br->basis[static_cast<size_t>(j)].terms) {
                    FieldElem add = cl * cr2 * cf;
                    auto it = rec.find({wl, wr});
                    if (it == rec.end()) {
                        if (!add.is_zero()) rec.emplace(std::make_pair(wl, wr), add);
                    } else {
                        it->second += add;
                        if (it->second.is_zero()) rec.erase(it);
                    }
                }
        }
        if (rec != tensor)
            throw SpanError("split_coords: deconcatenation component escapes the subalgebra at " +
                            key.first.key() + " (x) " + key.second.key());
        out.push_back(std::move(tc));
    }
    return out;
}

const std::vector<TensorCoords>& BasisContext::coaction_coords(const Content& content, int idx) {
    std::pair<Content, int> key{content, idx};
    {
        std::lock_guard<std::mutex> lock(mtx_);
        auto it = coaction_.find(key);
        if (it != coaction_.end()) return it->second;
    }
    auto val = split_coords(content, idx, /*right_degree_zero_only=*/true, /*min_left_letters=*/0);
    std::lock_guard<std::mutex> lock(mtx_);
    return coaction_.emplace(key, std::move(val)).first->second;
}

const std::vector<TensorCoords>& BasisContext::reduced_coproduct_coords(const Content& content, int idx) {
    if (content.k != 0) throw std::invalid_argument("reduced_coproduct_coords: S basis elements have k = 0");
    std::pair<Content, int> key{content, idx};
    {
        std::lock_guard<std::mutex> lock(mtx_);
        auto it = coproduct_.find(key);
        if (it != coproduct_.end()) return it->second;
    }
    auto val = split_coords(content, idx, /*right_degree_zero_only=*/false, /*min_left_letters=*/1);
    std::lock_guard<std::mutex> lock(mtx_);
    return coproduct_.emplace(key, std::move(val)).first->second;
}

const std::vector<FieldElem>& BasisContext::product_coords(const Content& ca, int ia, const Content& cb,
                                                           int ib) {
    std::tuple<Content, int, Content, int> key{ca, ia, cb, ib};
    {
        std::lock_guard<std::mutex> lock(mtx_);
        auto it = products_.find(key);
        if (it != products_.end()) return it->second;
    }
    auto ba = component_basis(ca);
    auto bb = component_basis(cb);
    LinComb prod = shuffle_product(ctx_, ba->basis.at(static_cast<size_t>(ia)), bb->basis.at(static_cast<size_t>(ib)));
    Content sum = ca;
    for (size_t i = 0; i < sum.c.size(); ++i) sum.c[i] += cb.c[i];
    sum.k += cb.k;
    auto val = component_basis(sum)->coordinates(prod);
    std::lock_guard<std::mutex> lock(mtx_);
    return products_.emplace(key, std::move(val)).first->second;
}

std::vector<std::pair<LinComb, LinComb>> BasisContext::reduced_right_coaction(const LinComb& x) {
    std::vector<std::pair<LinComb, LinComb>> out;
    if (x.is_zero()) return out;
    // homogeneity check
    Content content = Content::of_word(x.terms.begin()->first, rank());
    for (const auto& [w, cf] : x.terms)
        if (!(Content::of_word(w, rank()) == content))
            throw std::invalid_argument("reduced_right_coaction: input is not homogeneous");
    const int L = content.total_letters();
    // on the reduced level single letters are primitive: for k = 0 inputs the
    // unit-left component is not part of this (coproduct-style) answer, while
    // coinvariants_block keeps it via the structural coaction
    const int p_min = content.k == 0 ? 1 : 0;
    std::map<std::pair<Content, Content>, std::map<std::pair<Word, Word>, FieldElem>> buckets;
    for (int p = p_min; p <= L - 1; ++p) {
        for (const DeconcatTerm& t : deconcat_split(x, p)) {
            if (word_has_lambda(t.right)) continue;
            auto& bucket = buckets[{Content::of_word(t.left, rank()), Content::of_word(t.right, rank())}];
            auto it = bucket.find({t.left, t.right});
            if (it == bucket.end()) {
                bucket.emplace(std::make_pair(t.left, t.right), t.coeff);
            } else {
                it->second += t.coeff;
                if (it->second.is_zero()) bucket.erase(it);
            }
        }
    }
    for (auto& [key, tensor] : buckets) {
        if (tensor.empty()) continue;
        auto bl = component_basis(key.first);
        auto br = component_basis(key.second);
        if (bl->dim == 0 || br->dim == 0)
            throw SpanError("reduced_right_coaction: component escapes the subalgebra");
        std::vector<LinComb> rows(static_cast<size_t>(bl->dim));
        for (int i = 0; i < bl->dim; ++i)
            for (int j = 0; j < bl->dim; ++j) {
                const FieldElem& f = bl->solve_inverse[static_cast<size_t>(i)][static_cast<size_t>(j)];
                if (f.is_zero()) continue;
                const Word& wl = bl->words[static_cast<size_t>(bl->solve_rows[static_cast<size_t>(j)])];
                for (const auto& [wpair, cf] : tensor)
                    if (wpair.first == wl) rows[static_cast<size_t>(i)].add(wpair.second, cf * f);
            }
        std::map<std::pair<Word, Word>, FieldElem> rec;
        for (int i = 0; i < bl->dim; ++i) {
            std::vector<FieldElem> rc = br->coordinates(rows[static_cast<size_t>(i)]);
            LinComb right = br->from_coordinates(rc);
            if (!right.is_zero()) out.emplace_back(bl->basis[static_cast<size_t>(i)], right);
            for (const auto& [wl, cl] : bl->basis[static_cast<size_t>(i)].terms)
                for (const auto& [wr, cr2] : right.terms) {
                    FieldElem add = cl * cr2;
                    auto it = rec.find({wl, wr});
                    if (it == rec.end()) {
                        if (!add.is_zero()) rec.emplace(std::make_pair(wl, wr), add);
                    } else {
                        it->second += add;
                        if (it->second.is_zero()) rec.erase(it);
                    }
                }
        }
        if (rec != tensor)
            throw SpanError("reduced_right_coaction: tensor component outside basis span");
    }
    return out;
}

std::pair<std::vector<LinComb>, std::vector<std::vector<FieldElem>>> BasisContext::coinvariants_block(
    const Content& content) {
    auto cb = component_basis(content);
    if (cb->dim == 0) return {{}, {}};
    // enumerate the possible splits (right side: k = 0, positive length)
    std::vector<std::pair<Content, Content>> splits;
    for (const Content& cr : contents_up_to(rank(), content.length(), 0)) {
        if (cr.length() == 0) continue;
        bool fits = true;
        Content cl = content;
        for (size_t i = 0; i < cl.c.size(); ++i) {
            cl.c[i] -= cr.c[i];
            if (cl.c[i] < 0) fits = false;
        }
        if (!fits) continue;
        if (component_basis(cl)->dim == 0 || component_basis(cr)->dim == 0) continue;
        splits.emplace_back(cl, cr);
    }
    std::sort(splits.begin(), splits.end());
    std::map<std::pair<Content, Content>, int> offset;
    int rows = 0;
    for (const auto& s : splits) {
        offset[s] = rows;
        rows += component_basis(s.first)->dim * component_basis(s.second)->dim;
    }
    SparseMatrix m(rows, cb->dim, regime());
    for (int j = 0; j < cb->dim; ++j) {
        for (const TensorCoords& tc : coaction_coords(content, j)) {
            int base = offset.at({tc.left, tc.right});
            int dr = component_basis(tc.right)->dim;
            for (const auto& [il, ir, cf] : tc.entries) m.add(base + il * dr + ir, j, cf);
        }
    }
    RankKernelImage rki = rank_kernel_image(m);
    std::vector<LinComb> vecs;
    for (const auto& kv : rki.kernel_basis) vecs.push_back(cb->from_coordinates(kv));
    return {vecs, rki.kernel_basis};
}

CoinvariantBasis BasisContext::coinvariants(int k, int t_max, int jobs) {
    if (k > 0 && !ctx_.lambda()) throw std::logic_error("coinvariants: k > 0 requires lambda");
    CoinvariantBasis out;
    out.k = k;
    std::vector<Content> cs = contents_up_to(rank(), t_max, k);
    std::vector<std::pair<std::vector<LinComb>, std::vector<std::vector<FieldElem>>>> results(cs.size());
    parallel_for(jobs, static_cast<int>(cs.size()),
                 [&](int i) { results[static_cast<size_t>(i)] = coinvariants_block(cs[static_cast<size_t>(i)]); });
    for (size_t i = 0; i < cs.size(); ++i) {
        if (results[i].first.empty()) continue;
        out.vectors[cs[i]] = std::move(results[i].first);
        out.coords[cs[i]] = std::move(results[i].second);
    }
    return out;
}

Degree2Report degree2_mult_map(BasisContext& bctx, int t_max) {
    const auto& lambda = bctx.shuffle().lambda();
    if (!lambda) throw std::logic_error("degree2_mult_map: lambda required");
    Degree2Report rep;
    CoinvariantBasis coinv1 = bctx.coinvariants(1, t_max);
    long r = weyl_dim(bctx.shuffle().datum(), *lambda);
    if (coinv1.total_dim() < r) rep.truncation_warning = true;

    // flatten the coinvariant basis and group the tensor-square pairs by the
    // target content
    std::vector<std::pair<Content, int>> flat;
    for (const auto& [c, vs] : coinv1.vectors)
        for (size_t i = 0; i < vs.size(); ++i) flat.emplace_back(c, static_cast<int>(i));
    std::map<Content, std::vector<std::pair<int, int>>> pairs_by_target;
    for (size_t a = 0; a < flat.size(); ++a)
        for (size_t b = 0; b < flat.size(); ++b) {
            Content t = flat[a].first;
            for (size_t i = 0; i < t.c.size(); ++i) t.c[i] += flat[b].first.c[i];
            t.k = 2;
            pairs_by_target[t].emplace_back(static_cast<int>(a), static_cast<int>(b));
        }

    for (const auto& [target, pairs] : pairs_by_target) {
        auto cb2 = bctx.component_basis(target);
        auto [coinv2_vecs, coinv2_coords] = bctx.coinvariants_block(target);
        rep.target_dims[target] = static_cast<int>(coinv2_vecs.size());
        SparseMatrix m(cb2->dim, static_cast<int>(pairs.size()), bctx.regime());
        for (size_t col = 0; col < pairs.size(); ++col) {
            const auto& [ia, ib] = pairs[col];
            const LinComb& u = coinv1.vectors.at(flat[static_cast<size_t>(ia)].first)[static_cast<size_t>(flat[static_cast<size_t>(ia)].second)];
            const LinComb& w = coinv1.vectors.at(flat[static_cast<size_t>(ib)].first)[static_cast<size_t>(flat[static_cast<size_t>(ib)].second)];
            LinComb prod = shuffle_product(bctx.shuffle(), u, w);
            std::vector<FieldElem> coords = cb2->coordinates(prod);
            for (int row = 0; row < cb2->dim; ++row)
                if (!coords[static_cast<size_t>(row)].is_zero()) m.set(row, static_cast<int>(col), coords[static_cast<size_t>(row)]);
        }
        RankKernelImage rki = rank_kernel_image(m);
        if (rki.rank > static_cast<int>(coinv2_vecs.size()))
            throw SpanError("degree2_mult_map: image is larger than the coinvariant space at " + target.key());
        rep.image_dims[target] = rki.rank;
        rep.image_total += rki.rank;
        rep.kernel_dim += static_cast<int>(pairs.size()) - rki.rank;
        if (rki.rank != static_cast<int>(coinv2_vecs.size())) rep.surjective_within_truncation = false;
        rep.matrices.emplace(target, std::move(m));
    }
    return rep;
}

}  // namespace qsh
