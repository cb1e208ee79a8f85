#include "qsh/complex.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "qsh/parallel.hpp"

namespace qsh {

bool GradedComplex::verify_square_zero() const {
    for (const auto& [key, block] : blocks) {
        const int top = block.n_top();
        if (direction == Direction::Cohomological) {
            for (int n = 0; n + 1 <= top; ++n)
                if (!(block.maps[static_cast<size_t>(n) + 1] * block.maps[static_cast<size_t>(n)]).is_zero())
                    return false;
        } else {
            for (int n = 1; n < static_cast<int>(block.maps.size()); ++n)
                if (!(block.maps[static_cast<size_t>(n) - 1] * block.maps[static_cast<size_t>(n)]).is_zero())
                    return false;
        }
    }
    return true;
}

int GradedComplex::total_dim_at(int n) const {
    int t = 0;
    for (const auto& [key, block] : blocks)
        if (n <= block.n_top()) t += block.dims[static_cast<size_t>(n)];
    return t;
}

int HomologyReport::total_at(int n) const {
    int t = 0;
    for (const auto& [key, d] : dims)
        if (n < static_cast<int>(d.size())) t += d[static_cast<size_t>(n)];
    return t;
}

HomologyReport homology_ranks(const GradedComplex& cx, int jobs) {
    HomologyReport rep;
    rep.direction = cx.direction;
    rep.kind = cx.kind;
    std::vector<const std::pair<const std::string, ComplexBlock>*> items;
    for (const auto& kv : cx.blocks) items.push_back(&kv);
    std::vector<std::vector<int>> results(items.size());
    parallel_for(jobs, static_cast<int>(items.size()), [&](int idx) {
        const ComplexBlock& block = items[static_cast<size_t>(idx)]->second;
        const int top = block.n_top();
        std::vector<int> ranks(block.maps.size());
        for (size_t i = 0; i < block.maps.size(); ++i) ranks[i] = rank_kernel_image(block.maps[i]).rank;
        std::vector<int> h(static_cast<size_t>(top) + 1, 0);
        for (int n = 0; n <= top; ++n) {
            if (cx.direction == Direction::Cohomological) {
                h[static_cast<size_t>(n)] = block.dims[static_cast<size_t>(n)] - ranks[static_cast<size_t>(n)] -
                                            (n > 0 ? ranks[static_cast<size_t>(n) - 1] : 0);
            } else {
                h[static_cast<size_t>(n)] = block.dims[static_cast<size_t>(n)] - ranks[static_cast<size_t>(n)] -
                                            ranks[static_cast<size_t>(n) + 1];
            }
            if (h[static_cast<size_t>(n)] < 0)
                throw std::logic_error("homology_ranks: negative dimension, differential is inconsistent");
        }
        results[static_cast<size_t>(idx)] = std::move(h);
    });
    for (size_t i = 0; i < items.size(); ++i) {
        rep.dims.emplace(items[i]->first, std::move(results[i]));
        rep.incomplete.emplace(items[i]->first, items[i]->second.incomplete);
    }
    return rep;
}

namespace {

// A basis label of M_k (x) (S^+)^(x n): component basis indices for the
// module slot and the ordered tensor slots.
struct ChainLabel {
    Content m_content;
    int m_index;
    std::vector<std::pair<Content, int>> parts;

    bool operator<(const ChainLabel& o) const {
        return std::tie(m_content, m_index, parts) < std::tie(o.m_content, o.m_index, o.parts);
    }
};

Content content_diff(const Content& a, const Content& b) {
    Content d = a;
    for (size_t i = 0; i < d.c.size(); ++i) d.c[i] -= b.c[i];
    d.k = a.k - b.k;
    return d;
}

bool content_nonnegative(const Content& c) {
    return c.k >= 0 && std::all_of(c.c.begin(), c.c.end(), [](int x) { return x >= 0; });
}

// Ordered sequences of n nonzero k=0 contents summing to `total`.
void enumerate_parts(BasisContext& bctx, const Content& total, int n,
                     std::vector<std::pair<Content, int>>& cur,
                     const std::function<void(const std::vector<std::pair<Content, int>>&)>& emit) {
    if (n == 0) {
        if (total.length() == 0) emit(cur);
        return;
    }
    for (const Content& part : contents_up_to(static_cast<int>(total.c.size()), total.length(), 0)) {
        if (part.length() == 0) continue;
        Content rest = content_diff(total, part);
        if (!content_nonnegative(rest)) continue;
        int dim = bctx.component_basis(part)->dim;
        for (int i = 0; i < dim; ++i) {
            cur.emplace_back(part, i);
            enumerate_parts(bctx, rest, n - 1, cur, emit);
            cur.pop_back();
        }
    }
}

std::vector<ChainLabel> enumerate_labels(BasisContext& bctx, const Content& block_content, int n) {
    std::vector<ChainLabel> out;
    for (const Content& mc : contents_up_to(bctx.rank(), block_content.length(), block_content.k)) {
        Content rest = content_diff(block_content, mc);
        if (!content_nonnegative(rest)) continue;
        int mdim = bctx.component_basis(mc)->dim;
        for (int mi = 0; mi < mdim; ++mi) {
            std::vector<std::pair<Content, int>> cur;
            enumerate_parts(bctx, rest, n, cur, [&](const std::vector<std::pair<Content, int>>& parts) {
                out.push_back(ChainLabel{mc, mi, parts});
            });
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

struct LevelIndex {
    std::vector<ChainLabel> labels;
    std::map<ChainLabel, int> index;

    explicit LevelIndex(std::vector<ChainLabel> ls) : labels(std::move(ls)) {
        for (size_t i = 0; i < labels.size(); ++i) index.emplace(labels[i], static_cast<int>(i));
    }
    int at(const ChainLabel& l) const {
        auto it = index.find(l);
        if (it == index.end()) throw std::logic_error("complex assembly: target label missing");
        return it->second;
    }
};

}  // namespace

GradedComplex cohochschild_complex(BasisContext& bctx, int k, int t_max, int n_max) {
    GradedComplex cx;
    cx.direction = Direction::Cohomological;
    cx.kind = "cohochschild";
    cx.regime = bctx.regime();
    for (const Content& c : contents_up_to(bctx.rank(), t_max, k)) {
        const int n_natural = c.length();
        const int n_top = std::min(n_max, n_natural);
        ComplexBlock block;
        block.incomplete = n_max < n_natural;
        std::vector<LevelIndex> levels;
        for (int n = 0; n <= n_top + 1; ++n) levels.emplace_back(enumerate_labels(bctx, c, n));
        for (int n = 0; n <= n_top; ++n) block.dims.push_back(static_cast<int>(levels[static_cast<size_t>(n)].labels.size()));
        if (std::all_of(block.dims.begin(), block.dims.end(), [](int d) { return d == 0; })) continue;
        for (int n = 0; n <= n_top; ++n) {
            const LevelIndex& src = levels[static_cast<size_t>(n)];
            const LevelIndex& dst = levels[static_cast<size_t>(n) + 1];
            SparseMatrix m(static_cast<int>(dst.labels.size()), static_cast<int>(src.labels.size()), cx.regime);
            for (int col = 0; col < static_cast<int>(src.labels.size()); ++col) {
                const ChainLabel& L = src.labels[static_cast<size_t>(col)];
                // reduced right coaction on the module slot
                for (const TensorCoords& tc : bctx.coaction_coords(L.m_content, L.m_index)) {
                    for (const auto& [il, ir, v] : tc.entries) {
                        ChainLabel t{tc.left, il, {}};
                        t.parts.reserve(L.parts.size() + 1);
                        t.parts.emplace_back(tc.right, ir);
                        t.parts.insert(t.parts.end(), L.parts.begin(), L.parts.end());
                        m.add(dst.at(t), col, v);
                    }
                }
                // reduced coproduct on each tensor slot, alternating signs
                for (int slot = 1; slot <= n; ++slot) {
                    const auto& [pc, pi] = L.parts[static_cast<size_t>(slot) - 1];
                    bool negative = slot % 2 == 1;
                    for (const TensorCoords& tc : bctx.reduced_coproduct_coords(pc, pi)) {
                        for (const auto& [il, ir, v] : tc.entries) {
                            ChainLabel t = L;
                            t.parts[static_cast<size_t>(slot) - 1] = {tc.left, il};
                            t.parts.insert(t.parts.begin() + slot, {tc.right, ir});
                            m.add(dst.at(t), col, negative ? -v : v);
                        }
                    }
                }
            }
            block.maps.push_back(std::move(m));
        }
        cx.blocks.emplace(c.key(), std::move(block));
    }
    return cx;
}

GradedComplex bar_complex(BasisContext& bctx, int k, int t_max, int n_max) {
    GradedComplex cx;
    cx.direction = Direction::Homological;
    cx.kind = "bar";
    cx.regime = bctx.regime();
    for (const Content& c : contents_up_to(bctx.rank(), t_max, k)) {
        const int n_natural = c.length();
        const int n_top = std::min(n_max, n_natural);
        ComplexBlock block;
        block.incomplete = n_max < n_natural;
        std::vector<LevelIndex> levels;
        for (int n = 0; n <= n_top + 1; ++n) levels.emplace_back(enumerate_labels(bctx, c, n));
        for (int n = 0; n <= n_top; ++n) block.dims.push_back(static_cast<int>(levels[static_cast<size_t>(n)].labels.size()));
        if (std::all_of(block.dims.begin(), block.dims.end(), [](int d) { return d == 0; })) continue;
        for (int n = 0; n <= n_top + 1; ++n) {
            const LevelIndex& src = levels[static_cast<size_t>(n)];
            const int target_dim = n == 0 ? 0 : static_cast<int>(levels[static_cast<size_t>(n) - 1].labels.size());
            SparseMatrix m(target_dim, static_cast<int>(src.labels.size()), cx.regime);
            if (n > 0) {
                const LevelIndex& dst = levels[static_cast<size_t>(n) - 1];
                for (int col = 0; col < static_cast<int>(src.labels.size()); ++col) {
                    const ChainLabel& L = src.labels[static_cast<size_t>(col)];
                    // merge adjacent tensor slots
                    for (int i = 1; i <= n - 1; ++i) {
                        const auto& [ca, ia] = L.parts[static_cast<size_t>(i) - 1];
                        const auto& [cb, ib] = L.parts[static_cast<size_t>(i)];
                        const std::vector<FieldElem>& coords = bctx.product_coords(ca, ia, cb, ib);
                        Content sum = ca;
                        for (size_t t = 0; t < sum.c.size(); ++t) sum.c[t] += cb.c[t];
                        bool negative = i % 2 == 1;
                        for (int t = 0; t < static_cast<int>(coords.size()); ++t) {
                            if (coords[static_cast<size_t>(t)].is_zero()) continue;
                            ChainLabel tl = L;
                            tl.parts.erase(tl.parts.begin() + i);
                            tl.parts[static_cast<size_t>(i) - 1] = {sum, t};
                            m.add(dst.at(tl), col,
                                  negative ? -coords[static_cast<size_t>(t)] : coords[static_cast<size_t>(t)]);
                        }
                    }
                    // left action of the last slot on the module (the right
                    // action runs through the augmentation and dies on S^+)
                    {
                        const auto& [ca, ia] = L.parts.back();
                        const std::vector<FieldElem>& coords = bctx.product_coords(ca, ia, L.m_content, L.m_index);
                        Content sum = L.m_content;
                        for (size_t t = 0; t < sum.c.size(); ++t) sum.c[t] += ca.c[t];
                        bool negative = n % 2 == 1;
                        for (int t = 0; t < static_cast<int>(coords.size()); ++t) {
                            if (coords[static_cast<size_t>(t)].is_zero()) continue;
                            ChainLabel tl{sum, t, L.parts};
                            tl.parts.pop_back();
                            m.add(dst.at(tl), col,
                                  negative ? -coords[static_cast<size_t>(t)] : coords[static_cast<size_t>(t)]);
                        }
                    }
                }
            }
            block.maps.push_back(std::move(m));
        }
        cx.blocks.emplace(c.key(), std::move(block));
    }
    return cx;
}

long GrAlgebraSpec::q_exp(int i, int j) const {
    if (i == j) return 0;
    long p = pairings[static_cast<size_t>(i)][static_cast<size_t>(j)];
    return i < j ? p : -p;
}

long GrAlgebraSpec::action_exp(int t, const std::vector<int>& alpha) const {
    long e = 0;
    for (int s = 0; s < t; ++s)
        e -= static_cast<long>(alpha[static_cast<size_t>(s)]) * pairings[static_cast<size_t>(s)][static_cast<size_t>(t)];
    return e;
}

GrAlgebraSpec gr_algebra(const CartanDatum& datum, const RootSystem& ordered, const WeightSpec& lambda,
                         Regime regime) {
    if (ordered.convex_order.empty())
        throw std::invalid_argument("gr_algebra: root system carries no convex order");
    GrAlgebraSpec spec{datum, ordered.convex_order, {}, static_cast<int>(weyl_dim(datum, lambda)), regime};
    const int N = spec.n_roots();
    spec.pairings.assign(static_cast<size_t>(N), std::vector<long>(static_cast<size_t>(N), 0));
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            spec.pairings[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                datum.pairing(spec.order[static_cast<size_t>(i)], spec.order[static_cast<size_t>(j)]);
    return spec;
}

int KoszulMonomial::wedge_degree() const {
    return static_cast<int>(std::count(beta.begin(), beta.end(), 1));
}

std::string KoszulMonomial::display() const {
    std::ostringstream os;
    os << "F^(";
    for (size_t i = 0; i < alpha.size(); ++i) {
        if (i) os << ",";
        os << alpha[i];
    }
    os << ") v" << (s + 1) << " (x) ";
    bool first = true;
    for (size_t i = 0; i < beta.size(); ++i) {
        if (!beta[i]) continue;
        if (!first) os << "^";
        os << "F_b" << (i + 1);
        first = false;
    }
    if (first) os << "1";
    return os.str();
}

std::pair<FieldElem, FieldElem> omega_coeffs(const GrAlgebraSpec& spec, const std::vector<int>& alpha,
                                             const std::vector<char>& beta, int i) {
    const Regime& reg = spec.regime;
    const int N = spec.n_roots();
    auto omega_raw = [&](const std::vector<int>& a, const std::vector<char>& b) -> FieldElem {
        if (!b[static_cast<size_t>(i)]) return FieldElem::zero(reg);
        if (!reg.is_generic() && a[static_cast<size_t>(i)] == reg.ell() - 1) return FieldElem::zero(reg);
        int sign = 0;
        for (int s = 0; s < i; ++s) sign += b[static_cast<size_t>(s)] ? 1 : 0;
        long e = 0;
        for (int s = i + 1; s < N; ++s)
            if (b[static_cast<size_t>(s)]) e += spec.q_exp(i, s);
        for (int p = 0; p < i; ++p)
            e -= static_cast<long>(a[static_cast<size_t>(p)]) * spec.q_exp(p, i);
        FieldElem v = FieldElem::qpow(reg, e);
        return sign % 2 ? -v : v;
    };
    FieldElem big = omega_raw(alpha, beta);
    FieldElem small = FieldElem::zero(reg);
    if (beta[static_cast<size_t>(i)] == 0 && alpha[static_cast<size_t>(i)] > 0) {
        std::vector<int> a2 = alpha;
        a2[static_cast<size_t>(i)] -= 1;
        std::vector<char> b2 = beta;
        b2[static_cast<size_t>(i)] = 1;
        FieldElem om = omega_raw(a2, b2);
        if (om.is_zero()) throw std::logic_error("omega_coeffs: inverting a vanishing Omega");
        small = om.inverse();
    }
    return {big, small};
}

KoszulElem koszul_diff(const GrAlgebraSpec& spec, const KoszulElem& x) {
    KoszulElem out;
    const int N = spec.n_roots();
    for (const auto& [m, cf] : x) {
        for (int i = 0; i < N; ++i) {
            if (!m.beta[static_cast<size_t>(i)]) continue;
            auto [omega, little] = omega_coeffs(spec, m.alpha, m.beta, i);
            (void)little;
            if (omega.is_zero()) continue;
            KoszulMonomial t = m;
            t.alpha[static_cast<size_t>(i)] += 1;
            t.beta[static_cast<size_t>(i)] = 0;
            FieldElem add = cf * omega;
            auto it = out.find(t);
            if (it == out.end()) {
                out.emplace(std::move(t), add);
            } else {
                it->second += add;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    }
    return out;
}

int koszul_norm(const GrAlgebraSpec& spec, const KoszulMonomial& m) {
    int norm = 0;
    for (size_t i = 0; i < m.alpha.size(); ++i) {
        int s = m.alpha[i] + (m.beta[i] ? 1 : 0);
        if (spec.regime.is_generic() ? s != 0 : s % spec.regime.ell() != 0) ++norm;
    }
    return norm;
}

KoszulElem wambst_homotopy(const GrAlgebraSpec& spec, const KoszulElem& x) {
    KoszulElem out;
    const int N = spec.n_roots();
    for (const auto& [m, cf] : x) {
        int norm = koszul_norm(spec, m);
        if (norm == 0)
            throw HomotopyDomainError("wambst_homotopy: monomial " + m.display() +
                                      " has vanishing norm ||alpha+beta||");
        FieldElem inv_norm = FieldElem::from_rational(spec.regime, mpq_class(1, norm));
        for (int i = 0; i < N; ++i) {
            auto [omega, little] = omega_coeffs(spec, m.alpha, m.beta, i);
            (void)omega;
            if (little.is_zero()) continue;
            KoszulMonomial t = m;
            t.alpha[static_cast<size_t>(i)] -= 1;
            t.beta[static_cast<size_t>(i)] = 1;
            FieldElem add = cf * little * inv_norm;
            auto it = out.find(t);
            if (it == out.end()) {
                out.emplace(std::move(t), add);
            } else {
                it->second += add;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    }
    return out;
}

std::string pbw_key(const std::vector<int>& gamma) {
    std::ostringstream os;
    os << "g:";
    for (size_t i = 0; i < gamma.size(); ++i) {
        if (i) os << ",";
        os << gamma[i];
    }
    return os.str();
}

std::vector<KoszulMonomial> koszul_block_monomials(const GrAlgebraSpec& spec, const std::vector<int>& gamma,
                                                   int wedge_degree) {
    const int N = spec.n_roots();
    std::vector<KoszulMonomial> out;
    for (unsigned mask = 0; mask < (1u << N); ++mask) {
        if (__builtin_popcount(mask) != wedge_degree) continue;
        KoszulMonomial m;
        m.alpha.assign(static_cast<size_t>(N), 0);
        m.beta.assign(static_cast<size_t>(N), 0);
        bool ok = true;
        for (int i = 0; i < N && ok; ++i) {
            int b = (mask >> i) & 1u;
            m.beta[static_cast<size_t>(i)] = static_cast<char>(b);
            int a = gamma[static_cast<size_t>(i)] - b;
            if (a < 0) ok = false;
            if (!spec.regime.is_generic() && a > spec.regime.ell() - 1) ok = false;
            m.alpha[static_cast<size_t>(i)] = a;
        }
        if (!ok) continue;
        for (int s = 0; s < spec.module_rank; ++s) {
            m.s = s;
            out.push_back(m);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

void enum_gamma(int n, int bound, int pos, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (pos == n) {
        out.push_back(cur);
        return;
    }
    int used = std::accumulate(cur.begin(), cur.begin() + pos, 0);
    for (int v = 0; used + v <= bound; ++v) {
        cur[static_cast<size_t>(pos)] = v;
        enum_gamma(n, bound, pos + 1, cur, out);
    }
    cur[static_cast<size_t>(pos)] = 0;
}

ComplexBlock build_koszul_block(const GrAlgebraSpec& spec, const std::vector<int>& gamma) {
    const int N = spec.n_roots();
    ComplexBlock block;
    std::vector<std::vector<KoszulMonomial>> levels;
    for (int k = 0; k <= N + 1; ++k)
        levels.push_back(k <= N ? koszul_block_monomials(spec, gamma, k) : std::vector<KoszulMonomial>{});
    for (int k = 0; k <= N; ++k) block.dims.push_back(static_cast<int>(levels[static_cast<size_t>(k)].size()));
    const std::vector<KoszulMonomial> empty_level;
    for (int k = 0; k <= N + 1; ++k) {
        const auto& src = levels[static_cast<size_t>(k)];
        const auto& dst = k == 0 ? empty_level : levels[static_cast<size_t>(k) - 1];
        std::map<KoszulMonomial, int> dst_index;
        for (size_t i = 0; i < dst.size(); ++i) dst_index.emplace(dst[i], static_cast<int>(i));
        SparseMatrix m(static_cast<int>(dst.size()), static_cast<int>(src.size()), spec.regime);
        for (int col = 0; col < static_cast<int>(src.size()); ++col) {
            KoszulElem image = koszul_diff(spec, {{src[static_cast<size_t>(col)], FieldElem::one(spec.regime)}});
            for (const auto& [t, cf] : image) m.add(dst_index.at(t), col, cf);
        }
        block.maps.push_back(std::move(m));
    }
    return block;
}

}  // namespace

GradedComplex koszul_complex(const GrAlgebraSpec& spec, int pbw_degree_max) {
    GradedComplex cx;
    cx.direction = Direction::Homological;
    cx.kind = "koszul";
    cx.regime = spec.regime;
    std::vector<std::vector<int>> gammas;
    std::vector<int> cur(static_cast<size_t>(spec.n_roots()), 0);
    enum_gamma(spec.n_roots(), pbw_degree_max, 0, cur, gammas);
    for (const auto& gamma : gammas) {
        ComplexBlock block = build_koszul_block(spec, gamma);
        if (std::all_of(block.dims.begin(), block.dims.end(), [](int d) { return d == 0; })) continue;
        cx.blocks.emplace(pbw_key(gamma), std::move(block));
    }
    return cx;
}

KoszulSplit koszul_split_root_of_unity(const GrAlgebraSpec& spec, int pbw_degree_max) {
    if (spec.regime.is_generic())
        throw std::invalid_argument("koszul_split_root_of_unity: requires the root-of-unity regime");
    const int ell = spec.regime.ell();
    KoszulSplit split;
    for (GradedComplex* part : {&split.s_part, &split.r_part}) {
        part->direction = Direction::Homological;
        part->regime = spec.regime;
    }
    split.s_part.kind = "koszul-s";
    split.r_part.kind = "koszul-r";
    std::vector<std::vector<int>> gammas;
    std::vector<int> cur(static_cast<size_t>(spec.n_roots()), 0);
    enum_gamma(spec.n_roots(), pbw_degree_max, 0, cur, gammas);
    for (const auto& gamma : gammas) {
        bool is_s = std::all_of(gamma.begin(), gamma.end(), [&](int g) { return g == 0 || g == ell; });
        ComplexBlock block = build_koszul_block(spec, gamma);
        if (std::all_of(block.dims.begin(), block.dims.end(), [](int d) { return d == 0; })) continue;
        (is_s ? split.s_part : split.r_part).blocks.emplace(pbw_key(gamma), std::move(block));
    }
    return split;
}

}  // namespace qsh
