#include "qsh/words.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>

namespace qsh {

std::string word_to_display(const Word& w) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) os << ",";
        Letter l = static_cast<Letter>(w[i]);
        if (l == LAMBDA_LETTER)
            os << "v";
        else
            os << "F" << static_cast<int>(l);
    }
    os << ")";
    return os.str();
}

Word word_from_letters(std::initializer_list<int> letters) {
    Word w;
    for (int l : letters) w.push_back(l == 0 ? static_cast<char>(LAMBDA_LETTER) : static_cast<char>(l));
    return w;
}

int Content::length() const { return std::accumulate(c.begin(), c.end(), 0); }

std::string Content::key() const {
    std::ostringstream os;
    for (size_t i = 0; i < c.size(); ++i) {
        if (i) os << ",";
        os << c[i];
    }
    os << ";" << k;
    return os.str();
}

Content Content::of_word(const Word& w, int rank) {
    Content ct = Content::zero(rank);
    for (char ch : w) {
        Letter l = static_cast<Letter>(ch);
        if (l == LAMBDA_LETTER)
            ++ct.k;
        else
            ++ct.c[static_cast<size_t>(l - 1)];
    }
    return ct;
}

void LinComb::add(const Word& w, const FieldElem& coeff) {
    if (coeff.is_zero()) return;
    auto it = terms.find(w);
    if (it == terms.end()) {
        terms.emplace(w, coeff);
        return;
    }
    FieldElem s = it->second + coeff;
    if (s.is_zero())
        terms.erase(it);
    else
        it->second = s;
}

LinComb& LinComb::operator+=(const LinComb& o) {
    for (const auto& [w, cf] : o.terms) add(w, cf);
    return *this;
}

LinComb LinComb::operator*(const FieldElem& s) const {
    LinComb out;
    if (s.is_zero()) return out;
    for (const auto& [w, cf] : terms) out.terms.emplace(w, cf * s);
    return out;
}

ShuffleContext::ShuffleContext(CartanDatum datum, std::optional<WeightSpec> lambda, Regime regime)
    : datum_(std::move(datum)), lambda_(std::move(lambda)), regime_(regime) {
    if (lambda_ && !regime_.is_generic() && !lambda_->restricted_for(regime_.ell()))
        throw CartanError("ShuffleContext: lambda violates |(lambda,alpha_i)| < l");
}

long ShuffleContext::braiding_exponent(Letter a, Letter b) const {
    bool la = a == LAMBDA_LETTER, lb = b == LAMBDA_LETTER;
    if (la && lb) return 2;
    if (!la && !lb) return datum_.a(a - 1, b - 1);
    if (!lambda_) throw std::logic_error("ShuffleContext: lambda letter used without a weight");
    int i = (la ? b : a) - 1;
    return -lambda_->m(i);
}

FieldElem ShuffleContext::braiding_coeff(Letter a, Letter b) const {
    return qpow(braiding_exponent(a, b));
}

std::vector<Word> ShuffleContext::words_of_content(const Content& content) const {
    Word sorted;
    for (size_t i = 0; i < content.c.size(); ++i)
        sorted.append(static_cast<size_t>(content.c[i]), static_cast<char>(i + 1));
    sorted.append(static_cast<size_t>(content.k), static_cast<char>(LAMBDA_LETTER));
    std::vector<Word> out;
    Word w = sorted;
    do {
        out.push_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

LinComb apply_sigma_i(const ShuffleContext& ctx, const LinComb& x, int pos) {
    LinComb out;
    for (const auto& [w, cf] : x.terms) {
        if (pos < 0 || pos + 1 >= static_cast<int>(w.size()))
            throw std::out_of_range("apply_sigma_i: position out of range");
        Letter a = static_cast<Letter>(w[static_cast<size_t>(pos)]);
        Letter b = static_cast<Letter>(w[static_cast<size_t>(pos) + 1]);
        Word swapped = w;
        std::swap(swapped[static_cast<size_t>(pos)], swapped[static_cast<size_t>(pos) + 1]);
        out.add(swapped, cf * ctx.braiding_coeff(a, b));
    }
    return out;
}

namespace {

// Deterministic reduced word for w: repeatedly remove the least descent (a
// bubble-sort pass); applying the recorded generators in order realizes T_w.
std::vector<int> bubble_reduced_word(const Perm& w) {
    Perm v = w;
    std::vector<int> rec;
    while (true) {
        int i = -1;
        for (size_t j = 0; j + 1 < v.size(); ++j) {
            if (v[j] > v[j + 1]) {
                i = static_cast<int>(j);
                break;
            }
        }
        if (i < 0) break;
        std::swap(v[static_cast<size_t>(i)], v[static_cast<size_t>(i) + 1]);
        rec.push_back(i);
    }
    return rec;
}

}  // namespace

LinComb matsumoto_action(const ShuffleContext& ctx, const Perm& w, const LinComb& x) {
    for (const auto& [word, cf] : x.terms)
        if (word.size() != w.size())
            throw std::invalid_argument("matsumoto_action: permutation size differs from word length");
    LinComb out = x;
    for (int i : bubble_reduced_word(w)) out = apply_sigma_i(ctx, out, i);
    return out;
}

std::vector<Perm> enumerate_shuffles(int p, int r) {
    const int n = p + r;
    std::vector<Perm> out;
    std::vector<int> mask(static_cast<size_t>(n), 0);
    std::fill(mask.begin(), mask.begin() + p, 1);
    std::sort(mask.begin(), mask.end());
    // each choice of positions for the first block gives one shuffle
    do {
        Perm w(static_cast<size_t>(n));
        int lo = 0, hi = p;
        for (int pos = 0; pos < n; ++pos)
            w[static_cast<size_t>(pos)] = mask[static_cast<size_t>(pos)] ? lo++ : hi++;
        out.push_back(std::move(w));
    } while (std::next_permutation(mask.begin(), mask.end()));
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Permutations of S_n listed by length, each reached from a shorter one by a
// left multiplication s_i; lets Sigma_n be accumulated with one braiding step
// per group element.
struct SymmetricGroupWalk {
    std::vector<Perm> perms;
    std::vector<int> parent;
    std::vector<int> gen;  // perms[t] = s_{gen[t]} * perms[parent[t]]
};

const SymmetricGroupWalk& symmetric_group_walk(int n) {
    static std::map<int, SymmetricGroupWalk> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    SymmetricGroupWalk walk;
    Perm id(static_cast<size_t>(n));
    std::iota(id.begin(), id.end(), 0);
    std::map<Perm, int> index;
    walk.perms.push_back(id);
    walk.parent.push_back(-1);
    walk.gen.push_back(-1);
    index[id] = 0;
    for (size_t t = 0; t < walk.perms.size(); ++t) {
        const Perm cur = walk.perms[t];
        for (int i = 0; i + 1 < n; ++i) {
            // left multiplication by s_i swaps the values i and i+1;
            // it increases length iff value i sits left of value i+1
            int pi = -1, pi1 = -1;
            for (int pos = 0; pos < n; ++pos) {
                if (cur[static_cast<size_t>(pos)] == i) pi = pos;
                if (cur[static_cast<size_t>(pos)] == i + 1) pi1 = pos;
            }
            if (pi > pi1) continue;
            Perm next = cur;
            std::swap(next[static_cast<size_t>(pi)], next[static_cast<size_t>(pi1)]);
            if (index.count(next)) continue;
            index[next] = static_cast<int>(walk.perms.size());
            walk.perms.push_back(next);
            walk.parent.push_back(static_cast<int>(t));
            walk.gen.push_back(i);
        }
    }
    return cache.emplace(n, std::move(walk)).first->second;
}

}  // namespace

FieldElem laurent_from_exponent_counts(const Regime& regime, const std::map<long, long>& counts) {
    if (counts.empty()) return FieldElem::zero(regime);
    if (regime.is_generic()) {
        long min_e = counts.begin()->first;
        long offset = min_e < 0 ? -min_e : 0;
        std::vector<mpq_class> num(static_cast<size_t>(counts.rbegin()->first + offset) + 1, mpq_class(0));
        for (const auto& [e, c] : counts) num[static_cast<size_t>(e + offset)] += c;
        Poly den = offset > 0 ? Poly::power_of_q(static_cast<int>(offset)) : Poly(1L);
        return FieldElem::fraction(regime, Poly(std::move(num)), den);
    }
    std::vector<mpq_class> num(static_cast<size_t>(regime.ell()), mpq_class(0));
    for (const auto& [e, c] : counts) {
        long r = e % regime.ell();
        if (r < 0) r += regime.ell();
        num[static_cast<size_t>(r)] += c;
    }
    return FieldElem::fraction(regime, Poly(std::move(num)), Poly(1L));
}

SparseMatrix total_symmetrizer(const ShuffleContext& ctx, const Content& content) {
    const std::vector<Word> basis = ctx.words_of_content(content);
    const int B = static_cast<int>(basis.size());
    const int n = content.total_letters();
    SparseMatrix m(B, B, ctx.regime());
    if (n == 0) {
        if (B == 1) m.set(0, 0, FieldElem::one(ctx.regime()));
        return m;
    }
    std::map<Word, int> row_of;
    for (int i = 0; i < B; ++i) row_of[basis[static_cast<size_t>(i)]] = i;

    const SymmetricGroupWalk& walk = symmetric_group_walk(n);
    std::vector<long> exps(walk.perms.size());
    std::vector<Word> images(walk.perms.size());
    for (int col = 0; col < B; ++col) {
        exps[0] = 0;
        images[0] = basis[static_cast<size_t>(col)];
        std::map<Word, std::map<long, long>> acc;
        acc[images[0]][0] += 1;
        for (size_t t = 1; t < walk.perms.size(); ++t) {
            const int par = walk.parent[t];
            const int i = walk.gen[t];
            const Word& u = images[static_cast<size_t>(par)];
            Letter a = static_cast<Letter>(u[static_cast<size_t>(i)]);
            Letter b = static_cast<Letter>(u[static_cast<size_t>(i) + 1]);
            Word img = u;
            std::swap(img[static_cast<size_t>(i)], img[static_cast<size_t>(i) + 1]);
            exps[t] = exps[static_cast<size_t>(par)] + ctx.braiding_exponent(a, b);
            images[t] = img;
            acc[images[t]][exps[t]] += 1;
        }
        for (const auto& [w, counts] : acc)
            m.set(row_of.at(w), col, laurent_from_exponent_counts(ctx.regime(), counts));
    }
    return m;
}

LinComb symmetrize_word(const ShuffleContext& ctx, const Word& w) {
    const int n = static_cast<int>(w.size());
    LinComb out;
    if (n == 0) {
        out.add(w, FieldElem::one(ctx.regime()));
        return out;
    }
    const SymmetricGroupWalk& walk = symmetric_group_walk(n);
    std::vector<long> exps(walk.perms.size());
    std::vector<Word> images(walk.perms.size());
    exps[0] = 0;
    images[0] = w;
    std::map<Word, std::map<long, long>> acc;
    acc[w][0] += 1;
    for (size_t t = 1; t < walk.perms.size(); ++t) {
        const Word& u = images[static_cast<size_t>(walk.parent[t])];
        const int i = walk.gen[t];
        Letter a = static_cast<Letter>(u[static_cast<size_t>(i)]);
        Letter b = static_cast<Letter>(u[static_cast<size_t>(i) + 1]);
        Word img = u;
        std::swap(img[static_cast<size_t>(i)], img[static_cast<size_t>(i) + 1]);
        exps[t] = exps[static_cast<size_t>(walk.parent[t])] + ctx.braiding_exponent(a, b);
        images[t] = img;
        acc[img][exps[t]] += 1;
    }
    for (const auto& [word, counts] : acc)
        out.add(word, laurent_from_exponent_counts(ctx.regime(), counts));
    return out;
}

LinComb shuffle_product(const ShuffleContext& ctx, const LinComb& x, const LinComb& y) {
    // The braid representation realizes w as slot j <- slot w^{-1}(j), so the
    // order-preserving interleavings are the inverses of the enumerated
    // shuffles (the minimal left-coset representatives).
    LinComb out;
    for (const auto& [wx, cx] : x.terms) {
        for (const auto& [wy, cy] : y.terms) {
            LinComb conc;
            conc.add(wx + wy, cx * cy);
            for (const Perm& s : enumerate_shuffles(static_cast<int>(wx.size()), static_cast<int>(wy.size()))) {
                Perm inv(s.size());
                for (size_t i = 0; i < s.size(); ++i) inv[static_cast<size_t>(s[i])] = static_cast<int>(i);
                out += matsumoto_action(ctx, inv, conc);
            }
        }
    }
    return out;
}

std::vector<DeconcatTerm> deconcat_split(const LinComb& x, int p) {
    std::vector<DeconcatTerm> out;
    for (const auto& [w, cf] : x.terms) {
        if (p < 0 || p > static_cast<int>(w.size()))
            throw std::out_of_range("deconcat_split: split position out of range");
        out.push_back({w.substr(0, static_cast<size_t>(p)), w.substr(static_cast<size_t>(p)), cf});
    }
    return out;
}

}  // namespace qsh
