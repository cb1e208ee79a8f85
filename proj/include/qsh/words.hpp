#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qsh/cartan.hpp"
#include "qsh/field.hpp"
#include "qsh/matrix.hpp"

namespace qsh {

/// Letters are bytes: 1..n for the simple letters F_1..F_n, LAMBDA_LETTER for
/// v_lambda. Byte order realizes the fixed total order F_1 < ... < F_n < v.
using Letter = unsigned char;
constexpr Letter LAMBDA_LETTER = 0x7F;

/// A basis word is a byte string of letters; lexicographic string order is the
/// basis order inside every content block.
using Word = std::string;

std::string word_to_display(const Word& w);
Word word_from_letters(std::initializer_list<int> simple_or_lambda);  // 0 stands for v_lambda

/// Multidegree of a word: multiplicity of each simple letter plus the count of
/// lambda letters. Preserved by every braid operator.
struct Content {
    std::vector<int> c;
    int k = 0;

    int length() const;      // number of F letters
    int total_letters() const { return length() + k; }
    bool operator==(const Content& o) const { return c == o.c && k == o.k; }
    bool operator<(const Content& o) const { return std::tie(c, k) < std::tie(o.c, o.k); }
    std::string key() const;  // "c1,...,cn;k"
    static Content of_word(const Word& w, int rank);
    static Content zero(int rank) { return Content{std::vector<int>(static_cast<size_t>(rank), 0), 0}; }
};

/// Sparse word-indexed vector with exact coefficients; no zero coefficients
/// are stored.
struct LinComb {
    std::map<Word, FieldElem> terms;

    bool is_zero() const { return terms.empty(); }
    void add(const Word& w, const FieldElem& coeff);
    LinComb& operator+=(const LinComb& o);
    LinComb operator*(const FieldElem& s) const;
    bool operator==(const LinComb& o) const { return terms == o.terms; }
};

/// Braiding and word-combinatorics context: Cartan datum, the weight lambda
/// (required as soon as v_lambda letters appear) and the scalar regime.
class ShuffleContext {
public:
    ShuffleContext(CartanDatum datum, std::optional<WeightSpec> lambda, Regime regime);

    const CartanDatum& datum() const { return datum_; }
    const std::optional<WeightSpec>& lambda() const { return lambda_; }
    const Regime& regime() const { return regime_; }
    int rank() const { return datum_.rank(); }

    /// Exponent e with sigma(a (x) b) = q^e (b (x) a).
    long braiding_exponent(Letter a, Letter b) const;
    FieldElem braiding_coeff(Letter a, Letter b) const;
    FieldElem qpow(long k) const { return FieldElem::qpow(regime_, k); }

    /// All words of the given content in lexicographic order.
    std::vector<Word> words_of_content(const Content& content) const;

private:
    CartanDatum datum_;
    std::optional<WeightSpec> lambda_;
    Regime regime_;
};

/// sigma_i acting on every term: the braiding scalar times the word with
/// positions pos, pos+1 swapped (0-based).
LinComb apply_sigma_i(const ShuffleContext& ctx, const LinComb& x, int pos);

/// One-line permutation, 0-based images.
using Perm = std::vector<int>;

/// T_w along a deterministic (bubble-sort) reduced expression of w; the result
/// is independent of the chosen expression (tested, not assumed).
LinComb matsumoto_action(const ShuffleContext& ctx, const Perm& w, const LinComb& x);

/// The (p,r)-shuffles: permutations whose inverse is increasing on 1..p and on
/// p+1..p+r. Exactly binomial(p+r, p) of them.
std::vector<Perm> enumerate_shuffles(int p, int r);

/// Matrix of Sigma_n = sum over S_n of T_sigma on the content block, with the
/// lexicographic word basis on both sides.
SparseMatrix total_symmetrizer(const ShuffleContext& ctx, const Content& content);

/// Sigma_n applied to a single word (one column of the matrix above).
LinComb symmetrize_word(const ShuffleContext& ctx, const Word& w);

/// Sum over (p,r)-shuffles of T_sigma applied to the concatenations, extended
/// bilinearly.
LinComb shuffle_product(const ShuffleContext& ctx, const LinComb& x, const LinComb& y);

struct DeconcatTerm {
    Word left;
    Word right;
    FieldElem coeff;
};

/// The (p, n-p) deconcatenation components of every term of x.
std::vector<DeconcatTerm> deconcat_split(const LinComb& x, int p);

/// Builds a field element from integer multiplicities of q-powers (exponents
/// may be negative); used by the symmetrizer accumulation.
FieldElem laurent_from_exponent_counts(const Regime& regime, const std::map<long, long>& counts);

}  // namespace qsh
