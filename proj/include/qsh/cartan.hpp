#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qsh {

struct CartanError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A positive root in simple-root coordinates.
using RootVec = std::vector<int>;

/// Finite-type Cartan datum: generalized Cartan matrix C and symmetrizers d
/// with (d_i c_ij) symmetric.
class CartanDatum {
public:
    CartanDatum(std::vector<std::vector<int>> cartan_matrix, std::vector<int> d);

    int rank() const { return n_; }
    int c(int i, int j) const { return c_[static_cast<size_t>(i)][static_cast<size_t>(j)]; }
    int d(int i) const { return d_[static_cast<size_t>(i)]; }
    /// a_ij = (alpha_i, alpha_j) = d_i c_ij.
    int a(int i, int j) const { return d_[static_cast<size_t>(i)] * c(i, j); }

    /// Bilinear form on the root lattice, extended from (alpha_i, alpha_j).
    long pairing(const RootVec& x, const RootVec& y) const;

    bool is_sl(int n_plus_1) const;  // type A_{n} with all d_i = 1

    const std::vector<std::vector<int>>& matrix() const { return c_; }
    const std::vector<int>& symmetrizers() const { return d_; }

private:
    int n_;
    std::vector<std::vector<int>> c_;
    std::vector<int> d_;
};

/// Dominant weight given by coweight coordinates c_i = (lambda, alpha_i^vee);
/// the pairings m_i = (lambda, alpha_i) = d_i c_i are derived.
class WeightSpec {
public:
    WeightSpec(const CartanDatum& datum, std::vector<int> coweight_coords);

    int coord(int i) const { return c_[static_cast<size_t>(i)]; }  // (lambda, alpha_i^vee)
    int m(int i) const { return m_[static_cast<size_t>(i)]; }      // (lambda, alpha_i)
    const std::vector<int>& coords() const { return c_; }

    /// (lambda, beta) for beta in the root lattice.
    long pairing_with_root(const RootVec& beta) const;

    /// Restriction |(lambda, alpha_i)| < l required in the root-of-unity regime.
    bool restricted_for(int ell) const;

    bool operator==(const WeightSpec& o) const { return c_ == o.c_; }

private:
    std::vector<int> c_;
    std::vector<int> m_;
};

/// Positive roots, optionally carrying a convex order beta_1, ..., beta_N.
struct RootSystem {
    std::vector<RootVec> positive_roots;  // unordered closure output
    std::vector<RootVec> convex_order;    // empty until convex_order() is applied
    int count() const { return static_cast<int>(positive_roots.size()); }
};

/// All positive roots by reflection closure. Rejects non-finite type, naming
/// the offending root string.
RootSystem positive_roots(const CartanDatum& datum);

/// Orders the roots by beta_k = s_{i_1} ... s_{i_{k-1}}(alpha_{i_k}) along a
/// reduced word for the longest Weyl element; validates that all N roots are
/// produced exactly once and that the result is convex.
RootSystem convex_order(const CartanDatum& datum, const RootSystem& rs,
                        const std::vector<int>& w0_reduced_word);

/// Lexicographically least reduced word for the longest Weyl element.
std::vector<int> default_w0_word(const CartanDatum& datum);

/// Convexity predicate: whenever beta_i + beta_j is a root, it sits between
/// beta_i and beta_j in the order.
bool is_convex(const CartanDatum& datum, const std::vector<RootVec>& order);

/// dim L(lambda) by the Weyl dimension product formula.
long weyl_dim(const CartanDatum& datum, const WeightSpec& lambda);

/// Weight multiplicities of L(lambda) by Freudenthal recursion, keyed by the
/// root-lattice offset nu (weight = lambda - sum nu_i alpha_i). Multiplicities
/// sum to weyl_dim.
std::map<RootVec, long> weyl_character(const CartanDatum& datum, const WeightSpec& lambda);

/// Kostant partition count: number of ways to write `content` as an
/// N-multiset of positive roots. Independent enumeration, used as the oracle
/// for generic graded dimensions.
long kostant_partition_count(const RootSystem& rs, const RootVec& content);

/// Same count with every root multiplicity bounded by l-1 (restricted PBW
/// monomials at a root of unity).
long restricted_kostant_count(const RootSystem& rs, const RootVec& content, int ell);

}  // namespace qsh
