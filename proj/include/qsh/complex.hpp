#pragma once

#include "qsh/basis.hpp"

namespace qsh {

enum class Direction { Homological, Cohomological };

/// One content block of a chain complex. Terms live in degrees 0..n_top with
/// dims[n] coordinates each. Cohomological blocks store maps[n] : n -> n+1 for
/// n = 0..n_top (the top map targets a phantom level that is enumerated but
/// not stored); homological blocks store maps[n] : n -> n-1 for n = 0..n_top+1
/// (the map from the phantom level included), so homology is exact at every
/// stored degree. `incomplete` flags blocks whose degrees above n_top were cut
/// off by n_max.
struct ComplexBlock {
    std::vector<int> dims;
    std::vector<SparseMatrix> maps;
    bool incomplete = false;
    int n_top() const { return static_cast<int>(dims.size()) - 1; }
};

struct GradedComplex {
    Direction direction = Direction::Cohomological;
    std::string kind;
    Regime regime = Regime::generic();
    std::map<std::string, ComplexBlock> blocks;

    /// Exact check that consecutive differentials compose to zero.
    bool verify_square_zero() const;
    int total_dim_at(int n) const;
};

struct HomologyReport {
    Direction direction = Direction::Cohomological;
    std::string kind;
    std::map<std::string, std::vector<int>> dims;        // per block, per degree
    std::map<std::string, bool> incomplete;
    int total_at(int n) const;
};

/// Exact per-(degree, block) homology dimensions. Blocks are independent and
/// may be processed by up to `jobs` workers; the report is schedule-free.
HomologyReport homology_ranks(const GradedComplex& cx, int jobs = 1);

/// Reduced coHochschild complex of S_sigma(V) with coefficients in M_k:
/// terms M_k (x) (S^+)^(x n), differential = reduced right coaction plus the
/// alternating reduced deconcatenation coproducts. The trivialized left
/// coaction contributes nothing after normalization.
GradedComplex cohochschild_complex(BasisContext& bctx, int k, int t_max, int n_max);

/// Reduced Hochschild (bar) complex of S_sigma(V) with coefficients in M_k:
/// left action by shuffle multiplication, right action through the
/// augmentation.
GradedComplex bar_complex(BasisContext& bctx, int k, int t_max, int n_max);

/// The q-commuting polynomial algebra associated with the De Concini-Kac
/// filtration, together with the rank-r free module and its action twists.
/// Everything is driven by the convex order and the pairings (beta_i, beta_j).
struct GrAlgebraSpec {
    CartanDatum datum;
    std::vector<RootVec> order;            // beta_1..beta_N
    std::vector<std::vector<long>> pairings;
    int module_rank;                       // r = dim L(lambda)
    Regime regime;

    int n_roots() const { return static_cast<int>(order.size()); }
    /// Exponent e with F_{beta_i} F_{beta_j} = q^e F_{beta_j} F_{beta_i} (0-based).
    long q_exp(int i, int j) const;
    /// Exponent of the module action twist of F_{beta_t} on F^alpha (x) v.
    long action_exp(int t, const std::vector<int>& alpha) const;
};

GrAlgebraSpec gr_algebra(const CartanDatum& datum, const RootSystem& ordered, const WeightSpec& lambda,
                         Regime regime);

/// PBW exponent vector, module basis index, and wedge indicator.
struct KoszulMonomial {
    std::vector<int> alpha;
    int s = 0;
    std::vector<char> beta;

    bool operator<(const KoszulMonomial& o) const {
        return std::tie(alpha, s, beta) < std::tie(o.alpha, o.s, o.beta);
    }
    bool operator==(const KoszulMonomial& o) const {
        return alpha == o.alpha && s == o.s && beta == o.beta;
    }
    int wedge_degree() const;
    std::string display() const;
};

using KoszulElem = std::map<KoszulMonomial, FieldElem>;

struct HomotopyDomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// The differential coefficient Omega(alpha, beta, i) and the homotopy
/// coefficient omega(alpha, beta, i); i is 0-based. At a root of unity Omega
/// additionally vanishes when alpha_i = l-1.
std::pair<FieldElem, FieldElem> omega_coeffs(const GrAlgebraSpec& spec, const std::vector<int>& alpha,
                                             const std::vector<char>& beta, int i);

/// Koszul differential d(F^alpha (x) F^beta) = sum_i Omega(alpha,beta,i)
/// F^{alpha+[i]} (x) F^{beta-[i]}.
KoszulElem koszul_diff(const GrAlgebraSpec& spec, const KoszulElem& x);

/// Number of indices i <= N with (alpha+beta)_i nonzero (nonzero mod l at a
/// root of unity); the epsilon part is not counted.
int koszul_norm(const GrAlgebraSpec& spec, const KoszulMonomial& m);

/// Wambst-style homotopy h with hd + dh = 1 on its domain; rejects inputs
/// containing a monomial with vanishing norm, naming the offending monomial.
KoszulElem wambst_homotopy(const GrAlgebraSpec& spec, const KoszulElem& x);

/// Koszul complex of grM with blocks keyed by the conserved PBW multidegree
/// gamma = alpha + beta, for all blocks with |gamma| <= pbw_degree_max.
GradedComplex koszul_complex(const GrAlgebraSpec& spec, int pbw_degree_max);

/// Monomials of one Koszul block in their label order.
std::vector<KoszulMonomial> koszul_block_monomials(const GrAlgebraSpec& spec, const std::vector<int>& gamma,
                                                   int wedge_degree);

/// Root-of-unity splitting K = S (+) R: S collects the blocks whose
/// multidegree has every coordinate in {0, l} (zero differentials, dimension
/// r * C(N, k) in wedge degree k); R is the complement, contracted by the
/// modified homotopy.
struct KoszulSplit {
    GradedComplex s_part;
    GradedComplex r_part;
};
KoszulSplit koszul_split_root_of_unity(const GrAlgebraSpec& spec, int pbw_degree_max);

/// Block key helpers ("2,0,1;1" for word contents, "g:2,0,1" for PBW blocks).
std::string pbw_key(const std::vector<int>& gamma);

}  // namespace qsh
