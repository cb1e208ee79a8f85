#pragma once

#include <functional>
#include <memory>
#include <mutex>
#include <tuple>

#include "qsh/words.hpp"

namespace qsh {

/// Raised when an exact solve against a component basis fails. Closure of the
/// shuffle algebra under products and deconcatenation is a theorem, so this
/// always indicates a bug (or a corrupt cache entry), never data.
struct SpanError : std::logic_error {
    using std::logic_error::logic_error;
};

/// Basis of one graded component: the image of the total symmetrizer on a
/// content block, spanned by symmetrizations of the lexicographically least
/// pivot words.
struct ComponentBasis {
    Content content;
    std::vector<Word> words;        // lexicographic word basis of the block
    std::vector<int> pivot_words;   // indices into words; basis[i] = Sigma(words[pivot_words[i]])
    std::vector<LinComb> basis;
    int dim = 0;

    /// Coordinates of v in the basis; certifies membership by reconstructing v
    /// exactly, throws SpanError otherwise.
    std::vector<FieldElem> coordinates(const LinComb& v) const;

    LinComb from_coordinates(const std::vector<FieldElem>& coords) const;

    // solver data: row indices where the basis matrix is invertible, plus the
    // inverse of that square submatrix
    std::vector<int> solve_rows;
    std::vector<std::vector<FieldElem>> solve_inverse;
    void build_solver(const Regime& regime);
};

/// Pluggable persistent store for component bases (the CLI wires a JSON
/// on-disk cache through this; tests use the in-memory default).
struct BasisCacheStore {
    virtual ~BasisCacheStore() = default;
    /// Returns true and fills `out` on a hit; misses and version mismatches return false.
    virtual bool load(const std::string& content_key, ComponentBasis& out) = 0;
    virtual void store(const std::string& content_key, const ComponentBasis& basis) = 0;
};

/// One coacted/coproduct split of a basis element, in basis coordinates:
/// sum of coeff * basis_left[i] (x) basis_right[j].
struct TensorCoords {
    Content left, right;
    std::vector<std::tuple<int, int, FieldElem>> entries;
};

/// Per-content coinvariant bases of M_k (kernels of the reduced right
/// coaction).
struct CoinvariantBasis {
    int k = 0;
    std::map<Content, std::vector<LinComb>> vectors;
    std::map<Content, std::vector<std::vector<FieldElem>>> coords;  // in the M_k component basis
    int total_dim() const;
    int dim_at(const Content& c) const;
};

/// Caching context for all graded-basis computations over one shuffle context.
/// Basis construction per content block is pure and idempotent; concurrent
/// duplicate computation is harmless.
class BasisContext {
public:
    explicit BasisContext(ShuffleContext ctx, BasisCacheStore* store = nullptr);

    const ShuffleContext& shuffle() const { return ctx_; }
    const Regime& regime() const { return ctx_.regime(); }
    int rank() const { return ctx_.rank(); }

    /// Basis of im Sigma on the block (cached; disk-backed when a store is set).
    std::shared_ptr<const ComponentBasis> component_basis(const Content& content);

    /// Basis of ker Sigma_n on a k = 0 block.
    std::vector<LinComb> serre_kernel(const Content& content);

    /// Dimensions of all components of F-length <= t_max; k ranges over
    /// 0..k_max (k_max > 0 requires lambda).
    std::map<Content, int> graded_dimension_table(int t_max, int k_max = 0);

    /// Reduced right coaction of basis element #idx of the component at
    /// `content`: all deconcatenation components whose right factor has
    /// lambda-degree 0 and length >= 1, in basis coordinates.
    const std::vector<TensorCoords>& coaction_coords(const Content& content, int idx);

    /// Reduced deconcatenation coproduct of S basis elements (both factors of
    /// length >= 1).
    const std::vector<TensorCoords>& reduced_coproduct_coords(const Content& content, int idx);

    /// Coordinates of basis_a[ia] * basis_b[ib] in the component basis at the
    /// sum content (exact solve; SpanError on failure).
    const std::vector<FieldElem>& product_coords(const Content& ca, int ia, const Content& cb, int ib);

    /// Reduced right coaction of an arbitrary homogeneous x as a list of
    /// (module factor, algebra factor) pairs, the module factors running over
    /// component basis elements. Single letters are primitive on this level.
    std::vector<std::pair<LinComb, LinComb>> reduced_right_coaction(const LinComb& x);

    /// Coinvariants of M_k on all blocks of F-length <= t_max. Blocks are
    /// independent; `jobs` workers may share them.
    CoinvariantBasis coinvariants(int k, int t_max, int jobs = 1);

    /// Kernel of the reduced right coaction on one block only.
    std::pair<std::vector<LinComb>, std::vector<std::vector<FieldElem>>> coinvariants_block(const Content& content);

private:
    std::shared_ptr<const ComponentBasis> build_component_basis(const Content& content);
    bool validate_cached(const ComponentBasis& basis) const;
    std::vector<TensorCoords> split_coords(const Content& content, int idx, bool right_degree_zero_only,
                                           int min_left_letters);

    ShuffleContext ctx_;
    BasisCacheStore* store_;
    std::mutex mtx_;
    std::map<Content, std::shared_ptr<const ComponentBasis>> bases_;
    std::map<std::pair<Content, int>, std::vector<TensorCoords>> coaction_;
    std::map<std::pair<Content, int>, std::vector<TensorCoords>> coproduct_;
    std::map<std::tuple<Content, int, Content, int>, std::vector<FieldElem>> products_;
};

/// Result of the degree-2 multiplication map m : M_1^coR (x) M_1^coR -> M_2^coR,
/// truncated at t_max on the tensor factors.
struct Degree2Report {
    std::map<Content, SparseMatrix> matrices;  // per target content (k = 2)
    std::map<Content, int> image_dims;
    std::map<Content, int> target_dims;  // dim of M_2^coR at the content
    int kernel_dim = 0;
    int image_total = 0;
    bool surjective_within_truncation = true;
    bool truncation_warning = false;  // t_max too small to hold all of L(lambda)
};

Degree2Report degree2_mult_map(BasisContext& bctx, int t_max);

/// All contents with the given lambda-degree and F-length <= t_max, sorted.
std::vector<Content> contents_up_to(int rank, int t_max, int k);

}  // namespace qsh
