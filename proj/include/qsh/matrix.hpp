#pragma once

#include <map>
#include <utility>
#include <vector>

#include "qsh/field.hpp"

namespace qsh {

/// Exact sparse matrix over the active scalar field. Row/column semantics are
/// bound to whatever ordered basis the caller fixed; no zero entries are stored
/// and all entries share one regime.
class SparseMatrix {
public:
    SparseMatrix() : rows_(0), cols_(0), regime_(Regime::generic()) {}
    SparseMatrix(int rows, int cols, Regime regime)
        : rows_(rows), cols_(cols), regime_(regime) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Regime& regime() const { return regime_; }

    void set(int r, int c, const FieldElem& v);
    void add(int r, int c, const FieldElem& v);
    FieldElem get(int r, int c) const;
    const std::map<std::pair<int, int>, FieldElem>& entries() const { return entries_; }
    size_t nnz() const { return entries_.size(); }
    bool is_zero() const { return entries_.empty(); }

    /// this * o (exact).
    SparseMatrix operator*(const SparseMatrix& o) const;
    SparseMatrix operator-(const SparseMatrix& o) const;
    bool operator==(const SparseMatrix& o) const;

    /// Matrix-vector product, dense vector in/out.
    std::vector<FieldElem> apply(const std::vector<FieldElem>& v) const;

private:
    int rows_, cols_;
    Regime regime_;
    std::map<std::pair<int, int>, FieldElem> entries_;
};

struct RankKernelImage {
    int rank = 0;
    /// Basis of the null space; each vector has cols() coordinates.
    std::vector<std::vector<FieldElem>> kernel_basis;
    /// Pivot column indices; the corresponding columns form an image basis.
    std::vector<int> image_pivots;
};

/// Exact rank / kernel / image of M. Deterministic under fixed row/column
/// order: columns are processed left to right, the pivot is the first row with
/// a nonzero entry. Generic-regime input is cleared of denominators per row
/// and eliminated fraction-free (Bareiss); root-of-unity entries are already
/// field elements of bounded degree and use plain Gaussian elimination.
RankKernelImage rank_kernel_image(const SparseMatrix& m);

}  // namespace qsh
