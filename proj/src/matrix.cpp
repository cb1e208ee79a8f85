#include "qsh/matrix.hpp"

#include <stdexcept>

namespace qsh {

void SparseMatrix::set(int r, int c, const FieldElem& v) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw std::out_of_range("SparseMatrix::set: index out of range");
    if (v.regime() != regime_)
        throw RegimeMismatchError("SparseMatrix::set: entry regime differs from matrix regime");
    if (v.is_zero())
        entries_.erase({r, c});
    else
        entries_[{r, c}] = v;
}

void SparseMatrix::add(int r, int c, const FieldElem& v) {
    if (v.is_zero()) return;
    auto it = entries_.find({r, c});
    if (it == entries_.end()) {
        set(r, c, v);
    } else {
        FieldElem s = it->second + v;
        if (s.is_zero())
            entries_.erase(it);
        else
            it->second = s;
    }
}

FieldElem SparseMatrix::get(int r, int c) const {
    auto it = entries_.find({r, c});
    return it == entries_.end() ? FieldElem::zero(regime_) : it->second;
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("SparseMatrix: shape mismatch in product");
    SparseMatrix out(rows_, o.cols_, regime_);
    // group o's entries by row for the sparse product
    std::vector<std::vector<std::pair<int, const FieldElem*>>> by_row(static_cast<size_t>(o.rows_));
    for (const auto& [rc, v] : o.entries_) by_row[static_cast<size_t>(rc.first)].push_back({rc.second, &v});
    for (const auto& [rc, v] : entries_) {
        for (const auto& [j, w] : by_row[static_cast<size_t>(rc.second)])
            out.add(rc.first, j, v * (*w));
    }
    return out;
}

SparseMatrix SparseMatrix::operator-(const SparseMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("SparseMatrix: shape mismatch in difference");
    SparseMatrix out = *this;
    for (const auto& [rc, v] : o.entries_) out.add(rc.first, rc.second, -v);
    return out;
}

bool SparseMatrix::operator==(const SparseMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
}

std::vector<FieldElem> SparseMatrix::apply(const std::vector<FieldElem>& v) const {
    if (static_cast<int>(v.size()) != cols_)
        throw std::invalid_argument("SparseMatrix::apply: vector length mismatch");
    std::vector<FieldElem> out(static_cast<size_t>(rows_), FieldElem::zero(regime_));
    for (const auto& [rc, w] : entries_) {
        const FieldElem& x = v[static_cast<size_t>(rc.second)];
        if (!x.is_zero()) out[static_cast<size_t>(rc.first)] += w * x;
    }
    return out;
}

namespace {

// Fraction-free (Bareiss) echelon over Q[q] after clearing row denominators.
// Returns pivot (row, col) pairs; `work` is left in echelon shape where row k
// of the echelon is stored in work[pivot_row[k]].
struct PolyEchelon {
    std::vector<std::vector<Poly>> work;
    std::vector<std::pair<int, int>> pivots;  // (row, col) in processed order
};

PolyEchelon bareiss_echelon(const SparseMatrix& m) {
    PolyEchelon e;
    const int R = m.rows(), C = m.cols();
    e.work.assign(static_cast<size_t>(R), std::vector<Poly>(static_cast<size_t>(C)));
    for (const auto& [rc, v] : m.entries()) {
        // clear denominators lazily below; first store numerator/denominator
        e.work[static_cast<size_t>(rc.first)][static_cast<size_t>(rc.second)] = v.num();
    }
    // scale each row by the lcm of its denominators (rank-preserving)
    for (int r = 0; r < R; ++r) {
        Poly lcm(1L);
        for (int c = 0; c < C; ++c) {
            FieldElem v = m.get(r, c);
            if (v.is_zero()) continue;
            Poly g = Poly::gcd(lcm, v.den());
            lcm = Poly::div_exact(lcm * v.den(), g);
        }
        if (lcm == Poly(1L)) continue;
        for (int c = 0; c < C; ++c) {
            FieldElem v = m.get(r, c);
            if (v.is_zero()) continue;
            e.work[static_cast<size_t>(r)][static_cast<size_t>(c)] =
                v.num() * Poly::div_exact(lcm, v.den());
        }
    }
    std::vector<bool> used(static_cast<size_t>(R), false);
    Poly prev_pivot(1L);
    for (int c = 0; c < C; ++c) {
        int pr = -1;
        for (int r = 0; r < R; ++r) {
            if (!used[static_cast<size_t>(r)] && !e.work[static_cast<size_t>(r)][static_cast<size_t>(c)].is_zero()) {
                pr = r;
                break;
            }
        }
        if (pr < 0) continue;
        used[static_cast<size_t>(pr)] = true;
        const Poly pivot = e.work[static_cast<size_t>(pr)][static_cast<size_t>(c)];
        // one-step Bareiss update on every remaining row; the division by the
        // previous pivot is exact by the Sylvester minor identity
        for (int r = 0; r < R; ++r) {
            if (used[static_cast<size_t>(r)]) continue;
            auto& row = e.work[static_cast<size_t>(r)];
            const Poly f = row[static_cast<size_t>(c)];
            const auto& prow = e.work[static_cast<size_t>(pr)];
            for (int j = c; j < C; ++j) {
                Poly t = row[static_cast<size_t>(j)] * pivot - f * prow[static_cast<size_t>(j)];
                row[static_cast<size_t>(j)] = Poly::div_exact(t, prev_pivot);
            }
        }
        e.pivots.push_back({pr, c});
        prev_pivot = pivot;
    }
    return e;
}

// Plain Gaussian echelon over the field (used at a root of unity).
struct FieldEchelon {
    std::vector<std::vector<FieldElem>> work;
    std::vector<std::pair<int, int>> pivots;
};

FieldEchelon gauss_echelon(const SparseMatrix& m) {
    FieldEchelon e;
    const int R = m.rows(), C = m.cols();
    e.work.assign(static_cast<size_t>(R),
                  std::vector<FieldElem>(static_cast<size_t>(C), FieldElem::zero(m.regime())));
    for (const auto& [rc, v] : m.entries())
        e.work[static_cast<size_t>(rc.first)][static_cast<size_t>(rc.second)] = v;
    std::vector<bool> used(static_cast<size_t>(R), false);
    for (int c = 0; c < C; ++c) {
        int pr = -1;
        for (int r = 0; r < R; ++r) {
            if (!used[static_cast<size_t>(r)] && !e.work[static_cast<size_t>(r)][static_cast<size_t>(c)].is_zero()) {
                pr = r;
                break;
            }
        }
        if (pr < 0) continue;
        used[static_cast<size_t>(pr)] = true;
        const auto& prow = e.work[static_cast<size_t>(pr)];
        FieldElem pinv = prow[static_cast<size_t>(c)].inverse();
        for (int r = 0; r < R; ++r) {
            if (used[static_cast<size_t>(r)]) continue;
            auto& row = e.work[static_cast<size_t>(r)];
            if (row[static_cast<size_t>(c)].is_zero()) continue;
            FieldElem f = row[static_cast<size_t>(c)] * pinv;
            for (int j = c; j < C; ++j)
                row[static_cast<size_t>(j)] -= f * prow[static_cast<size_t>(j)];
        }
        e.pivots.push_back({pr, c});
    }
    return e;
}

}  // namespace

RankKernelImage rank_kernel_image(const SparseMatrix& m) {
    RankKernelImage out;
    const int C = m.cols();
    const Regime reg = m.regime();

    // echelon rows as field elements, in pivot order
    std::vector<std::vector<FieldElem>> ech;
    if (reg.is_generic()) {
        PolyEchelon e = bareiss_echelon(m);
        for (auto [pr, pc] : e.pivots) {
            std::vector<FieldElem> row;
            row.reserve(static_cast<size_t>(C));
            for (int j = 0; j < C; ++j)
                row.push_back(FieldElem::fraction(reg, e.work[static_cast<size_t>(pr)][static_cast<size_t>(j)], Poly(1L)));
            ech.push_back(std::move(row));
            out.image_pivots.push_back(pc);
        }
    } else {
        FieldEchelon e = gauss_echelon(m);
        for (auto [pr, pc] : e.pivots) {
            ech.push_back(e.work[static_cast<size_t>(pr)]);
            out.image_pivots.push_back(pc);
        }
    }
    out.rank = static_cast<int>(out.image_pivots.size());

    // kernel: one vector per free column, free coordinate set to 1,
    // pivot coordinates solved by back substitution
    std::vector<bool> is_pivot(static_cast<size_t>(C), false);
    for (int c : out.image_pivots) is_pivot[static_cast<size_t>(c)] = true;
    for (int f = 0; f < C; ++f) {
        if (is_pivot[static_cast<size_t>(f)]) continue;
        std::vector<FieldElem> v(static_cast<size_t>(C), FieldElem::zero(reg));
        v[static_cast<size_t>(f)] = FieldElem::one(reg);
        for (int k = out.rank - 1; k >= 0; --k) {
            int pc = out.image_pivots[static_cast<size_t>(k)];
            if (pc > f) continue;  // echelon row k has support in columns >= pc only
            FieldElem s = FieldElem::zero(reg);
            const auto& row = ech[static_cast<size_t>(k)];
            for (int j = pc + 1; j < C; ++j)
                if (!row[static_cast<size_t>(j)].is_zero() && !v[static_cast<size_t>(j)].is_zero())
                    s += row[static_cast<size_t>(j)] * v[static_cast<size_t>(j)];
            v[static_cast<size_t>(pc)] = -(s / row[static_cast<size_t>(pc)]);
        }
        out.kernel_basis.push_back(std::move(v));
    }
    return out;
}

}  // namespace qsh
