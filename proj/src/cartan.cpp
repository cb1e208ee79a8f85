#include "qsh/cartan.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace qsh {

namespace {

std::string root_string(const RootVec& r) {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < r.size(); ++i) {
        if (r[i] == 0) continue;
        if (!first) os << "+";
        if (r[i] != 1) os << r[i] << "*";
        os << "a" << (i + 1);
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

int height(const RootVec& r) { return std::accumulate(r.begin(), r.end(), 0); }

}  // namespace

CartanDatum::CartanDatum(std::vector<std::vector<int>> cartan_matrix, std::vector<int> d)
    : n_(static_cast<int>(cartan_matrix.size())), c_(std::move(cartan_matrix)), d_(std::move(d)) {
    if (n_ == 0) throw CartanError("CartanDatum: empty matrix");
    if (static_cast<int>(d_.size()) != n_) throw CartanError("CartanDatum: d has wrong length");
    for (int i = 0; i < n_; ++i) {
        if (static_cast<int>(c_[static_cast<size_t>(i)].size()) != n_)
            throw CartanError("CartanDatum: matrix is not square");
        if (d_[static_cast<size_t>(i)] <= 0) throw CartanError("CartanDatum: d_i must be positive");
        if (c(i, i) != 2) throw CartanError("CartanDatum: diagonal entries must equal 2");
        for (int j = 0; j < n_; ++j) {
            if (i == j) continue;
            if (c(i, j) > 0) throw CartanError("CartanDatum: off-diagonal entries must be <= 0");
            if ((c(i, j) == 0) != (c(j, i) == 0))
                throw CartanError("CartanDatum: c_ij = 0 must imply c_ji = 0");
            if (a(i, j) != d_[static_cast<size_t>(j)] * c(j, i))
                throw CartanError("CartanDatum: (d_i c_ij) is not symmetric");
        }
    }
}

long CartanDatum::pairing(const RootVec& x, const RootVec& y) const {
    long s = 0;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            s += static_cast<long>(x[static_cast<size_t>(i)]) * y[static_cast<size_t>(j)] * a(i, j);
    return s;
}

bool CartanDatum::is_sl(int n_plus_1) const {
    if (n_ != n_plus_1 - 1) return false;
    for (int i = 0; i < n_; ++i) {
        if (d(i) != 1) return false;
        for (int j = 0; j < n_; ++j) {
            int expect = i == j ? 2 : (std::abs(i - j) == 1 ? -1 : 0);
            if (c(i, j) != expect) return false;
        }
    }
    return true;
}

WeightSpec::WeightSpec(const CartanDatum& datum, std::vector<int> coweight_coords)
    : c_(std::move(coweight_coords)) {
    if (static_cast<int>(c_.size()) != datum.rank())
        throw CartanError("WeightSpec: coordinate count differs from rank");
    for (int x : c_)
        if (x < 0) throw CartanError("WeightSpec: lambda must be dominant (c_i >= 0)");
    m_.resize(c_.size());
    for (int i = 0; i < datum.rank(); ++i)
        m_[static_cast<size_t>(i)] = datum.d(i) * c_[static_cast<size_t>(i)];
}

long WeightSpec::pairing_with_root(const RootVec& beta) const {
    long s = 0;
    for (size_t i = 0; i < m_.size(); ++i) s += static_cast<long>(m_[i]) * beta[i];
    return s;
}

bool WeightSpec::restricted_for(int ell) const {
    for (int mi : m_)
        if (std::abs(mi) >= ell) return false;
    return true;
}

RootSystem positive_roots(const CartanDatum& datum) {
    const int n = datum.rank();
    // finite type keeps root heights small; the cap rejects affine and
    // indefinite data with a concrete witness instead of looping
    const int height_cap = 6 * n * n;
    std::set<RootVec> roots;
    std::vector<RootVec> queue;
    for (int i = 0; i < n; ++i) {
        RootVec alpha(static_cast<size_t>(n), 0);
        alpha[static_cast<size_t>(i)] = 1;
        roots.insert(alpha);
        queue.push_back(alpha);
    }
    while (!queue.empty()) {
        RootVec beta = queue.back();
        queue.pop_back();
        for (int i = 0; i < n; ++i) {
            long pair = 0;  // <alpha_i^vee, beta>
            for (int j = 0; j < n; ++j) pair += static_cast<long>(datum.c(i, j)) * beta[static_cast<size_t>(j)];
            RootVec refl = beta;
            refl[static_cast<size_t>(i)] -= static_cast<int>(pair);
            bool positive = std::all_of(refl.begin(), refl.end(), [](int x) { return x >= 0; });
            if (!positive) continue;
            if (height(refl) > height_cap)
                throw CartanError("positive_roots: datum is not of finite type, root " +
                                  root_string(refl) + " exceeds the height bound");
            if (roots.insert(refl).second) queue.push_back(refl);
        }
    }
    RootSystem rs;
    rs.positive_roots.assign(roots.begin(), roots.end());
    return rs;
}

namespace {

// Simple reflection applied to coweight coordinates: (s_i mu)_j = mu_j - mu_i c_ji.
std::vector<int> reflect_coweight(const CartanDatum& datum, const std::vector<int>& mu, int i) {
    std::vector<int> out = mu;
    for (int j = 0; j < datum.rank(); ++j)
        out[static_cast<size_t>(j)] -= mu[static_cast<size_t>(i)] * datum.c(j, i);
    return out;
}

}  // namespace

std::vector<int> default_w0_word(const CartanDatum& datum) {
    // greedy descent from rho: picking the least i with <alpha_i^vee, x> > 0
    // yields the lexicographically least reduced word of w_0
    std::vector<int> x(static_cast<size_t>(datum.rank()), 1);  // rho in coweight coordinates
    std::vector<int> word;
    const size_t guard = positive_roots(datum).positive_roots.size() + 1;
    while (true) {
        int pick = -1;
        for (int i = 0; i < datum.rank(); ++i) {
            if (x[static_cast<size_t>(i)] > 0) {
                pick = i;
                break;
            }
        }
        if (pick < 0) break;
        word.push_back(pick + 1);
        x = reflect_coweight(datum, x, pick);
        if (word.size() > guard) throw CartanError("default_w0_word: failed to terminate");
    }
    return word;
}

bool is_convex(const CartanDatum&, const std::vector<RootVec>& order) {
    std::map<RootVec, int> pos;
    for (size_t k = 0; k < order.size(); ++k) pos[order[k]] = static_cast<int>(k);
    for (size_t i = 0; i < order.size(); ++i) {
        for (size_t j = i + 1; j < order.size(); ++j) {
            RootVec sum(order[i]);
            for (size_t t = 0; t < sum.size(); ++t) sum[t] += order[j][t];
            auto it = pos.find(sum);
            if (it == pos.end()) continue;
            if (!(static_cast<int>(i) < it->second && it->second < static_cast<int>(j))) return false;
        }
    }
    return true;
}

RootSystem convex_order(const CartanDatum& datum, const RootSystem& rs,
                        const std::vector<int>& w0_reduced_word) {
    const int n = datum.rank();
    const int N = rs.count();
    if (static_cast<int>(w0_reduced_word.size()) != N)
        throw CartanError("convex_order: word length " + std::to_string(w0_reduced_word.size()) +
                          " differs from the number of positive roots " + std::to_string(N));
    std::set<RootVec> known(rs.positive_roots.begin(), rs.positive_roots.end());
    std::set<RootVec> seen;
    std::vector<RootVec> order;
    // beta_k = s_{i_1} ... s_{i_{k-1}} (alpha_{i_k}), tracked in root coordinates
    for (int k = 0; k < N; ++k) {
        int ik = w0_reduced_word[static_cast<size_t>(k)];
        if (ik < 1 || ik > n) throw CartanError("convex_order: letter out of range");
        RootVec beta(static_cast<size_t>(n), 0);
        beta[static_cast<size_t>(ik - 1)] = 1;
        for (int t = k - 1; t >= 0; --t) {
            int i = w0_reduced_word[static_cast<size_t>(t)] - 1;
            long pair = 0;
            for (int j = 0; j < n; ++j) pair += static_cast<long>(datum.c(i, j)) * beta[static_cast<size_t>(j)];
            beta[static_cast<size_t>(i)] -= static_cast<int>(pair);
        }
        if (std::any_of(beta.begin(), beta.end(), [](int x) { return x < 0; }))
            throw CartanError("convex_order: word is not reduced, produced negative root " +
                              root_string(beta) + " at position " + std::to_string(k + 1));
        if (!seen.insert(beta).second)
            throw CartanError("convex_order: word is not reduced, duplicate root " +
                              root_string(beta) + " at position " + std::to_string(k + 1));
        if (!known.count(beta))
            throw CartanError("convex_order: produced unknown root " + root_string(beta));
        order.push_back(beta);
    }
    if (!is_convex(datum, order))
        throw CartanError("convex_order: produced order is not convex");
    RootSystem out = rs;
    out.convex_order = std::move(order);
    return out;
}

long weyl_dim(const CartanDatum& datum, const WeightSpec& lambda) {
    RootSystem rs = positive_roots(datum);
    // dim = prod (lambda + rho, beta) / (rho, beta); (rho, alpha_i) = d_i
    long num = 1, den = 1;
    for (const RootVec& beta : rs.positive_roots) {
        long lb = 0, rb = 0;
        for (int i = 0; i < datum.rank(); ++i) {
            lb += static_cast<long>(beta[static_cast<size_t>(i)]) * datum.d(i) * (lambda.coord(i) + 1);
            rb += static_cast<long>(beta[static_cast<size_t>(i)]) * datum.d(i);
        }
        num *= lb;
        den *= rb;
        long g = std::gcd(num, den);
        num /= g;
        den /= g;
    }
    if (den != 1) throw std::logic_error("weyl_dim: non-integral dimension");
    return num;
}

std::map<RootVec, long> weyl_character(const CartanDatum& datum, const WeightSpec& lambda) {
    const int n = datum.rank();
    RootSystem rs = positive_roots(datum);

    // lowest weight w0(lambda) = lambda - nu_max: push lambda anti-dominant
    std::vector<int> mu = lambda.coords();
    RootVec nu_max(static_cast<size_t>(n), 0);
    while (true) {
        int pick = -1;
        for (int i = 0; i < n; ++i)
            if (mu[static_cast<size_t>(i)] > 0) {
                pick = i;
                break;
            }
        if (pick < 0) break;
        nu_max[static_cast<size_t>(pick)] += mu[static_cast<size_t>(pick)];
        mu = reflect_coweight(datum, mu, pick);
    }

    // iterate nu in the box [0, nu_max], by increasing height; Freudenthal:
    // ((lambda+rho)^2 - (mu+rho)^2) m_mu = 2 sum_beta sum_{j>=1} m_{mu+j beta} (mu + j beta, beta)
    // with mu = lambda - nu the difference of squares is 2(lambda+rho, nu) - (nu, nu).
    std::vector<RootVec> box;
    RootVec cur(static_cast<size_t>(n), 0);
    while (true) {
        box.push_back(cur);
        int i = 0;
        while (i < n && cur[static_cast<size_t>(i)] == nu_max[static_cast<size_t>(i)]) {
            cur[static_cast<size_t>(i)] = 0;
            ++i;
        }
        if (i == n) break;
        ++cur[static_cast<size_t>(i)];
    }
    std::sort(box.begin(), box.end(), [](const RootVec& a, const RootVec& b) {
        int ha = height(a), hb = height(b);
        return ha != hb ? ha < hb : a < b;
    });

    std::map<RootVec, long> mult;
    for (const RootVec& nu : box) {
        if (height(nu) == 0) {
            mult[nu] = 1;
            continue;
        }
        // denominator 2(lambda+rho, nu) - (nu, nu)
        long denom = -datum.pairing(nu, nu);
        for (int i = 0; i < n; ++i)
            denom += 2L * nu[static_cast<size_t>(i)] * datum.d(i) * (lambda.coord(i) + 1);
        long numer = 0;
        for (const RootVec& beta : rs.positive_roots) {
            long bb = datum.pairing(beta, beta);
            for (int j = 1;; ++j) {
                RootVec up = nu;
                bool ok = true;
                for (int i = 0; i < n; ++i) {
                    up[static_cast<size_t>(i)] -= j * beta[static_cast<size_t>(i)];
                    if (up[static_cast<size_t>(i)] < 0) ok = false;
                }
                if (!ok) break;
                auto it = mult.find(up);
                if (it == mult.end() || it->second == 0) continue;
                // (mu + j beta, beta) with mu = lambda - up... the shifted weight is lambda - nu + j beta
                long pair = lambda.pairing_with_root(beta) + j * bb - datum.pairing(nu, beta);
                numer += 2L * it->second * pair;
            }
        }
        if (denom == 0) {
            if (numer != 0) throw std::logic_error("weyl_character: Freudenthal denominator vanished");
            mult[nu] = 0;
            continue;
        }
        if (numer % denom != 0) throw std::logic_error("weyl_character: non-integral multiplicity");
        long m = numer / denom;
        if (m < 0) throw std::logic_error("weyl_character: negative multiplicity");
        if (m != 0) mult[nu] = m;
    }
    // drop explicit zeros
    for (auto it = mult.begin(); it != mult.end();)
        it = it->second == 0 ? mult.erase(it) : std::next(it);
    return mult;
}

namespace {

long kostant_rec(const std::vector<RootVec>& roots, size_t idx, RootVec rest, int bound) {
    if (std::all_of(rest.begin(), rest.end(), [](int x) { return x == 0; })) return 1;
    if (idx == roots.size()) return 0;
    long total = 0;
    const RootVec& beta = roots[idx];
    for (int k = 0;; ++k) {
        if (bound > 0 && k > bound) break;
        if (k > 0) {
            bool ok = true;
            for (size_t i = 0; i < rest.size(); ++i) {
                rest[i] -= beta[i];
                if (rest[i] < 0) ok = false;
            }
            if (!ok) break;
        }
        total += kostant_rec(roots, idx + 1, rest, bound);
    }
    return total;
}

}  // namespace

long kostant_partition_count(const RootSystem& rs, const RootVec& content) {
    return kostant_rec(rs.positive_roots, 0, content, 0);
}

long restricted_kostant_count(const RootSystem& rs, const RootVec& content, int ell) {
    return kostant_rec(rs.positive_roots, 0, content, ell - 1);
}

}  // namespace qsh
