#include "qsh/poly.hpp"

#include <cctype>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace qsh {

Poly::Poly(const mpq_class& constant) {
    if (constant != 0) coeffs_.push_back(constant);
}

Poly::Poly(long constant) {
    if (constant != 0) coeffs_.emplace_back(constant);
}

Poly::Poly(std::vector<mpq_class> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::power_of_q(int k) {
    if (k < 0) throw std::invalid_argument("Poly::power_of_q: negative exponent");
    std::vector<mpq_class> c(static_cast<size_t>(k) + 1, mpq_class(0));
    c.back() = 1;
    return Poly(std::move(c));
}

int Poly::low_degree() const {
    for (size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return static_cast<int>(i);
    return -1;
}

const mpq_class& Poly::coeff(int i) const {
    static const mpq_class zero(0);
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return zero;
    return coeffs_[static_cast<size_t>(i)];
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<mpq_class> c(std::max(coeffs_.size(), o.coeffs_.size()), mpq_class(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i] = coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
    return Poly(std::move(c));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
    std::vector<mpq_class> c(coeffs_);
    for (auto& x : c) x = -x;
    return Poly(std::move(c));
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<mpq_class> c(coeffs_.size() + o.coeffs_.size() - 1, mpq_class(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (size_t j = 0; j < o.coeffs_.size(); ++j) {
            if (o.coeffs_[j] == 0) continue;
            c[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    return Poly(std::move(c));
}

void Poly::divmod(const Poly& a, const Poly& b, Poly& quot, Poly& rem) {
    if (b.is_zero()) throw std::logic_error("Poly::divmod: division by zero polynomial");
    std::vector<mpq_class> r(a.coeffs_);
    int db = b.degree();
    const mpq_class& lead = b.coeffs_.back();
    std::vector<mpq_class> q;
    if (static_cast<int>(r.size()) - 1 >= db)
        q.assign(r.size() - static_cast<size_t>(db), mpq_class(0));
    for (int i = static_cast<int>(r.size()) - 1; i >= db; --i) {
        if (r[static_cast<size_t>(i)] == 0) continue;
        mpq_class f = r[static_cast<size_t>(i)] / lead;
        q[static_cast<size_t>(i - db)] = f;
        for (int j = 0; j <= db; ++j)
            r[static_cast<size_t>(i - db + j)] -= f * b.coeffs_[static_cast<size_t>(j)];
    }
    quot = Poly(std::move(q));
    rem = Poly(std::move(r));
}

Poly Poly::div_exact(const Poly& a, const Poly& b) {
    Poly q, r;
    divmod(a, b, q, r);
    if (!r.is_zero()) throw std::logic_error("Poly::div_exact: division is not exact");
    return q;
}

Poly Poly::gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly q, r;
        divmod(x, y, q, r);
        x = y;
        y = r;
    }
    if (x.is_zero()) return x;
    mpq_class inv_lead = 1 / x.coeffs_.back();
    return x.scaled(inv_lead);
}

Poly Poly::scaled(const mpq_class& s) const {
    if (s == 0) return Poly();
    std::vector<mpq_class> c(coeffs_);
    for (auto& x : c) x *= s;
    return Poly(std::move(c));
}

Poly Poly::normalized_by_low_term() const {
    int ld = low_degree();
    if (ld < 0) throw std::logic_error("Poly::normalized_by_low_term: zero polynomial");
    mpq_class inv = 1 / coeffs_[static_cast<size_t>(ld)];
    return scaled(inv);
}

Poly Poly::cyclotomic(int l) {
    static std::map<int, Poly> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(l);
    if (it != cache.end()) return it->second;
    if (l < 1) throw std::invalid_argument("Poly::cyclotomic: l must be >= 1");
    // Phi_l = (q^l - 1) / prod_{d | l, d < l} Phi_d
    std::vector<mpq_class> num(static_cast<size_t>(l) + 1, mpq_class(0));
    num[0] = -1;
    num.back() = 1;
    Poly phi(std::move(num));
    for (int d = 1; d < l; ++d) {
        if (l % d != 0) continue;
        auto jt = cache.find(d);
        Poly phid;
        if (jt != cache.end()) {
            phid = jt->second;
        } else {
            // unlocked recursion would deadlock; compute small divisors inline
            std::vector<mpq_class> nd(static_cast<size_t>(d) + 1, mpq_class(0));
            nd[0] = -1;
            nd.back() = 1;
            phid = Poly(std::move(nd));
            for (int e = 1; e < d; ++e)
                if (d % e == 0) phid = div_exact(phid, cache.at(e));
            cache.emplace(d, phid);
        }
        phi = div_exact(phi, phid);
    }
    cache.emplace(l, phi);
    return phi;
}

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        const mpq_class& c = coeffs_[i];
        if (c == 0) continue;
        mpq_class abs_c = c < 0 ? mpq_class(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? "-" : "+");
        }
        if (i == 0) {
            os << abs_c.get_str();
        } else {
            if (abs_c != 1) os << abs_c.get_str() << "*";
            os << "q";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

namespace {

// Parses one term of the to_string format: [sign] [rational] [* ] [q [^exp]]
struct TermParser {
    const std::string& s;
    size_t pos = 0;
    explicit TermParser(const std::string& str) : s(str) {}

    bool done() const { return pos >= s.size(); }

    void expect_nonempty() {
        if (done()) throw std::invalid_argument("Poly::parse: truncated input");
    }

    mpq_class parse_rational() {
        size_t start = pos;
        while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/'))
            ++pos;
        if (start == pos) throw std::invalid_argument("Poly::parse: expected number");
        mpq_class r(s.substr(start, pos - start));
        r.canonicalize();
        return r;
    }
};

}  // namespace

Poly Poly::parse(const std::string& input) {
    std::string s;
    for (char ch : input)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw std::invalid_argument("Poly::parse: empty input");
    if (s == "0") return Poly();
    TermParser tp(s);
    std::vector<mpq_class> coeffs;
    auto set_coeff = [&coeffs](int exp, const mpq_class& c) {
        if (exp >= static_cast<int>(coeffs.size())) coeffs.resize(static_cast<size_t>(exp) + 1, mpq_class(0));
        coeffs[static_cast<size_t>(exp)] += c;
    };
    while (!tp.done()) {
        mpq_class sign(1);
        if (s[tp.pos] == '+') {
            ++tp.pos;
        } else if (s[tp.pos] == '-') {
            sign = -1;
            ++tp.pos;
        }
        tp.expect_nonempty();
        mpq_class mag(1);
        bool saw_number = false;
        if (std::isdigit(static_cast<unsigned char>(s[tp.pos]))) {
            mag = tp.parse_rational();
            saw_number = true;
        }
        if (tp.pos < s.size() && s[tp.pos] == '*') ++tp.pos;
        int exp = 0;
        if (tp.pos < s.size() && s[tp.pos] == 'q') {
            ++tp.pos;
            exp = 1;
            if (tp.pos < s.size() && s[tp.pos] == '^') {
                ++tp.pos;
                size_t start = tp.pos;
                while (tp.pos < s.size() && std::isdigit(static_cast<unsigned char>(s[tp.pos]))) ++tp.pos;
                if (start == tp.pos) throw std::invalid_argument("Poly::parse: missing exponent");
                exp = std::stoi(s.substr(start, tp.pos - start));
            }
        } else if (!saw_number) {
            throw std::invalid_argument("Poly::parse: expected term");
        }
        set_coeff(exp, sign * mag);
    }
    return Poly(std::move(coeffs));
}

}  // namespace qsh
