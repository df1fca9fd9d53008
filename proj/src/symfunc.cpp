#include "jackfock/symfunc.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <set>
#include <sstream>

namespace jackfock {

namespace {

// chi^lambda(mu) by stripping rim hooks of size mu_j, tracked on beta-sets.
long mn_recurse(std::vector<int> beta, const std::vector<int>& mu, std::size_t j,
                std::map<std::pair<std::vector<int>, std::size_t>, long>& memo) {
    if (j == mu.size()) return 1;
    auto key = std::make_pair(beta, j);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const int r = mu[j];
    const std::set<int> present(beta.begin(), beta.end());
    long total = 0;
    for (std::size_t i = 0; i < beta.size(); ++i) {
        const int to = beta[i] - r;
        if (to < 0 || present.count(to)) continue;
        int between = 0;
        for (int x : beta)
            if (x > to && x < beta[i]) ++between;
        std::vector<int> next = beta;
        next[i] = to;
        std::sort(next.begin(), next.end(), std::greater<>());
        const long sub = mn_recurse(std::move(next), mu, j + 1, memo);
        total += (between % 2 ? -sub : sub);
    }
    memo.emplace(std::move(key), total);
    return total;
}

// Number of ways to distribute the parts mu[j..] into rows with the given
// remaining capacities so that every row is filled exactly.
long count_fillings(const std::vector<int>& mu, std::size_t j, std::vector<int> caps,
                    std::map<std::pair<std::size_t, std::vector<int>>, long>& memo) {
    if (j == mu.size()) {
        for (int c : caps)
            if (c != 0) return 0;
        return 1;
    }
    std::sort(caps.begin(), caps.end(), std::greater<>());
    auto key = std::make_pair(j, caps);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    long total = 0;
    for (std::size_t i = 0; i < caps.size(); ++i) {
        if (caps[i] < mu[j]) continue;
        std::vector<int> next = caps;
        next[i] -= mu[j];
        total += count_fillings(mu, j + 1, std::move(next), memo);
    }
    memo.emplace(std::move(key), total);
    return total;
}

RationalMatrix invert(const RationalMatrix& a) {
    const std::size_t n = a.rows();
    RationalMatrix m = a, inv = RationalMatrix::identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c) == 0) ++p;
        if (p == n) throw std::domain_error("singular change-of-basis matrix");
        if (p != c)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(m(p, j), m(c, j));
                std::swap(inv(p, j), inv(c, j));
            }
        const mpq_class piv = m(c, c);
        for (std::size_t j = 0; j < n; ++j) {
            m(c, j) /= piv;
            inv(c, j) /= piv;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || m(r, c) == 0) continue;
            const mpq_class f = m(r, c);
            for (std::size_t j = 0; j < n; ++j) {
                m(r, j) -= f * m(c, j);
                inv(r, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

std::unique_ptr<BasisTables> build_tables(int k) {
    auto t = std::make_unique<BasisTables>();
    t->parts = enumerate_level(k);
    const std::size_t n = t->parts.size();
    for (std::size_t i = 0; i < n; ++i) t->index.emplace(t->parts[i], i);
    t->characters = RationalMatrix(n, n);
    t->p_to_m = RationalMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        t->z.push_back(centralizer_order(t->parts[i]));
        for (std::size_t j = 0; j < n; ++j) {
            t->characters(i, j) = character(t->parts[i], t->parts[j]);
            std::map<std::pair<std::size_t, std::vector<int>>, long> memo;
            t->p_to_m(i, j) = count_fillings(t->parts[i].parts(), 0, t->parts[j].parts(), memo);
        }
    }
    t->m_to_p = invert(t->p_to_m);
    return t;
}

// Sparse (source coefficients) x (dense rational matrix) product.
PartitionVector transform(const PartitionVector& src, const BasisTables& t, const RationalMatrix& m, bool by_row) {
    std::vector<ParamScalar> acc(t.parts.size());
    for (const auto& [lam, c] : src) {
        const std::size_t i = t.index.at(lam);
        for (std::size_t j = 0; j < t.parts.size(); ++j) {
            const mpq_class& q = by_row ? m(i, j) : m(j, i);
            if (q != 0) acc[j] += c.scaled(q);
        }
    }
    PartitionVector out;
    for (std::size_t j = 0; j < t.parts.size(); ++j) out.add(t.parts[j], acc[j]);
    return out;
}

PartitionVector to_powersum(const SymmetricPolynomial& f, const BasisTables& t) {
    switch (f.basis) {
        case SymBasis::powersum: return f.coeffs;
        case SymBasis::monomial: return transform(f.coeffs, t, t.m_to_p, true);
        case SymBasis::schur: {
            PartitionVector v = transform(f.coeffs, t, t.characters, true);
            return v.map_coefficients(
                [&](const Partition& mu, const ParamScalar& c) { return c.scaled(1 / t.z[t.index.at(mu)]); });
        }
    }
    return {};
}

}  // namespace

const char* basis_name(SymBasis b) {
    switch (b) {
        case SymBasis::powersum: return "powersum";
        case SymBasis::monomial: return "monomial";
        case SymBasis::schur: return "schur";
    }
    return "?";
}

SymBasis basis_from_name(const std::string& name) {
    for (auto b : {SymBasis::powersum, SymBasis::monomial, SymBasis::schur})
        if (name == basis_name(b)) return b;
    throw std::invalid_argument("unknown basis '" + name + "'");
}

const BasisTables& basis_tables(int k) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<BasisTables>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[k];
    if (!slot) slot = build_tables(k);
    return *slot;
}

long character(const Partition& lambda, const Partition& mu) {
    if (lambda.weight() != mu.weight()) throw WeightMismatch("character needs equal weights");
    const int len = lambda.length();
    std::vector<int> beta;
    for (int i = 0; i < len; ++i) beta.push_back(lambda[i] + len - 1 - i);
    std::map<std::pair<std::vector<int>, std::size_t>, long> memo;
    return mn_recurse(beta, mu.parts(), 0, memo);
}

mpq_class centralizer_order(const Partition& mu) {
    mpz_class z = 1;
    std::map<int, int> mult;
    for (int p : mu.parts()) ++mult[p];
    for (const auto& [part, m] : mult) {
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(m));
        mpz_class pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(part), static_cast<unsigned long>(m));
        z *= f * pw;
    }
    return mpq_class(z);
}

SymmetricPolynomial convert(const SymmetricPolynomial& f, SymBasis target) {
    if (f.basis == target) return f;
    const BasisTables& t = basis_tables(f.degree);
    const PartitionVector p = to_powersum(f, t);
    SymmetricPolynomial out{f.degree, target, {}};
    switch (target) {
        case SymBasis::powersum: out.coeffs = p; break;
        case SymBasis::monomial: out.coeffs = transform(p, t, t.p_to_m, true); break;
        case SymBasis::schur: out.coeffs = transform(p, t, t.characters, false); break;
    }
    return out;
}

SymmetricPolynomial coherent_map(const PartitionVector& v) {
    SymmetricPolynomial f;
    f.basis = SymBasis::powersum;
    f.coeffs = v;
    if (!v.is_zero()) {
        f.degree = v.begin()->first.weight();
        for (const auto& [lam, c] : v)
            if (lam.weight() != f.degree) throw std::invalid_argument("coherent_map needs a level-homogeneous vector");
    }
    return f;
}

VarPolynomial VarPolynomial::constant(int n, const ParamScalar& c) {
    VarPolynomial p(n);
    p.add(std::vector<int>(n, 0), c);
    return p;
}

VarPolynomial VarPolynomial::power_sum(int n, int k) {
    VarPolynomial p(n);
    for (int i = 0; i < n; ++i) {
        std::vector<int> e(n, 0);
        e[i] = k;
        p.add(e, ParamScalar(1));
    }
    return p;
}

void VarPolynomial::add(const std::vector<int>& e, const ParamScalar& c) {
    if (static_cast<int>(e.size()) != n_) throw std::invalid_argument("exponent vector has wrong size");
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

int VarPolynomial::degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (int x : e) s += x;
        d = std::max(d, s);
    }
    return d;
}

VarPolynomial VarPolynomial::operator*(const VarPolynomial& o) const {
    VarPolynomial r(n_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            std::vector<int> e(n_);
            for (int i = 0; i < n_; ++i) e[i] = e1[i] + e2[i];
            r.add(e, c1 * c2);
        }
    return r;
}

VarPolynomial VarPolynomial::operator+(const VarPolynomial& o) const {
    VarPolynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.add(e, c);
    return r;
}

VarPolynomial VarPolynomial::operator-(const VarPolynomial& o) const {
    VarPolynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.add(e, -c);
    return r;
}

VarPolynomial VarPolynomial::scaled(const ParamScalar& s) const {
    VarPolynomial r(n_);
    if (s.is_zero()) return r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, c * s);
    return r;
}

bool VarPolynomial::is_symmetric() const {
    // Invariance under adjacent transpositions generates the symmetric group.
    for (int i = 0; i + 1 < n_; ++i)
        for (const auto& [e, c] : terms_) {
            std::vector<int> f = e;
            std::swap(f[i], f[i + 1]);
            auto it = terms_.find(f);
            if (it == terms_.end() || it->second != c) return false;
        }
    return true;
}

ParamScalar VarPolynomial::evaluate(const std::vector<mpq_class>& point) const {
    if (static_cast<int>(point.size()) != n_) throw std::invalid_argument("point has wrong dimension");
    ParamScalar s;
    for (const auto& [e, c] : terms_) {
        mpq_class m = 1;
        for (int i = 0; i < n_; ++i)
            for (int k = 0; k < e[i]; ++k) m *= point[i];
        s += c.scaled(m);
    }
    return s;
}

std::string VarPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")";
        for (int i = 0; i < n_; ++i)
            if (e[i] > 0) os << "*z" << (i + 1) << (e[i] > 1 ? "^" + std::to_string(e[i]) : "");
    }
    return os.str();
}

VarPolynomial expand_in_variables(const SymmetricPolynomial& f, int n) {
    if (n < 1) throw std::invalid_argument("need at least one variable");
    const SymmetricPolynomial p = convert(f, SymBasis::powersum);
    std::map<int, VarPolynomial> sums;
    VarPolynomial out(n);
    for (const auto& [mu, c] : p.coeffs) {
        VarPolynomial term = VarPolynomial::constant(n, c);
        for (int part : mu.parts()) {
            auto it = sums.find(part);
            if (it == sums.end()) it = sums.emplace(part, VarPolynomial::power_sum(n, part)).first;
            term = term * it->second;
        }
        out = out + term;
    }
    return out;
}

ParamScalar evaluate(const SymmetricPolynomial& f, int n, const std::vector<mpq_class>& point) {
    if (n < 1 || static_cast<int>(point.size()) != n) throw std::invalid_argument("point must have N entries");
    const SymmetricPolynomial p = convert(f, SymBasis::powersum);
    ParamScalar s;
    for (const auto& [mu, c] : p.coeffs) {
        mpq_class v = 1;
        for (int part : mu.parts()) {
            mpq_class ps = 0;
            for (const auto& z : point) {
                mpq_class zp = 1;
                for (int k = 0; k < part; ++k) zp *= z;
                ps += zp;
            }
            v *= ps;
        }
        s += c.scaled(v);
    }
    return s;
}

}  // namespace jackfock
