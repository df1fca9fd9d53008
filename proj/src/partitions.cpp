#include "jackfock/partitions.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace jackfock {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
        weight_ += parts_[i];
    }
}

int Partition::multiplicity(int n) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), n));
}

Partition Partition::transpose() const {
    std::vector<int> t(parts_.empty() ? 0 : parts_[0], 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++t[j];
    return Partition(std::move(t));
}

int Partition::diagonal_length() const {
    int d = 0;
    while (d < length() && parts_[d] >= d + 1) ++d;
    return d;
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
    os << ")";
    return os.str();
}

Partition partition_from_parts(std::vector<int> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

std::vector<Partition> enumerate_level(int k) {
    if (k < 0) throw std::invalid_argument("level must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> cur;
    // Largest first part first gives descending lexicographic order.
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            rec(remaining - p, p);
            cur.pop_back();
        }
    };
    rec(k, k);
    return out;
}

FrobeniusCoords frobenius(const Partition& lambda) {
    const Partition t = lambda.transpose();
    FrobeniusCoords f;
    const int d = lambda.diagonal_length();
    for (int i = 0; i < d; ++i) {
        f.arms.push_back(lambda[i] - (i + 1));
        f.legs.push_back(t[i] - (i + 1));
    }
    return f;
}

Partition from_frobenius(const FrobeniusCoords& f) {
    if (f.arms.size() != f.legs.size()) throw std::invalid_argument("arms and legs differ in length");
    const int d = f.d();
    for (int i = 0; i < d; ++i) {
        if (f.arms[i] < 0 || f.legs[i] < 0) throw std::invalid_argument("negative Frobenius coordinate");
        if (i > 0 && (f.arms[i] >= f.arms[i - 1] || f.legs[i] >= f.legs[i - 1]))
            throw std::invalid_argument("Frobenius coordinates must strictly decrease");
    }
    // Rows 1..d from the arms, then the leg columns fill rows below the square.
    std::vector<int> rows;
    for (int i = 0; i < d; ++i) rows.push_back(f.arms[i] + i + 1);
    const int height = d == 0 ? 0 : f.legs[0] + 1;
    for (int row = d; row < height; ++row) {
        int c = 0;
        for (int j = 0; j < d; ++j)
            if (f.legs[j] + j + 1 > row) ++c;
        rows.push_back(c);
    }
    return Partition(std::move(rows));
}

Dominance dominance_compare(const Partition& mu, const Partition& lambda) {
    if (mu.weight() != lambda.weight())
        throw WeightMismatch("dominance comparison of partitions with weights " + std::to_string(mu.weight()) +
                             " and " + std::to_string(lambda.weight()));
    bool le = true, ge = true;
    int sm = 0, sl = 0;
    const int n = std::max(mu.length(), lambda.length());
    for (int i = 0; i < n; ++i) {
        sm += mu.part(i);
        sl += lambda.part(i);
        if (sm > sl) le = false;
        if (sm < sl) ge = false;
    }
    if (le && ge) return Dominance::equal;
    if (le) return Dominance::less;
    if (ge) return Dominance::greater;
    return Dominance::incomparable;
}

const char* dominance_name(Dominance d) {
    switch (d) {
        case Dominance::less: return "LESS";
        case Dominance::equal: return "EQUAL";
        case Dominance::greater: return "GREATER";
        case Dominance::incomparable: return "INCOMPARABLE";
    }
    return "?";
}

namespace {

std::int64_t n_stat(const Partition& p) {
    std::int64_t s = 0;
    for (int i = 0; i < p.length(); ++i) s += static_cast<std::int64_t>(i) * p[i];
    return s;
}

}  // namespace

PartitionStats partition_stats(const Partition& lambda) {
    PartitionStats s;
    s.n_lambda = n_stat(lambda);
    s.n_transpose = n_stat(lambda.transpose());
    s.d = lambda.diagonal_length();
    s.weight = lambda.weight();
    return s;
}

const char* identity_name(IdentityKind k) {
    switch (k) {
        case IdentityKind::kappa: return "kappa";
        case IdentityKind::hook: return "hook";
        case IdentityKind::column_square: return "column_square";
        case IdentityKind::theorem4: return "theorem4";
    }
    return "?";
}

IdentityKind identity_from_name(const std::string& name) {
    for (auto k : {IdentityKind::kappa, IdentityKind::hook, IdentityKind::column_square, IdentityKind::theorem4})
        if (name == identity_name(k)) return k;
    throw std::invalid_argument("unknown identity '" + name + "'");
}

IdentityCheck verify_identity(IdentityKind kind, const Partition& lambda) {
    const FrobeniusCoords f = frobenius(lambda);
    const PartitionStats st = partition_stats(lambda);
    const int d = f.d();
    IdentityCheck out;
    switch (kind) {
        case IdentityKind::kappa: {
            out.lhs = 2 * (st.n_transpose - st.n_lambda);
            mpq_class r = 0;
            for (int i = 0; i < d; ++i) {
                const long a = f.arms[i], b = f.legs[i];
                r += a * (a + 1) - b * (b + 1);
            }
            out.rhs = r;
            break;
        }
        case IdentityKind::hook: {
            out.lhs = 2 * (st.n_transpose + st.n_lambda);
            mpq_class r = 2L * d * (d - 1);
            for (int i = 0; i < d; ++i) {
                const long a = f.arms[i], b = f.legs[i], k = i + 1;
                r += a * a + b * b + 4 * k * a + 4 * k * b - 3 * a - 3 * b;
            }
            out.rhs = r;
            break;
        }
        case IdentityKind::column_square: {
            out.lhs = mpq_class(static_cast<long>(hd_energy(lambda)));
            mpq_class r = static_cast<long>(d) * d;
            for (int i = 0; i < d; ++i) {
                const long a = f.arms[i], b = f.legs[i], k = i + 1;
                r += b * b + 2 * k * a - a + 2 * k * b;
            }
            out.rhs = r;
            break;
        }
        case IdentityKind::theorem4: {
            // The d multiplies only the double sum over (i, j); see the
            // n_i, m_i form sum_{i,j}(2m_i + n_j) = d sum_i (alpha_i + 2 beta_i + 3/2).
            out.lhs = mpq_class(static_cast<long>(hd_energy(lambda)));
            mpq_class diag = 0, double_sum = 0, rest = 0;
            for (int i = 0; i < d; ++i) {
                const long a = f.arms[i], b = f.legs[i], k = i + 1;
                diag += mpq_class(a, 3) + b * b + mpq_class(2 * b, 3);
                double_sum += mpq_class(2 * a + 4 * b + 3, 2);
                rest += 2 * a * (k - 1) - (d - k) * a + b * (k - 1) - 2 * b * (d - k);
            }
            out.rhs = diag + mpq_class(2, 3) * (d * double_sum + rest);
            break;
        }
    }
    out.holds = out.lhs == out.rhs;
    return out;
}

mpq_class free_fermion_energy(const Partition& lambda) {
    const FrobeniusCoords f = frobenius(lambda);
    mpq_class e = 0;
    for (int i = 0; i < f.d(); ++i) {
        const mpq_class n = mpq_class(2 * f.arms[i] + 1, 2);
        const mpq_class m = mpq_class(2 * f.legs[i] + 1, 2);
        e += n * n - m * m;
    }
    return e;
}

std::int64_t hd_energy(const Partition& lambda) { return row_square_sum(lambda.transpose()); }

std::int64_t row_square_sum(const Partition& lambda) {
    std::int64_t s = 0;
    for (int p : lambda.parts()) s += static_cast<std::int64_t>(p) * p;
    return s;
}

int longest_dominance_chain(int k) {
    const auto parts = enumerate_level(k);
    std::vector<int> chain(parts.size(), 1);
    int best = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j)
            if (dominance_compare(parts[i], parts[j]) == Dominance::less) chain[i] = std::max(chain[i], chain[j] + 1);
        best = std::max(best, chain[i]);
    }
    return best;
}

}  // namespace jackfock
