#include "jackfock/oracle.hpp"

#include <stdexcept>

namespace jackfock {

const char* nullspace_status_name(NullspaceStatus s) {
    switch (s) {
        case NullspaceStatus::simple: return "simple";
        case NullspaceStatus::empty: return "empty";
        case NullspaceStatus::degenerate: return "degenerate";
    }
    return "?";
}

NullspaceResult nullspace(const ScalarMatrix& input) {
    ScalarMatrix a = input;
    const std::size_t rows = a.rows(), cols = a.cols();
    std::vector<std::size_t> pivot_cols;
    ParamScalar prev(1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a(p, c).is_zero()) ++p;
        if (p == rows) continue;
        if (p != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(r, j));
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) a(i, j) = (a(r, c) * a(i, j) - a(i, c) * a(r, j)) / prev;
            a(i, c) = ParamScalar();
        }
        prev = a(r, c);
        pivot_cols.push_back(c);
        ++r;
    }

    NullspaceResult out;
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivot_cols) is_pivot[c] = true;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<ParamScalar> x(cols);
        x[free] = ParamScalar(1);
        for (std::size_t k = pivot_cols.size(); k-- > 0;) {
            const std::size_t c = pivot_cols[k];
            ParamScalar s;
            for (std::size_t j = c + 1; j < cols; ++j)
                if (!x[j].is_zero() && !a(k, j).is_zero()) s += a(k, j) * x[j];
            x[c] = -s / a(k, c);
        }
        for (const auto& v : x)
            if (!v.is_zero()) {
                const ParamScalar inv = v.inverse();
                for (auto& w : x) w *= inv;
                break;
            }
        out.basis.push_back(std::move(x));
    }
    out.status = out.basis.empty() ? NullspaceStatus::empty
                 : out.basis.size() == 1 ? NullspaceStatus::simple
                                         : NullspaceStatus::degenerate;
    return out;
}

NullspaceResult nullspace_eigenvector(const ScalarMatrix& m, const ParamScalar& e) {
    if (m.rows() != m.cols()) throw std::invalid_argument("eigenvector of a non-square matrix");
    ScalarMatrix a = m;
    for (std::size_t i = 0; i < a.rows(); ++i) a(i, i) -= e;
    return nullspace(a);
}

LabeledNullspace nullspace_eigenvector(const LabeledMatrix<Partition>& m, const ParamScalar& e) {
    const NullspaceResult r = nullspace_eigenvector(m.entries, e);
    LabeledNullspace out;
    out.status = r.status;
    for (const auto& x : r.basis) {
        PartitionVector v;
        for (std::size_t i = 0; i < x.size(); ++i) v.add(m.col_basis[i], x[i]);
        out.basis.push_back(std::move(v));
    }
    return out;
}

LabeledNullspace nullspace_eigenvector_below(const LabeledMatrix<Partition>& m, const ParamScalar& e,
                                             const Partition& lambda) {
    std::vector<std::size_t> keep;
    for (std::size_t j = 0; j < m.col_basis.size(); ++j) {
        const Dominance d = dominance_compare(m.col_basis[j], lambda);
        if (d == Dominance::less || d == Dominance::equal) keep.push_back(j);
    }
    LabeledMatrix<Partition> r;
    r.row_basis = m.row_basis;
    r.entries = ScalarMatrix(m.row_basis.size(), keep.size());
    for (std::size_t jj = 0; jj < keep.size(); ++jj) {
        r.col_basis.push_back(m.col_basis[keep[jj]]);
        for (std::size_t i = 0; i < m.row_basis.size(); ++i) {
            r.entries(i, jj) = m.entries(i, keep[jj]);
            if (m.row_basis[i] == m.col_basis[keep[jj]]) r.entries(i, jj) -= e;
        }
    }
    const NullspaceResult ns = nullspace(r.entries);
    LabeledNullspace out;
    out.status = ns.status;
    for (const auto& x : ns.basis) {
        PartitionVector v;
        for (std::size_t i = 0; i < x.size(); ++i) v.add(r.col_basis[i], x[i]);
        out.basis.push_back(std::move(v));
    }
    return out;
}

LabeledMatrix<Partition> schur_basis_matrix(const LabeledMatrix<Partition>& pm) {
    if (pm.row_basis != pm.col_basis) throw std::invalid_argument("schur_basis_matrix needs a square level matrix");
    const int k = pm.col_basis.empty() ? 0 : pm.col_basis.front().weight();
    LabeledMatrix<Partition> out;
    out.row_basis = out.col_basis = pm.col_basis;
    const std::size_t n = pm.col_basis.size();
    out.entries = ScalarMatrix(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        const auto p = convert(SymmetricPolynomial{k, SymBasis::schur, PartitionVector::basis(pm.col_basis[j])},
                               SymBasis::powersum);
        PartitionVector img;
        for (std::size_t c = 0; c < n; ++c) {
            const ParamScalar x = p.coeffs.coefficient(pm.col_basis[c]);
            if (x.is_zero()) continue;
            for (std::size_t i = 0; i < n; ++i)
                if (!pm.entries(i, c).is_zero()) img.add(pm.row_basis[i], pm.entries(i, c) * x);
        }
        const auto s = convert(SymmetricPolynomial{k, SymBasis::powersum, img}, SymBasis::schur);
        for (std::size_t i = 0; i < n; ++i) out.entries(i, j) = s.coeffs.coefficient(pm.row_basis[i]);
    }
    return out;
}

bool proportional(const PartitionVector& u, const PartitionVector& v) {
    if (u.is_zero() || v.is_zero()) return u.is_zero() && v.is_zero();
    const auto& [l0, u0] = *u.begin();
    const ParamScalar v0 = v.coefficient(l0);
    if (v0.is_zero()) return false;
    return u.scaled(v0) == v.scaled(u0);
}

namespace {

// z_i d_i applied to f.
VarPolynomial euler(const VarPolynomial& f, int i) {
    VarPolynomial out(f.num_vars());
    for (const auto& [e, c] : f.terms())
        if (e[static_cast<std::size_t>(i)] != 0) out.add(e, c * ParamScalar(e[static_cast<std::size_t>(i)]));
    return out;
}

// Exact quotient g / (z_i - z_j).
VarPolynomial divide_difference(VarPolynomial g, int i, int j) {
    const int n = g.num_vars();
    VarPolynomial q(n);
    const auto ii = static_cast<std::size_t>(i), jj = static_cast<std::size_t>(j);
    while (!g.is_zero()) {
        // Highest power of z_i first; the remainder must vanish.
        const std::vector<int>* best = nullptr;
        for (const auto& [e, c] : g.terms())
            if (!best || e[ii] > (*best)[ii]) best = &e;
        if ((*best)[ii] == 0) throw std::logic_error("inexact division by z_i - z_j");
        const std::vector<int> e = *best;
        const ParamScalar c = g.terms().at(e);
        std::vector<int> qe = e;
        --qe[ii];
        q.add(qe, c);
        g.add(e, -c);
        std::vector<int> ej = qe;
        ++ej[jj];
        g.add(ej, c);
    }
    return q;
}

}  // namespace

VarPolynomial apply_cs_differential(const VarPolynomial& f, const ParamScalar& beta) {
    if (!f.is_symmetric()) throw std::invalid_argument("differential oracle needs a symmetric polynomial");
    const int n = f.num_vars();
    VarPolynomial out(n);
    for (int i = 0; i < n; ++i) out = out + euler(euler(f, i), i);
    VarPolynomial pair(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const VarPolynomial g = euler(f, i) - euler(f, j);
            if (g.is_zero()) continue;
            VarPolynomial sum(n);
            std::vector<int> ei(static_cast<std::size_t>(n), 0), ej(static_cast<std::size_t>(n), 0);
            ei[static_cast<std::size_t>(i)] = 1;
            ej[static_cast<std::size_t>(j)] = 1;
            sum.add(ei, ParamScalar(1));
            sum.add(ej, ParamScalar(1));
            pair = pair + sum * divide_difference(g, i, j);
        }
    return out + pair.scaled(beta);
}

}  // namespace jackfock
