#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace oracles {

namespace {

void add(Poly& p, const Exps& e, const mpq_class& c) {
    if (c == 0) return;
    auto& slot = p[e];
    slot += c;
    if (slot == 0) p.erase(e);
}

bool dominated(const Partition& mu, const Partition& lambda) {
    int a = 0, b = 0;
    for (std::size_t i = 0; i < static_cast<std::size_t>(std::max(mu.length(), lambda.length())); ++i) {
        a += mu.part(i);
        b += lambda.part(i);
        if (a > b) return false;
    }
    return true;
}

}  // namespace

Poly multiply(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            Exps e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            add(out, e, ca * cb);
        }
    return out;
}

Poly power_sum(int k, int n) {
    Poly p;
    for (int i = 0; i < n; ++i) {
        Exps e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(i)] = k;
        add(p, e, 1);
    }
    return p;
}

Poly power_sum_product(const Partition& mu, int n) {
    Poly p{{Exps(static_cast<std::size_t>(n), 0), 1}};
    for (int part : mu.parts()) p = multiply(p, power_sum(part, n));
    return p;
}

Poly monomial_symmetric(const Partition& lambda, int n) {
    Poly p;
    if (lambda.length() > n) return p;
    Exps e(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < lambda.length(); ++i) e[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)];
    std::sort(e.begin(), e.end());
    do add(p, e, 1);
    while (std::next_permutation(e.begin(), e.end()));
    return p;
}

mpq_class coefficient(const Poly& f, const Partition& lambda, int n) {
    if (lambda.length() > n) return 0;
    Exps e(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < lambda.length(); ++i) e[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)];
    auto it = f.find(e);
    return it == f.end() ? mpq_class(0) : it->second;
}

long kostka(const Partition& lambda, const Partition& mu) {
    if (lambda.weight() != mu.weight()) return 0;
    std::vector<std::vector<int>> t;
    for (int r : lambda.parts()) t.emplace_back(static_cast<std::size_t>(r), 0);
    std::vector<int> left(mu.parts());
    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda[static_cast<std::size_t>(i)]; ++j) cells.emplace_back(i, j);
    long count = 0;
    std::function<void(std::size_t)> fill = [&](std::size_t c) {
        if (c == cells.size()) {
            ++count;
            return;
        }
        const auto [i, j] = cells[c];
        for (int v = 1; v <= mu.length(); ++v) {
            if (left[static_cast<std::size_t>(v - 1)] == 0) continue;
            if (j > 0 && t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - 1)] > v) continue;
            if (i > 0 && t[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)] >= v) continue;
            t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
            --left[static_cast<std::size_t>(v - 1)];
            fill(c + 1);
            ++left[static_cast<std::size_t>(v - 1)];
        }
    };
    fill(0);
    return count;
}

Poly cs_operator(const Poly& f, const mpq_class& beta, int n) {
    Poly out;
    for (const auto& [e, c] : f) {
        mpq_class s = 0;
        for (int x : e) s += x * x;
        add(out, e, c * s);
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const auto ui = static_cast<std::size_t>(i), uj = static_cast<std::size_t>(j);
            Poly g;
            for (const auto& [e, c] : f) add(g, e, c * (e[ui] - e[uj]));
            // g / (z_i - z_j): peel off the term of highest z_i degree each round.
            Poly q;
            while (!g.empty()) {
                auto top = std::max_element(g.begin(), g.end(), [&](const auto& a, const auto& b) {
                    return a.first[ui] < b.first[ui];
                });
                if (top->first[ui] == 0) throw std::logic_error("inexact division by z_i - z_j");
                const Exps e = top->first;
                const mpq_class c = top->second;
                Exps lower = e;
                --lower[ui];
                add(q, lower, c);
                add(g, e, -c);
                Exps shifted = lower;
                ++shifted[uj];
                add(g, shifted, c);
            }
            for (const auto& [e, c] : q) {
                Exps a = e, b = e;
                ++a[ui];
                ++b[uj];
                add(out, a, beta * c);
                add(out, b, beta * c);
            }
        }
    return out;
}

std::map<Partition, mpq_class> jack_monomial(const Partition& lambda, const mpq_class& beta) {
    const int n = lambda.weight();
    // All partitions of n in descending lexicographic order, restricted to mu <= lambda.
    std::vector<Partition> basis;
    std::function<void(int, int, std::vector<int>&)> gen = [&](int rest, int max, std::vector<int>& cur) {
        if (rest == 0) {
            Partition p(cur);
            if (dominated(p, lambda)) basis.push_back(p);
            return;
        }
        for (int x = std::min(rest, max); x >= 1; --x) {
            cur.push_back(x);
            gen(rest - x, x, cur);
            cur.pop_back();
        }
    };
    std::vector<int> cur;
    gen(n, n, cur);

    // h[mu][nu] = coefficient of m_mu in H m_nu.
    std::map<Partition, std::map<Partition, mpq_class>> h;
    for (const auto& nu : basis) {
        const Poly img = cs_operator(monomial_symmetric(nu, n), beta, n);
        for (const auto& mu : basis) h[mu][nu] = coefficient(img, mu, n);
    }
    const mpq_class e = h[lambda][lambda];
    std::map<Partition, mpq_class> v{{lambda, 1}};
    for (const auto& mu : basis) {
        if (mu == lambda) continue;
        mpq_class rhs = 0;
        for (const auto& [nu, x] : v) rhs += h[mu][nu] * x;
        const mpq_class gap = e - h[mu][mu];
        if (gap == 0) throw std::domain_error("degenerate diagonal in the Jack oracle");
        v[mu] = rhs / gap;
    }
    return v;
}

}  // namespace oracles
