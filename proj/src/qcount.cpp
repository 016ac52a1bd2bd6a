#include "sdeg/qcount.hpp"

#include <stdexcept>

namespace sdeg::qcount {

Int CountPolynomial::eval(const Int& x) const {
    Int acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

void CountPolynomial::trim() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

namespace {

void check_range(int n, int k) {
    if (k < 0 || k > n) throw std::invalid_argument("k out of range [0, n]");
}

CountPolynomial poly_add(const CountPolynomial& a, const CountPolynomial& b) {
    CountPolynomial r = a;
    if (b.coeffs.size() > r.coeffs.size()) r.coeffs.resize(b.coeffs.size(), 0);
    for (std::size_t i = 0; i < b.coeffs.size(); ++i) r.coeffs[i] += b.coeffs[i];
    r.trim();
    return r;
}

CountPolynomial poly_scale(const CountPolynomial& a, const Int& c) {
    CountPolynomial r = a;
    for (auto& x : r.coeffs) x *= c;
    r.trim();
    return r;
}

CountPolynomial poly_shift(const CountPolynomial& a, int k) {
    CountPolynomial r;
    r.coeffs.assign(a.coeffs.size() + k, 0);
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) r.coeffs[i + k] = a.coeffs[i];
    r.trim();
    return r;
}

}  // namespace

Int gaussian_sum(int n, const Int& p, int k) {
    check_range(n, k);
    if (n > 20) throw std::invalid_argument("gaussian_sum: n capped at 20 (reference form)");
    if (k == 0 || k == n) return 1;
    // Sum p^{i_1+...+i_k - k(k+1)/2} over 1 <= i_1 < ... < i_k <= n.
    Int total = 0;
    std::vector<int> idx(k);
    for (int j = 0; j < k; ++j) idx[j] = j + 1;
    const int offset = k * (k + 1) / 2;
    while (true) {
        int e = 0;
        for (int j = 0; j < k; ++j) e += idx[j];
        total += ipow(p, e - offset);
        int j = k - 1;
        while (j >= 0 && idx[j] == n - (k - 1 - j)) --j;
        if (j < 0) break;
        ++idx[j];
        for (int l = j + 1; l < k; ++l) idx[l] = idx[l - 1] + 1;
    }
    return total;
}

Int gaussian_product(int n, const Int& p, int k) {
    check_range(n, k);
    Int num = 1, den = 1;
    for (int i = 1; i <= n; ++i) num *= ipow(p, i) - 1;
    for (int i = 1; i <= k; ++i) den *= ipow(p, i) - 1;
    for (int i = 1; i <= n - k; ++i) den *= ipow(p, i) - 1;
    Int q = num / den;
    if (q * den != num) throw std::logic_error("gaussian_product: inexact division");
    return q;
}

Int gaussian_rec(int n, const Int& p, int k) {
    check_range(n, k);
    // Row-by-row DP over the recurrence, keeping only the previous row.
    std::vector<Int> row{1};
    for (int m = 1; m <= n; ++m) {
        std::vector<Int> next(m + 1);
        next[0] = 1;
        next[m] = 1;
        for (int j = 1; j < m; ++j)
            next[j] = row[j] + ipow(p, m - j) * row[j - 1];
        row = std::move(next);
    }
    return row[k];
}

Int total_subgroups(int n, const Int& p) {
    if (n < 0) throw std::invalid_argument("total_subgroups: n must be non-negative");
    if (n == 0) return 1;  // degenerate: trivial group only
    if (n == 1) return 2;
    Int total = 2;
    for (int k = 1; k <= n - 1; ++k) total += gaussian_rec(n, p, k);
    return total;
}

Int total_rec(int n, const Int& p) {
    if (n < 1) throw std::invalid_argument("total_rec: n must be >= 1");
    if (n == 1) return 2;
    Int prev = 2;       // a_{1,p}
    Int cur = p + 3;    // a_{2,p}
    for (int m = 3; m <= n; ++m) {
        Int next = 2 * cur + (ipow(p, m - 1) - 1) * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

CountPolynomial poly_f(int n) {
    if (n < 1) throw std::invalid_argument("poly_f: n must be >= 1");
    CountPolynomial prev{{2}};
    if (n == 1) return prev;
    CountPolynomial cur{{3, 1}};
    for (int m = 3; m <= n; ++m) {
        // f_m = 2 f_{m-1} + (X^{m-1} - 1) f_{m-2}
        CountPolynomial next = poly_add(poly_scale(cur, 2),
                                        poly_add(poly_shift(prev, m - 1), poly_scale(prev, -1)));
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

int degree_gap(int n) {
    if (n < 2) throw std::invalid_argument("degree_gap: n must be >= 2");
    return poly_f(n).degree() - poly_f(n - 1).degree();
}

}  // namespace sdeg::qcount
