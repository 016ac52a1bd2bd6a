#pragma once

#include "sdeg/numbers.hpp"

#include <cstdint>
#include <vector>

namespace sdeg::qcount {

// Dense polynomial with exact integer coefficients, coefficient index =
// power of the indeterminate (the prime treated symbolically).
struct CountPolynomial {
    std::vector<Int> coeffs;  // trailing coefficient nonzero unless zero poly

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    Int leading() const { return coeffs.empty() ? Int(0) : coeffs.back(); }
    Int eval(const Int& x) const;
    void trim();

    bool operator==(const CountPolynomial&) const = default;
};

// Number of k-dimensional subspaces of F_p^n, by the combinatorial sum over
// increasing index tuples. Slow reference form; n capped at 20.
Int gaussian_sum(int n, const Int& p, int k);

// Same count via the exact quotient of (p^n-1)...(p-1) factors. Division is
// checked to be exact.
Int gaussian_product(int n, const Int& p, int k);

// Production path: Pascal-style recurrence a(n,k) = a(n-1,k) + p^{n-k} a(n-1,k-1).
Int gaussian_rec(int n, const Int& p, int k);

// Total number of subgroups of Z_p^n: 2 + sum over intermediate k.
// n = 0 is degenerate and returns 1 (only the trivial group).
Int total_subgroups(int n, const Int& p);

// Same total via the order-2 recurrence a_n = 2 a_{n-1} + (p^{n-1}-1) a_{n-2}.
Int total_rec(int n, const Int& p);

// Polynomial f_n with total_subgroups(n, p) = f_n(p), built by running the
// order-2 recurrence in polynomial arithmetic. deg f_n = floor(n^2/4),
// leading coefficient 1 for even n and 2 for odd n.
CountPolynomial poly_f(int n);

// deg f_n - deg f_{n-1}; equals floor(n/2).
int degree_gap(int n);

}  // namespace sdeg::qcount
