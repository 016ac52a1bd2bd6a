#pragma once

#include "sdeg/cayley.hpp"
#include "sdeg/gfspace.hpp"
#include "sdeg/numbers.hpp"

#include <cstdint>
#include <vector>

namespace sdeg::plat {

// Parameters of the nonabelian P-group: Z_p^{n-1} extended by an order-q
// element acting as h -> h^r.
struct PGroupParams {
    std::uint32_t p = 0;
    int n = 0;
    std::uint32_t q = 0;
    std::uint32_t r = 0;
    int m = 0;  // n - 1, dimension of the elementary abelian part

    bool operator==(const PGroupParams&) const = default;
};

PGroupParams make_params(std::uint32_t p, int n, std::uint32_t q);
PGroupParams make_params(std::uint32_t p, int n, std::uint32_t q, std::uint32_t r);

// Symbolic subgroup of G_{n,p}: either a subspace of the p-part H, or a
// mixed subgroup generated by a subspace T and the element (c)x, with c
// the canonical coset label of c + T.
struct PSubgroup {
    enum class Kind { PPart, Mixed };
    Kind kind = Kind::PPart;
    gf::Subspace space;
    gf::FpVector coset;  // Mixed only, canonical wrt space

    bool operator==(const PSubgroup&) const = default;
};

PSubgroup make_ppart(gf::Subspace t);
PSubgroup make_mixed(gf::Subspace t, gf::FpVector c);

// Order of the represented subgroup: p^{dim T} or p^{dim T} * q.
Int subgroup_order(const PGroupParams& params, const PSubgroup& s);

inline const Int kDefaultBudget = 4000000;

// All a_{n,p} symbolic subgroups. Throws BudgetExceeded (carrying the exact
// total) when a_{n,p} exceeds the budget.
std::vector<PSubgroup> enumerate_psubgroups(const PGroupParams& params,
                                            const Int& budget = kDefaultBudget);

// Bridge to the brute-force oracle: the element set of S inside
// build_pgroup(params.p, params.n, params.q, params.r).
cayley::SubgroupSet to_element_set(const PGroupParams& params, const PSubgroup& s,
                                   const cayley::CayleyGroup& g);

// Structural permutability: p-subgroups are normal and permute with
// everything; Mixed(T,c) and Mixed(U,d) permute iff d - c lies in T + U
// (shared Sylow q-subgroup criterion in coset form).
bool permutes_structural(const PGroupParams& params, const PSubgroup& s, const PSubgroup& k);

// |C(K)| without element enumeration. Depends only on dim T for Mixed K.
Int c_size(const PGroupParams& params, const PSubgroup& k);
Int c_size_mixed_by_dim(const PGroupParams& params, int dim_t);

// Exact sd(G_{n,p}) through the subspace pair profile; polynomial in n for
// fixed p, no subgroup pair loop.
Ratio sd_fast(const PGroupParams& params);
Ratio sd_fast(std::uint32_t p, int n);  // q-free: the value does not depend on q

// Exact sd via the C(K) decomposition over the enumerated mixed subgroups;
// must equal sd_fast. Subject to the enumeration budget.
Ratio sd_via_csizes(const PGroupParams& params, const Int& budget = kDefaultBudget);

// Right-hand side of the paper-style upper bound:
// (a_{n-1,p}/a_{n,p}) (2 + 1/a_{n,p}).
Ratio bound_rhs(int n, std::uint32_t p);

struct PerKBound {
    int k = 0;
    Int c_max;    // max |C(K)| over mixed K with dim T = k
    Int c_bound;  // 1 + a_{n-1,p} (1 + p^k)
    bool ok = false;
};

// Exact measurements against the inequality chain. Comparisons are
// recorded, never asserted: the bound fails for small n.
struct AuditReport {
    PGroupParams params;
    Ratio sd_value;
    Ratio bound_value;
    bool sd_le_bound = false;
    std::vector<PerKBound> per_k;
    Int eq4_lhs_exact;       // sum over mixed K of |C(K)|
    Int eq4_paper_majorant;  // a_{n-1,p} (1 + a_{n,p})
    bool eq4_le_majorant = false;
};

AuditReport audit(std::uint32_t p, int n, std::uint32_t q);

struct TrendRow {
    int n = 0;
    Ratio a_ratio;  // a_{n-1,p} / a_{n,p}
    Ratio p_pow;    // p^{-floor(n/2)}
    Ratio sd;       // sd_fast
};

std::vector<TrendRow> trend_table(std::uint32_t p, int n_min, int n_max);

}  // namespace sdeg::plat
