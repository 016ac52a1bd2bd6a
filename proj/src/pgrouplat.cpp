#include "sdeg/pgrouplat.hpp"

#include "sdeg/qcount.hpp"

#include <algorithm>
#include <stdexcept>

namespace sdeg::plat {

namespace {

Int total(int n, std::uint32_t p) { return qcount::total_rec(n, Int(p)); }

Int gauss(int n, std::uint32_t p, int k) { return qcount::gaussian_rec(n, Int(p), k); }

}  // namespace

PGroupParams make_params(std::uint32_t p, int n, std::uint32_t q) {
    return make_params(p, n, q, cayley::find_r(p, q));
}

PGroupParams make_params(std::uint32_t p, int n, std::uint32_t q, std::uint32_t r) {
    if (!is_prime(p) || p == 2) throw std::invalid_argument("p must be an odd prime");
    if (p >= (1u << 16)) throw std::invalid_argument("p must be below 2^16");
    if (n < 2) throw std::invalid_argument("n must be >= 2");
    if (!is_prime(q) || q == p || (p - 1) % q != 0)
        throw std::invalid_argument("q must be a prime dividing p-1");
    if (r < 2 || r >= p || powmod(r, q, p) != 1)
        throw std::invalid_argument("r must have multiplicative order q mod p");
    return PGroupParams{p, n, q, r, n - 1};
}

PSubgroup make_ppart(gf::Subspace t) {
    PSubgroup s;
    s.kind = PSubgroup::Kind::PPart;
    s.space = std::move(t);
    return s;
}

PSubgroup make_mixed(gf::Subspace t, gf::FpVector c) {
    PSubgroup s;
    s.kind = PSubgroup::Kind::Mixed;
    if (gf::coset_label(t, c) != c)
        throw std::invalid_argument("make_mixed: coset label is not canonical for T");
    s.space = std::move(t);
    s.coset = std::move(c);
    return s;
}

Int subgroup_order(const PGroupParams& params, const PSubgroup& s) {
    Int order = ipow(params.p, s.space.dim());
    if (s.kind == PSubgroup::Kind::Mixed) order *= params.q;
    return order;
}

std::vector<PSubgroup> enumerate_psubgroups(const PGroupParams& params, const Int& budget) {
    const Int count = total(params.n, params.p);
    if (count > budget)
        throw BudgetExceeded("enumerate_psubgroups: would produce " + count.str() +
                                 " subgroups, over the budget of " + budget.str(),
                             count);
    const std::uint32_t p = params.p;
    const int m = params.m;
    std::vector<PSubgroup> out;
    for (const auto& t : gf::enumerate_all_subspaces(p, m)) out.push_back(make_ppart(t));
    for (const auto& t : gf::enumerate_all_subspaces(p, m)) {
        // Canonical coset labels: free coordinates at non-pivot columns,
        // lexicographic.
        std::vector<int> free_cols;
        std::vector<bool> is_pivot(m, false);
        for (int c : t.pivots) is_pivot[c] = true;
        for (int j = 0; j < m; ++j)
            if (!is_pivot[j]) free_cols.push_back(j);
        std::vector<std::uint32_t> vals(free_cols.size(), 0);
        while (true) {
            gf::FpVector c{p, std::vector<std::uint32_t>(m, 0)};
            for (std::size_t f = 0; f < free_cols.size(); ++f) c.coords[free_cols[f]] = vals[f];
            out.push_back(make_mixed(t, std::move(c)));
            int f = static_cast<int>(vals.size()) - 1;
            while (f >= 0 && vals[f] == p - 1) vals[f--] = 0;
            if (f < 0) break;
            ++vals[f];
        }
    }
    if (Int(out.size()) != count)
        throw std::logic_error("enumerate_psubgroups: total disagrees with a_{n,p}");
    return out;
}

cayley::SubgroupSet to_element_set(const PGroupParams& params, const PSubgroup& s,
                                   const cayley::CayleyGroup& g) {
    const std::uint32_t p = params.p;
    const std::uint32_t q = params.q;
    const int m = params.m;
    if (Int(g.order) != ipow(p, m) * q)
        throw std::invalid_argument("to_element_set: group does not match params");
    // Element index convention of build_pgroup: (v, e) -> encode(v)*q + e
    // with little-endian base-p digits.
    auto encode = [&](const std::vector<std::uint32_t>& v) {
        int vi = 0;
        for (int i = m - 1; i >= 0; --i) vi = vi * p + v[i];
        return vi;
    };
    std::vector<int> gens;
    for (const auto& row : s.space.basis) gens.push_back(encode(row) * q);
    if (s.kind == PSubgroup::Kind::Mixed) gens.push_back(encode(s.coset.coords) * q + 1);
    auto set = cayley::closure(g, gens);
    if (Int(set.size()) != subgroup_order(params, s))
        throw std::logic_error("to_element_set: unexpected subgroup order");
    return set;
}

bool permutes_structural(const PGroupParams& params, const PSubgroup& s, const PSubgroup& k) {
    (void)params;
    if (s.kind == PSubgroup::Kind::PPart || k.kind == PSubgroup::Kind::PPart) return true;
    return gf::sum(s.space, k.space).contains(gf::fp_sub(k.coset, s.coset));
}

Int c_size_mixed_by_dim(const PGroupParams& params, int dim_t) {
    const int m = params.m;
    const int k = dim_t;
    if (k < 0 || k > m) throw std::invalid_argument("c_size_mixed_by_dim: dim out of range");
    const std::uint32_t p = params.p;
    // Normals (1 + a_{m,p}) plus mixed subgroups sharing a Sylow q-subgroup,
    // minus the doubly counted whole group. The mixed term groups U by
    // (dim U, dim(T cap U)):
    //   sum_U p^{dim(T+U) - dim U} = sum_{t,i} N_k(t,i) p^{k-i}.
    Int mixed = 0;
    for (int t = 0; t <= m; ++t) {
        const int lo = std::max(0, k + t - m);
        const int hi = std::min(k, t);
        for (int i = lo; i <= hi; ++i) {
            const Int n_kti = gauss(k, p, i) * gauss(m - k, p, t - i) *
                              ipow(p, std::uint64_t(k - i) * (t - i));
            mixed += n_kti * ipow(p, k - i);
        }
    }
    return total(m, p) + mixed;  // (1 + a_{m,p}) + mixed - 1
}

Int c_size(const PGroupParams& params, const PSubgroup& k) {
    if (k.kind == PSubgroup::Kind::PPart) return total(params.n, params.p);
    return c_size_mixed_by_dim(params, k.space.dim());
}

Ratio sd_fast(const PGroupParams& params) { return sd_fast(params.p, params.n); }

Ratio sd_fast(std::uint32_t p, int n) {
    if (!is_prime(p) || p == 2) throw std::invalid_argument("p must be an odd prime");
    if (n < 2) throw std::invalid_argument("n must be >= 2");
    const int m = n - 1;
    const Int a_n = total(n, p);
    const Int a_m = total(m, p);
    const Int mixed = a_n - a_m;
    // Mixed-Mixed permuting pairs: for fixed subspaces (T, U) the coset
    // pairs (c, d) with d - c in T+U number p^{m - dim(T cap U)}.
    const auto prof = gf::pair_profile(p, m);
    Int pairs = 0;
    for (int s = 0; s <= m; ++s)
        for (int t = 0; t <= m; ++t)
            for (int i = 0; i <= m; ++i)
                if (prof.counts[s][t][i] != 0)
                    pairs += prof.counts[s][t][i] * ipow(p, m - i);
    const Int permuting = a_n * a_n - mixed * mixed + pairs;
    return Ratio(permuting, a_n * a_n);
}

Ratio sd_via_csizes(const PGroupParams& params, const Int& budget) {
    const Int a_n = total(params.n, params.p);
    const Int a_m = total(params.m, params.p);
    Int mixed_sum = 0;
    for (const auto& k : enumerate_psubgroups(params, budget))
        if (k.kind == PSubgroup::Kind::Mixed) mixed_sum += c_size(params, k);
    return Ratio(a_m * a_n + mixed_sum, a_n * a_n);
}

Ratio bound_rhs(int n, std::uint32_t p) {
    if (n < 2) throw std::invalid_argument("bound_rhs: n must be >= 2");
    const Int a_n = total(n, p);
    const Int a_m = total(n - 1, p);
    return Ratio(a_m, a_n) * (Ratio(2) + Ratio(1, a_n));
}

AuditReport audit(std::uint32_t p, int n, std::uint32_t q) {
    AuditReport rep;
    rep.params = make_params(p, n, q);
    rep.sd_value = sd_fast(rep.params);
    rep.bound_value = bound_rhs(n, p);
    rep.sd_le_bound = rep.sd_value <= rep.bound_value;

    const int m = rep.params.m;
    const Int a_m = total(m, p);
    rep.eq4_lhs_exact = 0;
    for (int k = 0; k <= m; ++k) {
        PerKBound row;
        row.k = k;
        row.c_max = c_size_mixed_by_dim(rep.params, k);
        row.c_bound = 1 + a_m * (1 + ipow(p, k));
        row.ok = row.c_max <= row.c_bound;
        rep.per_k.push_back(row);
        // multiplicity of mixed subgroups with dim T = k, from the listing
        rep.eq4_lhs_exact += gauss(m, p, k) * ipow(p, m - k) * row.c_max;
    }
    rep.eq4_paper_majorant = a_m * (1 + total(n, p));
    rep.eq4_le_majorant = rep.eq4_lhs_exact <= rep.eq4_paper_majorant;
    return rep;
}

std::vector<TrendRow> trend_table(std::uint32_t p, int n_min, int n_max) {
    if (n_min < 2 || n_max < n_min) throw std::invalid_argument("trend_table: bad n range");
    std::vector<TrendRow> rows;
    for (int n = n_min; n <= n_max; ++n) {
        TrendRow row;
        row.n = n;
        row.a_ratio = Ratio(total(n - 1, p), total(n, p));
        row.p_pow = Ratio(1, ipow(p, n / 2));
        row.sd = sd_fast(p, n);
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace sdeg::plat
