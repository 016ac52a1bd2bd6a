#include "sdeg/selftest.hpp"

#include "sdeg/cayley.hpp"
#include "sdeg/gfspace.hpp"
#include "sdeg/pgrouplat.hpp"
#include "sdeg/qcount.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace sdeg::selftest {

namespace {

struct Harness {
    std::vector<CheckResult> results;

    // Runs a check that reports failures by returning a nonempty string.
    template <typename F>
    void check(const std::string& name, F&& body) {
        CheckResult r;
        r.name = name;
        try {
            r.detail = body();
            r.passed = r.detail.empty();
        } catch (const std::exception& e) {
            r.passed = false;
            r.detail = std::string("exception: ") + e.what();
        }
        results.push_back(std::move(r));
    }
};

struct Instance {
    std::uint32_t p;
    int n;
    std::uint32_t q;
};

std::vector<Instance> oracle_instances(bool quick) {
    std::vector<Instance> set{{3, 2, 2}, {3, 3, 2}, {5, 2, 2}, {7, 2, 2},
                              {7, 2, 3}, {13, 2, 2}, {13, 2, 3}};
    if (!quick) {
        set.push_back({3, 4, 2});
        set.push_back({5, 3, 2});
    }
    return set;
}

std::string check_canonical_stability(bool quick) {
    std::mt19937 rng(20240901);
    const int rounds = quick ? 20 : 100;
    for (std::uint32_t p : {2u, 3u, 5u}) {
        for (int m = 1; m <= 3; ++m) {
            for (int k = 0; k <= m; ++k) {
                auto spaces = gf::enumerate_subspaces(p, m, k);
                const auto& s = spaces[spaces.size() / 2];
                for (int round = 0; round < rounds; ++round) {
                    // random invertible recombination of the basis
                    std::vector<gf::FpVector> gens;
                    for (const auto& row : s.basis)
                        gens.push_back(gf::FpVector{p, row});
                    for (int mix = 0; mix < 6 && k > 0; ++mix) {
                        const int i = rng() % k, j = rng() % k;
                        const std::uint32_t c = 1 + rng() % (p - 1);
                        if (i != j) gens[i] = gf::fp_add(gens[i], gf::fp_scale(gens[j], c));
                    }
                    std::shuffle(gens.begin(), gens.end(), rng);
                    if (gf::canonicalize(p, m, gens) != s)
                        return "rescrambled span changed canonical form";
                }
            }
        }
    }
    return "";
}

std::string check_enumeration_counts() {
    for (std::uint32_t p : {2u, 3u, 5u})
        for (int m = 0; m <= 4; ++m)
            for (int k = 0; k <= m; ++k) {
                const auto spaces = gf::enumerate_subspaces(p, m, k);
                if (Int(spaces.size()) != qcount::gaussian_rec(m, Int(p), k))
                    return "count mismatch at p=" + std::to_string(p);
                std::set<gf::Subspace> uniq(spaces.begin(), spaces.end());
                if (uniq.size() != spaces.size()) return "duplicate subspaces";
            }
    return "";
}

std::string check_modularity_and_cosets() {
    for (std::uint32_t p : {2u, 3u}) {
        for (int m = 1; m <= 3; ++m) {
            const auto all = gf::enumerate_all_subspaces(p, m);
            for (const auto& t : all)
                for (const auto& u : all) {
                    const auto s = gf::sum(t, u);
                    const auto i = gf::intersect(t, u);
                    if (s.dim() + i.dim() != t.dim() + u.dim()) return "modularity violated";
                }
            // coset_label partitions F_p^m into p^{m-dim T} classes
            const int total = static_cast<int>(ipow(p, m));
            for (const auto& t : all) {
                std::set<std::vector<std::uint32_t>> labels;
                for (int v = 0; v < total; ++v) {
                    gf::FpVector vec{p, std::vector<std::uint32_t>(m)};
                    int rest = v;
                    for (int j = 0; j < m; ++j) {
                        vec.coords[j] = rest % p;
                        rest /= p;
                    }
                    const auto label = gf::coset_label(t, vec);
                    if (!t.contains(gf::fp_sub(vec, label))) return "label not in the coset";
                    labels.insert(label.coords);
                }
                if (Int(labels.size()) != ipow(p, m - t.dim())) return "wrong coset class count";
            }
        }
    }
    return "";
}

std::string check_pair_profile(bool quick) {
    for (std::uint32_t p : {2u, 3u, 5u}) {
        const int max_m = quick ? 3 : (p == 5 ? 3 : 4);
        for (int m = 0; m <= max_m; ++m) {
            const auto closed = gf::pair_profile(p, m);
            const auto brute = gf::pair_profile_exhaustive(p, m);
            Int grand = 0;
            for (int s = 0; s <= m; ++s)
                for (int t = 0; t <= m; ++t)
                    for (int i = 0; i <= m; ++i) {
                        if (closed.counts[s][t][i] != brute.counts[s][t][i])
                            return "profile cell mismatch";
                        if (closed.counts[s][t][i] != closed.counts[t][s][i])
                            return "profile symmetry violated";
                        grand += closed.counts[s][t][i];
                    }
            const Int a = qcount::total_rec(std::max(m, 1), Int(p));
            if (m >= 1 && grand != a * a) return "profile total is not a_{m,p}^2";
        }
    }
    return "";
}

std::string check_qcount_agreement(bool quick) {
    const int max_n = quick ? 6 : 10;
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
        const Int P(p);
        for (int n = 1; n <= max_n; ++n) {
            for (int k = 0; k <= n; ++k) {
                const Int a = qcount::gaussian_sum(n, P, k);
                const Int b = qcount::gaussian_product(n, P, k);
                const Int c = qcount::gaussian_rec(n, P, k);
                if (a != b || b != c) return "three-way disagreement";
                if (c != qcount::gaussian_rec(n, P, n - k)) return "duality violated";
            }
            const Int t1 = qcount::total_subgroups(n, P);
            const Int t2 = qcount::total_rec(n, P);
            const Int t3 = qcount::poly_f(n).eval(P);
            if (t1 != t2 || t2 != t3) return "total disagreement";
        }
    }
    return "";
}

std::string check_poly_shape() {
    for (int n = 1; n <= 12; ++n) {
        const auto f = qcount::poly_f(n);
        if (f.degree() != n * n / 4) return "wrong degree at n=" + std::to_string(n);
        const Int lead = f.leading();
        if (lead != (n % 2 == 0 ? 1 : 2)) return "wrong leading coefficient";
        if (n >= 2 && qcount::degree_gap(n) != n / 2) return "degree gap mismatch";
    }
    return "";
}

std::string check_lattice_sizes(bool quick) {
    for (const auto& inst : oracle_instances(quick)) {
        const auto g = cayley::build_pgroup(inst.p, inst.n, inst.q);
        const auto subs = cayley::all_subgroups(g);
        const Int a_n = qcount::total_rec(inst.n, Int(inst.p));
        const Int a_m = qcount::total_rec(inst.n - 1, Int(inst.p));
        if (Int(subs.size()) != a_n) return "|L(G)| != a_{n,p}";
        if (Int(cayley::normal_subgroups(g, subs).size()) != 1 + a_m)
            return "|N(G)| != 1 + a_{n-1,p}";
    }
    return "";
}

std::string check_abelian_sd() {
    for (auto [p, n] : std::vector<std::pair<std::uint32_t, int>>{
             {2, 1}, {2, 3}, {3, 2}, {3, 3}, {5, 2}, {7, 1}}) {
        if (cayley::sd_exact(cayley::build_elementary_abelian(p, n)) != 1)
            return "abelian sd != 1";
    }
    return "";
}

std::string check_enumeration_totals(bool quick) {
    // Enumerated profile against the subgroup listing on small instances.
    for (const auto& inst : oracle_instances(quick)) {
        const auto params = plat::make_params(inst.p, inst.n, inst.q);
        const auto subs = plat::enumerate_psubgroups(params);
        const Int a_n = qcount::total_rec(inst.n, Int(inst.p));
        if (Int(subs.size()) != a_n) return "enumeration total mismatch";
        for (int k = 0; k <= params.m; ++k) {
            Int pparts = 0, mixed = 0;
            for (const auto& s : subs) {
                if (s.space.dim() != k) continue;
                (s.kind == plat::PSubgroup::Kind::PPart ? pparts : mixed) += 1;
            }
            const Int ak = qcount::gaussian_rec(params.m, Int(inst.p), k);
            if (pparts != ak) return "p-part multiplicity mismatch";
            if (mixed != ak * ipow(inst.p, params.m - k)) return "mixed multiplicity mismatch";
        }
    }
    // Symbolic totals: the listing multiplicities must add up to a_{n,p}.
    for (std::uint32_t p : {3u, 5u, 7u})
        for (int n = 2; n <= 8; ++n) {
            const int m = n - 1;
            Int sum = qcount::total_rec(m, Int(p));
            for (int k = 0; k <= m; ++k)
                sum += qcount::gaussian_rec(m, Int(p), k) * ipow(p, m - k);
            if (sum != qcount::total_rec(n, Int(p))) return "symbolic listing total mismatch";
        }
    return "";
}

std::string check_bridge(bool quick) {
    for (const auto& inst : oracle_instances(quick)) {
        const auto params = plat::make_params(inst.p, inst.n, inst.q);
        const auto g = cayley::build_pgroup(inst.p, inst.n, inst.q);
        const auto subs = plat::enumerate_psubgroups(params);
        std::set<std::vector<std::uint64_t>> images;
        for (const auto& s : subs)
            if (!images.insert(plat::to_element_set(params, s, g).mask).second)
                return "bridge not injective";
        const auto oracle = cayley::all_subgroups(g);
        if (images.size() != oracle.size()) return "bridge image size mismatch";
        for (const auto& s : oracle)
            if (!images.count(s.mask)) return "oracle subgroup missing from bridge image";
    }
    return "";
}

std::string check_predicate_certification(bool quick) {
    for (const auto& inst : oracle_instances(quick)) {
        const auto params = plat::make_params(inst.p, inst.n, inst.q);
        const auto g = cayley::build_pgroup(inst.p, inst.n, inst.q);
        const auto subs = plat::enumerate_psubgroups(params);
        std::vector<cayley::SubgroupSet> sets;
        for (const auto& s : subs) sets.push_back(plat::to_element_set(params, s, g));
        for (std::size_t i = 0; i < subs.size(); ++i)
            for (std::size_t j = 0; j < subs.size(); ++j) {
                const bool structural = plat::permutes_structural(params, subs[i], subs[j]);
                if (structural != cayley::permutes(g, sets[i], sets[j]))
                    return "structural predicate disagrees with set products";
                if (structural != plat::permutes_structural(params, subs[j], subs[i]))
                    return "predicate asymmetric";
            }
    }
    return "";
}

std::string check_method_agreement(bool quick) {
    for (const auto& inst : oracle_instances(quick)) {
        const auto params = plat::make_params(inst.p, inst.n, inst.q);
        const Ratio fast = plat::sd_fast(params);
        if (fast != plat::sd_via_csizes(params)) return "sd_fast != sd_via_csizes";
        const auto g = cayley::build_pgroup(inst.p, inst.n, inst.q);
        if (fast != cayley::sd_exact(g)) return "sd_fast != oracle sd";
        if (fast >= 1) return "nonabelian sd not < 1";
    }
    if (!quick) {
        for (auto [p, n] : std::vector<std::pair<std::uint32_t, int>>{{3, 5}, {3, 6}, {5, 4}}) {
            const auto params = plat::make_params(p, n, 2);
            if (plat::sd_fast(params) != plat::sd_via_csizes(params))
                return "beyond-oracle method disagreement";
        }
    }
    return "";
}

std::string check_c_sizes(bool quick) {
    for (const auto& inst : oracle_instances(quick)) {
        const auto params = plat::make_params(inst.p, inst.n, inst.q);
        const auto g = cayley::build_pgroup(inst.p, inst.n, inst.q);
        const auto oracle_subs = cayley::all_subgroups(g);
        const auto subs = plat::enumerate_psubgroups(params);
        Int csum = 0;
        for (const auto& k : subs) {
            const Int structural = plat::c_size(params, k);
            const Int oracle = cayley::commuting_set_size(
                g, oracle_subs, plat::to_element_set(params, k, g));
            if (structural != oracle) return "c_size disagrees with oracle";
            if (k.kind == plat::PSubgroup::Kind::Mixed &&
                structural != plat::c_size_mixed_by_dim(params, k.space.dim()))
                return "c_size depends on more than dim T";
            csum += structural;
        }
        // Eq-style consistency: sum over K of |C(K)| = sd * |L|^2
        const Int a_n = qcount::total_rec(inst.n, Int(inst.p));
        if (Ratio(csum, a_n * a_n) != plat::sd_fast(params))
            return "sum of |C(K)| inconsistent with sd";
    }
    // Per-subgroup bound from the inequality chain, exact, n <= 6, p in {3,5}.
    for (std::uint32_t p : {3u, 5u})
        for (int n = 2; n <= 6; ++n) {
            const auto params = plat::make_params(p, n, 2);
            const Int a_m = qcount::total_rec(n - 1, Int(p));
            for (int k = 0; k <= params.m; ++k)
                if (plat::c_size_mixed_by_dim(params, k) > 1 + a_m * (1 + ipow(p, k)))
                    return "per-subgroup bound violated";
        }
    return "";
}

std::string check_q_independence() {
    for (std::uint32_t p : {7u, 13u}) {
        const Ratio a = plat::sd_fast(plat::make_params(p, 2, 2));
        const Ratio b = plat::sd_fast(plat::make_params(p, 2, 3));
        if (a != b) return "sd depends on q";
        if (a != cayley::sd_exact(cayley::build_pgroup(p, 2, 2))) return "q=2 oracle mismatch";
        if (b != cayley::sd_exact(cayley::build_pgroup(p, 2, 3))) return "q=3 oracle mismatch";
    }
    return "";
}

std::string check_r_choice() {
    // Both order-3 residues mod 7 give the same sd and lattice profile.
    std::vector<std::uint32_t> candidates;
    for (std::uint32_t r = 2; r < 7; ++r)
        if (powmod(r, 3, 7) == 1) candidates.push_back(r);
    if (candidates.size() != 2) return "expected two order-3 residues mod 7";
    std::vector<Ratio> sds;
    std::vector<std::size_t> sizes;
    for (std::uint32_t r : candidates) {
        const auto g = cayley::build_pgroup(7, 2, 3, r);
        sds.push_back(cayley::sd_exact(g));
        sizes.push_back(cayley::all_subgroups(g).size());
    }
    if (sds[0] != sds[1] || sizes[0] != sizes[1]) return "sd depends on choice of r";
    return "";
}

}  // namespace

std::vector<CheckResult> run(bool quick) {
    Harness h;
    h.check("gfspace: canonical form stability", [&] { return check_canonical_stability(quick); });
    h.check("gfspace: enumeration counts", [&] { return check_enumeration_counts(); });
    h.check("gfspace: modularity and cosets", [&] { return check_modularity_and_cosets(); });
    h.check("gfspace: pair profile vs exhaustive", [&] { return check_pair_profile(quick); });
    h.check("qcount: three-way agreement and duality", [&] { return check_qcount_agreement(quick); });
    h.check("qcount: polynomial degree and leading coefficient", [&] { return check_poly_shape(); });
    h.check("cayley: lattice and normal counts", [&] { return check_lattice_sizes(quick); });
    h.check("cayley: abelian sd is 1", [&] { return check_abelian_sd(); });
    h.check("pgrouplat: enumeration totals", [&] { return check_enumeration_totals(quick); });
    h.check("pgrouplat: bridge correctness", [&] { return check_bridge(quick); });
    h.check("pgrouplat: predicate certification", [&] { return check_predicate_certification(quick); });
    h.check("pgrouplat: sd method agreement", [&] { return check_method_agreement(quick); });
    h.check("pgrouplat: c_size oracle and bound", [&] { return check_c_sizes(quick); });
    h.check("pgrouplat: q-independence", [&] { return check_q_independence(); });
    h.check("pgrouplat: r-choice invariance", [&] { return check_r_choice(); });
    return h.results;
}

}  // namespace sdeg::selftest
