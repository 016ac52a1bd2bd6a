#include "sdeg/cayley.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <set>
#include <stdexcept>

namespace sdeg::cayley {

namespace {

int mask_words(int n) { return (n + 63) / 64; }

void set_bit(std::vector<std::uint64_t>& mask, int i) { mask[i >> 6] |= 1ull << (i & 63); }

bool test_bit(const std::vector<std::uint64_t>& mask, int i) {
    return (mask[i >> 6] >> (i & 63)) & 1;
}

}  // namespace

bool SubgroupSet::operator<(const SubgroupSet& o) const {
    if (members.size() != o.members.size()) return members.size() < o.members.size();
    return members < o.members;
}

void validate_group(const CayleyGroup& g) {
    const int n = g.order;
    if (n <= 0 || static_cast<int>(g.table.size()) != n * n)
        throw std::invalid_argument("group table has wrong shape");
    if (n > kMaxOrder) throw std::invalid_argument("group order exceeds oracle cap");
    std::vector<char> seen(n);
    for (int a = 0; a < n; ++a) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int b = 0; b < n; ++b) {
            const int c = g.mul(a, b);
            if (c < 0 || c >= n || seen[c]) throw std::invalid_argument("table row not a permutation");
            seen[c] = 1;
        }
        std::fill(seen.begin(), seen.end(), 0);
        for (int b = 0; b < n; ++b) {
            const int c = g.mul(b, a);
            if (seen[c]) throw std::invalid_argument("table column not a permutation");
            seen[c] = 1;
        }
    }
    for (int a = 0; a < n; ++a)
        if (g.mul(g.identity, a) != a || g.mul(a, g.identity) != a)
            throw std::invalid_argument("identity element is wrong");
    for (int a = 0; a < n; ++a)
        if (g.mul(a, g.inverse[a]) != g.identity || g.mul(g.inverse[a], a) != g.identity)
            throw std::invalid_argument("inverse table is wrong");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const int ab = g.mul(a, b);
            for (int c = 0; c < n; ++c)
                if (g.mul(ab, c) != g.mul(a, g.mul(b, c)))
                    throw std::invalid_argument("associativity fails");
        }
}

namespace {

// Fills inverse table and identity, then runs the full axiom check.
void finalize(CayleyGroup& g) {
    const int n = g.order;
    // locate identity
    g.identity = -1;
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a)
            if (g.mul(e, a) != a || g.mul(a, e) != a) ok = false;
        if (ok) {
            g.identity = e;
            break;
        }
    }
    if (g.identity < 0) throw std::invalid_argument("no identity element");
    g.inverse.assign(n, -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (g.mul(a, b) == g.identity && g.mul(b, a) == g.identity) {
                g.inverse[a] = b;
                break;
            }
    validate_group(g);
}

}  // namespace

SubgroupSet make_subgroup_set(int parent_order, std::vector<int> members) {
    SubgroupSet s;
    s.parent_order = parent_order;
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    s.mask.assign(mask_words(parent_order), 0);
    for (int m : members) set_bit(s.mask, m);
    s.members = std::move(members);
    if (parent_order % s.members.size() != 0)
        throw std::invalid_argument("subgroup size violates Lagrange");
    return s;
}

SubgroupSet closure(const CayleyGroup& g, const std::vector<int>& generators) {
    std::vector<std::uint64_t> mask(mask_words(g.order), 0);
    std::vector<int> elems{g.identity};
    set_bit(mask, g.identity);
    std::vector<int> queue;
    for (int x : generators)
        if (!test_bit(mask, x)) {
            set_bit(mask, x);
            elems.push_back(x);
            queue.push_back(x);
        }
    while (!queue.empty()) {
        const int x = queue.back();
        queue.pop_back();
        const std::size_t count = elems.size();
        for (std::size_t i = 0; i < count; ++i) {
            for (int y : {g.mul(x, elems[i]), g.mul(elems[i], x)}) {
                if (!test_bit(mask, y)) {
                    set_bit(mask, y);
                    elems.push_back(y);
                    queue.push_back(y);
                }
            }
        }
    }
    return make_subgroup_set(g.order, std::move(elems));
}

CayleyGroup build_elementary_abelian(std::uint32_t p, int n) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    if (n < 0) throw std::invalid_argument("n must be non-negative");
    Int size = ipow(p, n);
    if (size > kMaxOrder) throw std::invalid_argument("order exceeds oracle cap");
    const int N = static_cast<int>(size);

    CayleyGroup g;
    g.order = N;
    g.table.resize(std::size_t(N) * N);
    g.labels.resize(N);
    auto digits = [&](int idx) {
        std::vector<std::uint32_t> d(n);
        for (int i = 0; i < n; ++i) {
            d[i] = idx % p;
            idx /= p;
        }
        return d;
    };
    for (int a = 0; a < N; ++a) {
        const auto da = digits(a);
        std::string label = "(";
        for (int i = 0; i < n; ++i) label += (i ? "," : "") + std::to_string(da[i]);
        g.labels[a] = label + ")";
        for (int b = 0; b < N; ++b) {
            const auto db = digits(b);
            int idx = 0;
            for (int i = n - 1; i >= 0; --i) idx = idx * p + (da[i] + db[i]) % p;
            g.table[std::size_t(a) * N + b] = idx;
        }
    }
    finalize(g);
    return g;
}

std::uint32_t find_r(std::uint32_t p, std::uint32_t q) {
    if (!is_prime(p) || !is_prime(q)) throw std::invalid_argument("p and q must be prime");
    if (q == p || (p - 1) % q != 0)
        throw std::invalid_argument("no nonabelian P-group for these parameters: q must divide p-1");
    for (std::uint32_t r = 2; r < p; ++r) {
        // order of r mod p equals q iff r^q = 1 and r != 1 (q prime)
        if (powmod(r, q, p) == 1) return r;
    }
    throw std::logic_error("find_r: no element of order q mod p");
}

CayleyGroup build_pgroup(std::uint32_t p, int n, std::uint32_t q) {
    return build_pgroup(p, n, q, find_r(p, q));
}

CayleyGroup build_pgroup(std::uint32_t p, int n, std::uint32_t q, std::uint32_t r) {
    if (!is_prime(p) || p == 2) throw std::invalid_argument("p must be an odd prime");
    if (n < 2) throw std::invalid_argument("n must be >= 2");
    if (!is_prime(q) || q == p || (p - 1) % q != 0)
        throw std::invalid_argument("q must be a prime dividing p-1");
    if (r < 2 || r >= p || powmod(r, q, p) != 1)
        throw std::invalid_argument("r must have multiplicative order q mod p");
    const int m = n - 1;
    Int size = ipow(p, m) * q;
    if (size > kMaxOrder) throw std::invalid_argument("order exceeds oracle cap");
    const int N = static_cast<int>(size);
    const int H = static_cast<int>(ipow(p, m));

    // Elements are pairs (v in F_p^m, e in Z_q), index = encode(v)*q + e.
    // Product rule (v,e)(w,f) = (v + s^e w, e+f) with s = r^{-1} mod p
    // realizes x^{-1} h x = h^r.
    const std::uint32_t s = static_cast<std::uint32_t>(powmod(r, p - 2, p));  // r^{-1} mod p
    auto digits = [&](int vi) {
        std::vector<std::uint32_t> d(m);
        for (int i = 0; i < m; ++i) {
            d[i] = vi % p;
            vi /= p;
        }
        return d;
    };
    auto encode = [&](const std::vector<std::uint32_t>& d) {
        int vi = 0;
        for (int i = m - 1; i >= 0; --i) vi = vi * p + d[i];
        return vi;
    };

    CayleyGroup g;
    g.order = N;
    g.table.resize(std::size_t(N) * N);
    g.labels.resize(N);

    std::vector<std::uint32_t> spow(q);
    spow[0] = 1;
    for (std::uint32_t e = 1; e < q; ++e)
        spow[e] = static_cast<std::uint32_t>(std::uint64_t(spow[e - 1]) * s % p);

    for (int a = 0; a < N; ++a) {
        const int va = a / q;
        const std::uint32_t ea = a % q;
        const auto da = digits(va);
        std::string label = "(";
        for (int i = 0; i < m; ++i) label += (i ? "," : "") + std::to_string(da[i]);
        g.labels[a] = label + ")x^" + std::to_string(ea);
        for (int b = 0; b < N; ++b) {
            const int vb = b / q;
            const std::uint32_t eb = b % q;
            auto db = digits(vb);
            std::vector<std::uint32_t> dc(m);
            for (int i = 0; i < m; ++i)
                dc[i] = (da[i] + std::uint64_t(spow[ea]) * db[i]) % p;
            g.table[std::size_t(a) * N + b] = encode(dc) * q + (ea + eb) % q;
        }
    }
    finalize(g);

    // Conjugation law x^{-1} h x = h^r, checked element-wise on H.
    const int x = 1;  // (0, 1)
    for (int vh = 0; vh < H; ++vh) {
        const int h = vh * q;
        const int conj = g.mul(g.mul(g.inverse[x], h), x);
        int hr = g.identity;
        for (std::uint32_t i = 0; i < r; ++i) hr = g.mul(hr, h);
        if (conj != hr) throw std::logic_error("build_pgroup: conjugation law violated");
    }
    return g;
}

CayleyGroup build_dihedral(int order) {
    if (order < 2 || order % 2 != 0 || order > kMaxOrder)
        throw std::invalid_argument("dihedral order must be even, 2..cap");
    const int k = order / 2;
    CayleyGroup g;
    g.order = order;
    g.table.resize(std::size_t(order) * order);
    g.labels.resize(order);
    // element r^i f^s  ->  index i*2 + s
    for (int i = 0; i < k; ++i)
        for (int s = 0; s < 2; ++s) {
            const int a = i * 2 + s;
            g.labels[a] = "r^" + std::to_string(i) + (s ? " f" : "");
            for (int j = 0; j < k; ++j)
                for (int t = 0; t < 2; ++t) {
                    const int b = j * 2 + t;
                    const int ri = s ? (i - j + k) % k : (i + j) % k;
                    g.table[std::size_t(a) * order + b] = ri * 2 + (s ^ t);
                }
        }
    finalize(g);
    return g;
}

CayleyGroup build_quaternion(int order) {
    if (order < 8 || (order & (order - 1)) != 0 || order > kMaxOrder)
        throw std::invalid_argument("generalized quaternion order must be a power of 2, >= 8");
    const int M = order / 2;      // order of a
    const int half = M / 2;       // b^2 = a^half
    CayleyGroup g;
    g.order = order;
    g.table.resize(std::size_t(order) * order);
    g.labels.resize(order);
    // element a^i b^s  ->  index i*2 + s ; relations b a = a^{-1} b, b^2 = a^{M/2}
    for (int i = 0; i < M; ++i)
        for (int s = 0; s < 2; ++s) {
            const int a = i * 2 + s;
            g.labels[a] = "a^" + std::to_string(i) + (s ? " b" : "");
            for (int j = 0; j < M; ++j)
                for (int t = 0; t < 2; ++t) {
                    const int b = j * 2 + t;
                    int ri = s ? (i - j + M) % M : (i + j) % M;
                    int rs = s ^ t;
                    if (s && t) ri = (ri + half) % M;
                    g.table[std::size_t(a) * order + b] = ri * 2 + rs;
                }
        }
    finalize(g);
    return g;
}

CayleyGroup build_semidihedral(int order) {
    if (order < 16 || (order & (order - 1)) != 0 || order > kMaxOrder)
        throw std::invalid_argument("semidihedral order must be a power of 2, >= 16");
    const int M = order / 2;
    const int twist = M / 2 - 1;  // b a b = a^{2^{k-2}-1}
    CayleyGroup g;
    g.order = order;
    g.table.resize(std::size_t(order) * order);
    g.labels.resize(order);
    for (int i = 0; i < M; ++i)
        for (int s = 0; s < 2; ++s) {
            const int a = i * 2 + s;
            g.labels[a] = "a^" + std::to_string(i) + (s ? " b" : "");
            for (int j = 0; j < M; ++j)
                for (int t = 0; t < 2; ++t) {
                    const int b = j * 2 + t;
                    const int ri = s ? (i + twist * j) % M : (i + j) % M;
                    g.table[std::size_t(a) * order + b] = ri * 2 + (s ^ t);
                }
        }
    finalize(g);
    return g;
}

std::vector<SubgroupSet> all_subgroups(const CayleyGroup& g) {
    std::vector<SubgroupSet> subs;
    std::set<std::vector<std::uint64_t>> seen;
    auto add = [&](SubgroupSet s) {
        if (seen.insert(s.mask).second) subs.push_back(std::move(s));
    };
    add(closure(g, {}));
    for (int x = 0; x < g.order; ++x) add(closure(g, {x}));
    // Saturate under pairwise joins.
    for (std::size_t i = 0; i < subs.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            std::vector<int> gens = subs[i].members;
            gens.insert(gens.end(), subs[j].members.begin(), subs[j].members.end());
            add(closure(g, gens));
        }
    }
    std::sort(subs.begin(), subs.end());
    return subs;
}

namespace {

std::vector<std::uint64_t> product_mask(const CayleyGroup& g, const SubgroupSet& a,
                                        const SubgroupSet& b) {
    std::vector<std::uint64_t> mask(mask_words(g.order), 0);
    for (int x : a.members) {
        const int* row = g.table.data() + std::size_t(x) * g.order;
        for (int y : b.members) set_bit(mask, row[y]);
    }
    return mask;
}

}  // namespace

bool permutes(const CayleyGroup& g, const SubgroupSet& a, const SubgroupSet& b) {
    return product_mask(g, a, b) == product_mask(g, b, a);
}

bool product_is_subgroup(const CayleyGroup& g, const SubgroupSet& a, const SubgroupSet& b) {
    const auto mask = product_mask(g, a, b);
    std::vector<int> elems;
    for (int i = 0; i < g.order; ++i)
        if (test_bit(mask, i)) elems.push_back(i);
    for (int x : elems)
        for (int y : elems)
            if (!test_bit(mask, g.mul(x, y))) return false;
    return true;
}

Ratio sd_exact(const CayleyGroup& g) { return sd_exact(g, all_subgroups(g)); }

Ratio sd_exact(const CayleyGroup& g, const std::vector<SubgroupSet>& subs) {
    const std::size_t L = subs.size();
    Int permuting = static_cast<Int>(L);  // diagonal pairs
    for (std::size_t i = 0; i < L; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (permutes(g, subs[i], subs[j])) permuting += 2;
    return Ratio(permuting, Int(L) * Int(L));
}

std::vector<SubgroupSet> normal_subgroups(const CayleyGroup& g) {
    return normal_subgroups(g, all_subgroups(g));
}

std::vector<SubgroupSet> normal_subgroups(const CayleyGroup& g,
                                          const std::vector<SubgroupSet>& subs) {
    std::vector<SubgroupSet> out;
    for (const auto& s : subs) {
        bool normal = true;
        for (int x = 0; x < g.order && normal; ++x)
            for (int a : s.members)
                if (!s.test(g.mul(g.mul(x, a), g.inverse[x]))) {
                    normal = false;
                    break;
                }
        if (normal) out.push_back(s);
    }
    return out;
}

Int commuting_set_size(const CayleyGroup& g, const std::vector<SubgroupSet>& subs,
                       const SubgroupSet& k) {
    if (std::find(subs.begin(), subs.end(), k) == subs.end())
        throw std::invalid_argument("commuting_set_size: K is not in the subgroup list");
    Int count = 0;
    for (const auto& a : subs)
        if (permutes(g, a, k)) ++count;
    return count;
}

std::string to_json(const CayleyGroup& g) {
    nlohmann::json j;
    j["order"] = g.order;
    j["labels"] = g.labels;
    std::vector<std::vector<int>> rows(g.order);
    for (int a = 0; a < g.order; ++a)
        rows[a].assign(g.table.begin() + std::size_t(a) * g.order,
                       g.table.begin() + std::size_t(a + 1) * g.order);
    j["table"] = rows;
    return j.dump(2);
}

}  // namespace sdeg::cayley
