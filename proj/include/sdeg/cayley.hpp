#pragma once

#include "sdeg/numbers.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace sdeg::cayley {

// Hard cap on oracle group order: exhaustive associativity checking and the
// subgroup pair loops stay sub-minute below this.
inline constexpr int kMaxOrder = 400;

// Explicit finite group as a multiplication table. Group axioms are
// machine-checked at construction.
struct CayleyGroup {
    int order = 0;
    std::vector<int> table;  // row-major, order x order
    std::vector<int> inverse;
    int identity = 0;
    std::vector<std::string> labels;

    int mul(int a, int b) const { return table[a * order + b]; }
};

// Validates permutation rows/columns, identity, inverses, associativity.
// Throws std::invalid_argument on any violation.
void validate_group(const CayleyGroup& g);

// Subgroup as a member bitmask plus sorted member list.
struct SubgroupSet {
    int parent_order = 0;
    std::vector<std::uint64_t> mask;
    std::vector<int> members;

    bool test(int i) const { return (mask[i >> 6] >> (i & 63)) & 1; }
    int size() const { return static_cast<int>(members.size()); }
    bool operator==(const SubgroupSet& o) const { return mask == o.mask; }
    bool operator<(const SubgroupSet& o) const;
};

SubgroupSet make_subgroup_set(int parent_order, std::vector<int> members);

// Closure of a generating set under the group product.
SubgroupSet closure(const CayleyGroup& g, const std::vector<int>& generators);

CayleyGroup build_elementary_abelian(std::uint32_t p, int n);

// Smallest r in [2, p-1] whose multiplicative order mod p is exactly q.
// Requires q prime, q | p-1, q != p.
std::uint32_t find_r(std::uint32_t p, std::uint32_t q);

// Nonabelian semidirect product Z_p^{n-1} x| Z_q with x^{-1} h x = h^r.
// r defaults to find_r(p, q); an explicit r of order q mod p may be given.
CayleyGroup build_pgroup(std::uint32_t p, int n, std::uint32_t q);
CayleyGroup build_pgroup(std::uint32_t p, int n, std::uint32_t q, std::uint32_t r);

CayleyGroup build_dihedral(int order);      // order = 2k, k >= 1
CayleyGroup build_quaternion(int order);    // order = 2^k >= 8
CayleyGroup build_semidihedral(int order);  // order = 2^k >= 16

// Complete subgroup list by closure saturation over joins of cyclic
// subgroups; sorted by (size, member list).
std::vector<SubgroupSet> all_subgroups(const CayleyGroup& g);

// HK == KH as element sets.
bool permutes(const CayleyGroup& g, const SubgroupSet& a, const SubgroupSet& b);

// Product set AB is itself a subgroup (equivalent to permutes; kept as an
// independent cross-check).
bool product_is_subgroup(const CayleyGroup& g, const SubgroupSet& a, const SubgroupSet& b);

// Exact sd(G) = |permuting ordered pairs| / |L(G)|^2 over a precomputed list.
Ratio sd_exact(const CayleyGroup& g);
Ratio sd_exact(const CayleyGroup& g, const std::vector<SubgroupSet>& subs);

std::vector<SubgroupSet> normal_subgroups(const CayleyGroup& g);
std::vector<SubgroupSet> normal_subgroups(const CayleyGroup& g,
                                          const std::vector<SubgroupSet>& subs);

// |C(K)|: number of subgroups permuting with K.
Int commuting_set_size(const CayleyGroup& g, const std::vector<SubgroupSet>& subs,
                       const SubgroupSet& k);

// JSON document {order, labels, table} for external inspection.
std::string to_json(const CayleyGroup& g);

}  // namespace sdeg::cayley
