#pragma once

#include "sdeg/numbers.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace sdeg::gf {

// Vector over F_p, dense residue coordinates.
struct FpVector {
    std::uint32_t p = 0;
    std::vector<std::uint32_t> coords;

    int dim() const { return static_cast<int>(coords.size()); }
    bool is_zero() const;
    bool operator==(const FpVector&) const = default;
};

FpVector fp_add(const FpVector& a, const FpVector& b);
FpVector fp_sub(const FpVector& a, const FpVector& b);
FpVector fp_scale(const FpVector& a, std::uint32_t c);

// Subspace of F_p^m in reduced row-echelon form. The RREF basis is the
// unique canonical representative, so equality and ordering are structural.
struct Subspace {
    std::uint32_t p = 0;
    int ambient = 0;
    std::vector<std::vector<std::uint32_t>> basis;  // RREF rows, pivots strictly increasing
    std::vector<int> pivots;

    int dim() const { return static_cast<int>(basis.size()); }
    bool contains(const FpVector& v) const;

    bool operator==(const Subspace&) const = default;
    auto operator<=>(const Subspace&) const = default;
};

// Unique RREF subspace spanned by the given vectors; independent of input
// order and basis choice. An empty span needs explicit p and ambient.
Subspace canonicalize(std::uint32_t p, int ambient, const std::vector<FpVector>& vectors);

// All k-dimensional subspaces of F_p^m, canonical, ordered lexicographically
// by pivot-column set and then by free-entry values.
std::vector<Subspace> enumerate_subspaces(std::uint32_t p, int m, int k);

// All subspaces of F_p^m, dimensions 0..m in order.
std::vector<Subspace> enumerate_all_subspaces(std::uint32_t p, int m);

Subspace sum(const Subspace& t, const Subspace& u);
Subspace intersect(const Subspace& t, const Subspace& u);

// Canonical representative of the coset v + T: the unique member whose
// coordinates vanish at every pivot column of T.
FpVector coset_label(const Subspace& t, const FpVector& v);

// counts[s][t][i] = number of ordered subspace pairs (T, U) of F_p^m with
// dim T = s, dim U = t, dim(T cap U) = i.
struct PairProfile {
    std::uint32_t p = 0;
    int m = 0;
    std::vector<std::vector<std::vector<Int>>> counts;
};

// Closed-form profile: counts[s][t][i] =
//   a_{m,p}(s) * gauss(s,i) * gauss(m-s, t-i) * p^{(s-i)(t-i)}.
PairProfile pair_profile(std::uint32_t p, int m);

// Exhaustive profile by double enumeration; oracle for small m.
PairProfile pair_profile_exhaustive(std::uint32_t p, int m);

// Hash of the canonical basis, for unordered containers of subspaces.
struct SubspaceHash {
    std::size_t operator()(const Subspace& s) const;
};

}  // namespace sdeg::gf
