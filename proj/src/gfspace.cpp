#include "sdeg/gfspace.hpp"

#include "sdeg/qcount.hpp"

#include <algorithm>
#include <stdexcept>

namespace sdeg::gf {

namespace {

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    return static_cast<std::uint32_t>(powmod(a, p - 2, p));
}

// In-place RREF over F_p. Returns pivot columns in increasing order.
std::vector<int> rref(std::vector<std::vector<std::uint32_t>>& rows, std::uint32_t p) {
    std::vector<int> pivots;
    if (rows.empty()) return pivots;
    const int cols = static_cast<int>(rows[0].size());
    std::size_t rank = 0;
    for (int c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t sel = rank;
        while (sel < rows.size() && rows[sel][c] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[rank], rows[sel]);
        const std::uint32_t inv = inv_mod(rows[rank][c], p);
        for (int j = c; j < cols; ++j)
            rows[rank][j] = static_cast<std::uint32_t>(std::uint64_t(rows[rank][j]) * inv % p);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == rank || rows[i][c] == 0) continue;
            const std::uint64_t f = rows[i][c];
            for (int j = c; j < cols; ++j)
                rows[i][j] = static_cast<std::uint32_t>(
                    (rows[i][j] + (p - 1) * f % p * rows[rank][j]) % p);
        }
        pivots.push_back(c);
        ++rank;
    }
    rows.resize(rank);
    return pivots;
}

void check_same_ambient(const Subspace& t, const Subspace& u) {
    if (t.p != u.p || t.ambient != u.ambient)
        throw std::invalid_argument("subspaces have mismatched ambient space");
}

}  // namespace

bool FpVector::is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](std::uint32_t c) { return c == 0; });
}

FpVector fp_add(const FpVector& a, const FpVector& b) {
    if (a.p != b.p || a.coords.size() != b.coords.size())
        throw std::invalid_argument("fp_add: mismatched vectors");
    FpVector r = a;
    for (std::size_t i = 0; i < r.coords.size(); ++i)
        r.coords[i] = (r.coords[i] + b.coords[i]) % a.p;
    return r;
}

FpVector fp_sub(const FpVector& a, const FpVector& b) {
    if (a.p != b.p || a.coords.size() != b.coords.size())
        throw std::invalid_argument("fp_sub: mismatched vectors");
    FpVector r = a;
    for (std::size_t i = 0; i < r.coords.size(); ++i)
        r.coords[i] = (r.coords[i] + a.p - b.coords[i]) % a.p;
    return r;
}

FpVector fp_scale(const FpVector& a, std::uint32_t c) {
    FpVector r = a;
    for (auto& x : r.coords)
        x = static_cast<std::uint32_t>(std::uint64_t(x) * c % a.p);
    return r;
}

bool Subspace::contains(const FpVector& v) const {
    if (v.p != p || v.dim() != ambient)
        throw std::invalid_argument("contains: mismatched ambient space");
    // Reduce v against the RREF basis; containment iff the residue is zero.
    FpVector w = v;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const std::uint32_t c = w.coords[pivots[i]];
        if (c == 0) continue;
        for (int j = 0; j < ambient; ++j)
            w.coords[j] = (w.coords[j] + (p - c) * std::uint64_t(basis[i][j])) % p;
    }
    return w.is_zero();
}

Subspace canonicalize(std::uint32_t p, int ambient, const std::vector<FpVector>& vectors) {
    Subspace s;
    s.p = p;
    s.ambient = ambient;
    std::vector<std::vector<std::uint32_t>> rows;
    rows.reserve(vectors.size());
    for (const auto& v : vectors) {
        if (v.p != p || v.dim() != ambient)
            throw std::invalid_argument("canonicalize: mismatched ambient dimension or modulus");
        rows.push_back(v.coords);
    }
    s.pivots = rref(rows, p);
    s.basis = std::move(rows);
    return s;
}

std::vector<Subspace> enumerate_subspaces(std::uint32_t p, int m, int k) {
    if (k < 0 || k > m) throw std::invalid_argument("enumerate_subspaces: k out of range");
    std::vector<Subspace> out;

    std::vector<int> piv(k);
    for (int i = 0; i < k; ++i) piv[i] = i;
    while (true) {
        std::vector<bool> is_pivot(m, false);
        for (int c : piv) is_pivot[c] = true;
        // Free entries: (row i, col j) with j > piv[i] and j not a pivot column.
        std::vector<std::pair<int, int>> free_pos;
        for (int i = 0; i < k; ++i)
            for (int j = piv[i] + 1; j < m; ++j)
                if (!is_pivot[j]) free_pos.emplace_back(i, j);

        std::vector<std::uint32_t> vals(free_pos.size(), 0);
        while (true) {
            Subspace s;
            s.p = p;
            s.ambient = m;
            s.pivots = piv;
            s.basis.assign(k, std::vector<std::uint32_t>(m, 0));
            for (int i = 0; i < k; ++i) s.basis[i][piv[i]] = 1;
            for (std::size_t f = 0; f < free_pos.size(); ++f)
                s.basis[free_pos[f].first][free_pos[f].second] = vals[f];
            out.push_back(std::move(s));

            int f = static_cast<int>(vals.size()) - 1;
            while (f >= 0 && vals[f] == p - 1) vals[f--] = 0;
            if (f < 0) break;
            ++vals[f];
        }

        if (k == 0) break;
        int i = k - 1;
        while (i >= 0 && piv[i] == m - (k - i)) --i;
        if (i < 0) break;
        ++piv[i];
        for (int j = i + 1; j < k; ++j) piv[j] = piv[j - 1] + 1;
    }
    return out;
}

std::vector<Subspace> enumerate_all_subspaces(std::uint32_t p, int m) {
    std::vector<Subspace> out;
    for (int k = 0; k <= m; ++k) {
        auto layer = enumerate_subspaces(p, m, k);
        out.insert(out.end(), std::make_move_iterator(layer.begin()),
                   std::make_move_iterator(layer.end()));
    }
    return out;
}

Subspace sum(const Subspace& t, const Subspace& u) {
    check_same_ambient(t, u);
    std::vector<std::vector<std::uint32_t>> rows = t.basis;
    rows.insert(rows.end(), u.basis.begin(), u.basis.end());
    Subspace s;
    s.p = t.p;
    s.ambient = t.ambient;
    s.pivots = rref(rows, t.p);
    s.basis = std::move(rows);
    return s;
}

Subspace intersect(const Subspace& t, const Subspace& u) {
    check_same_ambient(t, u);
    const int m = t.ambient;
    // Zassenhaus: reduce [T|T; U|0]; rows with zero left half span the
    // intersection in the right half.
    std::vector<std::vector<std::uint32_t>> rows;
    for (const auto& r : t.basis) {
        std::vector<std::uint32_t> row(2 * m, 0);
        for (int j = 0; j < m; ++j) row[j] = row[m + j] = r[j];
        rows.push_back(std::move(row));
    }
    for (const auto& r : u.basis) {
        std::vector<std::uint32_t> row(2 * m, 0);
        for (int j = 0; j < m; ++j) row[j] = r[j];
        rows.push_back(std::move(row));
    }
    rref(rows, t.p);
    std::vector<std::vector<std::uint32_t>> right;
    for (const auto& row : rows) {
        bool left_zero = std::all_of(row.begin(), row.begin() + m,
                                     [](std::uint32_t c) { return c == 0; });
        if (left_zero)
            right.emplace_back(row.begin() + m, row.end());
    }
    Subspace s;
    s.p = t.p;
    s.ambient = m;
    s.pivots = rref(right, t.p);
    s.basis = std::move(right);
    return s;
}

FpVector coset_label(const Subspace& t, const FpVector& v) {
    if (v.p != t.p || v.dim() != t.ambient)
        throw std::invalid_argument("coset_label: mismatched ambient space");
    FpVector w = v;
    const std::uint32_t p = t.p;
    for (std::size_t i = 0; i < t.basis.size(); ++i) {
        const std::uint32_t c = w.coords[t.pivots[i]];
        if (c == 0) continue;
        for (int j = 0; j < t.ambient; ++j)
            w.coords[j] = (w.coords[j] + (p - c) * std::uint64_t(t.basis[i][j])) % p;
    }
    return w;
}

PairProfile pair_profile(std::uint32_t p, int m) {
    PairProfile prof;
    prof.p = p;
    prof.m = m;
    prof.counts.assign(m + 1, std::vector<std::vector<Int>>(m + 1, std::vector<Int>(m + 1, 0)));
    const Int P(p);
    for (int s = 0; s <= m; ++s) {
        const Int ns = qcount::gaussian_rec(m, P, s);
        for (int t = 0; t <= m; ++t) {
            const int lo = std::max(0, s + t - m);
            const int hi = std::min(s, t);
            for (int i = lo; i <= hi; ++i) {
                prof.counts[s][t][i] = ns * qcount::gaussian_rec(s, P, i) *
                                       qcount::gaussian_rec(m - s, P, t - i) *
                                       ipow(P, std::uint64_t(s - i) * (t - i));
            }
        }
    }
    return prof;
}

PairProfile pair_profile_exhaustive(std::uint32_t p, int m) {
    PairProfile prof;
    prof.p = p;
    prof.m = m;
    prof.counts.assign(m + 1, std::vector<std::vector<Int>>(m + 1, std::vector<Int>(m + 1, 0)));
    const auto all = enumerate_all_subspaces(p, m);
    for (const auto& t : all)
        for (const auto& u : all)
            prof.counts[t.dim()][u.dim()][intersect(t, u).dim()] += 1;
    return prof;
}

std::size_t SubspaceHash::operator()(const Subspace& s) const {
    std::size_t h = std::hash<int>()(s.ambient) * 31 + s.p;
    for (const auto& row : s.basis)
        for (std::uint32_t c : row)
            h = h * 1000003u + c + 1;
    return h;
}

}  // namespace sdeg::gf
