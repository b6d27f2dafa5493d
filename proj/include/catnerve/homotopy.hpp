#pragma once

// Rational homology of the nerve of a finite category.
//
// The nondegenerate k-simplices of the nerve are chains of k composable
// non-identity morphisms. For acyclic categories there are finitely many in
// total; otherwise the complex is only built up to a requested dimension and
// marked truncated.

#include "catnerve/euler.hpp"
#include "catnerve/grothendieck.hpp"
#include "catnerve/rational.hpp"

#include <map>
#include <optional>
#include <vector>

namespace catnerve {

/// (f1, …, fk) with cod(f_i) = dom(f_{i+1}); a bare vertex when k = 0.
struct SimplexChain {
    std::vector<MorId> morphisms;
    ObjId vertex = npos;  // only for dimension 0

    std::size_t dim() const { return morphisms.size(); }
    friend bool operator==(const SimplexChain&, const SimplexChain&) = default;
};

struct ChainComplexQ {
    std::vector<std::vector<SimplexChain>> basis;  // basis[k] = k-simplices
    std::vector<ZMatrix> boundaries;               // boundaries[k] = ∂_k : C_k → C_{k−1}, k ≥ 1
    std::size_t max_dim = 0;                       // highest degree reported
    bool truncated = false;

    std::size_t top_dim() const { return basis.empty() ? 0 : basis.size() - 1; }
    std::vector<std::size_t> basis_sizes() const {
        std::vector<std::size_t> out;
        for (const auto& b : basis) out.push_back(b.size());
        return out;
    }
};

namespace detail {
inline std::vector<std::vector<SimplexChain>> enumerate_chains(const FinCategory& cat, std::size_t limit) {
    std::vector<std::vector<SimplexChain>> basis(1);
    for (ObjId x = 0; x < cat.object_count(); ++x) basis[0].push_back({{}, x});
    std::vector<SimplexChain> edges;
    for (MorId f = 0; f < cat.morphism_count(); ++f)
        if (!cat.is_identity(f)) edges.push_back({{f}, npos});
    if (limit == 0 || edges.empty()) return basis;
    basis.push_back(std::move(edges));
    while (basis.size() <= limit) {
        std::vector<SimplexChain> next;
        for (const auto& chain : basis.back())
            for (MorId g : cat.outgoing(cat.cod(chain.morphisms.back()))) {
                if (cat.is_identity(g)) continue;
                SimplexChain c = chain;
                c.morphisms.push_back(g);
                next.push_back(std::move(c));
            }
        if (next.empty()) break;
        basis.push_back(std::move(next));
    }
    return basis;
}

inline ZMatrix boundary_matrix(const FinCategory& cat, const std::vector<SimplexChain>& lower,
                               const std::vector<SimplexChain>& upper) {
    std::map<std::vector<MorId>, std::size_t> index;
    std::map<ObjId, std::size_t> vertex_index;
    for (std::size_t i = 0; i < lower.size(); ++i) {
        if (lower[i].dim() == 0)
            vertex_index[lower[i].vertex] = i;
        else
            index[lower[i].morphisms] = i;
    }
    ZMatrix d(lower.size(), upper.size());
    for (std::size_t c = 0; c < upper.size(); ++c) {
        const auto& f = upper[c].morphisms;
        const std::size_t k = f.size();
        if (k == 1) {
            d(vertex_index.at(cat.cod(f[0])), c) += 1;
            d(vertex_index.at(cat.dom(f[0])), c) -= 1;
            continue;
        }
        for (std::size_t i = 0; i <= k; ++i) {
            std::vector<MorId> face;
            if (i == 0) {
                face.assign(f.begin() + 1, f.end());
            } else if (i == k) {
                face.assign(f.begin(), f.end() - 1);
            } else {
                face.assign(f.begin(), f.begin() + (i - 1));
                const MorId composite = cat.compose(f[i], f[i - 1]);
                if (cat.is_identity(composite)) continue;  // degenerate face
                face.push_back(composite);
                face.insert(face.end(), f.begin() + (i + 1), f.end());
            }
            d(index.at(face), c) += (i % 2 == 0) ? 1 : -1;
        }
    }
    return d;
}
}  // namespace detail

/// The normalized chain complex of the nerve. Acyclic categories get the full
/// complex; other categories need max_dim and are built to max_dim + 1.
inline ChainComplexQ nerve_chains(const FinCategory& cat, std::optional<std::size_t> max_dim = std::nullopt) {
    ChainComplexQ cx;
    const bool acyclic = is_acyclic(cat);
    if (!acyclic && !max_dim) throw std::invalid_argument(cat.name() + " is not acyclic; a maximum dimension is required");
    const std::size_t limit = acyclic ? std::max<std::size_t>(cat.object_count(), 1) : *max_dim + 1;
    cx.basis = detail::enumerate_chains(cat, limit);
    cx.truncated = !acyclic;
    cx.max_dim = max_dim ? *max_dim : cx.top_dim();
    cx.boundaries.resize(cx.basis.size());
    cx.boundaries[0] = ZMatrix(0, cx.basis[0].size());
    for (std::size_t k = 1; k < cx.basis.size(); ++k)
        cx.boundaries[k] = detail::boundary_matrix(cat, cx.basis[k - 1], cx.basis[k]);
    return cx;
}

/// ∂_k ∘ ∂_{k+1} = 0 for every k.
inline bool boundaries_square_to_zero(const ChainComplexQ& cx) {
    for (std::size_t k = 1; k + 1 < cx.boundaries.size(); ++k)
        if (!is_zero(multiply(cx.boundaries[k], cx.boundaries[k + 1]))) return false;
    return true;
}

struct HomologyReport {
    std::vector<std::size_t> betti;  // b_0 … b_max_dim
    long long euler_top = 0;         // alternating count of simplices built
    bool truncated = false;
};

inline HomologyReport betti_numbers(const ChainComplexQ& cx) {
    if (!boundaries_square_to_zero(cx)) throw std::logic_error("boundary of a boundary is not zero");
    for (std::size_t k = 1; k < cx.boundaries.size(); ++k)
        if (cx.boundaries[k].rows() != cx.basis[k - 1].size() || cx.boundaries[k].cols() != cx.basis[k].size())
            throw std::invalid_argument("boundary matrix has inconsistent dimensions");
    HomologyReport r;
    r.truncated = cx.truncated;
    std::vector<std::size_t> ranks(cx.basis.size() + 1, 0);
    for (std::size_t k = 1; k < cx.boundaries.size(); ++k) ranks[k] = rank(cx.boundaries[k]);
    for (std::size_t k = 0; k <= cx.max_dim; ++k) {
        if (k >= cx.basis.size()) {
            r.betti.push_back(0);
            continue;
        }
        r.betti.push_back(cx.basis[k].size() - ranks[k] - ranks[k + 1]);
    }
    for (std::size_t k = 0; k < cx.basis.size(); ++k)
        r.euler_top += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(cx.basis[k].size());
    return r;
}

inline HomologyReport homology(const FinCategory& cat, std::optional<std::size_t> max_dim = std::nullopt) {
    return betti_numbers(nerve_chains(cat, max_dim));
}

struct HomologyComparison {
    ValidationReport report;
    HomologyReport parent;
    HomologyReport gr;
    bool ok() const { return report.ok(); }
};

inline std::string join_betti(const std::vector<std::size_t>& b) {
    std::string s;
    for (auto v : b) s += (s.empty() ? "" : " ") + std::to_string(v);
    return s;
}

/// Betti numbers of the covered category against gr of its reduced nerve.
/// Truncated complexes never count as agreement.
inline HomologyComparison compare_homology(const GrCategory& gr, std::size_t max_dim) {
    HomologyComparison cmp;
    const FinCategory& parent = *gr.cover().parent;
    const FinCategory& G = *gr.category();
    cmp.parent = homology(parent, max_dim);
    cmp.gr = homology(G, max_dim);
    if (cmp.parent.truncated || cmp.gr.truncated)
        cmp.report.add("truncated", {}, "a nerve is infinite-dimensional; truncated Betti numbers are not evidence");
    if (cmp.parent.betti != cmp.gr.betti)
        cmp.report.add("betti", {}, "betti differ: (" + join_betti(cmp.parent.betti) + ") vs (" + join_betti(cmp.gr.betti) + ")");
    return cmp;
}

inline HomologyComparison compare_homology(const Cover& cover, std::size_t max_dim) {
    return compare_homology(gr_reduced(cover), max_dim);
}

/// χ from (co)weightings against the alternating simplex count of the nerve.
inline ValidationReport euler_consistency(const FinCategory& cat) {
    ValidationReport report;
    if (!is_acyclic(cat)) {
        report.add("hypothesis", {cat.name()}, cat.name() + " is not acyclic");
        return report;
    }
    const auto e = euler_characteristic(cat);
    if (!e.chi) {
        report.add("hypothesis", {cat.name()}, cat.name() + " has no Euler characteristic: " + e.reason);
        return report;
    }
    const auto h = homology(cat);
    if (*e.chi != Rational(h.euler_top))
        report.add("euler", {cat.name()}, "χ = " + to_string(*e.chi) + " but the nerve gives " + std::to_string(h.euler_top));
    return report;
}

}  // namespace catnerve
