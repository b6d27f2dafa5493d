#pragma once

// Euler characteristics of finite categories via weightings and
// coweightings, the alternating sum over a cover, and a Möbius-function
// cross-check for posets. All arithmetic is exact.

#include "catnerve/cech.hpp"
#include "catnerve/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace catnerve {

/// ζ(a, b) = |hom(a, b)| over the canonical object order.
inline ZMatrix zeta_integer(const FinCategory& cat) {
    const std::size_t n = cat.object_count();
    ZMatrix z(n, n);
    for (ObjId a = 0; a < n; ++a)
        for (ObjId b = 0; b < n; ++b) z(a, b) = static_cast<long long>(cat.hom(a, b).size());
    return z;
}

inline QMatrix zeta_matrix(const FinCategory& cat) {
    const ZMatrix z = zeta_integer(cat);
    QMatrix q(z.rows(), z.cols());
    for (std::size_t i = 0; i < z.rows(); ++i)
        for (std::size_t j = 0; j < z.cols(); ++j) q(i, j) = Rational(z(i, j));
    return q;
}

enum class Side { weight, coweight };

/// A weighting (ζ w = u) or coweighting (v ζ = u*), if one exists.
inline std::optional<std::vector<Rational>> solve_weighting(const FinCategory& cat, Side side,
                                                            FreeVariables policy = FreeVariables::zero) {
    const ZMatrix z = zeta_integer(cat);
    const std::vector<Integer> ones(cat.object_count(), Integer(1));
    return solve(side == Side::weight ? z : z.transposed(), ones, policy);
}

struct EulerResult {
    std::optional<Rational> chi;
    std::optional<std::vector<Rational>> weighting;
    std::optional<std::vector<Rational>> coweighting;
    std::string reason;

    bool has_chi() const { return chi.has_value(); }
};

inline Rational sum(const std::vector<Rational>& v) {
    Rational s = 0;
    for (const auto& x : v) s += x;
    return s;
}

/// χ = Σ w = Σ v, present iff both a weighting and a coweighting exist.
inline EulerResult euler_characteristic(const FinCategory& cat) {
    EulerResult r;
    r.weighting = solve_weighting(cat, Side::weight);
    r.coweighting = solve_weighting(cat, Side::coweight);
    if (!r.weighting && !r.coweighting) {
        r.reason = "no weighting and no coweighting";
    } else if (!r.weighting) {
        r.reason = "no weighting";
    } else if (!r.coweighting) {
        r.reason = "no coweighting";
    } else {
        const Rational w = sum(*r.weighting), v = sum(*r.coweighting);
        if (w != v) throw std::logic_error("weighting and coweighting sums differ");
        r.chi = w;
    }
    return r;
}

inline std::optional<Rational> chi(const FinCategory& cat) { return euler_characteristic(cat).chi; }
inline std::optional<Rational> chi(const Subcategory& sub) { return euler_characteristic(sub.as_category()).chi; }

struct InclusionExclusionTerm {
    std::vector<std::string> tuple;
    int sign = 1;
    std::optional<Rational> chi;
};

/// The terms (−1)^i χ(D_{a0…ai}) over strictly increasing tuples.
inline std::vector<InclusionExclusionTerm> inclusion_exclusion_terms(const Cover& cover) {
    std::vector<InclusionExclusionTerm> out;
    for (std::size_t i = 0; i < cover.size(); ++i)
        for (const auto& piece : level(cover, i, Variant::reduced))
            out.push_back({piece.tuple.labels, i % 2 == 0 ? 1 : -1, chi(piece.category)});
    return out;
}

/// Σ_i Σ_{a0<…<ai} (−1)^i χ(D_{a0…ai}); absent if some piece has no χ.
inline std::optional<Rational> inclusion_exclusion_sum(const Cover& cover) {
    Rational total = 0;
    for (const auto& term : inclusion_exclusion_terms(cover)) {
        if (!term.chi) return std::nullopt;
        total += term.sign * *term.chi;
    }
    return total;
}

struct TwoSetReport {
    ValidationReport report;
    std::optional<Rational> chi_union, chi_a, chi_b, chi_intersection;
    bool ok() const { return report.ok(); }
};

/// χ(A∪B) = χ(A) + χ(B) − χ(A∩B) for two ideals or two filters.
inline TwoSetReport two_set_formula(const Subcategory& A, const Subcategory& B) {
    TwoSetReport out;
    const auto ca = classify_subcategory(A), cb = classify_subcategory(B);
    if (!(ca.is_ideal && cb.is_ideal) && !(ca.is_filter && cb.is_filter))
        out.report.add("hypothesis", {}, "the two subcategories are neither both ideals nor both filters");
    out.chi_union = chi(union_closure({A, B}));
    out.chi_a = chi(A);
    out.chi_b = chi(B);
    out.chi_intersection = chi(intersect({A, B}));
    const char* names[] = {"A∪B", "A", "B", "A∩B"};
    const std::optional<Rational>* values[] = {&out.chi_union, &out.chi_a, &out.chi_b, &out.chi_intersection};
    bool all = true;
    for (int i = 0; i < 4; ++i)
        if (!*values[i]) {
            out.report.add("hypothesis", {names[i]}, std::string(names[i]) + " has no Euler characteristic");
            all = false;
        }
    if (all && *out.chi_union != *out.chi_a + *out.chi_b - *out.chi_intersection)
        out.report.add("equality", {}, "χ(A∪B) = " + to_string(*out.chi_union) + " but χ(A)+χ(B)−χ(A∩B) = " +
                                           to_string(*out.chi_a + *out.chi_b - *out.chi_intersection));
    return out;
}

/// Hom-sets of size at most one and no two-way arrows between distinct objects.
inline bool is_poset_category(const FinCategory& cat) {
    for (ObjId x = 0; x < cat.object_count(); ++x)
        for (ObjId y = 0; y < cat.object_count(); ++y)
            if (cat.hom(x, y).size() > 1) return false;
    return is_acyclic(cat);
}

/// χ of a poset as Σ_{x ≤ y} μ(x, y), with μ from its recursive definition.
inline Rational mobius_oracle(const FinCategory& poset) {
    if (!is_poset_category(poset)) throw std::invalid_argument(poset.name() + " is not a poset category");
    const std::size_t n = poset.object_count();
    auto leq = [&](ObjId x, ObjId y) { return !poset.hom(x, y).empty(); };
    std::map<std::pair<ObjId, ObjId>, Integer> memo;
    std::function<Integer(ObjId, ObjId)> mu = [&](ObjId x, ObjId y) -> Integer {
        if (x == y) return 1;
        if (!leq(x, y)) return 0;
        if (auto it = memo.find({x, y}); it != memo.end()) return it->second;
        Integer s = 0;
        for (ObjId z = 0; z < n; ++z)
            if (z != y && leq(x, z) && leq(z, y)) s -= mu(x, z);
        memo[{x, y}] = s;
        return s;
    };
    Integer total = 0;
    for (ObjId x = 0; x < n; ++x)
        for (ObjId y = 0; y < n; ++y)
            if (leq(x, y)) total += mu(x, y);
    return Rational(total);
}

}  // namespace catnerve
