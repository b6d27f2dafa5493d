#pragma once

// Čech nerves of a cover: levels for the ordinary, ordered and reduced
// variants, and the inclusion functors induced by maps of finite ordinals.

#include "catnerve/covers.hpp"

#include <functional>
#include <string>
#include <vector>

namespace catnerve {

enum class Variant { ordinary, ordered, reduced };

inline const char* to_string(Variant v) {
    switch (v) {
        case Variant::ordinary: return "ordinary";
        case Variant::ordered: return "ordered";
        case Variant::reduced: return "reduced";
    }
    return "?";
}

struct IndexTuple {
    std::vector<std::string> labels;
    Variant variant = Variant::ordinary;

    std::size_t level() const { return labels.size() - 1; }
    friend bool operator==(const IndexTuple&, const IndexTuple&) = default;
};

inline std::string join_labels(const std::vector<std::string>& labels) {
    std::string s;
    for (const auto& l : labels) s += (s.empty() ? "" : ",") + l;
    return s;
}

/// An order-preserving map [m] → [n], stored as its values φ(0), …, φ(m).
struct DeltaMap {
    std::size_t codomain = 0;  // n
    std::vector<std::size_t> values;

    std::size_t domain() const { return values.size() - 1; }  // m
    std::size_t operator()(std::size_t j) const { return values.at(j); }

    bool is_monotone() const {
        for (std::size_t j = 0; j < values.size(); ++j) {
            if (values[j] > codomain) return false;
            if (j > 0 && values[j - 1] > values[j]) return false;
        }
        return !values.empty();
    }
    bool is_injective() const {
        for (std::size_t j = 1; j < values.size(); ++j)
            if (values[j - 1] == values[j]) return false;
        return true;
    }
    bool is_surjective() const {
        std::vector<bool> hit(codomain + 1, false);
        for (auto v : values) hit.at(v) = true;
        return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
    }

    static DeltaMap identity(std::size_t n) {
        DeltaMap d{n, {}};
        for (std::size_t j = 0; j <= n; ++j) d.values.push_back(j);
        return d;
    }

    friend bool operator==(const DeltaMap&, const DeltaMap&) = default;
};

/// ψ ∘ φ
inline DeltaMap compose(const DeltaMap& psi, const DeltaMap& phi) {
    if (phi.codomain != psi.domain()) throw std::invalid_argument("Δ-maps are not composable");
    DeltaMap out{psi.codomain, {}};
    for (auto v : phi.values) out.values.push_back(psi(v));
    return out;
}

/// δ_i : [n−1] → [n], skipping i. Induces the face d_i.
inline DeltaMap face_map(std::size_t n, std::size_t i) {
    if (n == 0 || i > n) throw std::invalid_argument("face index out of range");
    DeltaMap d{n, {}};
    for (std::size_t j = 0; j <= n; ++j)
        if (j != i) d.values.push_back(j);
    return d;
}

/// σ_j : [n+1] → [n], hitting j twice. Induces the degeneracy s_j.
inline DeltaMap degeneracy_map(std::size_t n, std::size_t j) {
    if (j > n) throw std::invalid_argument("degeneracy index out of range");
    DeltaMap d{n, {}};
    for (std::size_t k = 0; k <= n + 1; ++k) d.values.push_back(k <= j ? k : k - 1);
    return d;
}

/// b_j = a_{φ(j)}
inline std::vector<std::string> pull_back(const DeltaMap& phi, const std::vector<std::string>& labels) {
    if (phi.codomain + 1 != labels.size()) throw std::invalid_argument("Δ-map codomain does not match tuple length");
    std::vector<std::string> out;
    for (auto v : phi.values) out.push_back(labels.at(v));
    return out;
}

/// Checks that labels exist and satisfy the variant's order constraint.
inline void check_tuple(const Cover& cover, const IndexTuple& t) {
    if (t.labels.empty()) throw std::invalid_argument("empty index tuple");
    std::vector<std::size_t> pos;
    for (const auto& l : t.labels) pos.push_back(cover.position(l));
    for (std::size_t j = 1; j < pos.size(); ++j) {
        if (t.variant == Variant::ordered && pos[j - 1] > pos[j])
            throw std::invalid_argument("ordered tuple (" + join_labels(t.labels) + ") is not weakly increasing");
        if (t.variant == Variant::reduced && pos[j - 1] >= pos[j])
            throw std::invalid_argument("reduced tuple (" + join_labels(t.labels) + ") is not strictly increasing");
    }
}

/// D_{a0…an}: the intersection of the named parts.
inline Subcategory intersection_of(const Cover& cover, const std::vector<std::string>& labels) {
    std::vector<Subcategory> parts;
    for (const auto& l : labels) parts.push_back(cover.part(l));
    return intersect(parts);
}

struct NerveLevelPiece {
    IndexTuple tuple;
    Subcategory category;
};

inline NerveLevelPiece level_piece(const Cover& cover, const IndexTuple& tuple) {
    check_tuple(cover, tuple);
    return {tuple, intersection_of(cover, tuple.labels)};
}

/// Every index tuple of length n+1 admitted by the variant, in lexicographic
/// index order.
inline std::vector<IndexTuple> level_tuples(const Cover& cover, std::size_t n, Variant variant) {
    std::vector<IndexTuple> out;
    const std::size_t k = cover.size();
    if (k == 0) return out;
    std::vector<std::size_t> pos(n + 1, 0);
    auto admissible = [&] {
        for (std::size_t j = 1; j <= n; ++j) {
            if (variant == Variant::ordered && pos[j - 1] > pos[j]) return false;
            if (variant == Variant::reduced && pos[j - 1] >= pos[j]) return false;
        }
        return true;
    };
    while (true) {
        if (admissible()) {
            IndexTuple t{{}, variant};
            for (auto p : pos) t.labels.push_back(cover.index_order[p]);
            out.push_back(std::move(t));
        }
        std::size_t j = n + 1;
        while (j > 0 && pos[j - 1] + 1 == k) pos[--j] = 0;
        if (j == 0) break;
        ++pos[j - 1];
    }
    return out;
}

inline constexpr std::size_t default_ordinary_level_cap = 4;

/// Level n of the nerve. Empty intersections are kept as empty pieces.
inline std::vector<NerveLevelPiece> level(const Cover& cover, std::size_t n, Variant variant,
                                          std::size_t ordinary_cap = default_ordinary_level_cap) {
    if (variant == Variant::ordinary && n > ordinary_cap)
        throw std::invalid_argument("ordinary nerve level " + std::to_string(n) + " exceeds the cap " +
                                    std::to_string(ordinary_cap));
    std::vector<NerveLevelPiece> out;
    if (variant == Variant::reduced && n >= cover.size()) return out;
    for (auto& t : level_tuples(cover, n, variant)) out.push_back({t, intersection_of(cover, t.labels)});
    return out;
}

inline std::string piece_name(const std::vector<std::string>& labels) { return "D_{" + join_labels(labels) + "}"; }

/// A functor between nerve pieces together with the tuples it connects.
struct NerveMap {
    IndexTuple source;
    IndexTuple target;
    FunctorMap functor;
};

/// φ_* : D_{a0…an} → D_{b0…bm} with b_j = a_{φ(j)}; an inclusion.
inline NerveMap induced_functor(const Cover& cover, const DeltaMap& phi, const IndexTuple& tuple) {
    check_tuple(cover, tuple);
    if (!phi.is_monotone()) throw std::invalid_argument("Δ-map is not order preserving");
    if (tuple.variant == Variant::reduced && !phi.is_injective())
        throw std::invalid_argument("reduced nerve admits only injective Δ-maps");
    IndexTuple target{pull_back(phi, tuple.labels), tuple.variant};

    const Subcategory src_sub = intersection_of(cover, tuple.labels);
    const Subcategory tgt_sub = intersection_of(cover, target.labels);
    const CategoryRef src = share(src_sub.as_category(piece_name(tuple.labels)));
    const CategoryRef tgt = share(tgt_sub.as_category(piece_name(target.labels)));

    FunctorMap F{src, tgt, {}, {}};
    for (const auto& o : src->objects()) F.object_map.push_back(tgt->object(o));
    for (const auto& m : src->morphisms()) F.morphism_map.push_back(tgt->morphism_id(m.id));
    return {tuple, std::move(target), std::move(F)};
}

/// The face and degeneracy functors used by check_simplicial_identities;
/// replaceable so a corrupted structure map can be checked.
struct SimplicialOps {
    std::function<NerveMap(const Cover&, std::size_t, const IndexTuple&)> face;
    std::function<NerveMap(const Cover&, std::size_t, const IndexTuple&)> degeneracy;

    static SimplicialOps standard() {
        return {[](const Cover& c, std::size_t i, const IndexTuple& t) {
                    return induced_functor(c, face_map(t.level(), i), t);
                },
                [](const Cover& c, std::size_t j, const IndexTuple& t) {
                    return induced_functor(c, degeneracy_map(t.level(), j), t);
                }};
    }
};

namespace detail {
inline NerveMap then(const NerveMap& first, const NerveMap& second) {
    return {first.source, second.target, compose(second.functor, first.functor)};
}

inline bool same(const NerveMap& a, const NerveMap& b) {
    return a.target.labels == b.target.labels && a.functor.same_maps(b.functor);
}

inline NerveMap identity_map(const Cover& cover, const IndexTuple& t) {
    return induced_functor(cover, DeltaMap::identity(t.level()), t);
}
}  // namespace detail

/// Verifies the simplicial identities as equalities of composed functors on
/// every tuple of level at most up_to_n.
///
///   d_i d_j = d_{j−1} d_i            (i < j)
///   s_i s_j = s_{j+1} s_i            (i ≤ j)
///   d_i s_j = s_{j−1} d_i            (i < j)
///   d_j s_j = d_{j+1} s_j = id
///   d_i s_j = s_j d_{i−1}            (i > j + 1)
///
/// The reduced variant has faces only.
inline ValidationReport check_simplicial_identities(const Cover& cover, std::size_t up_to_n,
                                                    Variant variant = Variant::ordinary,
                                                    const SimplicialOps& ops = SimplicialOps::standard()) {
    using detail::same;
    using detail::then;
    ValidationReport report;
    auto fail = [&](const std::string& rule, const IndexTuple& t, const std::string& what) {
        report.add(rule, t.labels, what + " on (" + join_labels(t.labels) + ")");
    };
    const bool degeneracies = variant != Variant::reduced;

    for (std::size_t n = 0; n <= up_to_n; ++n) {
        if (variant == Variant::reduced && n >= cover.size()) break;
        for (const auto& t : level_tuples(cover, n, variant)) {
            for (std::size_t j = 1; n >= 2 && j <= n; ++j)
                for (std::size_t i = 0; i < j; ++i) {
                    auto lhs = then(ops.face(cover, j, t), ops.face(cover, i, ops.face(cover, j, t).target));
                    auto rhs = then(ops.face(cover, i, t), ops.face(cover, j - 1, ops.face(cover, i, t).target));
                    if (!same(lhs, rhs))
                        fail("face-face", t,
                             "d" + std::to_string(i) + " d" + std::to_string(j) + " != d" + std::to_string(j - 1) +
                                 " d" + std::to_string(i));
                }
            if (!degeneracies) continue;
            for (std::size_t j = 0; j <= n; ++j)
                for (std::size_t i = 0; i <= j; ++i) {
                    auto sj = ops.degeneracy(cover, j, t);
                    auto lhs = then(sj, ops.degeneracy(cover, i, sj.target));
                    auto si = ops.degeneracy(cover, i, t);
                    auto rhs = then(si, ops.degeneracy(cover, j + 1, si.target));
                    if (!same(lhs, rhs))
                        fail("degeneracy-degeneracy", t,
                             "s" + std::to_string(i) + " s" + std::to_string(j) + " != s" + std::to_string(j + 1) +
                                 " s" + std::to_string(i));
                }
            const NerveMap id = detail::identity_map(cover, t);
            for (std::size_t j = 0; j <= n; ++j) {
                const NerveMap sj = ops.degeneracy(cover, j, t);
                for (std::size_t i = 0; i <= n + 1; ++i) {
                    const NerveMap lhs = then(sj, ops.face(cover, i, sj.target));
                    std::string expect;
                    bool ok = true;
                    if (i < j) {
                        auto di = ops.face(cover, i, t);
                        ok = same(lhs, then(di, ops.degeneracy(cover, j - 1, di.target)));
                        expect = "s" + std::to_string(j - 1) + " d" + std::to_string(i);
                    } else if (i == j || i == j + 1) {
                        ok = same(lhs, id);
                        expect = "id";
                    } else {
                        auto di = ops.face(cover, i - 1, t);
                        ok = same(lhs, then(di, ops.degeneracy(cover, j, di.target)));
                        expect = "s" + std::to_string(j) + " d" + std::to_string(i - 1);
                    }
                    if (!ok) fail("face-degeneracy", t, "d" + std::to_string(i) + " s" + std::to_string(j) + " != " + expect);
                }
            }
        }
    }
    return report;
}

}  // namespace catnerve
