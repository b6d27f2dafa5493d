#pragma once

// The Grothendieck construction of the reduced Čech nerve of a cover, its
// projection to the covered category, the left adjoint for ideal covers,
// hom-sets of the ordered construction and reindexing under a new order.
//
// Direction convention: the nerve is a diagram over Δ^op, so a morphism
// (φ, f) : x_{a0…an} → y_{b0…bm} has φ : [m] → [n] with b_j = a_{φ(j)} and
// f : x → y in D_{b0…bm}. Structural morphisms run from longer tuples to
// shorter ones. Composition is
//
//   (φ2, f2) ∘ (φ1, f1) = (φ1 ∘ φ2, f2 ∘ f1)
//
// because every structure map of the nerve is an inclusion.

#include "catnerve/cech.hpp"

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace catnerve {

/// x_{a0…an}
struct GrObject {
    std::vector<std::string> tuple;
    ObjId obj = npos;  // in the parent category

    friend bool operator==(const GrObject&, const GrObject&) = default;
};

/// (φ, f) : source → target
struct GrMorphism {
    DeltaMap phi;
    MorId f = npos;  // in the parent category
    std::size_t source = npos;
    std::size_t target = npos;
};

inline std::string gr_object_name(const FinCategory& parent, const GrObject& X) {
    return parent.object_name(X.obj) + "@" + join_labels(X.tuple);
}

/// gr of the reduced nerve as an explicit finite category, with the
/// (tuple, object) and (φ, f) labels of its objects and morphisms.
class GrCategory {
public:
    const Cover& cover() const { return cover_; }
    const CategoryRef& category() const { return category_; }
    const std::vector<GrObject>& objects() const { return objects_; }
    const std::vector<GrMorphism>& morphisms() const { return morphisms_; }
    const GrObject& object(std::size_t i) const { return objects_.at(i); }
    const GrMorphism& morphism(std::size_t i) const { return morphisms_.at(i); }

    std::optional<std::size_t> find_object(const std::vector<std::string>& tuple, ObjId x) const {
        auto it = object_index_.find({tuple, x});
        if (it == object_index_.end()) return std::nullopt;
        return it->second;
    }
    std::optional<std::size_t> find_morphism(std::size_t source, const DeltaMap& phi, MorId f) const {
        auto it = morphism_index_.find({source, phi.values, f});
        if (it == morphism_index_.end()) return std::nullopt;
        return it->second;
    }

    std::string object_name(std::size_t i) const { return category_->object_name(i); }

    friend GrCategory gr_reduced(const Cover& cover);

private:
    Cover cover_;
    CategoryRef category_;
    std::vector<GrObject> objects_;
    std::vector<GrMorphism> morphisms_;
    std::map<std::pair<std::vector<std::string>, ObjId>, std::size_t> object_index_;
    std::map<std::tuple<std::size_t, std::vector<std::size_t>, MorId>, std::size_t> morphism_index_;
};

namespace detail {
/// Injective order-preserving maps [m] → [n] for all m ≤ n, by size then
/// lexicographically.
inline std::vector<DeltaMap> injections_into(std::size_t n) {
    std::vector<DeltaMap> out;
    for (std::size_t size = 1; size <= n + 1; ++size) {
        std::vector<std::size_t> pick(size);
        for (std::size_t j = 0; j < size; ++j) pick[j] = j;
        while (true) {
            out.push_back({n, pick});
            std::size_t j = size;
            while (j > 0 && pick[j - 1] == n + 1 - size + (j - 1)) --j;
            if (j == 0) break;
            ++pick[j - 1];
            for (std::size_t k = j; k < size; ++k) pick[k] = pick[k - 1] + 1;
        }
    }
    return out;
}
}  // namespace detail

inline GrCategory gr_reduced(const Cover& cover) {
    if (!is_cover(cover)) throw std::invalid_argument("cover " + cover.name + " does not cover " + cover.parent->name());
    const FinCategory& parent = *cover.parent;
    GrCategory gr;
    gr.cover_ = cover;

    std::vector<Subcategory> pieces;  // per object, its intersection category
    for (std::size_t n = 0; n < cover.size(); ++n)
        for (const auto& piece : level(cover, n, Variant::reduced))
            for (ObjId x : piece.category.object_ids()) {
                gr.object_index_.emplace(std::pair{piece.tuple.labels, x}, gr.objects_.size());
                gr.objects_.push_back({piece.tuple.labels, x});
                pieces.push_back(piece.category);
            }

    std::vector<std::string> obj_names;
    for (const auto& X : gr.objects_) obj_names.push_back(gr_object_name(parent, X));

    std::vector<Morphism> mors;
    std::vector<MorId> identities;
    auto add = [&](GrMorphism m, std::string name) {
        gr.morphism_index_.emplace(std::tuple{m.source, m.phi.values, m.f}, gr.morphisms_.size());
        mors.push_back({std::move(name), m.source, m.target});
        gr.morphisms_.push_back(std::move(m));
    };
    for (std::size_t s = 0; s < gr.objects_.size(); ++s) {
        const GrObject& X = gr.objects_[s];
        identities.push_back(mors.size());
        add({DeltaMap::identity(X.tuple.size() - 1), parent.identity(X.obj), s, s}, identity_name(obj_names[s]));
    }
    for (std::size_t s = 0; s < gr.objects_.size(); ++s) {
        const GrObject& X = gr.objects_[s];
        for (const DeltaMap& phi : detail::injections_into(X.tuple.size() - 1)) {
            const auto b = pull_back(phi, X.tuple);
            const Subcategory target_piece = intersection_of(cover, b);
            for (ObjId y : target_piece.object_ids()) {
                const std::size_t t = gr.object_index_.at({b, y});
                for (MorId f : target_piece.hom(X.obj, y)) {
                    if (t == s && f == parent.identity(X.obj)) continue;
                    add({phi, f, s, t}, parent.morphism_name(f) + "@" + join_labels(b) + "|" + join_labels(X.tuple));
                }
            }
        }
    }

    CompositionTable comp;
    std::vector<std::vector<MorId>> out(gr.objects_.size());
    for (MorId m = 0; m < gr.morphisms_.size(); ++m) out[gr.morphisms_[m].source].push_back(m);
    for (MorId m1 = 0; m1 < gr.morphisms_.size(); ++m1) {
        const GrMorphism& first = gr.morphisms_[m1];
        for (MorId m2 : out[first.target]) {
            const GrMorphism& second = gr.morphisms_[m2];
            const DeltaMap phi = compose(first.phi, second.phi);
            const MorId f = parent.compose(second.f, first.f);
            auto it = gr.morphism_index_.find({first.source, phi.values, f});
            if (it == gr.morphism_index_.end())
                throw std::logic_error("Grothendieck composite missing for " + mors[m2].id + " ∘ " + mors[m1].id);
            comp.set(m2, m1, it->second);
        }
    }
    gr.category_ = share(FinCategory("gr(" + cover.name + ")", std::move(obj_names), std::move(mors),
                                     std::move(identities), std::move(comp)));
    return gr;
}

/// The projection that forgets indices: x_{a0…an} ↦ x, (φ, f) ↦ f.
inline FunctorMap rho_tilde(const GrCategory& gr) {
    FunctorMap F{gr.category(), gr.cover().parent, {}, {}};
    for (const auto& X : gr.objects()) F.object_map.push_back(X.obj);
    for (const auto& m : gr.morphisms()) F.morphism_map.push_back(m.f);
    return F;
}

/// Labels of the parts containing x, in index order.
inline std::vector<std::string> labels_containing(const Cover& cover, ObjId x) {
    std::vector<std::string> out;
    for (const auto& l : cover.index_order)
        if (cover.part(l).has_object(x)) out.push_back(l);
    return out;
}

/// The injection φ with b_j = a_{φ(j)}, when b is a subsequence of a and a
/// has distinct labels.
inline std::optional<DeltaMap> forced_injection(const std::vector<std::string>& b, const std::vector<std::string>& a) {
    DeltaMap phi{a.size() - 1, {}};
    std::size_t k = 0;
    for (const auto& label : b) {
        while (k < a.size() && a[k] != label) ++k;
        if (k == a.size()) return std::nullopt;
        phi.values.push_back(k++);
    }
    return phi;
}

/// π(x) = x_{all a with x ∈ D_a}; π(f) = (forced φ, f). Needs an ideal cover.
inline FunctorMap pi_left_adjoint(const GrCategory& gr) {
    const Cover& cover = gr.cover();
    if (!is_ideal_cover(cover)) throw std::invalid_argument("π needs every part to be an ideal");
    const FinCategory& parent = *cover.parent;
    FunctorMap F{cover.parent, gr.category(), {}, {}};
    for (ObjId x = 0; x < parent.object_count(); ++x)
        F.object_map.push_back(gr.find_object(labels_containing(cover, x), x).value());
    for (MorId f = 0; f < parent.morphism_count(); ++f) {
        const auto a = labels_containing(cover, parent.dom(f));
        const auto b = labels_containing(cover, parent.cod(f));
        auto phi = forced_injection(b, a);
        if (!phi) throw std::logic_error("ideal containment failed for " + parent.morphism_name(f));
        auto m = gr.find_morphism(F.object_map[parent.dom(f)], *phi, f);
        if (!m) throw std::logic_error("no Grothendieck morphism for π(" + parent.morphism_name(f) + ")");
        F.morphism_map.push_back(*m);
    }
    return F;
}

enum class AdjunctionMode {
    strict,      // requires an ideal cover
    diagnostic,  // runs on any cover and reports where the bijection breaks
};

/// |C(x, ρ̃(Y))| = |gr(π(x), Y)| with f ↦ (forced φ, f) a bijection, for every
/// parent object x and Grothendieck object Y.
inline ValidationReport adjunction_check_pi(const GrCategory& gr, AdjunctionMode mode = AdjunctionMode::strict) {
    const Cover& cover = gr.cover();
    if (mode == AdjunctionMode::strict && !is_ideal_cover(cover))
        throw std::invalid_argument("adjunction check for π needs an ideal cover");
    const FinCategory& parent = *cover.parent;
    const FinCategory& G = *gr.category();
    ValidationReport report;
    for (ObjId x = 0; x < parent.object_count(); ++x) {
        const auto a = labels_containing(cover, x);
        const std::size_t px = gr.find_object(a, x).value();
        for (std::size_t Y = 0; Y < gr.objects().size(); ++Y) {
            const GrObject& target = gr.object(Y);
            const auto& lhs = parent.hom(x, target.obj);
            const auto& rhs = G.hom(px, Y);
            const std::string pair_desc = "(" + parent.object_name(x) + ", " + G.object_name(Y) + ")";
            if (lhs.size() != rhs.size()) {
                report.add("hom cardinality", {parent.object_name(x), G.object_name(Y)},
                           "|C(" + parent.object_name(x) + "," + parent.object_name(target.obj) + ")| = " +
                               std::to_string(lhs.size()) + " but |gr(π(" + parent.object_name(x) + ")," +
                               G.object_name(Y) + ")| = " + std::to_string(rhs.size()));
                continue;
            }
            if (lhs.empty()) continue;
            auto phi = forced_injection(target.tuple, a);
            if (!phi) {
                report.add("forced map", {parent.object_name(x), G.object_name(Y)}, "no index map for " + pair_desc);
                continue;
            }
            std::vector<MorId> image;
            for (MorId f : lhs) {
                auto m = gr.find_morphism(px, *phi, f);
                if (!m || gr.morphism(*m).target != Y) {
                    report.add("bijection", {parent.object_name(x), G.object_name(Y)},
                               parent.morphism_name(f) + " has no image in " + pair_desc);
                    continue;
                }
                image.push_back(*m);
            }
            std::sort(image.begin(), image.end());
            std::vector<MorId> sorted_rhs = rhs;
            std::sort(sorted_rhs.begin(), sorted_rhs.end());
            if (image.size() == lhs.size() && image != sorted_rhs)
                report.add("bijection", {parent.object_name(x), G.object_name(Y)}, "canonical map not onto for " + pair_desc);
        }
    }
    return report;
}

/// x_{a0…an} with a weakly increasing tuple; an object of the ordered
/// construction, which is never materialized.
struct OrderedGrObjectDescriptor {
    std::vector<std::string> tuple;
    ObjId obj = npos;
};

struct OrderedGrMorphism {
    DeltaMap phi;
    MorId f = npos;
};

inline void check_descriptor(const Cover& cover, const OrderedGrObjectDescriptor& X) {
    check_tuple(cover, {X.tuple, Variant::ordered});
    if (X.obj >= cover.parent->object_count() || !intersection_of(cover, X.tuple).has_object(X.obj))
        throw std::invalid_argument("object is not in D_{" + join_labels(X.tuple) + "}");
}

/// All (φ, f) : X → Y in the Grothendieck construction of the ordered nerve.
inline std::vector<OrderedGrMorphism> ordered_gr_hom(const Cover& cover, const OrderedGrObjectDescriptor& X,
                                                     const OrderedGrObjectDescriptor& Y) {
    check_descriptor(cover, X);
    check_descriptor(cover, Y);
    const std::size_t n = X.tuple.size() - 1;
    const auto fibre = intersection_of(cover, Y.tuple).hom(X.obj, Y.obj);
    std::vector<OrderedGrMorphism> out;
    std::vector<std::size_t> values;
    std::function<void(std::size_t)> extend = [&](std::size_t j) {
        if (j == Y.tuple.size()) {
            for (MorId f : fibre) out.push_back({DeltaMap{n, values}, f});
            return;
        }
        for (std::size_t v = values.empty() ? 0 : values.back(); v <= n; ++v) {
            if (X.tuple[v] != Y.tuple[j]) continue;
            values.push_back(v);
            extend(j + 1);
            values.pop_back();
        }
    };
    extend(0);
    return out;
}

struct Reduction {
    GrObject object;
    DeltaMap psi;  // surjective [n] → [n'], α_{ψ(j)} = a_j
};

/// Removes duplicate indices from a weakly increasing tuple.
inline Reduction reduce_object(const OrderedGrObjectDescriptor& X) {
    Reduction r{{{}, X.obj}, {}};
    for (const auto& label : X.tuple) {
        if (r.object.tuple.empty() || r.object.tuple.back() != label) r.object.tuple.push_back(label);
        r.psi.values.push_back(r.object.tuple.size() - 1);
    }
    r.psi.codomain = r.object.tuple.size() - 1;
    return r;
}

/// Every weakly increasing descriptor with tuple length at most max_length.
inline std::vector<OrderedGrObjectDescriptor> ordered_descriptors(const Cover& cover, std::size_t max_length) {
    std::vector<OrderedGrObjectDescriptor> out;
    for (std::size_t n = 0; n < max_length; ++n)
        for (const auto& t : level_tuples(cover, n, Variant::ordered))
            for (ObjId x : intersection_of(cover, t.labels).object_ids()) out.push_back({t.labels, x});
    return out;
}

/// L ⊣ R at the level of hom-sets: for every reduced Z and ordered Y with
/// tuple length at most max_length, (φ, f) ↦ (φ', f) is a bijection
/// gr°(L Z, Y) → gr̃(Z, R Y), where φ' is φ pushed through ψ.
inline ValidationReport adjunction_check_R(const GrCategory& gr, std::size_t max_length = 3) {
    const Cover& cover = gr.cover();
    const FinCategory& G = *gr.category();
    ValidationReport report;
    for (const auto& Y : ordered_descriptors(cover, max_length)) {
        const Reduction red = reduce_object(Y);
        const std::size_t RY = gr.find_object(red.object.tuple, red.object.obj).value();
        const std::string yname = cover.parent->object_name(Y.obj) + "@" + join_labels(Y.tuple);
        for (std::size_t Z = 0; Z < gr.objects().size(); ++Z) {
            const GrObject& z = gr.object(Z);
            const auto ordered = ordered_gr_hom(cover, {z.tuple, z.obj}, Y);
            const auto& reduced = G.hom(Z, RY);
            if (ordered.size() != reduced.size()) {
                report.add("hom cardinality", {G.object_name(Z), yname},
                           "|gr~(" + G.object_name(Z) + ", R " + yname + ")| = " + std::to_string(reduced.size()) +
                               " but |gr°(L " + G.object_name(Z) + ", " + yname + ")| = " + std::to_string(ordered.size()));
                continue;
            }
            std::vector<MorId> image;
            for (const auto& m : ordered) {
                DeltaMap pushed{m.phi.codomain, std::vector<std::size_t>(red.psi.codomain + 1, npos)};
                bool consistent = true;
                for (std::size_t j = 0; j < m.phi.values.size(); ++j) {
                    auto& slot = pushed.values[red.psi(j)];
                    if (slot != npos && slot != m.phi(j)) consistent = false;
                    slot = m.phi(j);
                }
                auto found = consistent ? gr.find_morphism(Z, pushed, m.f) : std::nullopt;
                if (!found || gr.morphism(*found).target != RY) {
                    report.add("bijection", {G.object_name(Z), yname}, "no reduced image for a morphism into " + yname);
                    continue;
                }
                image.push_back(*found);
            }
            std::sort(image.begin(), image.end());
            std::vector<MorId> sorted = reduced;
            std::sort(sorted.begin(), sorted.end());
            if (image.size() == ordered.size() && image != sorted)
                report.add("bijection", {G.object_name(Z), yname}, "reduction map not bijective");
        }
    }
    return report;
}

namespace detail {
/// The functor gr(from) → gr(to) that re-sorts every tuple by the target's
/// index order. Both must be built from the same parts.
inline FunctorMap reindex(const GrCategory& from, const GrCategory& to) {
    const Cover& target_cover = to.cover();
    auto sorted = [&](std::vector<std::string> labels) {
        std::sort(labels.begin(), labels.end(), [&](const std::string& l, const std::string& r) {
            return target_cover.position(l) < target_cover.position(r);
        });
        return labels;
    };
    FunctorMap F{from.category(), to.category(), {}, {}};
    for (const auto& X : from.objects()) {
        auto idx = to.find_object(sorted(X.tuple), X.obj);
        if (!idx) throw std::logic_error("reindexing lost an object");
        F.object_map.push_back(*idx);
    }
    for (const auto& m : from.morphisms()) {
        const std::size_t s = F.object_map[m.source];
        const auto source_labels = to.object(s).tuple;
        const auto target_labels = to.object(F.object_map[m.target]).tuple;
        auto phi = forced_injection(target_labels, source_labels);
        auto idx = phi ? to.find_morphism(s, *phi, m.f) : std::nullopt;
        if (!idx) throw std::logic_error("reindexing lost a morphism");
        F.morphism_map.push_back(*idx);
    }
    return F;
}
}  // namespace detail

struct ReorderIso {
    GrCategory first;   // under the cover's own order
    GrCategory second;  // under the alternative order
    FunctorMap forward;
    FunctorMap backward;
    ValidationReport report;
};

/// The isomorphism between gr of the reduced nerve under two total orders of
/// the index set, with its inverse and a verification report.
inline ReorderIso reorder_iso(const Cover& cover, const std::vector<std::string>& order2) {
    GrCategory g1 = gr_reduced(cover);
    GrCategory g2 = gr_reduced(cover.with_order(order2));
    FunctorMap F = detail::reindex(g1, g2);
    FunctorMap G = detail::reindex(g2, g1);
    ValidationReport report;
    auto check = [&](const FunctorMap& H, const std::string& which) {
        auto r = validate_functor(H);
        report.merge(r.report);
        if (!r.isomorphism) report.add("isomorphism", {which}, which + " is not bijective");
    };
    check(F, "F");
    check(G, "G");
    if (!is_identity_functor(compose(G, F))) report.add("inverse", {"GF"}, "G∘F is not the identity");
    if (!is_identity_functor(compose(F, G))) report.add("inverse", {"FG"}, "F∘G is not the identity");
    return {std::move(g1), std::move(g2), std::move(F), std::move(G), std::move(report)};
}

}  // namespace catnerve
