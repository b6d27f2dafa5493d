#pragma once

// Subcategories of a finite category, covers, ideals and filters.

#include "catnerve/fincat.hpp"

#include <algorithm>
#include <initializer_list>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace catnerve {

/// A subset of objects and morphisms of a parent category.
class Subcategory {
public:
    Subcategory() = default;
    Subcategory(CategoryRef parent, std::vector<bool> objects, std::vector<bool> morphisms)
        : parent_(std::move(parent)), objects_(std::move(objects)), morphisms_(std::move(morphisms)) {
        if (objects_.size() != parent_->object_count() || morphisms_.size() != parent_->morphism_count())
            throw std::invalid_argument("subcategory masks do not match the parent");
    }

    static Subcategory empty(CategoryRef parent) {
        const auto n = parent->object_count(), m = parent->morphism_count();
        return Subcategory(std::move(parent), std::vector<bool>(n, false), std::vector<bool>(m, false));
    }
    static Subcategory whole(CategoryRef parent) {
        const auto n = parent->object_count(), m = parent->morphism_count();
        return Subcategory(std::move(parent), std::vector<bool>(n, true), std::vector<bool>(m, true));
    }

    const CategoryRef& parent() const { return parent_; }
    bool has_object(ObjId x) const { return objects_.at(x); }
    bool has_morphism(MorId f) const { return morphisms_.at(f); }
    const std::vector<bool>& object_mask() const { return objects_; }
    const std::vector<bool>& morphism_mask() const { return morphisms_; }

    std::vector<ObjId> object_ids() const { return members(objects_); }
    std::vector<MorId> morphism_ids() const { return members(morphisms_); }
    std::size_t object_count() const { return std::count(objects_.begin(), objects_.end(), true); }
    bool is_empty() const { return object_count() == 0; }

    std::vector<std::string> object_names() const {
        std::vector<std::string> out;
        for (ObjId x : object_ids()) out.push_back(parent_->object_name(x));
        return out;
    }
    std::vector<std::string> morphism_names() const {
        std::vector<std::string> out;
        for (MorId f : morphism_ids()) out.push_back(parent_->morphism_name(f));
        return out;
    }

    /// Every parent morphism between included objects is included.
    bool is_full() const {
        for (MorId f = 0; f < morphisms_.size(); ++f)
            if (objects_[parent_->dom(f)] && objects_[parent_->cod(f)] && !morphisms_[f]) return false;
        return true;
    }

    /// Morphisms of this subcategory from x to y (parent ids).
    std::vector<MorId> hom(ObjId x, ObjId y) const {
        std::vector<MorId> out;
        if (!objects_[x] || !objects_[y]) return out;
        for (MorId f : parent_->hom(x, y))
            if (morphisms_[f]) out.push_back(f);
        return out;
    }

    /// The subcategory as a category in its own right, ids inherited from the
    /// parent and ordered as in the parent.
    FinCategory as_category(std::string name) const {
        std::vector<std::size_t> obj_new(objects_.size(), npos), mor_new(morphisms_.size(), npos);
        std::vector<std::string> objs;
        for (ObjId x : object_ids()) {
            obj_new[x] = objs.size();
            objs.push_back(parent_->object_name(x));
        }
        std::vector<Morphism> mors;
        for (MorId f : morphism_ids()) {
            mor_new[f] = mors.size();
            mors.push_back({parent_->morphism_name(f), obj_new[parent_->dom(f)], obj_new[parent_->cod(f)]});
        }
        std::vector<MorId> ids(objs.size(), npos);
        for (ObjId x : object_ids()) ids[obj_new[x]] = mor_new[parent_->identity(x)];
        CompositionTable comp;
        parent_->composition().for_each([&](MorId g, MorId f, MorId h) {
            if (morphisms_[g] && morphisms_[f] && morphisms_[h]) comp.set(mor_new[g], mor_new[f], mor_new[h]);
        });
        return FinCategory(std::move(name), std::move(objs), std::move(mors), std::move(ids), std::move(comp));
    }
    FinCategory as_category() const { return as_category(parent_->name() + "{" + join_names() + "}"); }

    friend bool operator==(const Subcategory& a, const Subcategory& b) {
        const bool same_parent = a.parent_ == b.parent_ || (a.parent_ && b.parent_ && *a.parent_ == *b.parent_);
        return same_parent && a.objects_ == b.objects_ && a.morphisms_ == b.morphisms_;
    }

private:
    static std::vector<std::size_t> members(const std::vector<bool>& mask) {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < mask.size(); ++i)
            if (mask[i]) out.push_back(i);
        return out;
    }
    std::string join_names() const {
        std::string s;
        for (const auto& n : object_names()) s += (s.empty() ? "" : ",") + n;
        return s;
    }

    CategoryRef parent_;
    std::vector<bool> objects_;
    std::vector<bool> morphisms_;
};

/// Identities present, closed under composition, endpoints included.
inline ValidationReport validate_subcategory(const Subcategory& sub) {
    ValidationReport report;
    const FinCategory& cat = *sub.parent();
    for (ObjId x : sub.object_ids())
        if (!sub.has_morphism(cat.identity(x)))
            report.add("identity", {cat.object_name(x)}, "subcategory lacks the identity of " + cat.object_name(x));
    for (MorId f : sub.morphism_ids()) {
        if (!sub.has_object(cat.dom(f)) || !sub.has_object(cat.cod(f)))
            report.add("endpoints", {cat.morphism_name(f)}, "endpoint of " + cat.morphism_name(f) + " is missing");
    }
    for (MorId f : sub.morphism_ids())
        for (MorId g : cat.outgoing(cat.cod(f)))
            if (sub.has_morphism(g) && !sub.has_morphism(cat.compose(g, f)))
                report.add("closure", {cat.morphism_name(g), cat.morphism_name(f)},
                           "composite of (" + cat.morphism_name(g) + ", " + cat.morphism_name(f) + ") is missing");
    return report;
}

inline std::vector<bool> object_mask(const FinCategory& cat, const std::vector<std::string>& objs) {
    std::vector<bool> mask(cat.object_count(), false);
    for (const auto& o : objs) mask[cat.object(o)] = true;
    return mask;
}

inline Subcategory full_subcategory(const CategoryRef& cat, const std::vector<bool>& objs) {
    std::vector<bool> mors(cat->morphism_count(), false);
    for (MorId f = 0; f < mors.size(); ++f) mors[f] = objs.at(cat->dom(f)) && objs.at(cat->cod(f));
    return Subcategory(cat, objs, std::move(mors));
}

/// Full subcategory on the named objects; throws on unknown ids.
inline Subcategory full_subcategory(const CategoryRef& cat, const std::vector<std::string>& objs) {
    return full_subcategory(cat, object_mask(*cat, objs));
}
inline Subcategory full_subcategory(const CategoryRef& cat, std::initializer_list<std::string> objs) {
    return full_subcategory(cat, std::vector<std::string>(objs));
}

/// Subcategory with explicit morphisms; identities of the listed objects are
/// added. The result is validated.
inline Subcategory make_subcategory(const CategoryRef& cat, const std::vector<std::string>& objs,
                                    const std::vector<std::string>& mors) {
    std::vector<bool> omask = object_mask(*cat, objs);
    std::vector<bool> mmask(cat->morphism_count(), false);
    for (ObjId x = 0; x < omask.size(); ++x)
        if (omask[x]) mmask[cat->identity(x)] = true;
    for (const auto& m : mors) mmask[cat->morphism_id(m)] = true;
    Subcategory sub(cat, std::move(omask), std::move(mmask));
    auto report = validate_subcategory(sub);
    if (!report.ok()) throw ValidationError("not a subcategory of " + cat->name(), std::move(report));
    return sub;
}

namespace detail {
inline void require_shared_parent(const std::vector<Subcategory>& parts) {
    if (parts.empty()) throw std::invalid_argument("need at least one subcategory");
    for (const auto& p : parts)
        if (p.parent() != parts.front().parent() && !(*p.parent() == *parts.front().parent()))
            throw std::invalid_argument("subcategories have different parents");
}
}  // namespace detail

inline Subcategory intersect(const std::vector<Subcategory>& parts) {
    detail::require_shared_parent(parts);
    std::vector<bool> objs = parts.front().object_mask();
    std::vector<bool> mors = parts.front().morphism_mask();
    for (const auto& p : parts) {
        for (std::size_t i = 0; i < objs.size(); ++i) objs[i] = objs[i] && p.object_mask()[i];
        for (std::size_t i = 0; i < mors.size(); ++i) mors[i] = mors[i] && p.morphism_mask()[i];
    }
    return Subcategory(parts.front().parent(), std::move(objs), std::move(mors));
}

/// Union of objects with the morphisms generated under composition.
inline Subcategory union_closure(const std::vector<Subcategory>& parts) {
    detail::require_shared_parent(parts);
    const CategoryRef& cat = parts.front().parent();
    std::vector<bool> objs(cat->object_count(), false), mors(cat->morphism_count(), false);
    for (const auto& p : parts) {
        for (std::size_t i = 0; i < objs.size(); ++i) objs[i] = objs[i] || p.object_mask()[i];
        for (std::size_t i = 0; i < mors.size(); ++i) mors[i] = mors[i] || p.morphism_mask()[i];
    }
    for (ObjId x = 0; x < objs.size(); ++x)
        if (objs[x]) mors[cat->identity(x)] = true;

    std::vector<MorId> work;
    for (MorId f = 0; f < mors.size(); ++f)
        if (mors[f]) work.push_back(f);
    auto add = [&](MorId h) {
        if (!mors[h]) {
            mors[h] = true;
            work.push_back(h);
        }
    };
    while (!work.empty()) {
        const MorId f = work.back();
        work.pop_back();
        for (MorId g : cat->outgoing(cat->cod(f)))
            if (mors[g]) add(cat->compose(g, f));
        for (MorId e = 0; e < mors.size(); ++e)
            if (mors[e] && cat->cod(e) == cat->dom(f)) add(cat->compose(f, e));
    }
    return Subcategory(cat, std::move(objs), std::move(mors));
}

/// An indexed family of subcategories with a total order on the labels.
struct Cover {
    std::string name;
    CategoryRef parent;
    std::vector<std::string> index_order;
    std::map<std::string, Subcategory> parts;

    std::size_t size() const { return index_order.size(); }
    const Subcategory& part(const std::string& label) const {
        auto it = parts.find(label);
        if (it == parts.end()) throw std::invalid_argument("unknown cover label '" + label + "'");
        return it->second;
    }
    std::size_t position(const std::string& label) const {
        auto it = std::find(index_order.begin(), index_order.end(), label);
        if (it == index_order.end()) throw std::invalid_argument("unknown cover label '" + label + "'");
        return static_cast<std::size_t>(it - index_order.begin());
    }
    std::vector<Subcategory> all_parts() const {
        std::vector<Subcategory> out;
        for (const auto& l : index_order) out.push_back(parts.at(l));
        return out;
    }

    /// Same parts under another total order of the labels.
    Cover with_order(const std::vector<std::string>& order) const {
        std::vector<std::string> a = order, b = index_order;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b || std::adjacent_find(a.begin(), a.end()) != a.end())
            throw std::invalid_argument("order is not a permutation of the cover labels");
        Cover out = *this;
        out.index_order = order;
        return out;
    }
};

/// Builds a cover, validating labels and parts. Without an explicit order
/// the labels are ordered lexicographically.
inline Cover make_cover(std::string name, const CategoryRef& parent,
                        const std::vector<std::pair<std::string, Subcategory>>& parts,
                        std::optional<std::vector<std::string>> order = std::nullopt) {
    Cover cover{std::move(name), parent, {}, {}};
    std::vector<std::string> labels;
    for (const auto& [label, sub] : parts) {
        if (!cover.parts.emplace(label, sub).second) throw std::invalid_argument("duplicate cover label '" + label + "'");
        if (sub.parent() != parent && !(*sub.parent() == *parent))
            throw std::invalid_argument("part '" + label + "' is not a subcategory of " + parent->name());
        auto report = validate_subcategory(sub);
        if (!report.ok()) throw ValidationError("part '" + label + "' is not a subcategory", std::move(report));
        labels.push_back(label);
    }
    std::sort(labels.begin(), labels.end());
    cover.index_order = labels;
    if (order) cover = cover.with_order(*order);
    return cover;
}

inline bool is_cover(const Cover& cover) {
    if (cover.parts.empty()) return cover.parent->object_count() == 0;
    return union_closure(cover.all_parts()) == Subcategory::whole(cover.parent);
}

struct Classification {
    bool is_ideal = false;
    bool is_filter = false;
    friend bool operator==(const Classification&, const Classification&) = default;
};

/// Ideal: full and closed under maps into it. Filter: full and closed under
/// maps out of it.
inline Classification classify_subcategory(const Subcategory& sub) {
    if (!sub.is_full()) return {};
    const FinCategory& cat = *sub.parent();
    Classification c{true, true};
    for (ObjId x : sub.object_ids())
        for (ObjId y = 0; y < cat.object_count(); ++y) {
            if (sub.has_object(y)) continue;
            if (!cat.hom(y, x).empty()) c.is_ideal = false;
            if (!cat.hom(x, y).empty()) c.is_filter = false;
        }
    return c;
}

/// Full subcategory on the remaining objects.
inline Subcategory complement(const Subcategory& sub) {
    if (!sub.is_full()) throw std::invalid_argument("complement needs a full subcategory");
    std::vector<bool> objs = sub.object_mask();
    objs.flip();
    return full_subcategory(sub.parent(), objs);
}

/// The same subcategory seen inside the opposite of its parent.
inline Subcategory embed_opposite(const Subcategory& sub, const CategoryRef& parent_op) {
    return Subcategory(parent_op, sub.object_mask(), sub.morphism_mask());
}

inline Cover opposite_cover(const Cover& cover) {
    Cover out{cover.name + "^op", share(opposite(*cover.parent)), cover.index_order, {}};
    for (const auto& [label, sub] : cover.parts) out.parts.emplace(label, embed_opposite(sub, out.parent));
    return out;
}

/// The poset 0 < 1.
inline CategoryRef two_point_poset() {
    static const CategoryRef p = share(CategoryBuilder("P").objects({"0", "1"}).morphism("0<1", "0", "1").build());
    return p;
}

/// The functor to 0 < 1 classifying an ideal: its objects go to 0, the rest to 1.
inline FunctorMap to_two_point_poset(const Subcategory& ideal) {
    if (!classify_subcategory(ideal).is_ideal) throw std::invalid_argument("subcategory is not an ideal");
    const FinCategory& cat = *ideal.parent();
    const CategoryRef P = two_point_poset();
    const ObjId zero = P->object("0"), one = P->object("1");
    const MorId arrow = P->morphism_id("0<1");
    FunctorMap F{ideal.parent(), P, {}, {}};
    for (ObjId x = 0; x < cat.object_count(); ++x) F.object_map.push_back(ideal.has_object(x) ? zero : one);
    for (MorId f = 0; f < cat.morphism_count(); ++f) {
        const ObjId s = F.object_map[cat.dom(f)], t = F.object_map[cat.cod(f)];
        F.morphism_map.push_back(s == t ? P->identity(s) : arrow);
    }
    return F;
}

/// Full subcategory on the objects F sends to `value`.
inline Subcategory fiber(const FunctorMap& F, ObjId value) {
    std::vector<bool> objs(F.source->object_count(), false);
    for (ObjId x = 0; x < objs.size(); ++x) objs[x] = F.object_map[x] == value;
    return full_subcategory(F.source, objs);
}

/// For each parent object, the number of parts containing it.
inline std::vector<std::size_t> membership_counts(const Cover& cover) {
    std::vector<std::size_t> counts(cover.parent->object_count(), 0);
    for (const auto& [label, sub] : cover.parts)
        for (ObjId x : sub.object_ids()) ++counts[x];
    return counts;
}

inline bool is_locally_finite(const Cover& cover) {
    const auto counts = membership_counts(cover);
    return std::all_of(counts.begin(), counts.end(), [&](std::size_t c) { return c <= cover.parts.size(); });
}

namespace detail {
inline Subcategory hom_closure(const CategoryRef& cat, std::vector<bool> objs, bool into) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (ObjId x = 0; x < objs.size(); ++x) {
            if (!objs[x]) continue;
            for (ObjId y = 0; y < objs.size(); ++y)
                if (!objs[y] && !(into ? cat->hom(y, x) : cat->hom(x, y)).empty()) {
                    objs[y] = true;
                    changed = true;
                }
        }
    }
    return full_subcategory(cat, objs);
}
}  // namespace detail

/// Smallest ideal containing the given objects.
inline Subcategory ideal_closure(const CategoryRef& cat, const std::vector<bool>& objs) {
    return detail::hom_closure(cat, objs, true);
}
inline Subcategory ideal_closure(const CategoryRef& cat, const std::vector<std::string>& objs) {
    return ideal_closure(cat, object_mask(*cat, objs));
}
inline Subcategory ideal_closure(const CategoryRef& cat, std::initializer_list<std::string> objs) {
    return ideal_closure(cat, std::vector<std::string>(objs));
}

/// Smallest filter containing the given objects.
inline Subcategory filter_closure(const CategoryRef& cat, const std::vector<bool>& objs) {
    return detail::hom_closure(cat, objs, false);
}
inline Subcategory filter_closure(const CategoryRef& cat, const std::vector<std::string>& objs) {
    return filter_closure(cat, object_mask(*cat, objs));
}
inline Subcategory filter_closure(const CategoryRef& cat, std::initializer_list<std::string> objs) {
    return filter_closure(cat, std::vector<std::string>(objs));
}

inline bool is_ideal_cover(const Cover& cover) {
    return std::all_of(cover.parts.begin(), cover.parts.end(),
                       [](const auto& kv) { return classify_subcategory(kv.second).is_ideal; });
}
inline bool is_filter_cover(const Cover& cover) {
    return std::all_of(cover.parts.begin(), cover.parts.end(),
                       [](const auto& kv) { return classify_subcategory(kv.second).is_filter; });
}

}  // namespace catnerve
