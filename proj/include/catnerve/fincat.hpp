#pragma once

// Explicit finite categories: data model, axiom validation, hom-sets,
// opposites, acyclicity and functor verification.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace catnerve {

using ObjId = std::size_t;
using MorId = std::size_t;

inline constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

struct Violation {
    std::string rule;
    std::vector<std::string> ids;
    std::string message;

    friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }

    void add(std::string rule, std::vector<std::string> ids, std::string message) {
        violations.push_back({std::move(rule), std::move(ids), std::move(message)});
    }
    void merge(const ValidationReport& other) {
        violations.insert(violations.end(), other.violations.begin(), other.violations.end());
    }
    bool has_rule(const std::string& rule) const {
        return std::any_of(violations.begin(), violations.end(),
                           [&](const Violation& v) { return v.rule == rule; });
    }
};

/// Thrown when an input fails validation where a valid value is required.
class ValidationError : public std::runtime_error {
public:
    ValidationError(const std::string& what, ValidationReport report)
        : std::runtime_error(what), report_(std::move(report)) {}
    const ValidationReport& report() const { return report_; }

private:
    ValidationReport report_;
};

/// Sparse composition table keyed by (g, f), meaning g ∘ f.
class CompositionTable {
public:
    void set(MorId g, MorId f, MorId gf) { table_[key(g, f)] = gf; }
    bool contains(MorId g, MorId f) const { return table_.count(key(g, f)) != 0; }
    std::optional<MorId> find(MorId g, MorId f) const {
        auto it = table_.find(key(g, f));
        if (it == table_.end()) return std::nullopt;
        return it->second;
    }
    std::size_t size() const { return table_.size(); }

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (const auto& [k, v] : table_) fn(static_cast<MorId>(k >> 32), static_cast<MorId>(k & 0xffffffffu), v);
    }

    friend bool operator==(const CompositionTable&, const CompositionTable&) = default;

private:
    static std::uint64_t key(MorId g, MorId f) {
        return (static_cast<std::uint64_t>(g) << 32) | static_cast<std::uint64_t>(f);
    }
    std::unordered_map<std::uint64_t, MorId> table_;
};

struct Morphism {
    std::string id;
    ObjId dom = npos;
    ObjId cod = npos;

    friend bool operator==(const Morphism&, const Morphism&) = default;
};

/// A finite category given extensionally.
///
/// A FinCategory is the structurally parsed form of a category: references
/// that did not resolve and duplicate ids are retained as diagnostics so that
/// validate_category() can report them. Every other operation assumes a
/// value that validates.
class FinCategory {
public:
    FinCategory() = default;

    FinCategory(std::string name, std::vector<std::string> objects, std::vector<Morphism> morphisms,
                std::vector<MorId> identities, CompositionTable comp,
                std::vector<Violation> structural = {})
        : name_(std::move(name)),
          objects_(std::move(objects)),
          morphisms_(std::move(morphisms)),
          identities_(std::move(identities)),
          comp_(std::move(comp)),
          structural_(std::move(structural)) {
        identities_.resize(objects_.size(), npos);
        index();
    }

    const std::string& name() const { return name_; }
    std::size_t object_count() const { return objects_.size(); }
    std::size_t morphism_count() const { return morphisms_.size(); }

    const std::vector<std::string>& objects() const { return objects_; }
    const std::vector<Morphism>& morphisms() const { return morphisms_; }
    const std::string& object_name(ObjId x) const { return objects_.at(x); }
    const Morphism& morphism(MorId f) const { return morphisms_.at(f); }
    const std::string& morphism_name(MorId f) const { return morphisms_.at(f).id; }
    ObjId dom(MorId f) const { return morphisms_.at(f).dom; }
    ObjId cod(MorId f) const { return morphisms_.at(f).cod; }

    MorId identity(ObjId x) const { return identities_.at(x); }
    const std::vector<MorId>& identities() const { return identities_; }
    bool is_identity(MorId f) const {
        const ObjId d = dom(f);
        return d != npos && d == cod(f) && identities_[d] == f;
    }

    const CompositionTable& composition() const { return comp_; }

    /// g ∘ f; throws when the table has no entry.
    MorId compose(MorId g, MorId f) const {
        auto h = comp_.find(g, f);
        if (!h) throw std::out_of_range("no composite for (" + morphism_name(g) + ", " + morphism_name(f) + ")");
        return *h;
    }
    std::optional<MorId> try_compose(MorId g, MorId f) const { return comp_.find(g, f); }

    std::optional<ObjId> find_object(const std::string& id) const {
        auto it = object_index_.find(id);
        if (it == object_index_.end()) return std::nullopt;
        return it->second;
    }
    std::optional<MorId> find_morphism(const std::string& id) const {
        auto it = morphism_index_.find(id);
        if (it == morphism_index_.end()) return std::nullopt;
        return it->second;
    }
    ObjId object(const std::string& id) const {
        auto x = find_object(id);
        if (!x) throw std::invalid_argument("unknown object '" + id + "' in category " + name_);
        return *x;
    }
    MorId morphism_id(const std::string& id) const {
        auto f = find_morphism(id);
        if (!f) throw std::invalid_argument("unknown morphism '" + id + "' in category " + name_);
        return *f;
    }

    /// Morphisms x → y in declaration order.
    const std::vector<MorId>& hom(ObjId x, ObjId y) const { return hom_.at(x * objects_.size() + y); }

    const std::vector<MorId>& outgoing(ObjId x) const { return out_.at(x); }

    /// Problems found while building the value (dangling ids, duplicates).
    const std::vector<Violation>& structural_issues() const { return structural_; }

    friend bool operator==(const FinCategory& a, const FinCategory& b) {
        return a.name_ == b.name_ && a.objects_ == b.objects_ && a.morphisms_ == b.morphisms_ &&
               a.identities_ == b.identities_ && a.comp_ == b.comp_;
    }

private:
    void note(Violation v) {
        if (std::find(structural_.begin(), structural_.end(), v) == structural_.end()) structural_.push_back(std::move(v));
    }

    void index() {
        const std::size_t n = objects_.size();
        for (ObjId x = 0; x < n; ++x)
            if (!object_index_.emplace(objects_[x], x).second)
                note({"duplicate object", {objects_[x]}, "object id declared twice"});
        for (MorId f = 0; f < morphisms_.size(); ++f)
            if (!morphism_index_.emplace(morphisms_[f].id, f).second)
                note({"duplicate morphism", {morphisms_[f].id}, "morphism id declared twice"});
        hom_.assign(n * n, {});
        out_.assign(n, {});
        for (MorId f = 0; f < morphisms_.size(); ++f) {
            const auto& m = morphisms_[f];
            if (m.dom < n && m.cod < n) {
                hom_[m.dom * n + m.cod].push_back(f);
                out_[m.dom].push_back(f);
            }
        }
    }

    std::string name_;
    std::vector<std::string> objects_;
    std::vector<Morphism> morphisms_;
    std::vector<MorId> identities_;
    CompositionTable comp_;
    std::vector<Violation> structural_;

    std::unordered_map<std::string, ObjId> object_index_;
    std::unordered_map<std::string, MorId> morphism_index_;
    std::vector<std::vector<MorId>> hom_;
    std::vector<std::vector<MorId>> out_;
};

using CategoryRef = std::shared_ptr<const FinCategory>;

inline CategoryRef share(FinCategory cat) { return std::make_shared<const FinCategory>(std::move(cat)); }

inline std::string identity_name(const std::string& object) { return "id_" + object; }

/// Name-based construction of a FinCategory.
///
/// Identities default to "id_<object>" and compositions with identities are
/// filled in unless already given. Unresolvable names are kept as structural
/// issues instead of throwing.
class CategoryBuilder {
public:
    explicit CategoryBuilder(std::string name) : name_(std::move(name)) {}

    CategoryBuilder& object(std::string id) {
        objects_.push_back(std::move(id));
        return *this;
    }
    CategoryBuilder& objects(const std::vector<std::string>& ids) {
        for (const auto& id : ids) object(id);
        return *this;
    }
    CategoryBuilder& morphism(std::string id, std::string dom, std::string cod) {
        morphisms_.push_back({std::move(id), std::move(dom), std::move(cod)});
        return *this;
    }
    /// g ∘ f = h
    CategoryBuilder& compose(std::string g, std::string f, std::string h) {
        comps_.push_back({std::move(g), std::move(f), std::move(h)});
        return *this;
    }

    FinCategory build(bool complete_identities = true) const {
        std::vector<Violation> issues;
        std::unordered_map<std::string, ObjId> obj_index;
        for (ObjId x = 0; x < objects_.size(); ++x) obj_index.emplace(objects_[x], x);

        std::vector<Morphism> mors;
        std::vector<MorId> identities(objects_.size(), npos);
        for (ObjId x = 0; x < objects_.size(); ++x) {
            identities[x] = mors.size();
            mors.push_back({identity_name(objects_[x]), x, x});
        }
        auto resolve_obj = [&](const std::string& id, const std::string& mor) {
            auto it = obj_index.find(id);
            if (it != obj_index.end()) return it->second;
            issues.push_back({"dangling reference", {mor, id}, "morphism " + mor + " refers to unknown object " + id});
            return npos;
        };
        for (const auto& d : morphisms_) mors.push_back({d.id, resolve_obj(d.dom, d.id), resolve_obj(d.cod, d.id)});

        std::unordered_map<std::string, MorId> mor_index;
        for (MorId f = 0; f < mors.size(); ++f) mor_index.emplace(mors[f].id, f);
        auto resolve_mor = [&](const std::string& id, MorId& out) {
            auto it = mor_index.find(id);
            if (it == mor_index.end()) {
                issues.push_back({"dangling reference", {id}, "composition refers to unknown morphism " + id});
                return false;
            }
            out = it->second;
            return true;
        };

        CompositionTable comp;
        for (const auto& c : comps_) {
            MorId g = npos, f = npos, h = npos;
            bool ok = resolve_mor(c.g, g);
            ok = resolve_mor(c.f, f) && ok;
            ok = resolve_mor(c.h, h) && ok;
            if (!ok) continue;
            if (auto prev = comp.find(g, f); prev && *prev != h) {
                issues.push_back({"conflicting composition", {c.g, c.f}, "composite of (" + c.g + ", " + c.f + ") given twice"});
                continue;
            }
            comp.set(g, f, h);
        }
        if (complete_identities) {
            for (MorId f = 0; f < mors.size(); ++f) {
                const auto& m = mors[f];
                if (m.dom == npos || m.cod == npos) continue;
                if (!comp.contains(identities[m.cod], f)) comp.set(identities[m.cod], f, f);
                if (!comp.contains(f, identities[m.dom])) comp.set(f, identities[m.dom], f);
            }
        }
        return FinCategory(name_, objects_, std::move(mors), std::move(identities), std::move(comp), std::move(issues));
    }

private:
    struct MorDecl {
        std::string id, dom, cod;
    };
    struct CompDecl {
        std::string g, f, h;
    };
    std::string name_;
    std::vector<std::string> objects_;
    std::vector<MorDecl> morphisms_;
    std::vector<CompDecl> comps_;
};

/// Lists every violated category axiom instance; ok iff cat is a category.
inline ValidationReport validate_category(const FinCategory& cat) {
    ValidationReport report;
    for (const auto& v : cat.structural_issues()) report.violations.push_back(v);

    const std::size_t nobj = cat.object_count();
    const std::size_t nmor = cat.morphism_count();
    auto valid_mor = [&](MorId f) { return f < nmor && cat.dom(f) < nobj && cat.cod(f) < nobj; };

    for (ObjId x = 0; x < nobj; ++x) {
        const MorId i = cat.identity(x);
        if (i >= nmor) {
            report.add("identity", {cat.object_name(x)}, "object " + cat.object_name(x) + " has no identity");
        } else if (cat.dom(i) != x || cat.cod(i) != x) {
            report.add("identity", {cat.object_name(x), cat.morphism_name(i)},
                       "identity of " + cat.object_name(x) + " is not an endomorphism of it");
        }
    }

    // Composition entries must be composable with matching endpoints.
    std::vector<Violation> comp_issues;
    cat.composition().for_each([&](MorId g, MorId f, MorId h) {
        if (!valid_mor(g) || !valid_mor(f) || !valid_mor(h)) return;
        const auto gn = cat.morphism_name(g), fn = cat.morphism_name(f), hn = cat.morphism_name(h);
        if (cat.cod(f) != cat.dom(g)) {
            comp_issues.push_back({"composition domain", {gn, fn}, "composition defined for non-composable pair (" + gn + ", " + fn + ")"});
        } else if (cat.dom(h) != cat.dom(f) || cat.cod(h) != cat.cod(g)) {
            comp_issues.push_back({"composition endpoints", {gn, fn, hn},
                                   "composite " + hn + " of (" + gn + ", " + fn + ") has wrong endpoints"});
        }
    });
    std::sort(comp_issues.begin(), comp_issues.end(),
              [](const Violation& a, const Violation& b) { return a.ids < b.ids; });
    report.violations.insert(report.violations.end(), comp_issues.begin(), comp_issues.end());

    for (MorId f = 0; f < nmor; ++f) {
        if (!valid_mor(f)) continue;
        for (MorId g : cat.outgoing(cat.cod(f))) {
            if (!valid_mor(g)) continue;
            if (!cat.composition().contains(g, f))
                report.add("totality", {cat.morphism_name(g), cat.morphism_name(f)},
                           "composition not total at (" + cat.morphism_name(g) + "," + cat.morphism_name(f) + ")");
        }
    }
    if (!report.ok()) {
        // Identity and associativity checks need a total, well-typed table.
        return report;
    }

    for (MorId f = 0; f < nmor; ++f) {
        const MorId ic = cat.identity(cat.cod(f));
        const MorId id = cat.identity(cat.dom(f));
        if (cat.compose(ic, f) != f)
            report.add("left identity", {cat.morphism_name(f)}, "id ∘ " + cat.morphism_name(f) + " differs from it");
        if (cat.compose(f, id) != f)
            report.add("right identity", {cat.morphism_name(f)}, cat.morphism_name(f) + " ∘ id differs from it");
    }
    for (MorId f = 0; f < nmor; ++f)
        for (MorId g : cat.outgoing(cat.cod(f))) {
            const MorId gf = cat.compose(g, f);
            for (MorId h : cat.outgoing(cat.cod(g))) {
                if (cat.compose(h, gf) != cat.compose(cat.compose(h, g), f))
                    report.add("associativity", {cat.morphism_name(h), cat.morphism_name(g), cat.morphism_name(f)},
                               "associativity fails at (" + cat.morphism_name(h) + ", " + cat.morphism_name(g) + ", " +
                                   cat.morphism_name(f) + ")");
            }
        }
    return report;
}

inline void require_valid(const FinCategory& cat) {
    auto report = validate_category(cat);
    if (!report.ok()) throw ValidationError("category " + cat.name() + " is not valid", std::move(report));
}

/// Morphism ids x → y, by name, in declaration order.
inline std::vector<std::string> hom_set(const FinCategory& cat, const std::string& x, const std::string& y) {
    std::vector<std::string> out;
    for (MorId f : cat.hom(cat.object(x), cat.object(y))) out.push_back(cat.morphism_name(f));
    return out;
}

inline std::string opposite_name(const std::string& name) {
    constexpr std::string_view suffix = "^op";
    if (name.size() >= suffix.size() && name.compare(name.size() - suffix.size(), suffix.size(), suffix) == 0)
        return name.substr(0, name.size() - suffix.size());
    return name + std::string(suffix);
}

/// Same objects and morphism ids with endpoints swapped; comp'(g, f) = comp(f, g).
inline FinCategory opposite(const FinCategory& cat) {
    std::vector<Morphism> mors = cat.morphisms();
    for (auto& m : mors) std::swap(m.dom, m.cod);
    CompositionTable comp;
    cat.composition().for_each([&](MorId g, MorId f, MorId h) { comp.set(f, g, h); });
    return FinCategory(opposite_name(cat.name()), cat.objects(), std::move(mors), cat.identities(), std::move(comp),
                       cat.structural_issues());
}

/// No non-identity endomorphisms and no two-way hom-connectivity between
/// distinct objects.
inline bool is_acyclic(const FinCategory& cat) {
    const std::size_t n = cat.object_count();
    for (ObjId x = 0; x < n; ++x) {
        for (MorId f : cat.hom(x, x))
            if (f != cat.identity(x)) return false;
        for (ObjId y = x + 1; y < n; ++y)
            if (!cat.hom(x, y).empty() && !cat.hom(y, x).empty()) return false;
    }
    return true;
}

/// A functor given by its object and morphism assignments.
struct FunctorMap {
    CategoryRef source;
    CategoryRef target;
    std::vector<ObjId> object_map;
    std::vector<MorId> morphism_map;

    ObjId operator()(ObjId x) const { return object_map.at(x); }
    MorId on_morphism(MorId f) const { return morphism_map.at(f); }

    static FunctorMap from_names(CategoryRef source, CategoryRef target,
                                 const std::map<std::string, std::string>& objects,
                                 const std::map<std::string, std::string>& morphisms) {
        FunctorMap F{source, target, std::vector<ObjId>(source->object_count(), npos),
                     std::vector<MorId>(source->morphism_count(), npos)};
        for (const auto& [from, to] : objects) F.object_map[source->object(from)] = target->object(to);
        for (const auto& [from, to] : morphisms) F.morphism_map[source->morphism_id(from)] = target->morphism_id(to);
        return F;
    }

    static FunctorMap identity(CategoryRef cat) {
        FunctorMap F{cat, cat, {}, {}};
        for (ObjId x = 0; x < cat->object_count(); ++x) F.object_map.push_back(x);
        for (MorId f = 0; f < cat->morphism_count(); ++f) F.morphism_map.push_back(f);
        return F;
    }

    /// Same maps, compared by name on both ends.
    bool same_maps(const FunctorMap& other) const {
        if (source->objects() != other.source->objects() || target->objects() != other.target->objects()) return false;
        if (object_map != other.object_map || morphism_map.size() != other.morphism_map.size()) return false;
        for (MorId f = 0; f < morphism_map.size(); ++f)
            if (target->morphism_name(morphism_map[f]) != other.target->morphism_name(other.morphism_map[f])) return false;
        return true;
    }
};

/// G ∘ F
inline FunctorMap compose(const FunctorMap& G, const FunctorMap& F) {
    if (F.target != G.source && !(*F.target == *G.source))
        throw std::invalid_argument("functor composition: target of first is not source of second");
    FunctorMap out{F.source, G.target, {}, {}};
    for (ObjId y : F.object_map) out.object_map.push_back(G.object_map.at(y));
    for (MorId g : F.morphism_map) out.morphism_map.push_back(G.morphism_map.at(g));
    return out;
}

struct FunctorReport {
    ValidationReport report;
    bool isomorphism = false;
    bool ok() const { return report.ok(); }
};

namespace detail {
inline bool is_bijection(const std::vector<std::size_t>& map, std::size_t target_size) {
    if (map.size() != target_size) return false;
    std::vector<bool> hit(target_size, false);
    for (auto v : map) {
        if (v >= target_size || hit[v]) return false;
        hit[v] = true;
    }
    return true;
}
}  // namespace detail

/// Checks endpoint, identity and composition preservation by full enumeration.
inline FunctorReport validate_functor(const FunctorMap& F) {
    const FinCategory& src = *F.source;
    const FinCategory& tgt = *F.target;
    if (F.object_map.size() != src.object_count() || F.morphism_map.size() != src.morphism_count())
        throw std::invalid_argument("functor maps are not total on the source");
    for (ObjId y : F.object_map)
        if (y >= tgt.object_count()) throw std::invalid_argument("functor maps an object to a dangling target id");
    for (MorId g : F.morphism_map)
        if (g >= tgt.morphism_count()) throw std::invalid_argument("functor maps a morphism to a dangling target id");

    FunctorReport out;
    for (MorId f = 0; f < src.morphism_count(); ++f) {
        const MorId Ff = F.morphism_map[f];
        if (tgt.dom(Ff) != F.object_map[src.dom(f)] || tgt.cod(Ff) != F.object_map[src.cod(f)])
            out.report.add("endpoints", {src.morphism_name(f), tgt.morphism_name(Ff)},
                           "image of " + src.morphism_name(f) + " has wrong endpoints");
    }
    for (ObjId x = 0; x < src.object_count(); ++x)
        if (F.morphism_map[src.identity(x)] != tgt.identity(F.object_map[x]))
            out.report.add("identity", {src.object_name(x)}, "identity of " + src.object_name(x) + " not preserved");
    if (out.report.ok()) {
        for (MorId f = 0; f < src.morphism_count(); ++f)
            for (MorId g : src.outgoing(src.cod(f))) {
                const MorId lhs = F.morphism_map[src.compose(g, f)];
                const MorId rhs = tgt.compose(F.morphism_map[g], F.morphism_map[f]);
                if (lhs != rhs)
                    out.report.add("composition", {src.morphism_name(g), src.morphism_name(f)},
                                   "composition (" + src.morphism_name(g) + ", " + src.morphism_name(f) +
                                       ") not preserved");
            }
    }
    out.isomorphism = detail::is_bijection(F.object_map, tgt.object_count()) &&
                      detail::is_bijection(F.morphism_map, tgt.morphism_count());
    return out;
}

/// True when F is the identity functor on the objects and morphisms.
inline bool is_identity_functor(const FunctorMap& F) {
    if (F.source->object_count() != F.target->object_count() ||
        F.source->morphism_count() != F.target->morphism_count())
        return false;
    for (ObjId x = 0; x < F.object_map.size(); ++x)
        if (F.object_map[x] != x) return false;
    for (MorId f = 0; f < F.morphism_map.size(); ++f)
        if (F.morphism_map[f] != f) return false;
    return true;
}

}  // namespace catnerve
