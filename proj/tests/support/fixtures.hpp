#pragma once

// Fixture categories and random generators shared by the test suites.

#include "catnerve/covers.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace catnerve::fixtures {

/// x ⇉ y → z with f, g : x → y, h : y → z and h f = h g = k; z is terminal.
inline CategoryRef counterexample() {
    return share(CategoryBuilder("C")
                     .objects({"x", "y", "z"})
                     .morphism("f", "x", "y")
                     .morphism("g", "x", "y")
                     .morphism("h", "y", "z")
                     .morphism("k", "x", "z")
                     .compose("h", "f", "k")
                     .compose("h", "g", "k")
                     .build());
}

/// D1 = full{x, y}, D2 = full{y, z}.
inline Cover counterexample_cover(const CategoryRef& C) {
    return make_cover("cex", C, {{"1", full_subcategory(C, {"x", "y"})}, {"2", full_subcategory(C, {"y", "z"})}});
}

/// The poset V: c → a, c → b.
inline CategoryRef poset_v() {
    return share(CategoryBuilder("V").objects({"a", "b", "c"}).morphism("ca", "c", "a").morphism("cb", "c", "b").build());
}

/// Ideal cover {full{c, a}, full{c, b}}.
inline Cover v_cover(const CategoryRef& V) {
    return make_cover("vcov", V, {{"1", full_subcategory(V, {"c", "a"})}, {"2", full_subcategory(V, {"c", "b"})}});
}

inline CategoryRef identity_only(const std::string& obj = "p") {
    return share(CategoryBuilder("T").object(obj).build());
}

inline CategoryRef discrete(std::size_t n) {
    CategoryBuilder b("Disc" + std::to_string(n));
    for (std::size_t i = 0; i < n; ++i) b.object("o" + std::to_string(i));
    return share(b.build());
}

inline CategoryRef chain(std::size_t n) {
    CategoryBuilder b("Chain" + std::to_string(n));
    for (std::size_t i = 0; i < n; ++i) b.object("c" + std::to_string(i));
    auto name = [](std::size_t i, std::size_t j) { return "c" + std::to_string(i) + "c" + std::to_string(j); };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) b.morphism(name(i, j), "c" + std::to_string(i), "c" + std::to_string(j));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) b.compose(name(j, k), name(i, j), name(i, k));
    return share(b.build());
}

/// One object with an idempotent e ∘ e = e.
inline CategoryRef idempotent() {
    return share(CategoryBuilder("E").object("p").morphism("e", "p", "p").compose("e", "e", "e").build());
}

/// Δ_k: objects [0] … [k−1], injective order-preserving maps.
inline CategoryRef delta_inj(std::size_t k) {
    CategoryBuilder b("Delta" + std::to_string(k));
    for (std::size_t n = 0; n < k; ++n) b.object(std::to_string(n));
    // Maps [m] → [n] as sorted images; identities are the full images.
    auto map_name = [](std::size_t m, std::size_t n, const std::vector<std::size_t>& image) {
        std::string s = "d" + std::to_string(m) + "_" + std::to_string(n) + "_";
        for (auto v : image) s += std::to_string(v);
        return s;
    };
    std::map<std::tuple<std::size_t, std::size_t, std::vector<std::size_t>>, std::string> names;
    for (std::size_t n = 0; n < k; ++n)
        for (std::size_t m = 0; m <= n; ++m) {
            for (std::size_t mask = 0; mask < (1u << (n + 1)); ++mask) {
                if (static_cast<std::size_t>(__builtin_popcount(mask)) != m + 1) continue;
                std::vector<std::size_t> image;
                for (std::size_t v = 0; v <= n; ++v)
                    if (mask & (1u << v)) image.push_back(v);
                std::string nm = m == n ? identity_name(std::to_string(n)) : map_name(m, n, image);
                names[{m, n, image}] = nm;
                if (m != n) b.morphism(nm, std::to_string(m), std::to_string(n));
            }
        }
    for (const auto& [k1, first] : names)
        for (const auto& [k2, second] : names) {
            const auto& [m, n, img1] = k1;
            const auto& [n2, p, img2] = k2;
            if (n2 != n) continue;
            std::vector<std::size_t> composite;
            for (auto v : img1) composite.push_back(img2[v]);
            b.compose(second, first, names.at({m, p, composite}));
        }
    return share(b.build());
}

/// Random poset on n elements: a random DAG on 0 < … < n−1, transitively closed.
inline CategoryRef random_poset(std::mt19937& rng, std::size_t n, double density = 0.35,
                                const std::string& name = "P") {
    std::bernoulli_distribution edge(density);
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) leq[i][j] = edge(rng);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (leq[i][k] && leq[k][j]) leq[i][j] = true;
    // Shuffle the declaration order so the canonical order is not topological.
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    auto obj = [&](std::size_t i) { return "p" + std::to_string(i); };
    auto mor = [&](std::size_t i, std::size_t j) { return "p" + std::to_string(i) + "_" + std::to_string(j); };
    CategoryBuilder b(name);
    for (auto i : perm) b.object(obj(i));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && leq[i][j]) b.morphism(mor(i, j), obj(i), obj(j));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (i != j && j != k && leq[i][j] && leq[j][k]) b.compose(mor(j, k), mor(i, j), mor(i, k));
    return share(b.build());
}

/// Free category on a random DAG with up to two parallel edges per pair.
/// Morphisms are the paths, so hom-sets can have several elements.
inline CategoryRef random_free_acyclic(std::mt19937& rng, std::size_t n, const std::string& name = "F") {
    std::uniform_int_distribution<int> mult(0, 4);
    struct Edge {
        std::string id;
        std::size_t from, to;
    };
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const int m = mult(rng);
            const int count = m <= 2 ? 0 : m - 2;  // 0, 1 or 2 parallel edges
            for (int c = 0; c < count; ++c)
                edges.push_back({"e" + std::to_string(i) + std::to_string(j) + std::string(1, char('a' + c)), i, j});
        }
    struct Path {
        std::vector<std::size_t> edges;
        std::size_t from, to;
    };
    std::vector<Path> paths;
    for (std::size_t e = 0; e < edges.size(); ++e) paths.push_back({{e}, edges[e].from, edges[e].to});
    for (std::size_t p = 0; p < paths.size(); ++p)
        for (std::size_t e = 0; e < edges.size(); ++e)
            if (edges[e].from == paths[p].to) {
                Path q = paths[p];
                q.edges.push_back(e);
                q.to = edges[e].to;
                paths.push_back(q);
            }
    auto path_name = [&](const std::vector<std::size_t>& es) {
        std::string s;
        for (auto e : es) s += (s.empty() ? "" : ".") + edges[e].id;
        return s;
    };
    CategoryBuilder b(name);
    for (std::size_t i = 0; i < n; ++i) b.object("v" + std::to_string(i));
    for (const auto& p : paths) b.morphism(path_name(p.edges), "v" + std::to_string(p.from), "v" + std::to_string(p.to));
    for (const auto& p : paths)
        for (const auto& q : paths)
            if (p.to == q.from) {
                std::vector<std::size_t> joined = p.edges;
                joined.insert(joined.end(), q.edges.begin(), q.edges.end());
                b.compose(path_name(q.edges), path_name(p.edges), path_name(joined));
            }
    return share(b.build());
}

enum class CoverKind { ideal, filter };

/// A cover with at most max_parts parts, each the ideal (or filter) closure
/// of one or two random objects, preferring uncovered ones; a last part closes whatever is still
/// uncovered.
inline Cover random_closure_cover(std::mt19937& rng, const CategoryRef& cat, std::size_t max_parts, CoverKind kind) {
    const std::size_t n = cat->object_count();
    std::uniform_int_distribution<std::size_t> parts_dist(1, max_parts);
    std::uniform_int_distribution<std::size_t> object(0, n == 0 ? 0 : n - 1);
    std::bernoulli_distribution second(0.3);
    const std::size_t parts = parts_dist(rng);
    auto close = [&](const std::vector<bool>& seed) {
        return kind == CoverKind::ideal ? ideal_closure(cat, seed) : filter_closure(cat, seed);
    };
    std::vector<std::pair<std::string, Subcategory>> out;
    std::vector<bool> covered(n, false);
    for (std::size_t p = 0; p + 1 < parts && n > 0; ++p) {
        // Prefer an uncovered object so later parts add something new.
        std::vector<std::size_t> open;
        for (std::size_t x = 0; x < n; ++x)
            if (!covered[x]) open.push_back(x);
        std::vector<bool> seed(n, false);
        seed[open.empty() ? object(rng) : open[object(rng) % open.size()]] = true;
        if (second(rng)) seed[object(rng)] = true;
        auto sub = close(seed);
        for (std::size_t x = 0; x < n; ++x) covered[x] = covered[x] || sub.has_object(x);
        out.emplace_back(std::to_string(p + 1), std::move(sub));
    }
    std::vector<bool> rest = covered;
    rest.flip();
    if (out.empty() || std::find(rest.begin(), rest.end(), true) != rest.end())
        out.emplace_back(std::to_string(out.size() + 1), close(rest));
    return make_cover("rand", cat, out);
}

struct NamedCover {
    std::string name;
    Cover cover;
};

/// Hand-built covers plus a few seeded random ones, used across suites.
inline std::vector<NamedCover> fixture_covers() {
    std::vector<NamedCover> out;
    const auto C = counterexample();
    out.push_back({"counterexample", counterexample_cover(C)});
    const auto V = poset_v();
    out.push_back({"v-ideal", v_cover(V)});
    out.push_back({"v-filter", make_cover("vfil", V,
                                          {{"1", full_subcategory(V, {"a"})},
                                           {"2", full_subcategory(V, {"b"})},
                                           {"3", full_subcategory(V, {"a", "b", "c"})}})});
    const auto ch = chain(4);
    out.push_back({"chain-ideal", make_cover("chid", ch,
                                             {{"a", ideal_closure(ch, {"c1"})},
                                              {"b", ideal_closure(ch, {"c2"})},
                                              {"c", ideal_closure(ch, {"c3"})}})});
    const auto d3 = delta_inj(3);
    out.push_back({"delta-ideal", make_cover("dcov", d3,
                                             {{"1", ideal_closure(d3, {"1"})}, {"2", ideal_closure(d3, {"2"})}})});
    out.push_back({"delta-filter", make_cover("dfil", d3,
                                              {{"1", filter_closure(d3, {"1"})}, {"2", filter_closure(d3, {"0"})}})});
    const auto disc = discrete(3);
    out.push_back({"discrete", make_cover("dsc", disc,
                                          {{"1", full_subcategory(disc, {"o0", "o1"})},
                                           {"2", full_subcategory(disc, {"o1", "o2"})}})});
    std::mt19937 rng(20261017);
    for (int i = 0; i < 3; ++i) {
        const auto F = random_free_acyclic(rng, 4, "F" + std::to_string(i));
        out.push_back({"free-ideal-" + std::to_string(i), random_closure_cover(rng, F, 3, CoverKind::ideal)});
        out.push_back({"free-filter-" + std::to_string(i), random_closure_cover(rng, F, 3, CoverKind::filter)});
    }
    for (int i = 0; i < 3; ++i) {
        const auto P = random_poset(rng, 6, 0.4, "P" + std::to_string(i));
        out.push_back({"poset-ideal-" + std::to_string(i), random_closure_cover(rng, P, 3, CoverKind::ideal)});
        out.push_back({"poset-filter-" + std::to_string(i), random_closure_cover(rng, P, 3, CoverKind::filter)});
    }
    return out;
}

inline std::vector<CategoryRef> fixture_categories() {
    std::vector<CategoryRef> out{counterexample(), poset_v(), identity_only(), discrete(3), chain(4), idempotent(),
                                 delta_inj(2), delta_inj(3), delta_inj(4)};
    std::mt19937 rng(7);
    for (int i = 0; i < 3; ++i) out.push_back(random_free_acyclic(rng, 4, "F" + std::to_string(i)));
    for (int i = 0; i < 3; ++i) out.push_back(random_poset(rng, 6, 0.4, "P" + std::to_string(i)));
    return out;
}

}  // namespace catnerve::fixtures
