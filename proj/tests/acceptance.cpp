// Acceptance suite: one PASS/FAIL line per criterion; exit status 1 if any fails.

#include "catnerve/cli.hpp"
#include "catnerve/euler.hpp"
#include "catnerve/grothendieck.hpp"
#include "catnerve/homotopy.hpp"
#include "support/fixtures.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

using namespace catnerve;
namespace fx = catnerve::fixtures;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && pass) {
            pass = false;
            detail = what;
        }
    }
};

int failures = 0;

void run(int number, const std::string& title, double limit_seconds, const std::function<void(Outcome&)>& body) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(o);
    } catch (const std::exception& e) {
        o.pass = false;
        o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (limit_seconds > 0 && secs >= limit_seconds) o.require(false, "runtime " + std::to_string(secs) + " s over limit");
    std::ostringstream line;
    line << "criterion " << number << " " << (o.pass ? "PASS" : "FAIL") << " " << title << " (" << secs << " s)";
    if (!o.pass) line << ": " << o.detail;
    std::cout << line.str() << std::endl;
    if (!o.pass) ++failures;
}

bool equal_chi(const std::optional<Rational>& a, const std::optional<Rational>& b) { return a && b && *a == *b; }

// At least two parts and none of them the whole category.
bool is_nontrivial(const Cover& cover) {
    if (cover.size() < 2) return false;
    for (const auto& p : cover.all_parts())
        if (p == Subcategory::whole(cover.parent)) return false;
    return true;
}

std::string data(const std::string& file) { return std::string(CATNERVE_DATA_DIR) + "/" + file; }

}  // namespace

int main() {
    run(1, "counterexample regression", 1.0, [](Outcome& o) {
        const auto C = fx::counterexample();
        const auto cov = fx::counterexample_cover(C);
        o.require(chi(*C) == Rational(1), "chi(C) != 1");
        o.require(chi(cov.part("1")) == Rational(0), "chi(D1) != 0");
        o.require(chi(cov.part("2")) == Rational(1), "chi(D2) != 1");
        o.require(chi(intersect(cov.all_parts())) == Rational(1), "chi(D1 n D2) != 1");
        o.require(inclusion_exclusion_sum(cov) == Rational(0), "inclusion-exclusion sum != 0");
        std::ostringstream out, err;
        const int code = cli::dispatch({"catnerve", "incl-excl", data("cex.fincat"), data("cex.cover")}, out, err);
        o.require(code == 1, "incl-excl exit code " + std::to_string(code));
    });

    run(2, "circle detection", 1.0, [](Outcome& o) {
        const auto C = fx::counterexample();
        const auto gr = gr_reduced(fx::counterexample_cover(C));
        const auto hg = homology(*gr.category(), 1);
        const auto hc = homology(*C);
        o.require(!hg.truncated && !hc.truncated, "unexpected truncation");
        o.require(hg.betti == std::vector<std::size_t>{1, 1}, "gr betti " + join_betti(hg.betti));
        o.require(hc.betti == std::vector<std::size_t>{1, 0, 0}, "C betti " + join_betti(hc.betti));
    });

    run(3, "inclusion-exclusion on random ideal covers", 30.0, [](Outcome& o) {
        std::mt19937 rng(3);
        std::uniform_int_distribution<std::size_t> size(1, 8);
        std::size_t nontrivial = 0;
        for (int i = 0; i < 100 && o.pass; ++i) {
            const auto P = fx::random_poset(rng, size(rng), 0.25);
            const auto cov = fx::random_closure_cover(rng, P, 4, fx::CoverKind::ideal);
            o.require(is_ideal_cover(cov), "generated cover is not an ideal cover");
            nontrivial += is_nontrivial(cov);
            const auto parent = chi(*P);
            const auto ie = inclusion_exclusion_sum(cov);
            const auto g = chi(*gr_reduced(cov).category());
            o.require(equal_chi(ie, parent), "instance " + std::to_string(i) + ": sum != chi(parent)");
            o.require(equal_chi(g, parent), "instance " + std::to_string(i) + ": chi(gr) != chi(parent)");
        }
        o.require(nontrivial >= 30, "only " + std::to_string(nontrivial) + " non-trivial covers");
    });

    run(4, "betti numbers of gr match the parent", 60.0, [](Outcome& o) {
        std::vector<fx::NamedCover> cases;
        const auto V = fx::poset_v();
        cases.push_back({"v-ideal", fx::v_cover(V)});
        std::mt19937 rng(4);
        // Redraw until the cover has several proper parts.
        auto add = [&](const std::string& name, const CategoryRef& cat, fx::CoverKind kind) {
            for (int attempt = 0; attempt < 50; ++attempt) {
                auto cov = fx::random_closure_cover(rng, cat, 3, kind);
                if (is_nontrivial(cov)) {
                    cases.push_back({name, std::move(cov)});
                    return;
                }
            }
        };
        for (int i = 0; i < 6; ++i) {
            const auto F = fx::random_free_acyclic(rng, 4 + i % 2, "F" + std::to_string(i));
            add("free-ideal", F, fx::CoverKind::ideal);
            add("free-filter", F, fx::CoverKind::filter);
        }
        const auto d = fx::delta_inj(4);
        add("delta-filter", d, fx::CoverKind::filter);
        add("delta-op-ideal", share(opposite(*d)), fx::CoverKind::ideal);
        for (int i = 0; i < 4; ++i) {
            const auto P = fx::random_poset(rng, 7, 0.3);
            add("poset-ideal", P, fx::CoverKind::ideal);
            add("poset-filter", P, fx::CoverKind::filter);
        }
        std::size_t non_poset = 0, nontrivial = 0;
        for (const auto& c : cases) {
            nontrivial += is_nontrivial(c.cover);
            const bool ideal = c.name.find("ideal") != std::string::npos;
            o.require(ideal ? is_ideal_cover(c.cover) : is_filter_cover(c.cover), c.name + ": wrong cover kind");
            o.require(is_acyclic(*c.cover.parent), c.name + ": parent not acyclic");
            if (!is_poset_category(*c.cover.parent)) ++non_poset;
            const auto gr = gr_reduced(c.cover);
            const std::size_t dim = gr.category()->object_count();
            const auto cmp = compare_homology(gr, dim);
            o.require(cmp.ok(), c.name + ": " + (cmp.report.violations.empty() ? "" : cmp.report.violations[0].message));
        }
        o.require(cases.size() >= 10, "fewer than 10 instances");
        o.require(non_poset > 0, "no non-poset instance");
        o.require(nontrivial >= 10, "only " + std::to_string(nontrivial) + " non-trivial covers");
    });

    run(5, "coweighting of the injective simplex category", 0, [](Outcome& o) {
        for (std::size_t k = 2; k <= 5; ++k) {
            const auto D = fx::delta_inj(k);
            o.require(rank(zeta_integer(*D)) == k, "zeta of Delta_" + std::to_string(k) + " not full rank");
            const auto v = solve_weighting(*D, Side::coweight);
            o.require(v.has_value(), "no coweighting for Delta_" + std::to_string(k));
            if (!v) return;
            for (std::size_t n = 0; n < k; ++n)
                o.require((*v)[D->object(std::to_string(n))] == Rational(n % 2 == 0 ? 1 : -1),
                          "Delta_" + std::to_string(k) + " coweighting at " + std::to_string(n));
        }
    });

    run(6, "simplicial identities up to level 3", 0, [](Outcome& o) {
        for (const auto& c : fx::fixture_covers()) {
            const auto r = check_simplicial_identities(c.cover, 3, Variant::ordinary);
            o.require(r.ok(), c.name + ": " + (r.violations.empty() ? "" : r.violations[0].message));
        }
    });

    run(7, "adjunctions", 0, [](Outcome& o) {
        std::size_t ideal_count = 0;
        for (const auto& c : fx::fixture_covers()) {
            const auto gr = gr_reduced(c.cover);
            const auto r = adjunction_check_R(gr, 3);
            o.require(r.ok(), c.name + " R: " + (r.violations.empty() ? "" : r.violations[0].message));
            if (!is_ideal_cover(c.cover)) continue;
            ++ideal_count;
            const auto p = adjunction_check_pi(gr);
            o.require(p.ok(), c.name + " pi: " + (p.violations.empty() ? "" : p.violations[0].message));
            const auto round = compose(rho_tilde(gr), pi_left_adjoint(gr));
            o.require(is_identity_functor(round), c.name + ": rho~ pi is not the identity");
        }
        o.require(ideal_count >= 3, "too few ideal-cover fixtures");
    });

    run(8, "order independence", 0, [](Outcome& o) {
        for (const auto& c : fx::fixture_covers()) {
            if (c.cover.size() > 3) continue;
            const auto base = chi(*gr_reduced(c.cover).category());
            std::vector<std::string> order = c.cover.index_order;
            std::sort(order.begin(), order.end());
            do {
                const auto iso = reorder_iso(c.cover, order);
                o.require(iso.report.ok(), c.name + ": " + (iso.report.violations.empty() ? "" : iso.report.violations[0].message));
                o.require(equal_chi(chi(*iso.second.category()), base), c.name + ": chi changes with the order");
            } while (std::next_permutation(order.begin(), order.end()));
        }
    });

    run(9, "oracle agreement", 0, [](Outcome& o) {
        std::mt19937 rng(9);
        std::uniform_int_distribution<std::size_t> size(1, 8);
        for (int i = 0; i < 200; ++i) {
            const auto P = fx::random_poset(rng, size(rng), 0.4);
            o.require(equal_chi(chi(*P), mobius_oracle(*P)), "instance " + std::to_string(i) + ": mobius differs");
        }
        for (const auto& cat : fx::fixture_categories()) {
            if (!is_acyclic(*cat)) continue;
            const auto r = euler_consistency(*cat);
            o.require(r.ok(), cat->name() + ": " + (r.violations.empty() ? "" : r.violations[0].message));
        }
    });

    run(10, "duality", 0, [](Outcome& o) {
        for (const auto& cat : fx::fixture_categories()) {
            const auto op = opposite(*cat);
            o.require(chi(*cat) == chi(op), cat->name() + ": chi differs from its opposite");
        }
        for (const auto& c : fx::fixture_covers()) {
            const auto op = share(opposite(*c.cover.parent));
            for (const auto& part : c.cover.all_parts()) {
                const auto a = classify_subcategory(part);
                const auto b = classify_subcategory(embed_opposite(part, op));
                o.require(a.is_ideal == b.is_filter && a.is_filter == b.is_ideal, c.name + ": flags do not swap");
            }
        }
    });

    return failures == 0 ? 0 : 1;
}
