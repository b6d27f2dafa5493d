#include "catnerve/grothendieck.hpp"
#include "support/fixtures.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace catnerve;
namespace fx = catnerve::fixtures;

namespace {

bool is_subsequence(const std::vector<std::string>& b, const std::vector<std::string>& a) {
    std::size_t k = 0;
    for (const auto& l : a)
        if (k < b.size() && b[k] == l) ++k;
    return k == b.size();
}

// |gr(X, Y)| counted from the definition: one index map when Y's tuple sits
// inside X's, times the fibre hom-set in D_Y.
std::size_t oracle_hom_count(const Cover& cover, const GrObject& X, const GrObject& Y) {
    if (!is_subsequence(Y.tuple, X.tuple)) return 0;
    std::vector<Subcategory> parts;
    for (const auto& l : Y.tuple) parts.push_back(cover.part(l));
    const auto D = intersect(parts);
    std::size_t n = 0;
    for (MorId f : cover.parent->hom(X.obj, Y.obj))
        if (D.has_morphism(f)) ++n;
    return n;
}

}  // namespace

TEST(Gr, CounterexampleShape) {
    const auto C = fx::counterexample();
    const auto gr = gr_reduced(fx::counterexample_cover(C));
    const auto& G = *gr.category();
    EXPECT_EQ(G.objects(), (std::vector<std::string>{"x@1", "y@1", "y@2", "z@2", "y@1,2"}));
    EXPECT_EQ(G.morphism_count(), 11u);
    EXPECT_TRUE(validate_category(G).ok());
    EXPECT_TRUE(is_acyclic(G));
    EXPECT_EQ(hom_set(G, "x@1", "y@1"), (std::vector<std::string>{"f@1|1", "g@1|1"}));
    EXPECT_EQ(hom_set(G, "y@1,2", "z@2"), (std::vector<std::string>{"h@2|1,2"}));
    // x@1 never reaches z: the parts do not share x.
    EXPECT_TRUE(hom_set(G, "x@1", "z@2").empty());
}

TEST(Gr, HomCountsMatchDefinition) {
    for (const auto& c : fx::fixture_covers()) {
        const auto gr = gr_reduced(c.cover);
        const auto& G = *gr.category();
        ASSERT_TRUE(validate_category(G).ok()) << c.name;
        for (std::size_t X = 0; X < gr.objects().size(); ++X)
            for (std::size_t Y = 0; Y < gr.objects().size(); ++Y)
                EXPECT_EQ(G.hom(X, Y).size(), oracle_hom_count(c.cover, gr.object(X), gr.object(Y)))
                    << c.name << " " << G.object_name(X) << " -> " << G.object_name(Y);
    }
}

TEST(Gr, ObjectCountIsSumOverIntersections) {
    for (const auto& c : fx::fixture_covers()) {
        std::size_t expected = 0;
        for (std::size_t n = 0; n < c.cover.size(); ++n)
            for (const auto& piece : level(c.cover, n, Variant::reduced)) expected += piece.category.object_count();
        EXPECT_EQ(gr_reduced(c.cover).objects().size(), expected) << c.name;
    }
}

TEST(Gr, SinglePartIsTheParent) {
    for (const auto& cat : fx::fixture_categories()) {
        const auto cov = make_cover("one", cat, {{"a", Subcategory::whole(cat)}});
        const auto gr = gr_reduced(cov);
        const auto rho = rho_tilde(gr);
        const auto r = validate_functor(rho);
        EXPECT_TRUE(r.ok()) << cat->name();
        EXPECT_TRUE(r.isomorphism) << cat->name();
    }
}

TEST(Gr, ProjectionIsAFunctor) {
    for (const auto& c : fx::fixture_covers()) EXPECT_TRUE(validate_functor(rho_tilde(gr_reduced(c.cover))).ok()) << c.name;
}

TEST(Gr, RejectsNonCovers) {
    const auto C = fx::counterexample();
    const auto cov = make_cover("bad", C, {{"1", full_subcategory(C, {"x", "z"})}, {"2", full_subcategory(C, {"y", "z"})}});
    EXPECT_THROW(gr_reduced(cov), std::invalid_argument);
}

TEST(Gr, InjectionsAreEnumeratedBySize) {
    const auto inj = detail::injections_into(2);
    ASSERT_EQ(inj.size(), 7u);
    EXPECT_EQ(inj[0].values, (std::vector<std::size_t>{0}));
    EXPECT_EQ(inj[3].values, (std::vector<std::size_t>{0, 1}));
    EXPECT_EQ(inj[6].values, (std::vector<std::size_t>{0, 1, 2}));
    for (const auto& d : inj) EXPECT_TRUE(d.is_monotone() && d.is_injective());
}

TEST(Pi, VCoverValues) {
    const auto V = fx::poset_v();
    const auto gr = gr_reduced(fx::v_cover(V));
    const auto pi = pi_left_adjoint(gr);
    EXPECT_TRUE(validate_functor(pi).ok());
    const auto& G = *gr.category();
    EXPECT_EQ(G.object_name(pi(V->object("c"))), "c@1,2");
    EXPECT_EQ(G.object_name(pi(V->object("a"))), "a@1");
    EXPECT_EQ(G.object_name(pi(V->object("b"))), "b@2");
    EXPECT_TRUE(is_identity_functor(compose(rho_tilde(gr), pi)));
}

TEST(Pi, RequiresIdealCover) {
    const auto gr = gr_reduced(fx::counterexample_cover(fx::counterexample()));
    EXPECT_THROW(pi_left_adjoint(gr), std::invalid_argument);
    EXPECT_THROW(adjunction_check_pi(gr), std::invalid_argument);
    // The diagnostic mode runs anyway and finds the broken bijection.
    EXPECT_FALSE(adjunction_check_pi(gr, AdjunctionMode::diagnostic).ok());
}

TEST(Pi, AdjunctionOnIdealCovers) {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 25; ++trial) {
        const auto P = trial % 2 ? fx::random_poset(rng, 6) : fx::random_free_acyclic(rng, 4);
        const auto cov = fx::random_closure_cover(rng, P, 3, fx::CoverKind::ideal);
        const auto gr = gr_reduced(cov);
        EXPECT_TRUE(adjunction_check_pi(gr).ok());
        EXPECT_TRUE(validate_functor(pi_left_adjoint(gr)).ok());
        EXPECT_TRUE(is_identity_functor(compose(rho_tilde(gr), pi_left_adjoint(gr))));
    }
}

TEST(Ordered, DescriptorsAndReduction) {
    const auto C = fx::counterexample();
    const auto cov = fx::counterexample_cover(C);
    const auto r = reduce_object({{"1", "1", "2"}, C->object("y")});
    EXPECT_EQ(r.object.tuple, (std::vector<std::string>{"1", "2"}));
    EXPECT_EQ(r.psi.values, (std::vector<std::size_t>{0, 0, 1}));
    EXPECT_TRUE(r.psi.is_surjective());
    EXPECT_THROW(check_descriptor(cov, {{"2", "1"}, C->object("y")}), std::invalid_argument);
    EXPECT_THROW(check_descriptor(cov, {{"1"}, C->object("z")}), std::invalid_argument);
    // Length-2 descriptors: (1,1) has x,y; (1,2) has y; (2,2) has y,z.
    std::size_t length_two = 0;
    for (const auto& d : ordered_descriptors(cov, 2)) length_two += d.tuple.size() == 2;
    EXPECT_EQ(length_two, 5u);
}

TEST(Ordered, HomEnumeratesIndexMaps) {
    const auto C = fx::counterexample();
    const auto cov = fx::counterexample_cover(C);
    const ObjId y = C->object("y");
    // From y@1,2 to y@1,1 only φ = (0, 0) works.
    const auto h = ordered_gr_hom(cov, {{"1", "2"}, y}, {{"1", "1"}, y});
    ASSERT_EQ(h.size(), 1u);
    EXPECT_EQ(h[0].phi.values, (std::vector<std::size_t>{0, 0}));
    // From y@1,1 to y@1 there are two index maps.
    EXPECT_EQ(ordered_gr_hom(cov, {{"1", "1"}, y}, {{"1"}, y}).size(), 2u);
}

TEST(Ordered, RAdjunctionOnFixtures) {
    for (const auto& c : fx::fixture_covers()) EXPECT_TRUE(adjunction_check_R(gr_reduced(c.cover), 3).ok()) << c.name;
}

TEST(Reorder, AllOrdersGiveIsomorphicGr) {
    const auto cov = fx::counterexample_cover(fx::counterexample());
    const auto iso = reorder_iso(cov, {"2", "1"});
    EXPECT_TRUE(iso.report.ok());
    EXPECT_TRUE(validate_functor(iso.forward).isomorphism);
    EXPECT_TRUE(is_identity_functor(compose(iso.backward, iso.forward)));
    EXPECT_EQ(iso.second.category()->object_name(*iso.second.find_object({"2", "1"}, cov.parent->object("y"))), "y@2,1");
    EXPECT_THROW(reorder_iso(cov, {"1"}), std::invalid_argument);
}
