#pragma once

// Command dispatch for the catnerve tool. Exit codes: 0 success or check
// passed, 1 check failed, 2 usage or parse error.

#include "catnerve/euler.hpp"
#include "catnerve/grothendieck.hpp"
#include "catnerve/homotopy.hpp"
#include "catnerve/io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <string>
#include <vector>

namespace catnerve::cli {

enum Exit : int { success = 0, check_failed = 1, usage_error = 2 };

namespace detail {

inline const char* yes_no(bool b) { return b ? "yes" : "no"; }

inline CategoryRef load_category(const std::string& path) { return share(parse_category(read_file(path))); }

inline std::string render_vector(const FinCategory& cat, const std::vector<Rational>& v) {
    std::string s;
    for (ObjId x = 0; x < v.size(); ++x) s += " " + cat.object_name(x) + "=" + to_string(v[x]);
    return s;
}

inline int cmd_validate(const std::string& path, std::ostream& out) {
    const FinCategory cat = parse_category_lenient(read_file(path));
    const auto report = validate_category(cat);
    if (report.ok()) {
        out << "ok: category " << cat.name() << " (" << cat.object_count() << " objects, " << cat.morphism_count()
            << " morphisms)\n";
        out << "acyclic: " << yes_no(is_acyclic(cat)) << "\n";
        return success;
    }
    for (const auto& v : report.violations) out << "violation " << v.rule << ": " << v.message << "\n";
    return check_failed;
}

inline int cmd_euler(const std::string& path, std::ostream& out) {
    const CategoryRef cat = load_category(path);
    const auto e = euler_characteristic(*cat);
    out << "weighting:" << (e.weighting ? render_vector(*cat, *e.weighting) : " none") << "\n";
    out << "coweighting:" << (e.coweighting ? render_vector(*cat, *e.coweighting) : " none") << "\n";
    if (!e.chi) {
        out << "chi = undefined (" << e.reason << ")\n";
        return check_failed;
    }
    out << "chi = " << to_string(*e.chi) << "\n";
    return success;
}

inline int cmd_cover_check(const std::string& cat_path, const std::string& cover_path, bool require_ideal,
                           bool require_filter, std::ostream& out) {
    const CategoryRef cat = load_category(cat_path);
    const Cover cover = parse_cover(read_file(cover_path), cat);
    const bool covers = is_cover(cover);
    out << "cover: " << yes_no(covers) << "\n";
    out << "locally finite: " << yes_no(is_locally_finite(cover)) << "\n";
    for (const auto& label : cover.index_order) {
        const Subcategory& p = cover.part(label);
        const auto c = classify_subcategory(p);
        out << "part " << label << ": objects {" << join_labels(p.object_names()) << "} full " << yes_no(p.is_full())
            << " ideal " << yes_no(c.is_ideal) << " filter " << yes_no(c.is_filter) << "\n";
    }
    out << "membership:";
    const auto counts = membership_counts(cover);
    for (ObjId x = 0; x < counts.size(); ++x) out << " " << cat->object_name(x) << "=" << counts[x];
    out << "\n";
    const bool ideal = is_ideal_cover(cover), filter = is_filter_cover(cover);
    out << "ideal cover: " << yes_no(covers && ideal) << "\n";
    out << "filter cover: " << yes_no(covers && filter) << "\n";
    if (!covers || (require_ideal && !ideal) || (require_filter && !filter)) return check_failed;
    return success;
}

inline Variant parse_variant(const std::string& s) {
    if (s == "ordinary") return Variant::ordinary;
    if (s == "ordered") return Variant::ordered;
    if (s == "reduced") return Variant::reduced;
    throw CLI::ValidationError("--variant", "must be ordinary, ordered or reduced");
}

inline int cmd_cech(const std::string& cat_path, const std::string& cover_path, std::size_t n, const std::string& variant,
                    std::ostream& out) {
    const CategoryRef cat = load_category(cat_path);
    const Cover cover = parse_cover(read_file(cover_path), cat);
    const Variant v = parse_variant(variant);
    const auto pieces = level(cover, n, v);
    out << "level " << n << " (" << to_string(v) << "): " << pieces.size() << " pieces\n";
    for (const auto& p : pieces) {
        out << piece_name(p.tuple.labels) << " = ";
        if (p.category.is_empty())
            out << "(empty)";
        else
            out << "{" << join_labels(p.category.object_names()) << "}";
        out << "\n";
    }
    return success;
}

inline int cmd_gr(const std::string& cat_path, const std::string& cover_path, const std::string& emit_path,
                  std::ostream& out) {
    const CategoryRef cat = load_category(cat_path);
    const Cover cover = parse_cover(read_file(cover_path), cat);
    if (!is_cover(cover)) {
        out << "not a cover\n";
        return check_failed;
    }
    const GrCategory gr = gr_reduced(cover);
    const FinCategory& G = *gr.category();
    std::size_t non_identity = 0;
    for (MorId f = 0; f < G.morphism_count(); ++f) non_identity += !G.is_identity(f);
    out << "objects: " << G.object_count() << "\n";
    out << "morphisms: " << G.morphism_count() << " (" << non_identity << " non-identity)\n";
    for (const auto& o : G.objects()) out << "object " << o << "\n";
    for (MorId f = 0; f < G.morphism_count(); ++f)
        if (!G.is_identity(f))
            out << "morphism " << G.morphism_name(f) << " : " << G.object_name(G.dom(f)) << " -> "
                << G.object_name(G.cod(f)) << "\n";
    const bool valid = validate_category(G).ok();
    out << "valid: " << yes_no(valid) << "\n";
    out << "acyclic: " << yes_no(is_acyclic(G)) << "\n";
    if (!emit_path.empty()) {
        std::ofstream file(emit_path);
        if (!file) throw ParseError(0, "cannot write " + emit_path);
        file << emit_category(G);
    }
    return valid ? success : check_failed;
}

inline int cmd_incl_excl(const std::string& cat_path, const std::string& cover_path, std::ostream& out) {
    const CategoryRef cat = load_category(cat_path);
    const Cover cover = parse_cover(read_file(cover_path), cat);
    out << "ideal cover: " << yes_no(is_ideal_cover(cover)) << "\n";
    out << "filter cover: " << yes_no(is_filter_cover(cover)) << "\n";
    for (const auto& term : inclusion_exclusion_terms(cover))
        out << "term " << (term.sign > 0 ? "+" : "-") << "chi(" << piece_name(term.tuple)
            << ") = " << (term.chi ? to_string(*term.chi) : "undefined") << "\n";
    const auto total = inclusion_exclusion_sum(cover);
    const auto whole = chi(*cat);
    out << "sum = " << (total ? to_string(*total) : "undefined") << "\n";
    out << "chi(" << cat->name() << ") = " << (whole ? to_string(*whole) : "undefined") << "\n";
    if (is_cover(cover)) {
        const auto g = chi(*gr_reduced(cover).category());
        out << "chi(gr) = " << (g ? to_string(*g) : "undefined") << "\n";
    }
    if (total && whole && *total == *whole) {
        out << "MATCH\n";
        return success;
    }
    out << "MISMATCH\n";
    return check_failed;
}

inline void print_homology(const ChainComplexQ& cx, const HomologyReport& h, std::ostream& out) {
    out << "dim\tbasis\tbetti\n";
    for (std::size_t k = 0; k < h.betti.size(); ++k)
        out << k << "\t" << (k < cx.basis.size() ? cx.basis[k].size() : 0) << "\t" << h.betti[k] << "\n";
    if (h.truncated)
        out << "truncated: yes\n";
    else
        out << "euler_top = " << h.euler_top << "\n";
}

inline int cmd_homology(const std::string& cat_path, std::optional<std::size_t> max_dim, std::ostream& out) {
    const CategoryRef cat = load_category(cat_path);
    if (!max_dim && !is_acyclic(*cat)) throw CLI::ValidationError("--max-dim", cat->name() + " is not acyclic");
    const auto cx = nerve_chains(*cat, max_dim);
    print_homology(cx, betti_numbers(cx), out);
    return success;
}

inline int cmd_nerve_compare(const std::string& cat_path, const std::string& cover_path,
                             std::optional<std::size_t> max_dim, std::ostream& out) {
    const CategoryRef cat = load_category(cat_path);
    const Cover cover = parse_cover(read_file(cover_path), cat);
    if (!is_cover(cover)) {
        out << "not a cover\n";
        return check_failed;
    }
    const GrCategory gr = gr_reduced(cover);
    if (!max_dim) {
        if (!is_acyclic(*cat) || !is_acyclic(*gr.category()))
            throw CLI::ValidationError("--max-dim", "required when a nerve is infinite-dimensional");
        max_dim = std::max(nerve_chains(*cat).top_dim(), nerve_chains(*gr.category()).top_dim());
    }
    const auto cmp = compare_homology(gr, *max_dim);
    out << "parent betti: " << join_betti(cmp.parent.betti) << "\n";
    out << "gr betti: " << join_betti(cmp.gr.betti) << "\n";
    if (cmp.parent.truncated || cmp.gr.truncated) out << "truncated: yes (not evidence)\n";
    if (cmp.ok()) {
        out << "betti equal: " << join_betti(cmp.parent.betti) << "\n";
        return success;
    }
    if (cmp.parent.betti != cmp.gr.betti)
        out << "betti differ: " << join_betti(cmp.parent.betti) << " vs " << join_betti(cmp.gr.betti) << "\n";
    return check_failed;
}

inline int cmd_adjunction(const std::string& cat_path, const std::string& cover_path, std::ostream& out) {
    const CategoryRef cat = load_category(cat_path);
    const Cover cover = parse_cover(read_file(cover_path), cat);
    if (!is_cover(cover)) {
        out << "not a cover\n";
        return check_failed;
    }
    const GrCategory gr = gr_reduced(cover);
    bool ok = true;
    const bool ideal = is_ideal_cover(cover);
    out << "ideal cover: " << yes_no(ideal) << "\n";
    if (ideal) {
        const FunctorMap pi = pi_left_adjoint(gr);
        const bool functor_ok = validate_functor(pi).ok();
        const bool section = is_identity_functor(compose(rho_tilde(gr), pi));
        out << "pi functor: " << (functor_ok ? "ok" : "FAIL") << "\n";
        out << "rho~ . pi = id: " << (section ? "ok" : "FAIL") << "\n";
        ok = ok && functor_ok && section;
    }
    const auto pi_report = adjunction_check_pi(gr, ideal ? AdjunctionMode::strict : AdjunctionMode::diagnostic);
    out << "pi adjunction" << (ideal ? "" : " (diagnostic)") << ": " << (pi_report.ok() ? "ok" : "FAIL") << "\n";
    for (const auto& v : pi_report.violations) out << "  " << v.message << "\n";
    ok = ok && pi_report.ok();
    const auto r_report = adjunction_check_R(gr, 3);
    out << "R adjunction (tuple length <= 3): " << (r_report.ok() ? "ok" : "FAIL") << "\n";
    for (const auto& v : r_report.violations) out << "  " << v.message << "\n";
    ok = ok && r_report.ok();
    return ok ? success : check_failed;
}

}  // namespace detail

/// Runs one command line; argv[0] is the program name.
/// argv[0] is the program name, as in main().
inline int dispatch(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Čech nerves, Grothendieck constructions and Euler characteristics of finite categories", "catnerve"};
    app.require_subcommand(1);

    std::string cat_path, cover_path, variant = "ordinary", emit_path;
    std::size_t level_n = 0;
    std::optional<std::size_t> max_dim;
    bool require_ideal = false, require_filter = false;
    int status = success;

    auto add_cat = [&](CLI::App* sub) { sub->add_option("category", cat_path, "category file")->required(); };
    auto add_cover = [&](CLI::App* sub) { sub->add_option("cover", cover_path, "cover file")->required(); };

    auto* validate = app.add_subcommand("validate", "check the category axioms");
    add_cat(validate);
    auto* euler = app.add_subcommand("euler", "weighting, coweighting and Euler characteristic");
    add_cat(euler);
    auto* cover_check = app.add_subcommand("cover-check", "check a cover and classify its parts");
    add_cat(cover_check);
    add_cover(cover_check);
    auto* req = cover_check->add_flag("--require-ideal", require_ideal, "fail unless every part is an ideal");
    cover_check->add_flag("--require-filter", require_filter, "fail unless every part is a filter")->excludes(req);
    auto* cech = app.add_subcommand("cech", "list one level of the Čech nerve");
    add_cat(cech);
    add_cover(cech);
    cech->add_option("--level", level_n, "nerve level n")->required();
    cech->add_option("--variant", variant, "ordinary, ordered or reduced");
    auto* gr = app.add_subcommand("gr", "Grothendieck construction of the reduced nerve");
    add_cat(gr);
    add_cover(gr);
    gr->add_option("--emit", emit_path, "write the construction as a category file");
    auto* incl = app.add_subcommand("incl-excl", "inclusion-exclusion sum against the Euler characteristic");
    add_cat(incl);
    add_cover(incl);
    auto* hom = app.add_subcommand("homology", "rational Betti numbers of the nerve");
    add_cat(hom);
    hom->add_option("--max-dim", max_dim, "highest degree (required for categories with cycles)");
    auto* compare = app.add_subcommand("nerve-compare", "Betti numbers of a category against gr of its reduced nerve");
    add_cat(compare);
    add_cover(compare);
    compare->add_option("--max-dim", max_dim, "highest degree");
    auto* adj = app.add_subcommand("adjunction", "check the adjunctions of the reduced construction");
    add_cat(adj);
    add_cover(adj);

    std::vector<std::string> args(argv.begin() + (argv.empty() ? 0 : 1), argv.end());
    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
        if (validate->parsed()) status = detail::cmd_validate(cat_path, out);
        else if (euler->parsed()) status = detail::cmd_euler(cat_path, out);
        else if (cover_check->parsed()) status = detail::cmd_cover_check(cat_path, cover_path, require_ideal, require_filter, out);
        else if (cech->parsed()) status = detail::cmd_cech(cat_path, cover_path, level_n, variant, out);
        else if (gr->parsed()) status = detail::cmd_gr(cat_path, cover_path, emit_path, out);
        else if (incl->parsed()) status = detail::cmd_incl_excl(cat_path, cover_path, out);
        else if (hom->parsed()) status = detail::cmd_homology(cat_path, max_dim, out);
        else if (compare->parsed()) status = detail::cmd_nerve_compare(cat_path, cover_path, max_dim, out);
        else if (adj->parsed()) status = detail::cmd_adjunction(cat_path, cover_path, out);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return success;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return success;
    } catch (const CLI::Error& e) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    } catch (const catnerve::ValidationError& e) {
        err << "error: " << e.what() << "\n";
        for (const auto& v : e.report().violations) err << "  " << v.message << "\n";
        return usage_error;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    }
    return status;
}

}  // namespace catnerve::cli
