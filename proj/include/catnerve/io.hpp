#pragma once

// Line-oriented text formats for categories and covers.
//
// Category file:
//   category <name>
//   objects <id> <id> ...
//   mor <id> : <obj> -> <obj>
//   comp <g> <f> = <h>          # g ∘ f = h, for every composable non-identity pair
//
// Cover file:
//   cover <name> of <category-name>
//   order <label> <label> ...                              # optional
//   part <label> : <obj> <obj> ...                         # full part
//   part <label> : objects <obj> ... ; morphisms <mor> ... # explicit part
//
// '#' starts a comment. Identities are named id_<object> and are implicit,
// as are compositions involving them.

#include "catnerve/covers.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace catnerve {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& msg)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + msg : msg), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

namespace detail {
struct Line {
    std::size_t number;
    std::vector<std::string> tokens;
};

inline std::vector<Line> tokenize(const std::string& text) {
    std::vector<Line> out;
    std::istringstream in(text);
    std::string raw;
    std::size_t number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::istringstream words(raw);
        Line line{number, {}};
        for (std::string w; words >> w;) line.tokens.push_back(w);
        if (!line.tokens.empty()) out.push_back(std::move(line));
    }
    return out;
}

struct CategoryText {
    std::string name;
    std::vector<std::pair<std::string, std::size_t>> objects;
    struct Mor {
        std::string id, dom, cod;
        std::size_t line;
    };
    std::vector<Mor> morphisms;
    struct Comp {
        std::string g, f, h;
        std::size_t line;
    };
    std::vector<Comp> comps;
};

inline CategoryText read_category_text(const std::string& text) {
    CategoryText c;
    bool named = false;
    for (const auto& line : tokenize(text)) {
        const auto& t = line.tokens;
        if (t[0] == "category") {
            if (t.size() != 2) throw ParseError(line.number, "expected 'category <name>'");
            if (named) throw ParseError(line.number, "category declared twice");
            c.name = t[1];
            named = true;
        } else if (!named) {
            throw ParseError(line.number, "file must start with 'category <name>'");
        } else if (t[0] == "objects") {
            for (std::size_t i = 1; i < t.size(); ++i) c.objects.push_back({t[i], line.number});
        } else if (t[0] == "mor") {
            if (t.size() != 6 || t[2] != ":" || t[4] != "->")
                throw ParseError(line.number, "expected 'mor <id> : <obj> -> <obj>'");
            c.morphisms.push_back({t[1], t[3], t[5], line.number});
        } else if (t[0] == "comp") {
            if (t.size() != 5 || t[3] != "=") throw ParseError(line.number, "expected 'comp <g> <f> = <h>'");
            c.comps.push_back({t[1], t[2], t[4], line.number});
        } else {
            throw ParseError(line.number, "unknown declaration '" + t[0] + "'");
        }
    }
    if (!named) throw ParseError(0, "missing 'category <name>' declaration");
    return c;
}

inline FinCategory build_category(const CategoryText& c) {
    CategoryBuilder b(c.name);
    for (const auto& [o, line] : c.objects) b.object(o);
    for (const auto& m : c.morphisms) b.morphism(m.id, m.dom, m.cod);
    for (const auto& k : c.comps) b.compose(k.g, k.f, k.h);
    return b.build();
}
}  // namespace detail

/// Parses without validating; structural problems stay in the value for
/// validate_category() to report. Throws ParseError on syntax errors only.
inline FinCategory parse_category_lenient(const std::string& text) {
    return detail::build_category(detail::read_category_text(text));
}

/// Parses and validates. Throws ParseError on syntax errors, unresolved
/// references, or a failed validation.
inline FinCategory parse_category(const std::string& text) {
    const auto c = detail::read_category_text(text);
    std::set<std::string> objects, morphisms;
    for (const auto& [o, line] : c.objects)
        if (!objects.insert(o).second) throw ParseError(line, "object '" + o + "' declared twice");
    for (const auto& o : objects) morphisms.insert(identity_name(o));
    for (const auto& m : c.morphisms) {
        if (!morphisms.insert(m.id).second) throw ParseError(m.line, "morphism '" + m.id + "' declared twice");
        if (!objects.count(m.dom)) throw ParseError(m.line, "unknown object '" + m.dom + "'");
        if (!objects.count(m.cod)) throw ParseError(m.line, "unknown object '" + m.cod + "'");
    }
    for (const auto& k : c.comps)
        for (const auto* id : {&k.g, &k.f, &k.h})
            if (!morphisms.count(*id)) throw ParseError(k.line, "unknown morphism '" + *id + "'");

    FinCategory cat = detail::build_category(c);
    const auto report = validate_category(cat);
    if (!report.ok()) {
        std::string msg = "category " + cat.name() + " is not valid:";
        for (const auto& v : report.violations) msg += "\n  " + v.message;
        throw ParseError(0, msg);
    }
    return cat;
}

/// Normal form: non-identity morphisms in declaration order, then the
/// compositions of non-identity pairs ordered by (f, g).
inline std::string emit_category(const FinCategory& cat) {
    std::ostringstream out;
    out << "category " << cat.name() << "\n";
    out << "objects";
    for (const auto& o : cat.objects()) out << " " << o;
    out << "\n";
    for (ObjId x = 0; x < cat.object_count(); ++x)
        if (cat.morphism_name(cat.identity(x)) != identity_name(cat.object_name(x)))
            throw std::invalid_argument("identity of " + cat.object_name(x) + " is not named " +
                                        identity_name(cat.object_name(x)));
    for (MorId f = 0; f < cat.morphism_count(); ++f) {
        if (cat.is_identity(f)) continue;
        out << "mor " << cat.morphism_name(f) << " : " << cat.object_name(cat.dom(f)) << " -> "
            << cat.object_name(cat.cod(f)) << "\n";
    }
    for (MorId f = 0; f < cat.morphism_count(); ++f) {
        if (cat.is_identity(f)) continue;
        for (MorId g : cat.outgoing(cat.cod(f))) {
            if (cat.is_identity(g)) continue;
            out << "comp " << cat.morphism_name(g) << " " << cat.morphism_name(f) << " = "
                << cat.morphism_name(cat.compose(g, f)) << "\n";
        }
    }
    return out.str();
}

/// Parses a cover of `cat`. Parts are full unless given with explicit
/// morphisms; without an order line the labels are sorted.
inline Cover parse_cover(const std::string& text, const CategoryRef& cat) {
    std::string name;
    bool named = false;
    std::optional<std::vector<std::string>> order;
    std::size_t order_line = 0;
    std::vector<std::pair<std::string, Subcategory>> parts;
    std::set<std::string> labels;

    auto check_objects = [&](const std::vector<std::string>& objs, std::size_t line) {
        for (const auto& o : objs)
            if (!cat->find_object(o)) throw ParseError(line, "unknown object '" + o + "'");
    };

    for (const auto& line : detail::tokenize(text)) {
        const auto& t = line.tokens;
        if (t[0] == "cover") {
            if (t.size() != 4 || t[2] != "of") throw ParseError(line.number, "expected 'cover <name> of <category>'");
            if (named) throw ParseError(line.number, "cover declared twice");
            if (t[3] != cat->name())
                throw ParseError(line.number, "cover is of '" + t[3] + "' but the category is '" + cat->name() + "'");
            name = t[1];
            named = true;
        } else if (!named) {
            throw ParseError(line.number, "file must start with 'cover <name> of <category>'");
        } else if (t[0] == "order") {
            if (order) throw ParseError(line.number, "order given twice");
            order = std::vector<std::string>(t.begin() + 1, t.end());
            order_line = line.number;
        } else if (t[0] == "part") {
            if (t.size() < 3 || t[2] != ":") throw ParseError(line.number, "expected 'part <label> : ...'");
            const std::string& label = t[1];
            if (!labels.insert(label).second) throw ParseError(line.number, "part '" + label + "' declared twice");
            std::vector<std::string> rest(t.begin() + 3, t.end());
            auto semi = std::find(rest.begin(), rest.end(), ";");
            if (semi == rest.end()) {
                check_objects(rest, line.number);
                parts.emplace_back(label, full_subcategory(cat, rest));
                continue;
            }
            std::vector<std::string> objs(rest.begin(), semi), mors(semi + 1, rest.end());
            if (objs.empty() || objs.front() != "objects" || mors.empty() || mors.front() != "morphisms")
                throw ParseError(line.number, "expected 'part <label> : objects ... ; morphisms ...'");
            objs.erase(objs.begin());
            mors.erase(mors.begin());
            check_objects(objs, line.number);
            for (const auto& m : mors)
                if (!cat->find_morphism(m)) throw ParseError(line.number, "unknown morphism '" + m + "'");
            try {
                parts.emplace_back(label, make_subcategory(cat, objs, mors));
            } catch (const ValidationError& e) {
                std::string msg = "part '" + label + "' is not a subcategory:";
                for (const auto& v : e.report().violations) msg += " " + v.message + ";";
                throw ParseError(line.number, msg);
            }
        } else {
            throw ParseError(line.number, "unknown declaration '" + t[0] + "'");
        }
    }
    if (!named) throw ParseError(0, "missing 'cover <name> of <category>' declaration");
    if (order) {
        std::vector<std::string> sorted = *order;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw ParseError(order_line, "order repeats a label");
        for (const auto& l : sorted)
            if (!labels.count(l)) throw ParseError(order_line, "order names unknown label '" + l + "'");
        if (sorted.size() != labels.size()) throw ParseError(order_line, "order does not list every part");
    }
    return make_cover(name, cat, parts, order);
}

inline std::string emit_cover(const Cover& cover) {
    std::ostringstream out;
    out << "cover " << cover.name << " of " << cover.parent->name() << "\n";
    out << "order";
    for (const auto& l : cover.index_order) out << " " << l;
    out << "\n";
    for (const auto& l : cover.index_order) {
        const Subcategory& p = cover.part(l);
        out << "part " << l << " :";
        if (p.is_full()) {
            for (const auto& o : p.object_names()) out << " " << o;
        } else {
            out << " objects";
            for (const auto& o : p.object_names()) out << " " << o;
            out << " ; morphisms";
            for (MorId f : p.morphism_ids())
                if (!cover.parent->is_identity(f)) out << " " << cover.parent->morphism_name(f);
        }
        out << "\n";
    }
    return out.str();
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace catnerve
