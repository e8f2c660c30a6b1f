#include "pal/item.hpp"

#include <algorithm>
#include <sstream>

namespace pal {

namespace {

void append_names(std::ostringstream& out, const std::vector<std::string>& names) {
    out << "{";
    for (size_t i = 0; i < names.size(); ++i) {
        if (i) out << ",";
        out << names[i];
    }
    out << "}";
}

void append_clauses(std::ostringstream& out, const std::vector<ClauseRef>& refs) {
    out << "{";
    for (size_t i = 0; i < refs.size(); ++i) {
        if (i) out << ",";
        out << refs[i].clause << ":" << refs[i].length << ":";
        append_names(out, refs[i].others);
    }
    out << "}";
}

std::vector<std::string> sorted(std::vector<std::string> names) {
    std::sort(names.begin(), names.end());
    return names;
}

std::vector<ClauseRef> sorted(std::vector<ClauseRef> refs) {
    std::sort(refs.begin(), refs.end(), [](const ClauseRef& a, const ClauseRef& b) {
        return a.clause < b.clause;
    });
    for (auto& r : refs) r.others = sorted(std::move(r.others));
    return refs;
}

}  // namespace

std::string identity(const Item& item) {
    return std::visit(
        [](const auto& p) -> std::string {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, ValueItem>) {
                return format_rational(p.value) + "#" + std::to_string(p.copy);
            } else {
                return p.name;
            }
        },
        item.payload);
}

std::string canonical(const Item& item) {
    std::ostringstream out;
    std::visit(
        [&out](const auto& p) {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, GraphVertex>) {
                out << "g:" << p.name << ":";
                append_names(out, p.neighbors);
            } else if constexpr (std::is_same_v<T, BipartiteVertex>) {
                out << "b:" << p.name << ":";
                append_names(out, p.neighbors);
            } else if constexpr (std::is_same_v<T, Job>) {
                out << "j:" << p.name << ":";
                append_names(out, p.before);
                out << ":";
                append_names(out, p.after);
            } else if constexpr (std::is_same_v<T, SatVariable>) {
                out << "s:" << p.name << ":";
                append_clauses(out, p.pos);
                out << ":";
                append_clauses(out, p.neg);
            } else {
                out << "v:" << format_rational(p.value) << "#" << p.copy;
            }
        },
        item.payload);
    return out.str();
}

Item make_graph_vertex(std::string name, std::vector<std::string> neighbors) {
    return Item{GraphVertex{std::move(name), sorted(std::move(neighbors))}};
}

Item make_bipartite_vertex(std::string name, std::vector<std::string> neighbors) {
    return Item{BipartiteVertex{std::move(name), sorted(std::move(neighbors))}};
}

Item make_job(std::string name, std::vector<std::string> before, std::vector<std::string> after) {
    return Item{Job{std::move(name), sorted(std::move(before)), sorted(std::move(after))}};
}

Item make_sat_variable(std::string name, std::vector<ClauseRef> pos, std::vector<ClauseRef> neg) {
    return Item{SatVariable{std::move(name), sorted(std::move(pos)), sorted(std::move(neg))}};
}

Item make_value(Rational value, int copy) {
    return Item{ValueItem{std::move(value), copy}};
}

}  // namespace pal
