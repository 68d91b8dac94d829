#include "w6h/dsl.hpp"

#include <sstream>

namespace w6h {

namespace {

std::string quote(std::string_view text) {
    std::string out = "\"";
    for (char c : text) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default: out.push_back(c);
        }
    }
    out.push_back('"');
    return out;
}

void print_item(std::ostringstream& out, const Artifact& artifact) {
    out << "    item " << artifact.name;
    if (!artifact.description.empty()) out << " " << quote(artifact.description);
    if (!artifact.kind.empty()) out << " kind " << quote(artifact.kind);
    out << "\n";
}

void print_link(std::ostringstream& out, const SelectionLink& link) {
    out << "    link " << link.subject << " -> " << link.object;
    if (!link.verbs.empty()) {
        out << " [";
        bool first = true;
        for (CrudVerb verb : link.verbs.items()) {
            if (!first) out << ",";
            out << to_letter(verb);
            first = false;
        }
        out << "]";
    }
    if (!link.note.empty()) out << " " << quote(link.note);
    out << "\n";
}

void print_slice(std::ostringstream& out, const ViewSlice& slice) {
    bool any = !slice.links().empty();
    for (Interrogative q : all_interrogatives())
        if (!slice.cell(q).artifacts.empty()) any = true;
    if (!any) return;

    out << "view " << to_string(slice.row()) << " {\n";
    for (Interrogative q : all_interrogatives()) {
        const Cell& cell = slice.cell(q);
        bool holds_links = q == Interrogative::Which && !slice.links().empty();
        if (cell.artifacts.empty() && !holds_links) continue;

        out << "  " << to_string(q) << " {\n";
        for (const Artifact& artifact : cell.artifacts) print_item(out, artifact);
        if (holds_links)
            for (const SelectionLink& link : slice.links()) print_link(out, link);
        out << "  }\n";
    }
    out << "}\n";
}

void print_plan(std::ostringstream& out, const BacklogPlan& plan) {
    out << "plan {\n";
    out << "  backlog {\n";
    for (const std::string& item : plan.backlog) out << "    item " << item << "\n";
    out << "  }\n";
    for (const auto& [name, items] : plan.sprints) {
        out << "  sprint " << name << " {\n";
        for (const std::string& item : items) out << "    " << item << "\n";
        out << "  }\n";
    }
    for (const auto& [name, sprints] : plan.releases) {
        out << "  release " << name << " {\n";
        for (const std::string& sprint : sprints) out << "    " << sprint << "\n";
        out << "  }\n";
    }
    out << "}\n";
}

} // namespace

std::string print(const Workspace& ws) {
    std::ostringstream out;
    out << "model " << quote(ws.name) << "\n";
    for (const Snapshot& snap : ws.snapshots) {
        out << "iteration " << snap.iteration();
        if (!snap.label().empty()) out << " label " << quote(snap.label());
        out << "\n";
        for (PerspectiveRow row : all_perspectives())
            print_slice(out, snap.slice(row));
    }
    return out.str();
}

std::string print(const ParsedFile& file) {
    std::ostringstream out;
    out << print(file.workspace);
    for (const BacklogPlan& plan : file.plans) print_plan(out, plan);
    return out.str();
}

} // namespace w6h
