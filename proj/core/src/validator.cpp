#include "w6h/validator.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <tuple>

#include "w6h/derivations.hpp"
#include "w6h/errors.hpp"

namespace w6h {

namespace {

constexpr CodeInfo registry[] = {
    {DiagCode::E001, "DependencyViolation",
     "a populated cell's interrogative has a prerequisite group with no "
     "populated member in the same view; the prerequisite interrogatives "
     "must be answered first"},
    {DiagCode::E002, "DanglingReference",
     "a selection link references an artifact name that is not declared in "
     "its view"},
    {DiagCode::E003, "CrudVerbPlacement",
     "CRUD verbs are restricted to links from a how-cell function to a "
     "what-cell entity"},
    {DiagCode::E004, "DuplicateName",
     "artifact names must be unique within a view (normally rejected at "
     "parse as P004)"},
    {DiagCode::E005, "IterationOrder",
     "snapshot iteration numbers must be strictly increasing (normally "
     "rejected at parse as P005)"},
    {DiagCode::E006, "SprintItemUnknown",
     "a sprint selects an item that is not in the backlog"},
    {DiagCode::E007, "ReleaseSprintUnknown",
     "a release selects a sprint that is not declared"},
    {DiagCode::W101, "EmptyCell",
     "holistic completeness expects every cell of every view to be "
     "populated"},
    {DiagCode::W102, "SelectionWithoutLinks",
     "the which cell is populated but the view declares no selection links"},
    {DiagCode::W103, "EntityNeverCreated",
     "no function creates this entity anywhere in the CRUD matrix"},
    {DiagCode::W104, "EntityNeverRead",
     "no function reads this entity anywhere in the CRUD matrix"},
    {DiagCode::W105, "FunctionWithoutData",
     "this function's CRUD row is empty; it touches no entity"},
    {DiagCode::W106, "ItemInMultipleSprints",
     "a backlog item is assigned to more than one sprint"},
};

struct ParseCodeInfo {
    std::string_view code;
    std::string_view explanation;
};

constexpr ParseCodeInfo parse_registry[] = {
    {"P001", "syntax error"},
    {"P002", "unknown keyword (view, column or block name)"},
    {"P003", "CRUD verb outside C, R, U, D"},
    {"P004", "duplicate name within a view, backlog, sprint or release"},
    {"P005", "iteration numbers must be strictly increasing"},
};

std::string group_names(const PrereqGroup& group) {
    std::string out;
    for (Interrogative q : group.items()) {
        if (!out.empty()) out += " or ";
        out += std::string(to_string(q));
    }
    return out;
}

bool is_plan_code(DiagCode code) {
    return code == DiagCode::E006 || code == DiagCode::E007 ||
           code == DiagCode::W106;
}

Diagnostic make(DiagCode code, Location location, std::string message) {
    return {code, severity_of(code), std::move(location), std::move(message)};
}

void check_slice(const Snapshot& snap, const ViewSlice& slice,
                 const DependencyRuleSet& rules, std::vector<Diagnostic>& out) {
    int iteration = snap.iteration();
    PerspectiveRow row = slice.row();
    InterrogativeSet present = populated(slice);

    // E001: populated cells whose prerequisite groups are unmet.
    for (Interrogative q : present.items()) {
        std::string unmet;
        for (const PrereqGroup& group : rules.prerequisites(q)) {
            if (group.intersects(present)) continue;
            if (!unmet.empty()) unmet += "; ";
            unmet += "(" + group_names(group) + ")";
        }
        if (!unmet.empty()) {
            out.push_back(make(DiagCode::E001, {iteration, row, q, {}},
                               "cell is populated but prerequisite group(s) "
                               "unmet: " + unmet));
        }
    }

    // E002 / E003: link endpoints and CRUD verb placement.
    for (const SelectionLink& link : slice.links()) {
        auto subject_column = slice.find_column(link.subject);
        auto object_column = slice.find_column(link.object);
        for (const std::string& endpoint : {link.subject, link.object}) {
            if (!slice.find_column(endpoint)) {
                out.push_back(
                    make(DiagCode::E002,
                         {iteration, row, Interrogative::Which, endpoint},
                         "link " + link.subject + " -> " + link.object +
                             " references undeclared name '" + endpoint + "'"));
            }
        }
        if (subject_column && object_column && !link.verbs.empty() &&
            !(subject_column == Interrogative::How &&
              object_column == Interrogative::What)) {
            out.push_back(
                make(DiagCode::E003,
                     {iteration, row, Interrogative::Which, link.subject},
                     "CRUD verbs on link " + link.subject + " -> " +
                         link.object + " (" + link.verbs.letters() +
                         "); verbs are legal only on how -> what links"));
        }
    }

    // E004: belt and braces; the model enforces uniqueness on construction.
    {
        std::set<std::string> seen;
        for (Interrogative q : all_interrogatives()) {
            for (const Artifact& artifact : slice.cell(q).artifacts) {
                if (!seen.insert(artifact.name).second) {
                    out.push_back(make(DiagCode::E004, {iteration, row, q,
                                                        artifact.name},
                                       "duplicate artifact name '" +
                                           artifact.name + "'"));
                }
            }
        }
    }

    // W101: holism, one per empty cell.
    for (Interrogative q : all_interrogatives()) {
        if (slice.cell(q).artifacts.empty()) {
            out.push_back(
                make(DiagCode::W101, {iteration, row, q, {}}, "empty cell"));
        }
    }

    // W102: a selection that selects nothing.
    if (present.contains(Interrogative::Which) && slice.links().empty()) {
        out.push_back(make(DiagCode::W102,
                           {iteration, row, Interrogative::Which, {}},
                           "which cell is populated but the view has no links"));
    }

    // W103/W104/W105, delegated to the CRUD derivation.
    for (Diagnostic finding : crud_findings(derive_crud(slice))) {
        finding.location.iteration = iteration;
        finding.location.row = row;
        out.push_back(std::move(finding));
    }
}

} // namespace

std::string_view to_string(Severity severity) {
    return severity == Severity::Error ? "error" : "warning";
}

std::string_view to_string(DiagCode code) {
    switch (code) {
        case DiagCode::E001: return "E001";
        case DiagCode::E002: return "E002";
        case DiagCode::E003: return "E003";
        case DiagCode::E004: return "E004";
        case DiagCode::E005: return "E005";
        case DiagCode::E006: return "E006";
        case DiagCode::E007: return "E007";
        case DiagCode::W101: return "W101";
        case DiagCode::W102: return "W102";
        case DiagCode::W103: return "W103";
        case DiagCode::W104: return "W104";
        case DiagCode::W105: return "W105";
        case DiagCode::W106: return "W106";
    }
    return "????";
}

Severity severity_of(DiagCode code) {
    return to_string(code).front() == 'E' ? Severity::Error : Severity::Warning;
}

std::span<const CodeInfo> code_registry() {
    return registry;
}

std::string explain(std::string_view code) {
    for (const CodeInfo& info : registry) {
        if (to_string(info.code) == code)
            return std::string(info.name) + ": " + std::string(info.explanation);
    }
    for (const ParseCodeInfo& info : parse_registry) {
        if (info.code == code) return std::string(info.explanation);
    }
    throw UnknownCodeError("unknown diagnostic code \"" + std::string(code) +
                           "\"");
}

std::string render(const Diagnostic& diagnostic) {
    std::ostringstream out;
    out << to_string(diagnostic.severity) << " " << to_string(diagnostic.code)
        << " ";
    if (is_plan_code(diagnostic.code)) {
        out << "plan";
    } else {
        const Location& loc = diagnostic.location;
        if (loc.iteration) out << *loc.iteration;
        if (loc.row) out << ":" << to_string(*loc.row);
        if (loc.column) out << ":" << to_string(*loc.column);
        if (!loc.artifact.empty()) out << ":" << loc.artifact;
    }
    out << " " << diagnostic.message;
    return out.str();
}

Profile Profile::standard() {
    return {standard_rules(), false};
}

std::vector<Diagnostic> validate(const Workspace& ws, const Profile& profile) {
    std::vector<Diagnostic> out;

    int previous_iteration = 0;
    bool first = true;
    for (const Snapshot& snap : ws.snapshots) {
        if (!first && snap.iteration() <= previous_iteration) {
            out.push_back(make(DiagCode::E005,
                               {snap.iteration(), std::nullopt, std::nullopt, {}},
                               "iteration " + std::to_string(snap.iteration()) +
                                   " does not extend the sequence (previous is " +
                                   std::to_string(previous_iteration) + ")"));
        }
        previous_iteration = snap.iteration();
        first = false;

        for (PerspectiveRow row : all_perspectives())
            check_slice(snap, snap.slice(row), profile.rules, out);
    }

    auto key = [](const Diagnostic& d) {
        return std::make_tuple(
            d.location.iteration.value_or(0),
            d.location.row ? row_index(*d.location.row) : 0,
            d.location.column ? canonical_index(*d.location.column) : 0,
            std::string(to_string(d.code)), d.location.artifact, d.message);
    };
    std::sort(out.begin(), out.end(),
              [&](const Diagnostic& a, const Diagnostic& b) {
                  return key(a) < key(b);
              });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const Diagnostic& a, const Diagnostic& b) {
                              return a.code == b.code &&
                                     a.location == b.location;
                          }),
              out.end());
    return out;
}

} // namespace w6h
