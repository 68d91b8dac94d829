#include "w6h/derivations.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "w6h/errors.hpp"

namespace w6h {

namespace {

std::vector<std::string> cell_names(const ViewSlice& slice, Interrogative column) {
    std::vector<std::string> out;
    for (const Artifact& artifact : slice.cell(column).artifacts)
        out.push_back(artifact.name);
    return out;
}

Diagnostic hygiene(DiagCode code, Interrogative column, std::string name,
                   std::string message) {
    return {code, severity_of(code),
            {std::nullopt, std::nullopt, column, std::move(name)},
            std::move(message)};
}

} // namespace

CrudMatrix derive_crud(const ViewSlice& slice) {
    CrudMatrix matrix;
    matrix.functions = cell_names(slice, Interrogative::How);
    matrix.entities = cell_names(slice, Interrogative::What);

    for (const SelectionLink& link : slice.links()) {
        if (link.verbs.empty()) continue;
        if (slice.find_column(link.subject) != Interrogative::How) continue;
        if (slice.find_column(link.object) != Interrogative::What) continue;
        matrix.entries[{link.subject, link.object}].merge(link.verbs);
    }
    return matrix;
}

std::vector<Diagnostic> crud_findings(const CrudMatrix& matrix) {
    std::vector<Diagnostic> out;

    for (const std::string& entity : matrix.entities) {
        bool created = false;
        bool read = false;
        for (const std::string& function : matrix.functions) {
            auto it = matrix.entries.find({function, entity});
            if (it == matrix.entries.end()) continue;
            created = created || it->second.contains(CrudVerb::Create);
            read = read || it->second.contains(CrudVerb::Read);
        }
        if (!created) {
            out.push_back(hygiene(DiagCode::W103, Interrogative::What, entity,
                                  "entity '" + entity + "' is never created"));
        }
        if (!read) {
            out.push_back(hygiene(DiagCode::W104, Interrogative::What, entity,
                                  "entity '" + entity + "' is never read"));
        }
    }

    for (const std::string& function : matrix.functions) {
        bool touches = false;
        for (const std::string& entity : matrix.entities) {
            if (matrix.entries.count({function, entity})) touches = true;
        }
        if (!touches) {
            out.push_back(hygiene(DiagCode::W105, Interrogative::How, function,
                                  "function '" + function +
                                      "' touches no entity"));
        }
    }
    return out;
}

std::string render(const CrudMatrix& matrix) {
    std::ostringstream out;
    for (const std::string& entity : matrix.entities) out << "\t" << entity;
    out << "\n";
    for (const std::string& function : matrix.functions) {
        out << function;
        for (const std::string& entity : matrix.entities) {
            auto it = matrix.entries.find({function, entity});
            out << "\t"
                << (it == matrix.entries.end() ? "-" : it->second.letters());
        }
        out << "\n";
    }
    return out.str();
}

InterrogativeSet ElicitationSession::answered() const {
    InterrogativeSet out;
    for (const auto& [q, items] : answers_) out.insert(q);
    return out;
}

InterrogativeSet ElicitationSession::askable() const {
    return next_questions(answered(), rules_);
}

ElicitationSession start_session(PerspectiveRow row,
                                 const DependencyRuleSet& rules) {
    return ElicitationSession(row, rules);
}

ElicitationSession answer(ElicitationSession session, Interrogative q,
                          std::vector<Artifact> items) {
    InterrogativeSet answered = session.answered();
    if (answered.contains(q)) {
        throw NotAnswerableError("'" + std::string(to_string(q)) +
                                 "' is already answered");
    }
    if (!is_answerable(q, answered, session.rules())) {
        throw NotAnswerableError("'" + std::string(to_string(q)) +
                                 "' has unmet prerequisites");
    }

    std::set<std::string, std::less<>> names;
    for (const auto& [prior, prior_items] : session.answers())
        for (const Artifact& artifact : prior_items) names.insert(artifact.name);
    for (const Artifact& artifact : items) {
        if (!names.insert(artifact.name).second) {
            throw DuplicateNameError("duplicate artifact name \"" +
                                     artifact.name + "\" in session");
        }
    }

    session.answers_.emplace_back(q, std::move(items));
    return session;
}

ViewSlice finish(const ElicitationSession& session) {
    ViewSlice slice(session.row());
    for (const auto& [q, items] : session.answers())
        for (const Artifact& artifact : items) slice.add_artifact(q, artifact);
    return slice;
}

std::vector<Diagnostic> validate_plan(const BacklogPlan& plan) {
    std::vector<Diagnostic> out;

    auto in_backlog = [&](const std::string& item) {
        return std::find(plan.backlog.begin(), plan.backlog.end(), item) !=
               plan.backlog.end();
    };

    for (const auto& [sprint, items] : plan.sprints) {
        for (const std::string& item : items) {
            if (!in_backlog(item)) {
                out.push_back({DiagCode::E006, Severity::Error,
                               {std::nullopt, std::nullopt, std::nullopt, item},
                               "sprint '" + sprint + "' selects item '" + item +
                                   "' which is not in the backlog"});
            }
        }
    }

    for (const auto& [release, sprints] : plan.releases) {
        for (const std::string& name : sprints) {
            bool known = std::any_of(
                plan.sprints.begin(), plan.sprints.end(),
                [&](const auto& entry) { return entry.first == name; });
            if (!known) {
                out.push_back({DiagCode::E007, Severity::Error,
                               {std::nullopt, std::nullopt, std::nullopt, name},
                               "release '" + release + "' selects unknown sprint '" +
                                   name + "'"});
            }
        }
    }

    // W106: first-assignment order, naming every sprint the item is in.
    std::vector<std::string> shared_order;
    std::map<std::string, std::vector<std::string>> assignments;
    for (const auto& [sprint, items] : plan.sprints) {
        for (const std::string& item : items) {
            auto& sprints_of = assignments[item];
            sprints_of.push_back(sprint);
            if (sprints_of.size() == 2) shared_order.push_back(item);
        }
    }
    for (const std::string& item : shared_order) {
        std::string list;
        for (const std::string& sprint : assignments[item]) {
            if (!list.empty()) list += ", ";
            list += sprint;
        }
        out.push_back({DiagCode::W106, Severity::Warning,
                       {std::nullopt, std::nullopt, std::nullopt, item},
                       "item '" + item + "' is assigned to multiple sprints: " +
                           list});
    }

    return out;
}

} // namespace w6h
