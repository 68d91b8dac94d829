#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "w6h/interrogative.hpp"
#include "w6h/model.hpp"
#include "w6h/validator.hpp"

namespace w6h {

/// Function x entity CRUD table derived from a view's selection links.
/// Absent entries mean no relationship; stored verb sets are non-empty.
struct CrudMatrix {
    std::vector<std::string> functions; // How cell, declaration order
    std::vector<std::string> entities;  // What cell, declaration order
    std::map<std::pair<std::string, std::string>, CrudVerbSet> entries;

    bool operator==(const CrudMatrix&) const = default;
};

/// Aggregates every How -> What link with verbs; duplicate links merge by
/// verb union.
CrudMatrix derive_crud(const ViewSlice& slice);

/// CRUD hygiene: W103 entity never created, W104 entity never read, W105
/// function whose row is empty. Locations carry column and artifact only;
/// validate() stamps iteration and row.
std::vector<Diagnostic> crud_findings(const CrudMatrix& matrix);

/// Tab-separated table: header row of entity names, one row per function,
/// cells as concatenated verbs or "-".
std::string render(const CrudMatrix& matrix);

/// Order-respecting capture flow for one view. Sessions are values;
/// answer() returns the extended session.
class ElicitationSession {
public:
    ElicitationSession(PerspectiveRow row, DependencyRuleSet rules)
        : row_(row), rules_(std::move(rules)) {}

    PerspectiveRow row() const { return row_; }
    const DependencyRuleSet& rules() const { return rules_; }

    const std::vector<std::pair<Interrogative, std::vector<Artifact>>>& answers() const {
        return answers_;
    }

    InterrogativeSet answered() const;

    /// next_questions over the answered set.
    InterrogativeSet askable() const;

    /// True once all seven interrogatives are answered.
    bool finished() const { return answered() == InterrogativeSet::all(); }

private:
    friend ElicitationSession answer(ElicitationSession session, Interrogative q,
                                     std::vector<Artifact> items);

    PerspectiveRow row_;
    DependencyRuleSet rules_;
    std::vector<std::pair<Interrogative, std::vector<Artifact>>> answers_;
};

ElicitationSession start_session(PerspectiveRow row, const DependencyRuleSet& rules);

/// Throws NotAnswerableError if `q` is already answered or its
/// prerequisites are unmet; DuplicateNameError if an item name collides
/// with anything recorded so far.
ElicitationSession answer(ElicitationSession session, Interrogative q,
                          std::vector<Artifact> items);

/// The slice holding every answered interrogative's items. Partial
/// sessions are fine; links are always empty.
ViewSlice finish(const ElicitationSession& session);

/// Scrum-style selection plan: a backlog, sprints selecting backlog items,
/// releases selecting sprints. Names only; items need not be workspace
/// artifacts.
struct BacklogPlan {
    std::vector<std::string> backlog;
    std::vector<std::pair<std::string, std::vector<std::string>>> sprints;
    std::vector<std::pair<std::string, std::vector<std::string>>> releases;

    bool operator==(const BacklogPlan&) const = default;
};

/// E006 per sprint item missing from the backlog, E007 per release naming
/// an unknown sprint, W106 per item assigned to more than one sprint.
std::vector<Diagnostic> validate_plan(const BacklogPlan& plan);

} // namespace w6h
