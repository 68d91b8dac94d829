#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "w6h/interrogative.hpp"
#include "w6h/model.hpp"

namespace w6h {

enum class Severity {
    Error,
    Warning,
};

std::string_view to_string(Severity severity);

/// Stable diagnostic code registry. E/W codes come from validation and
/// derivation checks, P codes from the parser.
enum class DiagCode {
    E001, // DependencyViolation
    E002, // DanglingReference
    E003, // CrudVerbPlacement
    E004, // DuplicateName (normally caught at parse as P004)
    E005, // IterationOrder (normally caught at parse as P005)
    E006, // SprintItemUnknown
    E007, // ReleaseSprintUnknown
    W101, // EmptyCell
    W102, // SelectionWithoutLinks
    W103, // EntityNeverCreated
    W104, // EntityNeverRead
    W105, // FunctionWithoutData
    W106, // ItemInMultipleSprints
};

std::string_view to_string(DiagCode code);
Severity severity_of(DiagCode code);

struct CodeInfo {
    DiagCode code;
    std::string_view name;
    std::string_view explanation;
};

std::span<const CodeInfo> code_registry();

/// Human-readable description of a registry code (diagnostic codes and
/// parser P codes). Throws UnknownCodeError for anything else.
std::string explain(std::string_view code);

/// Where a finding points. Plan findings carry no grid location and render
/// with the `plan` marker instead.
struct Location {
    std::optional<int> iteration;
    std::optional<PerspectiveRow> row;
    std::optional<Interrogative> column;
    std::string artifact;

    bool operator==(const Location&) const = default;
};

struct Diagnostic {
    DiagCode code;
    Severity severity;
    Location location;
    std::string message;

    bool operator==(const Diagnostic&) const = default;
};

/// `LEVEL CODE iteration:view:column[:artifact] message`, one line.
std::string render(const Diagnostic& diagnostic);

/// Validation settings: the dependency rule set to lint against, and
/// whether warnings fail the run.
struct Profile {
    DependencyRuleSet rules;
    bool strict = false;

    static Profile standard();
};

/// Runs every check over the workspace. The result is sorted by
/// (iteration, row, column, code, artifact) and free of duplicates; it is
/// a pure function of the inputs.
std::vector<Diagnostic> validate(const Workspace& ws, const Profile& profile);

} // namespace w6h
