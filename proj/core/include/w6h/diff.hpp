#pragma once

#include <string>
#include <vector>

#include "w6h/interrogative.hpp"
#include "w6h/model.hpp"

namespace w6h {

/// Same name, different kind or description.
struct ArtifactChange {
    Artifact before;
    Artifact after;

    bool operator==(const ArtifactChange&) const = default;
};

struct CellDelta {
    PerspectiveRow row;
    Interrogative column;
    std::vector<Artifact> added;
    std::vector<Artifact> removed;
    std::vector<ArtifactChange> changed;

    bool operator==(const CellDelta&) const = default;
};

/// Link changes for one view; a verb or note change shows up as the old
/// link removed and the new one added.
struct LinkDelta {
    PerspectiveRow row;
    std::vector<SelectionLink> added;
    std::vector<SelectionLink> removed;

    bool operator==(const LinkDelta&) const = default;
};

/// Snapshot-to-snapshot difference. Only non-empty deltas are stored,
/// ordered by (row, column). Iteration and label metadata is carried, not
/// diffed.
struct ModelDelta {
    int from_iteration = 0;
    int to_iteration = 0;
    std::string to_label;
    std::vector<CellDelta> cells;
    std::vector<LinkDelta> links;

    bool empty() const { return cells.empty() && links.empty(); }

    bool operator==(const ModelDelta&) const = default;
};

/// Artifacts are matched by name per cell, links by (subject, object).
ModelDelta diff(const Snapshot& a, const Snapshot& b);

/// Replays the delta on `a`; iteration and label come from the delta, so
/// apply(diff(a, b), a) == b. Throws InapplicableError when the delta does
/// not fit, naming the first offending entry.
Snapshot apply(const ModelDelta& delta, const Snapshot& a);

/// Human-readable transition report grouped by view then column, with
/// summary counts; byte-stable for equal deltas.
std::string render_transition(const ModelDelta& delta);

/// JSON interchange form mirroring the workspace export schema.
std::string export_interchange(const ModelDelta& delta);

} // namespace w6h
