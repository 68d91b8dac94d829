#include "w6h/diff.hpp"
#include "w6h/dsl.hpp"

#include "json.hpp"

namespace w6h {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json artifact_json(const Artifact& artifact) {
    ordered_json out;
    out["name"] = artifact.name;
    if (!artifact.kind.empty()) out["kind"] = artifact.kind;
    if (!artifact.description.empty()) out["description"] = artifact.description;
    return out;
}

ordered_json link_json(const SelectionLink& link) {
    ordered_json out;
    out["subject"] = link.subject;
    out["object"] = link.object;
    ordered_json verbs = ordered_json::array();
    for (CrudVerb verb : link.verbs.items())
        verbs.push_back(std::string(1, to_letter(verb)));
    out["verbs"] = std::move(verbs);
    if (!link.note.empty()) out["note"] = link.note;
    return out;
}

ordered_json view_json(const ViewSlice& slice) {
    ordered_json out;
    out["row"] = std::string(to_string(slice.row()));

    ordered_json cells = ordered_json::array();
    for (Interrogative q : all_interrogatives()) {
        const Cell& cell = slice.cell(q);
        if (cell.artifacts.empty()) continue;
        ordered_json cell_out;
        cell_out["interrogative"] = std::string(to_string(q));
        ordered_json artifacts = ordered_json::array();
        for (const Artifact& artifact : cell.artifacts)
            artifacts.push_back(artifact_json(artifact));
        cell_out["artifacts"] = std::move(artifacts);
        cells.push_back(std::move(cell_out));
    }
    out["cells"] = std::move(cells);

    ordered_json links = ordered_json::array();
    for (const SelectionLink& link : slice.links())
        links.push_back(link_json(link));
    out["links"] = std::move(links);
    return out;
}

ordered_json snapshot_json(const Snapshot& snap) {
    ordered_json out;
    out["iteration"] = snap.iteration();
    if (!snap.label().empty()) out["label"] = snap.label();
    ordered_json views = ordered_json::array();
    for (PerspectiveRow row : all_perspectives())
        views.push_back(view_json(snap.slice(row)));
    out["views"] = std::move(views);
    return out;
}

} // namespace

std::string export_interchange(const Workspace& ws) {
    ordered_json out;
    out["w6hVersion"] = 1;
    out["name"] = ws.name;
    ordered_json snapshots = ordered_json::array();
    for (const Snapshot& snap : ws.snapshots)
        snapshots.push_back(snapshot_json(snap));
    out["snapshots"] = std::move(snapshots);
    return out.dump(2) + "\n";
}

std::string export_interchange(const ModelDelta& delta) {
    ordered_json out;
    out["w6hVersion"] = 1;
    out["fromIteration"] = delta.from_iteration;
    out["toIteration"] = delta.to_iteration;
    if (!delta.to_label.empty()) out["toLabel"] = delta.to_label;

    ordered_json cells = ordered_json::array();
    for (const CellDelta& cell : delta.cells) {
        ordered_json cell_out;
        cell_out["row"] = std::string(to_string(cell.row));
        cell_out["interrogative"] = std::string(to_string(cell.column));
        ordered_json added = ordered_json::array();
        for (const Artifact& artifact : cell.added)
            added.push_back(artifact_json(artifact));
        cell_out["added"] = std::move(added);
        ordered_json removed = ordered_json::array();
        for (const Artifact& artifact : cell.removed)
            removed.push_back(artifact_json(artifact));
        cell_out["removed"] = std::move(removed);
        ordered_json changed = ordered_json::array();
        for (const ArtifactChange& change : cell.changed) {
            ordered_json change_out;
            change_out["name"] = change.before.name;
            change_out["before"] = artifact_json(change.before);
            change_out["after"] = artifact_json(change.after);
            changed.push_back(std::move(change_out));
        }
        cell_out["changed"] = std::move(changed);
        cells.push_back(std::move(cell_out));
    }
    out["cells"] = std::move(cells);

    ordered_json links = ordered_json::array();
    for (const LinkDelta& link : delta.links) {
        ordered_json link_out;
        link_out["row"] = std::string(to_string(link.row));
        ordered_json added = ordered_json::array();
        for (const SelectionLink& l : link.added) added.push_back(link_json(l));
        link_out["added"] = std::move(added);
        ordered_json removed = ordered_json::array();
        for (const SelectionLink& l : link.removed)
            removed.push_back(link_json(l));
        link_out["removed"] = std::move(removed);
        links.push_back(std::move(link_out));
    }
    out["links"] = std::move(links);
    return out.dump(2) + "\n";
}

} // namespace w6h
