#include "w6h/model.hpp"

#include <algorithm>

namespace w6h {

namespace {

constexpr std::array<std::string_view, perspective_count> row_names = {
    "scope", "owner", "designer", "builder", "subcontractor", "functioning"};

constexpr std::array<char, 4> verb_letters = {'C', 'R', 'U', 'D'};

} // namespace

std::string_view to_string(PerspectiveRow row) {
    return row_names[static_cast<std::size_t>(row) - 1];
}

std::optional<PerspectiveRow> perspective_from(std::string_view name) {
    for (std::size_t i = 0; i < row_names.size(); ++i) {
        if (row_names[i] == name) return static_cast<PerspectiveRow>(i + 1);
    }
    return std::nullopt;
}

char to_letter(CrudVerb verb) {
    return verb_letters[static_cast<std::size_t>(verb)];
}

std::optional<CrudVerb> crud_verb_from(char letter) {
    for (std::size_t i = 0; i < verb_letters.size(); ++i) {
        if (verb_letters[i] == letter) return static_cast<CrudVerb>(i);
    }
    return std::nullopt;
}

std::vector<CrudVerb> CrudVerbSet::items() const {
    std::vector<CrudVerb> out;
    for (CrudVerb v : {CrudVerb::Create, CrudVerb::Read, CrudVerb::Update,
                       CrudVerb::Delete}) {
        if (contains(v)) out.push_back(v);
    }
    return out;
}

std::string CrudVerbSet::letters() const {
    std::string out;
    for (CrudVerb v : items()) out.push_back(to_letter(v));
    return out;
}

void ViewSlice::add_artifact(Interrogative column, Artifact artifact) {
    if (auto existing = find_column(artifact.name)) {
        throw DuplicateNameError("duplicate artifact name \"" + artifact.name +
                                 "\" in view " + std::string(to_string(row_)) +
                                 " (already in column " +
                                 std::string(to_string(*existing)) + ")");
    }
    cells_[slot(column)].artifacts.push_back(std::move(artifact));
}

void ViewSlice::replace_artifact(const Artifact& artifact) {
    for (Cell& cell : cells_) {
        for (Artifact& existing : cell.artifacts) {
            if (existing.name == artifact.name) {
                existing = artifact;
                return;
            }
        }
    }
    throw NotFoundError("no artifact named \"" + artifact.name + "\" in view " +
                        std::string(to_string(row_)));
}

void ViewSlice::remove_artifact(std::string_view name) {
    for (Cell& cell : cells_) {
        auto it = std::find_if(cell.artifacts.begin(), cell.artifacts.end(),
                               [&](const Artifact& a) { return a.name == name; });
        if (it != cell.artifacts.end()) {
            cell.artifacts.erase(it);
            return;
        }
    }
    throw NotFoundError("no artifact named \"" + std::string(name) +
                        "\" in view " + std::string(to_string(row_)));
}

void ViewSlice::add_link(SelectionLink link) {
    if (link.subject == link.object) {
        throw Error("link subject and object must differ (\"" + link.subject +
                    "\")");
    }
    links_.push_back(std::move(link));
}

void ViewSlice::remove_link(std::string_view subject, std::string_view object) {
    auto it = std::find_if(links_.begin(), links_.end(),
                           [&](const SelectionLink& l) {
                               return l.subject == subject && l.object == object;
                           });
    if (it == links_.end()) {
        throw NotFoundError("no link " + std::string(subject) + " -> " +
                            std::string(object) + " in view " +
                            std::string(to_string(row_)));
    }
    links_.erase(it);
}

void ViewSlice::replace_link(std::string_view subject, std::string_view object,
                             SelectionLink replacement) {
    auto it = std::find_if(links_.begin(), links_.end(),
                           [&](const SelectionLink& l) {
                               return l.subject == subject && l.object == object;
                           });
    if (it == links_.end()) {
        throw NotFoundError("no link " + std::string(subject) + " -> " +
                            std::string(object) + " in view " +
                            std::string(to_string(row_)));
    }
    *it = std::move(replacement);
}

std::optional<Interrogative> ViewSlice::find_column(std::string_view name) const {
    for (Interrogative q : all_interrogatives()) {
        const Cell& cell = cells_[slot(q)];
        for (const Artifact& a : cell.artifacts) {
            if (a.name == name) return q;
        }
    }
    return std::nullopt;
}

const Artifact* ViewSlice::find_artifact(std::string_view name) const {
    for (const Cell& cell : cells_) {
        for (const Artifact& a : cell.artifacts) {
            if (a.name == name) return &a;
        }
    }
    return nullptr;
}

ResolvedArtifact resolve(const ViewSlice& slice, std::string_view name) {
    if (auto column = slice.find_column(name)) {
        return {*column, *slice.find_artifact(name)};
    }
    throw NotFoundError("no artifact named \"" + std::string(name) +
                        "\" in view " + std::string(to_string(slice.row())));
}

InterrogativeSet populated(const ViewSlice& slice) {
    InterrogativeSet out;
    for (Interrogative q : all_interrogatives()) {
        if (!slice.cell(q).artifacts.empty()) out.insert(q);
    }
    return out;
}

Snapshot::Snapshot(int iteration, std::string label)
    : iteration_(iteration), label_(std::move(label)),
      slices_{ViewSlice(PerspectiveRow::Scope),
              ViewSlice(PerspectiveRow::Owner),
              ViewSlice(PerspectiveRow::Designer),
              ViewSlice(PerspectiveRow::Builder),
              ViewSlice(PerspectiveRow::Subcontractor),
              ViewSlice(PerspectiveRow::Functioning)} {
    if (iteration < 1) throw Error("iteration number must be >= 1");
}

void Snapshot::set_iteration(int iteration) {
    if (iteration < 1) throw Error("iteration number must be >= 1");
    iteration_ = iteration;
}

Workspace append_snapshot(Workspace ws, Snapshot snap) {
    if (!ws.snapshots.empty() &&
        snap.iteration() <= ws.snapshots.back().iteration()) {
        throw IterationOrderError(
            "iteration " + std::to_string(snap.iteration()) +
            " does not extend the sequence (last is " +
            std::to_string(ws.snapshots.back().iteration()) + ")");
    }
    ws.snapshots.push_back(std::move(snap));
    return ws;
}

const Snapshot* find_snapshot(const Workspace& ws, int iteration) {
    for (const Snapshot& snap : ws.snapshots) {
        if (snap.iteration() == iteration) return &snap;
    }
    return nullptr;
}

} // namespace w6h
