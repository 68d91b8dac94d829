#include "w6h/diff.hpp"

#include <algorithm>
#include <sstream>

#include "w6h/errors.hpp"

namespace w6h {

namespace {

const Artifact* find_by_name(const std::vector<Artifact>& artifacts,
                             const std::string& name) {
    for (const Artifact& artifact : artifacts)
        if (artifact.name == name) return &artifact;
    return nullptr;
}

const SelectionLink* find_by_endpoints(const std::vector<SelectionLink>& links,
                                       const SelectionLink& key) {
    for (const SelectionLink& link : links)
        if (link.subject == key.subject && link.object == key.object)
            return &link;
    return nullptr;
}

std::string link_label(const SelectionLink& link) {
    std::string out = link.subject + " -> " + link.object;
    if (!link.verbs.empty()) out += " [" + link.verbs.letters() + "]";
    return out;
}

std::string quoted_field(const std::string& value) {
    return value.empty() ? std::string("(none)") : "\"" + value + "\"";
}

} // namespace

ModelDelta diff(const Snapshot& a, const Snapshot& b) {
    ModelDelta delta;
    delta.from_iteration = a.iteration();
    delta.to_iteration = b.iteration();
    delta.to_label = b.label();

    for (PerspectiveRow row : all_perspectives()) {
        const ViewSlice& sa = a.slice(row);
        const ViewSlice& sb = b.slice(row);

        for (Interrogative column : all_interrogatives()) {
            const auto& va = sa.cell(column).artifacts;
            const auto& vb = sb.cell(column).artifacts;

            CellDelta cell{row, column, {}, {}, {}};
            for (const Artifact& artifact : va) {
                const Artifact* other = find_by_name(vb, artifact.name);
                if (!other) {
                    cell.removed.push_back(artifact);
                } else if (*other != artifact) {
                    cell.changed.push_back({artifact, *other});
                }
            }
            for (const Artifact& artifact : vb) {
                if (!find_by_name(va, artifact.name))
                    cell.added.push_back(artifact);
            }
            if (!cell.added.empty() || !cell.removed.empty() ||
                !cell.changed.empty())
                delta.cells.push_back(std::move(cell));
        }

        LinkDelta links{row, {}, {}};
        for (const SelectionLink& link : sa.links()) {
            const SelectionLink* other = find_by_endpoints(sb.links(), link);
            if (!other || *other != link) links.removed.push_back(link);
        }
        for (const SelectionLink& link : sb.links()) {
            const SelectionLink* other = find_by_endpoints(sa.links(), link);
            if (!other || *other != link) links.added.push_back(link);
        }
        if (!links.added.empty() || !links.removed.empty())
            delta.links.push_back(std::move(links));
    }
    return delta;
}

Snapshot apply(const ModelDelta& delta, const Snapshot& a) {
    Snapshot out = a;
    if (delta.to_iteration >= 1) out.set_iteration(delta.to_iteration);
    out.set_label(delta.to_label);

    for (const CellDelta& cell : delta.cells) {
        ViewSlice& slice = out.slice(cell.row);
        for (const Artifact& artifact : cell.removed) {
            if (slice.find_column(artifact.name) != cell.column) {
                throw InapplicableError(
                    "delta removes '" + artifact.name + "' from " +
                    std::string(to_string(cell.row)) + ":" +
                    std::string(to_string(cell.column)) +
                    " but it is not there");
            }
            slice.remove_artifact(artifact.name);
        }
        for (const ArtifactChange& change : cell.changed) {
            if (slice.find_column(change.before.name) != cell.column) {
                throw InapplicableError(
                    "delta changes '" + change.before.name + "' in " +
                    std::string(to_string(cell.row)) + ":" +
                    std::string(to_string(cell.column)) +
                    " but it is not there");
            }
            slice.replace_artifact(change.after);
        }
        for (const Artifact& artifact : cell.added) {
            if (slice.find_column(artifact.name)) {
                throw InapplicableError("delta adds '" + artifact.name +
                                        "' to " +
                                        std::string(to_string(cell.row)) +
                                        " but the name already exists");
            }
            slice.add_artifact(cell.column, artifact);
        }
    }

    for (const LinkDelta& links : delta.links) {
        ViewSlice& slice = out.slice(links.row);

        // A removed/added pair with the same endpoints is a change;
        // replay it in place to preserve declaration order.
        std::vector<const SelectionLink*> pending_added;
        for (const SelectionLink& link : links.added)
            pending_added.push_back(&link);

        for (const SelectionLink& link : links.removed) {
            if (!find_by_endpoints(slice.links(), link)) {
                throw InapplicableError("delta removes link " +
                                        link_label(link) + " from " +
                                        std::string(to_string(links.row)) +
                                        " but it is not there");
            }
            auto replacement = std::find_if(
                pending_added.begin(), pending_added.end(),
                [&](const SelectionLink* candidate) {
                    return candidate->subject == link.subject &&
                           candidate->object == link.object;
                });
            if (replacement != pending_added.end()) {
                slice.replace_link(link.subject, link.object, **replacement);
                pending_added.erase(replacement);
            } else {
                slice.remove_link(link.subject, link.object);
            }
        }
        for (const SelectionLink* link : pending_added) {
            if (find_by_endpoints(slice.links(), *link)) {
                throw InapplicableError("delta adds link " + link_label(*link) +
                                        " to " +
                                        std::string(to_string(links.row)) +
                                        " but it already exists");
            }
            slice.add_link(*link);
        }
    }
    return out;
}

std::string render_transition(const ModelDelta& delta) {
    std::ostringstream out;
    out << "transition: iteration " << delta.from_iteration << " -> iteration "
        << delta.to_iteration;
    if (!delta.to_label.empty()) out << " \"" << delta.to_label << "\"";
    out << "\n";

    std::size_t added = 0, removed = 0, changed = 0;
    std::size_t links_added = 0, links_removed = 0;

    if (delta.empty()) {
        out << "no changes\n";
    } else {
        for (PerspectiveRow row : all_perspectives()) {
            bool row_printed = false;
            auto open_row = [&] {
                if (row_printed) return;
                out << "view " << to_string(row) << "\n";
                row_printed = true;
            };

            for (const CellDelta& cell : delta.cells) {
                if (cell.row != row) continue;
                open_row();
                out << "  " << to_string(cell.column) << "\n";
                for (const Artifact& artifact : cell.added) {
                    out << "    + " << artifact.name << "\n";
                    ++added;
                }
                for (const Artifact& artifact : cell.removed) {
                    out << "    - " << artifact.name << "\n";
                    ++removed;
                }
                for (const ArtifactChange& change : cell.changed) {
                    out << "    ~ " << change.before.name;
                    if (change.before.kind != change.after.kind) {
                        out << " kind " << quoted_field(change.before.kind)
                            << " -> " << quoted_field(change.after.kind);
                    }
                    if (change.before.description != change.after.description) {
                        out << " description "
                            << quoted_field(change.before.description) << " -> "
                            << quoted_field(change.after.description);
                    }
                    out << "\n";
                    ++changed;
                }
            }

            for (const LinkDelta& links : delta.links) {
                if (links.row != row) continue;
                open_row();
                out << "  links\n";
                for (const SelectionLink& link : links.added) {
                    out << "    + " << link_label(link) << "\n";
                    ++links_added;
                }
                for (const SelectionLink& link : links.removed) {
                    out << "    - " << link_label(link) << "\n";
                    ++links_removed;
                }
            }
        }
    }

    out << "summary: artifacts added " << added << ", removed " << removed
        << ", changed " << changed << "; links added " << links_added
        << ", removed " << links_removed << "\n";
    return out.str();
}

} // namespace w6h
