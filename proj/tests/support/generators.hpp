#pragma once

// Deterministic random workspaces and snapshot mutations for the
// round-trip and diff-algebra properties.

#include <random>
#include <string>
#include <vector>

#include "w6h/derivations.hpp"
#include "w6h/model.hpp"

namespace w6h::testing {

class Gen {
public:
    explicit Gen(unsigned seed) : engine_(seed) {}

    int below(int n) {
        return std::uniform_int_distribution<int>(0, n - 1)(engine_);
    }

    bool chance(int percent) { return below(100) < percent; }

    /// Fresh identifier, unique across the generator's lifetime.
    std::string name() {
        static const char* stems[] = {"Customer", "Order",  "Invoice",
                                      "Ledger",   "Region", "Policy",
                                      "Channel",  "Asset"};
        return std::string(stems[below(8)]) + "_" + std::to_string(counter_++);
    }

    /// Free text exercising the string escapes.
    std::string text() {
        static const char* samples[] = {
            "plain text",     "with \"quotes\"",     "back\\slash",
            "tab\tseparated", "line\nbreak",         "hash # not a comment",
            "",               "mixed \"x\\y\"\tz\n",
        };
        return samples[below(8)];
    }

    Artifact artifact() {
        Artifact out;
        out.name = name();
        if (chance(30)) out.kind = text();
        if (chance(40)) out.description = text();
        return out;
    }

    CrudVerbSet verbs() {
        CrudVerbSet out;
        for (CrudVerb v : {CrudVerb::Create, CrudVerb::Read, CrudVerb::Update,
                           CrudVerb::Delete}) {
            if (chance(40)) out.insert(v);
        }
        return out;
    }

    /// A slice with random cells and links. Links mostly resolve; a few
    /// dangle on purpose, which is legal input for the parser and diff.
    ViewSlice slice(PerspectiveRow row) {
        ViewSlice out(row);
        std::vector<std::string> declared;
        for (Interrogative q : all_interrogatives()) {
            int n = chance(55) ? below(4) : 0;
            for (int i = 0; i < n; ++i) {
                Artifact a = artifact();
                declared.push_back(a.name);
                out.add_artifact(q, std::move(a));
            }
        }
        if (declared.size() >= 2) {
            int n = below(4);
            for (int i = 0; i < n; ++i) {
                SelectionLink link;
                link.subject = declared[below(static_cast<int>(declared.size()))];
                link.object = chance(10) ? name()
                                         : declared[below(static_cast<int>(
                                               declared.size()))];
                if (link.subject == link.object) continue;
                bool duplicate_key = false;
                for (const SelectionLink& l : out.links()) {
                    if (l.subject == link.subject && l.object == link.object)
                        duplicate_key = true;
                }
                if (duplicate_key) continue;
                if (chance(50)) link.verbs = verbs();
                if (chance(25)) link.note = text();
                out.add_link(std::move(link));
            }
        }
        return out;
    }

    Snapshot snapshot(int iteration) {
        std::string label;
        if (chance(50)) label = chance(60) ? (chance(50) ? "AS-IS" : "TO-BE")
                                           : text();
        Snapshot out(iteration, std::move(label));
        for (PerspectiveRow row : all_perspectives()) {
            if (chance(70)) out.slice(row) = slice(row);
        }
        return out;
    }

    Workspace workspace() {
        Workspace out;
        out.name = chance(80) ? "ws " + text() : "";
        int iteration = 0;
        int n = 1 + below(3);
        for (int i = 0; i < n; ++i) {
            iteration += 1 + below(3);
            out.snapshots.push_back(snapshot(iteration));
        }
        return out;
    }

    BacklogPlan plan() {
        BacklogPlan out;
        int items = 1 + below(4);
        for (int i = 0; i < items; ++i) out.backlog.push_back(name());
        int sprints = below(3);
        for (int s = 0; s < sprints; ++s) {
            std::vector<std::string> selected;
            for (const std::string& item : out.backlog)
                if (chance(40)) selected.push_back(item);
            out.sprints.emplace_back("Sprint_" + std::to_string(counter_++),
                                     std::move(selected));
        }
        int releases = below(2);
        for (int r = 0; r < releases; ++r) {
            std::vector<std::string> selected;
            for (const auto& [sprint, members] : out.sprints)
                if (chance(50)) selected.push_back(sprint);
            out.releases.emplace_back("Release_" + std::to_string(counter_++),
                                      std::move(selected));
        }
        return out;
    }

    /// Evolves `base` the way an architect would: removals, in-place field
    /// edits, appended additions, link churn.
    Snapshot mutate(const Snapshot& base) {
        Snapshot out = base;
        out.set_iteration(base.iteration() + 1 + below(2));
        if (chance(50)) out.set_label(chance(50) ? "TO-BE" : text());

        for (PerspectiveRow row : all_perspectives()) {
            ViewSlice& slice = out.slice(row);

            // Removals and field changes over the existing artifacts.
            std::vector<std::string> names;
            for (Interrogative q : all_interrogatives())
                for (const Artifact& a : slice.cell(q).artifacts)
                    names.push_back(a.name);
            for (const std::string& victim : names) {
                int roll = below(100);
                if (roll < 12) {
                    slice.remove_artifact(victim);
                } else if (roll < 30) {
                    Artifact changed = *slice.find_artifact(victim);
                    if (chance(50)) changed.kind = text();
                    if (chance(60)) changed.description = text();
                    slice.replace_artifact(changed);
                }
            }

            // Appended additions.
            for (Interrogative q : all_interrogatives()) {
                if (chance(20)) slice.add_artifact(q, artifact());
            }

            // Link churn: drop, rewrite verbs in place, append. Appends
            // never reuse an endpoint pair seen this round: diff matches
            // links by (subject, object), so a drop-and-readd of the same
            // pair would replay as an in-place change and lose the new
            // declaration position.
            std::vector<std::pair<std::string, std::string>> used_keys;
            std::vector<SelectionLink> existing = slice.links();
            for (const SelectionLink& link : existing) {
                used_keys.emplace_back(link.subject, link.object);
                int roll = below(100);
                if (roll < 15) {
                    slice.remove_link(link.subject, link.object);
                } else if (roll < 35) {
                    SelectionLink changed = link;
                    changed.verbs = verbs();
                    if (changed == link) continue;
                    slice.replace_link(link.subject, link.object, changed);
                }
            }
            names.clear();
            for (Interrogative q : all_interrogatives())
                for (const Artifact& a : slice.cell(q).artifacts)
                    names.push_back(a.name);
            if (names.size() >= 2 && chance(40)) {
                SelectionLink link;
                link.subject = names[below(static_cast<int>(names.size()))];
                link.object = names[below(static_cast<int>(names.size()))];
                bool key_used = false;
                for (const auto& [subject, object] : used_keys) {
                    if (subject == link.subject && object == link.object)
                        key_used = true;
                }
                if (link.subject != link.object && !key_used) {
                    link.verbs = verbs();
                    slice.add_link(std::move(link));
                }
            }
        }
        return out;
    }

private:
    std::mt19937 engine_;
    int counter_ = 0;
};

} // namespace w6h::testing
