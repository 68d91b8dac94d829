#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "w6h/errors.hpp"
#include "w6h/interrogative.hpp"

namespace w6h {

/// The six stakeholder perspectives, in framework row order. The
/// enumerator value is the row index (1..6).
enum class PerspectiveRow : std::uint8_t {
    Scope = 1,
    Owner = 2,
    Designer = 3,
    Builder = 4,
    Subcontractor = 5,
    Functioning = 6,
};

inline constexpr std::size_t perspective_count = 6;

constexpr int row_index(PerspectiveRow row) {
    return static_cast<int>(row);
}

constexpr std::array<PerspectiveRow, perspective_count> all_perspectives() {
    return {PerspectiveRow::Scope,         PerspectiveRow::Owner,
            PerspectiveRow::Designer,      PerspectiveRow::Builder,
            PerspectiveRow::Subcontractor, PerspectiveRow::Functioning};
}

/// Lowercase name used by the DSL and interchange formats ("scope"..).
std::string_view to_string(PerspectiveRow row);

std::optional<PerspectiveRow> perspective_from(std::string_view name);

enum class CrudVerb : std::uint8_t {
    Create,
    Read,
    Update,
    Delete,
};

char to_letter(CrudVerb verb);
std::optional<CrudVerb> crud_verb_from(char letter);

/// Set of CRUD verbs; iteration and rendering follow C, R, U, D order.
class CrudVerbSet {
public:
    constexpr CrudVerbSet() = default;

    constexpr CrudVerbSet(std::initializer_list<CrudVerb> verbs) {
        for (CrudVerb v : verbs) insert(v);
    }

    constexpr bool contains(CrudVerb v) const { return (bits_ & bit(v)) != 0; }

    constexpr CrudVerbSet& insert(CrudVerb v) {
        bits_ |= bit(v);
        return *this;
    }

    constexpr CrudVerbSet& merge(CrudVerbSet other) {
        bits_ |= other.bits_;
        return *this;
    }

    constexpr bool empty() const { return bits_ == 0; }

    std::vector<CrudVerb> items() const;

    /// Concatenated letters, e.g. "CRU"; empty set renders as "".
    std::string letters() const;

    friend constexpr bool operator==(CrudVerbSet, CrudVerbSet) = default;

private:
    static constexpr std::uint8_t bit(CrudVerb v) {
        return static_cast<std::uint8_t>(1u << static_cast<unsigned>(v));
    }

    std::uint8_t bits_ = 0;
};

/// One cell entry. `kind` and `description` are optional; empty means
/// unspecified.
struct Artifact {
    std::string name;
    std::string kind;
    std::string description;

    bool operator==(const Artifact&) const = default;
};

/// A which-column edge between two artifacts of the same view. CRUD verbs
/// are meaningful only on How -> What links; the validator reports E003
/// for any other placement.
struct SelectionLink {
    std::string subject;
    std::string object;
    CrudVerbSet verbs;
    std::string note;

    bool operator==(const SelectionLink&) const = default;
};

struct Cell {
    std::vector<Artifact> artifacts;

    bool operator==(const Cell&) const = default;
};

/// One perspective row of a snapshot: seven cells plus the selection
/// links declared in the view. Artifact names are unique across all seven
/// cells; mutation goes through members that keep it that way.
class ViewSlice {
public:
    explicit ViewSlice(PerspectiveRow row) : row_(row) {}

    PerspectiveRow row() const { return row_; }

    const Cell& cell(Interrogative column) const { return cells_[slot(column)]; }

    const std::vector<SelectionLink>& links() const { return links_; }

    /// Throws DuplicateNameError if the name is already taken in the slice.
    void add_artifact(Interrogative column, Artifact artifact);

    /// Replaces the fields of the artifact with the same name, keeping its
    /// cell and position. Throws NotFoundError.
    void replace_artifact(const Artifact& artifact);

    /// Throws NotFoundError.
    void remove_artifact(std::string_view name);

    /// Links may reference names that do not (yet) resolve; the validator
    /// reports those as E002. Throws Error if subject == object.
    void add_link(SelectionLink link);

    /// Removes the first link with the given endpoints. Throws NotFoundError.
    void remove_link(std::string_view subject, std::string_view object);

    /// Replaces the first link with the given endpoints in place, keeping
    /// its position. Throws NotFoundError.
    void replace_link(std::string_view subject, std::string_view object,
                      SelectionLink replacement);

    /// The column holding `name`, if any.
    std::optional<Interrogative> find_column(std::string_view name) const;

    const Artifact* find_artifact(std::string_view name) const;

    bool operator==(const ViewSlice&) const = default;

private:
    static constexpr std::size_t slot(Interrogative column) {
        return static_cast<std::size_t>(column) - 1;
    }

    PerspectiveRow row_;
    std::array<Cell, interrogative_count> cells_{};
    std::vector<SelectionLink> links_;
};

struct ResolvedArtifact {
    Interrogative column;
    const Artifact& artifact;
};

/// The unique cell-and-artifact pair bearing `name`. Throws NotFoundError.
ResolvedArtifact resolve(const ViewSlice& slice, std::string_view name);

/// The interrogatives whose cell holds at least one artifact.
InterrogativeSet populated(const ViewSlice& slice);

/// One iteration of the workspace: all six slices, possibly empty.
class Snapshot {
public:
    explicit Snapshot(int iteration = 1, std::string label = {});

    int iteration() const { return iteration_; }

    /// Throws Error if `iteration` < 1.
    void set_iteration(int iteration);

    const std::string& label() const { return label_; }
    void set_label(std::string label) { label_ = std::move(label); }

    ViewSlice& slice(PerspectiveRow row) { return slices_[slot(row)]; }
    const ViewSlice& slice(PerspectiveRow row) const { return slices_[slot(row)]; }

    bool operator==(const Snapshot&) const = default;

private:
    static constexpr std::size_t slot(PerspectiveRow row) {
        return static_cast<std::size_t>(row) - 1;
    }

    int iteration_;
    std::string label_;
    std::array<ViewSlice, perspective_count> slices_;
};

/// The named model: an ordered list of iterations. Snapshot iteration
/// numbers must be strictly increasing; append_snapshot enforces it and
/// the validator reports E005 on hand-built violations.
struct Workspace {
    std::string name;
    std::vector<Snapshot> snapshots;

    bool operator==(const Workspace&) const = default;
};

/// Returns the workspace with `snap` appended. Throws IterationOrderError
/// if snap.iteration() does not exceed the last iteration.
Workspace append_snapshot(Workspace ws, Snapshot snap);

/// The snapshot with the given iteration number, or nullptr.
const Snapshot* find_snapshot(const Workspace& ws, int iteration);

} // namespace w6h
