#include "doctest.h"

#include <map>

#include "w6h/diff.hpp"
#include "w6h/errors.hpp"

#include "support/generators.hpp"

using namespace w6h;
using enum Interrogative;

TEST_CASE("diff of a snapshot with itself is empty") {
    testing::Gen gen(1);
    for (int i = 0; i < 20; ++i) {
        Snapshot snap = gen.snapshot(1 + i);
        ModelDelta delta = diff(snap, snap);
        CHECK(delta.empty());
        CHECK(delta.from_iteration == snap.iteration());
        CHECK(delta.to_iteration == snap.iteration());
    }
}

TEST_CASE("one added artifact") {
    Snapshot a(1, "AS-IS");
    a.slice(PerspectiveRow::Designer).add_artifact(What, {"Customer", "", ""});
    Snapshot b(2, "TO-BE");
    b.slice(PerspectiveRow::Designer).add_artifact(What, {"Customer", "", ""});
    b.slice(PerspectiveRow::Designer).add_artifact(What, {"Order", "", ""});

    ModelDelta delta = diff(a, b);
    REQUIRE(delta.cells.size() == 1);
    CHECK(delta.cells[0].row == PerspectiveRow::Designer);
    CHECK(delta.cells[0].column == What);
    REQUIRE(delta.cells[0].added.size() == 1);
    CHECK(delta.cells[0].added[0].name == "Order");
    CHECK(delta.cells[0].removed.empty());
    CHECK(delta.cells[0].changed.empty());
    CHECK(delta.links.empty());
}

TEST_CASE("a kind change is reported as changed") {
    Snapshot a(1);
    a.slice(PerspectiveRow::Designer)
        .add_artifact(What, {"Customer", "entity", ""});
    Snapshot b(2);
    b.slice(PerspectiveRow::Designer)
        .add_artifact(What, {"Customer", "aggregate", ""});

    ModelDelta delta = diff(a, b);
    REQUIRE(delta.cells.size() == 1);
    REQUIRE(delta.cells[0].changed.size() == 1);
    CHECK(delta.cells[0].changed[0].before.kind == "entity");
    CHECK(delta.cells[0].changed[0].after.kind == "aggregate");
    CHECK(delta.cells[0].added.empty());
    CHECK(delta.cells[0].removed.empty());
}

TEST_CASE("apply on the identity delta") {
    testing::Gen gen(2);
    Snapshot a = gen.snapshot(3);
    Snapshot result = apply(diff(a, a), a);
    CHECK(result == a);
}

TEST_CASE("apply rejects deltas that do not fit") {
    Snapshot a(1);
    a.slice(PerspectiveRow::Designer).add_artifact(What, {"Customer", "", ""});

    ModelDelta removes_ghost;
    removes_ghost.to_iteration = 2;
    removes_ghost.cells.push_back(
        {PerspectiveRow::Designer, What, {}, {{"Ghost", "", ""}}, {}});
    CHECK_THROWS_AS(apply(removes_ghost, a), InapplicableError);

    ModelDelta adds_existing;
    adds_existing.to_iteration = 2;
    adds_existing.cells.push_back(
        {PerspectiveRow::Designer, What, {{"Customer", "", ""}}, {}, {}});
    CHECK_THROWS_AS(apply(adds_existing, a), InapplicableError);

    ModelDelta changes_missing;
    changes_missing.to_iteration = 2;
    changes_missing.cells.push_back(
        {PerspectiveRow::Designer, What, {}, {},
         {{{"Ghost", "", ""}, {"Ghost", "x", ""}}}});
    CHECK_THROWS_AS(apply(changes_missing, a), InapplicableError);

    ModelDelta removes_missing_link;
    removes_missing_link.to_iteration = 2;
    removes_missing_link.links.push_back(
        {PerspectiveRow::Designer, {}, {{"A", "B", {}, ""}}});
    CHECK_THROWS_AS(apply(removes_missing_link, a), InapplicableError);
}

TEST_CASE("apply replays link verb changes in place") {
    Snapshot a(1);
    ViewSlice& slice = a.slice(PerspectiveRow::Designer);
    slice.add_artifact(How, {"F", "", ""});
    slice.add_artifact(What, {"X", "", ""});
    slice.add_artifact(What, {"Y", "", ""});
    slice.add_link({"F", "X", {CrudVerb::Read}, ""});
    slice.add_link({"F", "Y", {CrudVerb::Create}, ""});

    Snapshot b = a;
    b.set_iteration(2);
    b.slice(PerspectiveRow::Designer)
        .replace_link("F", "X", {"F", "X", {CrudVerb::Update}, ""});

    ModelDelta delta = diff(a, b);
    REQUIRE(delta.links.size() == 1);
    CHECK(delta.links[0].added.size() == 1);
    CHECK(delta.links[0].removed.size() == 1);

    Snapshot result = apply(delta, a);
    CHECK(result == b);
    // The changed link kept its first position.
    CHECK(result.slice(PerspectiveRow::Designer).links()[0].object == "X");
}

TEST_CASE("diff and apply round-trip over generated pairs") {
    testing::Gen gen(20240812);
    for (int i = 0; i < 300; ++i) {
        Snapshot a = gen.snapshot(1 + gen.below(5));
        Snapshot b = gen.mutate(a);
        ModelDelta delta = diff(a, b);
        Snapshot rebuilt = apply(delta, a);
        CHECK(rebuilt == b);
    }
}

TEST_CASE("per-cell added and removed counts are antisymmetric") {
    testing::Gen gen(555);
    for (int i = 0; i < 100; ++i) {
        Snapshot a = gen.snapshot(1);
        Snapshot b = gen.mutate(a);
        ModelDelta ab = diff(a, b);
        ModelDelta ba = diff(b, a);

        std::map<std::pair<int, int>, std::pair<std::size_t, std::size_t>> ab_counts;
        for (const CellDelta& cell : ab.cells)
            ab_counts[{row_index(cell.row), canonical_index(cell.column)}] = {
                cell.added.size(), cell.removed.size()};
        for (const CellDelta& cell : ba.cells) {
            auto key = std::make_pair(row_index(cell.row),
                                      canonical_index(cell.column));
            auto it = ab_counts.find(key);
            std::pair<std::size_t, std::size_t> forward =
                it == ab_counts.end()
                    ? std::pair<std::size_t, std::size_t>{0, 0}
                    : it->second;
            CHECK(cell.added.size() == forward.second);
            CHECK(cell.removed.size() == forward.first);
        }
        for (const auto& [key, counts] : ab_counts) {
            bool found = false;
            for (const CellDelta& cell : ba.cells) {
                if (std::make_pair(row_index(cell.row),
                                   canonical_index(cell.column)) == key)
                    found = true;
            }
            if (!found) {
                CHECK(counts.first == 0);
                CHECK(counts.second == 0);
            }
        }
    }
}

TEST_CASE("delta ordering is deterministic") {
    testing::Gen gen(8);
    Snapshot a = gen.snapshot(1);
    Snapshot b = gen.mutate(a);
    ModelDelta delta = diff(a, b);
    for (std::size_t i = 1; i < delta.cells.size(); ++i) {
        auto key = [](const CellDelta& cell) {
            return std::make_pair(row_index(cell.row),
                                  canonical_index(cell.column));
        };
        CHECK(key(delta.cells[i - 1]) < key(delta.cells[i]));
    }
    CHECK(render_transition(delta) == render_transition(diff(a, b)));
}

TEST_CASE("transition report") {
    Snapshot a(1, "AS-IS");
    Snapshot same = a;

    SUBCASE("empty delta mentions no changes and zero counts") {
        std::string report = render_transition(diff(a, same));
        CHECK(report.find("no changes") != std::string::npos);
        CHECK(report.find("artifacts added 0, removed 0, changed 0") !=
              std::string::npos);
        CHECK(report.find("links added 0, removed 0") != std::string::npos);
    }

    SUBCASE("counts match the delta lists") {
        Snapshot b(2, "TO-BE");
        b.slice(PerspectiveRow::Designer).add_artifact(What, {"Order", "", ""});
        std::string report = render_transition(diff(a, b));
        CHECK(report.find("+ Order") != std::string::npos);
        CHECK(report.find("artifacts added 1, removed 0, changed 0") !=
              std::string::npos);
        CHECK(report.find("view designer") != std::string::npos);
        CHECK(report.find("\"TO-BE\"") != std::string::npos);
    }
}

TEST_CASE("delta interchange export") {
    Snapshot a(1);
    a.slice(PerspectiveRow::Designer).add_artifact(What, {"Customer", "", ""});
    Snapshot b(2, "TO-BE");
    b.slice(PerspectiveRow::Designer)
        .add_artifact(What, {"Customer", "entity", ""});
    b.slice(PerspectiveRow::Designer).add_artifact(How, {"PlaceOrder", "", ""});

    ModelDelta delta = diff(a, b);
    std::string doc = export_interchange(delta);
    CHECK(doc == export_interchange(delta));
    CHECK(doc.find("\"fromIteration\": 1") != std::string::npos);
    CHECK(doc.find("\"toIteration\": 2") != std::string::npos);
    CHECK(doc.find("\"toLabel\": \"TO-BE\"") != std::string::npos);
    CHECK(doc.find("\"changed\"") != std::string::npos);
    CHECK(doc.find("\"PlaceOrder\"") != std::string::npos);
}
