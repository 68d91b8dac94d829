#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "w6h/derivations.hpp"
#include "w6h/model.hpp"

namespace w6h {

/// 1-based position of a token in a source file.
struct SourceSpan {
    std::string file;
    int line = 1;
    int column = 1;

    bool operator==(const SourceSpan&) const = default;
};

enum class ParseCode {
    P001, // syntax
    P002, // unknown keyword
    P003, // bad CRUD verb
    P004, // duplicate name
    P005, // iteration order
};

std::string_view to_string(ParseCode code);

struct ParseError {
    ParseCode code;
    SourceSpan span;
    std::string message;

    bool operator==(const ParseError&) const = default;
};

/// `error P002 file:3:6 message`, one line.
std::string render(const ParseError& error);

/// Everything a .w6h file declares: the workspace plus any plan blocks.
struct ParsedFile {
    Workspace workspace;
    std::vector<BacklogPlan> plans;

    bool operator==(const ParsedFile&) const = default;
};

/// Parse outcome: all-or-nothing. `file` is set iff `errors` is empty.
struct ParseResult {
    std::optional<ParsedFile> file;
    std::vector<ParseError> errors;

    bool ok() const { return file.has_value(); }
};

/// Parses DSL text. `file_name` is used in error spans only.
ParseResult parse(std::string_view text, std::string file_name = "<input>");

/// Canonical form: views in row order, columns in canonical order,
/// two-space indentation, items before links, empty cells and views
/// omitted. print(parse(s)) is a fixed point.
std::string print(const Workspace& ws);

/// Canonical form including plan blocks after the iterations.
std::string print(const ParsedFile& file);

/// JSON interchange document, two-space indent, fixed key order,
/// byte-identical for equal workspaces.
std::string export_interchange(const Workspace& ws);

} // namespace w6h
