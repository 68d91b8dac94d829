#include "w6h/dsl.hpp"

#include <cctype>
#include <map>
#include <utility>

namespace w6h {

namespace {

enum class Tok {
    End,
    Ident,
    Str,
    Int,
    LBrace,
    RBrace,
    LBracket,
    RBracket,
    Comma,
    Arrow,
};

struct Token {
    Tok kind = Tok::End;
    std::string text;    // identifier spelling or decoded string body
    long long number = 0;
    SourceSpan span;
};

std::string_view describe(Tok kind) {
    switch (kind) {
        case Tok::End: return "end of input";
        case Tok::Ident: return "identifier";
        case Tok::Str: return "string";
        case Tok::Int: return "integer";
        case Tok::LBrace: return "'{'";
        case Tok::RBrace: return "'}'";
        case Tok::LBracket: return "'['";
        case Tok::RBracket: return "']'";
        case Tok::Comma: return "','";
        case Tok::Arrow: return "'->'";
    }
    return "token";
}

// Unrecoverable parse failure; carries the error to the top.
struct HardError {
    ParseError error;
};

[[noreturn]] void fail(ParseCode code, SourceSpan span, std::string message) {
    throw HardError{{code, std::move(span), std::move(message)}};
}

class Lexer {
public:
    Lexer(std::string_view text, std::string file)
        : text_(text), file_(std::move(file)) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        for (;;) {
            skip_blank();
            Token token = next();
            bool end = token.kind == Tok::End;
            out.push_back(std::move(token));
            if (end) return out;
        }
    }

private:
    SourceSpan here() const { return {file_, line_, column_}; }

    bool eof() const { return pos_ >= text_.size(); }

    char peek() const { return text_[pos_]; }

    char take() {
        char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        return c;
    }

    void skip_blank() {
        while (!eof()) {
            char c = peek();
            if (c == '#') {
                while (!eof() && peek() != '\n') take();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                take();
            } else {
                return;
            }
        }
    }

    Token next() {
        SourceSpan span = here();
        if (eof()) return {Tok::End, "", 0, span};

        char c = peek();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_')
            return ident(span);
        if (std::isdigit(static_cast<unsigned char>(c))) return integer(span);

        switch (c) {
            case '"': return string(span);
            case '{': take(); return {Tok::LBrace, "{", 0, span};
            case '}': take(); return {Tok::RBrace, "}", 0, span};
            case '[': take(); return {Tok::LBracket, "[", 0, span};
            case ']': take(); return {Tok::RBracket, "]", 0, span};
            case ',': take(); return {Tok::Comma, ",", 0, span};
            case '-':
                take();
                if (!eof() && peek() == '>') {
                    take();
                    return {Tok::Arrow, "->", 0, span};
                }
                fail(ParseCode::P001, span, "expected '->' after '-'");
        }
        fail(ParseCode::P001, span,
             std::string("unexpected character '") + c + "'");
    }

    Token ident(SourceSpan span) {
        std::string text;
        while (!eof()) {
            char c = peek();
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_')
                text.push_back(take());
            else
                break;
        }
        return {Tok::Ident, std::move(text), 0, span};
    }

    Token integer(SourceSpan span) {
        long long value = 0;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
            value = value * 10 + (take() - '0');
            if (value > 1'000'000'000) {
                fail(ParseCode::P001, span, "integer too large");
            }
        }
        return {Tok::Int, "", value, span};
    }

    Token string(SourceSpan span) {
        take(); // opening quote
        std::string text;
        for (;;) {
            if (eof() || peek() == '\n')
                fail(ParseCode::P001, span, "unterminated string");
            char c = take();
            if (c == '"') return {Tok::Str, std::move(text), 0, span};
            if (c == '\\') {
                if (eof()) fail(ParseCode::P001, span, "unterminated string");
                char esc = take();
                switch (esc) {
                    case '"': text.push_back('"'); break;
                    case '\\': text.push_back('\\'); break;
                    case 'n': text.push_back('\n'); break;
                    case 't': text.push_back('\t'); break;
                    default:
                        fail(ParseCode::P001, span,
                             std::string("invalid escape '\\") + esc + "'");
                }
            } else {
                text.push_back(c);
            }
        }
    }

    std::string_view text_;
    std::string file_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int column_ = 1;
};

// Spans of the artifact names declared so far, per view, for P004 messages.
using NameSpans = std::array<std::map<std::string, SourceSpan, std::less<>>,
                             perspective_count>;

class Parser {
public:
    Parser(std::string_view text, std::string file)
        : text_(text), file_name_(std::move(file)) {}

    ParseResult run() {
        ParsedFile file;
        try {
            tokens_ = Lexer(text_, file_name_).run();
            parse_file(file);
        } catch (HardError& hard) {
            errors_.push_back(std::move(hard.error));
        }
        if (!errors_.empty()) return {std::nullopt, std::move(errors_)};
        return {std::move(file), {}};
    }

private:
    const Token& peek() const { return tokens_[pos_]; }

    Token take() { return tokens_[pos_++]; }

    bool at_ident(std::string_view spelling) const {
        return peek().kind == Tok::Ident && peek().text == spelling;
    }

    Token expect(Tok kind, std::string_view what) {
        if (peek().kind != kind) {
            fail(ParseCode::P001, peek().span,
                 "expected " + std::string(what) + ", found " +
                     std::string(describe(peek().kind)));
        }
        return take();
    }

    Token expect_keyword(std::string_view spelling) {
        if (!at_ident(spelling)) {
            fail(ParseCode::P001, peek().span,
                 "expected '" + std::string(spelling) + "', found " +
                     std::string(describe(peek().kind)));
        }
        return take();
    }

    void record(ParseCode code, SourceSpan span, std::string message) {
        errors_.push_back({code, std::move(span), std::move(message)});
    }

    void parse_file(ParsedFile& file) {
        expect_keyword("model");
        file.workspace.name = expect(Tok::Str, "workspace name string").text;

        for (;;) {
            if (peek().kind == Tok::End) return;
            if (at_ident("iteration")) {
                parse_iteration(file.workspace);
            } else if (at_ident("plan")) {
                parse_plan(file.plans);
            } else if (peek().kind == Tok::Ident) {
                fail(ParseCode::P002, peek().span,
                     "unknown keyword '" + peek().text +
                         "' (expected 'iteration' or 'plan')");
            } else {
                fail(ParseCode::P001, peek().span,
                     "expected 'iteration' or 'plan', found " +
                         std::string(describe(peek().kind)));
            }
        }
    }

    void parse_iteration(Workspace& ws) {
        take(); // 'iteration'
        Token number = expect(Tok::Int, "iteration number");
        if (number.number < 1) {
            fail(ParseCode::P001, number.span, "iteration number must be >= 1");
        }

        std::string label;
        if (at_ident("label")) {
            take();
            label = expect(Tok::Str, "label string").text;
        }

        Snapshot snap(static_cast<int>(number.number), std::move(label));
        NameSpans name_spans;
        while (at_ident("view")) parse_view(snap, name_spans);

        if (!ws.snapshots.empty() &&
            snap.iteration() <= ws.snapshots.back().iteration()) {
            record(ParseCode::P005, number.span,
                   "iteration " + std::to_string(snap.iteration()) +
                       " does not extend the sequence (previous is " +
                       std::to_string(ws.snapshots.back().iteration()) + ")");
            return;
        }
        ws.snapshots.push_back(std::move(snap));
    }

    void parse_view(Snapshot& snap, NameSpans& name_spans) {
        take(); // 'view'
        Token name = expect(Tok::Ident, "view name");
        auto row = perspective_from(name.text);
        if (!row) {
            fail(ParseCode::P002, name.span,
                 "unknown view name '" + name.text + "'");
        }
        ViewSlice& slice = snap.slice(*row);
        auto& spans = name_spans[static_cast<std::size_t>(*row) - 1];

        expect(Tok::LBrace, "'{'");
        while (peek().kind != Tok::RBrace) {
            Token column = expect(Tok::Ident, "column name");
            auto interrogative = interrogative_from(column.text);
            if (!interrogative) {
                fail(ParseCode::P002, column.span,
                     "unknown column name '" + column.text + "'");
            }
            parse_column(slice, spans, *interrogative);
        }
        take(); // '}'
    }

    void parse_column(ViewSlice& slice,
                      std::map<std::string, SourceSpan, std::less<>>& spans,
                      Interrogative column) {
        expect(Tok::LBrace, "'{'");
        while (peek().kind != Tok::RBrace) {
            if (at_ident("item")) {
                parse_item(slice, spans, column);
            } else if (at_ident("link")) {
                parse_link(slice, column);
            } else if (peek().kind == Tok::Ident) {
                fail(ParseCode::P002, peek().span,
                     "unknown keyword '" + peek().text +
                         "' (expected 'item' or 'link')");
            } else {
                fail(ParseCode::P001, peek().span,
                     "expected 'item', 'link' or '}', found " +
                         std::string(describe(peek().kind)));
            }
        }
        take(); // '}'
    }

    void parse_item(ViewSlice& slice,
                    std::map<std::string, SourceSpan, std::less<>>& spans,
                    Interrogative column) {
        take(); // 'item'
        Token name = expect(Tok::Ident, "artifact name");

        Artifact artifact;
        artifact.name = name.text;
        if (peek().kind == Tok::Str) artifact.description = take().text;
        if (at_ident("kind")) {
            take();
            artifact.kind = expect(Tok::Str, "kind string").text;
        }

        auto [it, inserted] = spans.try_emplace(artifact.name, name.span);
        if (!inserted) {
            record(ParseCode::P004, name.span,
                   "duplicate artifact name '" + artifact.name +
                       "' (first declared at " + std::to_string(it->second.line) +
                       ":" + std::to_string(it->second.column) + ")");
            return;
        }
        slice.add_artifact(column, std::move(artifact));
    }

    void parse_link(ViewSlice& slice, Interrogative column) {
        Token keyword = take(); // 'link'
        bool misplaced = column != Interrogative::Which;
        if (misplaced) {
            record(ParseCode::P001, keyword.span,
                   "links are only legal inside the 'which' column");
        }

        SelectionLink link;
        Token subject = expect(Tok::Ident, "link subject");
        link.subject = subject.text;
        expect(Tok::Arrow, "'->'");
        link.object = expect(Tok::Ident, "link object").text;

        bool verbs_ok = true;
        if (peek().kind == Tok::LBracket) {
            take();
            verbs_ok = parse_verbs(link.verbs);
        }
        if (peek().kind == Tok::Str) link.note = take().text;

        if (link.subject == link.object) {
            record(ParseCode::P001, subject.span,
                   "link subject and object must differ ('" + link.subject +
                       "')");
            return;
        }
        if (misplaced || !verbs_ok) return;
        slice.add_link(std::move(link));
    }

    // Returns false after recording P003 and skipping to the closing ']'.
    bool parse_verbs(CrudVerbSet& verbs) {
        for (;;) {
            const Token& token = peek();
            std::optional<CrudVerb> verb;
            if (token.kind == Tok::Ident && token.text.size() == 1)
                verb = crud_verb_from(token.text[0]);
            if (!verb) {
                record(ParseCode::P003, token.span,
                       "expected CRUD verb C, R, U or D" +
                           (token.kind == Tok::Ident ? ", found '" + token.text + "'"
                                                     : std::string()));
                while (peek().kind != Tok::RBracket && peek().kind != Tok::End &&
                       peek().kind != Tok::RBrace)
                    take();
                if (peek().kind == Tok::RBracket) take();
                return false;
            }
            take();
            verbs.insert(*verb);
            if (peek().kind == Tok::Comma) {
                take();
                continue;
            }
            expect(Tok::RBracket, "',' or ']'");
            return true;
        }
    }

    void parse_plan(std::vector<BacklogPlan>& plans) {
        take(); // 'plan'
        expect(Tok::LBrace, "'{'");

        BacklogPlan plan;
        expect_keyword("backlog");
        expect(Tok::LBrace, "'{'");
        std::map<std::string, SourceSpan, std::less<>> item_spans;
        while (peek().kind != Tok::RBrace) {
            expect_keyword("item");
            Token name = expect(Tok::Ident, "item name");
            auto [it, inserted] = item_spans.try_emplace(name.text, name.span);
            if (!inserted) {
                record(ParseCode::P004, name.span,
                       "duplicate backlog item '" + name.text +
                           "' (first declared at " +
                           std::to_string(it->second.line) + ":" +
                           std::to_string(it->second.column) + ")");
                continue;
            }
            plan.backlog.push_back(name.text);
        }
        take(); // '}'

        std::map<std::string, SourceSpan, std::less<>> sprint_spans;
        std::map<std::string, SourceSpan, std::less<>> release_spans;
        while (peek().kind != Tok::RBrace) {
            bool sprint = at_ident("sprint");
            if (!sprint && !at_ident("release")) {
                if (peek().kind == Tok::Ident) {
                    fail(ParseCode::P002, peek().span,
                         "unknown keyword '" + peek().text +
                             "' (expected 'sprint' or 'release')");
                }
                fail(ParseCode::P001, peek().span,
                     "expected 'sprint', 'release' or '}', found " +
                         std::string(describe(peek().kind)));
            }
            take();
            Token name = expect(Tok::Ident, sprint ? "sprint name" : "release name");
            auto& names = sprint ? sprint_spans : release_spans;
            auto [it, inserted] = names.try_emplace(name.text, name.span);
            bool duplicate = !inserted;
            if (duplicate) {
                record(ParseCode::P004, name.span,
                       std::string("duplicate ") +
                           (sprint ? "sprint" : "release") + " name '" +
                           name.text + "' (first declared at " +
                           std::to_string(it->second.line) + ":" +
                           std::to_string(it->second.column) + ")");
            }

            std::vector<std::string> members;
            std::map<std::string, SourceSpan, std::less<>> member_spans;
            expect(Tok::LBrace, "'{'");
            while (peek().kind != Tok::RBrace) {
                Token member = expect(Tok::Ident, "name");
                auto [mit, minserted] =
                    member_spans.try_emplace(member.text, member.span);
                if (!minserted) {
                    record(ParseCode::P004, member.span,
                           "duplicate name '" + member.text + "' (first at " +
                               std::to_string(mit->second.line) + ":" +
                               std::to_string(mit->second.column) + ")");
                    continue;
                }
                members.push_back(member.text);
            }
            take(); // '}'

            if (duplicate) continue;
            if (sprint)
                plan.sprints.emplace_back(name.text, std::move(members));
            else
                plan.releases.emplace_back(name.text, std::move(members));
        }
        take(); // '}'
        plans.push_back(std::move(plan));
    }

    std::string_view text_;
    std::string file_name_;
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    std::vector<ParseError> errors_;
};

} // namespace

std::string_view to_string(ParseCode code) {
    switch (code) {
        case ParseCode::P001: return "P001";
        case ParseCode::P002: return "P002";
        case ParseCode::P003: return "P003";
        case ParseCode::P004: return "P004";
        case ParseCode::P005: return "P005";
    }
    return "P???";
}

std::string render(const ParseError& error) {
    return "error " + std::string(to_string(error.code)) + " " +
           error.span.file + ":" + std::to_string(error.span.line) + ":" +
           std::to_string(error.span.column) + " " + error.message;
}

ParseResult parse(std::string_view text, std::string file_name) {
    return Parser(text, std::move(file_name)).run();
}

} // namespace w6h
