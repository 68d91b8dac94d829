#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "CLI11.hpp"

#include "w6h/derivations.hpp"
#include "w6h/diff.hpp"
#include "w6h/dsl.hpp"
#include "w6h/errors.hpp"
#include "w6h/model.hpp"
#include "w6h/rules_io.hpp"
#include "w6h/validator.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_findings = 1;
constexpr int exit_usage = 2;

bool color_enabled(std::FILE* stream) {
    if (std::getenv("W6H_NO_COLOR")) return false;
    return isatty(fileno(stream)) != 0;
}

std::string colorize(const std::string& line, bool enable) {
    if (!enable) return line;
    if (line.rfind("error", 0) == 0)
        return "\033[31merror\033[0m" + line.substr(5);
    if (line.rfind("warning", 0) == 0)
        return "\033[33mwarning\033[0m" + line.substr(7);
    return line;
}

std::optional<std::string> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

bool write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return true;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) return false;
    out << text;
    return bool(out);
}

// Parses the file at `path`, printing errors to stderr. Returns nullopt on
// failure (caller exits with exit_usage).
std::optional<w6h::ParsedFile> load(const std::string& path) {
    auto text = read_file(path);
    if (!text) {
        std::cerr << "error: cannot read " << path << "\n";
        return std::nullopt;
    }
    w6h::ParseResult result = w6h::parse(*text, path);
    if (!result.ok()) {
        bool color = color_enabled(stderr);
        for (const w6h::ParseError& error : result.errors)
            std::cerr << colorize(w6h::render(error), color) << "\n";
        return std::nullopt;
    }
    return std::move(result.file);
}

std::optional<w6h::DependencyRuleSet> load_rules(const std::string& path) {
    if (path.empty()) return w6h::standard_rules();
    auto text = read_file(path);
    if (!text) {
        std::cerr << "error: cannot read " << path << "\n";
        return std::nullopt;
    }
    try {
        return w6h::rules_from_interchange(*text);
    } catch (const w6h::Error& e) {
        std::cerr << "error: " << path << ": " << e.what() << "\n";
        return std::nullopt;
    }
}

int run_check(const std::string& path, bool strict,
              const std::string& rules_path) {
    auto rules = load_rules(rules_path);
    if (!rules) return exit_usage;
    auto file = load(path);
    if (!file) return exit_usage;

    w6h::Profile profile{*rules, strict};
    std::vector<w6h::Diagnostic> diagnostics =
        w6h::validate(file->workspace, profile);
    for (const w6h::BacklogPlan& plan : file->plans) {
        for (w6h::Diagnostic d : w6h::validate_plan(plan))
            diagnostics.push_back(std::move(d));
    }

    bool color = color_enabled(stdout);
    bool errors = false;
    bool warnings = false;
    for (const w6h::Diagnostic& d : diagnostics) {
        std::cout << colorize(w6h::render(d), color) << "\n";
        errors = errors || d.severity == w6h::Severity::Error;
        warnings = warnings || d.severity == w6h::Severity::Warning;
    }
    if (errors || (strict && warnings)) return exit_findings;
    return exit_ok;
}

int run_orders(bool count_only, const std::string& rules_path) {
    auto rules = load_rules(rules_path);
    if (!rules) return exit_usage;
    std::vector<w6h::InterrogativeOrder> orders = w6h::valid_orders(*rules);
    if (count_only) {
        std::cout << orders.size() << "\n";
        return exit_ok;
    }
    for (const w6h::InterrogativeOrder& order : orders) {
        bool first = true;
        for (w6h::Interrogative q : order) {
            if (!first) std::cout << " > ";
            std::cout << w6h::to_string(q);
            first = false;
        }
        std::cout << "\n";
    }
    return exit_ok;
}

// Latest snapshot unless an iteration is requested.
const w6h::Snapshot* pick_snapshot(const w6h::Workspace& ws, int iteration,
                                   const std::string& path) {
    if (ws.snapshots.empty()) {
        std::cerr << "error: " << path << " has no iterations\n";
        return nullptr;
    }
    if (iteration == 0) return &ws.snapshots.back();
    const w6h::Snapshot* snap = w6h::find_snapshot(ws, iteration);
    if (!snap)
        std::cerr << "error: " << path << " has no iteration " << iteration
                  << "\n";
    return snap;
}

int run_crud(const std::string& path, const std::string& view, int iteration) {
    auto row = w6h::perspective_from(view);
    if (!row) {
        std::cerr << "error: unknown view '" << view << "'\n";
        return exit_usage;
    }
    auto file = load(path);
    if (!file) return exit_usage;
    const w6h::Snapshot* snap = pick_snapshot(file->workspace, iteration, path);
    if (!snap) return exit_usage;

    const w6h::ViewSlice& slice = snap->slice(*row);
    w6h::CrudMatrix matrix = w6h::derive_crud(slice);
    std::cout << w6h::render(matrix);

    bool color = color_enabled(stdout);
    for (w6h::Diagnostic d : w6h::crud_findings(matrix)) {
        d.location.iteration = snap->iteration();
        d.location.row = *row;
        std::cout << colorize(w6h::render(d), color) << "\n";
    }
    return exit_ok;
}

int run_diff(const std::string& path, int from, int to) {
    auto file = load(path);
    if (!file) return exit_usage;
    const w6h::Snapshot* a = w6h::find_snapshot(file->workspace, from);
    const w6h::Snapshot* b = w6h::find_snapshot(file->workspace, to);
    if (!a || !b) {
        std::cerr << "error: " << path << " has no iteration "
                  << (a ? to : from) << "\n";
        return exit_usage;
    }
    std::cout << w6h::render_transition(w6h::diff(*a, *b));
    return exit_ok;
}

int run_report(const std::string& path) {
    auto file = load(path);
    if (!file) return exit_usage;

    const w6h::Workspace& ws = file->workspace;
    std::cout << "workspace \"" << ws.name << "\"\n";
    for (const w6h::Snapshot& snap : ws.snapshots) {
        std::cout << "iteration " << snap.iteration();
        if (!snap.label().empty()) std::cout << " \"" << snap.label() << "\"";
        std::cout << "\n";

        int total = 0;
        for (w6h::PerspectiveRow row : w6h::all_perspectives()) {
            int populated_cells =
                static_cast<int>(w6h::populated(snap.slice(row)).size());
            total += populated_cells;
            std::string name(w6h::to_string(row));
            std::cout << "  " << name << std::string(15 - name.size(), ' ')
                      << populated_cells << "/7\n";
        }
        char percent[16];
        std::snprintf(percent, sizeof percent, "%.1f", 100.0 * total / (6 * 7));
        std::cout << "  completeness   " << total << "/42 (" << percent
                  << "%)\n";
    }
    return exit_ok;
}

std::vector<std::string> split_words(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string word;
    while (in >> word) out.push_back(word);
    return out;
}

bool valid_identifier(const std::string& word) {
    if (word.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(word[0])) && word[0] != '_')
        return false;
    for (char c : word) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
            return false;
    }
    return true;
}

int run_elicit(const std::string& view, const std::string& out_path) {
    auto row = w6h::perspective_from(view);
    if (!row) {
        std::cerr << "error: unknown view '" << view << "'\n";
        return exit_usage;
    }

    w6h::ElicitationSession session =
        w6h::start_session(*row, w6h::standard_rules());
    std::string line;

    while (!session.finished()) {
        w6h::InterrogativeSet askable = session.askable();
        std::cout << "askable:";
        for (w6h::Interrogative q : askable.items())
            std::cout << " " << w6h::to_string(q);
        std::cout << "\n? " << std::flush;

        if (!std::getline(std::cin, line)) break;
        std::string choice;
        for (char c : line)
            if (!std::isspace(static_cast<unsigned char>(c)))
                choice.push_back(static_cast<char>(
                    std::tolower(static_cast<unsigned char>(c))));
        if (choice.empty()) continue;
        if (choice == "done") break;

        auto q = w6h::interrogative_from(choice);
        if (!q || !askable.contains(*q)) {
            std::cout << "not askable: " << choice << "\n";
            continue;
        }

        std::cout << "items? " << std::flush;
        if (!std::getline(std::cin, line)) break;
        std::vector<std::string> words = split_words(line);
        if (words.empty()) {
            std::cout << "skipped\n";
            continue;
        }
        bool all_valid = true;
        for (const std::string& word : words) {
            if (!valid_identifier(word)) {
                std::cout << "not an identifier: " << word << "\n";
                all_valid = false;
            }
        }
        if (!all_valid) continue;

        std::vector<w6h::Artifact> items;
        for (std::string& word : words)
            items.push_back({std::move(word), "", ""});
        try {
            session = w6h::answer(std::move(session), *q, std::move(items));
        } catch (const w6h::Error& e) {
            std::cout << "rejected: " << e.what() << "\n";
        }
    }

    w6h::Workspace ws;
    ws.name = "elicited";
    w6h::Snapshot snap(1);
    snap.slice(*row) = w6h::finish(session);
    ws = w6h::append_snapshot(std::move(ws), std::move(snap));

    std::string text = w6h::print(ws);
    if (!write_output(out_path, text)) {
        std::cerr << "error: cannot write " << out_path << "\n";
        return exit_usage;
    }
    return exit_ok;
}

int run_export(const std::string& path, const std::string& out_path) {
    auto file = load(path);
    if (!file) return exit_usage;
    std::string text = w6h::export_interchange(file->workspace);
    if (!write_output(out_path, text)) {
        std::cerr << "error: cannot write " << out_path << "\n";
        return exit_usage;
    }
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"w6h-kit: holistic enterprise-architecture models as code"};
    app.require_subcommand(1);

    std::string path, rules_path, view, out_path;
    bool strict = false, count_only = false;
    int iteration = 0, from = 0, to = 0;

    CLI::App* check =
        app.add_subcommand("check", "Parse and validate a workspace file");
    check->add_option("file", path, "workspace file (.w6h)")->required();
    check->add_flag("--strict", strict, "warnings also fail the run");
    check->add_option("--rules", rules_path, "alternate rule set (JSON)");

    CLI::App* orders =
        app.add_subcommand("orders", "Print every valid interrogative order");
    orders->add_flag("--count", count_only, "print only the number of orders");
    orders->add_option("--rules", rules_path, "alternate rule set (JSON)");

    CLI::App* crud = app.add_subcommand(
        "crud", "Print the CRUD matrix of a view plus hygiene findings");
    crud->add_option("file", path, "workspace file (.w6h)")->required();
    crud->add_option("--view", view, "view name (scope..functioning)")
        ->required();
    crud->add_option("--iteration", iteration,
                     "iteration number (defaults to the latest)");

    CLI::App* diff = app.add_subcommand(
        "diff", "Print the transition report between two iterations");
    diff->add_option("file", path, "workspace file (.w6h)")->required();
    diff->add_option("--from", from, "source iteration")->required();
    diff->add_option("--to", to, "target iteration")->required();

    CLI::App* report =
        app.add_subcommand("report", "Per-iteration holism report");
    report->add_option("file", path, "workspace file (.w6h)")->required();

    CLI::App* elicit = app.add_subcommand(
        "elicit", "Interactively capture one view in dependency order");
    elicit->add_option("--view", view, "view name (scope..functioning)")
        ->required();
    elicit->add_option("--out", out_path, "write the model text here");

    CLI::App* export_cmd =
        app.add_subcommand("export", "Emit the JSON interchange document");
    export_cmd->add_option("file", path, "workspace file (.w6h)")->required();
    export_cmd->add_option("--out", out_path, "write the document here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    if (app.got_subcommand(check)) return run_check(path, strict, rules_path);
    if (app.got_subcommand(orders)) return run_orders(count_only, rules_path);
    if (app.got_subcommand(crud)) return run_crud(path, view, iteration);
    if (app.got_subcommand(diff)) return run_diff(path, from, to);
    if (app.got_subcommand(report)) return run_report(path);
    if (app.got_subcommand(elicit)) return run_elicit(view, out_path);
    if (app.got_subcommand(export_cmd)) return run_export(path, out_path);
    return exit_usage;
}
