#include "w6h/interrogative.hpp"

#include <algorithm>
#include <sstream>

namespace w6h {

namespace {

constexpr std::array<std::string_view, interrogative_count> names = {
    "who", "what", "which", "where", "how", "why", "when"};

std::string join_names(InterrogativeSet set, std::string_view separator) {
    std::ostringstream out;
    bool first = true;
    for (Interrogative q : set.items()) {
        if (!first) out << separator;
        out << to_string(q);
        first = false;
    }
    return out.str();
}

} // namespace

std::string_view to_string(Interrogative q) {
    return names[static_cast<std::size_t>(q) - 1];
}

std::optional<Interrogative> interrogative_from(std::string_view name) {
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (names[i] == name) return static_cast<Interrogative>(i + 1);
    }
    return std::nullopt;
}

std::vector<Interrogative> InterrogativeSet::items() const {
    std::vector<Interrogative> out;
    for (Interrogative q : all_interrogatives())
        if (contains(q)) out.push_back(q);
    return out;
}

DependencyRuleSet standard_rules() {
    using enum Interrogative;
    DependencyRuleSet rules;
    rules.set_prerequisites(How, {{What}, {Which, Where}});
    rules.set_prerequisites(Why, {{What}, {How}});
    rules.set_prerequisites(When, {{How}, {Why}});
    return rules;
}

bool is_answerable(Interrogative q, InterrogativeSet answered,
                   const DependencyRuleSet& rules) {
    for (const PrereqGroup& group : rules.prerequisites(q)) {
        if (!group.intersects(answered)) return false;
    }
    return true;
}

InterrogativeSet next_questions(InterrogativeSet answered,
                                const DependencyRuleSet& rules) {
    InterrogativeSet out;
    for (Interrogative q : all_interrogatives()) {
        if (!answered.contains(q) && is_answerable(q, answered, rules))
            out.insert(q);
    }
    return out;
}

InterrogativeOrder canonical_order() {
    return all_interrogatives();
}

namespace {

void enumerate_orders(InterrogativeSet answered, InterrogativeOrder& prefix,
                      std::size_t depth, const DependencyRuleSet& rules,
                      std::vector<InterrogativeOrder>& out) {
    if (depth == interrogative_count) {
        out.push_back(prefix);
        return;
    }
    // Candidates are tried in canonical index order, so the output is
    // already sorted lexicographically.
    for (Interrogative q : all_interrogatives()) {
        if (answered.contains(q) || !is_answerable(q, answered, rules)) continue;
        prefix[depth] = q;
        enumerate_orders(InterrogativeSet(answered).insert(q), prefix, depth + 1,
                         rules, out);
    }
}

} // namespace

std::vector<InterrogativeOrder> valid_orders(const DependencyRuleSet& rules) {
    std::vector<InterrogativeOrder> out;
    InterrogativeOrder prefix{};
    enumerate_orders({}, prefix, 0, rules, out);
    return out;
}

std::vector<RuleFinding> validate_rules(const DependencyRuleSet& rules) {
    std::vector<RuleFinding> findings;

    for (Interrogative q : all_interrogatives()) {
        for (const PrereqGroup& group : rules.prerequisites(q)) {
            if (group.empty()) {
                findings.push_back({RuleFinding::Kind::EmptyGroup,
                                    InterrogativeSet{q},
                                    std::string("empty prerequisite group: ") +
                                        std::string(to_string(q))});
                break;
            }
        }
        bool self = false;
        for (const PrereqGroup& group : rules.prerequisites(q)) {
            if (group.contains(q)) self = true;
        }
        if (self) {
            findings.push_back({RuleFinding::Kind::SelfReference,
                                InterrogativeSet{q},
                                std::string("self-reference: ") +
                                    std::string(to_string(q))});
        }
    }

    // Answerability is monotone in the answered set, so greedy saturation
    // completes iff some valid order exists.
    InterrogativeSet answered;
    for (;;) {
        InterrogativeSet next = next_questions(answered, rules);
        if (next.empty()) break;
        for (Interrogative q : next.items()) answered.insert(q);
    }
    if (answered != InterrogativeSet::all()) {
        InterrogativeSet stuck;
        for (Interrogative q : all_interrogatives())
            if (!answered.contains(q)) stuck.insert(q);
        findings.push_back({RuleFinding::Kind::NoValidOrder, stuck,
                            "no valid order: " + join_names(stuck, ", ") +
                                " can never become answerable"});
    }

    return findings;
}

} // namespace w6h
