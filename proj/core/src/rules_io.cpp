#include "w6h/rules_io.hpp"

#include "w6h/errors.hpp"

#include "json.hpp"

namespace w6h {

DependencyRuleSet rules_from_interchange(std::string_view json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("malformed rules document: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("rules") || !doc["rules"].is_object())
        throw Error("malformed rules document: expected top-level \"rules\" object");

    DependencyRuleSet rules;
    for (const auto& [key, value] : doc["rules"].items()) {
        auto q = interrogative_from(key);
        if (!q) throw Error("unknown interrogative \"" + key + "\" in rules document");
        if (!value.is_array())
            throw Error("rules for \"" + key + "\" must be an array of groups");

        std::vector<PrereqGroup> groups;
        for (const auto& group_json : value) {
            if (!group_json.is_array())
                throw Error("each prerequisite group for \"" + key +
                            "\" must be an array of interrogative names");
            PrereqGroup group;
            for (const auto& member_json : group_json) {
                if (!member_json.is_string())
                    throw Error("group members must be interrogative names");
                auto member = interrogative_from(member_json.get<std::string>());
                if (!member)
                    throw Error("unknown interrogative \"" +
                                member_json.get<std::string>() +
                                "\" in a prerequisite group");
                group.insert(*member);
            }
            groups.push_back(group);
        }
        rules.set_prerequisites(*q, std::move(groups));
    }

    auto findings = validate_rules(rules);
    if (!findings.empty())
        throw Error("invalid rule set: " + findings.front().message);
    return rules;
}

std::string rules_to_interchange(const DependencyRuleSet& rules) {
    nlohmann::ordered_json out;
    out["w6hVersion"] = 1;
    nlohmann::ordered_json rules_json;
    for (Interrogative q : all_interrogatives()) {
        nlohmann::ordered_json groups = nlohmann::ordered_json::array();
        for (const PrereqGroup& group : rules.prerequisites(q)) {
            nlohmann::ordered_json members = nlohmann::ordered_json::array();
            for (Interrogative member : group.items())
                members.push_back(std::string(to_string(member)));
            groups.push_back(std::move(members));
        }
        rules_json[std::string(to_string(q))] = std::move(groups);
    }
    out["rules"] = std::move(rules_json);
    return out.dump(2) + "\n";
}

} // namespace w6h
