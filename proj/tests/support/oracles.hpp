#pragma once

// Independent oracles for the dependency engine. These deliberately avoid
// the library's bitset representation: groups become std::set<int> over
// canonical indices and orders are produced by std::next_permutation
// filtering, so they share no code path with the implementation under test.

#include <algorithm>
#include <set>
#include <vector>

#include "w6h/interrogative.hpp"

namespace w6h::testing {

inline std::vector<std::set<int>> oracle_groups(const DependencyRuleSet& rules,
                                                int q_index) {
    std::vector<std::set<int>> out;
    for (const PrereqGroup& group :
         rules.prerequisites(static_cast<Interrogative>(q_index))) {
        std::set<int> members;
        for (Interrogative member : group.items())
            members.insert(canonical_index(member));
        out.push_back(std::move(members));
    }
    return out;
}

inline bool oracle_is_answerable(const DependencyRuleSet& rules, int q_index,
                                 const std::set<int>& answered) {
    for (const std::set<int>& group : oracle_groups(rules, q_index)) {
        bool met = false;
        for (int member : group)
            if (answered.count(member)) met = true;
        if (!met) return false;
    }
    return true;
}

/// All 5040 permutations filtered by prefix answerability, in
/// std::next_permutation (= lexicographic) order.
inline std::vector<std::vector<int>> oracle_valid_orders(
    const DependencyRuleSet& rules) {
    std::vector<int> permutation = {1, 2, 3, 4, 5, 6, 7};
    std::vector<std::vector<int>> out;
    do {
        std::set<int> answered;
        bool ok = true;
        for (int q : permutation) {
            if (!oracle_is_answerable(rules, q, answered)) {
                ok = false;
                break;
            }
            answered.insert(q);
        }
        if (ok) out.push_back(permutation);
    } while (std::next_permutation(permutation.begin(), permutation.end()));
    return out;
}

inline std::vector<int> order_indices(const InterrogativeOrder& order) {
    std::vector<int> out;
    for (Interrogative q : order) out.push_back(canonical_index(q));
    return out;
}

} // namespace w6h::testing
