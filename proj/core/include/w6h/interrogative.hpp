#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace w6h {

/// The seven interrogatives, in canonical column order. The enumerator
/// value is the canonical index (1..7).
enum class Interrogative : std::uint8_t {
    Who = 1,
    What = 2,
    Which = 3,
    Where = 4,
    How = 5,
    Why = 6,
    When = 7,
};

inline constexpr std::size_t interrogative_count = 7;

constexpr int canonical_index(Interrogative q) {
    return static_cast<int>(q);
}

constexpr std::array<Interrogative, interrogative_count> all_interrogatives() {
    return {Interrogative::Who,  Interrogative::What, Interrogative::Which,
            Interrogative::Where, Interrogative::How,  Interrogative::Why,
            Interrogative::When};
}

/// Lowercase name used by the DSL and interchange formats ("who".."when").
std::string_view to_string(Interrogative q);

std::optional<Interrogative> interrogative_from(std::string_view name);

/// Small value set of interrogatives. Iteration and rendering follow the
/// canonical index order.
class InterrogativeSet {
public:
    constexpr InterrogativeSet() = default;

    constexpr InterrogativeSet(std::initializer_list<Interrogative> qs) {
        for (Interrogative q : qs) insert(q);
    }

    static constexpr InterrogativeSet all() {
        InterrogativeSet s;
        s.bits_ = 0x7f << 1;
        return s;
    }

    constexpr bool contains(Interrogative q) const {
        return (bits_ & bit(q)) != 0;
    }

    constexpr InterrogativeSet& insert(Interrogative q) {
        bits_ |= bit(q);
        return *this;
    }

    constexpr InterrogativeSet& erase(Interrogative q) {
        bits_ &= static_cast<std::uint8_t>(~bit(q));
        return *this;
    }

    constexpr bool empty() const { return bits_ == 0; }

    constexpr std::size_t size() const {
        std::size_t n = 0;
        for (Interrogative q : all_interrogatives())
            if (contains(q)) ++n;
        return n;
    }

    constexpr bool intersects(InterrogativeSet other) const {
        return (bits_ & other.bits_) != 0;
    }

    constexpr bool subset_of(InterrogativeSet other) const {
        return (bits_ & ~other.bits_) == 0;
    }

    /// Members in canonical index order.
    std::vector<Interrogative> items() const;

    friend constexpr bool operator==(InterrogativeSet, InterrogativeSet) = default;

private:
    static constexpr std::uint8_t bit(Interrogative q) {
        return static_cast<std::uint8_t>(1u << static_cast<unsigned>(q));
    }

    std::uint8_t bits_ = 0;
};

/// One prerequisite group: satisfied when at least one member is answered.
using PrereqGroup = InterrogativeSet;

/// Total map from interrogative to its prerequisite groups (AND of ORs).
/// Default-constructed, every interrogative is independent.
class DependencyRuleSet {
public:
    DependencyRuleSet() = default;

    const std::vector<PrereqGroup>& prerequisites(Interrogative q) const {
        return groups_[slot(q)];
    }

    void set_prerequisites(Interrogative q, std::vector<PrereqGroup> groups) {
        groups_[slot(q)] = std::move(groups);
    }

    bool operator==(const DependencyRuleSet&) const = default;

private:
    static constexpr std::size_t slot(Interrogative q) {
        return static_cast<std::size_t>(q) - 1;
    }

    std::array<std::vector<PrereqGroup>, interrogative_count> groups_{};
};

/// A total order over the seven interrogatives.
using InterrogativeOrder = std::array<Interrogative, interrogative_count>;

/// The rule set read off the framework table: Who, What, Which and Where
/// are independent; How needs What and one of Which/Where; Why needs What
/// and How; When needs How and Why.
DependencyRuleSet standard_rules();

/// True iff every prerequisite group of `q` intersects `answered`.
bool is_answerable(Interrogative q, InterrogativeSet answered,
                   const DependencyRuleSet& rules);

/// The unanswered interrogatives that are answerable right now.
InterrogativeSet next_questions(InterrogativeSet answered,
                                const DependencyRuleSet& rules);

/// (Who, What, Which, Where, How, Why, When).
InterrogativeOrder canonical_order();

/// Every permutation in which each element is answerable from its
/// predecessors, sorted lexicographically by canonical index.
std::vector<InterrogativeOrder> valid_orders(const DependencyRuleSet& rules);

struct RuleFinding {
    enum class Kind {
        SelfReference,
        EmptyGroup,
        NoValidOrder,
    };

    Kind kind;
    InterrogativeSet involved;
    std::string message;
};

/// Empty iff the rule set is non-self-referential, has no empty groups,
/// and admits at least one valid total order.
std::vector<RuleFinding> validate_rules(const DependencyRuleSet& rules);

} // namespace w6h
