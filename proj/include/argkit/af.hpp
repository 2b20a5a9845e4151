#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "argkit/arg_set.hpp"

namespace argkit {

/// Interned argument names. Ids are dense, 0..n-1, in insertion order.
class ArgumentTable {
public:
    ArgumentTable() = default;
    explicit ArgumentTable(const std::vector<std::string>& names);

    /// Returns the id of `name`, adding it if unseen.
    ArgId intern(std::string_view name);

    [[nodiscard]] std::optional<ArgId> find(std::string_view name) const;
    [[nodiscard]] const std::string& name(ArgId id) const { return names_.at(id); }
    [[nodiscard]] const std::vector<std::string>& names() const noexcept { return names_; }
    [[nodiscard]] std::size_t size() const noexcept { return names_.size(); }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, ArgId> index_;
};

using AttackPair = std::pair<ArgId, ArgId>;
using NamedAttack = std::pair<std::string, std::string>;

/// A finite argumentation framework (A, R). Immutable once built; copies
/// share the argument table.
///
/// Equality is name-level: two frameworks are equal when they have the same
/// argument names and the same attacks between those names, regardless of
/// the id each name received.
class ArgumentationFramework {
public:
    ArgumentationFramework();
    ArgumentationFramework(std::shared_ptr<const ArgumentTable> table, const std::vector<AttackPair>& attacks);

    /// Builds the framework over `table` whose attack (i, j) is present iff
    /// bit i*n+j of `mask` is set. Requires n*n <= 64.
    static ArgumentationFramework from_mask(std::shared_ptr<const ArgumentTable> table, std::uint64_t mask);

    [[nodiscard]] std::size_t size() const noexcept { return table_->size(); }
    [[nodiscard]] const ArgumentTable& table() const noexcept { return *table_; }
    [[nodiscard]] const std::shared_ptr<const ArgumentTable>& shared_table() const noexcept { return table_; }
    [[nodiscard]] const std::string& name(ArgId id) const { return table_->name(id); }
    [[nodiscard]] ArgSet arguments() const { return ArgSet::prefix(size()); }

    [[nodiscard]] bool attacks(ArgId from, ArgId to) const;
    /// Arguments attacked by `a`.
    [[nodiscard]] const ArgSet& targets(ArgId a) const { return targets_.at(a); }
    /// Arguments attacking `a`.
    [[nodiscard]] const ArgSet& attackers(ArgId a) const { return attackers_.at(a); }

    /// {b : S attacks b}
    [[nodiscard]] ArgSet attacked_by(const ArgSet& s) const;
    /// {b : b attacks S}
    [[nodiscard]] ArgSet attackers_of(const ArgSet& s) const;

    /// Attacks sorted by (source id, target id).
    [[nodiscard]] std::vector<AttackPair> attack_pairs() const;
    /// Attacks as name pairs, sorted lexicographically by names.
    [[nodiscard]] std::vector<NamedAttack> named_attacks() const;
    [[nodiscard]] std::size_t num_attacks() const noexcept;

    /// Bitmask encoding used by from_mask. Requires n*n <= 64.
    [[nodiscard]] std::uint64_t attack_mask() const;

    /// Throws InputError unless every member of `s` is an argument id.
    void require_members(const ArgSet& s) const;
    void require_member(ArgId a) const;

    friend bool operator==(const ArgumentationFramework& lhs, const ArgumentationFramework& rhs);

private:
    std::shared_ptr<const ArgumentTable> table_;
    std::vector<ArgSet> targets_;
    std::vector<ArgSet> attackers_;
};

using AF = ArgumentationFramework;

/// A deduplicated family of argument sets in canonical order
/// (cardinality, then lexicographic on ascending ids).
class ExtensionSet {
public:
    ExtensionSet() = default;
    explicit ExtensionSet(std::vector<ArgSet> sets);
    ExtensionSet(std::initializer_list<ArgSet> sets);

    [[nodiscard]] std::size_t size() const noexcept { return sets_.size(); }
    [[nodiscard]] bool empty() const noexcept { return sets_.empty(); }
    [[nodiscard]] bool contains(const ArgSet& s) const;
    [[nodiscard]] const ArgSet& operator[](std::size_t i) const { return sets_[i]; }
    [[nodiscard]] const std::vector<ArgSet>& sets() const noexcept { return sets_; }

    /// Every member of this family is a member of `other`.
    [[nodiscard]] bool subset_of(const ExtensionSet& other) const;

    [[nodiscard]] auto begin() const noexcept { return sets_.begin(); }
    [[nodiscard]] auto end() const noexcept { return sets_.end(); }

    friend bool operator==(const ExtensionSet&, const ExtensionSet&) = default;

    [[nodiscard]] std::size_t hash() const noexcept;

private:
    std::vector<ArgSet> sets_;
};

/// Extension family keyed by argument names: each extension is an ascending
/// list of names, the family is sorted by (size, lexicographic names).
using NamedExtensions = std::vector<std::vector<std::string>>;

[[nodiscard]] NamedExtensions named_extensions(const AF& af, const ExtensionSet& ext);
[[nodiscard]] std::vector<std::string> named_set(const AF& af, const ArgSet& s);

/// Above this many enumerated sets conflict_free_sets throws ResourceError.
inline constexpr std::size_t kMaxEnumeratedSets = std::size_t{1} << 22;

/// Builds an AF over `arg_names` plus any attack endpoint not listed there.
/// Duplicates collapse. With `strict`, an unlisted endpoint is an InputError.
[[nodiscard]] AF build_af(const std::vector<std::string>& arg_names, const std::vector<NamedAttack>& attacks,
                          bool strict = false);

[[nodiscard]] bool is_conflict_free(const AF& af, const ArgSet& s);
[[nodiscard]] ExtensionSet conflict_free_sets(const AF& af);
/// S together with the arguments S attacks.
[[nodiscard]] ArgSet range(const AF& af, const ArgSet& s);
/// S together with the arguments attacking S.
[[nodiscard]] ArgSet anti_range(const AF& af, const ArgSet& s);
[[nodiscard]] bool defends(const AF& af, const ArgSet& s, ArgId a);
/// The characteristic function: arguments defended by S.
[[nodiscard]] ArgSet characteristic(const AF& af, const ArgSet& s);
[[nodiscard]] ArgSet self_loops(const AF& af);
[[nodiscard]] AF union_af(const AF& f, const AF& g);
/// Drops every attack between two distinct self-attacking arguments.
[[nodiscard]] AF loop_reduct(const AF& af);

/// Visits the conflict-free sets in an unspecified order without
/// materializing them.
void for_each_conflict_free(const AF& af, const std::function<void(const ArgSet&)>& fn);

}  // namespace argkit
