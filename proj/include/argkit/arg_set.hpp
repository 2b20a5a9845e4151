#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace argkit {

using ArgId = std::uint32_t;

/// A set of argument ids backed by a bitset.
///
/// Ids below 64 live in a single inline word, larger ids spill to the heap.
/// The representation is normalized (no trailing zero words), so two sets
/// compare equal iff they hold the same ids, independent of how they were
/// built.
class ArgSet {
public:
    using Word = std::uint64_t;
    static constexpr std::size_t kWordBits = 64;

    ArgSet() = default;
    ArgSet(std::initializer_list<ArgId> ids);

    static ArgSet from_ids(const std::vector<ArgId>& ids);
    /// {0, ..., n-1}
    static ArgSet prefix(std::size_t n);
    /// The set whose members are the one-bits of `mask` (ids < 64 only).
    static ArgSet from_mask(Word mask);

    void insert(ArgId id);
    void erase(ArgId id);
    [[nodiscard]] bool contains(ArgId id) const noexcept;

    [[nodiscard]] bool empty() const noexcept { return words_.empty(); }
    [[nodiscard]] std::size_t size() const noexcept;
    /// One past the largest member, 0 for the empty set.
    [[nodiscard]] std::size_t bound() const noexcept;

    [[nodiscard]] bool subset_of(const ArgSet& other) const noexcept;
    [[nodiscard]] bool proper_subset_of(const ArgSet& other) const noexcept;
    [[nodiscard]] bool intersects(const ArgSet& other) const noexcept;

    ArgSet& operator|=(const ArgSet& other);
    ArgSet& operator&=(const ArgSet& other);
    ArgSet& operator-=(const ArgSet& other);
    ArgSet& operator^=(const ArgSet& other);

    friend ArgSet operator|(ArgSet lhs, const ArgSet& rhs) { return lhs |= rhs; }
    friend ArgSet operator&(ArgSet lhs, const ArgSet& rhs) { return lhs &= rhs; }
    friend ArgSet operator-(ArgSet lhs, const ArgSet& rhs) { return lhs -= rhs; }
    friend ArgSet operator^(ArgSet lhs, const ArgSet& rhs) { return lhs ^= rhs; }

    friend bool operator==(const ArgSet&, const ArgSet&) = default;

    /// Members in ascending order.
    [[nodiscard]] std::vector<ArgId> ids() const;

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            Word bits = words_[w];
            while (bits != 0) {
                int bit = std::countr_zero(bits);
                fn(static_cast<ArgId>(w * kWordBits + static_cast<std::size_t>(bit)));
                bits &= bits - 1;
            }
        }
    }

    /// Low word of the bitset; exact whenever bound() <= 64.
    [[nodiscard]] Word low_word() const noexcept { return words_.empty() ? 0 : words_[0]; }

    [[nodiscard]] std::size_t hash() const noexcept;

private:
    void trim() noexcept;

    boost::container::small_vector<Word, 1> words_;
};

/// Canonical extension order: cardinality first, then lexicographic on the
/// ascending member lists.
[[nodiscard]] std::strong_ordering canonical_compare(const ArgSet& lhs, const ArgSet& rhs) noexcept;

struct CanonicalLess {
    bool operator()(const ArgSet& lhs, const ArgSet& rhs) const noexcept {
        return canonical_compare(lhs, rhs) < 0;
    }
};

/// Calls `fn` on every subset of `base` (including the empty set and `base`).
template <typename Fn>
void for_each_subset(const ArgSet& base, Fn&& fn) {
    const std::vector<ArgId> members = base.ids();
    const std::size_t k = members.size();
    const std::uint64_t count = std::uint64_t{1} << k;
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        ArgSet subset;
        for (std::size_t i = 0; i < k; ++i) {
            if ((mask >> i) & 1U) subset.insert(members[i]);
        }
        fn(subset);
    }
}

}  // namespace argkit

template <>
struct std::hash<argkit::ArgSet> {
    std::size_t operator()(const argkit::ArgSet& s) const noexcept { return s.hash(); }
};
