#include "argkit/arg_set.hpp"

#include <algorithm>

namespace argkit {

ArgSet::ArgSet(std::initializer_list<ArgId> ids) {
    for (ArgId id : ids) insert(id);
}

ArgSet ArgSet::from_ids(const std::vector<ArgId>& ids) {
    ArgSet s;
    for (ArgId id : ids) s.insert(id);
    return s;
}

ArgSet ArgSet::prefix(std::size_t n) {
    ArgSet s;
    if (n == 0) return s;
    s.words_.assign((n + kWordBits - 1) / kWordBits, ~Word{0});
    const std::size_t rem = n % kWordBits;
    if (rem != 0) s.words_.back() = (Word{1} << rem) - 1;
    return s;
}

ArgSet ArgSet::from_mask(Word mask) {
    ArgSet s;
    if (mask != 0) s.words_.push_back(mask);
    return s;
}

void ArgSet::insert(ArgId id) {
    const std::size_t w = id / kWordBits;
    if (w >= words_.size()) words_.resize(w + 1, 0);
    words_[w] |= Word{1} << (id % kWordBits);
}

void ArgSet::erase(ArgId id) {
    const std::size_t w = id / kWordBits;
    if (w >= words_.size()) return;
    words_[w] &= ~(Word{1} << (id % kWordBits));
    trim();
}

bool ArgSet::contains(ArgId id) const noexcept {
    const std::size_t w = id / kWordBits;
    return w < words_.size() && ((words_[w] >> (id % kWordBits)) & 1U) != 0;
}

std::size_t ArgSet::size() const noexcept {
    std::size_t n = 0;
    for (Word w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

std::size_t ArgSet::bound() const noexcept {
    if (words_.empty()) return 0;
    const Word top = words_.back();
    return (words_.size() - 1) * kWordBits + (kWordBits - static_cast<std::size_t>(std::countl_zero(top)));
}

bool ArgSet::subset_of(const ArgSet& other) const noexcept {
    if (words_.size() > other.words_.size()) return false;
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if ((words_[i] & ~other.words_[i]) != 0) return false;
    }
    return true;
}

bool ArgSet::proper_subset_of(const ArgSet& other) const noexcept {
    return subset_of(other) && !(*this == other);
}

bool ArgSet::intersects(const ArgSet& other) const noexcept {
    const std::size_t n = std::min(words_.size(), other.words_.size());
    for (std::size_t i = 0; i < n; ++i) {
        if ((words_[i] & other.words_[i]) != 0) return true;
    }
    return false;
}

ArgSet& ArgSet::operator|=(const ArgSet& other) {
    if (other.words_.size() > words_.size()) words_.resize(other.words_.size(), 0);
    for (std::size_t i = 0; i < other.words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
}

ArgSet& ArgSet::operator&=(const ArgSet& other) {
    if (words_.size() > other.words_.size()) words_.resize(other.words_.size());
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    trim();
    return *this;
}

ArgSet& ArgSet::operator-=(const ArgSet& other) {
    const std::size_t n = std::min(words_.size(), other.words_.size());
    for (std::size_t i = 0; i < n; ++i) words_[i] &= ~other.words_[i];
    trim();
    return *this;
}

ArgSet& ArgSet::operator^=(const ArgSet& other) {
    if (other.words_.size() > words_.size()) words_.resize(other.words_.size(), 0);
    for (std::size_t i = 0; i < other.words_.size(); ++i) words_[i] ^= other.words_[i];
    trim();
    return *this;
}

std::vector<ArgId> ArgSet::ids() const {
    std::vector<ArgId> out;
    out.reserve(size());
    for_each([&](ArgId id) { out.push_back(id); });
    return out;
}

std::size_t ArgSet::hash() const noexcept {
    // splitmix64 finalizer folded over the words
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ words_.size();
    for (Word w : words_) {
        std::uint64_t z = w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        h ^= z ^ (z >> 31);
    }
    return static_cast<std::size_t>(h);
}

void ArgSet::trim() noexcept {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

std::strong_ordering canonical_compare(const ArgSet& lhs, const ArgSet& rhs) noexcept {
    const std::size_t ls = lhs.size();
    const std::size_t rs = rhs.size();
    if (ls != rs) return ls <=> rs;
    // Equal cardinality: the first differing member decides; the set holding
    // the smaller id at that position comes first.
    const ArgSet diff = lhs ^ rhs;
    if (diff.empty()) return std::strong_ordering::equal;
    ArgId first = 0;
    bool found = false;
    diff.for_each([&](ArgId id) {
        if (!found) {
            first = id;
            found = true;
        }
    });
    return lhs.contains(first) ? std::strong_ordering::less : std::strong_ordering::greater;
}

}  // namespace argkit
