#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "argkit/af.hpp"

namespace argkit {

inline constexpr std::size_t kMaxEnumerationArgs = 5;

/// "a", "b", ... for n <= 26, "a0".. beyond.
[[nodiscard]] std::vector<std::string> default_names(std::size_t n);

/// Every AF over a fixed argument set, indexed by its attack bitmask
/// (bit i*n+j encodes the attack (a_i, a_j)). Index order is the
/// enumeration order used for least-witness selection everywhere.
class AfSpace {
public:
    /// Throws ResourceError when more than kMaxEnumerationArgs names are given.
    explicit AfSpace(const std::vector<std::string>& names);
    explicit AfSpace(std::size_t n) : AfSpace(default_names(n)) {}

    [[nodiscard]] std::uint64_t size() const noexcept { return std::uint64_t{1} << (n_ * n_); }
    [[nodiscard]] std::size_t num_args() const noexcept { return n_; }
    [[nodiscard]] AF at(std::uint64_t mask) const { return AF::from_mask(table_, mask); }
    [[nodiscard]] const std::shared_ptr<const ArgumentTable>& table() const noexcept { return table_; }

    void for_each(const std::function<void(std::uint64_t, const AF&)>& fn) const;

private:
    std::shared_ptr<const ArgumentTable> table_;
    std::size_t n_ = 0;
};

/// Streams all 2^(n^2) AFs over `arg_names` in ascending bitmask order.
[[nodiscard]] AfSpace enumerate_afs(const std::vector<std::string>& arg_names);

/// Uniformly random AF over `table` (each ordered pair attacked with p = 1/2).
[[nodiscard]] AF random_af(const std::shared_ptr<const ArgumentTable>& table, std::mt19937_64& rng);

}  // namespace argkit
