#include "argkit/enumerate.hpp"

#include "argkit/errors.hpp"

namespace argkit {

std::vector<std::string> default_names(std::size_t n) {
    std::vector<std::string> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (n <= 26) {
            out.emplace_back(1, static_cast<char>('a' + i));
        } else {
            out.push_back("a" + std::to_string(i));
        }
    }
    return out;
}

AfSpace::AfSpace(const std::vector<std::string>& names) : n_(names.size()) {
    if (n_ > kMaxEnumerationArgs) {
        throw ResourceError("exhaustive AF enumeration is limited to " + std::to_string(kMaxEnumerationArgs) +
                            " arguments");
    }
    auto table = std::make_shared<ArgumentTable>(names);
    if (table->size() != n_) throw InputError("duplicate argument names in enumeration base");
    table_ = std::move(table);
}

void AfSpace::for_each(const std::function<void(std::uint64_t, const AF&)>& fn) const {
    const std::uint64_t total = size();
    for (std::uint64_t mask = 0; mask < total; ++mask) fn(mask, at(mask));
}

AfSpace enumerate_afs(const std::vector<std::string>& arg_names) { return AfSpace(arg_names); }

AF random_af(const std::shared_ptr<const ArgumentTable>& table, std::mt19937_64& rng) {
    const std::size_t n = table->size();
    std::vector<AttackPair> pairs;
    std::bernoulli_distribution coin(0.5);
    for (ArgId a = 0; a < n; ++a) {
        for (ArgId b = 0; b < n; ++b) {
            if (coin(rng)) pairs.emplace_back(a, b);
        }
    }
    return AF(table, pairs);
}

}  // namespace argkit
