#include "argkit/af.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "argkit/errors.hpp"

namespace argkit {

ArgumentTable::ArgumentTable(const std::vector<std::string>& names) {
    for (const auto& n : names) intern(n);
}

ArgId ArgumentTable::intern(std::string_view name) {
    std::string key(name);
    auto it = index_.find(key);
    if (it != index_.end()) return it->second;
    const auto id = static_cast<ArgId>(names_.size());
    names_.push_back(key);
    index_.emplace(std::move(key), id);
    return id;
}

std::optional<ArgId> ArgumentTable::find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

// --- ArgumentationFramework ------------------------------------------------

ArgumentationFramework::ArgumentationFramework() : table_(std::make_shared<const ArgumentTable>()) {}

ArgumentationFramework::ArgumentationFramework(std::shared_ptr<const ArgumentTable> table,
                                               const std::vector<AttackPair>& attacks)
    : table_(std::move(table)) {
    if (!table_) table_ = std::make_shared<const ArgumentTable>();
    const std::size_t n = table_->size();
    targets_.resize(n);
    attackers_.resize(n);
    for (const auto& [from, to] : attacks) {
        if (from >= n || to >= n) throw InputError("attack endpoint outside the argument table");
        targets_[from].insert(to);
        attackers_[to].insert(from);
    }
}

ArgumentationFramework ArgumentationFramework::from_mask(std::shared_ptr<const ArgumentTable> table,
                                                         std::uint64_t mask) {
    const std::size_t n = table->size();
    if (n * n > 64) throw ResourceError("from_mask supports at most 8 arguments");
    ArgumentationFramework af;
    af.table_ = std::move(table);
    af.targets_.resize(n);
    af.attackers_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        ArgSet::Word out = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if ((mask >> (i * n + j)) & 1U) out |= ArgSet::Word{1} << j;
        }
        af.targets_[i] = ArgSet::from_mask(out);
    }
    for (std::size_t j = 0; j < n; ++j) {
        ArgSet::Word in = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if ((mask >> (i * n + j)) & 1U) in |= ArgSet::Word{1} << i;
        }
        af.attackers_[j] = ArgSet::from_mask(in);
    }
    return af;
}

bool ArgumentationFramework::attacks(ArgId from, ArgId to) const {
    require_member(from);
    require_member(to);
    return targets_[from].contains(to);
}

ArgSet ArgumentationFramework::attacked_by(const ArgSet& s) const {
    ArgSet out;
    s.for_each([&](ArgId a) { out |= targets_.at(a); });
    return out;
}

ArgSet ArgumentationFramework::attackers_of(const ArgSet& s) const {
    ArgSet out;
    s.for_each([&](ArgId a) { out |= attackers_.at(a); });
    return out;
}

std::vector<AttackPair> ArgumentationFramework::attack_pairs() const {
    std::vector<AttackPair> out;
    for (ArgId a = 0; a < targets_.size(); ++a) {
        targets_[a].for_each([&](ArgId b) { out.emplace_back(a, b); });
    }
    return out;
}

std::vector<NamedAttack> ArgumentationFramework::named_attacks() const {
    std::vector<NamedAttack> out;
    for (const auto& [a, b] : attack_pairs()) out.emplace_back(name(a), name(b));
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t ArgumentationFramework::num_attacks() const noexcept {
    std::size_t n = 0;
    for (const auto& t : targets_) n += t.size();
    return n;
}

std::uint64_t ArgumentationFramework::attack_mask() const {
    const std::size_t n = size();
    if (n * n > 64) throw ResourceError("attack_mask supports at most 8 arguments");
    std::uint64_t mask = 0;
    for (const auto& [a, b] : attack_pairs()) mask |= std::uint64_t{1} << (a * n + b);
    return mask;
}

void ArgumentationFramework::require_members(const ArgSet& s) const {
    if (s.bound() > size()) throw InputError("argument set contains ids outside the framework");
}

void ArgumentationFramework::require_member(ArgId a) const {
    if (a >= size()) throw InputError("argument id outside the framework");
}

bool operator==(const ArgumentationFramework& lhs, const ArgumentationFramework& rhs) {
    if (lhs.size() != rhs.size()) return false;
    if (lhs.table_ == rhs.table_) {
        return lhs.targets_ == rhs.targets_;
    }
    std::vector<std::string> ln = lhs.table().names();
    std::vector<std::string> rn = rhs.table().names();
    std::sort(ln.begin(), ln.end());
    std::sort(rn.begin(), rn.end());
    if (ln != rn) return false;
    return lhs.named_attacks() == rhs.named_attacks();
}

// --- ExtensionSet ----------------------------------------------------------

ExtensionSet::ExtensionSet(std::vector<ArgSet> sets) : sets_(std::move(sets)) {
    std::sort(sets_.begin(), sets_.end(), CanonicalLess{});
    sets_.erase(std::unique(sets_.begin(), sets_.end()), sets_.end());
}

ExtensionSet::ExtensionSet(std::initializer_list<ArgSet> sets) : ExtensionSet(std::vector<ArgSet>(sets)) {}

bool ExtensionSet::contains(const ArgSet& s) const {
    return std::binary_search(sets_.begin(), sets_.end(), s, CanonicalLess{});
}

bool ExtensionSet::subset_of(const ExtensionSet& other) const {
    return std::all_of(sets_.begin(), sets_.end(), [&](const ArgSet& s) { return other.contains(s); });
}

std::size_t ExtensionSet::hash() const noexcept {
    std::size_t h = sets_.size() * 0x9e3779b97f4a7c15ULL;
    for (const auto& s : sets_) h = (h ^ s.hash()) * 0x100000001b3ULL + 0x7f4a7c15;
    return h;
}

std::vector<std::string> named_set(const AF& af, const ArgSet& s) {
    std::vector<std::string> out;
    s.for_each([&](ArgId a) { out.push_back(af.name(a)); });
    std::sort(out.begin(), out.end());
    return out;
}

NamedExtensions named_extensions(const AF& af, const ExtensionSet& ext) {
    NamedExtensions out;
    out.reserve(ext.size());
    for (const auto& s : ext) out.push_back(named_set(af, s));
    std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) {
        if (l.size() != r.size()) return l.size() < r.size();
        return l < r;
    });
    return out;
}

// --- primitive queries -----------------------------------------------------

AF build_af(const std::vector<std::string>& arg_names, const std::vector<NamedAttack>& attacks, bool strict) {
    auto table = std::make_shared<ArgumentTable>();
    for (const auto& n : arg_names) table->intern(n);
    std::vector<AttackPair> pairs;
    pairs.reserve(attacks.size());
    for (const auto& [from, to] : attacks) {
        if (strict && (!table->find(from) || !table->find(to))) {
            throw InputError("attack (" + from + "," + to + ") references an undeclared argument");
        }
        const ArgId a = table->intern(from);
        const ArgId b = table->intern(to);
        pairs.emplace_back(a, b);
    }
    return AF(std::move(table), pairs);
}

bool is_conflict_free(const AF& af, const ArgSet& s) {
    af.require_members(s);
    return !af.attacked_by(s).intersects(s);
}

void for_each_conflict_free(const AF& af, const std::function<void(const ArgSet&)>& fn) {
    const std::size_t n = af.size();
    // Static neighbourhood: arguments in conflict with a (either direction).
    std::vector<ArgSet> clash(n);
    std::vector<bool> loop(n);
    for (ArgId a = 0; a < n; ++a) {
        clash[a] = af.targets(a) | af.attackers(a);
        loop[a] = af.targets(a).contains(a);
    }
    ArgSet current;
    ArgSet blocked;
    // Depth-first include/exclude over ids in ascending order.
    std::function<void(ArgId)> rec = [&](ArgId next) {
        if (next == n) {
            fn(current);
            return;
        }
        rec(next + 1);
        if (!loop[next] && !blocked.contains(next)) {
            const ArgSet saved = blocked;
            current.insert(next);
            blocked |= clash[next];
            rec(next + 1);
            current.erase(next);
            blocked = saved;
        }
    };
    rec(0);
}

ExtensionSet conflict_free_sets(const AF& af) {
    std::vector<ArgSet> out;
    for_each_conflict_free(af, [&](const ArgSet& s) {
        if (out.size() >= kMaxEnumeratedSets) throw ResourceError("too many conflict-free sets to enumerate");
        out.push_back(s);
    });
    return ExtensionSet(std::move(out));
}

ArgSet range(const AF& af, const ArgSet& s) {
    af.require_members(s);
    return s | af.attacked_by(s);
}

ArgSet anti_range(const AF& af, const ArgSet& s) {
    af.require_members(s);
    return s | af.attackers_of(s);
}

bool defends(const AF& af, const ArgSet& s, ArgId a) {
    af.require_members(s);
    af.require_member(a);
    return af.attackers(a).subset_of(af.attacked_by(s));
}

ArgSet characteristic(const AF& af, const ArgSet& s) {
    af.require_members(s);
    const ArgSet hit = af.attacked_by(s);
    ArgSet out;
    for (ArgId a = 0; a < af.size(); ++a) {
        if (af.attackers(a).subset_of(hit)) out.insert(a);
    }
    return out;
}

ArgSet self_loops(const AF& af) {
    ArgSet out;
    for (ArgId a = 0; a < af.size(); ++a) {
        if (af.targets(a).contains(a)) out.insert(a);
    }
    return out;
}

AF union_af(const AF& f, const AF& g) {
    if (f.shared_table() == g.shared_table()) {
        std::vector<AttackPair> pairs = f.attack_pairs();
        for (const auto& p : g.attack_pairs()) pairs.push_back(p);
        return AF(f.shared_table(), pairs);
    }
    auto table = std::make_shared<ArgumentTable>(f.table().names());
    for (const auto& n : g.table().names()) table->intern(n);
    std::vector<AttackPair> pairs = f.attack_pairs();
    for (const auto& [a, b] : g.attack_pairs()) {
        pairs.emplace_back(*table->find(g.name(a)), *table->find(g.name(b)));
    }
    return AF(std::move(table), pairs);
}

AF loop_reduct(const AF& af) {
    const ArgSet loops = self_loops(af);
    std::vector<AttackPair> kept;
    for (const auto& [a, b] : af.attack_pairs()) {
        if (a != b && loops.contains(a) && loops.contains(b)) continue;
        kept.emplace_back(a, b);
    }
    return AF(af.shared_table(), kept);
}

}  // namespace argkit
