#include "argkit/neighborhood.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace argkit {

namespace {

struct NodeInfo {
    std::string_view name;
    std::array<BasicFn, 2> basics;
    std::size_t arity;
    int level;
};

// Indexed by Node.
constexpr std::array<NodeInfo, kNumNodes> kNodeInfo = {{
    {"eps", {BasicFn::eps, BasicFn::eps}, 1, 0},
    {"+", {BasicFn::plus, BasicFn::eps}, 1, 1},
    {"pm", {BasicFn::plus_minus, BasicFn::eps}, 1, 1},
    {"cap", {BasicFn::cap, BasicFn::eps}, 1, 1},
    {"delta", {BasicFn::delta, BasicFn::eps}, 1, 1},
    {"cup", {BasicFn::cup, BasicFn::eps}, 1, 1},
    {"mp", {BasicFn::minus_plus, BasicFn::eps}, 1, 1},
    {"-", {BasicFn::minus, BasicFn::eps}, 1, 1},
    {"+pm", {BasicFn::plus, BasicFn::plus_minus}, 2, 2},
    {"+mp", {BasicFn::plus, BasicFn::minus_plus}, 2, 2},
    {"pmmp", {BasicFn::plus_minus, BasicFn::minus_plus}, 2, 2},
    {"capcup", {BasicFn::cap, BasicFn::cup}, 2, 2},
    {"-pm", {BasicFn::minus, BasicFn::plus_minus}, 2, 2},
    {"-mp", {BasicFn::minus, BasicFn::minus_plus}, 2, 2},
    {"+-", {BasicFn::plus, BasicFn::minus}, 2, 3},
}};

constexpr std::size_t idx(Node n) { return static_cast<std::size_t>(n); }

const NodeInfo& info(Node n) { return kNodeInfo[idx(n)]; }

struct Closure {
    std::array<std::array<bool, kNumNodes>, kNumNodes> leq{};  // leq[x][y]: x below or equal y
};

const Closure& closure() {
    static const Closure c = [] {
        Closure out;
        for (std::size_t i = 0; i < kNumNodes; ++i) out.leq[i][i] = true;
        for (const auto& [lo, hi] : lattice_edges()) out.leq[idx(lo)][idx(hi)] = true;
        for (std::size_t k = 0; k < kNumNodes; ++k)
            for (std::size_t i = 0; i < kNumNodes; ++i)
                for (std::size_t j = 0; j < kNumNodes; ++j)
                    if (out.leq[i][k] && out.leq[k][j]) out.leq[i][j] = true;
        return out;
    }();
    return c;
}

bool leq(Node x, Node y) { return closure().leq[idx(x)][idx(y)]; }

Node unary_node(BasicFn b) {
    switch (b) {
        case BasicFn::eps: return Node::eps;
        case BasicFn::plus: return Node::p;
        case BasicFn::minus: return Node::m;
        case BasicFn::minus_plus: return Node::mp;
        case BasicFn::plus_minus: return Node::pm;
        case BasicFn::cap: return Node::cap;
        case BasicFn::cup: return Node::cup;
        case BasicFn::delta: return Node::delta;
    }
    throw std::logic_error("unknown basic function");
}

Node least_upper_bound(Node x, Node y) {
    std::vector<Node> upper;
    for (Node z : kAllNodes) {
        if (leq(x, z) && leq(y, z)) upper.push_back(z);
    }
    for (Node z : upper) {
        if (std::all_of(upper.begin(), upper.end(), [&](Node w) { return leq(z, w); })) return z;
    }
    throw std::logic_error("lattice has no least upper bound");
}

Node merge_nodes(Node x, Node y) {
    if (leq(x, y)) return y;
    if (leq(y, x)) return x;
    if (info(x).level == 1 && info(y).level == 1) return merge_pair(info(x).basics[0], info(y).basics[0]);
    return least_upper_bound(x, y);
}

std::vector<BasicFn> normalized(std::span<const BasicFn> basics) {
    std::vector<BasicFn> out;
    for (BasicFn b : basics) {
        if (b == BasicFn::eps) continue;
        if (std::find(out.begin(), out.end(), b) == out.end()) out.push_back(b);
    }
    return out;
}

}  // namespace

ArgSet eval_basic(BasicFn b, const ArgSet& plus, const ArgSet& minus) {
    switch (b) {
        case BasicFn::eps: return {};
        case BasicFn::plus: return plus;
        case BasicFn::minus: return minus;
        case BasicFn::minus_plus: return minus - plus;
        case BasicFn::plus_minus: return plus - minus;
        case BasicFn::cap: return plus & minus;
        case BasicFn::cup: return plus | minus;
        case BasicFn::delta: return plus ^ minus;
    }
    throw std::logic_error("unknown basic function");
}

std::string_view token(BasicFn b) noexcept {
    switch (b) {
        case BasicFn::eps: return "eps";
        case BasicFn::plus: return "p";
        case BasicFn::minus: return "m";
        case BasicFn::minus_plus: return "mp";
        case BasicFn::plus_minus: return "pm";
        case BasicFn::cap: return "cap";
        case BasicFn::cup: return "cup";
        case BasicFn::delta: return "delta";
    }
    return "?";
}

std::optional<BasicFn> parse_basic(std::string_view text) noexcept {
    for (BasicFn b : kAllBasics) {
        if (token(b) == text) return b;
    }
    return std::nullopt;
}

std::span<const BasicFn> NeighborhoodFn::basics() const noexcept {
    const NodeInfo& i = info(node_);
    return {i.basics.data(), i.arity};
}

std::string_view NeighborhoodFn::name() const noexcept { return info(node_).name; }

int NeighborhoodFn::level() const noexcept { return info(node_).level; }

const std::vector<std::pair<Node, Node>>& lattice_edges() {
    static const std::vector<std::pair<Node, Node>> edges = {
        {Node::eps, Node::p}, {Node::eps, Node::pm}, {Node::eps, Node::cap}, {Node::eps, Node::delta},
        {Node::eps, Node::cup}, {Node::eps, Node::mp}, {Node::eps, Node::m},
        {Node::p, Node::p_pm}, {Node::p, Node::p_mp},
        {Node::pm, Node::p_pm}, {Node::pm, Node::pm_mp}, {Node::pm, Node::m_pm},
        {Node::cap, Node::p_pm}, {Node::cap, Node::cap_cup}, {Node::cap, Node::m_mp},
        {Node::delta, Node::pm_mp}, {Node::delta, Node::cap_cup},
        {Node::cup, Node::p_mp}, {Node::cup, Node::cap_cup}, {Node::cup, Node::m_pm},
        {Node::mp, Node::p_mp}, {Node::mp, Node::pm_mp}, {Node::mp, Node::m_mp},
        {Node::m, Node::m_pm}, {Node::m, Node::m_mp},
        {Node::p_pm, Node::p_m}, {Node::p_mp, Node::p_m}, {Node::pm_mp, Node::p_m},
        {Node::cap_cup, Node::p_m}, {Node::m_pm, Node::p_m}, {Node::m_mp, Node::p_m},
    };
    return edges;
}

Node merge_pair(BasicFn a, BasicFn b) {
    using B = BasicFn;
    struct Entry {
        B x, y;
        Node to;
    };
    static constexpr std::array<Entry, 21> kTable = {{
        {B::plus, B::plus_minus, Node::p_pm}, {B::plus, B::cap, Node::p_pm}, {B::plus_minus, B::cap, Node::p_pm},
        {B::plus, B::minus_plus, Node::p_mp}, {B::plus, B::cup, Node::p_mp}, {B::minus_plus, B::cup, Node::p_mp},
        {B::plus_minus, B::minus_plus, Node::pm_mp}, {B::plus_minus, B::delta, Node::pm_mp},
        {B::minus_plus, B::delta, Node::pm_mp},
        {B::cap, B::cup, Node::cap_cup}, {B::cap, B::delta, Node::cap_cup}, {B::cup, B::delta, Node::cap_cup},
        {B::minus, B::plus_minus, Node::m_pm}, {B::minus, B::cup, Node::m_pm}, {B::plus_minus, B::cup, Node::m_pm},
        {B::minus, B::minus_plus, Node::m_mp}, {B::minus, B::cap, Node::m_mp}, {B::minus_plus, B::cap, Node::m_mp},
        {B::plus, B::minus, Node::p_m}, {B::plus, B::delta, Node::p_m}, {B::minus, B::delta, Node::p_m},
    }};
    for (const auto& e : kTable) {
        if ((e.x == a && e.y == b) || (e.x == b && e.y == a)) return e.to;
    }
    throw std::invalid_argument("merge_pair needs two distinct non-eps basics");
}

NeighborhoodFn canonicalize_in_order(const std::vector<BasicFn>& order) {
    const std::vector<BasicFn> basics = normalized(order);
    if (basics.empty()) return NeighborhoodFn(Node::eps);
    Node acc = unary_node(basics.front());
    for (std::size_t i = 1; i < basics.size(); ++i) acc = merge_nodes(acc, unary_node(basics[i]));
    return NeighborhoodFn(acc);
}

NeighborhoodFn canonicalize(std::span<const BasicFn> basics) {
    std::vector<BasicFn> sorted = normalized(basics);
    std::sort(sorted.begin(), sorted.end());
    return canonicalize_in_order(sorted);
}

bool more_informative(NeighborhoodFn x, NeighborhoodFn y) noexcept { return leq(y.node(), x.node()); }

std::optional<std::vector<BasicFn>> parse_basic_list(std::string_view text) {
    std::vector<BasicFn> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        std::string_view part = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
        while (!part.empty() && part.front() == ' ') part.remove_prefix(1);
        while (!part.empty() && part.back() == ' ') part.remove_suffix(1);
        auto b = parse_basic(part);
        if (!b) return std::nullopt;
        out.push_back(*b);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

std::optional<NeighborhoodFn> parse_neighborhood(std::string_view text) {
    if (auto list = parse_basic_list(text)) return canonicalize(*list);
    for (Node n : kAllNodes) {
        if (info(n).name == text) return NeighborhoodFn(n);
    }
    return std::nullopt;
}

bool informativeness_oracle(std::span<const BasicFn> x, std::span<const BasicFn> y) {
    constexpr ArgSet::Word kUniverse = 0b1111;
    auto image = [](std::span<const BasicFn> fn, const ArgSet& s, const ArgSet& t) {
        std::vector<ArgSet::Word> out;
        if (fn.empty()) out.push_back(0);
        for (BasicFn b : fn) out.push_back(eval_basic(b, s, t).low_word());
        return out;
    };
    std::map<std::vector<ArgSet::Word>, std::vector<ArgSet::Word>> delta;
    for (ArgSet::Word s = 0; s <= kUniverse; ++s) {
        for (ArgSet::Word t = 0; t <= kUniverse; ++t) {
            const ArgSet ss = ArgSet::from_mask(s);
            const ArgSet ts = ArgSet::from_mask(t);
            auto from = image(x, ss, ts);
            auto to = image(y, ss, ts);
            auto [it, fresh] = delta.emplace(std::move(from), to);
            if (!fresh && it->second != to) return false;
        }
    }
    return true;
}

bool informativeness_oracle(NeighborhoodFn x, NeighborhoodFn y) {
    return informativeness_oracle(x.basics(), y.basics());
}

}  // namespace argkit
