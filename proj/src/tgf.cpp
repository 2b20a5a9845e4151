#include <algorithm>
#include <set>

#include "argkit/io.hpp"

namespace argkit {

namespace {

struct Field {
    std::string_view text;
    std::size_t column;
};

std::vector<Field> fields(std::string_view line) {
    std::vector<Field> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        const std::size_t begin = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        if (i > begin) out.push_back({line.substr(begin, i - begin), begin + 1});
    }
    return out;
}

}  // namespace

ParseResult parse_tgf(std::string_view text) {
    std::vector<Diagnostic> diags;
    std::vector<std::string> nodes;
    std::set<std::string, std::less<>> known;
    std::vector<NamedAttack> attacks;
    std::set<NamedAttack> seen;
    bool in_edges = false;
    std::size_t line_no = 0;

    auto fail = [&](std::size_t line, std::size_t col, std::string msg) {
        diags.push_back({line, col, std::move(msg), Severity::error});
        throw ParseError(std::move(diags));
    };

    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t nl = text.find('\n', pos);
        const std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.npos : nl - pos);
        ++line_no;
        const auto fs = fields(line);
        if (!fs.empty()) {
            if (!in_edges && fs.front().text == "#") {
                in_edges = true;
            } else if (!in_edges) {
                if (!known.emplace(fs.front().text).second) {
                    diags.push_back({line_no, fs.front().column,
                                     "duplicate node '" + std::string(fs.front().text) + "'", Severity::warning});
                } else {
                    nodes.emplace_back(fs.front().text);
                }
            } else {
                if (fs.size() < 2) fail(line_no, fs.front().column, "edge needs a source and a target");
                for (std::size_t k = 0; k < 2; ++k) {
                    if (!known.contains(fs[k].text)) {
                        fail(line_no, fs[k].column, "unknown node '" + std::string(fs[k].text) + "'");
                    }
                }
                NamedAttack att{std::string(fs[0].text), std::string(fs[1].text)};
                if (!seen.insert(att).second) {
                    diags.push_back({line_no, fs.front().column,
                                     "duplicate edge " + att.first + " " + att.second, Severity::warning});
                } else {
                    attacks.push_back(std::move(att));
                }
            }
        }
        if (nl == std::string_view::npos) break;
        pos = nl + 1;
    }
    if (!in_edges) fail(line_no, 1, "missing '#' separator");
    return {build_af(nodes, attacks, true), std::move(diags)};
}

std::string write_tgf(const AF& af) {
    std::vector<std::string> names = af.table().names();
    std::sort(names.begin(), names.end());
    std::string out;
    for (const auto& n : names) out += n + "\n";
    out += "#\n";
    for (const auto& [a, b] : af.named_attacks()) out += a + " " + b + "\n";
    return out;
}

}  // namespace argkit
