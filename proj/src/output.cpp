#include <algorithm>

#include "argkit/io.hpp"

namespace argkit {

std::string write_dot(const AF& af) {
    if (af.size() == 0) return "digraph af {}\n";
    std::vector<std::string> names = af.table().names();
    std::sort(names.begin(), names.end());
    std::string out = "digraph af {\n";
    for (const auto& n : names) out += "  \"" + n + "\";\n";
    for (const auto& [a, b] : af.named_attacks()) out += "  \"" + a + "\" -> \"" + b + "\";\n";
    out += "}\n";
    return out;
}

namespace {

std::string bracketed(const std::vector<std::string>& names) {
    std::string out = "[";
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i > 0) out += ',';
        out += names[i];
    }
    return out + "]";
}

}  // namespace

std::string format_set(const AF& af, const ArgSet& s) { return bracketed(named_set(af, s)); }

std::string format_extensions(const AF& af, const ExtensionSet& ext, bool iccma) {
    const NamedExtensions named = named_extensions(af, ext);
    std::string out;
    if (iccma) {
        out = "[";
        for (std::size_t i = 0; i < named.size(); ++i) {
            if (i > 0) out += ',';
            out += bracketed(named[i]);
        }
        return out + "]\n";
    }
    for (const auto& e : named) out += bracketed(e) + "\n";
    return out;
}

std::string format_class(const AF& af, const VerificationClass& cls) {
    std::string out;
    for (const auto& t : cls.tuples()) {
        out += "(" + format_set(af, t.set);
        for (const auto& img : t.images) out += ", " + format_set(af, img);
        out += ")\n";
    }
    return out;
}

}  // namespace argkit
