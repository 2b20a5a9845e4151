#include <doctest.h>

#include <fstream>
#include <sstream>

#include "argkit/enumerate.hpp"
#include "argkit/io.hpp"
#include "argkit/verification.hpp"
#include "argkit/errors.hpp"
#include "fixtures.hpp"

using namespace argkit;

namespace {

std::string slurp(const std::string& name) {
    std::ifstream in(std::string(ARGKIT_DATA_DIR) + "/" + name);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Diagnostic first_error_of(std::string_view text, bool tgf = false, bool strict = false) {
    try {
        (void)(tgf ? parse_tgf(text) : parse_apx(text, strict));
    } catch (const ParseError& e) {
        REQUIRE_FALSE(e.diagnostics().empty());
        for (const auto& d : e.diagnostics()) {
            if (d.severity == Severity::error) return d;
        }
    }
    FAIL("no error reported");
    return {};
}

}  // namespace

TEST_CASE("apx with comments and free layout") {
    const ParseResult r = parse_apx("% header\narg(a).arg( b ).\n  att(a ,b). % trailing\natt(b,b).");
    CHECK(r.diagnostics.empty());
    CHECK(r.af == build_af({"a", "b"}, {{"a", "b"}, {"b", "b"}}));
}

TEST_CASE("data files parse to the worked examples") {
    CHECK(parse_apx(slurp("naive_f.apx")).af == fixtures::naive_f());
    CHECK(parse_apx(slurp("naive_g.apx")).af == fixtures::naive_g());
    CHECK(parse_apx(slurp("stagle.apx")).af == fixtures::stagle());
    CHECK(parse_apx(slurp("stagle_kernel.apx")).af == fixtures::stagle_kernel());
    CHECK(parse_apx(slurp("sad_example.apx")).af == fixtures::sad_example());
    CHECK(parse_tgf(slurp("stagle.tgf")).af == fixtures::stagle());
}

TEST_CASE("duplicates are warnings") {
    const ParseResult r = parse_apx("arg(a).\narg(a).\natt(a,a).\natt(a,a).\n");
    REQUIRE(r.diagnostics.size() == 2);
    CHECK(r.diagnostics[0].severity == Severity::warning);
    CHECK(r.diagnostics[0].line == 2);
    CHECK(r.diagnostics[1].line == 4);
    CHECK(r.af.num_attacks() == 1);
}

TEST_CASE("undeclared endpoints: tolerant adds with one warning, strict rejects") {
    const std::string text = "arg(a).\natt(a,z).\natt(z,a).\n";
    const ParseResult r = parse_apx(text);
    REQUIRE(r.diagnostics.size() == 1);
    CHECK(r.diagnostics[0].severity == Severity::warning);
    CHECK(r.diagnostics[0].line == 2);
    CHECK(r.diagnostics[0].column == 7);
    CHECK(r.af.size() == 2);
    const Diagnostic d = first_error_of(text, false, true);
    CHECK(d.line == 2);
    CHECK(d.column == 7);
}

TEST_CASE("declarations after use count as declared") {
    const ParseResult r = parse_apx("att(a,b).\narg(a).\narg(b).\n", true);
    CHECK(r.diagnostics.empty());
    CHECK(r.af.num_attacks() == 1);
}

TEST_CASE("syntax errors carry line and column") {
    const Diagnostic d = first_error_of("arg(a).\natt(a b).\n");
    CHECK(d.line == 2);
    CHECK(d.column == 7);
    CHECK(to_string(d).rfind("2:7: error: ", 0) == 0);
    CHECK(first_error_of("arg(a)\n").line == 2);
    CHECK(first_error_of("foo(a).").column == 1);
    CHECK(first_error_of("arg(a).\n\n   arg(-).").line == 3);
}

TEST_CASE("tgf parsing and errors") {
    const ParseResult r = parse_tgf("a\nb\n#\na b\nb b\n");
    CHECK(r.af == build_af({"a", "b"}, {{"a", "b"}, {"b", "b"}}));
    const Diagnostic unknown = first_error_of("a\n#\na c\n", true);
    CHECK(unknown.line == 3);
    CHECK(unknown.column == 3);
    const Diagnostic missing = first_error_of("a\nb\n", true);
    CHECK(missing.line == 3);
    CHECK(missing.column == 1);
}

TEST_CASE("apx and tgf round-trip every AF with up to four arguments") {
    for (std::size_t n = 0; n <= 4; ++n) {
        AfSpace(n).for_each([&](std::uint64_t mask, const AF& af) {
            INFO("n=", n, " mask=", mask);
            REQUIRE(parse_apx(write_apx(af), true).af == af);
            REQUIRE(parse_tgf(write_tgf(af)).af == af);
        });
    }
}

TEST_CASE("writers") {
    const AF af = build_af({"b", "a"}, {{"b", "a"}});
    CHECK(write_apx(af) == "arg(a).\narg(b).\natt(b,a).\n");
    CHECK(write_tgf(af) == "a\nb\n#\nb a\n");
    CHECK(write_dot(AF()) == "digraph af {}\n");
    CHECK(write_dot(af) == "digraph af {\n  \"a\";\n  \"b\";\n  \"b\" -> \"a\";\n}\n");
}

TEST_CASE("extension and class formatting") {
    const AF af = fixtures::naive_f();
    const ExtensionSet e = extensions(af, Semantics::na);
    CHECK(format_extensions(af, e) == "[a,c]\n[a,d]\n");
    CHECK(format_extensions(af, e, true) == "[[a,c],[a,d]]\n");
    CHECK(format_extensions(af, ExtensionSet{}, true) == "[]\n");
    CHECK(format_extensions(af, ExtensionSet{ArgSet{}}) == "[]\n");
    CHECK(format_set(af, fixtures::set_of(af, {"d", "a"})) == "[a,d]");
    const AF f1 = fixtures::f1();
    CHECK(format_class(f1, verification_class(f1, NeighborhoodFn(Node::p))) == "([], [])\n([a], [a])\n");
}
