#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "argkit/af.hpp"
#include "argkit/errors.hpp"
#include "argkit/verification.hpp"

namespace argkit {

enum class Severity : std::uint8_t { warning, error };

struct Diagnostic {
    std::size_t line = 0;    // 1-based
    std::size_t column = 0;  // 1-based
    std::string message;
    Severity severity = Severity::warning;
};

/// "3:7: error: expected '('"
[[nodiscard]] std::string to_string(const Diagnostic& d);

struct ParseResult {
    AF af;
    std::vector<Diagnostic> diagnostics;
};

/// Carries every diagnostic collected before parsing stopped; what() is the
/// first error.
class ParseError : public InputError {
public:
    explicit ParseError(std::vector<Diagnostic> diagnostics);
    [[nodiscard]] const std::vector<Diagnostic>& diagnostics() const noexcept { return diagnostics_; }

private:
    std::vector<Diagnostic> diagnostics_;
};

/// `arg(x).` and `att(x,y).` statements; `%` starts a comment. An attack on
/// an undeclared argument adds it with a warning (an error with `strict`).
[[nodiscard]] ParseResult parse_apx(std::string_view text, bool strict = false);

/// Node ids, a line holding `#`, then `src dst` edges. Text after the first
/// token on a node line, or the second on an edge line, is a label and
/// ignored.
[[nodiscard]] ParseResult parse_tgf(std::string_view text);

/// Arguments by name, then attacks by (source, target) name.
[[nodiscard]] std::string write_apx(const AF& af);
[[nodiscard]] std::string write_tgf(const AF& af);
[[nodiscard]] std::string write_dot(const AF& af);

/// One "[a,c]" line per extension, or the single-line nested form
/// "[[a,c],[a,d]]" with `iccma`.
[[nodiscard]] std::string format_extensions(const AF& af, const ExtensionSet& ext, bool iccma = false);

/// "[a,c]"
[[nodiscard]] std::string format_set(const AF& af, const ArgSet& s);

/// One "([a], [a,b])" line per tuple; images follow the representative's
/// basics.
[[nodiscard]] std::string format_class(const AF& af, const VerificationClass& cls);

}  // namespace argkit
