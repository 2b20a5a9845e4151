#include <algorithm>
#include <cctype>
#include <set>
#include <unordered_map>

#include "argkit/io.hpp"

namespace argkit {

std::string to_string(const Diagnostic& d) {
    return std::to_string(d.line) + ":" + std::to_string(d.column) + ": " +
           (d.severity == Severity::error ? "error" : "warning") + ": " + d.message;
}

namespace {

std::string first_error(const std::vector<Diagnostic>& ds) {
    for (const auto& d : ds) {
        if (d.severity == Severity::error) return to_string(d);
    }
    return ds.empty() ? "parse error" : to_string(ds.front());
}

bool is_name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'; }

struct Token {
    std::string_view text;
    std::size_t line;
    std::size_t column;
};

/// Splits APX text into names and single punctuation characters.
class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    /// Next token, or nullopt at end of input. Unexpected characters are
    /// returned as one-character tokens for the parser to reject.
    std::optional<Token> next() {
        skip();
        if (pos_ >= text_.size()) return std::nullopt;
        const Token start{text_.substr(pos_, 1), line_, col_};
        if (!is_name_char(text_[pos_])) {
            advance();
            return start;
        }
        const std::size_t begin = pos_;
        while (pos_ < text_.size() && is_name_char(text_[pos_])) advance();
        return Token{text_.substr(begin, pos_ - begin), start.line, start.column};
    }

    [[nodiscard]] std::size_t line() const noexcept { return line_; }
    [[nodiscard]] std::size_t column() const noexcept { return col_; }

private:
    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip() {
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (c == '%') {
                while (pos_ < text_.size() && text_[pos_] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c)) != 0) {
                advance();
            } else {
                break;
            }
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

}  // namespace

ParseError::ParseError(std::vector<Diagnostic> diagnostics)
    : InputError(first_error(diagnostics)), diagnostics_(std::move(diagnostics)) {}

ParseResult parse_apx(std::string_view text, bool strict) {
    Lexer lex(text);
    std::vector<Diagnostic> diags;
    std::vector<std::string> declared;
    std::set<std::string, std::less<>> declared_set;
    struct Use {
        std::string name;
        Token at;
    };
    std::vector<Use> endpoints;
    std::vector<NamedAttack> attacks;
    std::set<NamedAttack> seen_attacks;

    auto fail = [&](std::size_t line, std::size_t col, std::string msg) {
        diags.push_back({line, col, std::move(msg), Severity::error});
        throw ParseError(std::move(diags));
    };
    auto expect = [&](std::string_view what) -> Token {
        auto t = lex.next();
        if (!t) fail(lex.line(), lex.column(), "expected '" + std::string(what) + "' before end of input");
        if (t->text != what) {
            fail(t->line, t->column, "expected '" + std::string(what) + "', found '" + std::string(t->text) + "'");
        }
        return *t;
    };
    auto expect_name = [&]() -> Token {
        auto t = lex.next();
        if (!t) fail(lex.line(), lex.column(), "expected an argument name before end of input");
        if (!is_name_char(t->text.front())) {
            fail(t->line, t->column, "expected an argument name, found '" + std::string(t->text) + "'");
        }
        return *t;
    };

    while (auto head = lex.next()) {
        if (head->text == "arg") {
            expect("(");
            const Token name = expect_name();
            expect(")");
            expect(".");
            if (!declared_set.emplace(name.text).second) {
                diags.push_back({name.line, name.column, "duplicate argument '" + std::string(name.text) + "'",
                                 Severity::warning});
            } else {
                declared.emplace_back(name.text);
            }
        } else if (head->text == "att") {
            expect("(");
            const Token from = expect_name();
            expect(",");
            const Token to = expect_name();
            expect(")");
            expect(".");
            NamedAttack att{std::string(from.text), std::string(to.text)};
            if (!seen_attacks.insert(att).second) {
                diags.push_back({head->line, head->column,
                                 "duplicate attack (" + att.first + "," + att.second + ")", Severity::warning});
                continue;
            }
            endpoints.push_back({att.first, from});
            endpoints.push_back({att.second, to});
            attacks.push_back(std::move(att));
        } else {
            fail(head->line, head->column, "expected 'arg' or 'att', found '" + std::string(head->text) + "'");
        }
    }

    // Declarations may follow their first use, so endpoints are checked
    // against the whole file.
    std::set<std::string, std::less<>> reported;
    bool failed = false;
    for (const auto& use : endpoints) {
        if (declared_set.contains(use.name)) continue;
        const bool first = reported.insert(use.name).second;
        if (strict) {
            diags.push_back({use.at.line, use.at.column, "undeclared argument '" + use.name + "'", Severity::error});
            failed = true;
        } else if (first) {
            diags.push_back({use.at.line, use.at.column, "undeclared argument '" + use.name + "' added",
                             Severity::warning});
        }
    }
    if (failed) throw ParseError(std::move(diags));
    return {build_af(declared, attacks), std::move(diags)};
}

std::string write_apx(const AF& af) {
    std::vector<std::string> names = af.table().names();
    std::sort(names.begin(), names.end());
    std::string out;
    for (const auto& n : names) out += "arg(" + n + ").\n";
    for (const auto& [a, b] : af.named_attacks()) out += "att(" + a + "," + b + ").\n";
    return out;
}

}  // namespace argkit
