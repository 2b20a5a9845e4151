#include "argkit/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include "argkit/enumerate.hpp"
#include "argkit/equivalence.hpp"
#include "argkit/io.hpp"
#include "argkit/kernels.hpp"
#include "argkit/verification.hpp"

namespace argkit {

namespace {

struct InputOptions {
    std::string format;
    bool strict = false;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool ends_with(std::string_view s, std::string_view suffix) {
    return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

AF load(const std::string& path, const InputOptions& opts, std::ostream& err) {
    const std::string text = read_file(path);
    const std::string format = !opts.format.empty() ? opts.format : (ends_with(path, ".tgf") ? "tgf" : "apx");
    ParseResult r = format == "tgf" ? parse_tgf(text) : parse_apx(text, opts.strict);
    for (const auto& d : r.diagnostics) err << path << ":" << to_string(d) << "\n";
    return std::move(r.af);
}

Semantics semantics_arg(const std::string& text) {
    auto s = parse_semantics(text);
    if (!s) throw CLI::ValidationError("--semantics", "unknown semantics '" + text + "'");
    return *s;
}

NeighborhoodFn neighborhood_arg(const std::string& text) {
    auto x = parse_neighborhood(text);
    if (!x) throw CLI::ValidationError("--fn", "unknown neighborhood function '" + text + "'");
    return *x;
}

void add_input_flags(CLI::App* cmd, InputOptions& opts) {
    cmd->add_option("--format", opts.format, "Input format (default: by extension, else apx)")
        ->check(CLI::IsMember({"apx", "tgf"}));
    cmd->add_flag("--strict", opts.strict, "Reject attacks on undeclared arguments");
}

const std::vector<NeighborhoodFn>& expected_minimal(Semantics kind) {
    static const std::array<std::vector<NeighborhoodFn>, kAllSemantics.size()> table = [] {
        std::array<std::vector<NeighborhoodFn>, kAllSemantics.size()> t;
        for (Semantics s : kCriterionSemantics) t[static_cast<std::size_t>(s)] = {*exact_class(s)};
        return t;
    }();
    return table[static_cast<std::size_t>(kind)];
}

std::string names_of(const std::vector<NeighborhoodFn>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i > 0) out += ' ';
        out += xs[i].name();
    }
    return out.empty() ? "(none)" : out;
}

/// Prints every bounded check and returns whether each matched what the
/// theory predicts.
bool run_mine(std::size_t n, unsigned threads, std::optional<std::size_t> fresh, std::ostream& out) {
    bool as_expected = true;
    SearchOptions search;
    search.bound = n;
    search.threads = threads;

    out << "% minimal verification classes, n=" << n << "\n";
    for (Semantics s : kAllSemantics) {
        if (s == Semantics::cf) continue;
        const ExactnessReport r = minimal_classes(s, n, search);
        out << to_string(s) << ": " << names_of(r.minimal);
        if (exact_class(s)) {
            const bool match = r.minimal == expected_minimal(s);
            as_expected = as_expected && match;
            out << (match ? "" : "  % differs from the exact class");
        } else {
            out << "  % no criterion";
        }
        out << "\n";
    }

    out << "% rationality, n=" << n << "\n";
    for (Semantics s : kAllSemantics) {
        const RationalityResult r = check_rational(s, n, n);
        as_expected = as_expected && r.rational;
        out << to_string(s) << ": " << (r.rational ? "rational" : "not rational") << " (" << r.checked
            << " AFs)\n";
        if (r.counterexample) out << "% counterexample\n" << write_apx(*r.counterexample);
    }

    out << "% intermediate theorems, n=" << n << "\n";
    for (Semantics s : kAllSemantics) {
        const auto inst = intermediate_instance(s);
        if (!inst) continue;
        const bool expect_hold = s != Semantics::sta && s != Semantics::co;
        const IntermediateReport r = check_intermediate_theorem(s, n, threads, fresh);
        as_expected = as_expected && r.holds() == expect_hold;
        out << to_string(s) << ": " << (r.holds() ? "holds" : "fails") << " (k_" << to_string(inst->kernel)
            << ", verifiable by " << inst->verifiable_by.name() << ": " << (r.verifiable ? "yes" : "no") << ", "
            << "between " << to_string(inst->lower) << " and " << to_string(inst->upper) << ": "
            << (r.bracketed ? "yes" : "no") << ", fresh=" << r.comparison.fresh
            << ", unsound pairs " << r.comparison.unsound << ", unseparated pairs " << r.comparison.incomplete
            << ")\n";
        if (r.comparison.first_violation) {
            out << "% first pair\n"
                << write_apx(r.comparison.first_violation->first) << "% and\n"
                << write_apx(r.comparison.first_violation->second);
            if (r.comparison.first_witness) out << "% witness\n" << write_apx(*r.comparison.first_witness);
        }
    }
    return as_expected;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Abstract argumentation: extensions, kernels, verification classes"};
    app.name("argkit");
    app.require_subcommand(1);

    unsigned threads = std::max(1U, std::thread::hardware_concurrency());
    app.add_option("--threads", threads, "Worker threads for exhaustive searches")->check(CLI::PositiveNumber);

    InputOptions input;
    std::string sem_text, fn_text, kernel_text, file;
    std::vector<std::string> files;
    std::size_t bound = 3;
    std::size_t fresh = 1;
    bool iccma = false;

    auto* solve = app.add_subcommand("solve", "Print the extensions of an AF");
    solve->add_option("-s,--semantics", sem_text, "Semantics")->required();
    solve->add_option("-f,--file", file, "Input file")->required();
    solve->add_flag("--iccma", iccma, "Single-line nested output");
    add_input_flags(solve, input);

    auto* kernel = app.add_subcommand("kernel", "Print the kernel of an AF as APX");
    kernel->add_option("-k,--kernel", kernel_text, "stb, ad, gr, co or na")->required();
    kernel->add_option("-f,--file", file, "Input file")->required();
    add_input_flags(kernel, input);

    auto* vclass = app.add_subcommand("vclass", "Print the verification class of an AF");
    vclass->add_option("-x,--fn", fn_text, "Neighborhood function, e.g. p,mp")->required();
    vclass->add_option("-f,--file", file, "Input file")->required();
    add_input_flags(vclass, input);

    auto* equiv = app.add_subcommand("equiv", "Decide expansion equivalence of two AFs");
    equiv->add_option("-s,--semantics", sem_text, "Semantics")->required();
    equiv->add_option("files", files, "Two input files")->required()->expected(2);
    equiv->add_option("--fresh", fresh, "Fresh arguments for the bounded search")->check(CLI::Range(0, 2));
    add_input_flags(equiv, input);

    auto* verify = app.add_subcommand("verify", "Search a verifiability counterexample");
    verify->add_option("-s,--semantics", sem_text, "Semantics")->required();
    verify->add_option("-x,--fn", fn_text, "Neighborhood function")->required();
    verify->add_option("-n,--bound", bound, "Number of arguments")->required();

    auto* exact = app.add_subcommand("exact", "Print the minimal verification classes");
    exact->add_option("-s,--semantics", sem_text, "Semantics")->required();
    exact->add_option("-n,--bound", bound, "Number of arguments")->required();

    auto* hierarchy = app.add_subcommand("hierarchy", "Print the informativeness lattice edges");

    auto* mine = app.add_subcommand("mine", "Run every bounded check");
    mine->add_option("-n,--bound", bound, "Number of arguments");
    std::optional<std::size_t> mine_fresh;
    mine->add_option("--fresh", mine_fresh, "Override the fresh budget of the theorem checks")
        ->check(CLI::Range(0, 2));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "argkit: " << e.what() << "\n" << app.help();
        return kExitUsage;
    }

    try {
        if (*solve) {
            const Semantics s = semantics_arg(sem_text);
            const AF af = load(file, input, err);
            out << format_extensions(af, extensions(af, s), iccma);
            return kExitOk;
        }
        if (*kernel) {
            auto k = parse_kernel(kernel_text);
            if (!k) throw CLI::ValidationError("--kernel", "unknown kernel '" + kernel_text + "'");
            out << write_apx(apply_kernel(load(file, input, err), *k));
            return kExitOk;
        }
        if (*vclass) {
            const NeighborhoodFn x = neighborhood_arg(fn_text);
            const AF af = load(file, input, err);
            out << "% " << x.name() << "\n" << format_class(af, verification_class(af, x));
            return kExitOk;
        }
        if (*equiv) {
            const Semantics s = semantics_arg(sem_text);
            const AF f = load(files[0], input, err);
            const AF g = load(files[1], input, err);
            OracleOptions oracle;
            oracle.fresh = fresh;
            EquivalenceVerdict v;
            if (has_kernel(s)) {
                v = expansion_equivalent(f, g, s);
                if (!v.equivalent) {
                    try {
                        v.witness = find_expansion_counterexample(f, g, s, oracle.fresh, oracle.bound);
                    } catch (const ResourceError&) {
                        // Too large for the bounded search; the kernel verdict stands.
                    }
                }
            } else {
                v = expansion_equivalent_oracle(f, g, s, oracle);
            }
            out << (v.equivalent ? "EQUIVALENT\n" : "NOT\n");
            if (!v.bound_note.empty() && v.equivalent) out << "% " << v.bound_note << "\n";
            if (v.witness) out << "% witness\n" << write_apx(*v.witness);
            return v.equivalent ? kExitOk : kExitFinding;
        }
        if (*verify) {
            const Semantics s = semantics_arg(sem_text);
            const NeighborhoodFn x = neighborhood_arg(fn_text);
            SearchOptions opts;
            opts.bound = std::max(bound, kDefaultExhaustiveBound);
            opts.threads = threads;
            const auto pair = find_verifiability_counterexample(s, x, bound, opts);
            if (!pair) {
                out << "no counterexample up to n=" << bound << "\n";
                return kExitOk;
            }
            out << "counterexample\n% F\n" << write_apx(pair->first) << "% G\n" << write_apx(pair->second);
            return kExitFinding;
        }
        if (*exact) {
            const Semantics s = semantics_arg(sem_text);
            SearchOptions opts;
            opts.bound = std::max(bound, kDefaultExhaustiveBound);
            opts.threads = threads;
            for (NeighborhoodFn x : minimal_classes(s, bound, opts).minimal) out << x.name() << "\n";
            return kExitOk;
        }
        if (*hierarchy) {
            for (const auto& [lo, hi] : lattice_edges()) {
                out << NeighborhoodFn(lo).name() << " -> " << NeighborhoodFn(hi).name() << "\n";
            }
            return kExitOk;
        }
        if (*mine) return run_mine(bound, threads, mine_fresh, out) ? kExitOk : kExitFinding;
    } catch (const CLI::ValidationError& e) {
        err << "argkit: " << e.what() << "\n" << app.help();
        return kExitUsage;
    } catch (const ParseError& e) {
        for (const auto& d : e.diagnostics()) err << to_string(d) << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "argkit: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ResourceError& e) {
        err << "argkit: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace argkit
