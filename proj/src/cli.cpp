#include "knotdist/cli.hpp"

#include <filesystem>
#include <future>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "knotdist/blanchfield.hpp"
#include "knotdist/io.hpp"
#include "knotdist/obstruct.hpp"
#include "knotdist/table.hpp"
#include "knotdist/verify.hpp"

namespace knotdist {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SideOptions {
    std::string delta, matrix, knot;
    std::optional<int> sigma, ua;
};

Integer parse_integer(const std::string& text, const std::string& what) {
    Integer v;
    const std::string body = !text.empty() && text[0] == '+' ? text.substr(1) : text;
    if (body.empty() || v.set_str(body, 10) != 0) throw UsageError(what + " must be an integer, got '" + text + "'");
    return v;
}

KnotInput knot_from_table(const KnotTable& table, const std::string& label) {
    const BundledEntry& e = table.find(label);
    KnotInput in = e.matrix ? KnotInput::from_matrix(label, *e.matrix) : KnotInput::from_polynomial(label, e.expected.alexander);
    in.signature = e.expected.signature;
    return in;
}

KnotInput resolve_side(const SideOptions& s, const KnotTable& table) {
    const int given = !s.delta.empty() + !s.matrix.empty() + !s.knot.empty();
    if (given != 1) throw UsageError("give exactly one of --deltaN, --matrixN, --knotN for each input");
    KnotInput in;
    if (!s.delta.empty()) {
        in = KnotInput::from_polynomial(s.delta, parse_laurent(s.delta));
    } else if (!s.matrix.empty()) {
        in = KnotInput::from_matrix(s.matrix, load_seifert(s.matrix));
    } else {
        if (!table.contains(s.knot)) throw UsageError("unknown knot label '" + s.knot + "'");
        in = knot_from_table(table, s.knot);
    }
    if (s.sigma) in.signature = *s.sigma;
    if (s.ua) in.ua = *s.ua;
    return in;
}

// Manifest sides: a readable file is a matrix, a table label is a knot, anything else a polynomial.
KnotInput resolve_token(const std::string& token, const KnotTable& table) {
    if (std::filesystem::is_regular_file(token)) return KnotInput::from_matrix(token, load_seifert(token));
    if (table.contains(token)) return knot_from_table(table, token);
    return KnotInput::from_polynomial(token, parse_laurent(token));
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

std::string render(const ObstructionReport& r, bool json) { return json ? serialize_json(r) + "\n" : serialize(r); }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Seifert-matrix invariants and Gordian distance obstructions", "knotdist"};
    app.set_help_flag("--help", "Print this help message and exit");
    app.require_subcommand(1);

    std::string matrix_file;
    auto* alex = app.add_subcommand("alex", "Normalized Alexander polynomial of a Seifert matrix");
    alex->add_option("--matrix", matrix_file, "Seifert matrix file")->required();

    auto* inv = app.add_subcommand("invariants", "Alexander polynomial, signature and determinant");
    inv->add_option("--matrix", matrix_file, "Seifert matrix file")->required();

    std::string inner_file;
    auto* bf = app.add_subcommand("blanchfield", "Gram matrix of the Blanchfield pairing on the standard generators");
    bf->add_option("--matrix", matrix_file, "Seifert matrix file")->required();
    bf->add_option("--inner", inner_file, "inner matrix; checks the first generator's self-pairing of an a+ border");

    std::string h_text, d_text, bound_text = "10000";
    auto* qf = app.add_subcommand("quadform", "Decide h^2 x^2 + (2h-1) xy + y^2 = +-d");
    qf->add_option("--h", h_text, "nonzero integer h")->required();
    qf->add_option("--d", d_text, "nonzero integer d")->required();
    qf->add_option("--bound", bound_text, "search bound for indefinite forms");

    SideOptions side[2];
    SearchBounds bounds;
    std::string manifest, catalog;
    bool json = false;
    int jobs = 4;
    auto* ob = app.add_subcommand("obstruct", "Obstruction report for a pair of knots");
    for (int i = 0; i < 2; ++i) {
        const std::string k = std::to_string(i + 1);
        ob->add_option("--delta" + k, side[i].delta, "Alexander polynomial of input " + k);
        ob->add_option("--matrix" + k, side[i].matrix, "Seifert matrix file of input " + k);
        ob->add_option("--knot" + k, side[i].knot, "table label of input " + k);
        ob->add_option("--sigma" + k, side[i].sigma, "signature of input " + k);
        ob->add_option("--ua" + k, side[i].ua, "algebraic unknotting number of input " + k)->check(CLI::NonNegativeNumber);
    }
    ob->add_option("--bound", bound_text, "search bound for indefinite quadratic forms");
    ob->add_option("--cc-breadth", bounds.cc_max_breadth, "c conj(c) search: maximal breadth of c")->check(CLI::NonNegativeNumber);
    ob->add_option("--cc-coeff", bounds.cc_max_coeff, "c conj(c) search: maximal |coefficient|")->check(CLI::PositiveNumber);
    ob->add_option("--manifest", manifest, "batch file, one 'A | B' pair per line");
    ob->add_option("--catalog", catalog, "CSV of extra table entries (label,polynomial,signature,determinant)");
    ob->add_option("--jobs", jobs, "pairs processed concurrently in batch mode")->check(CLI::PositiveNumber);
    ob->add_flag("--json", json, "JSON output");

    std::string suite;
    std::uint64_t seed = 0;
    std::size_t iters = 200;
    auto* ver = app.add_subcommand("verify", "Run a seeded property suite");
    ver->add_option("--suite", suite, "eq5, sequiv, sesquilinear, main-theorem, quadform-oracle, ring-axioms")->required();
    ver->add_option("--seed", seed, "64-bit seed");
    ver->add_option("--iters", iters, "number of random cases");

    std::string label, csv_file;
    auto* tab = app.add_subcommand("table", "Bundled example knots");
    tab->require_subcommand(1);
    auto* tab_list = tab->add_subcommand("list", "List labels");
    auto* tab_show = tab->add_subcommand("show", "Show one entry");
    tab_show->add_option("label", label, "knot label")->required();
    auto* tab_import = tab->add_subcommand("import", "Validate and list a CSV file");
    tab_import->add_option("file", csv_file, "CSV file")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*alex) {
            out << to_string(alexander(load_seifert(matrix_file))) << '\n';
            return kExitOk;
        }
        if (*inv) {
            const KnotInvariants k = invariants(load_seifert(matrix_file));
            out << "alexander: " << k.alexander << '\n'
                << "signature: " << k.signature << '\n'
                << "determinant: " << k.determinant << '\n';
            return kExitOk;
        }
        if (*bf) {
            const SeifertMatrix v = load_seifert(matrix_file);
            const BlanchfieldForm form(v);
            out << "denominator: " << form.denominator() << '\n';
            const auto g = form.gram();
            for (std::size_t i = 0; i < g.rows(); ++i)
                for (std::size_t j = 0; j < g.cols(); ++j)
                    out << "beta(e" << i + 1 << ", e" << j + 1 << "): " << to_string(g(i, j)) << '\n';
            if (!inner_file.empty()) {
                const SeifertMatrix inner = load_seifert(inner_file);
                const bool holds = main_theorem_check(v, inner);
                out << "self-pairing of e1: " << (holds ? "equals" : "differs from") << " eps * delta_inner / delta\n";
                return holds ? kExitOk : kExitSuiteFailure;
            }
            return kExitOk;
        }
        if (*qf) {
            const Integer h = parse_integer(h_text, "--h");
            const Integer d = parse_integer(d_text, "--d");
            const QuadFormVerdict v = quadform_represents(h, d, parse_integer(bound_text, "--bound"));
            switch (v.outcome) {
                case QuadOutcome::Witness:
                    out << "outcome: Witness\n" << "x: " << v.x << '\n' << "y: " << v.y << '\n'
                        << "sign: " << (v.sign > 0 ? "+1" : "-1") << '\n';
                    break;
                case QuadOutcome::Refuted:
                    out << "outcome: Refuted\n";
                    break;
                case QuadOutcome::Inconclusive:
                    out << "outcome: Inconclusive\n" << "bound: " << v.box_x << '\n';
                    break;
            }
            out << "certificate: " << v.certificate() << '\n';
            return kExitOk;
        }
        if (*ob) {
            bounds.quad_bound = parse_integer(bound_text, "--bound");
            KnotTable table = KnotTable::bundled();
            if (!catalog.empty()) table.import_csv(read_file(catalog));
            if (manifest.empty()) {
                const KnotInput a = resolve_side(side[0], table);
                const KnotInput b = resolve_side(side[1], table);
                const ObstructionReport r = build_report(a, b, bounds);
                out << render(r, json);
                return kExitOk;
            }
            for (const auto& s : side) {
                if (!s.delta.empty() || !s.matrix.empty() || !s.knot.empty()) {
                    throw UsageError("--manifest cannot be combined with per-input options");
                }
            }
            std::vector<std::pair<std::string, std::string>> pairs;
            std::istringstream lines(read_file(manifest));
            std::string line;
            std::size_t line_no = 0;
            while (std::getline(lines, line)) {
                ++line_no;
                line = trim(line);
                if (line.empty() || line[0] == '#') continue;
                const auto bar = line.find('|');
                if (bar == std::string::npos || line.find('|', bar + 1) != std::string::npos) {
                    throw Error(ErrorCode::Parse, manifest + ":" + std::to_string(line_no) + ": expected 'A | B'");
                }
                pairs.emplace_back(trim(line.substr(0, bar)), trim(line.substr(bar + 1)));
            }
            // Each pair runs as its own task; results are printed in input order.
            std::vector<std::string> rendered(pairs.size());
            int worst = kExitOk;
            for (std::size_t start = 0; start < pairs.size(); start += static_cast<std::size_t>(jobs)) {
                const std::size_t stop = std::min(pairs.size(), start + static_cast<std::size_t>(jobs));
                std::vector<std::future<std::string>> tasks;
                for (std::size_t i = start; i < stop; ++i) {
                    tasks.push_back(std::async(std::launch::async, [&, i] {
                        const KnotInput a = resolve_token(pairs[i].first, table);
                        const KnotInput b = resolve_token(pairs[i].second, table);
                        return render(build_report(a, b, bounds), json);
                    }));
                }
                for (std::size_t i = start; i < stop; ++i) {
                    try {
                        rendered[i] = tasks[i - start].get();
                    } catch (const Error& e) {
                        rendered[i] = "error: " + std::string(e.what()) + "\n";
                        worst = kExitInvalid;
                    }
                }
            }
            for (std::size_t i = 0; i < rendered.size(); ++i) {
                if (i > 0) out << "---\n";
                out << rendered[i];
            }
            return worst;
        }
        if (*ver) {
            const auto& names = suite_names();
            if (std::find(names.begin(), names.end(), suite) == names.end()) {
                throw UsageError("unknown suite '" + suite + "'");
            }
            const SuiteResult r = run_suite(suite, seed, iters);
            out << format(r);
            return r.ok() ? kExitOk : kExitSuiteFailure;
        }
        if (*tab) {
            KnotTable table = KnotTable::bundled();
            if (*tab_list) {
                for (const auto& e : table.entries()) out << e.label << '\n';
            } else if (*tab_show) {
                if (!table.contains(label)) throw UsageError("unknown knot label '" + label + "'");
                out << describe(table.find(label));
            } else if (*tab_import) {
                KnotTable imported;
                imported.import_csv(read_file(csv_file));
                for (const auto& e : imported.entries()) out << describe(e);
            }
            return kExitOk;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return e.code() == ErrorCode::UnknownLabel ? kExitUsage : kExitInvalid;
    }
    return kExitUsage;
}

}  // namespace knotdist
