#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "gammakit/algebra.hpp"
#include "gammakit/chromatic.hpp"
#include "gammakit/error.hpp"
#include "gammakit/identities.hpp"
#include "gammakit/positivity.hpp"
#include "gammakit/qcache.hpp"
#include "gammakit/tableaux.hpp"

namespace gammakit::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kDefaultTriangleMax = 14;
constexpr int kDefaultOracleSize = 10;
constexpr int kDefaultOracleVars = 6;

struct Parser {
    CLI::App app{"Exact power-sum computations for ribbon Schur Q-functions and chromatic symmetric functions",
                 "gammakit"};
    CommandConfig config;

    Parser() {
        config.threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
        app.require_subcommand(1);
        app.set_help_all_flag("--help-all", "Show help for every subcommand");

        auto* ribbon = app.add_subcommand("ribbon", "Ribbon Schur Q-functions")->require_subcommand(1);
        auto* expand = leaf(ribbon, "expand", "p- and q-expansions of a ribbon");
        expand->add_option("composition", config.target, "Row lengths, e.g. 1,2")->required();
        auto* check = leaf(ribbon, "check", "p-positivity of a ribbon");
        check->add_option("composition", config.target, "Row lengths, e.g. 1,1,2")->required();

        auto* triangle = app.add_subcommand("triangle", "Triangle ribbons")->require_subcommand(1);
        leaf(triangle, "classify", "Predicted against computed positivity for 1 <= k <= n <= max-n");

        auto* conjecture = app.add_subcommand("conjecture", "Exhaustive positivity sweeps")->require_subcommand(1);
        auto* verify = leaf(conjecture, "verify", "Positive ribbons of size n against the predicted set");
        verify->add_option("--n", config.n, "Ribbon size")->required()->check(CLI::PositiveNumber);
        leaf(conjecture, "disconnected", "Products of ribbons of total size <= max-n");

        auto* chromatic = leaf(&app, "chromatic", "Chromatic (X) or near chromatic (Y) symmetric function");
        chromatic->add_option("kind", config.kind, "X or Y")->required()->check(CLI::IsMember({"X", "Y"}));
        chromatic->add_option("graph", config.target, "star:5, triangle, null:4, union:a,b or n=4;edges=0-1,...")
            ->required();

        auto* basis = app.add_subcommand("basis", "Bases built from near chromatic functions")->require_subcommand(1);
        auto* basis_check = leaf(basis, "check", "Rank of the family in degree n");
        basis_check->add_option("--family", config.family, "b1 or b2")->check(CLI::IsMember({"b1", "b2"}));
        basis_check->add_option("--n", config.n, "Degree")->required()->check(CLI::PositiveNumber);

        auto* oracle = app.add_subcommand("oracle", "Tableau oracle")->require_subcommand(1);
        auto* compare = leaf(oracle, "compare", "Tableau count against the ribbon formula");
        compare->add_option("target", config.target, "Shape 4,3,2/3,2 (u: prefix for unshifted) or composition")
            ->required();
        compare->add_option("--vars", config.vars, "Also compare monomial expansions in this many variables")
            ->check(CLI::PositiveNumber);

        leaf(&app, "identities", "Identity sweeps");
    }

    CLI::App* leaf(CLI::App* parent, const std::string& name, const std::string& description) {
        auto* sub = parent->add_subcommand(name, description);
        sub->add_flag("--json", config.json, "JSON output");
        sub->add_option("--max-n", config.max_n, "Size bound or guard override")->check(CLI::PositiveNumber);
        sub->add_option("--threads", config.threads, "Worker threads")->check(CLI::PositiveNumber);
        sub->add_option("--cache", config.cache, "q-expansion cache file (GAMMAKIT_CACHE overrides)");
        sub->final_callback([this, sub] {
            std::string path;
            for (const CLI::App* a = sub; a->get_parent() != nullptr; a = a->get_parent())
                path = path.empty() ? a->get_name() : a->get_name() + " " + path;
            config.command = path;
        });
        return sub;
    }
};

Json terms_json(const PExpansion& f) {
    Json obj = Json::object();
    for (const auto& [lambda, c] : f.terms()) obj[to_text(lambda)] = to_string(c);
    return obj;
}

Json terms_json(const QPolynomial& f) {
    Json obj = Json::object();
    for (const auto& [lambda, c] : f.terms()) obj[to_text(lambda)] = c.get_str();
    return obj;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string bracket(const Ribbon& r) { return "(" + to_text(r) + ")"; }

int status(bool ok) { return ok ? kSuccess : kCheckFailed; }

int ribbon_expand(const CommandConfig& c, std::ostream& out) {
    const Ribbon r = parse_ribbon(c.target);
    check_guard("ribbon size", r.size(), c.max_n.value_or(Limits{}.positivity_size));
    const PExpansion p = ribbon_p_expansion(r);
    const QPolynomial q = ribbon_q_polynomial(r.rows());
    if (c.json) {
        Json doc;
        doc["ribbon"] = to_text(r);
        doc["size"] = r.size();
        doc["p_expansion"] = terms_json(p);
        doc["q_expansion"] = terms_json(q);
        out << doc.dump() << '\n';
    } else {
        out << "r" << bracket(r) << " = " << p.to_text() << '\n';
        out << "r" << bracket(r) << " = " << q.to_text() << '\n';
    }
    return kSuccess;
}

int ribbon_check(const CommandConfig& c, std::ostream& out) {
    const Ribbon r = parse_ribbon(c.target);
    Limits limits;
    if (c.max_n) limits.positivity_size = *c.max_n;
    const PositivityReport report = is_p_positive(r, limits);
    if (c.json) {
        Json doc;
        doc["ribbon"] = to_text(r);
        doc["verdict"] = to_string(report.verdict);
        doc["canonical_form"] = to_text(report.canonical_form);
        if (report.witness)
            doc["witness"] = {{"partition", to_text(report.witness->first)},
                              {"coefficient", to_string(report.witness->second)}};
        else
            doc["witness"] = nullptr;
        doc["p_expansion"] = terms_json(report.expansion);
        out << doc.dump() << '\n';
    } else {
        out << "r" << bracket(r) << ": " << to_string(report.verdict);
        if (report.witness)
            out << " (p[" << to_text(report.witness->first) << "] has coefficient "
                << to_string(report.witness->second) << ")";
        out << '\n' << "canonical form: " << bracket(report.canonical_form) << '\n';
    }
    return status(report.verdict == Verdict::Positive);
}

int triangle_classify(const CommandConfig& c, std::ostream& out) {
    const int max_n = c.max_n.value_or(kDefaultTriangleMax);
    const Limits limits;
    check_guard("triangle size", max_n, limits.triangle_size);
    bool all = true;
    Json rows = Json::array();
    std::ostringstream text;
    for (int n = 1; n <= max_n; ++n)
        for (int k = 1; k <= n; ++k) {
            const TriangleClassification t = classify_triangle(n, k, limits);
            all = all && t.agrees();
            if (c.json) {
                rows.push_back({{"n", n}, {"k", k}, {"predicted", t.predicted}, {"computed", t.computed},
                                {"agrees", t.agrees()}});
            } else {
                text << "n=" << n << " k=" << k << " predicted=" << (t.predicted ? "positive" : "negative")
                     << " computed=" << (t.computed ? "positive" : "negative") << (t.agrees() ? "" : "  MISMATCH")
                     << '\n';
            }
        }
    if (c.json) {
        Json doc;
        doc["max_n"] = max_n;
        doc["all_agree"] = all;
        doc["rows"] = std::move(rows);
        out << doc.dump() << '\n';
    } else {
        out << text.str() << "all agree: " << yes_no(all) << '\n';
    }
    return status(all);
}

void ribbon_lines(std::ostream& out, const char* title, const auto& ribbons) {
    out << title << " (" << ribbons.size() << "):\n";
    for (const Ribbon& r : ribbons) out << "  " << bracket(r) << '\n';
}

int conjecture_verify(const CommandConfig& c, std::ostream& out) {
    Limits limits;
    if (c.max_n) limits.conjecture_size = limits.constructible_size = *c.max_n;
    const ConjectureReport report = verify_conjecture(*c.n, c.threads, limits);
    if (c.json) {
        out << to_json(report, true) << '\n';
    } else {
        out << "n=" << report.n << ": " << (report.match ? "match" : "mismatch") << '\n';
        out << "compositions checked: " << report.compositions_checked << '\n';
        ribbon_lines(out, "p-positive", report.p_positive);
        if (!report.missing.empty()) ribbon_lines(out, "predicted but not positive", report.missing);
        if (!report.extra.empty()) ribbon_lines(out, "positive but not predicted", report.extra);
    }
    return status(report.match);
}

int conjecture_disconnected(const CommandConfig& c, std::ostream& out) {
    const int max_n = c.max_n.value_or(Limits{}.disconnected_size);
    const DisconnectedReport report = verify_disconnected_conjecture(max_n);
    auto product_text = [](const DisconnectedCase& d) {
        std::string s;
        for (const Ribbon& r : d.factors) s += (s.empty() ? "" : " * ") + bracket(r);
        return s;
    };
    if (c.json) {
        Json doc;
        doc["max_n"] = report.max_n;
        doc["holds"] = report.holds();
        doc["multisets_checked"] = report.multisets_checked;
        doc["positive_products"] = report.positive_products;
        Json cases = Json::array();
        for (const DisconnectedCase& d : report.counterexamples) {
            Json factors = Json::array();
            for (const Ribbon& r : d.factors) factors.push_back(to_text(r));
            cases.push_back({{"factors", factors},
                             {"product_positive", d.product_positive},
                             {"factors_positive", d.factors_positive}});
        }
        doc["counterexamples"] = std::move(cases);
        out << doc.dump() << '\n';
    } else {
        out << "total size <= " << report.max_n << ": " << report.multisets_checked << " products, "
            << report.positive_products << " positive\n";
        out << "counterexamples: " << report.counterexamples.size() << '\n';
        for (const DisconnectedCase& d : report.counterexamples)
            out << "  " << product_text(d) << ": product " << (d.product_positive ? "positive" : "not positive")
                << ", factors " << (d.factors_positive ? "all positive" : "not all positive") << '\n';
    }
    return status(report.holds());
}

int chromatic(const CommandConfig& c, std::ostream& out) {
    const SimpleGraph g = parse_graph(c.target);
    const int max_edges = c.max_n.value_or(kDefaultMaxEdges);
    const PExpansion f = c.kind == "X" ? chromatic_sym(g, max_edges) : near_chromatic(g, max_edges);
    if (c.json) {
        Json doc;
        doc["graph"] = to_text(g);
        doc["function"] = c.kind;
        doc["p_expansion"] = terms_json(f);
        doc["in_gamma"] = is_in_gamma(f);
        out << doc.dump() << '\n';
    } else {
        out << c.kind << "(" << to_text(g) << ") = " << f.to_text() << '\n';
        out << "in Gamma: " << yes_no(is_in_gamma(f)) << '\n';
    }
    return kSuccess;
}

int basis_check(const CommandConfig& c, std::ostream& out) {
    const BasisFamily family = c.family == "b2" ? BasisFamily::B2 : BasisFamily::B1;
    const BasisCheck check = y_basis_check(family, *c.n, c.max_n.value_or(14));
    if (c.json) {
        Json doc;
        doc["family"] = c.family;
        doc["n"] = check.n;
        doc["rank"] = check.rank;
        doc["dimension"] = check.dimension;
        doc["is_basis"] = check.is_basis;
        out << doc.dump() << '\n';
    } else {
        out << c.family << ", n=" << check.n << ": rank " << check.rank << " of " << check.dimension << ", "
            << (check.is_basis ? "basis" : "not a basis") << '\n';
    }
    return status(check.is_basis);
}

int oracle_compare(const CommandConfig& c, std::ostream& out) {
    const bool is_shape = c.target.find('/') != std::string::npos || c.target.rfind("u:", 0) == 0;
    std::optional<SkewShape> shape;
    if (is_shape)
        shape = parse_shape(c.target);
    else
        shape = SkewShape::from_ribbon(parse_ribbon(c.target));
    check_guard("shape size for tableau enumeration", shape->size(), c.max_n.value_or(kDefaultOracleSize));

    const ShapeAnalysis analysis = analyze(*shape);
    if (!shape->shifted()) {
        if (!analysis.ribbon) throw ParseError("oracle compare: unshifted shapes must be ribbons");
        shape = SkewShape::from_ribbon(*analysis.ribbon);
    }

    const PExpansion tableau = skew_Q(*shape);
    bool ok = true;
    Json doc;
    doc["shape"] = to_text(*shape);
    doc["tableau_expansion"] = terms_json(tableau);
    std::ostringstream text;
    text << "shape " << to_text(*shape) << '\n';
    text << "tableaux: " << tableau.to_text() << '\n';

    PExpansion reference = tableau;
    if (analysis.ribbon) {
        reference = ribbon_p_expansion(*analysis.ribbon);
        const bool agree = reference == tableau;
        ok = ok && agree;
        doc["ribbon"] = to_text(*analysis.ribbon);
        doc["ribbon_expansion"] = terms_json(reference);
        doc["agree"] = agree;
        text << "ribbon " << bracket(*analysis.ribbon) << ": " << reference.to_text() << '\n';
        text << "agree: " << yes_no(agree) << '\n';
    } else {
        const Rational sum = tableau.coefficient_sum();
        const bool positive = tableau.is_p_positive();
        doc["ribbon"] = nullptr;
        doc["coefficient_sum"] = to_string(sum);
        doc["p_positive"] = positive;
        text << "not a ribbon; coefficient sum " << to_string(sum) << ", "
             << (positive ? "p-positive" : "not p-positive") << '\n';
        if (analysis.witness) ok = ok && sum == 0 && !positive;
    }

    if (c.vars) {
        check_guard("variables for monomial comparison", *c.vars, kDefaultOracleVars);
        const bool agree = q_function_monomial(*shape, *c.vars) == specialize(reference, *c.vars);
        ok = ok && agree;
        doc["vars"] = *c.vars;
        doc["monomial_agree"] = agree;
        text << "monomials in " << *c.vars << " variables agree: " << yes_no(agree) << '\n';
    }

    if (c.json)
        out << doc.dump() << '\n';
    else
        out << text.str();
    return status(ok);
}

int identities(const CommandConfig& c, std::ostream& out) {
    const IdentityBounds bounds = c.max_n ? IdentityBounds::capped(*c.max_n) : IdentityBounds{};
    const auto results = run_identity_suite(bounds);
    bool all = true;
    Json rows = Json::array();
    for (const IdentityResult& r : results) {
        all = all && r.passed;
        if (c.json) {
            rows.push_back({{"name", r.name}, {"passed", r.passed}, {"checked", r.checked}, {"detail", r.detail}});
        } else {
            out << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.checked << " checked)";
            if (!r.detail.empty()) out << ": " << r.detail;
            out << '\n';
        }
    }
    if (c.json) {
        Json doc;
        doc["all_passed"] = all;
        doc["results"] = std::move(rows);
        out << doc.dump() << '\n';
    }
    return status(all);
}

std::string cache_path(const CommandConfig& c) {
    if (const char* env = std::getenv("GAMMAKIT_CACHE"); env != nullptr && *env != '\0') return env;
    return c.cache;
}

}  // namespace

std::optional<CommandConfig> parse_command(const std::vector<std::string>& args, std::string* help) {
    Parser parser;
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        parser.app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        if (help) *help = parser.app.help();
        return std::nullopt;
    } catch (const CLI::CallForAllHelp&) {
        if (help) *help = parser.app.help("", CLI::AppFormatMode::All);
        return std::nullopt;
    } catch (const CLI::ParseError& e) {
        throw ParseError(e.what());
    }
    return parser.config;
}

std::string usage() {
    Parser parser;
    return parser.app.help("", CLI::AppFormatMode::All);
}

int execute(const CommandConfig& c, std::ostream& out, std::ostream& err) {
    static const std::map<std::string, std::function<int(const CommandConfig&, std::ostream&)>> handlers{
        {"ribbon expand", ribbon_expand},
        {"ribbon check", ribbon_check},
        {"triangle classify", triangle_classify},
        {"conjecture verify", conjecture_verify},
        {"conjecture disconnected", conjecture_disconnected},
        {"chromatic", chromatic},
        {"basis check", basis_check},
        {"oracle compare", oracle_compare},
        {"identities", identities},
    };
    const auto handler = handlers.find(c.command);
    if (handler == handlers.end()) {
        err << "error: unknown command '" << c.command << "'\n" << usage();
        return kUsageError;
    }
    try {
        const std::string cache = cache_path(c);
        if (!cache.empty() && std::filesystem::exists(cache)) QMemo::instance().load(cache);
        const int code = handler->second(c, out);
        if (!cache.empty()) QMemo::instance().save(cache, std::max(QMemo::instance().max_cached_degree(), 0));
        return code;
    } catch (const GuardError& e) {
        err << "error: " << e.what() << " (raise with --max-n)\n";
        return kGuardViolation;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n' << usage();
        return kUsageError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::optional<CommandConfig> config;
    std::string help;
    try {
        config = parse_command(args, &help);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n' << usage();
        return kUsageError;
    }
    if (!config) {
        out << help;
        return kSuccess;
    }
    return execute(*config, out, err);
}

}  // namespace gammakit::cli
