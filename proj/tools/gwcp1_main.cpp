//
// gwcp1 -- exact Gromov-Witten invariants of the projective line.
//
// Subcommands: invariant, series, hodge, verify.  All values are exact
// rationals; JSON output is canonical and byte-stable across runs.
//
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>

#include "gwcp1/degree_zero.hpp"
#include "gwcp1/serialization.hpp"
#include "gwcp1/toda.hpp"
#include "gwcp1/verify.hpp"

namespace {

using namespace gwcp1;

constexpr int kOutputVersion = 1;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitUnstable = 2;
constexpr int kExitResource = 3;
constexpr int kExitVerifyFailed = 4;

struct CommonOptions {
    std::string format = "text";
    std::string cache_path; // from --cache, else GW_CP1_CACHE
    Limits limits;
};

std::optional<std::string> resolve_cache(const CommonOptions& opts) {
    if (!opts.cache_path.empty()) return opts.cache_path;
    if (const char* env = std::getenv("GW_CP1_CACHE"); env && *env) return std::string(env);
    return std::nullopt;
}

void load_cache_if_present(TodaEngine& engine, const std::optional<std::string>& path) {
    if (!path) return;
    if (!std::filesystem::exists(*path)) return;
    engine.cache_load(*path);
}

void store_cache(const TodaEngine& engine, const std::optional<std::string>& path) {
    if (path) engine.cache_store(*path);
}

nlohmann::json rational_json(const Rational& r) {
    return r.numerator() + "/" + r.denominator();
}

int run_invariant(const CommonOptions& opts, int genus, int degree, const std::vector<int>& q,
                  const std::vector<int>& p, bool explain) {
    TodaEngine engine(opts.limits);
    auto cache = resolve_cache(opts);
    load_cache_if_present(engine, cache);

    InvariantKey key{genus, degree, q, p};
    Rational value = engine.gw_invariant(key);
    store_cache(engine, cache);

    long dim_lhs = 0;
    for (int k : q) dim_lhs += k + 1;
    for (int l : p) dim_lhs += l;
    long dim_rhs = 2L * genus - 2 + 2L * degree + static_cast<long>(q.size()) +
                   static_cast<long>(p.size());

    if (opts.format == "json") {
        nlohmann::json out;
        out["kind"] = "invariant";
        out["version"] = kOutputVersion;
        out["provenance"] = degree == 0 ? "degree0-closed-form" : "toda-recursion";
        out["inputs"] = {{"genus", genus}, {"degree", degree}, {"q", q}, {"p", p}};
        out["value"] = rational_json(value);
        if (explain)
            out["explain"] = {{"dimension_lhs", dim_lhs},
                              {"dimension_rhs", dim_rhs},
                              {"dimension_ok", dim_lhs == dim_rhs}};
        std::cout << canonical_dump(out) << "\n";
    } else {
        std::cout << value << "\n";
        if (explain) {
            if (dim_lhs == dim_rhs)
                std::cout << "dimension constraint holds: " << dim_lhs << " = " << dim_rhs << "\n";
            else
                std::cout << "dimension mismatch: " << dim_lhs << " != " << dim_rhs
                          << " (invariant vanishes)\n";
        }
    }
    return kExitOk;
}

int run_series(const CommonOptions& opts, int degree, int q_vars, int p_vars, int eps_order,
               int var_order) {
    TodaEngine engine(opts.limits);
    auto cache = resolve_cache(opts);
    load_cache_if_present(engine, cache);

    auto ys = TodaEngine::canonical_y(q_vars);
    auto zs = TodaEngine::canonical_z(p_vars);
    std::vector<std::string> points = ys;
    points.insert(points.end(), zs.begin(), zs.end());
    Truncation trunc;
    trunc.eps_cap = eps_order;
    for (const auto& v : points) trunc.var_caps[v] = var_order;

    MultiSeries series = engine.multipoint(degree, ys, zs, trunc);
    PrincipalPart principal;
    if (degree == 0 && q_vars == 1 && p_vars <= 1)
        principal = mp_F0_QP(ys[0], zs, trunc).principal;
    store_cache(engine, cache);

    const std::string provenance = degree == 0 ? "degree0-closed-form" : "toda-recursion";
    if (opts.format == "csv") {
        std::ostringstream os;
        os << "part";
        for (const auto& v : series.variables()) os << "," << v;
        os << ",w_exp,num,den\n";
        for (const auto& [e, c] : series.terms()) {
            os << "regular";
            for (int exp : e) os << "," << exp;
            os << ",," << c.numerator() << "," << c.denominator() << "\n";
        }
        for (const auto& [e, c] : principal.terms) {
            os << "principal";
            for (std::size_t i = 0; i < series.variables().size(); ++i) os << ",";
            os << "," << e << "," << c.numerator() << "," << c.denominator() << "\n";
        }
        std::cout << os.str();
        return kExitOk;
    }
    if (opts.format == "json") {
        nlohmann::json out;
        out["kind"] = "series";
        out["version"] = kOutputVersion;
        out["provenance"] = provenance;
        out["inputs"] = {{"degree", degree},
                         {"q_vars", q_vars},
                         {"p_vars", p_vars},
                         {"eps_order", eps_order},
                         {"var_order", var_order}};
        out["variables"] = series.variables();
        nlohmann::json terms = nlohmann::json::array();
        for (const auto& [e, c] : series.terms())
            terms.push_back({{"exp", e}, {"num", c.numerator()}, {"den", c.denominator()}});
        out["terms"] = terms;
        if (!principal.empty()) {
            nlohmann::json pp = nlohmann::json::array();
            for (const auto& [e, c] : principal.terms)
                pp.push_back({{"exp", e}, {"num", c.numerator()}, {"den", c.denominator()}});
            out["principal"] = pp;
        }
        std::cout << canonical_dump(out) << "\n";
        return kExitOk;
    }
    for (const auto& [e, c] : principal.terms)
        std::cout << "principal w^" << e << ": " << c << "\n";
    for (const auto& [e, c] : series.terms())
        std::cout << monomial_to_string(series.variables(), e) << ": " << c << "\n";
    return kExitOk;
}

int run_hodge(const CommonOptions& opts, int genus, const std::string& lambda_class,
              const std::vector<int>& psi) {
    int codim;
    if (lambda_class == "lambda_g")
        codim = 0;
    else if (lambda_class == "lambda_g-1" || lambda_class == "lambda_{g-1}")
        codim = 1;
    else
        throw CLI::ValidationError("--class", "expected lambda_g or lambda_g-1");

    if (genus > 2 * opts.limits.max_genus)
        throw ResourceLimit("hodge: genus beyond configured limit");
    Rational value = hodge_integral({genus, codim, psi});

    if (opts.format == "json") {
        nlohmann::json out;
        out["kind"] = "hodge";
        out["version"] = kOutputVersion;
        out["provenance"] = "hodge-series";
        out["inputs"] = {{"genus", genus}, {"class", lambda_class}, {"psi", psi}};
        out["value"] = rational_json(value);
        std::cout << canonical_dump(out) << "\n";
    } else {
        std::cout << value << "\n";
    }
    return kExitOk;
}

int run_verify(const CommonOptions& opts, const std::string& suite, int max_n, int max_genus) {
    TodaEngine engine(opts.limits);
    std::vector<SuiteResult> results;
    auto append = [&](std::vector<SuiteResult> more) {
        results.insert(results.end(), std::make_move_iterator(more.begin()),
                       std::make_move_iterator(more.end()));
    };
    if (suite == "all" || suite == "hurwitz") append(run_hurwitz_suite(max_n, std::min(max_n + 1, 6)));
    if (suite == "all" || suite == "degree0") append(run_degree0_suite(max_n));
    if (suite == "all" || suite == "toda")
        append(run_toda_suite(engine, max_genus, std::min(3, opts.limits.max_degree),
                              std::min(3, opts.limits.max_insertions)));
    if (suite == "all" || suite == "hodge") append(run_hodge_suite(std::max(max_genus, 2)));
    if (results.empty()) throw CLI::ValidationError("--suite", "unknown suite '" + suite + "'");

    if (opts.format == "json") {
        nlohmann::json out;
        out["kind"] = "verify";
        out["version"] = kOutputVersion;
        out["provenance"] = "verification-suite";
        out["inputs"] = {{"suite", suite}, {"max_n", max_n}, {"max_genus", max_genus}};
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : results)
            arr.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
        out["results"] = arr;
        out["all_passed"] = all_passed(results);
        std::cout << canonical_dump(out) << "\n";
    } else {
        for (const auto& r : results) {
            std::ostringstream line;
            line << (r.passed ? "PASS" : "FAIL") << "  " << r.name;
            if (!r.passed) line << ": " << r.detail;
            line << "  (" << r.seconds << " s)";
            std::cout << line.str() << "\n";
        }
    }
    return all_passed(results) ? kExitOk : kExitVerifyFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Gromov-Witten invariants of the projective line"};
    app.require_subcommand(1);
    app.fallthrough();

    CommonOptions opts;
    app.add_option("--format", opts.format, "Output format")->capture_default_str();
    app.add_option("--cache", opts.cache_path,
                   "Series cache file (else the GW_CP1_CACHE environment variable)");
    app.add_option("--limit-degree", opts.limits.max_degree, "Resource limit on the degree")
        ->capture_default_str();
    app.add_option("--limit-genus", opts.limits.max_genus, "Resource limit on the genus")
        ->capture_default_str();
    app.add_option("--limit-insertions", opts.limits.max_insertions,
                   "Resource limit on the insertion count")
        ->capture_default_str();

    auto* inv = app.add_subcommand("invariant", "One descendent invariant");
    int genus = 0, degree = 0;
    std::vector<int> q, p;
    bool explain = false;
    inv->add_option("--genus", genus, "Genus g")->required();
    inv->add_option("--degree", degree, "Degree d")->required();
    inv->add_option("--q", q, "Point-class descendent indices")->delimiter(',');
    inv->add_option("--p", p, "Identity-class descendent indices")->delimiter(',');
    inv->add_flag("--explain", explain, "Print the dimension-constraint check");

    auto* ser = app.add_subcommand("series", "Multipoint series table");
    int s_degree = 0, s_q = 0, s_p = 0, s_eps = 4, s_var = 4;
    ser->add_option("--degree", s_degree, "Degree d")->required();
    ser->add_option("--q-vars", s_q, "Number of point-class insertions")->required();
    ser->add_option("--p-vars", s_p, "Number of identity-class insertions")->required();
    ser->add_option("--eps-order", s_eps, "Genus-variable truncation order")->required();
    ser->add_option("--var-order", s_var, "Per-variable truncation order")->required();

    auto* hod = app.add_subcommand("hodge", "Hodge integral");
    int h_genus = 1;
    std::string h_class = "lambda_g";
    std::vector<int> h_psi;
    hod->add_option("--genus", h_genus, "Genus g")->required();
    hod->add_option("--class", h_class, "lambda_g or lambda_g-1")->required();
    hod->add_option("--psi", h_psi, "psi exponents k_1,..,k_n")->delimiter(',');

    auto* ver = app.add_subcommand("verify", "Run the identity suites");
    std::string v_suite = "all";
    int v_max_n = 4, v_max_genus = 2;
    ver->add_option("--suite", v_suite, "all|hurwitz|degree0|toda|hodge")->capture_default_str();
    ver->add_option("--max-n", v_max_n, "Largest insertion count exercised")
        ->capture_default_str();
    ver->add_option("--max-genus", v_max_genus, "Largest genus exercised")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (inv->parsed()) return run_invariant(opts, genus, degree, q, p, explain);
        if (ser->parsed()) return run_series(opts, s_degree, s_q, s_p, s_eps, s_var);
        if (hod->parsed()) return run_hodge(opts, h_genus, h_class, h_psi);
        if (ver->parsed()) return run_verify(opts, v_suite, v_max_n, v_max_genus);
    } catch (const UnstableModuli& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUnstable;
    } catch (const ResourceLimit& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
