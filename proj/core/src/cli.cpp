#include "hyperexp/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "hyperexp/binomial_sum.hpp"
#include "hyperexp/epsode.hpp"
#include "hyperexp/error.hpp"
#include "hyperexp/hyperlog.hpp"
#include "hyperexp/hyperlog_symbolic.hpp"
#include "hyperexp/oracle.hpp"
#include "hyperexp/parammap.hpp"
#include "hyperexp/reduction.hpp"
#include "hyperexp/series_table.hpp"
#include "hyperexp/verify.hpp"

namespace hyperexp {

namespace {

struct Cursor {
    const std::string& s;
    std::size_t pos = 0;
    bool done() const { return pos >= s.size(); }
    char peek() const { return s[pos]; }
};

[[noreturn]] void parse_fail(const Cursor& c, const std::string& what) {
    throw_parse("'" + c.s + "': " + what + " at column " + std::to_string(c.pos + 1));
}

Rational parse_rat(Cursor& c) {
    bool neg = false;
    if (!c.done() && c.peek() == '-') {
        neg = true;
        ++c.pos;
    }
    auto digits = [&c]() {
        std::string d;
        while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) d += c.s[c.pos++];
        return d;
    };
    std::string num = digits();
    if (num.empty()) parse_fail(c, "expected digits");
    std::string den = "1";
    if (!c.done() && c.peek() == '/') {
        ++c.pos;
        den = digits();
        if (den.empty()) parse_fail(c, "expected denominator digits");
    }
    Rational q(mpz_class(num, 10), mpz_class(den, 10));
    if (q.get_den() == 0) parse_fail(c, "zero denominator");
    q.canonicalize();
    return neg ? Rational(-q) : q;
}

std::string trimmed(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else cur += ch;
    }
    out.push_back(cur);
    return out;
}

}  // namespace

EpsParam parse_param(const std::string& raw) {
    const std::string text = trimmed(raw);
    Cursor c{text};
    if (c.done()) parse_fail(c, "empty parameter");
    EpsParam p;
    p.fixed = parse_rat(c);
    if (c.done()) return p;
    int sign;
    if (c.peek() == '+') sign = 1;
    else if (c.peek() == '-') sign = -1;
    else parse_fail(c, "expected '+', '-' or end");
    ++c.pos;
    p.slope = parse_rat(c) * Rational(sign);
    if (c.done() || c.peek() != 'e') parse_fail(c, "expected 'e'");
    ++c.pos;
    if (!c.done()) parse_fail(c, "trailing characters");
    return p;
}

std::vector<EpsParam> parse_param_list(const std::string& text) {
    std::vector<EpsParam> out;
    if (trimmed(text).empty()) return out;
    for (const auto& piece : split(text, ',')) out.push_back(parse_param(piece));
    return out;
}

std::vector<double> parse_real_list(const std::string& text) {
    std::vector<double> out;
    if (trimmed(text).empty()) return out;
    for (const auto& raw : split(text, ',')) {
        const std::string piece = trimmed(raw);
        try {
            out.push_back(to_double(parse_rational(piece)));
            continue;
        } catch (const Error&) {
        }
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(piece, &used);
        } catch (const std::exception&) {
            throw_parse("malformed number '" + piece + "'");
        }
        if (used != piece.size()) throw_parse("malformed number '" + piece + "'");
        out.push_back(v);
    }
    return out;
}

namespace cli {

namespace {

using nlohmann::json;

template <class F>
void parallel_for(std::size_t n, int jobs, F&& body) {
    if (jobs <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto worker = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            try {
                body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    int count = std::min<int>(jobs, static_cast<int>(n));
    for (int i = 0; i < count; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

EpsSeriesTable oracle_table(const HyperSpec& spec, int N, const std::vector<double>& zs,
                            double tail_tol, int jobs) {
    EpsSeriesTable t;
    t.spec = spec;
    t.orders = N;
    t.provenance = "oracle";
    std::vector<std::vector<double>> rows(zs.size());
    OracleOptions opt;
    opt.tail_tol = tail_tol;
    parallel_for(zs.size(), jobs, [&](std::size_t i) { rows[i] = hyper_eps_coeffs(spec, zs[i], N, opt); });
    for (std::size_t i = 0; i < zs.size(); ++i)
        for (int m = 0; m <= N; ++m) t.set(m, zs[i], rows[i][static_cast<std::size_t>(m)]);
    t.validate();
    return t;
}

EpsSeriesTable hyperlog_table(const BaseSpec& base, int N, const std::vector<double>& zs,
                              double tol) {
    ParamMap map = one_forms(classify(base.A, base.B));
    auto exprs = symbolic_expand(base, N, map);
    EpsSeriesTable t;
    t.spec = base.to_hyper_spec();
    t.orders = N;
    t.provenance = "hyperlog";
    WordEvaluator evaluator(tol);
    // largest argument first so the shared word panels are built once
    std::vector<double> sorted = zs;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    for (double z : sorted) {
        t.set(0, z, 1.0);
        for (int m = 1; m <= N; ++m)
            t.set(m, z, eval_expr(exprs[static_cast<std::size_t>(m)], z, map, tol, evaluator));
    }
    t.validate();
    return t;
}

void print_table_text(std::ostream& out, const EpsSeriesTable& t) {
    out << "[" << t.provenance << "] " << t.spec.to_string() << "\n";
    out << std::setw(4) << "m" << std::setw(10) << "z" << std::setw(26) << "w\n";
    for (const auto& [m, row] : t.entries)
        for (const auto& [z, w] : row)
            out << std::setw(4) << m << std::setw(10) << std::setprecision(6) << z << std::setw(26)
                << std::setprecision(17) << w << "\n";
    for (const auto& [k, v] : t.diagnostics) out << "# " << k << ": " << v << "\n";
}

void print_table_csv(std::ostream& out, const EpsSeriesTable& t, bool header) {
    if (header) out << "provenance,m,z,w\n";
    out << std::setprecision(17);
    for (const auto& [m, row] : t.entries)
        for (const auto& [z, w] : row)
            out << t.provenance << "," << m << "," << z << "," << w << "\n";
}

int expand_cmd(CLI::App& app, std::ostream& out, std::ostream& err) {
    auto upper = app.get_option("--upper")->as<std::string>();
    auto lower = app.get_option("--lower")->as<std::string>();
    int N = app.get_option("--order")->as<int>();
    auto zs = parse_real_list(app.get_option("--z")->as<std::string>());
    double tol = app.get_option("--tol")->as<double>();
    double quad_tol = app.get_option("--quad-tol")->as<double>();
    std::string method = app.get_option("--method")->as<std::string>();
    std::string format = app.get_option("--format")->as<std::string>();
    int jobs = app.get_option("--jobs")->as<int>();

    HyperSpec spec;
    spec.upper = parse_param_list(upper);
    spec.lower = parse_param_list(lower);
    spec.validate();
    if (zs.empty()) throw_domain("no z points given");

    QuadConfig quad;
    quad.tol = quad_tol;

    std::vector<EpsSeriesTable> tables;
    std::string hyperlog_note;
    auto need = [&method](const char* m) { return method == m || method == "all"; };

    if (need("oracle")) tables.push_back(oracle_table(spec, N, zs, std::min(tol * 1e-3, 1e-12), jobs));
    std::optional<BaseSpec> base = to_base_spec(spec);
    if (need("ode")) {
        if (!base)
            throw_domain("spec is not in engine base form (integer offsets in the fixed parts); "
                         "apply `reduce` to a base spec first");
        tables.push_back(expand(*base, N, zs, quad));
    }
    if (need("hyperlog")) {
        if (!base && method == "hyperlog")
            throw_domain("spec is not in engine base form; apply `reduce` first");
        if (base) {
            try {
                tables.push_back(hyperlog_table(*base, N, zs, std::min(tol * 1e-3, 1e-11)));
            } catch (const Error& e) {
                if (method == "hyperlog") throw;
                hyperlog_note = e.what();  // method=all degrades to the two numeric routes
            }
        }
    }
    if (tables.empty()) throw_domain("unknown method '" + method + "'");

    // pairwise cross-check over shared entries
    json cross = json::object();
    double worst = 0.0;
    for (std::size_t i = 0; i < tables.size(); ++i)
        for (std::size_t j = i + 1; j < tables.size(); ++j) {
            double dev = 0.0;
            for (int m = 0; m <= N; ++m)
                for (double z : zs)
                    dev = std::max(dev, std::abs(tables[i].get(m, z) - tables[j].get(m, z)));
            cross[tables[i].provenance + "-" + tables[j].provenance] = dev;
            worst = std::max(worst, dev);
        }

    if (format == "json") {
        if (tables.size() == 1 && method != "all") {
            out << table_to_json(tables[0]) << "\n";
        } else {
            json doc;
            doc["tables"] = json::array();
            for (const auto& t : tables) doc["tables"].push_back(json::parse(table_to_json(t)));
            doc["crosscheck"] = cross;
            doc["tolerance"] = tol;
            if (!hyperlog_note.empty()) doc["hyperlog_skipped"] = hyperlog_note;
            out << doc.dump(2) << "\n";
        }
    } else if (format == "csv") {
        for (std::size_t i = 0; i < tables.size(); ++i) print_table_csv(out, tables[i], i == 0);
        for (const auto& [k, v] : cross.items()) out << "# " << k << ": " << v.get<double>() << "\n";
    } else {
        for (const auto& t : tables) print_table_text(out, t);
        for (const auto& [k, v] : cross.items())
            out << "crosscheck " << k << ": max deviation " << v.get<double>() << "\n";
        if (!hyperlog_note.empty()) out << "hyperlog route skipped: " << hyperlog_note << "\n";
    }

    if (tables.size() > 1 && worst > tol) {
        err << "cross-check deviation " << worst << " exceeds tolerance " << tol << "\n";
        return 4;
    }
    return 0;
}

int oracle_cmd(CLI::App& app, std::ostream& out, std::ostream& /*err*/) {
    HyperSpec spec;
    spec.upper = parse_param_list(app.get_option("--upper")->as<std::string>());
    spec.lower = parse_param_list(app.get_option("--lower")->as<std::string>());
    spec.validate();
    int N = app.get_option("--order")->as<int>();
    int k = app.get_option("--theta")->as<int>();
    auto zs = parse_real_list(app.get_option("--z")->as<std::string>());
    double tol = app.get_option("--tol")->as<double>();
    std::string format = app.get_option("--format")->as<std::string>();
    int jobs = app.get_option("--jobs")->as<int>();

    EpsSeriesTable t;
    t.spec = spec;
    t.orders = N;
    t.provenance = "oracle";
    t.diagnostics["theta"] = std::to_string(k);
    OracleOptions opt;
    opt.tail_tol = tol;
    std::vector<std::vector<double>> rows(zs.size());
    parallel_for(zs.size(), jobs,
                 [&](std::size_t i) { rows[i] = theta_hyper_eps_coeffs(spec, k, zs[i], N, opt); });
    for (std::size_t i = 0; i < zs.size(); ++i)
        for (int m = 0; m <= N; ++m) t.set(m, zs[i], rows[i][static_cast<std::size_t>(m)]);
    t.validate();

    if (format == "json") out << table_to_json(t) << "\n";
    else if (format == "csv") print_table_csv(out, t, true);
    else print_table_text(out, t);
    return 0;
}

HyperSpec parse_spec_arg(const std::string& text) {
    auto parts = split(text, ';');
    if (parts.size() != 2)
        throw_parse("spec '" + text + "' must be 'upperlist;lowerlist'");
    HyperSpec s;
    s.upper = parse_param_list(parts[0]);
    s.lower = parse_param_list(parts[1]);
    s.validate();
    return s;
}

int reduce_cmd(CLI::App& app, std::ostream& out, std::ostream& err) {
    HyperSpec target = parse_spec_arg(app.get_option("--target")->as<std::string>());
    HyperSpec base = parse_spec_arg(app.get_option("--base")->as<std::string>());
    Rational eps = parse_rational(app.get_option("--eps")->as<std::string>());
    auto zs = parse_real_list(app.get_option("--check")->as<std::string>());
    int N = app.get_option("--order")->as<int>();
    double tol = app.get_option("--tol")->as<double>();
    std::string format = app.get_option("--format")->as<std::string>();

    ThetaRep rep = reduce(target, base, eps);
    double worst = 0.0;
    std::vector<std::pair<double, double>> residuals;
    for (double z : zs) {
        double r = verify_rep(rep, target, z, eps, N);
        residuals.emplace_back(z, r);
        worst = std::max(worst, r);
    }

    if (format == "json") {
        json doc;
        doc["base"] = rep.base.to_string();
        doc["target"] = rep.target.to_string();
        doc["eps"] = to_string(eps);
        doc["normalizer"] = rep.normalizer.to_string();
        doc["coeffs"] = json::array();
        for (const auto& c : rep.coeffs) doc["coeffs"].push_back(c.to_string());
        doc["residuals"] = json::object();
        for (auto& [z, r] : residuals) doc["residuals"][std::to_string(z)] = r;
        out << doc.dump(2) << "\n";
    } else {
        out << "base:   " << rep.base.to_string() << "\n";
        out << "target: " << rep.target.to_string() << "  at eps = " << to_string(eps) << "\n";
        out << rep.to_string();
        out << std::setprecision(3);
        for (auto& [z, r] : residuals) out << "residual at z=" << z << ": " << r << "\n";
    }
    if (!zs.empty() && worst > tol) {
        err << "representation residual " << worst << " exceeds tolerance " << tol << "\n";
        return 4;
    }
    return 0;
}

int sum_cmd(CLI::App& app, std::ostream& out, std::ostream& err) {
    BinomialSumSpec spec;
    spec.k = app.get_option("--k")->as<int>();
    for (double a : parse_real_list(app.get_option("--a")->as<std::string>()))
        spec.a_list.push_back(static_cast<int>(a));
    for (double b : parse_real_list(app.get_option("--b")->as<std::string>()))
        spec.b_list.push_back(static_cast<int>(b));
    spec.c = app.get_option("--c")->as<int>();
    auto zlist = parse_real_list(app.get_option("--z")->as<std::string>());
    if (zlist.size() != 1) throw_domain("sum expects exactly one z");
    spec.z = zlist[0];
    double tol = app.get_option("--tol")->as<double>();
    bool catalog = app.get_option("--catalog")->as<bool>();
    std::string format = app.get_option("--format")->as<std::string>();

    BinomialSumResult res = binomial_sum_detailed(spec, tol);
    std::optional<CatalogRep> rep;
    if (catalog) rep = catalog_hyper_rep(spec, tol);

    if (format == "json") {
        json doc;
        doc["spec"] = spec.to_string();
        doc["value"] = res.value;
        doc["terms"] = res.terms;
        doc["tail_bound"] = res.tail_bound;
        doc["boundary"] = res.boundary;
        if (rep) {
            doc["catalog"] = {{"representation", rep->description},
                              {"value", rep->value},
                              {"residual", rep->residual}};
        }
        out << doc.dump(2) << "\n";
    } else {
        out << spec.to_string() << "\n";
        out << std::setprecision(17) << "value: " << res.value << "\n";
        out << "terms: " << res.terms << ", tail bound: " << std::setprecision(3) << res.tail_bound
            << (res.boundary ? " (boundary: power-law tail estimate)" : "") << "\n";
        if (rep) {
            out << "catalog representation: " << rep->description << "\n";
            out << std::setprecision(17) << "catalog value: " << rep->value << "\n";
            out << std::setprecision(3) << "residual: " << rep->residual << "\n";
        }
    }
    if (rep && rep->residual > std::max(tol, 1e-10)) {
        err << "catalog residual " << rep->residual << " exceeds tolerance\n";
        return 4;
    }
    return 0;
}

int classify_cmd(CLI::App& app, std::ostream& out, std::ostream& /*err*/) {
    Rational A = parse_rational(app.get_option("--A")->as<std::string>());
    Rational B = parse_rational(app.get_option("--B")->as<std::string>());
    std::string format = app.get_option("--format")->as<std::string>();

    ParamMap map = classify(A, B);
    bool supported = map.case_tag != MapCase::unsupported;
    MapReport report;
    if (supported) {
        map = one_forms(map);
        report = verify_map(map, {0.2, 0.5, 0.8});
    }

    if (format == "json") {
        json doc;
        doc["A"] = to_string(A);
        doc["B"] = to_string(B);
        doc["case"] = to_string(map.case_tag);
        if (supported) {
            doc["q"] = map.q;
            doc["u"] = map.u;
            doc["xi"] = map.xi_description();
            doc["z_of_xi"] = map.z_of_xi.to_string("xi");
            doc["h_of_xi"] = map.h_of_xi.to_string("xi");
            doc["Q"] = map.Q.to_string("xi");
            doc["R"] = map.R.to_string("xi");
            doc["P1"] = map.P1.to_string("xi");
            doc["P2"] = map.P2.to_string("xi");
            doc["verified"] = report.ok;
        }
        out << doc.dump(2) << "\n";
    } else {
        out << "case: " << to_string(map.case_tag) << "\n";
        if (supported) {
            out << "q: " << map.q << ", u: " << map.u << "\n";
            out << "xi(z) = " << map.xi_description() << "\n";
            out << "z(xi) = " << map.z_of_xi.to_string("xi") << "\n";
            out << "h(xi) = " << map.h_of_xi.to_string("xi") << "\n";
            out << "Q  = " << map.Q.to_string("xi") << "\n";
            out << "R  = " << map.R.to_string("xi") << "\n";
            out << "P1 = " << map.P1.to_string("xi") << "\n";
            out << "P2 = " << map.P2.to_string("xi") << "\n";
            out << "consistency checks: " << (report.ok ? "pass" : ("FAIL: " + report.detail)) << "\n";
        }
    }
    if (supported && !report.ok) throw_internal("one-form consistency failed: " + report.detail);
    return 0;
}

int verify_cmd(CLI::App& app, std::ostream& out, std::ostream& /*err*/) {
    unsigned seed = app.get_option("--seed")->as<unsigned>();
    int jobs = app.get_option("--jobs")->as<int>();
    auto results = verify::run_battery(seed, jobs);
    bool all = true;
    for (const auto& r : results) {
        out << (r.pass ? "PASS " : "FAIL ") << r.name << " - " << r.detail << "\n";
        all = all && r.pass;
    }
    out << (all ? "all checks passed" : "CHECKS FAILED") << "\n";
    return all ? 0 : 4;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"epsilon expansions of generalized hypergeometric functions", "hyperexp"};
    app.require_subcommand(1);

    const char* env_tol = std::getenv("HYPEREXP_QUAD_TOL");
    double default_quad_tol = env_tol ? std::atof(env_tol) : 1e-12;
    if (!(default_quad_tol > 0.0)) default_quad_tol = 1e-12;

    auto add_format = [](CLI::App* cmd) {
        cmd->add_option("--format", "output format")
            ->default_val("text")
            ->check(CLI::IsMember({"json", "csv", "text"}));
    };

    CLI::App* ex = app.add_subcommand("expand", "expansion coefficients via one or all routes");
    ex->add_option("--upper", "upper parameters, e.g. '0+1e,0-1e'")->required();
    ex->add_option("--lower", "lower parameters, e.g. '1'")->default_val("");
    ex->add_option("--order", "highest eps order")->default_val(4);
    ex->add_option("--z", "comma-separated z points")->required();
    ex->add_option("--tol", "cross-check tolerance")->default_val(1e-8);
    ex->add_option("--quad-tol", "quadrature tolerance")->default_val(default_quad_tol);
    ex->add_option("--method", "ode|oracle|hyperlog|all")
        ->default_val("all")
        ->check(CLI::IsMember({"ode", "oracle", "hyperlog", "all"}));
    ex->add_option("--jobs", "concurrent z evaluations")->default_val(1);
    add_format(ex);

    CLI::App* orc = app.add_subcommand("oracle", "direct series evaluation (theta derivatives)");
    orc->add_option("--upper")->required();
    orc->add_option("--lower")->default_val("");
    orc->add_option("--theta", "theta power")->default_val(0);
    orc->add_option("--order")->default_val(4);
    orc->add_option("--z")->required();
    orc->add_option("--tol")->default_val(1e-12);
    orc->add_option("--jobs")->default_val(1);
    add_format(orc);

    CLI::App* red = app.add_subcommand("reduce", "integer parameter shifts over a base spec");
    red->add_option("--target", "'upperlist;lowerlist'")->required();
    red->add_option("--base", "'upperlist;lowerlist'")->required();
    red->add_option("--eps", "evaluation eps (rational)")->default_val("0");
    red->add_option("--check", "z points for the residual check")->default_val("0.2,0.5");
    red->add_option("--order", "eps orders compared by the check")->default_val(2);
    red->add_option("--tol")->default_val(1e-9);
    add_format(red);

    CLI::App* sum = app.add_subcommand("sum", "multiple (inverse) binomial sums");
    sum->add_option("--k", "+1 inverse binomial, -1 binomial")->default_val(1);
    sum->add_option("--a", "harmonic indices at j-1")->default_val("");
    sum->add_option("--b", "harmonic indices at 2j-1")->default_val("");
    sum->add_option("--c", "power of j")->default_val(0);
    sum->add_option("--z")->required();
    sum->add_option("--tol")->default_val(1e-10);
    sum->add_flag("--catalog", "also evaluate the hypergeometric representation");
    add_format(sum);

    CLI::App* cls = app.add_subcommand("classify", "parameter map for (A, B)");
    cls->add_option("--A")->required();
    cls->add_option("--B")->required();
    add_format(cls);

    CLI::App* ver = app.add_subcommand("verify", "run the invariant battery");
    ver->add_option("--seed")->default_val(12345u);
    ver->add_option("--jobs")->default_val(1);

    std::vector<char*> argv;
    std::vector<std::string> storage = args;
    std::string progname = "hyperexp";
    argv.push_back(progname.data());
    for (auto& a : storage) argv.push_back(a.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(ex)) return expand_cmd(*ex, out, err);
        if (app.got_subcommand(orc)) return oracle_cmd(*orc, out, err);
        if (app.got_subcommand(red)) return reduce_cmd(*red, out, err);
        if (app.got_subcommand(sum)) return sum_cmd(*sum, out, err);
        if (app.got_subcommand(cls)) return classify_cmd(*cls, out, err);
        if (app.got_subcommand(ver)) return verify_cmd(*ver, out, err);
        err << "no subcommand\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return e.exit_code();
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 5;
    }
}

}  // namespace cli
}  // namespace hyperexp
