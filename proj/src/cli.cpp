#include "dzeta/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "dzeta/errors.hpp"
#include "dzeta/identities.hpp"
#include "dzeta/numeric_eval.hpp"
#include "dzeta/reduction.hpp"
#include "dzeta/serialize.hpp"

namespace dzeta::cli {

namespace {

constexpr const char* kVersion = "0.1.0";

Sign need_sign(const std::string& s, const char* which) {
    const auto sg = parse_sign(s);
    if (!sg) throw domain_error(std::string("bad ") + which + " '" + s + "' (use +1/-1/+/-/p/m)");
    return *sg;
}

long double default_tol() {
    if (const char* env = std::getenv("DZETA_TOL")) {
        const long double t = strtold(env, nullptr);
        if (t > 0) return t;
    }
    return 1e-8L;
}

nlohmann::ordered_json metadata() {
    nlohmann::ordered_json m;
    m["tool"] = "dzeta";
    m["version"] = kVersion;
    m["precision"] = "long double (64-bit mantissa)";
    return m;
}

void emit(const std::string& payload, const std::string& out_file, std::ostream& out) {
    if (out_file.empty()) {
        out << payload;
        return;
    }
    std::ofstream f(out_file);
    if (!f) throw resource_error("cannot open output file '" + out_file + "'");
    f << payload;
}

std::string verdict(bool ok) { return ok ? "true" : "false"; }

nlohmann::ordered_json direct_json(const DirectResult& r) {
    nlohmann::ordered_json j = enclosure_to_json(r.enclosure);
    j["n_used"] = r.n_used;
    j["rigorous"] = r.rigorous;
    return j;
}

// ---------------------------------------------------------------- reduce --

struct ReduceArgs {
    int s = 0, t = 0;
    std::string sigma, tau;
    std::string method = "signed";
    std::string format = "text";
    bool compare_euler = false;
    bool pi_form = false;
    std::string out_file;
};

int cmd_reduce(const ReduceArgs& a, std::ostream& out) {
    const Sign sigma = need_sign(a.sigma, "sigma");
    const Sign tau = need_sign(a.tau, "tau");

    ZetaExpr expr;
    if (a.method == "signed") {
        expr = reduce_signed(a.s, a.t, sigma, tau);
    } else if (a.method == "euler") {
        if (sigma != Sign::plus || tau != Sign::plus)
            throw domain_error("reduce --method euler requires sigma=tau=+1");
        expr = reduce_euler(a.s, a.t);
    } else if (a.method == "s1") {
        if (sigma != Sign::plus || tau != Sign::plus || a.t != 1)
            throw domain_error("reduce --method s1 requires t=1, sigma=tau=+1");
        expr = reduce_s1(a.s);
    } else if (a.method == "t1") {
        if (tau != Sign::plus || a.t != 1)
            throw domain_error("reduce --method t1 requires t=1, tau=+1");
        expr = reduce_even_s_t1(a.s, sigma);
    } else {
        throw domain_error("unknown reduce method '" + a.method + "'");
    }

    std::optional<ZetaExpr> euler;
    bool consistent = true;
    if (a.compare_euler) {
        if (sigma != Sign::plus || tau != Sign::plus)
            throw domain_error("--compare-euler requires sigma=tau=+1");
        euler = reduce_euler(a.s, a.t);
        consistent = (euler->terms() == expr.terms());
    }

    std::ostringstream os;
    if (a.format == "latex") {
        os << expr_to_latex(expr, a.pi_form) << "\n";
    } else if (a.format == "json") {
        nlohmann::ordered_json j;
        j["request"] = {{"command", "reduce"}, {"s", a.s},
                        {"t", a.t},           {"sigma", std::string(to_string(sigma))},
                        {"tau", std::string(to_string(tau))}, {"method", a.method}};
        j["result"]["expr"] = expr_to_json(expr);
        if (euler) {
            j["result"]["euler_expr"] = expr_to_json(*euler);
            j["result"]["consistent"] = consistent;
        }
        j["metadata"] = metadata();
        os << j.dump(2) << "\n";
    } else if (a.format == "text") {
        os << "zeta(" << a.s << "," << a.t << ";" << to_string(sigma) << "," << to_string(tau)
           << ") = " << expr_to_text(expr) << "\n";
        if (expr.uses_zeta_one_convention()) os << "convention: zeta(1;1)=0\n";
        if (euler) {
            os << "euler form  = " << expr_to_text(*euler) << "\n";
            os << "consistent = " << verdict(consistent) << "\n";
        }
    } else {
        throw domain_error("unknown format '" + a.format + "'");
    }
    emit(os.str(), a.out_file, out);
    return consistent ? kExitOk : kExitVerification;
}

// ------------------------------------------------------------------ eval --

struct EvalArgs {
    int s = 0, t = 0;
    std::string sigma, tau;
    long double tol = 0;
    std::string method = "both";
    std::string format = "text";
    std::int64_t n_ceiling = 6'000'000'000;
    std::string out_file;
};

int cmd_eval(const EvalArgs& a, std::ostream& out) {
    const Sign sigma = need_sign(a.sigma, "sigma");
    const Sign tau = need_sign(a.tau, "tau");
    if (a.method != "direct" && a.method != "reduced" && a.method != "both")
        throw domain_error("eval method must be direct|reduced|both");
    if (a.s == 1 && sigma == Sign::plus)
        throw divergence_error("zeta(1,t;+1,tau) diverges for every t");

    std::optional<Enclosure> reduced;
    if (a.method != "direct")
        reduced = eval_expr(reduce_signed(a.s, a.t, sigma, tau), a.tol);

    std::optional<DirectResult> direct;
    if (a.method != "reduced") {
        DirectOptions opt;
        opt.n_ceiling = a.n_ceiling;
        direct = double_zeta_direct(a.s, a.t, sigma, tau, a.tol, opt);
    }

    bool overlap = true;
    if (reduced && direct) overlap = reduced->overlaps(direct->enclosure);

    std::ostringstream os;
    if (a.format == "json") {
        nlohmann::ordered_json j;
        j["request"] = {{"command", "eval"},
                        {"s", a.s},
                        {"t", a.t},
                        {"sigma", std::string(to_string(sigma))},
                        {"tau", std::string(to_string(tau))},
                        {"tol", format_long_double_roundtrip(a.tol)},
                        {"method", a.method}};
        if (reduced) j["result"]["reduced"] = enclosure_to_json(*reduced);
        if (direct) j["result"]["direct"] = direct_json(*direct);
        if (reduced && direct) j["result"]["overlap"] = overlap;
        j["metadata"] = metadata();
        os << j.dump(2) << "\n";
    } else if (a.format == "text") {
        if (reduced) os << "reduced = " << enclosure_to_text(*reduced) << "\n";
        if (direct) {
            os << "direct  = " << enclosure_to_text(direct->enclosure) << " (N="
               << direct->n_used << (direct->rigorous ? "" : ", heuristic") << ")\n";
        }
        if (reduced && direct) os << "overlap = " << verdict(overlap) << "\n";
    } else {
        throw domain_error("unknown format '" + a.format + "'");
    }
    emit(os.str(), a.out_file, out);
    return overlap ? kExitOk : kExitVerification;
}

// ---------------------------------------------------------------- verify --

struct VerifyArgs {
    std::string suite;
    int max_s = 4, max_t = 4;
    std::int64_t max_N = 20;
    std::uint64_t seed = 42;
    std::string format = "text";
    std::string out_file;
};

struct Case {
    std::string name;
    bool ok;
};

void run_sign_grid(const std::string& label, int max_s, int max_t, std::int64_t max_N,
                   bool odd_weight_only,
                   const std::function<bool(int, int, Sign, Sign, std::int64_t)>& check,
                   std::vector<Case>& cases) {
    constexpr Sign signs[2] = {Sign::plus, Sign::minus};
    for (int s = 1; s <= max_s; ++s)
        for (int t = 1; t <= max_t; ++t) {
            if (odd_weight_only && (s + t) % 2 == 0) continue;
            for (const Sign sigma : signs)
                for (const Sign tau : signs)
                    for (std::int64_t N = 1; N <= max_N; ++N) {
                        std::ostringstream name;
                        name << label << " s=" << s << " t=" << t << " sigma=" << to_string(sigma)
                             << " tau=" << to_string(tau) << " N=" << N;
                        cases.push_back({name.str(), check(s, t, sigma, tau, N)});
                    }
        }
}

void run_parfrac(int max_s, int max_t, std::uint64_t seed, std::vector<Case>& cases) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-50, 50);
    std::uniform_int_distribution<int> den(1, 50);
    for (int s = 1; s <= max_s; ++s)
        for (int t = 1; t <= max_t; ++t) {
            bool all = true;
            int points = 0;
            while (points < 100) {
                const BigRational x = rat(num(rng), den(rng));
                const BigRational y = rat(num(rng), den(rng));
                if (x == 0 || y == 0 || x + y == 0) continue;
                ++points;
                all = all && verify_partial_fraction(s, t, x, y);
            }
            std::ostringstream name;
            name << "parfrac s=" << s << " t=" << t << " points=100";
            cases.push_back({name.str(), all});
        }
}

void run_tailbound(int max_s, int max_t, std::int64_t max_N, std::vector<Case>& cases) {
    constexpr Sign signs[2] = {Sign::plus, Sign::minus};
    for (int s = 1; s <= max_s; ++s)
        for (int t = 1; t <= max_t; ++t) {
            if ((s + t) % 2 == 0) continue;
            for (int b = 1; b <= t; b += 2)
                for (const Sign sigma : signs)
                    for (const Sign tau : signs)
                        for (std::int64_t N = 1; N <= max_N; ++N) {
                            const TailWitness w = tail_witness_b_odd(s, t, sigma, tau, b, N);
                            std::ostringstream name;
                            name << "tailbound s=" << s << " t=" << t << " b=" << b
                                 << " sigma=" << to_string(sigma) << " tau=" << to_string(tau)
                                 << " N=" << N;
                            cases.push_back({name.str(), w.bracket_abs <= w.bound});
                        }
        }
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
    std::vector<Case> cases;
    const bool all = a.suite == "all";
    bool known = all;

    if (all || a.suite == "finite") {
        known = true;
        run_sign_grid("finite", a.max_s, a.max_t, a.max_N, true,
                      [](int s, int t, Sign sg, Sign tu, std::int64_t N) {
                          return check_finite_identity(s, t, sg, tu, N);
                      },
                      cases);
    }
    if (all || a.suite == "symmetric") {
        known = true;
        run_sign_grid("symmetric", a.max_s, a.max_t, a.max_N, false,
                      [](int s, int t, Sign sg, Sign tu, std::int64_t N) {
                          return check_symmetric_identity(s, t, to_rational(sg), to_rational(tu), N);
                      },
                      cases);
    }
    if (all || a.suite == "shuffle") {
        known = true;
        run_sign_grid("shuffle", a.max_s, a.max_t, a.max_N, false,
                      [](int s, int t, Sign sg, Sign tu, std::int64_t N) {
                          return check_shuffle_identity(s, t, to_rational(sg), to_rational(tu), N);
                      },
                      cases);
    }
    if (all || a.suite == "stuffle") {
        known = true;
        run_sign_grid("stuffle", a.max_s, a.max_t, a.max_N, false,
                      [](int s, int t, Sign sg, Sign tu, std::int64_t N) {
                          const StuffleParts p = stuffle_decompose({s, sg}, {t, tu}, {N});
                          const BigRational product = zeta_partial_single({s, sg}, {N}) *
                                                      zeta_partial_single({t, tu}, {N});
                          return p.double_st + p.single_sum + p.double_ts == product;
                      },
                      cases);
    }
    if (all || a.suite == "parfrac") {
        known = true;
        run_parfrac(a.max_s, a.max_t, a.seed, cases);
    }
    if (all || a.suite == "tailbound") {
        known = true;
        run_tailbound(a.max_s, a.max_t, a.max_N, cases);
    }
    if (!known)
        throw domain_error("unknown suite '" + a.suite +
                           "' (finite|symmetric|shuffle|stuffle|parfrac|tailbound|all)");

    std::size_t passed = 0;
    for (const auto& c : cases) passed += c.ok ? 1 : 0;
    const bool ok = passed == cases.size();

    std::ostringstream os;
    if (a.format == "json") {
        nlohmann::ordered_json j;
        j["request"] = {{"command", "verify"}, {"suite", a.suite},   {"max_s", a.max_s},
                        {"max_t", a.max_t},    {"max_N", a.max_N},   {"seed", a.seed}};
        j["result"]["cases"] = nlohmann::ordered_json::array();
        for (const auto& c : cases)
            j["result"]["cases"].push_back({{"case", c.name}, {"ok", c.ok}});
        j["result"]["total"] = cases.size();
        j["result"]["passed"] = passed;
        j["metadata"] = metadata();
        os << j.dump(2) << "\n";
    } else if (a.format == "text") {
        for (const auto& c : cases) os << c.name << ": " << verdict(c.ok) << "\n";
        os << "passed " << passed << "/" << cases.size() << "\n";
    } else {
        throw domain_error("unknown format '" + a.format + "'");
    }
    emit(os.str(), a.out_file, out);
    return ok ? kExitOk : kExitVerification;
}

// ----------------------------------------------------------------- table --

struct TableArgs {
    int max_weight = 0;
    long double tol = 0;
    std::string format = "csv";
    std::int64_t n_cap = 10'000'000;
    std::string out_file;
};

struct TableRow {
    int s, t;
    Sign sigma, tau;
    ZetaExpr expr;
    Enclosure reduced;
    DirectResult direct;
    bool overlap;
};

int cmd_table(const TableArgs& a, std::ostream& out) {
    if (a.max_weight < 3) throw domain_error("table: max weight must be >= 3");

    DirectOptions opt;
    opt.n_ceiling = a.n_cap;
    opt.best_effort = true; // report the achieved bound instead of failing

    std::map<std::pair<int, int>, DirectFamily> families;
    std::vector<TableRow> rows;
    constexpr Sign signs[2] = {Sign::plus, Sign::minus};
    for (int weight = 3; weight <= a.max_weight; weight += 2)
        for (int s = 1; s < weight; ++s) {
            const int t = weight - s;
            for (const Sign sigma : signs)
                for (const Sign tau : signs) {
                    if (sigma == Sign::plus && s < 2) continue;
                    if (tau == Sign::plus && t == 1 && s % 2 != 0) continue;

                    TableRow row{s, t, sigma, tau, reduce_signed(s, t, sigma, tau),
                                 {},            {},  false};
                    row.reduced = eval_expr(row.expr, a.tol);
                    if (s >= 2) {
                        auto it = families.find({s, t});
                        if (it == families.end())
                            it = families.emplace(std::make_pair(s, t),
                                                  double_zeta_direct_family(s, t, a.tol, opt))
                                     .first;
                        row.direct = it->second.results[sign_pair_index(sigma, tau)];
                    } else {
                        row.direct = double_zeta_direct(s, t, sigma, tau, a.tol, opt);
                    }
                    row.overlap = row.reduced.overlaps(row.direct.enclosure);
                    rows.push_back(std::move(row));
                }
        }

    bool all_overlap = true;
    for (const auto& r : rows) all_overlap = all_overlap && r.overlap;

    std::ostringstream os;
    if (a.format == "csv") {
        os << "s,t,sigma,tau,weight,reduced,reduced_value,reduced_error,"
              "direct_value,direct_error,direct_n,rigorous,overlap\n";
        for (const auto& r : rows) {
            os << r.s << "," << r.t << "," << to_string(r.sigma) << "," << to_string(r.tau) << ","
               << (r.s + r.t) << "," << expr_to_text(r.expr) << ","
               << format_long_double_roundtrip(r.reduced.value) << ","
               << format_long_double_roundtrip(r.reduced.error_bound) << ","
               << format_long_double_roundtrip(r.direct.enclosure.value) << ","
               << format_long_double_roundtrip(r.direct.enclosure.error_bound) << ","
               << r.direct.n_used << "," << (r.direct.rigorous ? "true" : "false") << ","
               << verdict(r.overlap) << "\n";
        }
    } else if (a.format == "json") {
        nlohmann::ordered_json j;
        j["request"] = {{"command", "table"},
                        {"max_weight", a.max_weight},
                        {"tol", format_long_double_roundtrip(a.tol)},
                        {"n_cap", a.n_cap}};
        j["result"]["rows"] = nlohmann::ordered_json::array();
        for (const auto& r : rows) {
            nlohmann::ordered_json jr;
            jr["s"] = r.s;
            jr["t"] = r.t;
            jr["sigma"] = std::string(to_string(r.sigma));
            jr["tau"] = std::string(to_string(r.tau));
            jr["expr"] = expr_to_json(r.expr);
            jr["reduced"] = enclosure_to_json(r.reduced);
            jr["direct"] = direct_json(r.direct);
            jr["overlap"] = r.overlap;
            j["result"]["rows"].push_back(std::move(jr));
        }
        j["metadata"] = metadata();
        os << j.dump(2) << "\n";
    } else {
        throw domain_error("unknown format '" + a.format + "' (csv|json)");
    }
    emit(os.str(), a.out_file, out);
    return all_overlap ? kExitOk : kExitVerification;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"signed double zeta values: reduction, evaluation, verification"};
    app.set_version_flag("--version", kVersion);

    ReduceArgs ra;
    auto* reduce = app.add_subcommand("reduce", "reduce zeta(s,t;sigma,tau) to single zeta values");
    reduce->add_option("s", ra.s)->required();
    reduce->add_option("t", ra.t)->required();
    reduce->add_option("sigma", ra.sigma)->required();
    reduce->add_option("tau", ra.tau)->required();
    reduce->add_option("--method", ra.method, "signed|euler|s1|t1 (default signed)");
    reduce->add_option("--format", ra.format, "text|json|latex");
    reduce->add_flag("--compare-euler", ra.compare_euler,
                     "also reduce via the classical formula and compare");
    reduce->add_flag("--pi-form", ra.pi_form, "latex only: expand zeta(2k) into pi powers");
    reduce->add_option("--out", ra.out_file, "write output to a file");

    EvalArgs ea;
    ea.tol = default_tol();
    auto* eval = app.add_subcommand("eval", "numerically enclose zeta(s,t;sigma,tau)");
    eval->add_option("s", ea.s)->required();
    eval->add_option("t", ea.t)->required();
    eval->add_option("sigma", ea.sigma)->required();
    eval->add_option("tau", ea.tau)->required();
    eval->add_option("--tol", ea.tol, "absolute tolerance (default $DZETA_TOL or 1e-8)");
    eval->add_option("--method", ea.method, "direct|reduced|both (default both)");
    eval->add_option("--format", ea.format, "text|json");
    eval->add_option("--n-ceiling", ea.n_ceiling, "direct summation ceiling");
    eval->add_option("--out", ea.out_file, "write output to a file");

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "run exact identity suites");
    verify->add_option("suite", va.suite, "finite|symmetric|shuffle|stuffle|parfrac|tailbound|all")
        ->required();
    verify->add_option("--max-s", va.max_s);
    verify->add_option("--max-t", va.max_t);
    verify->add_option("--max-N", va.max_N);
    verify->add_option("--seed", va.seed, "seed for the parfrac sample points");
    verify->add_option("--format", va.format, "text|json");
    verify->add_option("--out", va.out_file, "write output to a file");

    TableArgs ta;
    ta.tol = default_tol();
    auto* table = app.add_subcommand("table", "tabulate all reducible cases up to a weight");
    table->add_option("max_weight", ta.max_weight)->required();
    table->add_option("--tol", ta.tol, "absolute tolerance (default $DZETA_TOL or 1e-8)");
    table->add_option("--format", ta.format, "csv|json");
    table->add_option("--n-cap", ta.n_cap,
                      "direct-sum ceiling; wider bounds are reported when the tolerance "
                      "needs more terms");
    table->add_option("--out", ta.out_file, "write output to a file");

    app.require_subcommand(1);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        std::ostringstream os;
        const int code = app.exit(e, os, os);
        (code == 0 ? out : err) << os.str();
        return code == 0 ? kExitOk : kExitPrecondition;
    }

    try {
        if (reduce->parsed()) return cmd_reduce(ra, out);
        if (eval->parsed()) return cmd_eval(ea, out);
        if (verify->parsed()) return cmd_verify(va, out);
        return cmd_table(ta, out);
    } catch (const resource_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitPrecondition;
    }
}

} // namespace dzeta::cli
