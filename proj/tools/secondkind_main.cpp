// Command-line front end. Exit codes: 0 on success and on verifications that
// pass, 1 on a failed verification (with the mismatch printed), 2 on usage
// errors. Identical inputs produce byte-identical output.

#include <CLI11.hpp>

#include <cstddef>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "secondkind/secondkind.hpp"
#include "secondkind/selftest.hpp"
#include "secondkind/serialize.hpp"

namespace {

using namespace secondkind;

std::vector<Rational> parse_rational_list(const std::string& text) {
    std::vector<Rational> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        std::string item = text.substr(start, comma == std::string::npos ? comma : comma - start);
        if (item.empty()) throw std::invalid_argument("empty coefficient in list '" + text + "'");
        out.push_back(Rational::from_string(item));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

// "a=1,1;b=-8,-7,-1;c=12,10,2": ascending coefficients of the polynomial in n
// for each of a_n, b_n, c_n.
RecurrenceSpec spec_from_coeffs(const std::string& text) {
    std::map<std::string, std::vector<Rational>> parts;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t semi = text.find(';', start);
        std::string seg = text.substr(start, semi == std::string::npos ? semi : semi - start);
        std::size_t eq = seg.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("--coeffs segment '" + seg + "' is not key=values");
        parts[seg.substr(0, eq)] = parse_rational_list(seg.substr(eq + 1));
        if (semi == std::string::npos) break;
        start = semi + 1;
    }
    for (const char* key : {"a", "b", "c"})
        if (!parts.count(key))
            throw std::invalid_argument(std::string("--coeffs is missing '") + key + "='");
    auto make = [](std::vector<Rational> coeffs) {
        return [coeffs = std::move(coeffs)](std::size_t n) {
            Rational x(static_cast<long>(n));
            Rational acc(0);
            for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
            return acc;
        };
    };
    return RecurrenceSpec{make(parts["a"]), make(parts["b"]), make(parts["c"])};
}

int run_dalembert(const std::string& example, const std::string& coeffs, std::size_t upto,
                  const std::string& y0_text, const std::string& y1_text,
                  const std::string& format) {
    RecurrenceSpec spec;
    Rational f0, f1;
    std::string name;
    if (!example.empty()) {
        for (const auto& ex : named_examples())
            if (ex.name == example) {
                spec = ex.spec;
                f0 = ex.f0;
                f1 = ex.f1;
                name = ex.name;
            }
    } else {
        spec = spec_from_coeffs(coeffs);
        f0 = Rational::from_string(y0_text);
        f1 = Rational::from_string(y1_text);
        name = "custom";
    }
    Orbit first = iterate(spec, f0, f1, upto);
    Orbit second = dalembert_second(spec, first, upto);
    if (format == "json") {
        json j{{"recurrence", name},
               {"upto", upto},
               {"first", to_json(first)},
               {"second", to_json(second)}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "n\tfirst\tsecond\n";
        for (std::size_t n = 0; n <= upto; ++n)
            std::cout << n << "\t" << first.at(n).to_string() << "\t" << second.at(n).to_string()
                      << "\n";
    }
    return 0;
}

int run_pq(std::size_t n, const std::string& kind, const std::string& format) {
    std::optional<PQPoly> p, q;
    if (kind == "P" || kind == "both") p = build_p(n);
    if (kind == "Q" || kind == "both") q = build_q(n);
    if (format == "json") {
        json j;
        if (p) j["P"] = to_json(*p);
        if (q) j["Q"] = to_json(*q);
        std::cout << j.dump(2) << "\n";
    } else {
        if (p) std::cout << "P_" << n << " = " << to_text(*p) << "\n";
        if (q) std::cout << "Q_" << n << " = " << to_text(*q) << "\n";
    }
    return 0;
}

int run_chg_table(unsigned long N, unsigned long n, bool all, const std::string& format) {
    if (all) {
        if (format == "json") {
            json arr = json::array();
            for (unsigned long bigN = 0; bigN <= 4; ++bigN)
                for (unsigned long nn = 0; nn <= 6; ++nn)
                    arr.push_back(json{{"N", bigN}, {"n", nn}, {"P", to_json(p_poly({bigN, nn}))}});
            std::cout << arr.dump(2) << "\n";
        } else {
            for (unsigned long bigN = 0; bigN <= 4; ++bigN)
                for (unsigned long nn = 0; nn <= 6; ++nn)
                    std::cout << "N=" << bigN << " n=" << nn << ": "
                              << to_text(p_poly({bigN, nn})) << "\n";
        }
        return 0;
    }
    if (format == "json") {
        json j{{"N", N}, {"n", n}, {"P", to_json(p_poly({N, n}))}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << to_text(p_poly({N, n})) << "\n";
    }
    return 0;
}

int run_chg_verify(unsigned long max_N, unsigned long max_n, const std::string& format) {
    struct Item {
        std::string name;
        bool pass = true;
        std::string detail;
    };
    std::vector<Item> items;
    auto add = [&items](const std::string& name) -> Item& {
        items.push_back({name, true, ""});
        return items.back();
    };

    auto& methods = add("construction-route-agreement");
    auto& coeffs = add("coefficient-formula-agreement");
    auto& integral = add("integer-coefficients");
    auto& degree_rec = add("degree-recurrence");
    auto& order_rec = add("order-recurrence");
    auto& casor = add("casoratian");
    auto& at_zero = add("value-at-zero");
    for (unsigned long N = 0; N <= max_N; ++N) {
        for (unsigned long n = 0; n <= max_n; ++n) {
            ChgParams p{N, n};
            std::string at = " at N=" + std::to_string(N) + ", n=" + std::to_string(n);
            DensePoly poly = p_poly(p);
            if (poly != p_poly(p, PPolyMethod::direct)) {
                methods.pass = false;
                methods.detail = "routes disagree" + at;
            }
            for (unsigned long m = 0; N >= 1 && m <= N - 1; ++m)
                if (c_coeff(p, m, CCoeffMethod::doublesum) !=
                    c_coeff(p, m, CCoeffMethod::harmonic)) {
                    coeffs.pass = false;
                    coeffs.detail = "formulas disagree" + at + ", m=" + std::to_string(m);
                }
            for (const auto& c : poly.coefficients())
                if (!c.is_integer()) {
                    integral.pass = false;
                    integral.detail = "non-integer coefficient" + at;
                }
            if (N >= 1)
                for (auto kind : {SolutionKind::first_kind, SolutionKind::second_kind})
                    if (!verify_degree_recurrence(p, kind)) {
                        degree_rec.pass = false;
                        degree_rec.detail = "fails" + at;
                    }
            if (n >= 1)
                for (auto kind : {SolutionKind::first_kind, SolutionKind::second_kind})
                    if (!verify_order_recurrence(p, kind)) {
                        order_rec.pass = false;
                        order_rec.detail = "fails" + at;
                    }
            if (!casoratian_check(p)) {
                casor.pass = false;
                casor.detail = "fails" + at;
            }
            if (n >= 1 && p_at_zero(p) != factorial(N) * factorial(n - 1)) {
                at_zero.pass = false;
                at_zero.detail = "P(N,n,0) != N!(n-1)!" + at;
            }
        }
    }

    bool all_pass = true;
    for (const auto& it : items) all_pass = all_pass && it.pass;
    if (format == "json") {
        json checks = json::array();
        for (const auto& it : items) {
            json j{{"name", it.name}, {"pass", it.pass}};
            if (!it.detail.empty()) j["detail"] = it.detail;
            checks.push_back(std::move(j));
        }
        std::cout << json{{"max_N", max_N}, {"max_n", max_n}, {"checks", checks}, {"pass", all_pass}}
                         .dump(2)
                  << "\n";
    } else {
        for (const auto& it : items) {
            std::cout << (it.pass ? "ok   " : "FAIL ") << it.name;
            if (!it.detail.empty()) std::cout << ": " << it.detail;
            std::cout << "\n";
        }
        std::cout << (all_pass ? "chg-verify: all checks passed\n" : "chg-verify: FAILED\n");
    }
    return all_pass ? 0 : 1;
}

int run_bezout(unsigned long N, unsigned long n, const std::string& format) {
    ChgParams p{N, n};
    json report = bezout_report_json(p);
    bool holds = report["identity_holds"].get<bool>();
    if (format == "json") {
        std::cout << report.dump(2) << "\n";
    } else {
        BezoutPair pair = bezout_phi(p);
        std::cout << "s = " << to_text(pair.s) << "\n";
        std::cout << "t = " << to_text(pair.t) << "\n";
        std::cout << "deg s = " << (pair.s.is_zero() ? std::string("-inf") : std::to_string(*pair.s.degree()))
                  << ", deg t = "
                  << (pair.t.is_zero() ? std::string("-inf") : std::to_string(*pair.t.degree()))
                  << "\n";
        std::cout << "cancellation identity (x t' - (n+1-x) t + x s = c Phi): "
                  << (holds ? "holds" : "FAILS") << ", c = "
                  << cancellation_constant(p).to_string() << "\n";
    }
    return holds ? 0 : 1;
}

void print_channel_rows(const std::string& label, long exponent, const std::string& lhs,
                        const std::string& rhs) {
    std::cout << label << "\t" << exponent << "\t" << lhs << "\t" << rhs << "\n";
}

int run_series_compare(unsigned long N, unsigned long n, long order, const std::string& format) {
    ChgParams p{N, n};
    ExpansionReport report = compare_expansions(p, order);
    if (format == "json") {
        std::cout << to_json(report).dump(2) << "\n";
    } else {
        LaurentLogExpansion lhs = dlmf_series(p, order);
        LaurentLogExpansion rhs = closed_form_series(p, order);
        std::cout << "channel\texp\tseries\tclosed-form\n";
        for (long e = -static_cast<long>(n); e < 0; ++e)
            if (!lhs.pole(e).is_zero() || !rhs.pole(e).is_zero())
                print_channel_rows("pole", e, lhs.pole(e).to_string(), rhs.pole(e).to_string());
        for (long k = 0; k <= order; ++k)
            if (!lhs.log_at(k).is_zero() || !rhs.log_at(k).is_zero())
                print_channel_rows("log", k, lhs.log_at(k).to_string(), rhs.log_at(k).to_string());
        for (long k = 0; k <= order; ++k) {
            GammaValue a = lhs.regular(k), b = rhs.regular(k);
            if (!a.rational.is_zero() || !b.rational.is_zero())
                print_channel_rows("regular", k, a.rational.to_string(), b.rational.to_string());
            if (!a.gamma.is_zero() || !b.gamma.is_zero())
                print_channel_rows("gamma", k, a.gamma.to_string(), b.gamma.to_string());
        }
        if (report.equal) {
            std::cout << "result: equal through order " << order << "\n";
        } else {
            std::cout << "result: MISMATCH in channel " << report.first_mismatch->channel
                      << " at exponent " << report.first_mismatch->exponent << ": "
                      << report.first_mismatch->lhs << " vs " << report.first_mismatch->rhs << "\n";
        }
    }
    return report.equal ? 0 : 1;
}

int run_selftest_cmd(const std::string& format) {
    auto results = run_selftest();
    std::size_t passed = 0;
    for (const auto& c : results) passed += c.pass ? 1 : 0;
    if (format == "json") {
        json arr = json::array();
        for (const auto& c : results) {
            json j{{"name", c.name}, {"pass", c.pass}};
            if (!c.detail.empty()) j["detail"] = c.detail;
            arr.push_back(std::move(j));
        }
        std::cout << json{{"checks", arr}, {"passed", passed}, {"total", results.size()}}.dump(2)
                  << "\n";
    } else {
        for (const auto& c : results) {
            std::cout << (c.pass ? "ok   " : "FAIL ") << c.name;
            if (!c.detail.empty()) std::cout << ": " << c.detail;
            std::cout << "\n";
        }
        std::cout << "selftest: " << passed << "/" << results.size() << " checks passed\n";
    }
    return passed == results.size() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact second solutions of second-order linear difference equations"};
    app.require_subcommand(1);
    std::string format = "text";

    auto add_format = [&format](CLI::App* cmd) {
        cmd->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"text", "json"}))
            ->capture_default_str();
    };

    // dalembert
    auto* dal = app.add_subcommand("dalembert", "Second solution by reduction of order");
    std::string example, coeffs, y0_text = "1", y1_text = "1";
    std::size_t upto = 10;
    dal->add_option("--example", example, "Built-in recurrence")
        ->check(CLI::IsMember({"double-root", "factorial", "harmonic", "ex4"}));
    dal->add_option("--coeffs", coeffs,
                    "Custom coefficients as polynomials in n, e.g. a=1,1;b=-8,-7,-1;c=12,10,2");
    dal->add_option("--upto", upto, "Last index of the orbit")->capture_default_str();
    dal->add_option("--y0", y0_text, "First-solution seed y_0 (custom specs)")
        ->capture_default_str();
    dal->add_option("--y1", y1_text, "First-solution seed y_1 (custom specs)")
        ->capture_default_str();
    add_format(dal);

    // pq
    auto* pq = app.add_subcommand("pq", "Construct the P_n / Q_n coefficient polynomials");
    std::size_t pq_n = 4;
    std::string pq_kind = "both";
    pq->add_option("--n", pq_n, "Construction order")->required();
    pq->add_option("--kind", pq_kind, "Which polynomial")
        ->check(CLI::IsMember({"P", "Q", "both"}))
        ->capture_default_str();
    add_format(pq);

    // chg-table
    auto* table = app.add_subcommand("chg-table", "Second-kind polynomial P(N,n,x)");
    unsigned long table_N = 0, table_n = 0;
    bool table_all = false;
    auto* opt_N = table->add_option("--N", table_N, "Degree parameter");
    auto* opt_n = table->add_option("--n", table_n, "Order parameter");
    table->add_flag("--all", table_all, "Emit the whole reference table (N<=4, n<=6)");
    add_format(table);

    // chg-verify
    auto* verify = app.add_subcommand("chg-verify", "Verification sweep over (N, n)");
    unsigned long verify_N = 8, verify_n = 8;
    verify->add_option("--N", verify_N, "Largest N")->capture_default_str();
    verify->add_option("--n", verify_n, "Largest n")->capture_default_str();
    add_format(verify);

    // bezout
    auto* bez = app.add_subcommand("bezout", "Bezout pair for (Phi, Phi') and the cancellation identity");
    unsigned long bez_N = 2, bez_n = 0;
    bez->add_option("--N", bez_N, "Degree parameter")->required();
    bez->add_option("--n", bez_n, "Order parameter")->required();
    add_format(bez);

    // series-compare
    auto* series = app.add_subcommand("series-compare",
                                      "Compare the series and closed-form expansion routes");
    unsigned long ser_N = 0, ser_n = 0;
    long ser_order = 20;
    series->add_option("--N", ser_N, "Degree parameter")->required();
    series->add_option("--n", ser_n, "Order parameter")->required();
    series->add_option("--order", ser_order, "Truncation order")->capture_default_str();
    add_format(series);

    // selftest
    auto* self = app.add_subcommand("selftest", "Run the full invariant suite");
    add_format(self);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // usage errors exit 2; --help exits 0
    }

    try {
        if (dal->parsed()) {
            if (example.empty() == coeffs.empty()) {
                std::cerr << "dalembert: exactly one of --example / --coeffs is required\n";
                return 2;
            }
            return run_dalembert(example, coeffs, upto, y0_text, y1_text, format);
        }
        if (pq->parsed()) return run_pq(pq_n, pq_kind, format);
        if (table->parsed()) {
            if (!table_all && (!*opt_N || !*opt_n)) {
                std::cerr << "chg-table: provide --N and --n, or --all\n";
                return 2;
            }
            return run_chg_table(table_N, table_n, table_all, format);
        }
        if (verify->parsed()) return run_chg_verify(verify_N, verify_n, format);
        if (bez->parsed()) return run_bezout(bez_N, bez_n, format);
        if (series->parsed()) return run_series_compare(ser_N, ser_n, ser_order, format);
        if (self->parsed()) return run_selftest_cmd(format);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
