// orbits: exact census of k-subsets of the symmetric group S_n up to
// simultaneous left/right multiplication.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 resource limit, 4 I/O error.

#include <omp.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "orbits/asymptotics.hpp"
#include "orbits/known_rows.hpp"
#include "orbits/oracle.hpp"
#include "orbits/orbit_count.hpp"
#include "orbits/partitions.hpp"
#include "orbits/profile.hpp"

namespace {

using nlohmann::json;
using namespace orbits;

constexpr int kOk = 0;
constexpr int kVerifyFail = 1;
constexpr int kUsage = 2;
constexpr int kResource = 3;
constexpr int kIo = 4;

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
    out << text;
    if (!out) throw IoError("cannot write " + out_path);
}

int run_value(unsigned n, std::uint64_t k, const std::string& format) {
    ExactInt v = t_value(n, k);
    if (format == "json") {
        json j{{"n", n}, {"k", k}, {"value", v.get_str()}};
        std::cout << j.dump() << "\n";
    } else {
        std::cout << v.get_str() << "\n";
    }
    return kOk;
}

int run_row(unsigned n, const std::string& format, const std::string& out_path, bool force) {
    RowCache rc = t_row(n, force);
    std::string text;
    if (format == "bfile") {
        for (std::size_t k = 0; k < rc.row.size(); ++k)
            text += std::to_string(k) + " " + rc.row[k].get_str() + "\n";
    } else if (format == "json") {
        json j;
        j["n"] = n;
        json row = json::array();
        for (const ExactInt& v : rc.row) row.push_back(v.get_str());
        j["row"] = std::move(row);
        text = j.dump() + "\n";
    } else {  // csv
        text = "k,value\n";
        for (std::size_t k = 0; k < rc.row.size(); ++k)
            text += std::to_string(k) + "," + rc.row[k].get_str() + "\n";
    }
    write_output(text, out_path);
    return kOk;
}

int fail_with(const std::string& target, const std::string& counterexample) {
    json j{{"target", target}, {"pass", false}, {"counterexample", counterexample}};
    std::cout << j.dump() << "\n";
    std::cerr << "verification failed: " << counterexample << "\n";
    return kVerifyFail;
}

int run_verify_table() {
    RowCache r3 = t_row(3);
    for (std::size_t k = 0; k < 7; ++k)
        if (r3.row[k] != ExactInt(static_cast<unsigned long>(kKnownRow3[k])))
            return fail_with("table", "T(3," + std::to_string(k) + ") = " + r3.row[k].get_str() +
                                          ", expected " + std::to_string(kKnownRow3[k]));
    RowCache r4 = t_row(4);
    for (std::size_t k = 0; k <= 24; ++k) {
        std::uint64_t expected = kKnownRow4Half[k <= 12 ? k : 24 - k];
        if (r4.row[k] != ExactInt(static_cast<unsigned long>(expected)))
            return fail_with("table", "T(4," + std::to_string(k) + ") = " + r4.row[k].get_str() +
                                          ", expected " + std::to_string(expected));
    }
    json j{{"target", "table"}, {"pass", true}, {"rows", {3, 4}}};
    std::cout << j.dump() << "\n";
    return kOk;
}

int run_verify_oracle(unsigned n_max, std::uint64_t enum_k_max) {
    for (unsigned n = 2; n <= n_max; ++n) {
        std::vector<ExactInt> oracle_row = t_row_oracle(n);
        RowCache formula = t_row(n);
        for (std::size_t k = 0; k < oracle_row.size(); ++k)
            if (oracle_row[k] != formula.row[k])
                return fail_with("oracle", "n=" + std::to_string(n) + " k=" + std::to_string(k) +
                                               ": oracle " + oracle_row[k].get_str() +
                                               " != formula " + formula.row[k].get_str());
    }
    if (n_max >= 3) {
        RowCache r3 = t_row(3);
        for (std::uint64_t k = 0; k <= 6; ++k)
            if (orbit_enumeration(3, k).orbit_count != r3.row[k])
                return fail_with("oracle", "orbit_enumeration(3," + std::to_string(k) +
                                               ") != T(3," + std::to_string(k) + ")");
    }
    if (n_max >= 4) {
        RowCache r4 = t_row(4);
        for (std::uint64_t k = 0; k <= enum_k_max; ++k)
            if (orbit_enumeration(4, k).orbit_count != r4.row[k])
                return fail_with("oracle", "orbit_enumeration(4," + std::to_string(k) +
                                               ") != T(4," + std::to_string(k) + ")");
    }
    json j{{"target", "oracle"}, {"pass", true}, {"n_max", n_max}, {"enum_k_max", enum_k_max}};
    std::cout << j.dump() << "\n";
    return kOk;
}

int report_outcome(const std::string& target, const std::vector<CheckReport>& reports) {
    json j{{"target", target}, {"pass", true}};
    json suites = json::array();
    bool pass = true;
    std::string counterexample;
    for (const CheckReport& rep : reports) {
        suites.push_back(json::parse(report_json_summary(rep)));
        if (!rep.pass() && pass) {
            pass = false;
            const CheckRow* f = rep.first_failure();
            counterexample = rep.name + ": " + f->params + " lhs=" + f->lhs + " rhs=" + f->rhs;
        }
    }
    j["pass"] = pass;
    j["suites"] = std::move(suites);
    if (!pass) j["counterexample"] = counterexample;
    std::cout << j.dump() << "\n";
    if (!pass) {
        std::cerr << "verification failed: " << counterexample << "\n";
        return kVerifyFail;
    }
    return kOk;
}

int run_verify_bounds(unsigned n_max, unsigned p_max, unsigned profile_n_max,
                      const std::string& csv_path) {
    std::vector<CheckReport> reports;
    reports.push_back(check_prime_power_z_bound(n_max, p_max));
    for (unsigned n = 1; n <= profile_n_max; ++n)
        reports.push_back(check_period_profile_bounds(n));
    if (!csv_path.empty()) {
        std::string all;
        for (const auto& rep : reports) all += report_csv(rep);
        write_output(all, csv_path);
    }
    return report_outcome("bounds", reports);
}

int run_verify_classical(const std::string& csv_path) {
    CheckReport rep = check_classical();
    if (!csv_path.empty()) write_output(report_csv(rep), csv_path);
    return report_outcome("classical", {rep});
}

int run_verify_problem5(unsigned n_max) {
    for (unsigned m = 2; m <= 3; ++m) {
        for (unsigned n = 1; n <= n_max; ++n) {
            MaxPowerRatio r = max_power_ratio(n, m);
            if (!r.agree)
                return fail_with("problem5",
                                 "n=" + std::to_string(n) + " m=" + std::to_string(m) +
                                     ": brute-force max " + r.ratio.num.get_str() + "/" +
                                     r.ratio.den.get_str() + " at nu=" + r.maximizer.to_string() +
                                     " != closed form " + r.closed_form->get_str());
        }
    }
    json j{{"target", "problem5"}, {"pass", true}, {"n_max", n_max}, {"m", {2, 3}}};
    std::cout << j.dump() << "\n";
    return kOk;
}

int run_asym_bnx(unsigned n, double xmin, double xmax, double step, const std::string& format,
                 const std::string& out_path) {
    RowCache row = t_row(n);
    struct Point {
        double x, b, gauss;
    };
    std::vector<Point> pts;
    for (int i = 0;; ++i) {
        double x = xmin + step * i;
        if (x > xmax + 1e-9) break;
        pts.push_back({x, bulk_profile(row, x), std::exp(-x * x / 2.0)});
    }
    std::string text;
    if (format == "json") {
        json series = json::array();
        for (const Point& p : pts)
            series.push_back({{"x", p.x},
                              {"b_n_x", p.b},
                              {"gauss", p.gauss},
                              {"abs_err", std::fabs(p.b - p.gauss)}});
        text = json{{"n", n}, {"series", std::move(series)}}.dump() + "\n";
    } else {
        text = "x,b_n_x,gauss,abs_err\n";
        for (const Point& p : pts)
            text += fmt_double(p.x) + "," + fmt_double(p.b) + "," + fmt_double(p.gauss) + "," +
                    fmt_double(std::fabs(p.b - p.gauss)) + "\n";
    }
    write_output(text, out_path);
    return kOk;
}

int run_asym_rnk(unsigned n, const std::string& format, const std::string& out_path) {
    RowCache row = t_row(n);
    const std::uint64_t nf = factorial_u64(n);
    std::string text;
    if (format == "json") {
        json series = json::array();
        for (std::uint64_t k = 3; k + 3 <= nf; ++k) {
            ExactRatio r = relative_excess(row, static_cast<std::int64_t>(k));
            double rf = ratio_to_float(r);
            series.push_back({{"k", k},
                              {"r_num", r.num.get_str()},
                              {"r_den", r.den.get_str()},
                              {"r", rf},
                              {"n2_r", rf * n * n}});
        }
        text = json{{"n", n}, {"series", std::move(series)}}.dump() + "\n";
    } else {
        text = "k,r_num,r_den,r,n2_r\n";
        for (std::uint64_t k = 3; k + 3 <= nf; ++k) {
            ExactRatio r = relative_excess(row, static_cast<std::int64_t>(k));
            double rf = ratio_to_float(r);
            text += std::to_string(k) + "," + r.num.get_str() + "," + r.den.get_str() + "," +
                    fmt_double(rf) + "," + fmt_double(rf * n * n) + "\n";
        }
    }
    write_output(text, out_path);
    return kOk;
}

int run_asym_xn(unsigned n_max, const std::string& format, const std::string& out_path) {
    std::vector<ZSumExcessRow> rows = z_sum_excess(n_max);
    std::string text;
    if (format == "json") {
        json series = json::array();
        for (const auto& r : rows)
            series.push_back({{"n", r.n}, {"x_n", r.excess.get_str()}, {"ratio", r.ratio}});
        text = json{{"n_max", n_max}, {"series", std::move(series)}}.dump() + "\n";
    } else {
        text = "n,x_n,ratio\n";
        for (const auto& r : rows)
            text += std::to_string(r.n) + "," + r.excess.get_str() + "," + fmt_double(r.ratio) +
                    "\n";
    }
    write_output(text, out_path);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact orbit census of k-subsets of S_n under two-sided multiplication"};
    app.require_subcommand(1);
    int threads = 0;
    app.add_option("--threads", threads, "cap parallelism (default: all cores)");

    // value
    auto* value_cmd = app.add_subcommand("value", "print T(n,k)");
    unsigned value_n = 0;
    std::uint64_t value_k = 0;
    std::string value_format = "text";
    value_cmd->add_option("--n", value_n, "group degree n")->required();
    value_cmd->add_option("--k", value_k, "subset size k")->required();
    value_cmd->add_option("--format", value_format)->check(CLI::IsMember({"text", "json"}));

    // row
    auto* row_cmd = app.add_subcommand("row", "compute and emit the full row T(n, 0..n!)");
    unsigned row_n = 0;
    std::string row_format = "csv", row_out;
    bool row_force = false;
    row_cmd->add_option("--n", row_n, "group degree n")->required();
    row_cmd->add_option("--format", row_format)->check(CLI::IsMember({"csv", "json", "bfile"}));
    row_cmd->add_option("--out", row_out, "write to a file instead of stdout");
    row_cmd->add_flag("--force", row_force, "allow n=8");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    verify_cmd->require_subcommand(1);
    auto* v_table = verify_cmd->add_subcommand("table", "rows for n=3,4 against reference values");
    auto* v_oracle =
        verify_cmd->add_subcommand("oracle", "formula rows against the brute-force oracles");
    unsigned v_oracle_n = 4;
    std::uint64_t v_oracle_kmax = 3;
    v_oracle->add_option("--n", v_oracle_n, "max n for the row oracle (<= 4)");
    v_oracle->add_option("--enum-kmax", v_oracle_kmax, "max k for orbit enumeration at n=4");
    auto* v_bounds = verify_cmd->add_subcommand("bounds", "exact inequality sweeps");
    unsigned v_bounds_nmax = 12, v_bounds_pmax = 13, v_bounds_profile_n = 6;
    std::string v_bounds_csv;
    v_bounds->add_option("--nmax", v_bounds_nmax, "partition size limit (<= 14)");
    v_bounds->add_option("--pmax", v_bounds_pmax, "prime limit (<= 13)");
    v_bounds->add_option("--profile-nmax", v_bounds_profile_n, "pair-profile sweep limit (<= 6)");
    v_bounds->add_option("--csv", v_bounds_csv, "also write per-instance CSV to a file");
    auto* v_classical = verify_cmd->add_subcommand("classical", "classical binomial estimates");
    std::string v_classical_csv;
    v_classical->add_option("--csv", v_classical_csv, "also write per-instance CSV to a file");
    auto* v_problem5 =
        verify_cmd->add_subcommand("problem5", "max z_{nu^m}/z_nu against its closed form");
    unsigned v_p5_nmax = 20;
    v_problem5->add_option("--nmax", v_p5_nmax, "max n (<= 25)");

    // asym
    auto* asym_cmd = app.add_subcommand("asym", "emit plot-ready series");
    asym_cmd->require_subcommand(1);
    auto* a_bnx = asym_cmd->add_subcommand("bnx", "B_n(x) against exp(-x^2/2)");
    unsigned a_bnx_n = 4;
    double a_xmin = -4.0, a_xmax = 4.0, a_step = 0.1;
    std::string a_bnx_format = "csv", a_bnx_out;
    a_bnx->add_option("--n", a_bnx_n)->required();
    a_bnx->add_option("--xmin", a_xmin);
    a_bnx->add_option("--xmax", a_xmax);
    a_bnx->add_option("--step", a_step);
    a_bnx->add_option("--format", a_bnx_format)->check(CLI::IsMember({"csv", "json"}));
    a_bnx->add_option("--out", a_bnx_out);
    auto* a_rnk = asym_cmd->add_subcommand("rnk", "relative excess R(n,k) over k in [3, n!-3]");
    unsigned a_rnk_n = 4;
    std::string a_rnk_format = "csv", a_rnk_out;
    a_rnk->add_option("--n", a_rnk_n)->required();
    a_rnk->add_option("--format", a_rnk_format)->check(CLI::IsMember({"csv", "json"}));
    a_rnk->add_option("--out", a_rnk_out);
    auto* a_xn = asym_cmd->add_subcommand("xn", "X_n = sum z_nu - n! and its n^2/(2 n!) ratio");
    unsigned a_xn_nmax = 30;
    std::string a_xn_format = "csv", a_xn_out;
    a_xn->add_option("--nmax", a_xn_nmax);
    a_xn->add_option("--format", a_xn_format)->check(CLI::IsMember({"csv", "json"}));
    a_xn->add_option("--out", a_xn_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kUsage;
    }

    if (threads > 0) omp_set_num_threads(threads);

    try {
        if (*value_cmd) return run_value(value_n, value_k, value_format);
        if (*row_cmd) return run_row(row_n, row_format, row_out, row_force);
        if (*v_table) return run_verify_table();
        if (*v_oracle) return run_verify_oracle(v_oracle_n, v_oracle_kmax);
        if (*v_bounds)
            return run_verify_bounds(v_bounds_nmax, v_bounds_pmax, v_bounds_profile_n,
                                     v_bounds_csv);
        if (*v_classical) return run_verify_classical(v_classical_csv);
        if (*v_problem5) return run_verify_problem5(v_p5_nmax);
        if (*a_bnx) return run_asym_bnx(a_bnx_n, a_xmin, a_xmax, a_step, a_bnx_format, a_bnx_out);
        if (*a_rnk) return run_asym_rnk(a_rnk_n, a_rnk_format, a_rnk_out);
        if (*a_xn) return run_asym_xn(a_xn_nmax, a_xn_format, a_xn_out);
    } catch (const ResourceError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kResource;
    } catch (const IoError& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return kIo;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        // InternalError and friends: a formula/implementation bug, not bad input.
        std::cerr << "internal error (bug): " << e.what() << "\n";
        return kVerifyFail;
    }
    return kUsage;
}
