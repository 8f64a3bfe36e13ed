#pragma once

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "curvedim/curvedim.hpp"

namespace curvedim::cli {

// Exit codes: 0 verified/computed, 1 refuted/mismatch, 2 usage error,
// 3 undecided.
enum ExitCode : int { kOk = 0, kRefuted = 1, kUsage = 2, kUndecided = 3 };

inline std::string default_cache_path() {
    if (const char* env = std::getenv("CURVEDIM_CACHE")) return env;
    if (const char* xdg = std::getenv("XDG_DATA_HOME"))
        return std::string(xdg) + "/curvedim/memo.txt";
    if (const char* home = std::getenv("HOME"))
        return std::string(home) + "/.local/share/curvedim/memo.txt";
    return "curvedim-memo.txt";
}

struct TableRow {
    Int d, n, m, v;
    bool found;
    Int a, b;
};

// Middle-range rows for this m, in the published layout: one row at n0+1
// when its count is exactly -1 (that emptiness covers the n0 system), two
// rows otherwise.
inline std::vector<TableRow> generate_table(engine::DimensionEngine& eng, Int m) {
    std::vector<TableRow> rows;
    Int lo = 3 * m + 1, hi = degen::capital_D(m) - 1;
    for (Int d = lo; d <= hi; ++d) {
        Int n0 = engine::critical_n(d, m);
        Int v1 = virtual_dim(homogeneous_system(d, n0 + 1, m));
        auto emit = [&](Int n, Int v) {
            auto w = eng.search_witness(d, n, m);
            rows.push_back({d, n, m, v, w.has_value(), w ? w->a : -1, w ? w->b : -1});
        };
        if (v1 != -1) emit(n0, virtual_dim(homogeneous_system(d, n0, m)));
        emit(n0 + 1, v1);
    }
    return rows;
}

inline void render_rows(std::ostream& out, const std::vector<TableRow>& rows, const std::string& format) {
    if (format == "csv") {
        out << "d,n,m,v,status,a,b\n";
        for (const auto& r : rows) {
            out << r.d << ',' << r.n << ',' << r.m << ',' << r.v << ','
                << (r.found ? "witness" : "FAIL") << ',';
            if (r.found) out << r.a << ',' << r.b;
            else out << ',';
            out << '\n';
        }
        return;
    }
    for (const auto& r : rows) {
        out << std::setw(3) << r.d << ' ' << std::setw(3) << r.n << ' ' << std::setw(3) << r.m
            << ' ' << std::setw(5) << r.v << "  ";
        if (r.found) out << '(' << r.a << ',' << r.b << ')';
        else out << "FAIL";
        out << '\n';
    }
}

inline std::vector<TableRow> parse_csv(std::istream& in) {
    std::vector<TableRow> rows;
    std::string line;
    std::getline(in, line);  // header
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream ss(line);
        TableRow r{};
        std::string status;
        ss >> r.d >> r.n >> r.m >> r.v >> status;
        r.found = status == "witness";
        if (r.found) ss >> r.a >> r.b;
        else r.a = r.b = -1;
        rows.push_back(r);
    }
    return rows;
}

inline void save_quietly(engine::MemoStore& memo, const std::string& path) {
    try {
        memo.save(path);
    } catch (const std::exception&) {
        // cache persistence is best-effort
    }
}

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"dimension of plane-curve linear systems with general multiple base points"};
    app.require_subcommand(1);

    std::string cache_path = default_cache_path();

    // dim <d> <n> <m> [--m0 M0] [--method auto|degen|oracle|cremona]
    auto* dim_cmd = app.add_subcommand("dim", "compute the dimension of L(d, m0; n, m)");
    Int q_d = 0, q_n = 0, q_m = 0, q_m0 = 0;
    std::string method = "auto";
    dim_cmd->add_option("d", q_d, "degree")->required();
    dim_cmd->add_option("n", q_n, "number of general points")->required()->check(CLI::NonNegativeNumber);
    dim_cmd->add_option("m", q_m, "multiplicity at the general points")->required()->check(CLI::NonNegativeNumber);
    dim_cmd->add_option("--m0", q_m0, "central multiplicity (default 0)")->check(CLI::NonNegativeNumber);
    dim_cmd->add_option("--method", method, "resolution method")
        ->check(CLI::IsMember({"auto", "degen", "oracle", "cremona"}));

    // check <m> [--dmax D] [--jobs J]
    auto* check_cmd = app.add_subcommand("check", "verify the conjecture for one multiplicity");
    Int c_m = 0, c_dmax = 0, c_jobs = 1;
    check_cmd->add_option("m", c_m, "multiplicity")->required()->check(CLI::PositiveNumber);
    check_cmd->add_option("--dmax", c_dmax, "largest degree to check (default D(m)+50)");
    check_cmd->add_option("--jobs", c_jobs, "parallel degree checks")->check(CLI::PositiveNumber);

    // table <m> [--format text|csv] [--compare]
    auto* table_cmd = app.add_subcommand("table", "reproduce the middle-range witness table");
    Int t_m = 0;
    std::string t_format = "text";
    bool t_compare = false;
    table_cmd->add_option("m", t_m, "multiplicity")->required()->check(CLI::PositiveNumber);
    table_cmd->add_option("--format", t_format, "output format")->check(CLI::IsMember({"text", "csv"}));
    table_cmd->add_flag("--compare", t_compare, "compare against the published rows");

    // verify-witness <d> <n> <m> <a> <b>
    auto* vw_cmd = app.add_subcommand("verify-witness", "evaluate one (a,b)-degeneration");
    Int w_d = 0, w_n = 0, w_m = 0, w_a = 0, w_b = 0;
    vw_cmd->add_option("d", w_d)->required();
    vw_cmd->add_option("n", w_n)->required();
    vw_cmd->add_option("m", w_m)->required();
    vw_cmd->add_option("a", w_a)->required();
    vw_cmd->add_option("b", w_b)->required();

    // oracle <d> <m0> <n> <m> [--prime P] [--trials T] [--seed S]
    auto* or_cmd = app.add_subcommand("oracle", "rank certificate for L(d, m0; n, m)");
    Int o_d = 0, o_m0 = 0, o_n = 0, o_m = 0;
    oracle::OracleConfig ocfg;
    or_cmd->add_option("d", o_d)->required();
    or_cmd->add_option("m0", o_m0)->required()->check(CLI::NonNegativeNumber);
    or_cmd->add_option("n", o_n)->required()->check(CLI::NonNegativeNumber);
    or_cmd->add_option("m", o_m)->required()->check(CLI::NonNegativeNumber);
    or_cmd->add_option("--prime", ocfg.prime, "field characteristic");
    or_cmd->add_option("--trials", ocfg.trials, "independent point sets")->check(CLI::PositiveNumber);
    or_cmd->add_option("--seed", ocfg.seed, "random seed");

    // cache [--path FILE] [--clear]
    auto* cache_cmd = app.add_subcommand("cache", "inspect or clear the memo store");
    bool cache_clear = false;
    cache_cmd->add_option("--path", cache_path, "memo file (default: CURVEDIM_CACHE or the user data dir)");
    cache_cmd->add_flag("--clear", cache_clear, "remove all cached records");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n' << app.help();
        return kUsage;
    }

    auto print_result = [&](const DimensionResult& r) {
        out << "dim=" << r.value << " v=" << r.virt << " special=" << (r.special ? "true" : "false")
            << " provenance=" << provenance_tag(r.provenance) << '\n';
    };

    try {
        if (*dim_cmd) {
            engine::DimensionEngine eng;
            eng.memo().load(cache_path);
            LinearSystem L{q_d, q_m0, q_n, q_m};
            DimensionResult r;
            if (method == "oracle") {
                r = oracle::generic_dim(L);
                if (std::holds_alternative<ProvOracle>(r.provenance)) {
                    const auto& cert = oracle::certificate_of(r);
                    oracle::render_certificate(out, L, cert);
                    if (cert.status != CertStatus::Certified) {
                        print_result(r);
                        err << "rank bound not certified (no matching lower bound)\n";
                        return kUndecided;
                    }
                }
            } else if (method == "cremona") {
                auto closed = cremona::dim_quasi(L);
                if (!closed) {
                    err << "no closed form applies to this system\n";
                    return kUndecided;
                }
                r = *closed;
            } else if (method == "degen") {
                if (!L.homogeneous()) {
                    err << "the degeneration search applies to homogeneous systems\n";
                    return kUsage;
                }
                auto w = eng.search_witness(q_d, q_n, q_m);
                if (!w) {
                    err << "no validating (a,b) pair in the search space\n";
                    return kUndecided;
                }
                r = make_result(L, w->l0, ProvDegeneration{*w});
                out << "witness a=" << w->a << " b=" << w->b << '\n';
            } else {
                r = L.homogeneous() ? eng.dim_homogeneous(q_d, q_n, q_m) : eng.provide(L);
            }
            print_result(r);
            save_quietly(eng.memo(), cache_path);
            return kOk;
        }

        if (*check_cmd) {
            engine::DimensionEngine eng;
            eng.memo().load(cache_path);
            if (c_dmax == 0) c_dmax = degen::capital_D(c_m) + 50;
            auto cert = eng.check_conjecture(c_m, c_dmax, c_jobs);
            out << "m=" << cert.m << " d_max=" << cert.d_max << " status="
                << (cert.verified() ? "Verified" : "Incomplete") << '\n';
            out << "middle range [" << 3 * c_m + 1 << ", " << degen::capital_D(c_m) - 1
                << "], oracle fallbacks there: " << cert.middle_range_oracle_fallbacks << '\n';
            for (const auto& L : cert.fail_cases)
                out << "  rank-certified: L(" << L.d << ";" << L.n << "," << L.m << ")\n";
            for (const auto& L : cert.unresolved)
                out << "  UNRESOLVED: L(" << L.d << ";" << L.n << "," << L.m << ")\n";
            save_quietly(eng.memo(), cache_path);
            return cert.verified() ? kOk : kUndecided;
        }

        if (*table_cmd) {
            engine::DimensionEngine eng;
            eng.memo().load(cache_path);
            auto rows = generate_table(eng, t_m);
            render_rows(out, rows, t_format);
            save_quietly(eng.memo(), cache_path);
            if (t_compare) {
                if (t_m < 2 || t_m > 12) {
                    err << "no published rows for m=" << t_m << '\n';
                    return kUsage;
                }
                int mismatches = 0;
                for (const auto& ref : tables::kWitnessRows) {
                    if (ref.m != t_m) continue;
                    auto it = std::find_if(rows.begin(), rows.end(), [&](const TableRow& r) {
                        return r.d == ref.d && r.n == ref.n;
                    });
                    if (it == rows.end()) {
                        out << "compare: no generated row for (" << ref.d << "," << ref.n << ")\n";
                        ++mismatches;
                        continue;
                    }
                    if (it->v != ref.v || it->found == ref.fail()) {
                        out << "compare: MISMATCH at (" << ref.d << "," << ref.n << "): published v="
                            << ref.v << (ref.fail() ? " FAIL" : " witness") << ", got v=" << it->v
                            << (it->found ? " witness" : " FAIL") << '\n';
                        ++mismatches;
                    }
                }
                out << "compare: " << (mismatches ? "MISMATCH" : "match") << '\n';
                return mismatches ? kRefuted : kOk;
            }
            return kOk;
        }

        if (*vw_cmd) {
            engine::DimensionEngine eng;
            eng.memo().load(cache_path);
            LinearSystem L = homogeneous_system(w_d, w_n, w_m);
            auto sub = degen::subsystems(L, w_a, w_b);
            auto show = [&](const char* name, const LinearSystem& S, Int value) {
                out << name << " = L(" << S.d << "," << S.m0 << ";" << S.n << "," << S.m
                    << ") dim " << value << '\n';
            };
            Int lP = eng.provide(sub.P).value, lPhat = eng.provide(sub.Phat).value;
            Int lF = eng.provide(sub.F).value, lFhat = eng.provide(sub.Fhat).value;
            show("L_P   ", sub.P, lP);
            show("L_Phat", sub.Phat, lPhat);
            show("L_F   ", sub.F, lF);
            show("L_Fhat", sub.Fhat, lFhat);
            Int l0 = degen::limit_dim(lP, lPhat, lF, lFhat, w_a);
            Int e = expected_dim(L);
            out << "l0=" << l0 << " e=" << e << (l0 == e ? " (validates)" : " (does not validate)") << '\n';
            save_quietly(eng.memo(), cache_path);
            return l0 == e ? kOk : kRefuted;
        }

        if (*or_cmd) {
            LinearSystem L{o_d, o_m0, o_n, o_m};
            DimensionResult r = oracle::generic_dim(L, ocfg);
            if (std::holds_alternative<ProvOracle>(r.provenance))
                oracle::render_certificate(out, L, oracle::certificate_of(r));
            print_result(r);
            if (std::holds_alternative<ProvOracle>(r.provenance) &&
                oracle::certificate_of(r).status != CertStatus::Certified)
                return kUndecided;
            return kOk;
        }

        if (*cache_cmd) {
            namespace fs = std::filesystem;
            if (cache_clear) {
                std::error_code ec;
                fs::remove(cache_path, ec);
                out << "cleared " << cache_path << '\n';
                return kOk;
            }
            engine::MemoStore memo;
            std::size_t n = memo.load(cache_path, &err);
            out << "path: " << cache_path << '\n' << "records: " << n << '\n';
            return kOk;
        }
    } catch (const undecided_error& e) {
        err << "undecided: " << e.what() << '\n';
        return kUndecided;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace curvedim::cli
