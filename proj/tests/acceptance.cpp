// Acceptance suite: one pass/fail line per criterion, exit nonzero if any
// hard criterion fails.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "curvedim/curvedim.hpp"

using namespace curvedim;

namespace {

int failures = 0;

struct Criterion {
    explicit Criterion(int number, std::string title)
        : number_(number), title_(std::move(title)), start_(std::chrono::steady_clock::now()) {}

    void fail(const std::string& why) {
        ok_ = false;
        details_.push_back("FAIL: " + why);
    }
    void warn(const std::string& why) { details_.push_back("warn: " + why); }

    ~Criterion() {
        auto secs = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start_)
                        .count() /
                    1000.0;
        char line[256];
        std::snprintf(line, sizeof line, "[criterion %d] %-34s %s  (%.1f s)", number_,
                      title_.c_str(), ok_ ? "PASS" : "FAIL", secs);
        std::cout << line << '\n';
        for (const auto& d : details_) std::cout << "    " << d << '\n';
        if (!ok_) ++failures;
    }

    int number_;
    std::string title_;
    bool ok_{true};
    std::vector<std::string> details_;
    std::chrono::steady_clock::time_point start_;
};

std::string sys_str(const LinearSystem& L) {
    std::ostringstream os;
    os << "L(" << L.d;
    if (L.m0) os << "," << L.m0;
    os << ";" << L.n << "," << L.m << ")";
    return os.str();
}

}  // namespace

int main() {
    engine::DimensionEngine eng;  // shared memo across the criteria

    {  // 1. D(m) row of the range table, exact
        Criterion c(1, "D(m) table");
        static const Int want[] = {9, 13, 17, 20, 24, 28, 32, 36, 40, 50, 55};
        for (Int m = 2; m <= 12; ++m) {
            Int got = degen::capital_D(m) - 1;
            if (got != want[m - 2])
                c.fail("D(" + std::to_string(m) + ")-1 = " + std::to_string(got) +
                       ", published " + std::to_string(want[m - 2]));
        }
    }

    {  // 2. replay of every published witness row through the published pair
        Criterion c(2, "published-witness replay");
        int rows = 0;
        for (Int m = 2; m <= 12; ++m) {
            for (const auto& check : eng.verify_published_tables(m)) {
                if (!check.v_ok) {
                    c.fail("v mismatch at (" + std::to_string(check.row.d) + "," +
                           std::to_string(check.row.n) + "," + std::to_string(check.row.m) + ")");
                    continue;
                }
                if (check.row.fail()) continue;  // certificates are criterion 3's
                ++rows;
                if (!check.ok)
                    c.fail("(" + std::to_string(check.row.d) + "," + std::to_string(check.row.n) +
                           "," + std::to_string(check.row.m) + ") via (" +
                           std::to_string(check.row.a) + "," + std::to_string(check.row.b) +
                           "): " + check.detail);
            }
        }
        if (rows != 160) c.fail("expected 160 witness rows, saw " + std::to_string(rows));
    }

    {  // 3. the twelve exceptional systems, exact rank certificates
        Criterion c(3, "exceptional-case certificates");
        for (const auto& row : tables::kExceptionalRows) {
            LinearSystem L = homogeneous_system(row.d, row.n, row.m);
            if (virtual_dim(L) != row.v) {
                c.fail(sys_str(L) + ": published v is wrong");
                continue;
            }
            if (row.v < 0) {
                auto [empty, cert] = oracle::certify_empty(L, eng.config());
                if (!empty || cert.best_rank != cert.cols)
                    c.fail(sys_str(L) + " not certified empty");
            } else {
                auto cert = oracle::certify_dim(L, row.v, eng.config());
                if (!cert) c.fail(sys_str(L) + " dimension " + std::to_string(row.v) +
                                  " not certified");
            }
        }
    }

    std::vector<engine::ConjectureCertificate> certs;  // reused by criterion 9
    {  // 4. full conjecture runs
        Criterion c(4, "full conjecture runs");
        for (Int m = 2; m <= 12; ++m) {
            auto cert = eng.check_conjecture(m, degen::capital_D(m) + 50);
            if (!cert.verified()) {
                std::string who;
                for (const auto& L : cert.unresolved) who += " " + sys_str(L);
                c.fail("m=" + std::to_string(m) + " incomplete:" + who);
            }
            if (m <= 5 && cert.middle_range_oracle_fallbacks != 0)
                c.fail("m=" + std::to_string(m) + " needed " +
                       std::to_string(cert.middle_range_oracle_fallbacks) +
                       " oracle fallbacks in the middle range");
            certs.push_back(std::move(cert));
        }
    }

    {  // 5. identity suite
        Criterion c(5, "identity suite");
        std::mt19937_64 rng(2026);
        std::uniform_int_distribution<Int> u(0, 50);
        for (int i = 0; i < 1000; ++i) {  // v = L^2 - g + 1
            LinearSystem L{u(rng), u(rng), u(rng), u(rng)};
            if (!riemann_roch_identity(L)) c.fail("Riemann-Roch identity at " + sys_str(L));
        }
        for (int i = 0; i < 1000; ++i) {  // the three splitting identities
            LinearSystem L{u(rng), u(rng), u(rng), u(rng)};
            Int a = u(rng), b = u(rng) % (L.n + 1);
            auto s = degen::subsystems(L, a, b);
            Int v = virtual_dim(L);
            bool ok = v == virtual_dim(s.P) + virtual_dim(s.F) - a &&
                      v == virtual_dim(s.F) + virtual_dim(s.Phat) + 1 &&
                      v == virtual_dim(s.P) + virtual_dim(s.Fhat) + 1;
            if (!ok) c.fail("splitting identities at " + sys_str(L));
        }
        std::uniform_int_distribution<Int> ur(-1, 25);
        int boundary = 0;
        while (boundary < 1000) {  // limit rule branches agree at r_P + r_F = a-1
            Int rP = ur(rng), rF = ur(rng), lPhat = ur(rng), lFhat = ur(rng);
            Int a = rP + rF + 1;
            if (a < 0 || rP > a || rF > a) continue;
            Int lP = lPhat + 1 + rP, lF = lFhat + 1 + rF;
            if (degen::limit_dim(lP, lPhat, lF, lFhat, a) != lP + lF - a ||
                lPhat + lFhat + 1 != lP + lF - a)
                c.fail("limit rule boundary disagreement");
            ++boundary;
        }
        for (Int m = 2; m <= 40; ++m)  // interval matching
            for (Int h = 0; h <= 60; ++h) {
                if (Rational(degen::dhigh(-1, h, m)) != degen::dlow(0, h, m) ||
                    Rational(degen::dhigh(0, h, m)) != degen::dlow(1, h, m))
                    c.fail("interval matching at m=" + std::to_string(m) +
                           " h=" + std::to_string(h));
            }
    }

    {  // 6. closed forms versus rank certificates on the grid
        Criterion c(6, "oracle vs closed forms");
        int compared = 0;
        for (Int m = 2; m <= 5; ++m)
            for (Int d = m; d <= 14; ++d)
                for (Int b = 0; b <= 8; ++b)
                    for (Int k = -1; k <= 2; ++k) {
                        LinearSystem L{d, d - m + k, b, m};
                        if (L.m0 < 1) continue;
                        auto closed = cremona::dim_quasi(L);
                        if (!closed) continue;
                        auto certified = oracle::generic_dim(L, eng.config());
                        ++compared;
                        if (certified.value != closed->value)
                            c.fail(sys_str(L) + ": closed form " + std::to_string(closed->value) +
                                   " vs rank " + std::to_string(certified.value));
                        else if (oracle::certificate_of(certified).status != CertStatus::Certified)
                            c.fail(sys_str(L) + ": rank value not certified");
                    }
        auto anchor_d = cremona::dim_quasi({7, 4, 4, 3});
        auto below_b = cremona::dim_quasi({8, 3, 4, 4});
        if (!anchor_d || anchor_d->value != 2) c.fail("L(7,4;4,3) should give 2");
        if (!below_b || below_b->value != 1) c.fail("L(8,3;4,4) should give 1");
        if (compared < 500) c.fail("grid unexpectedly small: " + std::to_string(compared));
    }

    {  // 7. (-1)-special spot checks
        Criterion c(7, "(-1)-special spot checks");
        struct Spot { Int d, n, m, dim, e; } spots[] = {{4, 2, 3, 3, 2}, {24, 6, 10, 0, -1}};
        for (const auto& s : spots) {
            LinearSystem L = homogeneous_system(s.d, s.n, s.m);
            if (classify::conjectured_dim(s.d, s.n, s.m) != s.dim)
                c.fail(sys_str(L) + ": conjectured dimension is off");
            if (expected_dim(L) != s.e) c.fail(sys_str(L) + ": expected dimension is off");
            auto r = oracle::generic_dim(L, eng.config());
            if (r.value != s.dim || oracle::certificate_of(r).status != CertStatus::Certified)
                c.fail(sys_str(L) + ": rank certificate disagrees");
        }
    }

    {  // 8. engine versus oracle on the homogeneous grid
        Criterion c(8, "engine vs oracle grid");
        for (Int m = 1; m <= 4; ++m)
            for (Int d = 1; d <= 12; ++d) {
                Int n0 = engine::critical_n(d, m);
                for (Int n = 0; n <= n0 + 1; ++n) {
                    auto fast = eng.dim_homogeneous(d, n, m);
                    auto certified = oracle::generic_dim(homogeneous_system(d, n, m), eng.config());
                    if (fast.value != certified.value ||
                        oracle::certificate_of(certified).status != CertStatus::Certified) {
                        c.fail("(" + std::to_string(d) + "," + std::to_string(n) + "," +
                               std::to_string(m) + "): engine " + std::to_string(fast.value) +
                               " vs rank " + std::to_string(certified.value));
                    }
                }
            }
    }

    {  // 9. search-failure reproduction (soft beyond the published rows)
        Criterion c(9, "FAIL reproduction (soft)");
        std::set<std::array<Int, 3>> published;
        for (const auto& row : tables::kWitnessRows)
            if (row.fail()) published.insert({row.d, row.n, row.m});
        // the published failures must fail here too
        for (const auto& f : published) {
            if (eng.search_witness(f[0], f[1], f[2]))
                c.fail("search found a witness for published failure (" + std::to_string(f[0]) +
                       "," + std::to_string(f[1]) + "," + std::to_string(f[2]) + ")");
        }
        // our search space is narrower than the authors'; report (soft) any
        // extra failures it produces
        std::set<std::array<Int, 3>> ours;
        for (const auto& cert : certs)
            for (const auto& L : cert.fail_cases)
                if (L.d >= 3 * cert.m + 1 && L.d <= degen::capital_D(cert.m) - 1)
                    ours.insert({L.d, L.n, L.m});
        for (const auto& f : ours)
            if (!published.count(f))
                c.warn("search also fails on (" + std::to_string(f[0]) + "," +
                       std::to_string(f[1]) + "," + std::to_string(f[2]) +
                       "), resolved by rank certificate");
    }

    std::cout << (failures == 0 ? "ACCEPTANCE: all criteria passed"
                                : "ACCEPTANCE: " + std::to_string(failures) + " criteria failed")
              << std::endl;
    return failures == 0 ? 0 : 1;
}
