#pragma once

#include <array>
#include <cmath>
#include <vector>
#include <optional>

#include "curvedim/core.hpp"

namespace curvedim::classify {

// A homogeneous class that is a sum of `count` pairwise disjoint (-1)-curves,
// each in the class `component` (quasi-homogeneous: the component's central
// multiplicity sits on one of the configuration's points).
struct MinusOneConfiguration {
    LinearSystem system;
    LinearSystem component;
    Int count{1};
};

// The complete list of homogeneous (-1)-configurations.
inline const std::array<MinusOneConfiguration, 6>& homogeneous_configurations() {
    static const std::array<MinusOneConfiguration, 6> table = {{
        {{1, 0, 2, 1}, {1, 0, 2, 1}, 1},    // line through 2 points
        {{2, 0, 5, 1}, {2, 0, 5, 1}, 1},    // conic through 5 points
        {{3, 0, 3, 2}, {1, 0, 2, 1}, 3},    // 3 lines, each through 2 of 3 points
        {{12, 0, 6, 5}, {2, 0, 5, 1}, 6},   // 6 conics, each through 5 of 6 points
        {{21, 0, 7, 8}, {3, 2, 6, 1}, 7},   // 7 cubics through 6 points, double at another
        {{48, 0, 8, 17}, {6, 3, 7, 2}, 8},  // 8 sextics double at 7 points, triple at another
    }};
    return table;
}

// Pairing of a homogeneous class against a component class whose central
// point is one of the homogeneous class's own points: the component's m0
// meets the equal multiplicity m, its n' remaining points meet m as well.
inline Int intersect_on_shared_points(const LinearSystem& hom, const LinearSystem& comp) {
    if (!hom.homogeneous())
        throw std::invalid_argument("intersect_on_shared_points: first argument must be homogeneous");
    Int used = comp.n + (comp.m0 > 0 ? 1 : 0);
    if (used > hom.n)
        throw std::invalid_argument("intersect_on_shared_points: component touches too many points");
    Int dd = checked_mul(hom.d, comp.d);
    Int cc = checked_mul(hom.m, comp.m0);
    Int pp = checked_mul(comp.n, checked_mul(hom.m, comp.m));
    return checked_sub(checked_sub(dd, cc), pp);
}

// Witness that L(d;n,m) = M + N*A for a homogeneous (-1)-configuration A,
// with v(M) >= 0.  The conjecture predicts dim L = v(M) for these.
struct MinusOneDecomposition {
    MinusOneConfiguration configuration;
    Int multiple{2};          // N
    LinearSystem residual;    // M, homogeneous
    Int predicted_dim{0};     // v(M)
    Int family_param{0};      // mu (n = 2, 3) or k (n = 5..8)
};

// Detects (-1)-speciality of the homogeneous system L(d;n,m) by inverting
// the parametrization L = M + N*A of the matching configuration family.
// Each case's two linear equations have determinant +-1, so the parameters
// are integers; the system is (-1)-special exactly when they satisfy
// N >= 2 and k (or mu) >= 0.
inline std::optional<MinusOneDecomposition> minus_one_special(Int d, Int n, Int m) {
    if (d < 0 || n < 0 || m < 0)
        throw std::invalid_argument("minus_one_special: d, n, m must be non-negative");
    const auto& cfg = homogeneous_configurations();

    auto build = [&](const MinusOneConfiguration& a, Int multiple, Int param,
                     LinearSystem residual) -> MinusOneDecomposition {
        return {a, multiple, residual, virtual_dim(residual), param};
    };

    switch (n) {
        case 2: {  // d = 2mu + N, m = mu + N
            Int N = 2 * m - d, mu = d - m;
            if (N >= 2 && mu >= 0) return build(cfg[0], N, mu, {2 * mu, 0, 2, mu});
            break;
        }
        case 3: {  // d = 2mu + 3N, m = mu + 2N
            Int N = 2 * m - d, mu = 2 * d - 3 * m;
            if (N >= 2 && mu >= 0) return build(cfg[2], N, mu, {2 * mu, 0, 3, mu});
            break;
        }
        case 5: {  // d = 5k + 2N, m = 2k + N
            Int k = d - 2 * m, N = 5 * m - 2 * d;
            if (N >= 2 && k >= 0) return build(cfg[1], N, k, {5 * k, 0, 5, 2 * k});
            break;
        }
        case 6: {  // d = 5k + 12N, m = 2k + 5N
            Int k = 5 * d - 12 * m, N = 5 * m - 2 * d;
            if (N >= 2 && k >= 0) return build(cfg[3], N, k, {5 * k, 0, 6, 2 * k});
            break;
        }
        case 7: {  // d = 8k + 21N, m = 3k + 8N
            Int k = 8 * d - 21 * m, N = 8 * m - 3 * d;
            if (N >= 2 && k >= 0) return build(cfg[4], N, k, {8 * k, 0, 7, 3 * k});
            break;
        }
        case 8: {  // d = 17k + 48N, m = 6k + 17N
            Int k = 17 * d - 48 * m, N = 17 * m - 6 * d;
            if (N >= 2 && k >= 0) return build(cfg[5], N, k, {17 * k, 0, 8, 6 * k});
            break;
        }
        default: break;
    }
    return std::nullopt;
}

// The conjectured dimension of L(d;n,m): the expected dimension, except on
// the six (-1)-special families where the residual's Riemann-Roch count
// takes over.
inline Int conjectured_dim(Int d, Int n, Int m) {
    Int e = expected_dim(homogeneous_system(d, n, m));
    if (auto dec = minus_one_special(d, n, m)) return std::max(e, dec->predicted_dim);
    return e;
}

// For n <= 9 the conjecture is a theorem, so the conjectured value is the
// dimension.
inline DimensionResult dim_small_n(Int d, Int n, Int m) {
    if (n > 9) throw std::invalid_argument("dim_small_n: requires n <= 9");
    if (d < 0) return make_result(homogeneous_system(d, n, m), -1, ProvEmptyByConvention{});
    return make_result(homogeneous_system(d, n, m), conjectured_dim(d, n, m), ProvSmallN{});
}

// Quasi-homogeneous (-1)-classes on the same point set as L: classes
// A = L(delta, mu0; n, mu) with A^2 = -1 and genus 0 (hence v = 0, hence
// effective).  delta is capped by the degree they could be subtracted from.
inline std::vector<LinearSystem> minus_one_classes(Int n, Int max_degree) {
    std::vector<LinearSystem> out;
    for (Int delta = 1; delta <= max_degree; ++delta) {
        for (Int mu = 0; checked_mul(n, checked_mul(mu, mu)) <= delta * delta + 1; ++mu) {
            Int rest = delta * delta - n * mu * mu + 1;  // = mu0^2
            if (rest < 0) break;
            Int mu0 = static_cast<Int>(std::sqrt(static_cast<double>(rest)));
            while (mu0 * mu0 < rest) ++mu0;
            if (mu0 * mu0 != rest || mu0 > delta) continue;
            LinearSystem A{delta, mu0, n, mu};
            if (genus(A) == 0) out.push_back(A);
        }
    }
    return out;
}

// Effectivity-based lower bound for the dimension of any quasi-homogeneous
// system, used to turn the oracle's rank upper bounds into equality
// certificates.  Subtracting copies of an effective class A can only
// shrink: dim L >= dim(L - N*A) >= e(L - N*A).  Candidates:
//   - for homogeneous systems, the classified configuration families;
//   - the n lines through the central point (a disjoint (-1)-configuration
//     meeting L in d - m0 - m per component);
//   - every quasi-homogeneous (-1)-class on the same points, subtracted
//     N = -L.A times.
// Exceptional multiples with negative multiplicity after a subtraction are
// fixed parts and are dropped before taking e.
inline Int effective_lower_bound(const LinearSystem& L, Int depth = 3) {
    Int best = L.d < 0 ? -1 : expected_dim(L);
    if (L.d < 0 || L.n < 0 || L.m < 0 || L.m0 < 0) return best;

    if (L.homogeneous()) {
        if (auto dec = minus_one_special(L.d, L.n, L.m))
            best = std::max(best, dec->predicted_dim);
        return best;
    }
    if (depth <= 0) return best;

    auto recurse = [&](LinearSystem M) {
        if (M.d < 0) return;
        M.m0 = std::max<Int>(0, M.m0);
        M.m = std::max<Int>(0, M.m);
        best = std::max(best, effective_lower_bound(M, depth - 1));
    };

    Int nl = L.m0 + L.m - L.d;  // -L.(line through p0 and p_i)
    if (L.n >= 1 && nl >= 1)
        recurse({L.d - nl * L.n, L.m0 - nl * L.n, L.n, L.m - nl});

    if (L.n >= 1) {
        for (const LinearSystem& A : minus_one_classes(L.n, L.d)) {
            Int na = -intersect(L, A);
            if (na >= 1 && na * A.d <= L.d)
                recurse({L.d - na * A.d, L.m0 - na * A.m0, L.n, L.m - na * A.m});
        }
    }
    return best;
}

}  // namespace curvedim::classify
