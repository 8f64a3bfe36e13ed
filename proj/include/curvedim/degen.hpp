#pragma once

#include <array>
#include <optional>

#include "curvedim/core.hpp"

namespace curvedim::degen {

// The four quasi-homogeneous systems an (a,b)-degeneration restricts to:
// the plane side keeps n-b points at degree a, the Hirzebruch side takes b
// points with central multiplicity a; the hat systems contain the double
// curve.
struct Subsystems {
    LinearSystem P;     // L(a, m0; n-b, m)
    LinearSystem Phat;  // L(a-1, m0; n-b, m)
    LinearSystem F;     // L(d, a; b, m)
    LinearSystem Fhat;  // L(d, a+1; b, m)
};

inline Subsystems subsystems(const LinearSystem& L, Int a, Int b) {
    if (b < 0 || b > L.n) throw std::invalid_argument("subsystems: requires 0 <= b <= n");
    if (a < 0) throw std::invalid_argument("subsystems: requires a >= 0");
    return {{a, L.m0, L.n - b, L.m},
            {a - 1, L.m0, L.n - b, L.m},
            {L.d, a, b, L.m},
            {L.d, a + 1, b, L.m}};
}

// Limit dimension from the four subsystem dimensions.  The restrictions to
// the double curve have dimensions r = l - lhat - 1 and live in a system of
// dimension a; both branch formulas agree on the boundary r_P + r_F = a-1.
inline Int limit_dim(Int lP, Int lPhat, Int lF, Int lFhat, Int a) {
    if (lP < -1 || lPhat < -1 || lF < -1 || lFhat < -1)
        throw std::invalid_argument("limit_dim: dimensions must be >= -1");
    Int rP = lP - lPhat - 1;
    Int rF = lF - lFhat - 1;
    if (rP < -1 || rF < -1 || rP > a || rF > a)
        throw std::invalid_argument("limit_dim: restricted system dimension out of range");
    if (rP + rF <= a - 1) return lPhat + lFhat + 1;
    return lP + lF - a;
}

inline LimitRule limit_rule(Int lP, Int lPhat, Int lF, Int lFhat, Int a) {
    Int rP = lP - lPhat - 1, rF = lF - lFhat - 1;
    return rP + rF <= a - 1 ? LimitRule::a : LimitRule::b;
}

// Interval ends for the high-degree induction, as functions of the offset
// gamma (a = d-m+gamma) and h (b = 2h+1).  dlow is kept rational: the
// D(m) values for m = 11, 12 turn on its exact ceiling.
inline Rational dlow(Int gamma, Int h, Int m) {
    if (m < 2) throw std::invalid_argument("dlow: requires m >= 2");
    if (m + 1 - gamma <= 0) throw std::invalid_argument("dlow: requires gamma < m+1");
    Int num = binom2(m) + binom2(gamma + 1) + checked_mul(2 * h + 1, binom2(m + 1)) -
              checked_mul(m, gamma) - 1;
    return Rational(num, m + 1 - gamma);
}

inline Int dhigh(Int gamma, Int h, Int m) { return m + h * m - 1 + h + h * gamma; }

// Degrees >= D(m) always admit an interval witness.
inline Int capital_D(Int m) {
    if (m < 2) throw std::invalid_argument("capital_D: requires m >= 2");
    Int h0 = ceil_div(m * m - 1, 3 * m + 4);
    return std::max(floor_div(23 * m + 16, 6), dlow(-1, h0, m).ceil());
}

struct IntervalParams {
    Int gamma{0};  // in {-1, 0, 1}
    Int h{0};
};

// Smallest (h, gamma) with dlow(gamma,h) <= d <= dhigh(gamma,h) and h at
// least the gap bound (m^2-1)/(3m+4); the three gamma-intervals at each h
// chain into one, and consecutive h-intervals overlap from that h on.
inline std::optional<IntervalParams> interval_witness(Int d, Int m) {
    if (m < 2) throw std::invalid_argument("interval_witness: requires m >= 2");
    Int h0 = ceil_div(m * m - 1, 3 * m + 4);
    for (Int h = h0;; ++h) {
        if (dlow(-1, h, m) > Rational(d)) return std::nullopt;  // dlow increases with h
        for (Int gamma : {-1, 0, 1}) {
            if (dlow(gamma, h, m) <= Rational(d) && d <= dhigh(gamma, h, m))
                return IntervalParams{gamma, h};
        }
    }
}

// Searches the documented candidate space for an (a,b)-degeneration whose
// limit dimension equals the expected dimension of L(d;n,m):
// a in [d-m-2, d-m+1] (cap [1,d]) ordered by |a-(d-m)|, b in [1, min(n,d)]
// descending.  The provider must return certified dimensions; it may throw
// undecided_error for a subsystem it cannot certify, which skips just that
// candidate.  No candidate validating is a FAIL, reported as nullopt.
template <typename Provider>
std::optional<DegenerationWitness> search_witness(Int d, Int n, Int m, Provider&& provide) {
    LinearSystem L = homogeneous_system(d, n, m);
    Int e = expected_dim(L);
    Int bmax = std::min(n, d);
    for (Int gamma : std::array<Int, 4>{0, -1, 1, -2}) {
        Int a = d - m + gamma;
        if (a < 1 || a > d) continue;
        for (Int b = bmax; b >= 1; --b) {
            Subsystems sub = subsystems(L, a, b);
            Int lP, lPhat, lF, lFhat;
            try {
                lP = provide(sub.P).value;
                lPhat = provide(sub.Phat).value;
                lF = provide(sub.F).value;
                lFhat = provide(sub.Fhat).value;
            } catch (const undecided_error&) {
                continue;
            }
            Int l0 = limit_dim(lP, lPhat, lF, lFhat, a);
            if (l0 == e)
                return DegenerationWitness{a, b, lP, lPhat, lF, lFhat, l0,
                                           limit_rule(lP, lPhat, lF, lFhat, a)};
        }
    }
    return std::nullopt;
}

}  // namespace curvedim::degen
