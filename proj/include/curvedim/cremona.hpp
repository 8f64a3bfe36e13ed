#pragma once

#include <optional>

#include "curvedim/classify.hpp"
#include "curvedim/core.hpp"

namespace curvedim::cremona {

// Euclidean data the closed forms case on: d = q*m + mu (anchor) or
// d = q*(m-1) + mu (below), and b = 2h + eps.
struct AnchorCaseParams {
    Int q{0};
    Int mu{0};
    Int h{0};
    Int eps{0};
};

inline AnchorCaseParams split(Int d, Int modulus, Int b) {
    return {d / modulus, d % modulus, b / 2, b % 2};
}

namespace detail {

// Exact dimensions for the degenerate shapes degree reductions can exit
// into: negative degree, multiplicities <= 1 (a single fat point is never
// special, and general simple points impose independent conditions until
// the system is empty), or an equal multiplicity exceeding the degree.
// Returns nothing for 2 <= m <= d, the propositions' own territory.
inline std::optional<Int> boundary_value(LinearSystem L) {
    if (L.d < 0) return -1;
    L.m0 = std::max<Int>(0, L.m0);
    L.m = std::max<Int>(0, L.m);
    if (L.m <= 1 || L.n == 0) {
        if (L.n == 0) L.m = 0;
        return std::max<Int>(-1, virtual_dim(L));
    }
    if (L.m > L.d) return -1;  // n >= 1 point of multiplicity > d
    return std::nullopt;
}

}  // namespace detail

// dim L(d, d-m; b, m) for 2 <= m <= d.
inline DimensionResult dim_anchor(Int d, Int b, Int m) {
    if (m < 2 || m > d) throw std::invalid_argument("dim_anchor: requires 2 <= m <= d");
    if (b < 0) throw std::invalid_argument("dim_anchor: requires b >= 0");
    LinearSystem L{d, d - m, b, m};
    auto [q, mu, h, eps] = split(d, m, b);
    Int value;
    AnchorCase which;
    if (q >= h + 1) {
        value = checked_sub(checked_mul(d, m + 1), checked_add(binom2(m), checked_mul(b, binom2(m + 1))));
        which = AnchorCase::a;
    } else if (q == h && eps == 1) {
        value = -1;
        which = AnchorCase::b;
    } else if (q == h && mu == m - 1) {
        value = (m - 1) * (m + 2) / 2;
        which = AnchorCase::c;
    } else if (q == h) {
        value = mu * (mu + 3) / 2;
        which = AnchorCase::d;
    } else {
        value = -1;
        which = AnchorCase::e;
    }
    // The non-empty formulas stay >= 0 inside the hypotheses; clamp anyway.
    value = std::max<Int>(-1, value);
    return make_result(L, value, ProvCremonaAnchor{which});
}

// dim L(d, d-m+k; b, m) for k >= 1: the kb lines through the central point
// split off k times each, leaving L(d-kb, d-kb-m+k; b, m-k), which sits at
// the anchor (m0' = d'-m') and is evaluated there (or by the boundary
// conventions when the reduction exits the hypotheses).
inline DimensionResult dim_above(Int d, Int k, Int b, Int m) {
    if (k < 1) throw std::invalid_argument("dim_above: requires k >= 1");
    if (b < 0) throw std::invalid_argument("dim_above: requires b >= 0");
    LinearSystem L{d, d - m + k, b, m};
    LinearSystem reduced{d - k * b, d - k * b - m + k, b, m - k};
    Int value;
    if (auto bv = detail::boundary_value(reduced)) {
        value = *bv;
    } else {
        value = dim_anchor(reduced.d, reduced.n, reduced.m).value;
    }
    return make_result(L, value, ProvCremonaAbove{k});
}

// dim L(d, d-m-1; b, m) for 2 <= m <= d-1.
inline DimensionResult dim_below(Int d, Int b, Int m) {
    if (m < 2 || m > d - 1) throw std::invalid_argument("dim_below: requires 2 <= m <= d-1");
    if (b < 0) throw std::invalid_argument("dim_below: requires b >= 0");
    LinearSystem L{d, d - m - 1, b, m};
    auto [q, mu, h, eps] = split(d, m - 1, b);
    Int value;
    char subcase = '-';
    if (q == h + 1 && mu == 0 && eps == 0 && (m - 1) * (m + 2) >= 4 * h) {
        value = (m - 1) * (m + 2) / 2 - 2 * h;
        subcase = 'a';
    } else if (q == h && eps == 0 && 4 * q <= mu * (mu + 3)) {
        value = mu * (mu + 3) / 2 - 2 * q;
        subcase = 'b';
    } else {
        value = std::max<Int>(-1, checked_sub(checked_mul(d, m + 2),
                                              checked_mul(b + 1, checked_mul(m, m + 1) / 2)));
    }
    return make_result(L, value, ProvCremonaBelow{subcase});
}

// L(d, m0; b, m) is guaranteed non-special when b is odd and the central
// multiplicity is within one of d - m.
inline bool in_nonspecial_window(Int d, Int m0, Int b, Int m) {
    if (m < 2 || m > d) return false;
    if (b < 0 || b % 2 == 0) return false;
    Int k = m0 - (d - m);
    return -1 <= k && k <= 1;
}

// Dispatcher over the closed forms.  Returns nothing when no proposition
// applies (the caller falls back to the rank oracle).
inline std::optional<DimensionResult> dim_quasi(const LinearSystem& L) {
    if (L.n < 0 || L.m < 0)
        throw std::invalid_argument("dim_quasi: point data must be non-negative");
    if (L.d < 0) return make_result(L, -1, ProvEmptyByConvention{});
    if (L.homogeneous()) {
        if (L.n <= 9) return classify::dim_small_n(L.d, L.n, L.m);
        return std::nullopt;
    }
    if (L.m < 2 || L.m > L.d) return std::nullopt;
    Int k = L.m0 - (L.d - L.m);
    if (k >= 1) return dim_above(L.d, k, L.n, L.m);
    if (k == 0) return dim_anchor(L.d, L.n, L.m);
    if (k == -1 && L.m <= L.d - 1) return dim_below(L.d, L.n, L.m);
    return std::nullopt;
}

}  // namespace curvedim::cremona
