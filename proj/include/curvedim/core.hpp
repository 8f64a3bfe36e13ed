#pragma once

#include <algorithm>
#include <stdexcept>

#include "curvedim/system.hpp"

namespace curvedim {

// v = d(d+3)/2 - m0(m0+1)/2 - n m(m+1)/2.  Every product is of consecutive
// integers (d and d+3 have opposite parity), so the halves are exact.
inline Int virtual_dim(const LinearSystem& L) {
    Int curves = checked_mul(L.d, L.d + 3) / 2;
    Int center = checked_mul(L.m0, L.m0 + 1) / 2;
    Int points = checked_mul(L.n, checked_mul(L.m, L.m + 1) / 2);
    return checked_sub(checked_sub(curves, center), points);
}

inline Int expected_dim(const LinearSystem& L) { return std::max<Int>(-1, virtual_dim(L)); }

// L^2 = d^2 - m0^2 - n m^2 on the blown-up plane.
inline Int self_intersection(const LinearSystem& L) {
    Int dd = checked_mul(L.d, L.d);
    Int cc = checked_mul(L.m0, L.m0);
    Int pp = checked_mul(L.n, checked_mul(L.m, L.m));
    return checked_sub(checked_sub(dd, cc), pp);
}

// 2g - 2 = d(d-3) - m0(m0-1) - n m(m-1); the right side is always even.
inline Int genus(const LinearSystem& L) {
    Int t = checked_sub(checked_sub(checked_mul(L.d, L.d - 3), checked_mul(L.m0, L.m0 - 1)),
                        checked_mul(L.n, checked_mul(L.m, L.m - 1)));
    return t / 2 + 1;
}

// Pairing of two quasi-homogeneous classes with aligned points; the second
// argument's point count is the one that enters (convention n' <= n).
inline Int intersect(const LinearSystem& L, const LinearSystem& Lp) {
    if (Lp.n > L.n) throw std::invalid_argument("intersect: second argument must have n' <= n");
    Int dd = checked_mul(L.d, Lp.d);
    Int cc = checked_mul(L.m0, Lp.m0);
    Int pp = checked_mul(Lp.n, checked_mul(L.m, Lp.m));
    return checked_sub(checked_sub(dd, cc), pp);
}

// v = L^2 - g + 1 must hold identically.
inline bool riemann_roch_identity(const LinearSystem& L) {
    return virtual_dim(L) == self_intersection(L) - genus(L) + 1;
}

// Assembles a DimensionResult and enforces the value >= expected dichotomy.
// For formal negative-degree systems the convention value is -1 regardless
// of what the (meaningless) Riemann-Roch count says.
inline DimensionResult make_result(const LinearSystem& L, Int value, Provenance prov) {
    DimensionResult r;
    r.virt = virtual_dim(L);
    r.expected = L.d < 0 ? -1 : std::max<Int>(-1, r.virt);
    r.value = value;
    r.special = value > r.expected;
    r.provenance = std::move(prov);
    if (r.value < r.expected)
        throw std::logic_error("dimension value below the expected dimension");
    return r;
}

}  // namespace curvedim
