#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "curvedim/classify.hpp"
#include "curvedim/core.hpp"

namespace curvedim::oracle {

struct OracleConfig {
    Int prime = 2147483647;  // 2^31 - 1: > any degree here, single-word products
    Int trials = 3;
    Int seed = 42;
    Int size_budget = 5000;  // max rows and max cols
};

inline bool is_prime(Int p) {
    if (p < 2) return false;
    for (Int f = 2; f * f <= p; ++f)
        if (p % f == 0) return false;
    return true;
}

// Arithmetic mod a prime < 2^31.  The default modulus 2^31 - 1 gets a
// division-free Mersenne fold; anything else falls back to %.
class PrimeField {
  public:
    explicit PrimeField(Int p) : p_(static_cast<std::uint64_t>(p)), mersenne31_(p == 2147483647) {
        if (p < 2 || p >= (Int{1} << 31)) throw std::invalid_argument("PrimeField: need 2 <= p < 2^31");
    }

    std::uint64_t modulus() const { return p_; }

    // valid for t < 2^62
    std::uint64_t reduce(std::uint64_t t) const {
        if (mersenne31_) {
            t = (t & 0x7fffffffULL) + (t >> 31);
            t = (t & 0x7fffffffULL) + (t >> 31);
            if (t >= p_) t -= p_;
            return t;
        }
        return t % p_;
    }

    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return reduce(a * b); }
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint64_t pow(std::uint64_t base, std::uint64_t exp) const {
        std::uint64_t acc = 1;
        base = reduce(base);
        while (exp) {
            if (exp & 1) acc = mul(acc, base);
            base = mul(base, base);
            exp >>= 1;
        }
        return acc;
    }
    std::uint64_t inv(std::uint64_t a) const { return pow(a, p_ - 2); }

  private:
    std::uint64_t p_;
    bool mersenne31_;
};

struct Matrix {
    std::size_t rows{0};
    std::size_t cols{0};
    std::vector<std::uint32_t> a;

    std::uint32_t& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    std::uint32_t at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
};

using Point = std::pair<Int, Int>;  // affine coordinates over the prime field

// One row per partial derivative of order < multiplicity, evaluated at the
// point: the condition a fat point imposes on the general degree-d form
// sum c_ij x^i y^j (i + j <= d).  The first point carries m0 when m0 > 0;
// the remaining n points carry m.
inline Matrix interpolation_matrix(const LinearSystem& L, const std::vector<Point>& points, Int prime) {
    if (L.d < 0) throw std::invalid_argument("interpolation_matrix: degree must be non-negative");
    if (prime <= L.d) throw std::invalid_argument("interpolation_matrix: prime must exceed the degree");
    std::size_t expect = static_cast<std::size_t>(L.n) + (L.m0 > 0 ? 1 : 0);
    if (points.size() != expect) throw std::invalid_argument("interpolation_matrix: wrong point count");
    {
        std::set<Point> distinct(points.begin(), points.end());
        if (distinct.size() != points.size())
            throw std::invalid_argument("interpolation_matrix: coincident points");
    }

    PrimeField F(prime);
    const Int d = L.d;
    Matrix M;
    M.cols = static_cast<std::size_t>((d + 1) * (d + 2) / 2);
    std::size_t rows = 0;
    if (L.m0 > 0) rows += static_cast<std::size_t>(L.m0 * (L.m0 + 1) / 2);
    rows += static_cast<std::size_t>(L.n * (L.m * (L.m + 1) / 2));
    M.rows = rows;
    M.a.assign(M.rows * M.cols, 0);

    // column index of monomial x^i y^j, enumerated by i then j
    auto col_of = [d](Int i, Int j) {
        // columns for fixed i: j = 0..d-i; offset = sum_{t<i} (d-t+1)
        return static_cast<std::size_t>(i * (d + 1) - i * (i - 1) / 2 + j);
    };

    std::vector<std::uint64_t> xpow(static_cast<std::size_t>(d + 1)),
        ypow(static_cast<std::size_t>(d + 1));
    // falling factorial (t)_k mod p for t, k <= d
    auto falling = [&F](Int t, Int k) {
        std::uint64_t acc = 1;
        for (Int s = 0; s < k; ++s) acc = F.mul(acc, static_cast<std::uint64_t>(t - s));
        return acc;
    };

    std::size_t row = 0;
    std::size_t point_index = 0;
    auto add_point = [&](const Point& pt, Int mult) {
        xpow[0] = ypow[0] = 1;
        for (Int t = 1; t <= d; ++t) {
            xpow[static_cast<std::size_t>(t)] = F.mul(xpow[static_cast<std::size_t>(t - 1)],
                                                      static_cast<std::uint64_t>(pt.first));
            ypow[static_cast<std::size_t>(t)] = F.mul(ypow[static_cast<std::size_t>(t - 1)],
                                                      static_cast<std::uint64_t>(pt.second));
        }
        for (Int a = 0; a < mult; ++a) {
            for (Int b = 0; a + b < mult; ++b, ++row) {
                for (Int i = a; i <= d; ++i) {
                    std::uint64_t fi = falling(i, a);
                    if (!fi) continue;
                    for (Int j = b; i + j <= d; ++j) {
                        std::uint64_t fj = falling(j, b);
                        if (!fj) continue;
                        std::uint64_t v = F.mul(F.mul(fi, fj),
                                                F.mul(xpow[static_cast<std::size_t>(i - a)],
                                                      ypow[static_cast<std::size_t>(j - b)]));
                        M.at(row, col_of(i, j)) = static_cast<std::uint32_t>(v);
                    }
                }
            }
        }
    };

    if (L.m0 > 0) add_point(points[point_index++], L.m0);
    for (Int i = 0; i < L.n; ++i) add_point(points[point_index++], L.m);
    return M;
}

// In-place row echelon rank.
inline Int matrix_rank(Matrix& M, const PrimeField& F) {
    const std::uint64_t p = F.modulus();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < M.cols && rank < M.rows; ++col) {
        std::size_t piv = M.rows;
        for (std::size_t r = rank; r < M.rows; ++r)
            if (M.at(r, col)) { piv = r; break; }
        if (piv == M.rows) continue;
        if (piv != rank)
            for (std::size_t c = col; c < M.cols; ++c) std::swap(M.at(piv, c), M.at(rank, c));
        std::uint64_t inv = F.inv(M.at(rank, col));
        if (inv != 1)
            for (std::size_t c = col; c < M.cols; ++c)
                M.at(rank, c) = static_cast<std::uint32_t>(F.mul(M.at(rank, c), inv));
        const std::uint32_t* prow = &M.a[rank * M.cols];
        for (std::size_t r = rank + 1; r < M.rows; ++r) {
            std::uint64_t f = M.at(r, col);
            if (!f) continue;
            std::uint32_t* target = &M.a[r * M.cols];
            target[col] = 0;
            for (std::size_t c = col + 1; c < M.cols; ++c) {
                // target + f * (p - pivot), all operands < 2^31
                std::uint64_t t = target[c] + f * (p - prow[c]);
                target[c] = static_cast<std::uint32_t>(F.reduce(t));
            }
        }
        ++rank;
    }
    return static_cast<Int>(rank);
}

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Deterministic per-(seed, trial) sample of distinct affine points.
inline std::vector<Point> sample_points(std::size_t count, Int prime, Int seed, Int trial) {
    std::mt19937_64 rng(splitmix64(static_cast<std::uint64_t>(seed) * 0x51ed270b4d2f4cd5ULL +
                                   static_cast<std::uint64_t>(trial)));
    std::uniform_int_distribution<Int> coord(0, prime - 1);
    std::set<Point> seen;
    std::vector<Point> pts;
    int attempts = 0;
    while (pts.size() < count) {
        Point pt{coord(rng), coord(rng)};
        if (seen.insert(pt).second) {
            pts.push_back(pt);
        } else if (++attempts > 1000) {
            throw std::runtime_error("sample_points: cannot draw distinct points");
        }
    }
    return pts;
}

}  // namespace detail

inline void validate(const OracleConfig& cfg, const LinearSystem& L, Int rows, Int cols) {
    if (cfg.trials < 1) throw std::invalid_argument("oracle: trials must be >= 1");
    if (cfg.prime < 2 || cfg.prime >= (Int{1} << 31))
        throw std::invalid_argument("oracle: modulus must fit in 31 bits");
    if (!is_prime(cfg.prime)) throw std::invalid_argument("oracle: modulus must be prime");
    if (cfg.prime <= L.d || cfg.prime <= std::max(rows, cols))
        throw std::invalid_argument("oracle: prime too small for this system");
    if (rows > cfg.size_budget || cols > cfg.size_budget)
        throw undecided_error("oracle: matrix exceeds the size budget");
}

// Exact rank of the interpolation matrix at `trials` independent random
// point sets.  Each achieved rank lower-bounds the generic rank, both
// against point specialization and against reduction mod p, so
// cols - 1 - best_rank >= dim L always; the result is an equality
// certificate exactly when it meets the effectivity lower bound.
inline DimensionResult generic_dim(const LinearSystem& L, const OracleConfig& cfg = {}) {
    if (L.d < 0) return make_result(L, -1, ProvEmptyByConvention{});
    if (L.n < 0 || L.m < 0 || L.m0 < 0)
        throw std::invalid_argument("generic_dim: multiplicity data must be non-negative");

    Int cols = (L.d + 1) * (L.d + 2) / 2;
    Int rows = L.m0 * (L.m0 + 1) / 2 + L.n * (L.m * (L.m + 1) / 2);
    validate(cfg, L, rows, cols);

    Int lower = classify::effective_lower_bound(L);
    PrimeField F(cfg.prime);
    std::size_t npoints = static_cast<std::size_t>(L.n) + (L.m0 > 0 ? 1 : 0);

    Int best_rank = 0;
    Int trials_run = 0;
    for (Int t = 0; t < cfg.trials; ++t) {
        auto pts = detail::sample_points(npoints, cfg.prime, cfg.seed, t);
        Matrix M = interpolation_matrix(L, pts, cfg.prime);
        best_rank = std::max(best_rank, matrix_rank(M, F));
        ++trials_run;
        if (cols - 1 - best_rank == lower) break;  // further trials cannot improve
    }

    Int value = cols - 1 - best_rank;
    if (value < lower)
        throw std::logic_error("oracle: rank exceeds what the effectivity lower bound allows");

    RankCertificate cert;
    cert.rows = rows;
    cert.cols = cols;
    cert.best_rank = best_rank;
    cert.prime = cfg.prime;
    cert.seed = cfg.seed;
    cert.trials = trials_run;
    cert.implied_dim_upper_bound = value;
    cert.status = value == lower ? CertStatus::Certified : CertStatus::Probable;
    return make_result(L, value, ProvOracle{cert});
}

inline const RankCertificate& certificate_of(const DimensionResult& r) {
    return std::get<ProvOracle>(r.provenance).certificate;
}

// Emptiness proof: a full-column-rank specialization forces full generic
// rank, hence no curve for general points.
inline std::pair<bool, RankCertificate> certify_empty(const LinearSystem& L, const OracleConfig& cfg = {}) {
    DimensionResult r = generic_dim(L, cfg);
    if (std::holds_alternative<ProvEmptyByConvention>(r.provenance)) {
        RankCertificate cert;
        cert.prime = cfg.prime;
        cert.seed = cfg.seed;
        cert.status = CertStatus::Certified;
        return {true, cert};
    }
    const auto& cert = certificate_of(r);
    return {cert.best_rank == cert.cols, cert};
}

// Equality certificate for dim L = target: the rank upper bound must land
// exactly on the independent lower bound, which must be the target.
inline std::optional<RankCertificate> certify_dim(const LinearSystem& L, Int target,
                                                  const OracleConfig& cfg = {}) {
    if (target < -1) throw std::invalid_argument("certify_dim: target must be >= -1");
    DimensionResult r = generic_dim(L, cfg);
    if (std::holds_alternative<ProvEmptyByConvention>(r.provenance))
        return target == -1 ? std::optional<RankCertificate>(RankCertificate{}) : std::nullopt;
    const auto& cert = certificate_of(r);
    if (r.value == target && cert.status == CertStatus::Certified) return cert;
    return std::nullopt;
}

// Single-line record: ORACLE d m0 n m prime seed trials rows cols rank dim status
inline void render_certificate(std::ostream& os, const LinearSystem& L, const RankCertificate& c) {
    os << "ORACLE " << L.d << ' ' << L.m0 << ' ' << L.n << ' ' << L.m << ' ' << c.prime << ' '
       << c.seed << ' ' << c.trials << ' ' << c.rows << ' ' << c.cols << ' ' << c.best_rank << ' '
       << c.implied_dim_upper_bound << ' '
       << (c.status == CertStatus::Certified ? "certified" : "probable") << '\n';
}

}  // namespace curvedim::oracle
