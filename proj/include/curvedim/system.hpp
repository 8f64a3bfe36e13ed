#pragma once

#include <stdexcept>
#include <string>
#include <variant>

#include "curvedim/arith.hpp"

namespace curvedim {

// Plane-curve linear system L(d, m0; n, m): curves of degree d with one
// assigned point of multiplicity m0 and n general points of multiplicity m.
// m0 == 0 is the homogeneous case.  Negative d is allowed only as a formal
// "empty by convention" marker produced by degree reductions.
struct LinearSystem {
    Int d{0};
    Int m0{0};
    Int n{0};
    Int m{0};

    bool homogeneous() const { return m0 == 0; }
    friend bool operator==(const LinearSystem&, const LinearSystem&) = default;
};

inline LinearSystem homogeneous_system(Int d, Int n, Int m) { return {d, 0, n, m}; }

// Resolution strategies record where a dimension value came from.

enum class AnchorCase : char { a = 'a', b = 'b', c = 'c', d = 'd', e = 'e' };

enum class LimitRule : char { a = 'a', b = 'b' };

// A validated (a,b)-degeneration: the four subsystem dimensions and the
// limit dimension they force.
struct DegenerationWitness {
    Int a{0};
    Int b{0};
    Int lP{-1};
    Int lPhat{-1};
    Int lF{-1};
    Int lFhat{-1};
    Int l0{-1};
    LimitRule rule{LimitRule::a};
};

enum class CertStatus { Certified, Probable };

// Modular rank witness.  best_rank lower-bounds the generic rank over the
// rationals (rank can only drop under point specialization and reduction
// mod p), so cols - 1 - best_rank upper-bounds the true dimension.  The
// bound is an equality certificate exactly when it meets an independent
// effectivity lower bound.
struct RankCertificate {
    Int rows{0};
    Int cols{0};
    Int best_rank{0};
    Int prime{0};
    Int seed{0};
    Int trials{0};
    Int implied_dim_upper_bound{-1};
    CertStatus status{CertStatus::Probable};
};

struct ProvSmallN {};
struct ProvCremonaAnchor { AnchorCase which{AnchorCase::a}; };
struct ProvCremonaAbove { Int k{1}; };
struct ProvCremonaBelow { char subcase{'-'}; };  // 'a', 'b', or '-' for the generic branch
struct ProvNonSpecialWindow {};
struct ProvDegeneration { DegenerationWitness witness; };
struct ProvOracle { RankCertificate certificate; };
struct ProvAxiom { std::string citation; };
struct ProvEmptyByConvention {};

using Provenance = std::variant<ProvSmallN, ProvCremonaAnchor, ProvCremonaAbove,
                                ProvCremonaBelow, ProvNonSpecialWindow, ProvDegeneration,
                                ProvOracle, ProvAxiom, ProvEmptyByConvention>;

inline const char* provenance_tag(const Provenance& p) {
    struct Tag {
        const char* operator()(const ProvSmallN&) const { return "smalln"; }
        const char* operator()(const ProvCremonaAnchor& a) const {
            switch (a.which) {
                case AnchorCase::a: return "cremona-anchor-a";
                case AnchorCase::b: return "cremona-anchor-b";
                case AnchorCase::c: return "cremona-anchor-c";
                case AnchorCase::d: return "cremona-anchor-d";
                default: return "cremona-anchor-e";
            }
        }
        const char* operator()(const ProvCremonaAbove&) const { return "cremona-above"; }
        const char* operator()(const ProvCremonaBelow&) const { return "cremona-below"; }
        const char* operator()(const ProvNonSpecialWindow&) const { return "window"; }
        const char* operator()(const ProvDegeneration&) const { return "degeneration"; }
        const char* operator()(const ProvOracle&) const { return "oracle"; }
        const char* operator()(const ProvAxiom&) const { return "axiom"; }
        const char* operator()(const ProvEmptyByConvention&) const { return "empty"; }
    };
    return std::visit(Tag{}, p);
}

// A computed dimension with its Riemann-Roch data and provenance.
struct DimensionResult {
    Int value{-1};
    Int virt{0};      // the Riemann-Roch count v
    Int expected{0};  // e = max(-1, v)
    bool special{false};
    Provenance provenance{ProvEmptyByConvention{}};

    bool empty() const { return value < 0; }
};

// Thrown when every certification strategy within budget fails; never a
// silent pass.
class undecided_error : public std::runtime_error {
  public:
    explicit undecided_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace curvedim
