#pragma once

#include "ajpoly/ncpoly.hpp"
#include "ajpoly/vratio.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ajpoly {

/// One left-product term of a combination recipe:
///   scalar * pre * multiplier * post * generator
/// scalar == nullopt means "solve for it" (resolved by the verifier up to a
/// unit +-v^k via cancellation of the my-monomials).
struct RecipeTerm {
    std::optional<VLaurent> scalar;
    NCPoly pre;          // defaults to 1
    NCPoly post;         // defaults to 1
    int multiplier = 0;  // 0 -> a1, 1 -> a2
    int generator = 0;   // 0 -> g1, 1 -> g2
};

/// Transcribed data bundle for one knot.
struct Certificate {
    std::string knot;
    NCPoly g1, g2, a1, a2, ahat;
    std::vector<std::vector<RecipeTerm>> recipes;
    NCPoly expected_prefix;  // expected combination = expected_prefix * ahat
    int lambda_sign = 1;     // lx rescale producing Ahat^C
    long lambda_vpow = 0;
    int global_sign = 1;
    long global_vpow = 0;
    NCPoly known_nh;         // inhomogeneous reference polynomial in (mx, lx)
    CommPoly2 classical;     // classical A-polynomial in (m, l)
};

Certificate load_certificate(const std::string& knot, const std::string& data_dir);

/// Default data directory: AJPOLY_DATA_DIR env var, else compiled-in path.
std::string default_data_dir();

struct VerifyReport {
    bool valid = false;
    int recipe_index = -1;                  // which candidate recipe closed
    std::vector<VLaurent> resolved_scalars; // per term of that recipe
    NCPoly combination;                     // expansion of the matched recipe
    NCPoly residual;                        // combination - expected (last tried)
};

/// Expands the candidate recipes exactly and compares against
/// expected_prefix * ahat. Unknown scalars are resolved by requiring the
/// my-monomials to cancel; resolution must be a unit +-v^k.
VerifyReport verify_certificate(const Certificate& c);

struct EliminationBounds {
    int max_mx = 0, max_lx = 0, max_my = 0, max_ly = 0;
};

struct Eliminant {
    NCPoly normalized;  // unit-normalized my-free combination
    NCPoly u1, u2;      // multipliers: u1 g1 + u2 g2 == unit * normalized
    VLaurent unit_coeff;
    NCMono unit_mono;
};

/// Bounded-degree linear ansatz: unknown multipliers u1, u2 with monomials
/// within the given bounds; every normal-ordered monomial of u1 g1 + u2 g2
/// with nonzero my-exponent is forced to zero; the exact kernel over Q(v)
/// yields the my-free combinations. Zero combinations are dropped; results are
/// sorted by (lx-degree, term count, lead monomial).
std::vector<Eliminant> eliminate_my(const NCPoly& g1, const NCPoly& g2,
                                    const EliminationBounds& b1,
                                    const EliminationBounds& b2);

/// substitute ly = 1, rescale lx by lambda, multiply by the global scalar,
/// unit-normalize. Requires an my-free input.
NCPoly make_ahat_c(const NCPoly& ahat, int lambda_sign, long lambda_vpow,
                   int global_sign, long global_vpow);

struct UnitMatch {
    bool match = false;
    VLaurent coeff;  // +-v^k with nc_mul(term(mono,coeff), lhs) == rhs
    NCMono mono;
};

/// Compare ahat_c * (mx - 1) with the transcribed reference polynomial, up to
/// a left unit +-v^k mx^i lx^j. The unit is reported, never absorbed.
UnitMatch check_garoufalidis(const NCPoly& ahat_c, const Certificate& c);

struct ClassicalReport {
    bool match = false;
    int degeneracy = 0;  // multiplicity of (m^4 - 1) stripped from the limit
    int sign = 1;
    long mpow = 0, lpow = 0;
};

/// Classical check: the q = 1 limit of ahat_c, evaluated at (m^2, l), equals
/// (m^4-1)^degeneracy times the classical A-polynomial up to sign and a
/// monomial.
ClassicalReport check_classical(const NCPoly& ahat_c, const Certificate& c);

struct AhatcResult {
    NCPoly eliminant;   // my-free operator (with ly) that was used
    NCPoly ahat_c;
    std::string source;  // "certificate" or "discovery"
    VerifyReport verify;
};

/// Resolve the knot's Ahat^C: use the transcribed certificate when a recipe
/// verifies and the transcribed ahat matches the combination; otherwise run
/// discovery with bounds read off the transcribed multipliers and take the
/// canonical minimal eliminant.
AhatcResult ahatc_for_knot(const Certificate& c);

/// Degree-range bounds of a polynomial, for building discovery bounds.
EliminationBounds bounds_of(const NCPoly& p);

}  // namespace ajpoly
