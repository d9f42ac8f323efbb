#pragma once

#include "ajpoly/vlaurent.hpp"

#include <array>
#include <compare>
#include <map>
#include <string_view>

namespace ajpoly {

/// Normal-ordered monomial mx^a lx^b my^c ly^d (Laurent exponents allowed).
struct NCMono {
    int a = 0, b = 0, c = 0, d = 0;

    friend bool operator==(const NCMono&, const NCMono&) = default;
    NCMono operator+(const NCMono& o) const { return {a + o.a, b + o.b, c + o.c, d + o.d}; }
    NCMono operator-() const { return {-a, -b, -c, -d}; }
    bool is_one() const { return a == 0 && b == 0 && c == 0 && d == 0; }
};

/// Fixed comparison order (b, a, c, d), descending lead first when iterating.
struct NCMonoLess {
    bool operator()(const NCMono& x, const NCMono& y) const {
        if (x.b != y.b) return x.b < y.b;
        if (x.a != y.a) return x.a < y.a;
        if (x.c != y.c) return x.c < y.c;
        return x.d < y.d;
    }
};

/// Noncommutative Laurent polynomial in mx, lx, my, ly over VLaurent with
/// relations lx mx = q mx lx, ly my = q my ly (q = v^2); the x pair commutes
/// with the y pair. Terms are stored in normal order mx^a lx^b my^c ly^d with
/// the coefficient on the left.
class NCPoly {
public:
    using Terms = std::map<NCMono, VLaurent, NCMonoLess>;

    NCPoly() = default;
    static NCPoly term(NCMono m, VLaurent c);
    static NCPoly scalar(VLaurent c) { return term({}, std::move(c)); }
    static NCPoly one() { return scalar(VLaurent::mono(0, 1)); }

    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }
    const VLaurent* coeff(const NCMono& m) const;

    NCPoly operator-() const;
    NCPoly operator+(const NCPoly& o) const;
    NCPoly operator-(const NCPoly& o) const;
    bool operator==(const NCPoly& o) const { return terms_ == o.terms_; }

    /// degree range of one generator; index 0..3 = (mx, lx, my, ly)
    std::pair<int, int> degree_range(int var) const;  // throws on zero
    bool y_free() const;
    NCMono lead_mono() const;  // lex-greatest (b, a, c, d); throws on zero

    nlohmann::json to_json() const;
    static NCPoly from_json(const nlohmann::json& j);
    std::string to_string() const;

private:
    friend NCPoly nc_mul(const NCPoly&, const NCPoly&);
    friend NCPoly nc_substitute_ly_one(const NCPoly&);
    friend NCPoly nc_rescale_lx(const NCPoly&, int, long);
    Terms terms_;
};

/// Exact product in normal order: reordering uses lx^b mx^a' = q^{a'b} mx^a' lx^b
/// and the analogous rule for the y pair.
NCPoly nc_mul(const NCPoly& p, const NCPoly& r);

/// Evaluation at ly = 1 (ly is rightmost in normal order, so this is termwise).
NCPoly nc_substitute_ly_one(const NCPoly& p);

/// lx -> sign * v^k * lx: coefficient of a monomial with lx-exponent b picks up
/// sign^b v^{k b}.
NCPoly nc_rescale_lx(const NCPoly& p, int sign, long vpow);

/// Commutative Laurent polynomial in two variables (M, L) over integers.
class CommPoly2 {
public:
    using Terms = std::map<std::pair<long, long>, mpz_class>;

    CommPoly2() = default;
    static CommPoly2 term(long em, long el, mpz_class c);

    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }

    CommPoly2 operator-() const;
    CommPoly2 operator+(const CommPoly2& o) const;
    CommPoly2 operator-(const CommPoly2& o) const;
    CommPoly2 operator*(const CommPoly2& o) const;
    bool operator==(const CommPoly2& o) const { return terms_ == o.terms_; }

    /// substitute M = m^2 (doubles the first exponent)
    CommPoly2 stretch_first() const;
    /// exact division; throws when not divisible
    CommPoly2 divexact(const CommPoly2& d) const;

    nlohmann::json to_json() const;
    static CommPoly2 from_json(const nlohmann::json& j);
    std::string to_string(const char* var1 = "m", const char* var2 = "l") const;

private:
    Terms terms_;
};

/// q -> 1, mx -> M, lx -> L; requires a y-free polynomial.
CommPoly2 nc_classical_limit(const NCPoly& p);

struct UnitDecomposition {
    VLaurent coeff;      // +-v^k times positive integer content
    NCMono mono;         // common monomial factor (left)
    NCPoly normalized;   // content-free, mono-free, sign/v-power fixed
};

/// p == nc_mul(term(mono, coeff), normalized) exactly. The lex-greatest
/// monomial of `normalized` has coefficient with value > 0 at v = 1 (falling
/// back to the sign of its top coefficient when the value at 1 vanishes) and
/// lowest v-exponent 0. Throws on zero input.
UnitDecomposition nc_unit_normalize(const NCPoly& p);

struct ParseError : std::runtime_error {
    size_t position;
    ParseError(size_t pos, const std::string& msg)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
};

/// Text grammar: variables mx, lx, my, ly, q; powers q^(k/2) and q^k; integer
/// constants; + - * ^ and parentheses; juxtaposition is not multiplication.
/// Operator order in the input is preserved and then normal-ordered.
NCPoly nc_parse(std::string_view text);

}  // namespace ajpoly
