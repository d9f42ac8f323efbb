#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>

#include "json.hpp"

namespace ajpoly {

/// Laurent polynomial in the formal variable v (v^2 = q) over arbitrary
/// precision integers. The zero polynomial stores no terms.
class VLaurent {
public:
    using Terms = std::map<long, mpz_class>;

    VLaurent() = default;
    VLaurent(long integer) { if (integer != 0) terms_[0] = integer; }
    explicit VLaurent(const mpz_class& c) { if (c != 0) terms_[0] = c; }

    static VLaurent mono(long exp, mpz_class coeff = 1);

    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }

    long lo_exp() const;   // throws on zero
    long hi_exp() const;   // throws on zero

    VLaurent operator-() const;
    VLaurent operator+(const VLaurent& o) const;
    VLaurent operator-(const VLaurent& o) const;
    VLaurent operator*(const VLaurent& o) const;
    VLaurent& operator+=(const VLaurent& o) { return *this = *this + o; }
    VLaurent& operator-=(const VLaurent& o) { return *this = *this - o; }
    VLaurent& operator*=(const VLaurent& o) { return *this = *this * o; }
    bool operator==(const VLaurent& o) const { return terms_ == o.terms_; }

    VLaurent pow(long e) const;   // e >= 0

    /// Sum of all coefficients (evaluation at v = 1, hence q = 1).
    mpz_class eval_one() const;

    struct ContentUnit;
    /// input == content * sign * v^vpow * primitive; throws on zero input.
    ContentUnit content_unit() const;

    /// True iff of the form +-v^k.
    bool is_unit() const { return terms_.size() == 1 && (abs(terms_.begin()->second) == 1); }

    /// Exact division; throws std::domain_error when the division is inexact.
    VLaurent divexact(const VLaurent& d) const;

    /// gcd in Z[v^{+-1}], canonicalized like content_unit's primitive times content.
    static VLaurent gcd(const VLaurent& a, const VLaurent& b);

    /// JSON: sorted array of [exponent, coefficient-as-decimal-string].
    nlohmann::json to_json() const;
    static VLaurent from_json(const nlohmann::json& j);

    /// Rendering in the q-power grammar, e.g. "q^(3/2) - 2*q^(-1)".
    std::string to_string() const;

private:
    Terms terms_;
};

struct VLaurent::ContentUnit {
    mpz_class content;   // > 0
    int sign;            // +-1, unit = sign * v^vpow
    long vpow;
    VLaurent primitive;  // integer gcd 1, lowest exponent 0, positive lead
};

}  // namespace ajpoly
