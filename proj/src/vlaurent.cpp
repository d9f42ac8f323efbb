#include "ajpoly/vlaurent.hpp"

#include <vector>

namespace ajpoly {

VLaurent VLaurent::mono(long exp, mpz_class coeff) {
    VLaurent p;
    if (coeff != 0) p.terms_[exp] = std::move(coeff);
    return p;
}

long VLaurent::lo_exp() const {
    if (is_zero()) throw std::domain_error("zero polynomial has no exponents");
    return terms_.begin()->first;
}

long VLaurent::hi_exp() const {
    if (is_zero()) throw std::domain_error("zero polynomial has no exponents");
    return terms_.rbegin()->first;
}

VLaurent VLaurent::operator-() const {
    VLaurent r;
    for (auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

VLaurent VLaurent::operator+(const VLaurent& o) const {
    VLaurent r = *this;
    for (auto& [e, c] : o.terms_) {
        auto it = r.terms_.find(e);
        if (it == r.terms_.end()) {
            r.terms_[e] = c;
        } else {
            it->second += c;
            if (it->second == 0) r.terms_.erase(it);
        }
    }
    return r;
}

VLaurent VLaurent::operator-(const VLaurent& o) const { return *this + (-o); }

VLaurent VLaurent::operator*(const VLaurent& o) const {
    VLaurent r;
    if (is_zero() || o.is_zero()) return r;
    for (auto& [e1, c1] : terms_)
        for (auto& [e2, c2] : o.terms_) {
            auto it = r.terms_.find(e1 + e2);
            if (it == r.terms_.end()) {
                mpz_class p = c1 * c2;
                if (p != 0) r.terms_[e1 + e2] = std::move(p);
            } else {
                it->second += c1 * c2;
                if (it->second == 0) r.terms_.erase(it);
            }
        }
    return r;
}

VLaurent VLaurent::pow(long e) const {
    if (e < 0) throw std::domain_error("VLaurent::pow wants e >= 0");
    VLaurent r = mono(0, 1);
    VLaurent base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

mpz_class VLaurent::eval_one() const {
    mpz_class s = 0;
    for (auto& [e, c] : terms_) s += c;
    return s;
}

VLaurent::ContentUnit VLaurent::content_unit() const {
    if (is_zero()) throw std::domain_error("zero polynomial has no content decomposition");
    mpz_class g = 0;
    for (auto& [e, c] : terms_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    long lo = lo_exp();
    int sign = terms_.rbegin()->second > 0 ? 1 : -1;
    VLaurent prim;
    for (auto& [e, c] : terms_) prim.terms_[e - lo] = sign * c / g;
    return ContentUnit{g, sign, lo, prim};
}

VLaurent VLaurent::divexact(const VLaurent& d) const {
    if (d.is_zero()) throw std::domain_error("division by zero polynomial");
    if (is_zero()) return VLaurent{};
    // shift both to ordinary polynomials and long-divide
    long nlo = lo_exp(), dlo = d.lo_exp();
    long ndeg = hi_exp() - nlo, ddeg = d.hi_exp() - dlo;
    if (ndeg < ddeg) throw std::domain_error("inexact polynomial division");
    std::vector<mpz_class> num(ndeg + 1), den(ddeg + 1), quo(ndeg - ddeg + 1);
    for (auto& [e, c] : terms_) num[e - nlo] = c;
    for (auto& [e, c] : d.terms_) den[e - dlo] = c;
    for (long k = ndeg - ddeg; k >= 0; --k) {
        mpz_class& lead = num[k + ddeg];
        if (lead == 0) continue;
        mpz_class q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), lead.get_mpz_t(), den[ddeg].get_mpz_t());
        if (r != 0) throw std::domain_error("inexact polynomial division");
        quo[k] = q;
        for (long j = 0; j <= ddeg; ++j) num[k + j] -= q * den[j];
    }
    for (auto& c : num)
        if (c != 0) throw std::domain_error("inexact polynomial division");
    VLaurent res;
    for (long k = 0; k < (long)quo.size(); ++k)
        if (quo[k] != 0) res.terms_[k + nlo - dlo] = quo[k];
    return res;
}

namespace {

// dense coefficient vectors for gcd work, index 0 = lowest kept exponent
using Vec = std::vector<mpz_class>;

Vec to_vec(const VLaurent& p) {
    Vec v(p.hi_exp() - p.lo_exp() + 1);
    long lo = p.lo_exp();
    for (auto& [e, c] : p.terms()) v[e - lo] = c;
    return v;
}

long deg(const Vec& v) {
    for (long i = (long)v.size() - 1; i >= 0; --i)
        if (v[i] != 0) return i;
    return -1;
}

mpz_class content_of(const Vec& v) {
    mpz_class g = 0;
    for (auto& c : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

void make_primitive(Vec& v) {
    long d = deg(v);
    if (d < 0) return;
    // also strip trailing zeros below the lowest nonzero term
    long lo = 0;
    while (v[lo] == 0) ++lo;
    mpz_class g = content_of(v);
    if (v[d] < 0) g = -g;
    Vec w(d - lo + 1);
    for (long i = lo; i <= d; ++i) w[i - lo] = v[i] / g;
    v = std::move(w);
}

// pseudo-remainder of a by b (deg b >= 0)
Vec prem(Vec a, const Vec& b) {
    long db = deg(b);
    const mpz_class lb = b[db];
    long da = deg(a);
    while (da >= db) {
        mpz_class f = a[da];
        if (f != 0) {
            for (long i = 0; i < da; ++i) a[i] *= lb;
            for (long i = 0; i < db; ++i) a[da - db + i] -= f * b[i];
        }
        a.resize(da);  // leading entry is now zero by construction
        da = deg(a);
    }
    return a;
}

}  // namespace

VLaurent VLaurent::gcd(const VLaurent& a, const VLaurent& b) {
    if (a.is_zero() && b.is_zero()) return VLaurent{};
    if (a.is_zero()) {
        auto cu = b.content_unit();
        return VLaurent(cu.content) * cu.primitive;
    }
    if (b.is_zero()) {
        auto cu = a.content_unit();
        return VLaurent(cu.content) * cu.primitive;
    }
    mpz_class ca = a.content_unit().content, cb = b.content_unit().content, cg;
    mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    Vec x = to_vec(a), y = to_vec(b);
    make_primitive(x);
    make_primitive(y);
    if (deg(x) < deg(y)) std::swap(x, y);
    while (deg(y) > 0) {
        Vec r = prem(x, y);
        if (deg(r) < 0) {
            x = y;
            make_primitive(x);
            VLaurent res;
            for (long i = 0; i <= deg(x); ++i)
                if (x[i] != 0) res.terms_[i] = cg * x[i];
            return res;
        }
        make_primitive(r);
        x = std::move(y);
        y = std::move(r);
    }
    // deg(y) == 0: primitive constant 1, or y empty
    if (deg(y) == 0) return VLaurent(cg);
    make_primitive(x);
    VLaurent res;
    for (long i = 0; i <= deg(x); ++i)
        if (x[i] != 0) res.terms_[i] = cg * x[i];
    return res;
}

nlohmann::json VLaurent::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (auto& [e, c] : terms_) arr.push_back({e, c.get_str()});
    return arr;
}

VLaurent VLaurent::from_json(const nlohmann::json& j) {
    VLaurent p;
    for (auto& kv : j) {
        long e = kv.at(0).get<long>();
        mpz_class c(kv.at(1).get<std::string>());
        if (c != 0) p.terms_[e] = c;
    }
    return p;
}

std::string VLaurent::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        auto [e, c] = *it;
        mpz_class ac = abs(c);
        if (first) {
            if (c < 0) out += "-";
            first = false;
        } else {
            out += c < 0 ? " - " : " + ";
        }
        std::string qpow;
        if (e != 0) {
            if (e % 2 == 0)
                qpow = e == 2 ? "q" : "q^(" + std::to_string(e / 2) + ")";
            else
                qpow = "q^(" + std::to_string(e) + "/2)";
        }
        if (qpow.empty())
            out += ac.get_str();
        else if (ac == 1)
            out += qpow;
        else
            out += ac.get_str() + "*" + qpow;
    }
    return out;
}

}  // namespace ajpoly
