#include "ajpoly/ncpoly.hpp"

#include <algorithm>

namespace ajpoly {

NCPoly NCPoly::term(NCMono m, VLaurent c) {
    NCPoly p;
    if (!c.is_zero()) p.terms_[m] = std::move(c);
    return p;
}

const VLaurent* NCPoly::coeff(const NCMono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? nullptr : &it->second;
}

NCPoly NCPoly::operator-() const {
    NCPoly r;
    for (auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

NCPoly NCPoly::operator+(const NCPoly& o) const {
    NCPoly r = *this;
    for (auto& [m, c] : o.terms_) {
        auto it = r.terms_.find(m);
        if (it == r.terms_.end()) {
            r.terms_[m] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) r.terms_.erase(it);
        }
    }
    return r;
}

NCPoly NCPoly::operator-(const NCPoly& o) const { return *this + (-o); }

std::pair<int, int> NCPoly::degree_range(int var) const {
    if (is_zero()) throw std::domain_error("degree of zero polynomial");
    int lo = 0, hi = 0;
    bool first = true;
    for (auto& [m, c] : terms_) {
        int e = var == 0 ? m.a : var == 1 ? m.b : var == 2 ? m.c : m.d;
        if (first) {
            lo = hi = e;
            first = false;
        } else {
            lo = std::min(lo, e);
            hi = std::max(hi, e);
        }
    }
    return {lo, hi};
}

bool NCPoly::y_free() const {
    for (auto& [m, c] : terms_)
        if (m.c != 0 || m.d != 0) return false;
    return true;
}

NCMono NCPoly::lead_mono() const {
    if (is_zero()) throw std::domain_error("lead of zero polynomial");
    return terms_.rbegin()->first;
}

NCPoly nc_mul(const NCPoly& p, const NCPoly& r) {
    NCPoly out;
    for (auto& [m1, c1] : p.terms_)
        for (auto& [m2, c2] : r.terms_) {
            // lx^b1 past mx^a2 and ly^d1 past my^c2 give q^{a2 b1 + c2 d1}
            long vpow = 2L * ((long)m2.a * m1.b + (long)m2.c * m1.d);
            VLaurent c = c1 * c2 * VLaurent::mono(vpow);
            NCMono m = m1 + m2;
            auto it = out.terms_.find(m);
            if (it == out.terms_.end()) {
                if (!c.is_zero()) out.terms_[m] = std::move(c);
            } else {
                it->second += c;
                if (it->second.is_zero()) out.terms_.erase(it);
            }
        }
    return out;
}

NCPoly nc_substitute_ly_one(const NCPoly& p) {
    NCPoly out;
    for (auto& [m, c] : p.terms_) {
        NCMono mm{m.a, m.b, m.c, 0};
        auto it = out.terms_.find(mm);
        if (it == out.terms_.end()) {
            out.terms_[mm] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) out.terms_.erase(it);
        }
    }
    return out;
}

NCPoly nc_rescale_lx(const NCPoly& p, int sign, long vpow) {
    NCPoly out;
    for (auto& [m, c] : p.terms_) {
        int s = (sign < 0 && (m.b % 2 != 0)) ? -1 : 1;
        out.terms_[m] = c * VLaurent::mono(vpow * m.b, s);
    }
    return out;
}

CommPoly2 CommPoly2::term(long em, long el, mpz_class c) {
    CommPoly2 p;
    if (c != 0) p.terms_[{em, el}] = std::move(c);
    return p;
}

CommPoly2 CommPoly2::operator-() const {
    CommPoly2 r;
    for (auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

CommPoly2 CommPoly2::operator+(const CommPoly2& o) const {
    CommPoly2 r = *this;
    for (auto& [m, c] : o.terms_) {
        auto it = r.terms_.find(m);
        if (it == r.terms_.end()) {
            r.terms_[m] = c;
        } else {
            it->second += c;
            if (it->second == 0) r.terms_.erase(it);
        }
    }
    return r;
}

CommPoly2 CommPoly2::operator-(const CommPoly2& o) const { return *this + (-o); }

CommPoly2 CommPoly2::operator*(const CommPoly2& o) const {
    CommPoly2 r;
    for (auto& [m1, c1] : terms_)
        for (auto& [m2, c2] : o.terms_) {
            auto key = std::make_pair(m1.first + m2.first, m1.second + m2.second);
            auto it = r.terms_.find(key);
            if (it == r.terms_.end()) {
                mpz_class p = c1 * c2;
                if (p != 0) r.terms_[key] = std::move(p);
            } else {
                it->second += c1 * c2;
                if (it->second == 0) r.terms_.erase(it);
            }
        }
    return r;
}

CommPoly2 CommPoly2::stretch_first() const {
    CommPoly2 r;
    for (auto& [m, c] : terms_) r.terms_[{2 * m.first, m.second}] = c;
    return r;
}

CommPoly2 CommPoly2::divexact(const CommPoly2& d) const {
    if (d.is_zero()) throw std::domain_error("division by zero polynomial");
    CommPoly2 rem = *this, quo;
    auto lead = [](const CommPoly2& p) { return *p.terms().rbegin(); };
    auto dl = lead(d);
    while (!rem.is_zero()) {
        auto rl = lead(rem);
        // quotient term must stay a (non-negative-shifted) monomial multiple
        if (rl.first.first < dl.first.first || rl.first.second < dl.first.second)
            throw std::domain_error("inexact CommPoly2 division");
        mpz_class q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rl.second.get_mpz_t(),
                    dl.second.get_mpz_t());
        if (r != 0) throw std::domain_error("inexact CommPoly2 division");
        CommPoly2 t = term(rl.first.first - dl.first.first,
                           rl.first.second - dl.first.second, q);
        quo = quo + t;
        rem = rem - t * d;
        if (!rem.is_zero() && !(rem.terms().rbegin()->first < rl.first))
            throw std::domain_error("inexact CommPoly2 division");
    }
    return quo;
}

nlohmann::json CommPoly2::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (auto& [m, c] : terms_) arr.push_back({m.first, m.second, c.get_str()});
    return arr;
}

CommPoly2 CommPoly2::from_json(const nlohmann::json& j) {
    CommPoly2 p;
    for (auto& t : j) {
        mpz_class c(t.at(2).get<std::string>());
        if (c != 0) p.terms_[{t.at(0).get<long>(), t.at(1).get<long>()}] = c;
    }
    return p;
}

std::string CommPoly2::to_string(const char* var1, const char* var2) const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        auto& [m, c] = *it;
        mpz_class ac = abs(c);
        if (first) {
            if (c < 0) out += "-";
            first = false;
        } else {
            out += c < 0 ? " - " : " + ";
        }
        std::string body;
        if (m.first != 0) body += std::string(var1) + "^" + std::to_string(m.first);
        if (m.second != 0) {
            if (!body.empty()) body += "*";
            body += std::string(var2) + "^" + std::to_string(m.second);
        }
        if (body.empty())
            out += ac.get_str();
        else if (ac == 1)
            out += body;
        else
            out += ac.get_str() + "*" + body;
    }
    return out;
}

CommPoly2 nc_classical_limit(const NCPoly& p) {
    if (!p.y_free()) throw std::domain_error("classical limit requires y-free input");
    CommPoly2 r;
    for (auto& [m, c] : p.terms()) {
        mpz_class v = c.eval_one();
        if (v != 0) r = r + CommPoly2::term(m.a, m.b, v);
    }
    return r;
}

UnitDecomposition nc_unit_normalize(const NCPoly& p) {
    if (p.is_zero()) throw std::domain_error("unit normalization of zero polynomial");
    NCMono mn{INT32_MAX, INT32_MAX, INT32_MAX, INT32_MAX};
    for (auto& [m, c] : p.terms()) {
        mn.a = std::min(mn.a, m.a);
        mn.b = std::min(mn.b, m.b);
        mn.c = std::min(mn.c, m.c);
        mn.d = std::min(mn.d, m.d);
    }
    // left inverse of the monomial: U^{-1} = q^{ab+cd} mx^{-a} lx^{-b} my^{-c} ly^{-d}
    long qfix = 2L * ((long)mn.a * mn.b + (long)mn.c * mn.d);
    NCPoly stripped = nc_mul(NCPoly::term(-mn, VLaurent::mono(qfix)), p);

    mpz_class g = 0;
    for (auto& [m, c] : stripped.terms())
        for (auto& [e, co] : c.terms())
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), co.get_mpz_t());

    // sign and v-power convention from the lex-greatest monomial
    const VLaurent& leadc = stripped.terms().rbegin()->second;
    mpz_class at_one = leadc.eval_one();
    int sign;
    if (at_one != 0)
        sign = at_one > 0 ? 1 : -1;
    else
        sign = leadc.terms().rbegin()->second > 0 ? 1 : -1;
    long leadlo = leadc.lo_exp();

    UnitDecomposition out;
    out.mono = mn;
    out.coeff = VLaurent::mono(leadlo, sign * g);
    NCPoly norm;
    VLaurent inv_unit = VLaurent::mono(-leadlo, sign);
    for (auto& [m, c] : stripped.terms()) {
        VLaurent cc = c * inv_unit;
        VLaurent scaled;
        for (auto& [e, co] : cc.terms()) scaled += VLaurent::mono(e, co / g);
        norm = norm + NCPoly::term(m, scaled);
    }
    out.normalized = norm;
    return out;
}

nlohmann::json NCPoly::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (auto& [m, c] : terms_)
        arr.push_back({{"mono", {m.a, m.b, m.c, m.d}}, {"coef", c.to_json()}});
    return arr;
}

NCPoly NCPoly::from_json(const nlohmann::json& j) {
    NCPoly p;
    for (auto& t : j) {
        auto& mo = t.at("mono");
        NCMono m{mo.at(0).get<int>(), mo.at(1).get<int>(), mo.at(2).get<int>(),
                 mo.at(3).get<int>()};
        VLaurent c = VLaurent::from_json(t.at("coef"));
        if (!c.is_zero()) p.terms_[m] = c;
    }
    return p;
}

std::string NCPoly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        auto& [m, c] = *it;
        std::string coef = c.to_string();
        bool neg = false;
        if (c.terms().size() == 1 && c.terms().begin()->second < 0) {
            neg = true;
            coef = (-c).to_string();
        }
        if (first) {
            out += neg ? "-" : "";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        std::string body;
        auto app = [&](const char* v, int e) {
            if (e == 0) return;
            if (!body.empty()) body += "*";
            body += v;
            if (e != 1) body += "^" + (e < 0 ? "(" + std::to_string(e) + ")" : std::to_string(e));
        };
        app("mx", m.a);
        app("lx", m.b);
        app("my", m.c);
        app("ly", m.d);
        bool trivial_coef = coef == "1";
        if (body.empty()) {
            out += c.terms().size() > 1 ? "(" + coef + ")" : coef;
        } else if (trivial_coef) {
            out += body;
        } else if (c.terms().size() > 1) {
            out += "(" + coef + ")*" + body;
        } else {
            out += coef + "*" + body;
        }
    }
    return out;
}

}  // namespace ajpoly
