#include "ajpoly/vratio.hpp"

namespace ajpoly {

VRatio::VRatio(VLaurent n, VLaurent d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw std::domain_error("VRatio with zero denominator");
    reduce();
}

void VRatio::reduce() {
    if (num_.is_zero()) {
        den_ = VLaurent::mono(0, 1);
        return;
    }
    VLaurent g = VLaurent::gcd(num_, den_);
    if (!g.is_unit() || g.lo_exp() != 0) {
        num_ = num_.divexact(g);
        den_ = den_.divexact(g);
    }
    // canonical unit on the denominator: lowest exponent 0, positive lead
    auto cu = den_.content_unit();
    VLaurent u = VLaurent::mono(-cu.vpow, cu.sign);
    num_ = num_ * u;
    den_ = den_ * u;
}

VRatio VRatio::operator-() const {
    VRatio r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

VRatio VRatio::operator+(const VRatio& o) const {
    return VRatio(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

VRatio VRatio::operator-(const VRatio& o) const {
    return VRatio(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

VRatio VRatio::operator*(const VRatio& o) const {
    return VRatio(num_ * o.num_, den_ * o.den_);
}

VRatio VRatio::operator/(const VRatio& o) const {
    if (o.is_zero()) throw std::domain_error("VRatio division by zero");
    return VRatio(num_ * o.den_, den_ * o.num_);
}

}  // namespace ajpoly
