#include "twistkit/scalar.hpp"

namespace twistkit {

namespace {

BigInt mod_pos(const BigInt& a, std::uint32_t p) {
    BigInt r = a % p;
    if (r < 0) r += p;
    return r;
}

// Modular inverse via extended Euclid; p prime.
BigInt mod_inv(const BigInt& a, std::uint32_t p) {
    BigInt t = 0, newt = 1, r = p, newr = mod_pos(a, p);
    while (newr != 0) {
        BigInt q = r / newr;
        BigInt tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (r > 1) throw Error("not-invertible", "element not invertible mod " + std::to_string(p));
    if (t < 0) t += p;
    return t;
}

} // namespace

void Scalar::normalize() {
    if (mod_ == 0) return;
    BigInt num = boost::multiprecision::numerator(v_);
    BigInt den = boost::multiprecision::denominator(v_);
    if (den != 1) num = mod_pos(num * mod_inv(den, mod_), mod_);
    else num = mod_pos(num, mod_);
    v_ = BigRational(num);
}

Scalar Scalar::operator/(const Scalar& o) const {
    if (o.is_zero()) throw Error("division-by-zero", "scalar division by zero");
    std::uint32_t m = join(o);
    if (m == 0) return Scalar(v_ / o.v_, 0);
    BigInt inv = mod_inv(boost::multiprecision::numerator(o.v_), m);
    return Scalar(v_ * BigRational(inv), m);
}

std::string Scalar::str() const {
    BigInt num = boost::multiprecision::numerator(v_);
    BigInt den = boost::multiprecision::denominator(v_);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Scalar Scalar::parse(const std::string& text, Field f) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Scalar(BigRational(BigInt(text)), f.p);
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (den == 0) throw Error("parse-error", "zero denominator in '" + text + "'");
        return Scalar(BigRational(num, den), f.p);
    } catch (const std::exception& e) {
        throw Error("parse-error", "bad scalar '" + text + "'");
    }
}

} // namespace twistkit
