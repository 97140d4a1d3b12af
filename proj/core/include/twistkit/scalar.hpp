#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace twistkit {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Error with a stable machine-readable code alongside the human message.
struct Error : std::runtime_error {
    std::string code;
    Error(std::string code_, const std::string& msg)
        : std::runtime_error(code_ + ": " + msg), code(std::move(code_)) {}
};

/// Ground field: the rationals (p == 0) or the prime field F_p.
struct Field {
    std::uint32_t p = 0;

    bool rational() const { return p == 0; }
    bool operator==(const Field&) const = default;
};

/// Element of the chosen exact field.  Arithmetic is exact; equality is
/// decidable.  Prime-field elements keep a canonical representative in
/// [0, p) with denominator 1.
class Scalar {
public:
    Scalar() = default;
    explicit Scalar(long v) : v_(v) {}
    Scalar(BigRational v, std::uint32_t mod = 0) : v_(std::move(v)), mod_(mod) { normalize(); }

    static Scalar zero(Field f) { return Scalar(BigRational(0), f.p); }
    static Scalar one(Field f) { return Scalar(BigRational(1), f.p); }
    static Scalar of(long v, Field f) { return Scalar(BigRational(v), f.p); }

    const BigRational& value() const { return v_; }
    std::uint32_t mod() const { return mod_; }
    bool is_zero() const { return v_ == 0; }

    Scalar operator+(const Scalar& o) const { return Scalar(v_ + o.v_, join(o)); }
    Scalar operator-(const Scalar& o) const { return Scalar(v_ - o.v_, join(o)); }
    Scalar operator*(const Scalar& o) const { return Scalar(v_ * o.v_, join(o)); }
    Scalar operator-() const { return Scalar(-v_, mod_); }
    Scalar operator/(const Scalar& o) const;

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const { return v_ == o.v_; }
    bool operator!=(const Scalar& o) const { return v_ != o.v_; }

    std::string str() const;
    static Scalar parse(const std::string& text, Field f);

private:
    std::uint32_t join(const Scalar& o) const {
        if (mod_ != 0 && o.mod_ != 0 && mod_ != o.mod_)
            throw Error("field-mismatch", "mixed prime moduli " + std::to_string(mod_) + " and " +
                                              std::to_string(o.mod_));
        return mod_ != 0 ? mod_ : o.mod_;
    }
    void normalize();

    BigRational v_ = 0;
    std::uint32_t mod_ = 0;
};

} // namespace twistkit
