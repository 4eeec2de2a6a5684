#ifndef AUTIND_COORDINATE_HPP
#define AUTIND_COORDINATE_HPP

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>

#include "rational.hpp"

namespace autind {

/// An element of the value group mu_infinity x q^Q: the product of the root of
/// unity exp(2 pi i a/N) with q^e for a formal transcendental q > 1.
///
/// The angle a/N is kept reduced with 0 <= a < N (a = 0 forces N = 1). Group
/// multiplication adds angles mod 1 and adds exponents.
class Coordinate {
public:
    Coordinate() = default;

    Coordinate(std::int64_t a, std::int64_t n, Rational qexp) : a_(a), n_(n), qexp_(std::move(qexp))
    {
        require(n > 0, ErrorKind::InvalidArgument, "root-of-unity denominator must be positive");
        normalize();
    }

    static Coordinate root_of_unity(std::int64_t a, std::int64_t n) { return Coordinate(a, n, Rational(0)); }
    static Coordinate q_power(Rational e) { return Coordinate(0, 1, std::move(e)); }
    static Coordinate q_power(std::int64_t p, std::int64_t q) { return q_power(make_rational(p, q)); }

    std::int64_t zeta_num() const noexcept { return a_; }
    /// Order of the root-of-unity part (the conductor N).
    std::int64_t conductor() const noexcept { return n_; }
    const Rational& qexp() const noexcept { return qexp_; }

    bool is_identity() const { return a_ == 0 && qexp_ == 0; }

    /// Multiplicative order, or 0 when infinite.
    std::int64_t order() const { return qexp_ == 0 ? n_ : 0; }

    Coordinate inverse() const { return Coordinate((n_ - a_) % n_, n_, -qexp_); }

    Coordinate pow(std::int64_t k) const
    {
        const __int128 a = static_cast<__int128>(a_) * (k % n_);
        std::int64_t r = static_cast<std::int64_t>(a % n_);
        if (r < 0)
            r += n_;
        return Coordinate(r, n_, qexp_ * k);
    }

    /// The canonical k-th root ((a/N)/k, e/k). The other k-th roots are this
    /// value times the k-th roots of unity.
    Coordinate root(std::int64_t k) const
    {
        require(k >= 1, ErrorKind::InvalidArgument, "root index must be positive");
        const __int128 n = static_cast<__int128>(n_) * k;
        require(n < (static_cast<__int128>(1) << 40), ErrorKind::BudgetExceeded, "root-of-unity conductor overflow");
        return Coordinate(a_, static_cast<std::int64_t>(n), qexp_ / k);
    }

    friend Coordinate operator*(const Coordinate& x, const Coordinate& y)
    {
        const std::int64_t l = lcm64(x.n_, y.n_);
        const __int128 a = static_cast<__int128>(x.a_) * (l / x.n_) + static_cast<__int128>(y.a_) * (l / y.n_);
        return Coordinate(static_cast<std::int64_t>(a % l), l, x.qexp_ + y.qexp_);
    }

    Coordinate& operator*=(const Coordinate& y) { return *this = *this * y; }

    friend bool operator==(const Coordinate& x, const Coordinate& y)
    {
        return x.a_ == y.a_ && x.n_ == y.n_ && x.qexp_ == y.qexp_;
    }

    /// Lexicographic on (qexp, N, a).
    friend std::strong_ordering operator<=>(const Coordinate& x, const Coordinate& y)
    {
        if (x.qexp_ != y.qexp_)
            return x.qexp_ < y.qexp_ ? std::strong_ordering::less : std::strong_ordering::greater;
        if (x.n_ != y.n_)
            return x.n_ <=> y.n_;
        return x.a_ <=> y.a_;
    }

    std::string str() const
    {
        std::string s;
        if (a_ != 0)
            s = "z(" + std::to_string(a_) + "/" + std::to_string(n_) + ")";
        if (qexp_ != 0) {
            if (!s.empty())
                s += "*";
            s += "q^" + to_string(qexp_);
        }
        return s.empty() ? "1" : s;
    }

    friend std::ostream& operator<<(std::ostream& os, const Coordinate& c) { return os << c.str(); }

private:
    void normalize()
    {
        a_ %= n_;
        if (a_ < 0)
            a_ += n_;
        if (a_ == 0) {
            n_ = 1;
            return;
        }
        const std::int64_t g = std::gcd(a_, n_);
        a_ /= g;
        n_ /= g;
    }

    std::int64_t a_ = 0;
    std::int64_t n_ = 1;
    Rational qexp_ = 0;
};

} // namespace autind

#endif // AUTIND_COORDINATE_HPP
