#ifndef AUTIND_QCYCLO_HPP
#define AUTIND_QCYCLO_HPP

#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <sstream>
#include <string>

#include "coordinate.hpp"
#include "cyclotomic.hpp"

namespace autind {

/// The group ring Q(mu_infinity)[q^Q]: finite sums of cyclotomic numbers times
/// rational powers of the formal variable q. Since q is transcendental the
/// powers q^e are linearly independent, so zero testing reduces to testing
/// each cyclotomic coefficient.
class QCyclo {
public:
    using Terms = std::map<Rational, CycloNumber>;

    QCyclo() = default;
    QCyclo(std::int64_t r) { add_term(Rational(0), CycloNumber(Rational(r))); }
    QCyclo(const Rational& r) { add_term(Rational(0), CycloNumber(r)); }
    explicit QCyclo(const Coordinate& c, const Rational& coef = Rational(1))
    {
        add_term(c.qexp(), CycloNumber::root_of_unity(c.zeta_num(), c.conductor(), coef));
    }

    const Terms& terms() const noexcept { return terms_; }

    bool is_zero() const
    {
        for (const auto& [e, c] : terms_)
            if (!c.is_zero())
                return false;
        return true;
    }

    void add_term(const Rational& qexp, const CycloNumber& c)
    {
        auto it = terms_.find(qexp);
        if (it == terms_.end()) {
            if (!c.is_zero())
                terms_.emplace(qexp, c);
            return;
        }
        it->second = it->second + c;
        if (it->second.is_zero())
            terms_.erase(it);
    }

    QCyclo& operator+=(const QCyclo& y)
    {
        for (const auto& [e, c] : y.terms_)
            add_term(e, c);
        return *this;
    }

    QCyclo& operator-=(const QCyclo& y)
    {
        for (const auto& [e, c] : y.terms_)
            add_term(e, -c);
        return *this;
    }

    friend QCyclo operator+(QCyclo x, const QCyclo& y) { return x += y; }
    friend QCyclo operator-(QCyclo x, const QCyclo& y) { return x -= y; }

    QCyclo operator-() const
    {
        QCyclo r;
        for (const auto& [e, c] : terms_)
            r.terms_.emplace(e, -c);
        return r;
    }

    friend QCyclo operator*(const QCyclo& x, const QCyclo& y)
    {
        QCyclo r;
        for (const auto& [e1, c1] : x.terms_)
            for (const auto& [e2, c2] : y.terms_)
                r.add_term(e1 + e2, c1 * c2);
        return r;
    }

    QCyclo& operator*=(const QCyclo& y) { return *this = *this * y; }

    QCyclo scaled(const Rational& r) const
    {
        if (r == 0)
            return {};
        QCyclo out;
        for (const auto& [e, c] : terms_)
            out.terms_.emplace(e, c.scaled(r));
        return out;
    }

    friend bool operator==(const QCyclo& x, const QCyclo& y) { return (x - y).is_zero(); }

    /// Floating-point value at a numeric q. Debug output only.
    std::complex<double> approx(double q) const
    {
        std::complex<double> total = 0;
        for (const auto& [e, c] : terms_) {
            std::complex<double> v = 0;
            for (const auto& [k, x] : c.terms())
                v += x.convert_to<double>() *
                     std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(k.num) / static_cast<double>(k.den));
            total += v * std::pow(q, e.convert_to<double>());
        }
        return total;
    }

    std::string str() const
    {
        if (terms_.empty())
            return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (!first)
                os << " + ";
            first = false;
            os << "[";
            bool firstc = true;
            for (const auto& [k, x] : c.terms()) {
                if (!firstc)
                    os << " + ";
                firstc = false;
                os << to_string(x);
                if (k.num > 0)
                    os << "*z" << k.den << "^" << k.num;
            }
            os << "]";
            if (e != 0)
                os << "*q^" << to_string(e);
        }
        return os.str();
    }

private:
    Terms terms_;
};

/// Accumulates rational multiples of group elements and converts the sum to a
/// QCyclo in one reduction per q-exponent.
class GroupRingSum {
public:
    void add(const Coordinate& c, const Rational& coef = Rational(1))
    {
        auto& slot = terms_[c];
        slot += coef;
    }

    QCyclo to_qcyclo() const
    {
        std::map<Rational, CycloNumber> by_exp;
        for (const auto& [c, coef] : terms_)
            by_exp[c.qexp()].add_root(detail::RootKey::make(c.zeta_num(), c.conductor()), coef);
        QCyclo out;
        for (const auto& [e, v] : by_exp)
            out.add_term(e, v);
        return out;
    }

private:
    std::map<Coordinate, Rational> terms_;
};

} // namespace autind

#endif // AUTIND_QCYCLO_HPP
