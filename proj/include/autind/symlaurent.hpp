#ifndef AUTIND_SYMLAURENT_HPP
#define AUTIND_SYMLAURENT_HPP

#include <map>
#include <string>
#include <vector>

#include "partitions.hpp"
#include "qcyclo.hpp"
#include "satake.hpp"

namespace autind {

/// Symmetric Laurent polynomial (z_1 ... z_n)^{-M} * body in n variables,
/// where body is a combination of monomial symmetric functions m_lambda
/// keyed by dominant exponent vectors (partitions of length at most n).
class SymLaurent {
public:
    using Body = std::map<Partition, QCyclo>;

    explicit SymLaurent(int nvars = 1, int shift = 0) : n_(nvars), shift_(shift)
    {
        require(nvars >= 1, ErrorKind::InvalidArgument, "need at least one variable");
        require(shift >= 0, ErrorKind::InvalidArgument, "shift must be nonnegative");
    }

    static SymLaurent constant(int n, const QCyclo& c)
    {
        SymLaurent f(n);
        f.add_term({}, c);
        return f;
    }

    static SymLaurent monomial(int n, Partition lambda, const QCyclo& c = QCyclo(1))
    {
        SymLaurent f(n);
        f.add_term(canonical_partition(std::move(lambda)), c);
        return f;
    }

    /// Elementary symmetric function e_k = m_{(1^k)}.
    static SymLaurent elementary(int n, int k)
    {
        require(k >= 0 && k <= n, ErrorKind::InvalidArgument, "e_k needs 0 <= k <= n");
        return monomial(n, Partition(static_cast<std::size_t>(k), 1));
    }

    /// Power sum p_k = m_{(k)}.
    static SymLaurent power_sum(int n, int k)
    {
        require(k >= 1, ErrorKind::InvalidArgument, "p_k needs k >= 1");
        return monomial(n, {k});
    }

    /// e_n^k for any integer k.
    static SymLaurent det_power(int n, int k)
    {
        if (k >= 0)
            return monomial(n, Partition(static_cast<std::size_t>(n), k));
        SymLaurent f(n, -k);
        f.add_term({}, QCyclo(1));
        return f;
    }

    int nvars() const noexcept { return n_; }
    int shift() const noexcept { return shift_; }
    const Body& body() const noexcept { return body_; }
    bool is_zero() const { return body_.empty(); }

    /// Largest |lambda| in the body.
    int degree() const
    {
        int d = 0;
        for (const auto& [p, c] : body_)
            d = std::max(d, weight(p));
        return d;
    }

    /// Adds c m_lambda at the current shift. Call normalize() once the body
    /// is complete.
    void add_term(const Partition& lambda, const QCyclo& c)
    {
        require(static_cast<int>(lambda.size()) <= n_, ErrorKind::RankMismatch,
                "monomial has more parts than variables");
        if (c.is_zero())
            return;
        auto it = body_.find(lambda);
        if (it == body_.end()) {
            body_.emplace(lambda, c);
        } else {
            it->second += c;
            if (it->second.is_zero())
                body_.erase(it);
        }
    }

    /// Same element written with a larger shift.
    SymLaurent with_shift(int shift) const
    {
        require(shift >= shift_, ErrorKind::InvalidArgument, "cannot lower the shift");
        SymLaurent out(n_, shift);
        const int delta = shift - shift_;
        for (const auto& [p, c] : body_) {
            auto v = padded(p, n_);
            for (auto& x : v)
                x += delta;
            out.body_.emplace(canonical_partition(std::move(v)), c);
        }
        return out;
    }

    friend SymLaurent operator+(const SymLaurent& f, const SymLaurent& g)
    {
        require(f.n_ == g.n_, ErrorKind::RankMismatch, "variable counts differ");
        const int m = std::max(f.shift_, g.shift_);
        SymLaurent a = f.with_shift(m);
        const SymLaurent b = g.with_shift(m);
        for (const auto& [p, c] : b.body_) {
            auto it = a.body_.find(p);
            if (it == a.body_.end())
                a.body_.emplace(p, c);
            else if ((it->second += c).is_zero())
                a.body_.erase(it);
        }
        a.normalize();
        return a;
    }

    SymLaurent scaled(const QCyclo& c) const
    {
        SymLaurent out(n_, shift_);
        if (c.is_zero())
            return SymLaurent(n_);
        for (const auto& [p, v] : body_) {
            QCyclo w = v * c;
            if (!w.is_zero())
                out.body_.emplace(p, std::move(w));
        }
        out.normalize();
        return out;
    }

    SymLaurent operator-() const { return scaled(QCyclo(-1)); }
    friend SymLaurent operator-(const SymLaurent& f, const SymLaurent& g) { return f + (-g); }

    friend SymLaurent operator*(const SymLaurent& f, const SymLaurent& g)
    {
        require(f.n_ == g.n_, ErrorKind::RankMismatch, "variable counts differ");
        const int n = f.n_;
        SymLaurent out(n, f.shift_ + g.shift_);
        for (const auto& [lam, a] : f.body_) {
            const auto base = padded(lam, n);
            const auto olam = orbit_size(lam, n);
            for (const auto& [mu, b] : g.body_) {
                // coefficient of m_nu is |O(lam)| * #{beta in O(mu) : lam + beta ~ nu} / |O(nu)|
                std::map<Partition, std::int64_t> hits;
                for (const auto& beta : distinct_permutations(padded(mu, n))) {
                    std::vector<int> sum(base);
                    for (std::size_t i = 0; i < sum.size(); ++i)
                        sum[i] += beta[i];
                    ++hits[canonical_partition(std::move(sum))];
                }
                const QCyclo ab = a * b;
                for (const auto& [nu, cnt] : hits) {
                    const Rational coef(Integer(olam * cnt), Integer(orbit_size(nu, n)));
                    auto it = out.body_.find(nu);
                    const QCyclo term = ab.scaled(coef);
                    if (it == out.body_.end())
                        out.body_.emplace(nu, term);
                    else if ((it->second += term).is_zero())
                        out.body_.erase(it);
                }
            }
        }
        out.normalize();
        return out;
    }

    SymLaurent& operator+=(const SymLaurent& g) { return *this = *this + g; }
    SymLaurent& operator*=(const SymLaurent& g) { return *this = *this * g; }

    friend bool operator==(const SymLaurent& f, const SymLaurent& g)
    {
        if (f.n_ != g.n_)
            return false;
        return (f - g).is_zero();
    }

    std::string str() const
    {
        if (body_.empty())
            return "0";
        std::string s;
        if (shift_)
            s = "e" + std::to_string(n_) + "^-" + std::to_string(shift_) + " * (";
        bool first = true;
        for (const auto& [p, c] : body_) {
            if (!first)
                s += " + ";
            first = false;
            s += "(" + c.str() + ")*m[";
            for (std::size_t i = 0; i < p.size(); ++i)
                s += (i ? "," : "") + std::to_string(p[i]);
            s += "]";
        }
        return shift_ ? s + ")" : s;
    }

    /// Pull out full powers of z_1 ... z_n while a negative shift remains.
    void normalize()
    {
        if (body_.empty()) {
            shift_ = 0;
            return;
        }
        while (shift_ > 0) {
            for (const auto& [p, c] : body_)
                if (static_cast<int>(p.size()) < n_)
                    return;
            Body next;
            for (auto& [p, c] : body_) {
                Partition q(p);
                for (auto& x : q)
                    --x;
                next.emplace(canonical_partition(std::move(q)), std::move(c));
            }
            body_ = std::move(next);
            --shift_;
        }
    }

private:
    int n_;
    int shift_;
    Body body_;
};

/// m_lambda evaluated at the coordinates of y.
inline QCyclo monomial_eval(const Partition& lambda, const std::vector<Coordinate>& y)
{
    const int n = static_cast<int>(y.size());
    GroupRingSum acc;
    for (const auto& beta : distinct_permutations(padded(lambda, n))) {
        Coordinate term;
        for (std::size_t i = 0; i < y.size(); ++i)
            if (beta[i])
                term *= y[i].pow(beta[i]);
        acc.add(term);
    }
    return acc.to_qcyclo();
}

inline QCyclo evaluate(const SymLaurent& f, const std::vector<Coordinate>& y)
{
    require(static_cast<int>(y.size()) == f.nvars(), ErrorKind::RankMismatch,
            "polynomial in " + std::to_string(f.nvars()) + " variables evaluated at " + std::to_string(y.size()) +
                " coordinates");
    Coordinate det;
    for (const auto& c : y)
        det *= c;
    QCyclo total;
    for (const auto& [p, c] : f.body())
        total += c * monomial_eval(p, y);
    if (f.shift())
        total *= QCyclo(det.pow(-f.shift()));
    return total;
}

/// trace(pi_y(f)) for the spherical Hecke element with Satake transform f.
inline QCyclo satake_eval(const SymLaurent& f, const SatakeParam& y) { return evaluate(f, y.coords()); }

} // namespace autind

#endif // AUTIND_SYMLAURENT_HPP
