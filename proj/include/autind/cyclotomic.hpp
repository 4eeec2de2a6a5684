#ifndef AUTIND_CYCLOTOMIC_HPP
#define AUTIND_CYCLOTOMIC_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <tuple>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace autind {

namespace detail {

using IntPoly = std::vector<std::int64_t>; // little-endian coefficients

inline IntPoly exact_divide(IntPoly num, const IntPoly& den)
{
    // den is monic
    const std::size_t dn = den.size() - 1;
    IntPoly quot(num.size() - dn, 0);
    for (std::size_t i = num.size(); i-- > dn;) {
        const std::int64_t c = num[i];
        quot[i - dn] = c;
        if (c == 0)
            continue;
        for (std::size_t j = 0; j <= dn; ++j)
            num[i - dn + j] -= c * den[j];
    }
    for (std::size_t i = 0; i < dn; ++i)
        require(num[i] == 0, ErrorKind::Inconsistent, "inexact cyclotomic division");
    return quot;
}

class CyclotomicTable {
public:
    static CyclotomicTable& instance()
    {
        static CyclotomicTable table;
        return table;
    }

    std::shared_ptr<const IntPoly> get(std::int64_t n)
    {
        {
            std::lock_guard<std::mutex> lock(mutex_);
            auto it = cache_.find(n);
            if (it != cache_.end())
                return it->second;
        }
        // X^n - 1 divided by every Phi_d with d | n, d < n.
        IntPoly p(static_cast<std::size_t>(n) + 1, 0);
        p[0] = -1;
        p[static_cast<std::size_t>(n)] = 1;
        for (std::int64_t d = 1; d < n; ++d)
            if (n % d == 0)
                p = exact_divide(std::move(p), *get(d));
        auto value = std::make_shared<const IntPoly>(std::move(p));
        std::lock_guard<std::mutex> lock(mutex_);
        return cache_.try_emplace(n, std::move(value)).first->second;
    }

private:
    std::mutex mutex_;
    std::map<std::int64_t, std::shared_ptr<const IntPoly>> cache_;
};

} // namespace detail

/// Phi_N, little-endian, monic. Memoized.
inline std::shared_ptr<const std::vector<std::int64_t>> cyclotomic_polynomial(std::int64_t n)
{
    require(n >= 1, ErrorKind::InvalidArgument, "cyclotomic index must be positive");
    return detail::CyclotomicTable::instance().get(n);
}

namespace detail {

/// exp(2 pi i num/den) with 0 <= num < den and gcd(num, den) = 1.
struct RootKey {
    std::int64_t num = 0;
    std::int64_t den = 1;

    static RootKey make(std::int64_t a, std::int64_t n)
    {
        require(n >= 1, ErrorKind::InvalidArgument, "root of unity needs a positive order");
        a %= n;
        if (a < 0)
            a += n;
        const std::int64_t g = std::gcd(a, n);
        return RootKey{a / g, n / g};
    }

    friend RootKey operator+(const RootKey& x, const RootKey& y)
    {
        const std::int64_t l = lcm64(x.den, y.den);
        return make(x.num * (l / x.den) + y.num * (l / y.den), l);
    }

    friend auto operator<=>(const RootKey&, const RootKey&) = default;
};

inline std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n)
{
    std::vector<std::pair<std::int64_t, int>> out;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p)
            continue;
        int k = 0;
        while (n % p == 0) {
            n /= p;
            ++k;
        }
        out.emplace_back(p, k);
    }
    if (n > 1)
        out.emplace_back(n, 1);
    return out;
}

inline std::int64_t mod_inverse(std::int64_t a, std::int64_t m)
{
    std::int64_t g = m, x = 0, x1 = 1, b = a % m;
    while (b) {
        const std::int64_t q = g / b;
        std::tie(g, b) = std::make_pair(b, g - q * b);
        std::tie(x, x1) = std::make_pair(x1, x - q * x1);
    }
    return ((x % m) + m) % m;
}

using Expansion = std::vector<std::pair<RootKey, int>>;

/// Writes a root of unity in the basis of products over primes p of
/// exp(2 pi i t_p) with t_p in [0, 1 - 1/p). A prime component t_p outside
/// that range is replaced using 1 + z + ... + z^{p-1} = 0 for z = exp(2 pi i/p):
///   exp(2 pi i t_p) = - sum_{j=1}^{p-1} exp(2 pi i (t_p - j/p)).
/// The basis is a tensor product of power bases of the prime-power fields, so
/// it does not depend on the conductor an element is viewed in.
class BasisTable {
public:
    static BasisTable& instance()
    {
        static BasisTable table;
        return table;
    }

    std::shared_ptr<const Expansion> get(const RootKey& key)
    {
        {
            std::lock_guard<std::mutex> lock(mutex_);
            if (auto it = cache_.find(key); it != cache_.end())
                return it->second;
        }
        auto value = std::make_shared<const Expansion>(expand(key));
        std::lock_guard<std::mutex> lock(mutex_);
        return cache_.try_emplace(key, std::move(value)).first->second;
    }

private:
    static Expansion expand(const RootKey& key)
    {
        Expansion acc{{RootKey{}, 1}};
        for (const auto& [p, k] : factorize(key.den)) {
            std::int64_t pk = 1;
            for (int i = 0; i < k; ++i)
                pk *= p;
            // prime-power component by CRT: num/den = sum_p a_p/p^k mod 1
            const std::int64_t rest = key.den / pk;
            const std::int64_t ap = static_cast<std::int64_t>(
                (static_cast<__int128>(key.num) * mod_inverse(rest % pk, pk)) % pk);
            Expansion pieces;
            if (ap < (p - 1) * (pk / p)) {
                pieces.emplace_back(RootKey::make(ap, pk), 1);
            } else {
                for (std::int64_t j = 1; j < p; ++j)
                    pieces.emplace_back(RootKey::make(ap - j * (pk / p), pk), -1);
            }
            Expansion next;
            next.reserve(acc.size() * pieces.size());
            for (const auto& [r, s] : acc)
                for (const auto& [t, u] : pieces)
                    next.emplace_back(r + t, s * u);
            acc = std::move(next);
        }
        return acc;
    }

    std::mutex mutex_;
    std::map<RootKey, std::shared_ptr<const Expansion>> cache_;
};

} // namespace detail

/// An element of Q(mu_infinity), stored sparsely as rational multiples of
/// roots of unity drawn from a fixed conductor-free basis (see BasisTable).
/// Two elements are equal iff their stored coefficients agree.
class CycloNumber {
public:
    using Terms = std::map<detail::RootKey, Rational>;

    CycloNumber() = default;
    explicit CycloNumber(const Rational& r) { add_root(detail::RootKey{}, r); }

    /// sum_k poly[k] exp(2 pi i k / N).
    static CycloNumber from_poly(std::int64_t n, const std::vector<Rational>& poly)
    {
        CycloNumber out;
        for (std::size_t k = 0; k < poly.size(); ++k)
            if (poly[k] != 0)
                out.add_root(detail::RootKey::make(static_cast<std::int64_t>(k), n), poly[k]);
        return out;
    }

    /// exp(2 pi i a / N) times a rational.
    static CycloNumber root_of_unity(std::int64_t a, std::int64_t n, const Rational& coef = Rational(1))
    {
        CycloNumber out;
        out.add_root(detail::RootKey::make(a, n), coef);
        return out;
    }

    const Terms& terms() const noexcept { return c_; }
    bool is_zero() const { return c_.empty(); }

    /// lcm of the orders of the basis roots in use.
    std::int64_t conductor() const
    {
        std::int64_t n = 1;
        for (const auto& [k, c] : c_)
            n = lcm64(n, k.den);
        return n;
    }

    /// Adds coef * exp(2 pi i key), rewriting it in the basis.
    void add_root(const detail::RootKey& key, const Rational& coef)
    {
        if (coef == 0)
            return;
        for (const auto& [b, sign] : *detail::BasisTable::instance().get(key))
            accumulate(b, sign > 0 ? coef : Rational(-coef));
    }

    friend CycloNumber operator+(CycloNumber x, const CycloNumber& y)
    {
        for (const auto& [k, c] : y.c_)
            x.accumulate(k, c);
        return x;
    }

    CycloNumber operator-() const
    {
        CycloNumber a = *this;
        for (auto& [k, x] : a.c_)
            x = -x;
        return a;
    }

    friend CycloNumber operator-(const CycloNumber& x, const CycloNumber& y) { return x + (-y); }

    friend CycloNumber operator*(const CycloNumber& x, const CycloNumber& y)
    {
        CycloNumber out;
        for (const auto& [a, u] : x.c_)
            for (const auto& [b, v] : y.c_)
                out.add_root(a + b, u * v);
        return out;
    }

    CycloNumber scaled(const Rational& r) const
    {
        if (r == 0)
            return {};
        CycloNumber a = *this;
        for (auto& [k, x] : a.c_)
            x *= r;
        return a;
    }

    friend bool operator==(const CycloNumber& x, const CycloNumber& y) { return x.c_ == y.c_; }

private:
    void accumulate(const detail::RootKey& k, const Rational& c)
    {
        auto it = c_.find(k);
        if (it == c_.end()) {
            c_.emplace(k, c);
        } else if ((it->second += c) == 0) {
            c_.erase(it);
        }
    }

    Terms c_;
};

} // namespace autind

#endif // AUTIND_CYCLOTOMIC_HPP
