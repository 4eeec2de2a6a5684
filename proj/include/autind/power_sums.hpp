#ifndef AUTIND_POWER_SUMS_HPP
#define AUTIND_POWER_SUMS_HPP

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "symlaurent.hpp"

namespace autind {

inline constexpr int kDefaultDegreeBudget = 12;

/// Linear combination of power-sum products p_lambda = p_{lambda_1} ... p_{lambda_l}.
class PowerSumExpr {
public:
    using Terms = std::map<Partition, QCyclo>;

    static PowerSumExpr one()
    {
        PowerSumExpr e;
        e.add_term({}, QCyclo(1));
        return e;
    }

    static PowerSumExpr p(Partition lambda, const QCyclo& c = QCyclo(1))
    {
        PowerSumExpr e;
        e.add_term(canonical_partition(std::move(lambda)), c);
        return e;
    }

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    int degree() const
    {
        int d = 0;
        for (const auto& [p, c] : terms_)
            d = std::max(d, weight(p));
        return d;
    }

    void add_term(const Partition& lambda, const QCyclo& c)
    {
        if (c.is_zero())
            return;
        auto it = terms_.find(lambda);
        if (it == terms_.end())
            terms_.emplace(lambda, c);
        else if ((it->second += c).is_zero())
            terms_.erase(it);
    }

    PowerSumExpr& operator+=(const PowerSumExpr& o)
    {
        for (const auto& [p, c] : o.terms_)
            add_term(p, c);
        return *this;
    }

    friend PowerSumExpr operator+(PowerSumExpr a, const PowerSumExpr& b) { return a += b; }

    friend PowerSumExpr operator*(const PowerSumExpr& a, const PowerSumExpr& b)
    {
        PowerSumExpr out;
        for (const auto& [p, x] : a.terms_)
            for (const auto& [q, y] : b.terms_) {
                Partition r(p);
                r.insert(r.end(), q.begin(), q.end());
                out.add_term(canonical_partition(std::move(r)), x * y);
            }
        return out;
    }

    PowerSumExpr scaled(const QCyclo& c) const
    {
        PowerSumExpr out;
        for (const auto& [p, x] : terms_)
            out.add_term(p, x * c);
        return out;
    }

    friend bool operator==(const PowerSumExpr& a, const PowerSumExpr& b)
    {
        PowerSumExpr d = a;
        d += b.scaled(QCyclo(-1));
        return d.is_zero();
    }

    std::string str() const
    {
        if (terms_.empty())
            return "0";
        std::string s;
        bool first = true;
        for (const auto& [p, c] : terms_) {
            if (!first)
                s += " + ";
            first = false;
            s += "(" + c.str() + ")";
            for (int k : p)
                s += "*p" + std::to_string(k);
        }
        return s;
    }

private:
    Terms terms_;
};

namespace detail {

/// Number of maps from the parts of mu to the parts of lambda whose fibres sum
/// to the target part. This is the coefficient of m_lambda in p_mu.
inline std::int64_t p_to_m_coefficient(const Partition& mu, const Partition& lambda)
{
    if (weight(mu) != weight(lambda) || lambda.size() > mu.size())
        return 0;
    std::map<std::pair<std::size_t, std::vector<int>>, std::int64_t> memo;
    std::function<std::int64_t(std::size_t, std::vector<int>)> count = [&](std::size_t i,
                                                                          std::vector<int> cap) -> std::int64_t {
        if (i == mu.size()) {
            for (int c : cap)
                if (c != 0)
                    return 0;
            return 1;
        }
        // the count only depends on the multiset of remaining capacities
        std::sort(cap.begin(), cap.end());
        auto key = std::make_pair(i, cap);
        if (auto it = memo.find(key); it != memo.end())
            return it->second;
        std::int64_t total = 0;
        for (std::size_t j = 0; j < cap.size(); ++j) {
            if (cap[j] < mu[i])
                continue;
            cap[j] -= mu[i];
            total += count(i + 1, cap);
            cap[j] += mu[i];
        }
        memo.emplace(std::move(key), total);
        return total;
    };
    return count(0, std::vector<int>(lambda.begin(), lambda.end()));
}

/// Transition data between the monomial and power-sum bases in degree k:
/// the integer matrix p_mu = sum R[mu][lambda] m_lambda and its inverse.
struct DegreeTables {
    std::map<Partition, std::map<Partition, std::int64_t>> p_to_m;
    std::map<Partition, std::map<Partition, Rational>> m_to_p;
};

/// Per-degree memo of the transition matrices. Entries are built once and
/// then only read.
class TransitionCache {
public:
    static TransitionCache& instance()
    {
        static TransitionCache t;
        return t;
    }

    std::shared_ptr<const DegreeTables> get(int k)
    {
        {
            std::lock_guard<std::mutex> lock(mutex_);
            if (auto it = cache_.find(k); it != cache_.end())
                return it->second;
        }
        auto tables = std::make_shared<const DegreeTables>(build(k));
        std::lock_guard<std::mutex> lock(mutex_);
        return cache_.try_emplace(k, std::move(tables)).first->second;
    }

private:
    // p_mu = prod(mult!) m_mu + terms in strictly shorter lambda, so solving
    // for m_mu by increasing length is a triangular back-substitution.
    static DegreeTables build(int k)
    {
        auto parts = partitions_of(k);
        std::stable_sort(parts.begin(), parts.end(),
                         [](const Partition& a, const Partition& b) { return a.size() < b.size(); });
        DegreeTables t;
        for (const auto& mu : parts) {
            auto& row = t.p_to_m[mu];
            for (const auto& lambda : parts) {
                if (lambda.size() > mu.size())
                    break;
                if (const std::int64_t r = p_to_m_coefficient(mu, lambda))
                    row.emplace(lambda, r);
            }
        }
        for (const auto& mu : parts) {
            std::map<Partition, Rational> row;
            row[mu] += Rational(1);
            for (const auto& [lambda, r] : t.p_to_m.at(mu)) {
                if (lambda.size() >= mu.size())
                    continue;
                for (const auto& [nu, c] : t.m_to_p.at(lambda))
                    row[nu] -= c * r;
            }
            const Rational diag(Integer(multiplicity_factorials(mu)));
            std::map<Partition, Rational> clean;
            for (auto& [nu, c] : row)
                if (c != 0)
                    clean.emplace(nu, c / diag);
            t.m_to_p.emplace(mu, std::move(clean));
        }
        return t;
    }

    std::mutex mutex_;
    std::map<int, std::shared_ptr<const DegreeTables>> cache_;
};

} // namespace detail

/// Body of f in the power-sum basis, together with the shift M.
struct PowerSumForm {
    PowerSumExpr expr;
    int shift = 0;
};

inline PowerSumForm to_power_sums(const SymLaurent& f, int degree_budget = kDefaultDegreeBudget)
{
    require(f.degree() <= degree_budget, ErrorKind::DegreeBudget,
            "degree " + std::to_string(f.degree()) + " exceeds budget " + std::to_string(degree_budget));
    PowerSumForm out;
    out.shift = f.shift();
    for (const auto& [lambda, c] : f.body()) {
        const auto tables = detail::TransitionCache::instance().get(weight(lambda));
        for (const auto& [mu, r] : tables->m_to_p.at(lambda))
            out.expr.add_term(mu, c.scaled(r));
    }
    return out;
}

/// Realize a power-sum expression in n variables: m_lambda with more than n
/// parts vanish.
inline SymLaurent from_power_sums(const PowerSumExpr& e, int n, int shift = 0,
                                  int degree_budget = kDefaultDegreeBudget)
{
    require(e.degree() <= degree_budget, ErrorKind::DegreeBudget,
            "degree " + std::to_string(e.degree()) + " exceeds budget " + std::to_string(degree_budget));
    std::map<Partition, QCyclo> body;
    for (const auto& [mu, c] : e.terms()) {
        const auto tables = detail::TransitionCache::instance().get(weight(mu));
        for (const auto& [lambda, r] : tables->p_to_m.at(mu))
            if (static_cast<int>(lambda.size()) <= n)
                body[lambda] += c.scaled(Rational(r));
    }
    SymLaurent out(n, shift);
    for (const auto& [lambda, c] : body)
        out.add_term(lambda, c);
    out.normalize();
    return out;
}

inline SymLaurent from_power_sums(const PowerSumForm& f, int n, int degree_budget = kDefaultDegreeBudget)
{
    return from_power_sums(f.expr, n, f.shift, degree_budget);
}

} // namespace autind

#endif // AUTIND_POWER_SUMS_HPP
