#ifndef AUTIND_HECKE_HPP
#define AUTIND_HECKE_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "power_sums.hpp"

namespace autind {

/// Element of the tensor product of r copies of the symmetric Laurent
/// polynomials in m variables. A key lists (shift, dominant exponent) per
/// factor; the term is c * prod_i e_m^{-shift_i} m_{lambda_i}.
class HeckeTensor {
public:
    using Factor = std::pair<int, Partition>;
    using Key = std::vector<Factor>;

    HeckeTensor(int m, int r) : m_(m), r_(r)
    {
        require(m >= 1 && r >= 1, ErrorKind::InvalidArgument, "tensor needs positive m and r");
    }

    /// f_1 (x) ... (x) f_r.
    static HeckeTensor product_of(const std::vector<SymLaurent>& factors)
    {
        require(!factors.empty(), ErrorKind::InvalidArgument, "empty tensor product");
        const int m = factors.front().nvars();
        HeckeTensor out(m, static_cast<int>(factors.size()));
        Key key;
        std::function<void(std::size_t, const QCyclo&)> rec = [&](std::size_t i, const QCyclo& c) {
            if (i == factors.size()) {
                out.add_term(key, c);
                return;
            }
            require(factors[i].nvars() == m, ErrorKind::RankMismatch, "tensor factors differ in rank");
            for (const auto& [p, v] : factors[i].body()) {
                key.emplace_back(factors[i].shift(), p);
                rec(i + 1, c * v);
                key.pop_back();
            }
        };
        rec(0, QCyclo(1));
        return out;
    }

    int m() const noexcept { return m_; }
    int r() const noexcept { return r_; }
    const std::map<Key, QCyclo>& terms() const noexcept { return terms_; }

    void add_term(Key key, const QCyclo& c)
    {
        require(static_cast<int>(key.size()) == r_, ErrorKind::RankMismatch, "tensor key has the wrong length");
        if (c.is_zero())
            return;
        for (auto& [shift, p] : key) {
            while (shift > 0 && static_cast<int>(p.size()) == m_) {
                for (auto& x : p)
                    --x;
                p = canonical_partition(std::move(p));
                --shift;
            }
        }
        auto it = terms_.find(key);
        if (it == terms_.end())
            terms_.emplace(key, c);
        else if ((it->second += c).is_zero())
            terms_.erase(it);
    }

    /// Value at (y(1), ..., y(r)).
    QCyclo evaluate(const std::vector<SatakeParam>& blocks) const
    {
        require(static_cast<int>(blocks.size()) == r_, ErrorKind::RankMismatch, "wrong number of blocks");
        for (const auto& b : blocks)
            require(static_cast<int>(b.rank()) == m_, ErrorKind::RankMismatch, "block rank mismatch");
        QCyclo total;
        for (const auto& [key, c] : terms_) {
            QCyclo term = c;
            for (std::size_t i = 0; i < key.size(); ++i) {
                SymLaurent f(m_, key[i].first);
                f.add_term(key[i].second, QCyclo(1));
                term *= satake_eval(f, blocks[i]);
            }
            total += term;
        }
        return total;
    }

    std::string str() const
    {
        if (terms_.empty())
            return "0";
        std::string s;
        bool first = true;
        for (const auto& [key, c] : terms_) {
            if (!first)
                s += " + ";
            first = false;
            s += "(" + c.str() + ")";
            for (std::size_t i = 0; i < key.size(); ++i) {
                s += i ? " (x) " : " ";
                if (key[i].first)
                    s += "e^-" + std::to_string(key[i].first) + "*";
                s += "m[";
                for (std::size_t j = 0; j < key[i].second.size(); ++j)
                    s += (j ? "," : "") + std::to_string(key[i].second[j]);
                s += "]";
            }
        }
        return s;
    }

    friend HeckeTensor operator+(HeckeTensor a, const HeckeTensor& b)
    {
        require(a.m_ == b.m_ && a.r_ == b.r_, ErrorKind::RankMismatch, "tensor shapes differ");
        for (const auto& [k, c] : b.terms_)
            a.add_term(k, c);
        return a;
    }

    friend bool operator==(const HeckeTensor& a, const HeckeTensor& b)
    {
        if (a.m_ != b.m_ || a.r_ != b.r_)
            return false;
        HeckeTensor d = a;
        for (const auto& [k, c] : b.terms_)
            d.add_term(k, -c);
        return d.terms_.empty();
    }

private:
    int m_;
    int r_;
    std::map<Key, QCyclo> terms_;
};

/// Field stage of the automorphic-induction transfer: f in n = m r s variables
/// goes to an element in m r variables with
///   eval(result, concat(y)) = eval(f, delta(y)).
/// On power sums p_k -> s p_{k/s} when s | k and 0 otherwise; the determinant
/// picks up zeta^{m r s (s-1)/2}.
inline SymLaurent ai_transfer(const SymLaurent& f, const CyclicAlgebra& alg,
                              int degree_budget = kDefaultDegreeBudget)
{
    alg.validate();
    require(f.nvars() % alg.d == 0, ErrorKind::RankMismatch,
            "number of variables " + std::to_string(f.nvars()) + " not divisible by d=" + std::to_string(alg.d));
    const int s = alg.s;
    const int mr = f.nvars() / s;
    const auto form = to_power_sums(f, degree_budget);
    PowerSumExpr image;
    for (const auto& [mu, c] : form.expr.terms()) {
        Partition nu;
        Rational scale(1);
        bool vanishes = false;
        for (int k : mu) {
            if (k % s != 0) {
                vanishes = true;
                break;
            }
            nu.push_back(k / s);
            scale *= s;
        }
        if (!vanishes)
            image.add_term(nu, c.scaled(scale));
    }
    SymLaurent out = from_power_sums(image, mr, form.shift, degree_budget);
    if (form.shift) {
        const std::int64_t e = -static_cast<std::int64_t>(form.shift) * mr * s * (s - 1) / 2;
        out = out.scaled(QCyclo(alg.zeta.pow(e)));
    }
    return out;
}

/// Restriction of a symmetric function in m r variables to r blocks of m
/// variables: m_lambda splits into every ordered tuple of block exponents
/// whose union is lambda, each with coefficient one.
inline HeckeTensor constant_term(const SymLaurent& f, int r, int degree_budget = kDefaultDegreeBudget)
{
    require(r >= 1 && f.nvars() % r == 0, ErrorKind::RankMismatch, "variables do not split into r blocks");
    require(f.degree() <= degree_budget, ErrorKind::DegreeBudget,
            "degree " + std::to_string(f.degree()) + " exceeds budget " + std::to_string(degree_budget));
    const int m = f.nvars() / r;
    HeckeTensor out(m, r);
    for (const auto& [lambda, c] : f.body()) {
        for (const auto& split : block_splittings(padded(lambda, f.nvars()), r, m)) {
            HeckeTensor::Key key;
            for (const auto& blk : split)
                key.emplace_back(f.shift(), canonical_partition(blk));
            out.add_term(key, c);
        }
    }
    return out;
}

/// Full transfer b: the field stage followed by the splitting into r blocks,
/// so that eval(result, (y(1), ..., y(r))) = eval(f, delta(y)).
inline HeckeTensor ai_transfer_blocks(const SymLaurent& f, const CyclicAlgebra& alg,
                                      int degree_budget = kDefaultDegreeBudget)
{
    return constant_term(ai_transfer(f, alg, degree_budget), alg.r, degree_budget);
}

namespace detail {

// p_mu -> p_{s mu} and e_n^{-M} -> e_n^{-sM}.
inline SymLaurent bc_field_stage(const SymLaurent& g, int s, int degree_budget)
{
    if (s == 1)
        return g;
    require(g.degree() * s <= degree_budget, ErrorKind::DegreeBudget,
            "base change output degree " + std::to_string(g.degree() * s) + " exceeds budget " +
                std::to_string(degree_budget));
    const auto form = to_power_sums(g, degree_budget);
    PowerSumExpr image;
    for (const auto& [mu, c] : form.expr.terms()) {
        Partition nu(mu);
        for (auto& k : nu)
            k *= s;
        image.add_term(nu, c);
    }
    return from_power_sums(image, g.nvars(), form.shift * s, degree_budget);
}

} // namespace detail

/// Base-change transfer from the E side to the F side: the r block transforms
/// are multiplied (Galois conjugation is trivial on spherical transforms) and
/// the field stage p_k -> p_{ks} is applied, so that
///   eval(result, y) = eval(f, bc_map(y)).
inline SymLaurent bc_transfer(const HeckeTensor& f, const CyclicAlgebra& alg,
                              int degree_budget = kDefaultDegreeBudget)
{
    alg.validate();
    require(f.r() == alg.r, ErrorKind::RankMismatch,
            "tensor has " + std::to_string(f.r()) + " factors, algebra has r=" + std::to_string(alg.r));
    const int n = f.m();
    SymLaurent total(n);
    for (const auto& [key, c] : f.terms()) {
        SymLaurent prod = SymLaurent::constant(n, c);
        for (const auto& [shift, p] : key) {
            SymLaurent factor(n, shift);
            factor.add_term(p, QCyclo(1));
            factor.normalize();
            prod = prod * factor;
        }
        total += prod;
    }
    return detail::bc_field_stage(total, alg.s, degree_budget);
}

inline SymLaurent bc_transfer(const std::vector<SymLaurent>& blocks, const CyclicAlgebra& alg,
                              int degree_budget = kDefaultDegreeBudget)
{
    require(static_cast<int>(blocks.size()) == alg.r, ErrorKind::RankMismatch,
            "expected " + std::to_string(alg.r) + " block transforms");
    alg.validate();
    SymLaurent prod = blocks.front();
    for (std::size_t i = 1; i < blocks.size(); ++i)
        prod = prod * blocks[i];
    return detail::bc_field_stage(prod, alg.s, degree_budget);
}

inline SymLaurent bc_transfer(const SymLaurent& f, const CyclicAlgebra& alg, int degree_budget = kDefaultDegreeBudget)
{
    return bc_transfer(std::vector<SymLaurent>{f}, alg, degree_budget);
}

} // namespace autind

#endif // AUTIND_HECKE_HPP
