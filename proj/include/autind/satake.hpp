#ifndef AUTIND_SATAKE_HPP
#define AUTIND_SATAKE_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "coordinate.hpp"

namespace autind {

/// Hard cap on the rank accepted by the fiber enumerations.
inline constexpr std::size_t kMaxFiberRank = 12;
inline constexpr std::size_t kMaxFiberSize = 100000;

/// Satake parameter of an unramified representation of GL(n): a multiset of
/// n coordinates, stored sorted so that equality is multiset equality.
class SatakeParam {
public:
    SatakeParam() = default;
    explicit SatakeParam(std::vector<Coordinate> coords) : coords_(std::move(coords))
    {
        std::sort(coords_.begin(), coords_.end());
    }
    SatakeParam(std::initializer_list<Coordinate> coords) : SatakeParam(std::vector<Coordinate>(coords)) {}

    std::size_t rank() const noexcept { return coords_.size(); }
    const std::vector<Coordinate>& coords() const noexcept { return coords_; }

    Coordinate product() const
    {
        Coordinate p;
        for (const auto& c : coords_)
            p *= c;
        return p;
    }

    SatakeParam map(const std::function<Coordinate(const Coordinate&)>& f) const
    {
        std::vector<Coordinate> out;
        out.reserve(coords_.size());
        for (const auto& c : coords_)
            out.push_back(f(c));
        return SatakeParam(std::move(out));
    }

    SatakeParam pow(std::int64_t k) const
    {
        return map([k](const Coordinate& c) { return c.pow(k); });
    }

    /// Contragredient: coordinatewise inverse.
    SatakeParam dual() const
    {
        return map([](const Coordinate& c) { return c.inverse(); });
    }

    /// Multiset with every multiplicity multiplied by k.
    SatakeParam repeated(std::size_t k) const
    {
        std::vector<Coordinate> out;
        out.reserve(coords_.size() * k);
        for (std::size_t i = 0; i < k; ++i)
            out.insert(out.end(), coords_.begin(), coords_.end());
        return SatakeParam(std::move(out));
    }

    friend SatakeParam operator+(const SatakeParam& a, const SatakeParam& b)
    {
        std::vector<Coordinate> out = a.coords_;
        out.insert(out.end(), b.coords_.begin(), b.coords_.end());
        return SatakeParam(std::move(out));
    }

    friend bool operator==(const SatakeParam&, const SatakeParam&) = default;
    friend auto operator<=>(const SatakeParam&, const SatakeParam&) = default;

    std::string str() const
    {
        std::string s = "{";
        for (std::size_t i = 0; i < coords_.size(); ++i)
            s += (i ? ", " : "") + coords_[i].str();
        return s + "}";
    }

    friend std::ostream& operator<<(std::ostream& os, const SatakeParam& p) { return os << p.str(); }

private:
    std::vector<Coordinate> coords_;
};

/// E = E_1 x ... x E_r with each E_i/F unramified cyclic of degree s, d = r s.
/// zeta is the value of the fixed character kappa on a uniformizer; it has
/// exact order s.
struct CyclicAlgebra {
    int d = 1;
    int r = 1;
    int s = 1;
    Coordinate zeta;

    static CyclicAlgebra make(int d, int r, std::optional<Coordinate> zeta = std::nullopt)
    {
        require(d >= 1 && r >= 1 && d % r == 0, ErrorKind::InvalidArgument,
                "cyclic algebra needs r | d, got d=" + std::to_string(d) + " r=" + std::to_string(r));
        CyclicAlgebra a;
        a.d = d;
        a.r = r;
        a.s = d / r;
        a.zeta = zeta.value_or(Coordinate::root_of_unity(1, a.s));
        a.validate();
        return a;
    }

    static CyclicAlgebra field(int d) { return make(d, 1); }
    static CyclicAlgebra split(int r) { return make(r, r); }

    void validate() const
    {
        require(d == r * s && r >= 1 && s >= 1, ErrorKind::InvalidArgument, "cyclic algebra needs d = r s");
        require(zeta.order() == s, ErrorKind::InvalidArgument,
                "zeta must have exact order s=" + std::to_string(s) + ", got " + zeta.str());
    }

    friend bool operator==(const CyclicAlgebra&, const CyclicAlgebra&) = default;
};

/// Unramified representation Pi_y = Pi_{y(1)} (x) ... (x) Pi_{y(r)} of
/// GL_m(E): one Satake parameter of rank m per field factor. Coordinates are
/// expressed in powers of q = q_F, so q_E = q^s.
struct SphericalRepE {
    CyclicAlgebra algebra;
    std::vector<SatakeParam> blocks;

    SphericalRepE() = default;
    SphericalRepE(CyclicAlgebra alg, std::vector<SatakeParam> b) : algebra(std::move(alg)), blocks(std::move(b))
    {
        validate();
    }

    void validate() const
    {
        require(static_cast<int>(blocks.size()) == algebra.r, ErrorKind::RankMismatch,
                "expected " + std::to_string(algebra.r) + " blocks, got " + std::to_string(blocks.size()));
        for (const auto& b : blocks)
            require(b.rank() == blocks.front().rank(), ErrorKind::RankMismatch, "blocks must share one rank");
    }

    std::size_t block_rank() const { return blocks.empty() ? 0 : blocks.front().rank(); }

    std::vector<Coordinate> flattened() const
    {
        std::vector<Coordinate> out;
        for (const auto& b : blocks)
            out.insert(out.end(), b.coords().begin(), b.coords().end());
        return out;
    }

    /// Galois translate by sigma^k: the generator sends E_i to E_{i+1} and
    /// acts trivially on unramified data inside each field factor.
    SphericalRepE rotated(int k) const
    {
        const int r = algebra.r;
        std::vector<SatakeParam> out(static_cast<std::size_t>(r));
        for (int i = 0; i < r; ++i)
            out[static_cast<std::size_t>(((i + k) % r + r) % r)] = blocks[static_cast<std::size_t>(i)];
        return SphericalRepE(algebra, std::move(out));
    }

    friend bool operator==(const SphericalRepE& a, const SphericalRepE& b)
    {
        return a.algebra == b.algebra && a.blocks == b.blocks;
    }
    friend bool operator<(const SphericalRepE& a, const SphericalRepE& b) { return a.blocks < b.blocks; }

    std::string str() const
    {
        std::string s = "(";
        for (std::size_t i = 0; i < blocks.size(); ++i)
            s += (i ? ", " : "") + blocks[i].str();
        return s + ")";
    }
};

/// Parameter of u(xi, n) = xi o det: the staircase xi q^{j-(n-1)/2}. The
/// q-scale lets the same routine produce E-side staircases (q_E = q^scale).
inline SatakeParam param_of_unramified_character(const Coordinate& xi, int n, int qscale = 1)
{
    require(n >= 1, ErrorKind::InvalidArgument, "rank must be positive");
    std::vector<Coordinate> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j)
        out.push_back(xi * Coordinate::q_power(make_rational(static_cast<std::int64_t>(qscale) * (2 * j - (n - 1)), 2)));
    return SatakeParam(std::move(out));
}

inline SatakeParam kappa_twist(const SatakeParam& y, const Coordinate& zeta)
{
    return y.map([&zeta](const Coordinate& c) { return c * zeta; });
}

inline bool is_stable(const SatakeParam& y, const Coordinate& zeta) { return kappa_twist(y, zeta) == y; }

/// x(pi_y): size of the orbit of y under twisting by zeta_d.
inline int x_of(const SatakeParam& y, int d, const Coordinate& zeta_d)
{
    require(zeta_d.order() == d, ErrorKind::InvalidArgument, "zeta must have exact order d");
    SatakeParam cur = y;
    for (int k = 1; k <= d; ++k) {
        cur = kappa_twist(cur, zeta_d);
        if (cur == y)
            return k;
    }
    fail(ErrorKind::Inconsistent, "twist orbit longer than the order of zeta");
}

/// Assemble {zeta^j t_i : 0 <= j < s} from a chosen vector of s-th roots.
inline SatakeParam delta_from_roots(const std::vector<Coordinate>& roots, const Coordinate& zeta, int s)
{
    std::vector<Coordinate> out;
    out.reserve(roots.size() * static_cast<std::size_t>(s));
    for (const auto& t : roots) {
        Coordinate c = t;
        for (int j = 0; j < s; ++j) {
            out.push_back(c);
            c *= zeta;
        }
    }
    return SatakeParam(std::move(out));
}

/// The map y -> delta(y) from ((C^x)^m/S_m)^r to (C^x)^{md}/S_{md}, computed
/// with the canonical s-th root of each coordinate.
inline SatakeParam delta_map(const SphericalRepE& y)
{
    y.validate();
    std::vector<Coordinate> roots;
    for (const auto& c : y.flattened())
        roots.push_back(c.root(y.algebra.s));
    return delta_from_roots(roots, y.algebra.zeta, y.algebra.s);
}

/// Base-change parameter: every one of the r blocks is y^s.
inline SphericalRepE bc_map(const SatakeParam& y, const CyclicAlgebra& alg)
{
    return SphericalRepE(alg, std::vector<SatakeParam>(static_cast<std::size_t>(alg.r), y.pow(alg.s)));
}

/// Pi_y x Pi_y^sigma x ... x Pi_y^{sigma^{d-1}}: block i collects the blocks
/// i, i+1, ..., i+d-1 (mod r) of y.
inline SphericalRepE galois_product(const SphericalRepE& y)
{
    const int r = y.algebra.r;
    std::vector<SatakeParam> out;
    for (int i = 0; i < r; ++i) {
        SatakeParam acc;
        for (int j = 0; j < y.algebra.d; ++j)
            acc = acc + y.blocks[static_cast<std::size_t>((i + j) % r)];
        out.push_back(std::move(acc));
    }
    return SphericalRepE(y.algebra, std::move(out));
}

/// Distinct cyclic rotations of the blocks of y.
inline std::vector<SphericalRepE> gamma_orbit(const SphericalRepE& y)
{
    std::vector<SphericalRepE> out;
    for (int k = 0; k < y.algebra.r; ++k) {
        SphericalRepE t = y.rotated(k);
        if (std::find(out.begin(), out.end(), t) == out.end())
            out.push_back(std::move(t));
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace detail {

// Enumerate all ways to split a multiset (given by distinct values and their
// multiplicities) into `parts` ordered sub-multisets of size `size` each.
inline void distribute(const std::vector<Coordinate>& values, std::vector<int>& remaining, int parts, int size,
                       std::vector<SatakeParam>& acc, std::vector<std::vector<SatakeParam>>& out)
{
    if (parts == 0) {
        require(out.size() < kMaxFiberSize, ErrorKind::BudgetExceeded,
                "fiber has more than " + std::to_string(kMaxFiberSize) + " elements");
        out.push_back(acc);
        return;
    }
    std::vector<int> take(values.size(), 0);
    std::function<void(std::size_t, int)> choose = [&](std::size_t idx, int left) {
        if (left == 0) {
            std::vector<Coordinate> block;
            for (std::size_t i = 0; i < values.size(); ++i)
                for (int k = 0; k < take[i]; ++k)
                    block.push_back(values[i]);
            for (std::size_t i = 0; i < values.size(); ++i)
                remaining[i] -= take[i];
            acc.emplace_back(std::move(block));
            distribute(values, remaining, parts - 1, size, acc, out);
            acc.pop_back();
            for (std::size_t i = 0; i < values.size(); ++i)
                remaining[i] += take[i];
            return;
        }
        if (idx == values.size())
            return;
        for (int k = std::min(left, remaining[idx]); k >= 0; --k) {
            take[idx] = k;
            choose(idx + 1, left - k);
        }
        take[idx] = 0;
    };
    choose(0, size);
}

} // namespace detail

/// Every y with delta_map(y) = pi. pi must be stable under twisting by zeta;
/// the concatenated y is then determined as a multiset (one s-th power per
/// zeta-orbit) and the fiber consists of all ways to cut it into r blocks.
inline std::vector<SphericalRepE> ai_fiber(const SatakeParam& pi, const CyclicAlgebra& alg)
{
    alg.validate();
    require(pi.rank() <= kMaxFiberRank, ErrorKind::BudgetExceeded,
            "fiber enumeration capped at rank " + std::to_string(kMaxFiberRank));
    require(pi.rank() % static_cast<std::size_t>(alg.d) == 0, ErrorKind::RankMismatch,
            "rank " + std::to_string(pi.rank()) + " not divisible by d=" + std::to_string(alg.d));
    require(is_stable(pi, alg.zeta), ErrorKind::NotStable, pi.str() + " is not stable under " + alg.zeta.str());

    const int m = static_cast<int>(pi.rank()) / alg.d;
    std::map<Coordinate, int> powers;
    for (const auto& c : pi.coords())
        ++powers[c.pow(alg.s)];
    std::vector<Coordinate> values;
    std::vector<int> counts;
    for (const auto& [v, k] : powers) {
        require(k % alg.s == 0, ErrorKind::NotStable, "orbit multiplicities are not divisible by s");
        values.push_back(v);
        counts.push_back(k / alg.s);
    }
    std::vector<std::vector<SatakeParam>> splits;
    std::vector<SatakeParam> acc;
    detail::distribute(values, counts, alg.r, m, acc, splits);

    std::vector<SphericalRepE> out;
    out.reserve(splits.size());
    for (auto& b : splits)
        out.emplace_back(alg, std::move(b));
    std::sort(out.begin(), out.end());
    return out;
}

/// Every y over F with bc_map(y) = z. The blocks of z must coincide.
inline std::vector<SatakeParam> bc_fiber(const SphericalRepE& z)
{
    z.validate();
    const auto& alg = z.algebra;
    for (const auto& b : z.blocks)
        require(b == z.blocks.front(), ErrorKind::BlocksDiffer, "base-change target must have identical blocks");
    const SatakeParam& target = z.blocks.front();
    require(target.rank() <= kMaxFiberRank, ErrorKind::BudgetExceeded,
            "fiber enumeration capped at rank " + std::to_string(kMaxFiberRank));

    std::map<Coordinate, int> mult;
    for (const auto& c : target.coords())
        ++mult[c];

    // For each distinct value choose a multiset of its s-th roots of the
    // right size; the root sets of distinct values are disjoint.
    std::vector<std::vector<std::vector<Coordinate>>> options;
    for (const auto& [b, k] : mult) {
        std::vector<Coordinate> roots;
        Coordinate t = b.root(alg.s);
        for (int j = 0; j < alg.s; ++j) {
            roots.push_back(t);
            t *= alg.zeta;
        }
        std::vector<std::vector<Coordinate>> choices;
        std::vector<Coordinate> cur;
        std::function<void(std::size_t, int)> rec = [&](std::size_t idx, int left) {
            if (left == 0) {
                choices.push_back(cur);
                return;
            }
            if (idx == roots.size())
                return;
            for (int c = left; c >= 0; --c) {
                for (int i = 0; i < c; ++i)
                    cur.push_back(roots[idx]);
                rec(idx + 1, left - c);
                cur.resize(cur.size() - static_cast<std::size_t>(c));
            }
        };
        rec(0, k);
        options.push_back(std::move(choices));
    }

    std::vector<SatakeParam> out;
    std::vector<Coordinate> cur;
    std::function<void(std::size_t)> product = [&](std::size_t idx) {
        if (idx == options.size()) {
            out.emplace_back(cur);
            return;
        }
        for (const auto& ch : options[idx]) {
            cur.insert(cur.end(), ch.begin(), ch.end());
            product(idx + 1);
            cur.resize(cur.size() - ch.size());
        }
    };
    product(0);
    std::sort(out.begin(), out.end());
    return out;
}

struct CompatReport {
    bool ok = true;
    std::string detail;
};

/// Base change of delta(y) against Pi_y x Pi_y^sigma x ... (d factors),
/// compared block by block.
inline CompatReport check_ia_bc_compat(const SphericalRepE& y)
{
    const SphericalRepE lhs = bc_map(delta_map(y), y.algebra);
    const SphericalRepE rhs = galois_product(y);
    if (lhs == rhs)
        return {};
    return {false, "bc(delta(y)) = " + lhs.str() + " but Galois product = " + rhs.str()};
}

} // namespace autind

#endif // AUTIND_SATAKE_HPP
