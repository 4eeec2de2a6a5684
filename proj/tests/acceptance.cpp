// Acceptance driver: one PASS/FAIL line per criterion.
//
// Exit status is nonzero when any criterion fails, except criterion 5's
// comparison with the Galois orbit, which is known not to hold for this
// delta (see the FAIL line). Its library-versus-brute-force half still gates
// the exit status.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include <autind/global.hpp>
#include <autind/hecke.hpp>
#include <autind/random_pool.hpp>

#include "oracles.hpp"

using namespace autind;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    bool gates_exit = true;
};

int g_exit = 0;

void report(int id, const std::string& title, const std::function<Outcome()>& body)
{
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const Error& e) {
        o = {false, std::string("unexpected ") + std::string(kind_name(e.kind())) + ": " + e.detail()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("[%s] %2d %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", id, title.c_str(), o.detail.c_str(), secs);
    std::fflush(stdout);
    if (!o.pass && o.gates_exit)
        g_exit = 1;
}

double elapsed(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// m <= 3, d in {2,3,4,6}, every r | d, coordinates with root orders <= 24.
std::vector<SphericalRepE> delta_pool(std::size_t count)
{
    pool::Rng rng(1001);
    const std::vector<int> degrees{2, 3, 4, 6};
    std::vector<SphericalRepE> out;
    for (std::size_t i = 0; i < count; ++i) {
        const auto alg = pool::algebra(rng, degrees[i % degrees.size()]);
        out.push_back(pool::rep_e(rng, alg, static_cast<int>(pool::uniform(rng, 1, 3)), 24));
    }
    return out;
}

std::string count_str(std::size_t ok, std::size_t total) { return std::to_string(ok) + "/" + std::to_string(total); }

// Symbolic E-side atoms without payloads: arbitrary size, r | d, segment length.
UnitaryProduct symbolic_unitary(pool::Rng& rng, int d, int& serial)
{
    static const std::vector<Rational> alphas{make_rational(1, 4), make_rational(1, 3), make_rational(2, 5)};
    UnitaryProduct out;
    const int factors = static_cast<int>(pool::uniform(rng, 1, 3));
    for (int i = 0; i < factors; ++i) {
        CuspidalAtom a;
        a.side = Side::E;
        a.d = d;
        a.size = static_cast<int>(pool::uniform(rng, 1, 3));
        a.orbit = pool::pick(rng, pool::divisors(d));
        a.id = "sym" + std::to_string(serial++);
        const AtomRef ref(make_atom(std::move(a)), static_cast<int>(pool::uniform(rng, 0, 5)));
        const Speh u(EssDiscrete(ref, static_cast<int>(pool::uniform(rng, 1, 3))), static_cast<int>(pool::uniform(rng, 1, 3)));
        if (pool::uniform(rng, 0, 2) == 0)
            out.push(TwistedPair(u, pool::pick(rng, alphas)));
        else
            out.push(u);
    }
    return out;
}

} // namespace

int main()
{
    const auto pool500 = delta_pool(500);

    report(1, "delta well-definedness", [&] {
        const auto t0 = std::chrono::steady_clock::now();
        std::size_t ok = 0, choices = 0;
        for (const auto& y : pool500) {
            const auto images = oracle::delta_all_choices(y);
            std::size_t n = 1;
            for (std::size_t i = 0; i < y.block_rank() * static_cast<std::size_t>(y.algebra.r); ++i)
                n *= static_cast<std::size_t>(y.algebra.s);
            choices += n;
            if (images.size() == 1 && *images.begin() == delta_map(y).coords())
                ++ok;
        }
        const double t = elapsed(t0);
        return Outcome{ok == pool500.size() && t <= 30.0,
                       count_str(ok, pool500.size()) + " parameters, " + std::to_string(choices) +
                           " root choices enumerated"};
    });

    report(2, "Hecke transfer oracle", [] {
        const auto t0 = std::chrono::steady_clock::now();
        pool::Rng rng(1002);
        const int cases = 100;
        int ok = 0;
        for (int i = 0; i < cases; ++i) {
            const int d = 1 + i % 3;
            const auto alg = pool::algebra(rng, d);
            const int m = static_cast<int>(pool::uniform(rng, 1, 6 / d));
            const auto f = pool::sym_laurent(rng, m * d, 6);
            const auto y = pool::rep_e(rng, alg, m);
            const QCyclo lhs = oracle::evaluate(f, delta_map(y).coords());
            if (lhs == ai_transfer_blocks(f, alg).evaluate(y.blocks) &&
                lhs == satake_eval(ai_transfer(f, alg), SatakeParam(y.flattened())))
                ++ok;
        }
        const double t = elapsed(t0);
        return Outcome{ok == cases && t <= 60.0, count_str(ok, cases) + " (f, y) pairs with n <= 6, deg <= 6, d <= 3"};
    });

    report(3, "base-change transfer oracle", [] {
        const auto t0 = std::chrono::steady_clock::now();
        pool::Rng rng(1003);
        const int cases = 100;
        int ok = 0;
        for (int i = 0; i < cases; ++i) {
            const int d = 1 + i % 3;
            const auto alg = pool::algebra(rng, d);
            const int n = static_cast<int>(pool::uniform(rng, 1, 6 / d));
            std::vector<SymLaurent> blocks;
            for (int b = 0; b < alg.r; ++b)
                blocks.push_back(pool::sym_laurent(rng, n, 6 / alg.r, 2));
            const auto y = pool::param(rng, n);
            const auto z = bc_map(y, alg);
            QCyclo lhs(1);
            for (int b = 0; b < alg.r; ++b)
                lhs *= oracle::evaluate(blocks[static_cast<std::size_t>(b)], z.blocks[static_cast<std::size_t>(b)].coords());
            if (satake_eval(bc_transfer(blocks, alg, 18), y) == lhs &&
                satake_eval(bc_transfer(HeckeTensor::product_of(blocks), alg, 18), y) == lhs)
                ++ok;
        }
        const double t = elapsed(t0);
        return Outcome{ok == cases && t <= 60.0, count_str(ok, cases) + " (f, y) pairs, output degree <= 18"};
    });

    report(4, "central character", [&] {
        std::size_t ok = 0;
        for (const auto& y : pool500) {
            const auto& a = y.algebra;
            const std::int64_t e = static_cast<std::int64_t>(y.block_rank()) * a.r * a.s * (a.s - 1) / 2;
            if (oracle::product(delta_map(y).coords()) == a.zeta.pow(e) * oracle::product(oracle::flatten(y)))
                ++ok;
        }
        return Outcome{ok == pool500.size(), count_str(ok, pool500.size()) + " parameters"};
    });

    report(5, "fibers against brute force", [] {
        pool::Rng rng(1005);
        const int cases = 240;
        int lib_ai = 0, lib_bc = 0, orbit = 0;
        std::string example;
        for (int i = 0; i < cases; ++i) {
            const int d = 1 + i % 4;
            const auto alg = pool::algebra(rng, d);
            const int m = static_cast<int>(pool::uniform(rng, 1, std::max(1, 4 / d)));
            const auto y = pool::rep_e(rng, alg, m, 6);
            const auto pi = delta_map(y);
            std::vector<Coordinate> cands;
            for (const auto& c : pi.coords())
                cands.push_back(c.pow(alg.s));
            for (int k = 0; k < 3; ++k)
                cands.push_back(pool::coordinate(rng, 6));
            const auto brute = oracle::ai_fiber_search(pi.coords(), alg, cands);

            std::set<std::vector<std::vector<Coordinate>>> lib, rotations;
            for (const auto& z : ai_fiber(pi, alg)) {
                std::vector<std::vector<Coordinate>> b;
                for (const auto& blk : z.blocks)
                    b.push_back(blk.coords());
                lib.insert(b);
            }
            for (int k = 0; k < alg.r; ++k) {
                std::vector<std::vector<Coordinate>> b;
                for (int j = 0; j < alg.r; ++j)
                    b.push_back(y.blocks[static_cast<std::size_t>((j + k) % alg.r)].coords());
                rotations.insert(b);
            }
            lib_ai += lib == brute;
            if (rotations == brute)
                ++orbit;
            else if (example.empty())
                example = "e.g. " + y.str() + " has " + std::to_string(brute.size()) + " preimages, " +
                          std::to_string(rotations.size()) + " rotations";

            const auto yf = pool::param(rng, static_cast<int>(pool::uniform(rng, 1, 4 / std::max(1, alg.s) + 1)), 6);
            const auto zf = bc_map(yf, alg);
            std::vector<Coordinate> bc_cands;
            for (const auto& c : zf.blocks[0].coords())
                for (const auto& t : oracle::all_roots(c, alg.s))
                    bc_cands.push_back(t);
            bc_cands.push_back(pool::coordinate(rng, 6));
            std::set<std::vector<Coordinate>> mine;
            for (const auto& p : bc_fiber(zf))
                mine.insert(p.coords());
            lib_bc += mine == oracle::bc_fiber_search(zf.blocks[0].coords(), alg.s, bc_cands);
        }
        Outcome o;
        o.pass = lib_ai == cases && lib_bc == cases && orbit == cases;
        o.gates_exit = !(lib_ai == cases && lib_bc == cases);
        o.detail = "ai_fiber = brute force " + count_str(lib_ai, cases) + ", bc_fiber = brute force " +
                   count_str(lib_bc, cases) + ", brute-force fiber = Galois orbit " + count_str(orbit, cases);
        if (orbit != cases)
            o.detail += "; delta only sees the union of the blocks, so regroupings that are not rotations share "
                        "its image (" + example + ")";
        return o;
    });

    report(6, "trivial-character chain", [] {
        int ok = 0, total = 0;
        for (int d = 1; d <= 4; ++d)
            for (int r : pool::divisors(d))
                for (int m = 1; m <= 4; ++m) {
                    const auto alg = CyclicAlgebra::make(d, r);
                    const auto one = trivial_rep_e(alg, m);
                    ++total;
                    ok += specialize(lift_unitary(one)) == delta_map(specialize_e(one));
                }
        return Outcome{ok == total, count_str(ok, total) + " (d, r, m) with m <= 4, d <= 4"};
    });

    report(7, "consistency square", [] {
        pool::Rng rng(1007);
        const std::vector<int> degrees{1, 2, 3, 4, 6};
        const int cases = 250;
        int ok = 0;
        for (int i = 0; i < cases; ++i) {
            const auto alg = pool::algebra(rng, degrees[static_cast<std::size_t>(i) % degrees.size()]);
            const auto tau = pool::unitary_e(rng, alg, 6);
            ok += specialize(lift_unitary(tau)) == delta_map(specialize_e(tau));
        }
        return Outcome{ok == cases, count_str(ok, cases) + " unitary products of rank <= 6"};
    });

    report(8, "elliptic combinatorics", [] {
        int ok = 0, total = 0;
        int serial = 0;
        for (int d : {1, 2, 3, 4, 6})
            for (int r : pool::divisors(d))
                for (int k = 1; k <= 5; ++k) {
                    CuspidalAtom a;
                    a.side = Side::E;
                    a.d = d;
                    a.orbit = r;
                    a.size = 1 + serial % 3;
                    a.id = "ell" + std::to_string(serial++);
                    const AtomRef rho(make_atom(std::move(a)));
                    const auto levis = compositions(k);
                    std::set<EllipticProduct> images;
                    int si = 0;
                    for (const auto& levi : levis) {
                        const auto img = lift_elliptic(Elliptic(rho, k, levi));
                        images.insert(img);
                        si += std::all_of(img.factors.begin(), img.factors.end(),
                                          [](const Elliptic& e) { return e.square_integrable(); });
                    }
                    ++total;
                    ok += levis.size() == (std::size_t{1} << (k - 1)) && images.size() == levis.size() && si == 1;
                }
        return Outcome{ok == total, count_str(ok, total) + " (atom, k) with k <= 5"};
    });

    report(9, "local L-factor identity and separation", [] {
        pool::Rng rng(1009);
        int identity_ok = 0;
        for (int i = 0; i < 1000; ++i) {
            // l delta = l' delta' forces delta = c^{l'/g}, delta' = c^{l/g} for some c
            const auto c = pool::param(rng, static_cast<int>(pool::uniform(rng, 1, 2)));
            const int a = static_cast<int>(pool::uniform(rng, 1, 3));
            const int b = static_cast<int>(pool::uniform(rng, 1, 3));
            const int k = static_cast<int>(pool::uniform(rng, 1, 2));
            const int d = pool::pick(rng, std::vector<int>{1, 2, 3, 4, 6});
            identity_ok += lemma46_local_identity(c.repeated(static_cast<std::size_t>(a)), b * k,
                                               c.repeated(static_cast<std::size_t>(b)), a * k, d);
        }
        int sep_ok = 0, sep_total = 0, twisted = 0, distinct = 0, regenerated = 0;
        for (int i = 0; i < 240; ++i) {
            const int d = pool::pick(rng, std::vector<int>{2, 3, 4, 6});
            const PlaceSet vs = pool::places(rng, d);
            const int r = pool::pick(rng, pool::divisors(d));
            const auto lam = pool::global_cusp_e(rng, vs, r, static_cast<int>(pool::uniform(rng, 1, 2)));
            const int l = static_cast<int>(pool::uniform(rng, 1, 3));
            const int q = static_cast<int>(pool::uniform(rng, 1, 2));
            auto power = [&](const GlobalCuspPtr& c, int t, int copies) {
                return InducedGlobal(std::vector<GlobalDiscrete>(static_cast<std::size_t>(copies), GlobalDiscrete(c, t, q)));
            };
            ++sep_total;
            switch (i % 3) {
            case 0: { // Galois-twisted pair
                const int t = static_cast<int>(pool::uniform(rng, 0, lam->g() - 1));
                const auto s = separate(power(lam, 0, l), power(lam, t, l));
                sep_ok += !s.distinct && s.l == l && s.gamma == t;
                ++twisted;
                break;
            }
            case 1: { // unrelated cusp
                GlobalCuspPtr other;
                for (;;) {
                    other = pool::global_cusp_e(rng, vs, r, lam->size);
                    bool same_everywhere = true;
                    for (const auto& v : vs)
                        same_everywhere = same_everywhere && delta_map(GlobalDiscrete(other, 0, q).local_e(v.label)) ==
                                                                 delta_map(GlobalDiscrete(lam, 0, q).local_e(v.label));
                    if (!same_everywhere)
                        break;
                    ++regenerated;
                }
                sep_ok += separate(power(lam, 0, l), power(other, 0, l)).distinct;
                ++distinct;
                break;
            }
            default: { // same cusp, different multiplicity
                sep_ok += separate(power(lam, 0, l), power(lam, 0, l + 1)).distinct;
                ++distinct;
                break;
            }
            }
        }
        return Outcome{identity_ok == 1000 && sep_ok == sep_total,
                       "L-factor identity " + count_str(identity_ok, 1000) + ", separate " + count_str(sep_ok, sep_total) +
                           " (" + std::to_string(twisted) + " twisted, " + std::to_string(distinct) + " distinct, " +
                           std::to_string(regenerated) + " locally indistinguishable draws redrawn)"};
    });

    report(10, "lift and base-change compatibility", [] {
        pool::Rng rng(1010);
        int global_ok = 0, local_ok = 0, cases = 0;
        std::set<int> residue_degrees;
        std::string first;
        for (int i = 0; i < 240; ++i) {
            const int d = pool::pick(rng, std::vector<int>{2, 3, 4, 6});
            const PlaceSet vs = pool::places(rng, d, 3);
            for (const auto& v : vs)
                residue_degrees.insert(v.f);
            const int r = i % 2 ? 1 : d;
            const auto lam = pool::global_cusp_e(rng, vs, r, static_cast<int>(pool::uniform(rng, 1, 2)));
            const auto rep = check_global_compat(GlobalDiscrete(lam, static_cast<int>(pool::uniform(rng, 0, lam->g() - 1)),
                                                                static_cast<int>(pool::uniform(rng, 1, 2))));
            global_ok += rep.ok;
            if (!rep.ok && first.empty())
                first = rep.detail;
            const auto y = pool::rep_e(rng, CyclicAlgebra::make(d, r), static_cast<int>(pool::uniform(rng, 1, 2)));
            local_ok += check_ia_bc_compat(y).ok;
            ++cases;
        }
        std::string fs;
        for (int f : residue_degrees)
            fs += (fs.empty() ? "" : ",") + std::to_string(f);
        return Outcome{global_ok == cases && local_ok == cases,
                       "global " + count_str(global_ok, cases) + ", local " + count_str(local_ok, cases) +
                           ", r in {1, d}, residue degrees {" + fs + "}" + (first.empty() ? "" : "; " + first)};
    });

    report(11, "genericity equivalence", [] {
        pool::Rng rng(1011);
        int ok = 0, total = 0, serial = 0;
        const std::vector<int> degrees{1, 2, 3, 4, 6};
        for (int i = 0; i < 600; ++i) {
            const int d = degrees[static_cast<std::size_t>(i) % degrees.size()];
            const UnitaryProduct tau = i % 2 ? symbolic_unitary(rng, d, serial)
                                             : pool::unitary_e(rng, pool::algebra(rng, d), 6);
            ++total;
            ok += is_generic(tau) == is_generic(lift_unitary(tau));
        }
        return Outcome{ok == total, count_str(ok, total) + " products (symbolic and unramified)"};
    });

    return g_exit;
}
