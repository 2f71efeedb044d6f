#include "latq/linking.hpp"

#include <algorithm>
#include <cmath>

namespace latq {

const char* block_kind_name(BlockKind k) {
    switch (k) {
        case BlockKind::A: return "A";
        case BlockKind::B: return "B";
        case BlockKind::Cyc2: return "Cyc2";
        case BlockKind::E: return "E";
        case BlockKind::F: return "F";
        case BlockKind::Pair2: return "Pair2";
    }
    return "?";
}

Int PairingBlock::group_order() const {
    Int o = 1;
    for (int i = 0; i < exponent; ++i) o *= prime;
    return is_rank2() ? o * o : o;
}

namespace {

std::vector<Int> scaled(const std::vector<Int>& x, const Int& c) {
    std::vector<Int> r(x.size());
    for (size_t i = 0; i < x.size(); ++i) r[i] = c * x[i];
    return r;
}

std::vector<Int> added(const std::vector<Int>& x, const std::vector<Int>& y) {
    std::vector<Int> r(x.size());
    for (size_t i = 0; i < x.size(); ++i) r[i] = x[i] + y[i];
    return r;
}

std::vector<Int> subbed(const std::vector<Int>& x, const std::vector<Int>& y, const Int& c) {
    std::vector<Int> r(x.size());
    for (size_t i = 0; i < x.size(); ++i) r[i] = x[i] - c * y[i];
    return r;
}

// Shared exact data for computations in L'/L.
struct GroupCtx {
    const SymGram& g;
    RatMat qinv;
    Snf snf;

    explicit GroupCtx(const SymGram& gram) : g(gram), qinv(gram.dual_gram()), snf(smith_normal_form(gram.matrix())) {}

    Rat link(const std::vector<Int>& x, const std::vector<Int>& y) const {
        std::vector<Rat> rx(x.begin(), x.end()), ry(y.begin(), y.end());
        return mod1(dot(rx, mat_vec(qinv, ry)));
    }

    Int order(const std::vector<Int>& x) const {
        Int ord = 1;
        const int n = g.rank();
        for (int i = 0; i < n; ++i) {
            Int yi = 0;
            for (int j = 0; j < n; ++j) yi += snf.u.at(i, j) * x[j];
            const Int& di = snf.d.at(i, i);
            Int q = di / gcd(di, yi % di == 0 ? di : yi);
            ord = lcm(ord, q);
        }
        return ord;
    }

    // canonical representative: subtract the lattice part
    std::vector<Int> reduce(const std::vector<Int>& x) const {
        std::vector<Rat> rx(x.begin(), x.end());
        std::vector<Rat> y = mat_vec(qinv, rx);
        std::vector<Int> out(x.begin(), x.end());
        const int n = g.rank();
        for (int j = 0; j < n; ++j) {
            Int f = rat_floor(y[j]);
            if (f == 0) continue;
            for (int i = 0; i < n; ++i) out[i] -= f * g.at(i, j);
        }
        return out;
    }
};

}  // namespace

Int element_order(const SymGram& g, const std::vector<Int>& x) {
    if (g.is_degenerate()) throw std::invalid_argument("degenerate form");
    return GroupCtx(g).order(x);
}

DiscriminantGroup discriminant_group(const SymGram& g) {
    if (g.is_degenerate()) throw std::invalid_argument("degenerate form");
    GroupCtx ctx(g);
    IntMat uinv = int_inverse_unimodular(ctx.snf.u);
    DiscriminantGroup dg;
    const int n = g.rank();
    for (int i = 0; i < n; ++i) {
        const Int& di = ctx.snf.d.at(i, i);
        if (di <= 1) continue;
        std::vector<Int> gen(n);
        for (int r = 0; r < n; ++r) gen[r] = uinv.at(r, i);
        gen = ctx.reduce(gen);
        if (ctx.order(gen) != di) throw std::logic_error("generator order disagrees with the invariant factor");
        dg.orders.push_back(di);
        dg.generators.push_back(std::move(gen));
    }
    return dg;
}

Rat linking_value(const SymGram& g, const std::vector<Int>& x, const std::vector<Int>& y) {
    if (static_cast<int>(x.size()) != g.rank() || static_cast<int>(y.size()) != g.rank())
        throw std::invalid_argument("dimension mismatch");
    std::vector<Rat> rx(x.begin(), x.end()), ry(y.begin(), y.end());
    return mod1(dot(rx, mat_vec(g.dual_gram(), ry)));
}

Rat quadratic_value_even(const SymGram& g, const std::vector<Int>& x) {
    if (!g.is_even()) throw std::invalid_argument("quadratic value requires an even lattice");
    if (static_cast<int>(x.size()) != g.rank()) throw std::invalid_argument("dimension mismatch");
    std::vector<Rat> rx(x.begin(), x.end());
    return mod_reduce(dot(rx, mat_vec(g.dual_gram(), rx)), Rat(2));
}

BlockKind classify_odd_cyclic(const Int& p, int exponent, const Rat& gen_square) {
    if (p < 3 || p % 2 == 0 || !is_prime(p)) throw std::invalid_argument("prime must be odd");
    if (exponent < 1) throw std::invalid_argument("exponent must be positive");
    Int pk = 1;
    for (int i = 0; i < exponent; ++i) pk *= p;
    Rat v = mod1(gen_square);
    if (v.get_den() != pk)
        throw std::invalid_argument("generator square must have denominator exactly p^k");
    return is_quadratic_residue(v.get_num(), p) ? BlockKind::A : BlockKind::B;
}

namespace {

Int pow_int(const Int& p, int k) {
    Int r = 1;
    for (int i = 0; i < k; ++i) r *= p;
    return r;
}

// numerator of lambda over denominator p^k (lambda must lie in (1/p^k) Z / Z)
Int numerator_at_scale(const Rat& lambda, const Int& pk) {
    Rat v = Rat(pk) * lambda;
    if (!rat_is_integer(v)) throw std::logic_error("linking value outside the expected scale");
    Int r = v.get_num() % pk;
    if (r < 0) r += pk;
    return r;
}

struct Splitter {
    const GroupCtx& ctx;
    Int p;

    int p_exponent(const std::vector<Int>& x) const { return valuation(ctx.order(x), p); }

    // orthogonal-complement reduction against a cyclic block generator
    void reduce_against(std::vector<std::vector<Int>>& gens, const std::vector<Int>& x, const Int& a,
                        const Int& pk) const {
        Int ainv = inv_mod(a, pk);
        for (auto& y : gens) {
            Int b = numerator_at_scale(ctx.link(x, y), pk);
            if (b == 0) continue;
            y = ctx.reduce(subbed(y, x, b * ainv % pk));
        }
    }

    // orthogonal-complement reduction against a rank-2 block (x, y)
    void reduce_against_pair(std::vector<std::vector<Int>>& gens, const std::vector<Int>& x,
                             const std::vector<Int>& y, const Int& pk) const {
        auto mod_pos = [&](Int v) {
            v %= pk;
            if (v < 0) v += pk;
            return v;
        };
        Int a = numerator_at_scale(ctx.link(x, x), pk);
        Int b = numerator_at_scale(ctx.link(x, y), pk);
        Int c = numerator_at_scale(ctx.link(y, y), pk);
        Int dinv = inv_mod(mod_pos(a * c - b * b), pk);
        for (auto& z : gens) {
            Int r1 = numerator_at_scale(ctx.link(x, z), pk);
            Int r2 = numerator_at_scale(ctx.link(y, z), pk);
            Int c1 = mod_pos(dinv * (c * r1 - b * r2));
            Int c2 = mod_pos(dinv * (a * r2 - b * r1));
            if (c1 == 0 && c2 == 0) continue;
            z = ctx.reduce(subbed(subbed(z, x, c1), y, c2));
        }
    }

    std::vector<PairingBlock> split_odd(std::vector<std::vector<Int>> gens) const {
        std::vector<PairingBlock> out;
        while (true) {
            std::erase_if(gens, [&](const std::vector<Int>& v) { return ctx.order(v) == 1; });
            if (gens.empty()) break;
            int k = 0;
            for (const auto& v : gens) k = std::max(k, p_exponent(v));
            const Int pk = pow_int(p, k);
            // a maximal-order element with unit self-pairing exists among the
            // generators and their pairwise sums (2 is invertible); prefer a
            // residue-type unit so each layer carries at most one B block,
            // which makes the block list canonical under B+B = A+A
            std::vector<std::vector<Int>> cands;
            for (const auto& v : gens)
                if (p_exponent(v) == k) cands.push_back(v);
            for (size_t i = 0; i < gens.size(); ++i)
                for (size_t j = i + 1; j < gens.size(); ++j) {
                    auto s = ctx.reduce(added(gens[i], gens[j]));
                    if (p_exponent(s) == k) cands.push_back(std::move(s));
                }
            const std::vector<Int>* pick = nullptr;
            for (int pass = 0; pass < 2 && !pick; ++pass)
                for (const auto& cand : cands) {
                    Rat sq = ctx.link(cand, cand);
                    if (sq.get_den() != pk) continue;
                    if (pass == 0 && !is_quadratic_residue(sq.get_num(), p)) continue;
                    pick = &cand;
                    break;
                }
            if (!pick) throw std::logic_error("no unit-pairing element of maximal order at an odd prime");
            std::vector<Int> x = *pick;
            Rat sq = ctx.link(x, x);
            Int a = numerator_at_scale(sq, pk);
            PairingBlock blk;
            blk.kind = classify_odd_cyclic(p, k, sq);
            blk.prime = p;
            blk.exponent = k;
            blk.gen_square = sq;
            blk.generators = {x};
            reduce_against(gens, x, a, pk);
            out.push_back(std::move(blk));
        }
        return out;
    }

    // Retarget the self-pairing of x to `target` by substitutions u x + t y
    // with u a unit; such substitutions together with the matching y-step
    // generate enough of GL_2(Z/2^k) to reach the standard block shapes.
    bool normalize_elem(std::vector<Int>& x, const std::vector<Int>& y, const Int& pk,
                        const Rat& target) const {
        if (mod1(ctx.link(x, x) - target) == 0) return true;
        if (pk > (1 << 10)) return false;  // give up; reported as a raw pair
        for (Int u = 1; u < pk; u += 2)
            for (Int t = 0; t < pk; ++t) {
                if (u == 1 && t == 0) continue;
                auto cand = ctx.reduce(added(scaled(x, u), scaled(y, t)));
                if (mod1(ctx.link(cand, cand) - target) == 0) {
                    x = cand;
                    return true;
                }
            }
        return false;
    }

    std::vector<PairingBlock> split_two(std::vector<std::vector<Int>> gens, bool lattice_even,
                                        const SymGram& g) const {
        std::vector<PairingBlock> out;
        while (true) {
            std::erase_if(gens, [&](const std::vector<Int>& v) { return ctx.order(v) == 1; });
            if (gens.empty()) break;
            int k = 0;
            for (const auto& v : gens) k = std::max(k, p_exponent(v));
            const Int pk = pow_int(p, k);
            int xi = -1, odd_xi = -1;
            for (size_t i = 0; i < gens.size(); ++i) {
                if (p_exponent(gens[i]) != k) continue;
                if (xi < 0) xi = static_cast<int>(i);
                if (odd_xi < 0 && numerator_at_scale(ctx.link(gens[i], gens[i]), pk) % 2 == 1)
                    odd_xi = static_cast<int>(i);
            }
            if (xi < 0) throw std::logic_error("no generator of maximal 2-power order");
            if (odd_xi >= 0) {
                std::vector<Int> x = gens[odd_xi];
                gens.erase(gens.begin() + odd_xi);
                Rat sq = ctx.link(x, x);
                Int a = numerator_at_scale(sq, pk);
                PairingBlock blk;
                blk.kind = BlockKind::Cyc2;
                blk.prime = p;
                blk.exponent = k;
                blk.gen_square = sq;
                blk.generators = {x};
                reduce_against(gens, x, a, pk);
                out.push_back(std::move(blk));
                continue;
            }
            // no cyclic split possible: pair the generator with a partner whose
            // mutual pairing has full order 2^k (exists by nondegeneracy)
            std::vector<Int> x = gens[xi];
            gens.erase(gens.begin() + xi);
            int yi = -1;
            for (size_t i = 0; i < gens.size(); ++i)
                if (numerator_at_scale(ctx.link(x, gens[i]), pk) % 2 == 1) {
                    yi = static_cast<int>(i);
                    break;
                }
            if (yi < 0) throw std::logic_error("even-diagonal generator with no full-order partner");
            std::vector<Int> y = gens[yi];
            gens.erase(gens.begin() + yi);
            reduce_against_pair(gens, x, y, pk);

            PairingBlock blk;
            blk.prime = p;
            blk.exponent = k;
            if (k == 1) {
                // hyperbolic plane on (Z/2)^2; E and F agree as bilinear
                // pairings here, so use quadratic values when they exist
                blk.kind = BlockKind::E;
                if (lattice_even) {
                    int ones = 0;
                    for (const auto& v : {x, y, added(x, y)})
                        if (mod_reduce(quadratic_value_even(g, v), Rat(2)) == 1) ++ones;
                    if (ones == 3) blk.kind = BlockKind::F;
                    else if (ones != 1) throw std::logic_error("unexpected quadratic values on a 2-adic pair");
                    if (blk.kind == BlockKind::E) {
                        // re-generate by the two elements of quadratic value 0
                        std::vector<std::vector<Int>> zs;
                        for (const auto& v : {x, y, added(x, y)})
                            if (mod_reduce(quadratic_value_even(g, v), Rat(2)) == 0) zs.push_back(ctx.reduce(v));
                        x = zs[0];
                        y = zs[1];
                    }
                }
            } else {
                Rat target_e(0);
                Rat target_f = make_rat(2, pk);
                std::vector<Int> xe = x, ye = y;
                if (normalize_elem(xe, ye, pk, target_e) && normalize_elem(ye, xe, pk, target_e)) {
                    blk.kind = BlockKind::E;
                    x = xe;
                    y = ye;
                } else {
                    std::vector<Int> xf = x, yf = y;
                    if (normalize_elem(xf, yf, pk, target_f) && normalize_elem(yf, xf, pk, target_f)) {
                        blk.kind = BlockKind::F;
                        x = xf;
                        y = yf;
                    } else {
                        blk.kind = BlockKind::Pair2;
                    }
                }
            }
            blk.gen_square = ctx.link(x, x);
            blk.gen_square2 = ctx.link(y, y);
            blk.generators = {x, y};
            out.push_back(std::move(blk));
        }
        return out;
    }
};

void verify_blocks(const GroupCtx& ctx, const std::vector<PairingBlock>& blocks) {
    Int total = 1;
    for (const auto& b : blocks) total *= b.group_order();
    if (total != ctx.g.abs_det()) throw std::logic_error("block orders do not multiply to the determinant");
    for (size_t i = 0; i < blocks.size(); ++i)
        for (size_t j = i + 1; j < blocks.size(); ++j)
            for (const auto& u : blocks[i].generators)
                for (const auto& v : blocks[j].generators)
                    if (ctx.link(u, v) != 0) throw std::logic_error("blocks are not orthogonal");
    for (const auto& b : blocks) {
        const Int pk = pow_int(b.prime, b.exponent);
        for (const auto& gen : b.generators)
            if (ctx.order(gen) != pk) throw std::logic_error("block generator has the wrong order");
        switch (b.kind) {
            case BlockKind::A:
            case BlockKind::B:
                if (classify_odd_cyclic(b.prime, b.exponent, b.gen_square) != b.kind)
                    throw std::logic_error("odd cyclic block mislabelled");
                break;
            case BlockKind::Cyc2:
                if (numerator_at_scale(b.gen_square, pk) % 2 == 0)
                    throw std::logic_error("2-adic cyclic block without unit self-pairing");
                break;
            case BlockKind::E:
                if (b.exponent > 1 && (b.gen_square != 0 || b.gen_square2 != 0))
                    throw std::logic_error("E block generators must have square 0");
                break;
            case BlockKind::F:
                if (b.exponent > 1 &&
                    (b.gen_square != make_rat(2, pk) || b.gen_square2 != make_rat(2, pk)))
                    throw std::logic_error("F block generators must have square 2^{1-k}");
                break;
            case BlockKind::Pair2:
                break;
        }
        if (b.is_rank2() &&
            numerator_at_scale(ctx.link(b.generators[0], b.generators[1]), pk) % 2 == 0)
            throw std::logic_error("rank-2 block with degenerate mutual pairing");
    }
}

}  // namespace

std::vector<PairingBlock> decompose(const SymGram& g) {
    if (g.is_degenerate()) throw std::invalid_argument("degenerate form");
    GroupCtx ctx(g);
    DiscriminantGroup dg = discriminant_group(g);
    std::vector<PairingBlock> blocks;
    const Int delta = g.abs_det();
    for (const auto& [p, e] : factorize(delta)) {
        std::vector<std::vector<Int>> gens_p;
        for (size_t i = 0; i < dg.orders.size(); ++i) {
            int v = valuation(dg.orders[i], p);
            if (v == 0) continue;
            gens_p.push_back(ctx.reduce(scaled(dg.generators[i], dg.orders[i] / pow_int(p, v))));
        }
        Splitter sp{ctx, p};
        auto part = (p == 2) ? sp.split_two(std::move(gens_p), g.is_even(), g)
                             : sp.split_odd(std::move(gens_p));
        blocks.insert(blocks.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    std::sort(blocks.begin(), blocks.end(), [](const PairingBlock& a, const PairingBlock& b) {
        if (a.prime != b.prime) return a.prime < b.prime;
        if (a.exponent != b.exponent) return a.exponent < b.exponent;
        return static_cast<int>(a.kind) < static_cast<int>(b.kind);
    });
    verify_blocks(ctx, blocks);
    return blocks;
}

GaussSumResult gauss_sum_milgram(const SymGram& g, long long cap) {
    if (!g.is_even()) throw std::invalid_argument("Gauss sum requires an even lattice");
    const Int delta = g.abs_det();
    if (delta == 0) throw std::invalid_argument("degenerate form");
    if (delta > to_int(cap)) throw cap_exceeded("discriminant group larger than the configured cap");
    const RatMat qinv = g.dual_gram();
    DiscriminantGroup dg = discriminant_group(g);
    const int m = static_cast<int>(dg.orders.size());
    const int n = g.rank();
    std::vector<long long> counter(m, 0);
    std::complex<double> sum;
    const double pi = std::acos(-1.0);
    while (true) {
        std::vector<Rat> x(n);
        for (int i = 0; i < m; ++i) {
            if (counter[i] == 0) continue;
            for (int r = 0; r < n; ++r) x[r] += Rat(to_int(counter[i]) * dg.generators[i][r]);
        }
        Rat q = mod_reduce(dot(x, mat_vec(qinv, x)), Rat(2));
        sum += std::polar(1.0, pi * q.get_d());
        int i = 0;
        for (; i < m; ++i) {
            if (to_int(++counter[i]) < dg.orders[i]) break;
            counter[i] = 0;
        }
        if (i == m) break;
    }
    GaussSumResult r;
    r.value = sum / std::sqrt(delta.get_d());
    r.predicted = std::polar(1.0, 2.0 * pi * static_cast<double>(g.signature_diff()) / 8.0);
    r.milgram_ok = std::abs(r.value - r.predicted) < 1e-9;
    return r;
}

}  // namespace latq
