#include "latq/glue.hpp"

#include <algorithm>
#include <map>

namespace latq {

namespace {

std::vector<Rat> to_rat_vec(const std::vector<Int>& x) { return std::vector<Rat>(x.begin(), x.end()); }

std::vector<Rat> concat(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    std::vector<Rat> r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

std::vector<Rat> scale_vec(const std::vector<Rat>& a, const Rat& c) {
    std::vector<Rat> r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

std::vector<Rat> add_vec(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    std::vector<Rat> r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

RatMat block_diag(const RatMat& a, const RatMat& b) {
    RatMat r(a.rows + b.rows, a.cols + b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) r.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.rows; ++i)
        for (int j = 0; j < b.cols; ++j) r.at(a.rows + i, a.cols + j) = b.at(i, j);
    return r;
}

IntMat block_diag_int(const IntMat& a, const IntMat& b) {
    IntMat r(a.rows + b.rows, a.cols + b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) r.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.rows; ++i)
        for (int j = 0; j < b.cols; ++j) r.at(a.rows + i, a.cols + j) = b.at(i, j);
    return r;
}

// Overlattice chain of a fixed ambient lattice, with bases kept as rational
// rows in ambient coordinates and renormalised by Hermite reduction.
struct ChainState {
    IntMat amb_gram;
    RatMat basis;
    RatMat basis_inv;

    ChainState(IntMat amb, RatMat b) : amb_gram(std::move(amb)), basis(std::move(b)) {
        basis_inv = rat_inverse(basis);
    }

    int dim() const { return amb_gram.rows; }

    SymGram current_gram() const {
        RatMat g = basis * to_rat(amb_gram) * basis.transposed();
        if (!g.is_integral()) throw std::logic_error("overlattice Gram matrix is not integral");
        return SymGram(to_int(g));
    }

    bool contains(const std::vector<Rat>& amb_vec) const {
        for (const Rat& c : vec_mat(amb_vec, basis_inv))
            if (!rat_is_integer(c)) return false;
        return true;
    }

    std::vector<Rat> dual_to_ambient(const SymGram& cur, const std::vector<Int>& dual_coords) const {
        std::vector<Rat> y = mat_vec(rat_inverse(to_rat(cur.matrix())), to_rat_vec(dual_coords));
        return vec_mat(y, basis);
    }

    // Adjoin an ambient vector; returns the index of the old lattice in the new.
    Int adjoin_vector(const std::vector<Rat>& amb_vec) {
        const int n = dim();
        Int den = 1;
        for (const auto& row : basis.a) den = lcm(den, row.get_den());
        for (const auto& c : amb_vec) den = lcm(den, c.get_den());
        IntMat stacked(n + 1, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Rat v = basis.at(i, j) * Rat(den);
                stacked.at(i, j) = v.get_num();
            }
        for (int j = 0; j < n; ++j) {
            Rat v = amb_vec[j] * Rat(den);
            stacked.at(n, j) = v.get_num();
        }
        IntMat h = hermite_row_lattice(stacked);
        Rat old_det = abs(det_rational(basis));
        RatMat nb(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) nb.at(i, j) = make_rat(h.at(i, j), den);
        Rat new_det = abs(det_rational(nb));
        Rat idx = old_det / new_det;
        if (!rat_is_integer(idx)) throw std::logic_error("non-integral overlattice index");
        basis = std::move(nb);
        basis_inv = rat_inverse(basis);
        return idx.get_num();
    }

    Rat abs_basis_det() const { return abs(det_rational(basis)); }
};

// Validates the adjoin preconditions in the current lattice of `st`.
void checked_adjoin(ChainState& st, const SymGram& cur, const std::vector<Int>& v_dual, const Int& p,
                    std::vector<Rat>* amb_out) {
    RatMat qinv = rat_inverse(to_rat(cur.matrix()));
    std::vector<Rat> vd = to_rat_vec(v_dual);
    Rat vsq = dot(vd, mat_vec(qinv, vd));
    if (!rat_is_integer(vsq)) throw std::invalid_argument("glue vector square is not an integer");
    std::vector<Rat> coords = mat_vec(qinv, vd);
    bool in_lattice = true;
    for (const Rat& c : coords) {
        if (!rat_is_integer(c)) in_lattice = false;
        if (!rat_is_integer(Rat(p) * c))
            throw std::invalid_argument("p times the glue vector does not lie in the lattice");
    }
    if (in_lattice) throw std::invalid_argument("glue vector already lies in the lattice");
    std::vector<Rat> amb = vec_mat(coords, st.basis);
    Int idx = st.adjoin_vector(amb);
    if (idx != p) throw std::logic_error("adjoin step has unexpected index");
    if (amb_out) *amb_out = std::move(amb);
}

}  // namespace

Overlattice adjoin(const SymGram& g, const std::vector<Int>& v_dual, const Int& p) {
    if (static_cast<int>(v_dual.size()) != g.rank()) throw std::invalid_argument("dimension mismatch");
    if (!is_prime(p)) throw std::invalid_argument("index must be prime");
    if (g.is_degenerate()) throw std::invalid_argument("degenerate form");
    ChainState st(g.matrix(), RatMat::identity(g.rank()));
    checked_adjoin(st, g, v_dual, p, nullptr);
    SymGram ng = st.current_gram();
    if (ng.abs_det() * p * p != g.abs_det()) throw std::logic_error("determinant did not drop by p^2");
    return Overlattice{ng, st.basis, p};
}

namespace {

// One stage-1 selection: the first block in canonical order admitting a step.
struct Stage1Step {
    std::vector<Int> v_dual;
    Int prime;
    bool found = false;
};

Stage1Step select_stage1_step(const SymGram& cur) {
    Stage1Step out;
    auto blocks = decompose(cur);
    for (size_t i = 0; i < blocks.size(); ++i) {
        const PairingBlock& b = blocks[i];
        if (!b.is_rank2() && b.exponent >= 2) {
            Int c = 1;
            for (int j = 0; j < b.exponent - 1; ++j) c *= b.prime;
            out.v_dual.resize(b.generators[0].size());
            for (size_t r = 0; r < out.v_dual.size(); ++r) out.v_dual[r] = c * b.generators[0][r];
            out.prime = b.prime;
            out.found = true;
            return out;
        }
        if (b.is_rank2()) {
            Int c = 1;
            for (int j = 0; j < b.exponent - 1; ++j) c *= b.prime;
            out.v_dual.resize(b.generators[0].size());
            for (size_t r = 0; r < out.v_dual.size(); ++r) out.v_dual[r] = c * b.generators[0][r];
            out.prime = b.prime;
            out.found = true;
            return out;
        }
        if (b.prime == 2 && b.exponent == 1 && b.kind == BlockKind::Cyc2) {
            for (size_t j = i + 1; j < blocks.size(); ++j) {
                const PairingBlock& b2 = blocks[j];
                if (b2.prime == 2 && b2.exponent == 1 && b2.kind == BlockKind::Cyc2) {
                    out.v_dual.resize(b.generators[0].size());
                    for (size_t r = 0; r < out.v_dual.size(); ++r)
                        out.v_dual[r] = b.generators[0][r] + b2.generators[0][r];
                    out.prime = 2;
                    out.found = true;
                    return out;
                }
            }
        }
    }
    return out;
}

bool stage1_terminal(const std::vector<PairingBlock>& blocks) {
    int z2 = 0;
    for (const auto& b : blocks) {
        if (b.is_rank2() || b.exponent != 1) return false;
        if (b.prime == 2) ++z2;
    }
    return z2 <= 1;
}

}  // namespace

std::pair<Overlattice, GlueChain> chain_prime_linking(const SymGram& g) {
    if (g.is_degenerate()) throw std::invalid_argument("degenerate form");
    ChainState st(g.matrix(), RatMat::identity(g.rank()));
    GlueChain chain;
    chain.stage = 1;
    Int total_index = 1;
    SymGram cur = g;
    while (true) {
        Stage1Step step = select_stage1_step(cur);
        if (!step.found) break;
        std::vector<Rat> amb;
        checked_adjoin(st, cur, step.v_dual, step.prime, &amb);
        chain.steps.push_back(GlueStep{step.prime, step.prime, {std::move(amb)}});
        total_index *= step.prime;
        cur = st.current_gram();
    }
    if (!stage1_terminal(decompose(cur))) throw std::logic_error("stage-1 chain stopped early");
    Int d = cur.abs_det();
    if (d % 4 == 0 || (d % 2 == 0 && (d / 2) % 2 == 0))
        throw std::logic_error("stage-1 determinant is neither odd nor twice odd");
    return {Overlattice{cur, st.basis, total_index}, chain};
}

namespace {

// row-action matrix of i on L + L: (x, y) -> (-y, x)
RatMat complex_i_map(int n) {
    RatMat s(2 * n, 2 * n);
    for (int j = 0; j < n; ++j) {
        s.at(j, n + j) = 1;    // e_j -> e_{n+j}
        s.at(n + j, j) = -1;   // e_{n+j} -> -e_j
    }
    return s;
}

// row-action matrices of i and j on L^4
RatMat quaternion_i_map(int n) {
    RatMat s(4 * n, 4 * n);
    for (int j = 0; j < n; ++j) {
        s.at(j, n + j) = 1;
        s.at(n + j, j) = -1;
        s.at(2 * n + j, 3 * n + j) = 1;
        s.at(3 * n + j, 2 * n + j) = -1;
    }
    return s;
}

RatMat quaternion_j_map(int n) {
    RatMat s(4 * n, 4 * n);
    for (int j = 0; j < n; ++j) {
        s.at(j, 2 * n + j) = 1;
        s.at(n + j, 3 * n + j) = -1;
        s.at(2 * n + j, j) = -1;
        s.at(3 * n + j, n + j) = 1;
    }
    return s;
}

void check_stable(const ChainState& st, const RatMat& map, const char* what) {
    RatMat image = st.basis * map;
    for (int i = 0; i < image.rows; ++i) {
        std::vector<Rat> row(image.cols);
        for (int j = 0; j < image.cols; ++j) row[j] = image.at(i, j);
        if (!st.contains(row)) throw std::logic_error(std::string("lattice is not stable under ") + what);
    }
}

// Stage-2 glue data, shared by the two- and four-copy constructions: one
// vector (x, ax) per block of the input's linking pairing at p = 2 or
// p = 1 (mod 4), where x is written in ambient coordinates of one copy.
struct Stage2Plan {
    std::vector<std::pair<Int, std::vector<Rat>>> glue;  // (p, x in one-copy coordinates)
};

Stage2Plan stage2_plan(const SymGram& g1, const ChainState* copy_state) {
    Stage2Plan plan;
    auto blocks = decompose(g1);
    for (const auto& b : blocks)
        if (b.is_rank2() || b.exponent != 1)
            throw std::invalid_argument("input must have prime-order cyclic linking blocks only");
    for (int pass = 0; pass < 2; ++pass) {
        for (const auto& b : blocks) {
            bool two = (b.prime == 2);
            if ((pass == 0) != two) continue;
            if (!two && b.prime % 4 != 1) continue;
            std::vector<Rat> x;
            if (copy_state) {
                x = copy_state->dual_to_ambient(g1, b.generators[0]);
            } else {
                x = mat_vec(rat_inverse(to_rat(g1.matrix())), to_rat_vec(b.generators[0]));
            }
            plan.glue.emplace_back(b.prime, std::move(x));
        }
    }
    return plan;
}

}  // namespace

std::pair<Overlattice, GlueChain> complex_glue(const SymGram& g) {
    if (g.is_degenerate()) throw std::invalid_argument("degenerate form");
    const int n = g.rank();
    ChainState st(block_diag_int(g.matrix(), g.matrix()), RatMat::identity(2 * n));
    GlueChain chain;
    chain.stage = 2;
    Int total_index = 1;
    RatMat imap = complex_i_map(n);
    for (const auto& [p, x] : stage2_plan(g, nullptr).glue) {
        Int a = sqrt_minus_one(p);
        std::vector<Rat> v = concat(x, scale_vec(x, Rat(a)));
        Int idx = st.adjoin_vector(v);
        if (idx != p) throw std::logic_error("stage-2 step has unexpected index");
        check_stable(st, imap, "the complex structure");
        chain.steps.push_back(GlueStep{p, p, {std::move(v)}});
        total_index *= p;
    }
    SymGram out = st.current_gram();
    // remaining linking blocks sit at primes = 3 (mod 4) and appear twice
    std::map<std::pair<Int, int>, int> counts;
    for (const auto& b : decompose(out)) {
        if (b.is_rank2() || b.exponent != 1 || b.prime % 4 != 3)
            throw std::logic_error("stage-2 output has an unexpected linking block");
        counts[{b.prime, static_cast<int>(b.kind)}] += 1;
    }
    for (const auto& [key, c] : counts)
        if (c % 2 != 0) throw std::logic_error("stage-2 output blocks do not appear in pairs");
    return {Overlattice{out, st.basis, total_index}, chain};
}

std::pair<Overlattice, GlueChain> quaternionic_glue(const SymGram& g2) {
    if (g2.is_degenerate()) throw std::invalid_argument("degenerate form");
    const int m = g2.rank();
    ChainState st(block_diag_int(g2.matrix(), g2.matrix()), RatMat::identity(2 * m));
    GlueChain chain;
    chain.stage = 3;
    Int total_index = 1;
    auto blocks = decompose(g2);
    for (const auto& b : blocks)
        if (b.is_rank2() || b.exponent != 1 || b.prime % 4 != 3)
            throw std::invalid_argument("input linking must be prime-order cyclic at primes = 3 (mod 4)");
    // pair equal-kind blocks at each prime, in canonical order
    std::map<std::pair<Int, int>, std::vector<size_t>> groups;
    for (size_t i = 0; i < blocks.size(); ++i)
        groups[{blocks[i].prime, static_cast<int>(blocks[i].kind)}].push_back(i);
    for (const auto& [key, idxs] : groups)
        if (idxs.size() % 2 != 0)
            throw std::invalid_argument("linking blocks cannot be paired by kind");
    RatMat qinv = rat_inverse(to_rat(g2.matrix()));
    for (const auto& [key, idxs] : groups) {
        const Int q = key.first;
        for (size_t t = 0; t + 1 < idxs.size(); t += 2) {
            const PairingBlock& b1 = blocks[idxs[t]];
            const PairingBlock& b2 = blocks[idxs[t + 1]];
            // rescale the second generator so both have equal self-pairing
            Rat s1 = Rat(q) * b1.gen_square;
            Rat s2 = Rat(q) * b2.gen_square;
            Int u1 = s1.get_num() % q;
            Int u2 = s2.get_num() % q;
            Int c = sqrt_mod_3mod4(u1 * inv_mod(u2, q) % q, q);
            std::vector<Int> y2(b2.generators[0].size());
            for (size_t r = 0; r < y2.size(); ++r) y2[r] = c * b2.generators[0][r];
            auto [a, bb] = sum_two_squares_neg_one(q);
            std::vector<Rat> x1 = mat_vec(qinv, to_rat_vec(b1.generators[0]));
            std::vector<Rat> x2 = mat_vec(qinv, to_rat_vec(y2));
            std::vector<Rat> v1 = concat(x1, add_vec(scale_vec(x1, Rat(a)), scale_vec(x2, Rat(bb))));
            std::vector<Rat> v2 = concat(x2, add_vec(scale_vec(x2, Rat(a)), scale_vec(x1, Rat(-bb))));
            Int i1 = st.adjoin_vector(v1);
            Int i2 = st.adjoin_vector(v2);
            if (i1 != q || i2 != q) throw std::logic_error("stage-3 step has unexpected index");
            chain.steps.push_back(GlueStep{q, q * q, {std::move(v1), std::move(v2)}});
            total_index *= q * q;
        }
    }
    SymGram out = st.current_gram();
    if (out.abs_det() != 1) throw std::logic_error("stage-3 output is not unimodular");
    return {Overlattice{out, st.basis, total_index}, chain};
}

EmbedFourResult embed_four_copies(const SymGram& g) {
    if (g.is_degenerate()) throw std::invalid_argument("degenerate form");
    const int n = g.rank();
    const Int delta = g.abs_det();

    auto [l1, chain1] = chain_prime_linking(g);
    Stage2Plan plan;
    {
        ChainState copy(g.matrix(), l1.basis_in_parent);
        plan = stage2_plan(l1.gram, &copy);
    }

    // stage 2 with real coordinates in L + L
    ChainState st2(block_diag_int(g.matrix(), g.matrix()), block_diag(l1.basis_in_parent, l1.basis_in_parent));
    GlueChain chain2;
    chain2.stage = 2;
    RatMat imap2 = complex_i_map(n);
    for (const auto& [p, x] : plan.glue) {
        Int a = sqrt_minus_one(p);
        std::vector<Rat> v = concat(x, scale_vec(x, Rat(a)));
        Int idx = st2.adjoin_vector(v);
        if (idx != p) throw std::logic_error("stage-2 step has unexpected index");
        check_stable(st2, imap2, "the complex structure");
        chain2.steps.push_back(GlueStep{p, p, {std::move(v)}});
    }

    // stage 3 in L^4; the second copy carries the conjugated embedding
    // (x, y) -> (x, -y) so that the quaternion action restricts to it
    RatMat conj(2 * n, 2 * n);
    for (int j = 0; j < n; ++j) {
        conj.at(j, j) = 1;
        conj.at(n + j, n + j) = -1;
    }
    IntMat amb4 = block_diag_int(block_diag_int(g.matrix(), g.matrix()), block_diag_int(g.matrix(), g.matrix()));
    ChainState st3(amb4, block_diag(st2.basis, st2.basis * conj));
    RatMat imap4 = quaternion_i_map(n);
    RatMat jmap4 = quaternion_j_map(n);
    check_stable(st3, imap4, "i");
    check_stable(st3, jmap4, "j");
    GlueChain chain3;
    chain3.stage = 3;
    const std::vector<Rat> zero_n(n);
    // q-blocks of the stage-1 lattice (in one-copy ambient coordinates)
    std::vector<std::pair<Int, std::vector<Rat>>> qglue;
    {
        ChainState copy(g.matrix(), l1.basis_in_parent);
        for (const auto& b : decompose(l1.gram))
            if (b.prime % 4 == 3) qglue.emplace_back(b.prime, copy.dual_to_ambient(l1.gram, b.generators[0]));
    }
    for (const auto& [q, x] : qglue) {
        auto [a, b] = sum_two_squares_neg_one(q);
        std::vector<Rat> v1 = concat(concat(x, zero_n), concat(scale_vec(x, Rat(a)), scale_vec(x, Rat(b))));
        std::vector<Rat> v2 = concat(concat(zero_n, x), concat(scale_vec(x, Rat(-b)), scale_vec(x, Rat(a))));
        Int i1 = st3.adjoin_vector(v1);
        Int i2 = st3.adjoin_vector(v2);
        if (i1 != q || i2 != q) throw std::logic_error("stage-3 step has unexpected index");
        check_stable(st3, imap4, "i");
        check_stable(st3, jmap4, "j");
        chain3.steps.push_back(GlueStep{q, q * q, {std::move(v1), std::move(v2)}});
    }

    SymGram u = st3.current_gram();
    if (u.abs_det() != 1) throw std::logic_error("embedding result is not unimodular");
    Rat gi = Rat(1) / st3.abs_basis_det();
    if (!rat_is_integer(gi)) throw std::logic_error("group index is not an integer");
    Int group_index = gi.get_num();
    if (group_index != delta * delta) throw std::logic_error("group index differs from delta^2");

    RatMat binv = rat_inverse(st3.basis);
    QuaternionAction action{st3.basis * imap4 * binv, st3.basis * jmap4 * binv};
    if (!verify_quaternionic(u, action)) throw std::logic_error("transported action fails verification");

    EmbedFourResult r{u, st3.basis, delta, group_index, std::move(action), chain1, chain2, chain3};
    return r;
}

EmbedTwoResult embed_two_copies(const SymGram& g) {
    if (g.is_degenerate()) throw std::invalid_argument("degenerate form");
    EmbedTwoResult result;

    auto [l1, chain1] = chain_prime_linking(g);
    result.stage1 = chain1;
    Stage2Plan plan;
    {
        ChainState copy(g.matrix(), l1.basis_in_parent);
        plan = stage2_plan(l1.gram, &copy);
    }
    ChainState st(block_diag_int(g.matrix(), g.matrix()), block_diag(l1.basis_in_parent, l1.basis_in_parent));
    result.stage2.stage = 2;
    Int total_index = l1.index * l1.index;
    for (const auto& [p, x] : plan.glue) {
        Int a = sqrt_minus_one(p);
        std::vector<Rat> v = concat(x, scale_vec(x, Rat(a)));
        Int idx = st.adjoin_vector(v);
        if (idx != p) throw std::logic_error("stage-2 step has unexpected index");
        result.stage2.steps.push_back(GlueStep{p, p, {std::move(v)}});
        total_index *= p;
    }

    // cross-copy steps at primes q = 3 (mod 4): adjoin isotropic combinations
    while (true) {
        SymGram cur = st.current_gram();
        if (cur.abs_det() == 1) break;
        auto blocks = decompose(cur);
        Int q = 0;
        std::vector<const PairingBlock*> qblocks;
        for (const auto& b : blocks) {
            if (b.prime % 4 != 3 || b.is_rank2() || b.exponent != 1)
                throw std::logic_error("unexpected residual linking block");
            if (q == 0) q = b.prime;
            if (b.prime == q) qblocks.push_back(&b);
        }
        long long qs = q.get_si();
        std::vector<Int> units;
        for (const auto* b : qblocks) {
            Rat s = Rat(q) * b->gen_square;
            Int u = s.get_num() % q;
            if (u < 0) u += q;
            units.push_back(u);
        }
        // isotropic search: pairs, then triples, of block generators
        std::vector<std::pair<size_t, Int>> combo;
        for (size_t i = 0; i < qblocks.size() && combo.empty(); ++i)
            for (size_t j = i + 1; j < qblocks.size() && combo.empty(); ++j)
                for (long long c = 1; c < qs; ++c) {
                    Int cc = to_int(c);
                    if ((units[i] + cc * cc * units[j]) % q == 0) {
                        combo = {{i, 1}, {j, cc}};
                        break;
                    }
                }
        for (size_t i = 0; i < qblocks.size() && combo.empty(); ++i)
            for (size_t j = i + 1; j < qblocks.size() && combo.empty(); ++j)
                for (size_t k = j + 1; k < qblocks.size() && combo.empty(); ++k)
                    for (long long c = 1; c < qs && combo.empty(); ++c)
                        for (long long d = 1; d < qs; ++d) {
                            Int cc = to_int(c), dd = to_int(d);
                            if ((units[i] + cc * cc * units[j] + dd * dd * units[k]) % q == 0) {
                                combo = {{i, 1}, {j, cc}, {k, dd}};
                                break;
                            }
                        }
        if (combo.empty()) {
            result.ok = false;
            result.certificate_prime = q;
            return result;
        }
        std::vector<Int> v(cur.rank(), 0);
        for (const auto& [bi, c] : combo)
            for (size_t r = 0; r < v.size(); ++r) v[r] += c * qblocks[bi]->generators[0][r];
        std::vector<Rat> amb;
        checked_adjoin(st, cur, v, q, &amb);
        result.cross_steps.push_back(GlueStep{q, q, {std::move(amb)}});
        total_index *= q;
    }

    SymGram out = st.current_gram();
    result.ok = true;
    result.lattice = Overlattice{out, st.basis, total_index};
    return result;
}

Int sqrt_minus_one(const Int& p) {
    if (p == 2) return 1;
    if (!is_prime(p) || p % 4 != 1)
        throw std::invalid_argument("p must be 2 or a prime congruent to 1 mod 4");
    Int n = 2;
    while (is_quadratic_residue(n, p)) ++n;
    Int a = mod_pow(n, (p - 1) / 4, p);
    if ((a * a + 1) % p != 0) throw std::logic_error("square root of -1 computation failed");
    Int other = p - a;
    return a <= other ? a : other;
}

std::pair<Int, Int> sum_two_squares_neg_one(const Int& q) {
    if (!is_prime(q) || q % 4 != 3)
        throw std::invalid_argument("q must be a prime congruent to 3 mod 4");
    Int m = 2;
    while (is_quadratic_residue(m, q)) ++m;
    Int a = sqrt_mod_3mod4(m - 1, q);
    Int b = sqrt_mod_3mod4(q - (m % q), q);
    if ((a * a + b * b + 1) % q != 0) throw std::logic_error("a^2 + b^2 = -1 construction failed");
    return {a, b};
}

bool verify_quaternionic(const SymGram& u, const QuaternionAction& action) {
    const int n = u.rank();
    if (n % 4 != 0) throw std::invalid_argument("rank must be divisible by 4");
    const RatMat& mi = action.i_map;
    const RatMat& mj = action.j_map;
    if (mi.rows != n || mi.cols != n || mj.rows != n || mj.cols != n) return false;
    if (!mi.is_integral() || !mj.is_integral()) return false;
    RatMat gr = to_rat(u.matrix());
    if (mi * gr * mi.transposed() != gr) return false;
    if (mj * gr * mj.transposed() != gr) return false;
    RatMat neg_id = -RatMat::identity(n);
    if (mi * mi != neg_id || mj * mj != neg_id) return false;
    if (mi * mj != -(mj * mi)) return false;
    return true;
}

}  // namespace latq
