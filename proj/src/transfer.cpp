#include "icx/transfer.hpp"

#include <bit>

namespace icx::transfer {

SideBands side_bands(const IndexCodingProblem& p) {
    SideBands b;
    b.offset.reserve(p.receivers.size());
    for (const Receiver& r : p.receivers) {
        b.offset.push_back(b.total);
        b.total += static_cast<int>(r.knows.size());
    }
    return b;
}

void require_normalized_single_unicast(const IndexCodingProblem& p) {
    if (!classify(p).single_unicast) throw WrongClass("operation needs a single unicast problem");
    for (int i = 0; i < p.receiver_count(); ++i)
        if (p.receivers[i].wants != std::vector<int>{i + 1})
            throw WrongClass("receivers must be ordered so that receiver i wants x_i");
}

Gf2Matrix build_A(const IndexCodingProblem& p, int c) {
    require_normalized_single_unicast(p);
    if (c < 1) throw ShapeError("c must be >= 1");
    const int n = p.n;
    const SideBands bands = side_bands(p);
    Gf2Matrix A(n * c + bands.total, n);
    for (int j = 0; j < n; ++j)
        for (int t = 0; t < c; ++t) A.set(j * c + t, j, true);
    int row = n * c;
    for (const Receiver& r : p.receivers)
        for (int k : r.knows) A.set(row++, k - 1, true);
    return A;
}

Gf2Matrix build_F(const IndexCodingProblem& p, int c, const Gf2Matrix& beta) {
    require_normalized_single_unicast(p);
    if (beta.rows() != c || beta.cols() != p.n) throw ShapeError("beta must be c x n");
    const int n = p.n;
    const int si = side_bands(p).total;
    const int e = n * c + si;
    Gf2Matrix F(e, e);
    for (int t = 0; t < c; ++t)
        for (int r = 0; r < n; ++r)
            for (int j = 0; j < n; ++j)
                if (beta.get(t, j)) F.set(t * n + r, j * c + t, true);
    for (int s = 0; s < si; ++s) F.set(n * c + s, n * c + s, true);
    return F;
}

Gf2Matrix build_B(const IndexCodingProblem& p, int c, const Gf2Matrix& epsilon,
                  const std::vector<std::uint8_t>& side_bits) {
    require_normalized_single_unicast(p);
    if (epsilon.rows() != c || epsilon.cols() != p.n) throw ShapeError("epsilon must be c x n");
    const int n = p.n;
    const SideBands bands = side_bands(p);
    if (static_cast<int>(side_bits.size()) != bands.total)
        throw ShapeError("side_bits must have one bit per (receiver, known) pair");
    Gf2Matrix B(n, n * c + bands.total);
    for (int t = 0; t < c; ++t)
        for (int r = 0; r < n; ++r)
            if (epsilon.get(t, r)) B.set(r, t * n + r, true);
    for (int i = 0; i < n; ++i)
        for (std::size_t s = 0; s < p.receivers[i].knows.size(); ++s)
            if (side_bits[bands.offset[i] + s]) B.set(i, n * c + bands.offset[i] + static_cast<int>(s), true);
    return B;
}

TransferComponents make_components(const IndexCodingProblem& p, int c, const Gf2Matrix& beta,
                                   const Gf2Matrix& epsilon, const std::vector<std::uint8_t>& side_bits) {
    return TransferComponents{c, build_A(p, c), build_F(p, c, beta), build_B(p, c, epsilon, side_bits)};
}

Gf2Matrix compose_M(const TransferComponents& tc) { return tc.B * (tc.F * tc.A); }

Gf2Matrix t_bc(const Gf2Matrix& T, int n, int c) {
    if (T.rows() != n || T.cols() < n * c) throw ShapeError("T too small for its broadcast part");
    Gf2Matrix out(n, n * c);
    for (int r = 0; r < n; ++r)
        for (int j = 0; j < n * c; ++j)
            if (T.get(r, j)) out.set(r, j, true);
    return out;
}

Gf2Matrix t_si(const Gf2Matrix& T, int n, int c) {
    if (T.rows() != n || T.cols() < n * c) throw ShapeError("T too small for its broadcast part");
    const int si = T.cols() - n * c;
    Gf2Matrix out(n, si);
    for (int r = 0; r < n; ++r)
        for (int j = 0; j < si; ++j)
            if (T.get(r, n * c + j)) out.set(r, j, true);
    return out;
}

Gf2Matrix extract_R(const Gf2Matrix& T_bc, int i, int n, int c) {
    if (i < 1 || i > c) throw IndexError("transmission index out of range");
    if (T_bc.rows() != n || T_bc.cols() != n * c) throw ShapeError("T_bc must be n x nc");
    Gf2Matrix R(n, n);
    for (int r = 0; r < n; ++r)
        for (int k = 0; k < n; ++k)
            if (T_bc.get(r, k * c + (i - 1))) R.set(r, k, true);
    return R;
}

Gf2Matrix sprime_zero_pattern(const IndexCodingProblem& p, int c) {
    require_normalized_single_unicast(p);
    const int n = p.n;
    const SideBands bands = side_bands(p);
    Gf2Matrix mask(n, n * c + bands.total);
    for (int i = 0; i < n; ++i)
        for (int i2 = 0; i2 < n; ++i2) {
            if (i2 == i) continue;
            for (std::size_t s = 0; s < p.receivers[i2].knows.size(); ++s)
                mask.set(i, n * c + bands.offset[i2] + static_cast<int>(s), true);
        }
    return mask;
}

AffineSolutionSet sprime_solutions(const IndexCodingProblem& p, int c) {
    return gf2::solve_constrained_left_inverses(build_A(p, c), sprime_zero_pattern(p, c));
}

namespace {

// rank <= 1 classification without elimination: every nonzero row of a
// rank-one 0/1 outer product equals the first nonzero row.
struct BlockShape {
    int rank;            // 0, 1, or 2 meaning ">= 2"
    int first_nonzero;   // row index, -1 if zero
};

BlockShape classify_block(const Gf2Matrix& R) {
    int first = -1;
    for (int r = 0; r < R.rows(); ++r) {
        if (R.row_is_zero(r)) continue;
        if (first < 0) {
            first = r;
            continue;
        }
        for (int k = 0; k < R.cols(); ++k)
            if (R.get(r, k) != R.get(first, k)) return {2, first};
    }
    return {first < 0 ? 0 : 1, first};
}

}  // namespace

SMembershipReport check_membership_S(const Gf2Matrix& T, const IndexCodingProblem& p, int c) {
    require_normalized_single_unicast(p);
    const int n = p.n;
    const Gf2Matrix A = build_A(p, c);
    if (T.rows() != n || T.cols() != A.rows()) throw ShapeError("T must be n x (nc + sum|K_i|)");
    const Gf2Matrix mask = sprime_zero_pattern(p, c);
    for (int r = 0; r < n; ++r)
        for (int j = 0; j < T.cols(); ++j)
            if (mask.get(r, j) && T.get(r, j)) throw NotInSPrime("T violates the B_SI zero pattern");
    if (!(T * A).is_identity()) throw NotInSPrime("T is not a left inverse of A");

    SMembershipReport rep;
    rep.beta = Gf2Matrix(c, n);
    rep.epsilon = Gf2Matrix(c, n);
    rep.in_S = true;
    const Gf2Matrix bc = t_bc(T, n, c);
    for (int i = 1; i <= c; ++i) {
        const Gf2Matrix R = extract_R(bc, i, n, c);
        const BlockShape shape = classify_block(R);
        rep.block_rank.push_back(shape.rank);
        if (shape.rank == 0) ++rep.lambda;
        if (shape.rank > 1) rep.in_S = false;
        if (shape.rank == 1) {
            for (int k = 0; k < n; ++k)
                if (R.get(shape.first_nonzero, k)) rep.beta.set(i - 1, k, true);
            for (int r = 0; r < n; ++r)
                if (!R.row_is_zero(r)) rep.epsilon.set(i - 1, r, true);
        }
    }
    if (!rep.in_S) {
        rep.beta = Gf2Matrix(c, n);
        rep.epsilon = Gf2Matrix(c, n);
    }
    return rep;
}

Theorem1Result verify_optimality_by_theorem1(const IndexCodingProblem& p, int c, int cap_dim) {
    require_normalized_single_unicast(p);
    const int n = p.n;
    const AffineSolutionSet sol = sprime_solutions(p, c);

    Theorem1Result res;
    res.sprime_dim = sol.dim();
    res.sprime_count = sol.count();
    if (sol.dim() > cap_dim) {
        res.verdict = Verdict::cap_exceeded;
        return res;
    }

    // Gray-code walk over the solution set: one basis XOR per step.
    Gf2Matrix T = sol.particular;
    const std::uint64_t total = 1ull << sol.dim();
    for (std::uint64_t k = 0;; ++k) {
        bool in_S = true;
        int lambda = 0;
        const Gf2Matrix bc = t_bc(T, n, c);
        for (int i = 1; i <= c && in_S; ++i) {
            const Gf2Matrix R = extract_R(bc, i, n, c);
            int first = -1;
            for (int r = 0; r < n && in_S; ++r) {
                if (R.row_is_zero(r)) continue;
                if (first < 0) {
                    first = r;
                    continue;
                }
                for (int col = 0; col < n; ++col)
                    if (R.get(r, col) != R.get(first, col)) {
                        in_S = false;
                        break;
                    }
            }
            if (in_S && first < 0) ++lambda;
        }
        if (in_S) {
            ++res.s_count;
            if (lambda > 0) {
                res.verdict = Verdict::not_optimal;
                res.witness = T;
                res.witness_lambda = lambda;
                return res;
            }
        }
        if (k + 1 == total) break;
        T = T ^ sol.homogeneous_basis[std::countr_zero(k + 1)];
    }
    res.verdict = res.s_count == 0 ? Verdict::no_solution : Verdict::optimal;
    return res;
}

}  // namespace icx::transfer
