#ifndef ICX_TESTS_SUPPORT_HPP
#define ICX_TESTS_SUPPORT_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "icx/enumerate.hpp"
#include "icx/gf2.hpp"
#include "icx/problem.hpp"

namespace icx::testsupport {

inline IndexCodingProblem make_problem(int n, std::vector<Receiver> rs) {
    IndexCodingProblem p;
    p.n = n;
    p.receivers = std::move(rs);
    p.origin.resize(p.receivers.size());
    for (std::size_t i = 0; i < p.origin.size(); ++i) p.origin[i] = static_cast<int>(i) + 1;
    validate(p);
    return p;
}

// The nine bundled instances, built independently of the JSON files.
inline IndexCodingProblem ex1() {
    return make_problem(3, {{{1}, {2}}, {{2}, {3}}, {{3}, {1}}});
}
inline IndexCodingProblem ex2() {
    return make_problem(3, {{{1}, {2, 3}}, {{2}, {3}}, {{3}, {1}}});
}
inline IndexCodingProblem ex3() {
    return make_problem(4, {{{1}, {2}}, {{2}, {3}}, {{3}, {4}}, {{4}, {1}}});
}
inline IndexCodingProblem ex4() {
    return make_problem(4, {{{1}, {2}}, {{2}, {3}}, {{3}, {1, 4}}, {{4}, {1}}});
}
inline IndexCodingProblem ex5() {
    return make_problem(10, {{{1}, {2}},
                             {{2}, {3}},
                             {{3}, {4}},
                             {{4}, {1}},
                             {{5}, {8}},
                             {{6}, {7}},
                             {{7}, {6}},
                             {{8}, {9}},
                             {{9}, {10}},
                             {{10}, {5}}});
}
inline IndexCodingProblem ex6() {
    return make_problem(5, {{{1}, {2}}, {{2}, {3}}, {{3}, {1}}, {{4}, {5}}, {{5}, {4}}});
}
inline IndexCodingProblem ex7() {
    return make_problem(10, {{{1}, {2}},
                             {{2}, {3}},
                             {{3}, {1}},
                             {{4}, {5, 7, 8}},
                             {{5}, {4, 6}},
                             {{6}, {9}},
                             {{7}, {10}},
                             {{8}, {}},
                             {{9}, {}},
                             {{10}, {}}});
}
inline IndexCodingProblem ex8() {
    return make_problem(10, {{{1}, {2, 3, 4}},
                             {{2}, {9, 10}},
                             {{3}, {5}},
                             {{4}, {6}},
                             {{5}, {7}},
                             {{6}, {8}},
                             {{7}, {}},
                             {{8}, {}},
                             {{9}, {}},
                             {{10}, {}}});
}
inline IndexCodingProblem ex9() {
    return make_problem(10, {{{3}, {1}},
                             {{1}, {2}},
                             {{2}, {3}},
                             {{5, 10}, {4}},
                             {{4}, {5}},
                             {{8}, {6}},
                             {{9}, {7}},
                             {{6, 7}, {8}}});
}

// ---- elimination-free oracles ----

// Determinant of the selected square submatrix over GF(2) by Laplace
// expansion (signs vanish mod 2).
inline int det_gf2_square(const std::vector<std::uint64_t>& rows, const std::vector<int>& row_idx,
                          const std::vector<int>& col_idx) {
    std::vector<std::uint64_t> sub;
    for (int r : row_idx) sub.push_back(rows[r]);
    std::function<int(std::size_t, std::vector<int>)> rec = [&](std::size_t depth,
                                                                std::vector<int> cc) -> int {
        if (cc.empty()) return 1;
        int d = 0;
        for (std::size_t j = 0; j < cc.size(); ++j) {
            if (!((sub[depth] >> cc[j]) & 1)) continue;
            std::vector<int> crest;
            for (std::size_t k = 0; k < cc.size(); ++k)
                if (k != j) crest.push_back(cc[k]);
            d ^= rec(depth + 1, std::move(crest));
        }
        return d;
    };
    return rec(0, col_idx);
}

// Rank as the size of the largest square submatrix with unit determinant.
inline int minor_rank_oracle(const gf2::Gf2Matrix& m) {
    std::vector<std::uint64_t> rows;
    for (int r = 0; r < m.rows(); ++r) rows.push_back(m.row_mask(r));
    const int bound = std::min(m.rows(), m.cols());
    for (int k = bound; k >= 1; --k) {
        std::vector<int> row_sel(k), col_sel(k);
        std::function<bool(int, int)> pick_rows = [&](int pos, int start) -> bool {
            if (pos == k) {
                std::function<bool(int, int)> pick_cols = [&](int cpos, int cstart) -> bool {
                    if (cpos == k) return det_gf2_square(rows, row_sel, col_sel) == 1;
                    for (int c = cstart; c <= m.cols() - (k - cpos); ++c) {
                        col_sel[cpos] = c;
                        if (pick_cols(cpos + 1, c + 1)) return true;
                    }
                    return false;
                };
                return pick_cols(0, 0);
            }
            for (int r = start; r <= m.rows() - (k - pos); ++r) {
                row_sel[pos] = r;
                if (pick_rows(pos + 1, r + 1)) return true;
            }
            return false;
        };
        if (pick_rows(0, 0)) return k;
    }
    return 0;
}

// Full span by XOR closure.
inline std::set<std::uint64_t> span_closure(const std::vector<std::uint64_t>& rows) {
    std::set<std::uint64_t> span{0};
    for (std::uint64_t r : rows) {
        std::set<std::uint64_t> next = span;
        for (std::uint64_t v : span) next.insert(v ^ r);
        span = std::move(next);
    }
    return span;
}

inline std::vector<std::uint64_t> row_masks(const gf2::Gf2Matrix& m) {
    std::vector<std::uint64_t> out;
    for (int r = 0; r < m.rows(); ++r) out.push_back(m.row_mask(r));
    return out;
}

// Minimum decodable length by exhaustive search over all codes.
inline int brute_force_min_length(const IndexCodingProblem& p) {
    bool any_wants = false;
    for (const Receiver& r : p.receivers) any_wants |= !r.wants.empty();
    if (!any_wants) return 0;
    for (int c = 1; c <= p.n; ++c)
        if (enumerate::brute_force_census(p, c) > 0) return c;
    return p.n;  // uncoded transmission always works
}

// Minimal t_use for one receiver by raw subset enumeration, independent of
// the production plan search.
inline int subset_min_t_use(const IndexCodingProblem& p, const enumerate::IndexCode& code, int i) {
    const Receiver& r = p.receivers[i - 1];
    std::uint64_t kmask = 0;
    for (int k : r.knows) kmask |= 1ull << (k - 1);
    const std::uint64_t want = 1ull << (r.wants[0] - 1);
    const int c = static_cast<int>(code.words.size());
    int best = -1;
    for (std::uint64_t sub = 0; sub < (1ull << c); ++sub) {
        std::uint64_t v = want;
        for (int t = 0; t < c; ++t)
            if ((sub >> t) & 1) v ^= code.words[t];
        if ((v & ~kmask) == 0) {
            const int sz = std::popcount(sub);
            if (best < 0 || sz < best) best = sz;
        }
    }
    return best;
}

// ---- seeded instance samplers ----

// Random single unicast instance: receiver i wants x_i, knows a random
// subset of the other messages.
inline IndexCodingProblem random_single_unicast(std::mt19937_64& rng, int n) {
    std::vector<Receiver> rs;
    for (int i = 1; i <= n; ++i) {
        Receiver r;
        r.wants = {i};
        for (int k = 1; k <= n; ++k)
            if (k != i && (rng() & 1)) r.knows.push_back(k);
        rs.push_back(std::move(r));
    }
    return make_problem(n, std::move(rs));
}

// Random fixed-point-free permutation as a single unicast + single uniprior
// instance.
inline IndexCodingProblem random_susu(std::mt19937_64& rng, int n) {
    std::vector<int> perm(n);
    for (;;) {
        for (int i = 0; i < n; ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        bool ok = true;
        for (int i = 0; i < n; ++i) ok &= perm[i] != i;
        if (ok) break;
    }
    std::vector<Receiver> rs;
    for (int i = 0; i < n; ++i) rs.push_back({{i + 1}, {perm[i] + 1}});
    return make_problem(n, std::move(rs));
}

// Random single unicast + uniprior instance: receiver i wants x_i, each
// message lands in at most one know set. Empty know sets happen on purpose.
inline IndexCodingProblem random_unicast_uniprior(std::mt19937_64& rng, int n) {
    std::vector<Receiver> rs(n);
    for (int i = 0; i < n; ++i) rs[i].wants = {i + 1};
    for (int msg = 1; msg <= n; ++msg) {
        if (n < 2 || rng() % 4 == 0) continue;  // unowned message
        int owner;
        do {
            owner = static_cast<int>(rng() % n);
        } while (owner + 1 == msg);
        rs[owner].knows.push_back(msg);
    }
    for (Receiver& r : rs) std::sort(r.knows.begin(), r.knows.end());
    return make_problem(n, std::move(rs));
}

// Random single uniprior + unicast instance with m >= 2 receivers: receiver
// i knows x_i, every message is wanted by exactly one receiver. Receivers
// that end up wanting nothing are dropped, which turns their known message
// dark and exercises the staged reduction.
inline IndexCodingProblem random_uniprior_unicast(std::mt19937_64& rng, int n, int m) {
    std::vector<Receiver> rs(m);
    for (int i = 0; i < m; ++i) rs[i].knows = {i + 1};
    for (int msg = 1; msg <= n; ++msg) {
        int who;
        do {
            who = static_cast<int>(rng() % m);
        } while (who + 1 == msg);
        rs[who].wants.push_back(msg);
    }
    std::vector<Receiver> alive;
    for (Receiver& r : rs) {
        std::sort(r.wants.begin(), r.wants.end());
        if (!r.wants.empty()) alive.push_back(std::move(r));
    }
    return make_problem(n, std::move(alive));
}

}  // namespace icx::testsupport

#endif
