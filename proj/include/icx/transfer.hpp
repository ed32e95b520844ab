#ifndef ICX_TRANSFER_HPP
#define ICX_TRANSFER_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "icx/gf2.hpp"
#include "icx/problem.hpp"

namespace icx::transfer {

using gf2::AffineSolutionSet;
using gf2::BigInt;
using gf2::Gf2Matrix;

// Byte offsets of each receiver's side-information band (knows sorted
// ascending) inside the SI part of A, B and T.
struct SideBands {
    std::vector<int> offset;  // per receiver
    int total = 0;
};
SideBands side_bands(const IndexCodingProblem& p);

// Throws WrongClass unless p is single unicast with receiver i wanting x_i.
void require_normalized_single_unicast(const IndexCodingProblem& p);

// Input-mixing matrix, (n*c + sum|K_i|) x n. The broadcast part stacks one
// c-row all-e_j block per message j; the side-information part has one unit
// row per (receiver, known message) pair, receiver-major. Fixed for fixed c.
Gf2Matrix build_A(const IndexCodingProblem& p, int c);

// Channel matrix, square of size n*c + sum|K_i|. beta is c x n: bit (i, j)
// says transmission i+1 carries message j+1. Within the broadcast block the
// n rows of each transmission stride are identical; the SI block is I.
Gf2Matrix build_F(const IndexCodingProblem& p, int c, const Gf2Matrix& beta);

// Decoding matrix, n x (n*c + sum|K_i|). epsilon is c x n: bit (i, j) says
// receiver j+1 uses transmission i+1. side_bits (length sum|K_i|, band
// order) are the receiver's own side-information taps.
Gf2Matrix build_B(const IndexCodingProblem& p, int c, const Gf2Matrix& epsilon,
                  const std::vector<std::uint8_t>& side_bits);

struct TransferComponents {
    int c = 0;
    Gf2Matrix A, F, B;
};

TransferComponents make_components(const IndexCodingProblem& p, int c, const Gf2Matrix& beta,
                                   const Gf2Matrix& epsilon, const std::vector<std::uint8_t>& side_bits);

// M = B*F*A; the code solves the problem in c transmissions iff M = I.
Gf2Matrix compose_M(const TransferComponents& tc);

// Split T into its broadcast (n x nc) and side-information parts.
Gf2Matrix t_bc(const Gf2Matrix& T, int n, int c);
Gf2Matrix t_si(const Gf2Matrix& T, int n, int c);

// The n x n block of T_BC collecting what every receiver takes from the
// i-th transmission: columns {i, c+i, ..., (n-1)c+i} of T_BC (1-based i).
Gf2Matrix extract_R(const Gf2Matrix& T_bc, int i, int n, int c);

// Zero pattern for members of S'(c): T_SI entries outside a receiver's own
// band are forced to zero; the broadcast part is free.
Gf2Matrix sprime_zero_pattern(const IndexCodingProblem& p, int c);

// All of S'(c) as an affine solution set; |S'(c)| = 2^(n^2 c - n^2 + sum|K_i|).
AffineSolutionSet sprime_solutions(const IndexCodingProblem& p, int c);

struct SMembershipReport {
    bool in_S = false;
    int lambda = 0;                         // all-zero R_i blocks
    std::vector<int> block_rank;            // rank of each R_i, i = 1..c
    // Witness factorization (valid when in_S): R_i = epsilon_col_i * beta_row_i,
    // normal form with beta_row = first nonzero row of R_i, zero blocks -> zero.
    Gf2Matrix beta;     // c x n
    Gf2Matrix epsilon;  // c x n
};

// Lemma-1 membership test; T must lie in S'(c) (throws NotInSPrime otherwise).
SMembershipReport check_membership_S(const Gf2Matrix& T, const IndexCodingProblem& p, int c);

enum class Verdict { optimal, not_optimal, no_solution, cap_exceeded };

struct Theorem1Result {
    Verdict verdict = Verdict::cap_exceeded;
    int sprime_dim = 0;
    BigInt sprime_count = 0;
    std::uint64_t s_count = 0;  // members of S(c) seen before returning
    std::optional<Gf2Matrix> witness;  // a T in S(c) with lambda > 0
    int witness_lambda = 0;
};

// Exhaustive Theorem-1 verdict for length c: not_optimal iff some member of
// S(c) has an all-zero R_i; no_solution iff S(c) is empty; optimal otherwise.
// Refuses (cap_exceeded) when the S'(c) dimension exceeds cap_dim.
Theorem1Result verify_optimality_by_theorem1(const IndexCodingProblem& p, int c, int cap_dim = 24);

}  // namespace icx::transfer

#endif
