#ifndef ICX_OPTLEN_HPP
#define ICX_OPTLEN_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "icx/gf2.hpp"
#include "icx/problem.hpp"

namespace icx::optlen {

using gf2::Gf2Matrix;
using gf2::RowSpace;

// One assignment of the free side-information bits: one bit per
// (receiver, known message) pair, receiver-major, knows ascending.
struct SideInfoChoice {
    std::vector<std::uint8_t> bits;

    bool operator==(const SideInfoChoice&) const = default;
};

SideInfoChoice expand_choice(const IndexCodingProblem& p, std::uint64_t counter);

// Demand matrix for a choice: one row per receiver, e_want plus the chosen
// side-information unit vectors. For a normalized single unicast problem
// this is exactly I - B_SI * A_SI.
Gf2Matrix fitting_matrix(const IndexCodingProblem& p, const SideInfoChoice& choice);

struct FittingCandidate {
    SideInfoChoice choice;
    Gf2Matrix L;
    int rank = 0;
};

// Stream all 2^(sum|K_i|) candidates in binary-counter order (bit 0 = first
// pair). Requires every receiver to want exactly one message; throws
// CapExceeded when sum|K_i| > cap_bits.
void fitting_candidates(const IndexCodingProblem& p, int cap_bits,
                        const std::function<void(const FittingCandidate&)>& emit);

struct MinrankResult {
    int c_opt = 0;
    int mu = 0;
    std::vector<RowSpace> spaces;              // distinct minimum-rank row spaces, sorted
    std::vector<std::uint64_t> choice_masks;   // achieving choices, counter order
};

// Optimal linear length = minimum rank over all fitting candidates; mu and
// the achieving row spaces come along for the code census.
MinrankResult optimal_length_minrank(const IndexCodingProblem& p, int cap_bits = 24);

struct CycleDecomposition {
    int c_opt = 0;
    std::vector<std::vector<int>> cycles;  // message labels; each cycle starts at its
                                           // smallest element, cycles sorted by that
};

// Fast path for single unicast + single uniprior problems: the side
// information is a fixed-point-free permutation and c = sum (l_i - 1).
CycleDecomposition cycle_decomposition_length(const IndexCodingProblem& p);

struct ReductionStage {
    std::vector<int> uncoded;  // messages sent as unit-vector codewords this stage
    int lambda = 0;
};

struct ReductionTrace {
    std::vector<ReductionStage> stages;
    IndexCodingProblem core;   // surviving receivers, original message labels
    CycleDecomposition core_cycles;
    int core_length = 0;
    int c_total = 0;           // core_length + sum of lambdas
};

// Corollary-3 reduction: single unicast + uniprior. Receivers with empty
// side information get their wants transmitted uncoded, transmitted
// messages are deleted from every know set, repeat; the residue is single
// unicast + single uniprior and is solved by cycle decomposition.
ReductionTrace reduce_unicast_uniprior(const IndexCodingProblem& p);

// Corollary-4 reduction: single uniprior + unicast (wants may have several
// messages). Messages known to nobody are sent uncoded, satisfied
// receivers drop out (taking their known message with them), repeat.
ReductionTrace reduce_uniprior_unicast(const IndexCodingProblem& p);

}  // namespace icx::optlen

#endif
