#ifndef ICX_MINMAX_HPP
#define ICX_MINMAX_HPP

#include <vector>

#include "icx/enumerate.hpp"
#include "icx/gf2.hpp"
#include "icx/problem.hpp"

namespace icx::minmax {

using enumerate::IndexCode;
using gf2::Gf2Matrix;

// One way for a receiver to recover its want: XOR the listed transmissions
// and side-information messages. t_use = |transmissions|.
struct DecodingPlan {
    int receiver = 0;                 // 1-based
    std::vector<int> transmissions;   // 1-based codeword indices, ascending
    std::vector<int> side_info;       // message labels, ascending
    int t_use = 0;
};

// Every minimum-transmission-count plan for receiver i (1-based), ordered by
// transmission subset. Throws Undecodable if the code does not serve i.
std::vector<DecodingPlan> minimal_plans(const IndexCodingProblem& p, const IndexCode& code, int i);

int min_t_use(const IndexCodingProblem& p, const IndexCode& code, int i);

// Per-receiver minimal transmission counts, then their maximum.
std::vector<int> t_use_profile(const IndexCodingProblem& p, const IndexCode& code);
int t_max_of_code(const IndexCodingProblem& p, const IndexCode& code);

struct CodeMinMax {
    IndexCode code;
    std::vector<int> t_profile;
    int t_max = 0;
};

struct MinMaxReport {
    int c_opt = 0;
    int mu = 0;
    int t_minmax = 0;
    std::vector<CodeMinMax> per_code;  // enumeration order
    std::vector<int> winners;          // indices into per_code, ascending
};

// Score every optimal code and pick the minimum-maximum-usage winners.
MinMaxReport select_minmax(const IndexCodingProblem& p, const enumerate::EnumerateCaps& caps = {});

// Indicator-form usage counts read directly off a decoding matrix T in
// S(c): receiver i uses transmission j iff the j-th column stride of its
// T_BC row is nonzero. Throws NotInSPrime if T is not in S(c).
std::vector<int> t_use_from_T(const Gf2Matrix& T, const IndexCodingProblem& p, int c);

}  // namespace icx::minmax

#endif
