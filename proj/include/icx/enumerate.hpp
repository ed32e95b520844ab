#ifndef ICX_ENUMERATE_HPP
#define ICX_ENUMERATE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "icx/gf2.hpp"
#include "icx/optlen.hpp"
#include "icx/problem.hpp"

namespace icx::enumerate {

using gf2::BigInt;

// A linear index code: an unordered set of independent nonzero codewords.
// Codeword bit j-1 = message j; stored sorted ascending, which is the
// canonical form used for comparisons and output.
struct IndexCode {
    std::vector<std::uint64_t> words;

    bool operator==(const IndexCode&) const = default;
    bool operator<(const IndexCode& rhs) const { return words < rhs.words; }
};

IndexCode make_code(std::vector<std::uint64_t> words);
std::string codeword_to_string(std::uint64_t w);             // "x1+x2"
std::string code_to_string(const IndexCode& code);           // "x1+x2, x2+x3"
std::uint64_t parse_codeword(const std::string& text, int n);  // "x1+x2" or "110"

// mu / c! * prod_{i=0}^{c-1} (2^c - 2^i), exact.
BigInt count_optimal_codes(int c, int mu);

struct CodeCheck {
    bool valid = true;
    int receiver = 0;  // 1-based, first failure
    int want = 0;
};

// Independent decodability oracle: valid iff for every receiver and want w,
// e_w lies in rowspace(code) + span{e_k : k in K_i}.
CodeCheck verify_code(const IndexCodingProblem& p, const IndexCode& code);

struct EnumerateCaps {
    int sideinfo_bits = 24;
    std::uint64_t materialize = 1'000'000;
};

struct CodeCensus {
    int c_opt = 0;
    int mu = 0;
    BigInt count_per_space = 0;
    BigInt total = 0;
    bool materialized = false;
    std::vector<IndexCode> codes;  // deduplicated, spaces in sorted order,
                                   // bases in enumeration order within a space
};

// All optimal-length codes: every basis of every minimum-rank fitting row
// space. Census counts are always exact; the list is materialized only when
// total <= caps.materialize.
CodeCensus enumerate_optimal_codes(const IndexCodingProblem& p, const EnumerateCaps& caps = {});

// Exhaustive anti-drift oracle: count independent c-subsets of nonzero
// vectors that decode for every receiver. Guard: n*c <= 24.
BigInt brute_force_census(const IndexCodingProblem& p, int c);

}  // namespace icx::enumerate

#endif
