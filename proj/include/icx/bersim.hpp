#ifndef ICX_BERSIM_HPP
#define ICX_BERSIM_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "icx/enumerate.hpp"
#include "icx/minmax.hpp"
#include "icx/problem.hpp"

namespace icx::bersim {

using enumerate::IndexCode;

enum class ChannelKind { rayleigh_bpsk, fixed_p };

struct BerConfig {
    std::vector<double> snr_grid_db;  // empty -> default 0..40 dB step 2
    std::uint64_t trials = 100000;
    std::uint64_t seed = 0;
    ChannelKind channel = ChannelKind::rayleigh_bpsk;
    double fixed_p = 0.1;
};

std::vector<double> default_snr_grid();

// Hard-decision symbol error probability for coherent BPSK over a Rayleigh
// fading channel at the given average SNR (dB). Strictly inside (0, 0.5),
// decreasing in SNR; 0 dB -> (1 - sqrt(0.5/1.5))/2.
double symbol_error_prob(double snr_db);

// Error probability of a bit recovered as the XOR of t_use independently
// flipped symbols: (1 - (1-2p)^t)/2.
double analytic_receiver_ber(int t_use, double p);

struct BerResult {
    std::vector<double> snr_db;
    std::vector<double> symbol_p;                   // channel flip probability per point
    std::vector<std::vector<double>> per_receiver;  // [point][receiver]
    std::vector<std::vector<double>> ci_halfwidth;  // [point][receiver], 95% normal approx
    std::vector<double> worst_case;                 // [point] max over receivers
    std::vector<double> worst_ci;                   // halfwidth of the worst receiver

    std::string csv() const;  // snr_db,receiver,ber,ci_halfwidth
};

// Monte Carlo run: every transmitted symbol flips independently with the
// channel probability; a receiver errs iff an odd number of the symbols in
// its plan flipped. Randomness is counter-derived from (seed, point, trial),
// so results are bit-identical for a given config no matter how trials are
// partitioned.
BerResult simulate(const IndexCodingProblem& p, const IndexCode& code,
                   const std::vector<minmax::DecodingPlan>& plans, const BerConfig& cfg);

struct WorstCaseComparison {
    std::vector<double> snr_db;
    std::vector<std::string> code_names;
    std::vector<IndexCode> codes;
    std::vector<BerResult> results;

    std::string csv() const;    // code,snr_db,ber,ci_halfwidth (worst-case rows)
    std::string table() const;  // codes ranked by mean worst-case BER
    std::string plot_script(const std::string& csv_path) const;
};

// Simulate each code with its first minimal decoding plan per receiver and
// collect the pointwise worst-case curves.
WorstCaseComparison compare_worst_case(const IndexCodingProblem& p, const std::vector<IndexCode>& codes,
                                       const BerConfig& cfg);

}  // namespace icx::bersim

#endif
