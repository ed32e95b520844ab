#ifndef ICX_PROBLEM_HPP
#define ICX_PROBLEM_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "icx/errors.hpp"

namespace icx {

struct Receiver {
    std::vector<int> wants;  // 1-based message indices, sorted ascending
    std::vector<int> knows;  // side information, sorted ascending

    bool operator==(const Receiver&) const = default;
};

// An index coding instance: n messages, receivers with want/know sets.
// Invariants (enforced by validate/load): indices in [1, n], wants and
// knows disjoint per receiver, sets duplicate-free.
struct IndexCodingProblem {
    int n = 0;
    std::vector<Receiver> receivers;
    // 1-based label of the receiver each row came from; identity for loaded
    // problems, tracks splits through to_single_unicast.
    std::vector<int> origin;

    int receiver_count() const { return static_cast<int>(receivers.size()); }
    int side_info_total() const;
    bool operator==(const IndexCodingProblem& rhs) const {
        return n == rhs.n && receivers == rhs.receivers;
    }
};

struct ProblemClass {
    bool unicast = false;         // wants pairwise disjoint
    bool single_unicast = false;  // unicast, all |W_i| = 1, every message wanted
    bool uniprior = false;        // knows pairwise disjoint
    bool single_uniprior = false; // uniprior, all |K_i| = 1
};

void validate(const IndexCodingProblem& p);

IndexCodingProblem parse_problem(const std::string& json_text);
IndexCodingProblem load_problem(const std::filesystem::path& path);
std::string save_problem(const IndexCodingProblem& p);

ProblemClass classify(const IndexCodingProblem& p);

// Messages no receiver wants. They carry no decoding constraint; callers
// report them rather than guessing semantics.
std::vector<int> unwanted_messages(const IndexCodingProblem& p);

// Split every receiver with |W_i| > 1 into one receiver per want with the
// same side information, then order receivers by wanted message (so for a
// problem where every message is wanted, receiver i wants x_i).
// Throws WrongClass if p is not unicast.
IndexCodingProblem to_single_unicast(const IndexCodingProblem& p);

}  // namespace icx

#endif
