#include "icx/minmax.hpp"

#include <algorithm>

#include "icx/transfer.hpp"

namespace icx::minmax {

namespace {

std::uint64_t know_mask(const Receiver& r) {
    std::uint64_t m = 0;
    for (int k : r.knows) m |= 1ull << (k - 1);
    return m;
}

// Next subset of the same popcount (Gosper's hack).
std::uint64_t next_same_weight(std::uint64_t v) {
    const std::uint64_t c = v & -v;
    const std::uint64_t r = v + c;
    return (((r ^ v) >> 2) / c) | r;
}

}  // namespace

std::vector<DecodingPlan> minimal_plans(const IndexCodingProblem& p, const IndexCode& code, int i) {
    if (i < 1 || i > p.receiver_count()) throw IndexError("receiver index out of range");
    const Receiver& r = p.receivers[i - 1];
    if (r.wants.size() != 1) throw WrongClass("decoding plans are per single-want receiver");
    if (p.n > 64) throw ShapeError("plan search covers n <= 64");
    const int c = static_cast<int>(code.words.size());
    if (c > 24) throw CapExceeded("plan search covers codes up to 24 transmissions");

    const std::uint64_t want = 1ull << (r.wants[0] - 1);
    const std::uint64_t kmask = know_mask(r);

    std::vector<DecodingPlan> out;
    for (int size = 0; size <= c; ++size) {
        std::uint64_t sub = size == 0 ? 0 : (1ull << size) - 1;
        for (;;) {
            std::uint64_t v = want;
            for (int t = 0; t < c; ++t)
                if ((sub >> t) & 1) v ^= code.words[t];
            if ((v & ~kmask) == 0) {
                DecodingPlan plan;
                plan.receiver = i;
                plan.t_use = size;
                for (int t = 0; t < c; ++t)
                    if ((sub >> t) & 1) plan.transmissions.push_back(t + 1);
                for (int j = 0; j < p.n; ++j)
                    if ((v >> j) & 1) plan.side_info.push_back(j + 1);
                out.push_back(std::move(plan));
            }
            if (size == 0) break;
            sub = next_same_weight(sub);
            if (sub >= (1ull << c)) break;
        }
        if (!out.empty()) return out;
    }
    throw Undecodable("receiver cannot decode its want from this code");
}

int min_t_use(const IndexCodingProblem& p, const IndexCode& code, int i) {
    return minimal_plans(p, code, i).front().t_use;
}

std::vector<int> t_use_profile(const IndexCodingProblem& p, const IndexCode& code) {
    std::vector<int> out;
    out.reserve(p.receivers.size());
    for (int i = 1; i <= p.receiver_count(); ++i) out.push_back(min_t_use(p, code, i));
    return out;
}

int t_max_of_code(const IndexCodingProblem& p, const IndexCode& code) {
    const std::vector<int> profile = t_use_profile(p, code);
    if (profile.empty()) return 0;
    return *std::max_element(profile.begin(), profile.end());
}

MinMaxReport select_minmax(const IndexCodingProblem& p, const enumerate::EnumerateCaps& caps) {
    const IndexCodingProblem q = to_single_unicast(p);
    const enumerate::CodeCensus census = enumerate::enumerate_optimal_codes(q, caps);
    if (!census.materialized) throw CapExceeded("minmax selection needs the code list materialized");

    MinMaxReport rep;
    rep.c_opt = census.c_opt;
    rep.mu = census.mu;
    rep.t_minmax = census.c_opt;
    for (const IndexCode& code : census.codes) {
        CodeMinMax cm;
        cm.code = code;
        cm.t_profile = t_use_profile(q, code);
        cm.t_max = cm.t_profile.empty() ? 0 : *std::max_element(cm.t_profile.begin(), cm.t_profile.end());
        rep.t_minmax = std::min(rep.t_minmax, cm.t_max);
        rep.per_code.push_back(std::move(cm));
    }
    for (std::size_t idx = 0; idx < rep.per_code.size(); ++idx)
        if (rep.per_code[idx].t_max == rep.t_minmax) rep.winners.push_back(static_cast<int>(idx));
    return rep;
}

std::vector<int> t_use_from_T(const Gf2Matrix& T, const IndexCodingProblem& p, int c) {
    const transfer::SMembershipReport rep = transfer::check_membership_S(T, p, c);
    if (!rep.in_S) throw NotInSPrime("T is not in S(c)");
    const Gf2Matrix bc = transfer::t_bc(T, p.n, c);
    std::vector<int> out(p.n, 0);
    for (int i = 0; i < p.n; ++i)
        for (int j = 0; j < c; ++j) {
            bool used = false;
            for (int k = 0; k < p.n && !used; ++k) used = bc.get(i, k * c + j);
            if (used) ++out[i];
        }
    return out;
}

}  // namespace icx::minmax
