#include "icx/optlen.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "icx/transfer.hpp"

namespace icx::optlen {

namespace {

void require_all_single_wants(const IndexCodingProblem& p) {
    if (!classify(p).unicast) throw WrongClass("fitting search needs a unicast problem");
    for (const Receiver& r : p.receivers)
        if (r.wants.size() != 1) throw WrongClass("fitting search needs single-want receivers");
}

}  // namespace

SideInfoChoice expand_choice(const IndexCodingProblem& p, std::uint64_t counter) {
    SideInfoChoice out;
    out.bits.resize(p.side_info_total());
    for (std::size_t b = 0; b < out.bits.size(); ++b) out.bits[b] = (counter >> b) & 1;
    return out;
}

Gf2Matrix fitting_matrix(const IndexCodingProblem& p, const SideInfoChoice& choice) {
    require_all_single_wants(p);
    if (static_cast<int>(choice.bits.size()) != p.side_info_total())
        throw ShapeError("choice has wrong bit count");
    Gf2Matrix L(p.receiver_count(), p.n);
    int b = 0;
    for (int i = 0; i < p.receiver_count(); ++i) {
        const Receiver& r = p.receivers[i];
        L.set(i, r.wants[0] - 1, true);
        for (int k : r.knows) {
            if (choice.bits[b++]) L.set(i, k - 1, true);
        }
    }
    return L;
}

void fitting_candidates(const IndexCodingProblem& p, int cap_bits,
                        const std::function<void(const FittingCandidate&)>& emit) {
    require_all_single_wants(p);
    const int total = p.side_info_total();
    if (total > cap_bits) throw CapExceeded("side-information bit count above enumeration cap");
    for (std::uint64_t m = 0; m < (1ull << total); ++m) {
        FittingCandidate cand;
        cand.choice = expand_choice(p, m);
        cand.L = fitting_matrix(p, cand.choice);
        cand.rank = gf2::rank(cand.L);
        emit(cand);
    }
}

MinrankResult optimal_length_minrank(const IndexCodingProblem& p, int cap_bits) {
    MinrankResult res;
    if (p.receivers.empty()) {
        res.c_opt = 0;
        res.mu = 1;
        res.spaces = {RowSpace{0, Gf2Matrix(0, p.n)}};
        res.choice_masks = {0};
        return res;
    }
    res.c_opt = p.n + 1;
    std::set<RowSpace> spaces;
    std::uint64_t counter = 0;
    fitting_candidates(p, cap_bits, [&](const FittingCandidate& cand) {
        if (cand.rank < res.c_opt) {
            res.c_opt = cand.rank;
            res.choice_masks.clear();
            spaces.clear();
        }
        if (cand.rank == res.c_opt) {
            res.choice_masks.push_back(counter);
            spaces.insert(gf2::rref(cand.L));
        }
        ++counter;
    });
    res.spaces.assign(spaces.begin(), spaces.end());
    res.mu = static_cast<int>(res.spaces.size());
    return res;
}

CycleDecomposition cycle_decomposition_length(const IndexCodingProblem& p) {
    const ProblemClass cls = classify(p);
    if (!cls.single_unicast || !cls.single_uniprior)
        throw WrongClass("cycle decomposition needs single unicast + single uniprior");

    // perm[w] = the single message known by the receiver wanting x_w.
    std::vector<int> perm(p.n + 1, 0);
    for (const Receiver& r : p.receivers) perm[r.wants[0]] = r.knows[0];

    CycleDecomposition out;
    std::vector<bool> seen(p.n + 1, false);
    for (int s = 1; s <= p.n; ++s) {
        if (seen[s]) continue;
        std::vector<int> cycle{s};
        seen[s] = true;
        for (int j = perm[s]; j != s; j = perm[j]) {
            cycle.push_back(j);
            seen[j] = true;
        }
        out.c_opt += static_cast<int>(cycle.size()) - 1;
        out.cycles.push_back(std::move(cycle));
    }
    return out;
}

namespace {

CycleDecomposition cycles_of_core(const std::map<int, int>& want_to_know) {
    CycleDecomposition out;
    std::set<int> seen;
    for (const auto& [s, _] : want_to_know) {
        if (seen.count(s)) continue;
        std::vector<int> cycle{s};
        seen.insert(s);
        for (int j = want_to_know.at(s); j != s; j = want_to_know.at(j)) {
            cycle.push_back(j);
            seen.insert(j);
        }
        out.c_opt += static_cast<int>(cycle.size()) - 1;
        out.cycles.push_back(std::move(cycle));
    }
    return out;
}

void finish_trace(ReductionTrace& trace, const std::map<int, int>& core_map) {
    trace.core_cycles = cycles_of_core(core_map);
    trace.core_length = trace.core_cycles.c_opt;
    trace.c_total = trace.core_length;
    for (const ReductionStage& s : trace.stages) trace.c_total += s.lambda;
}

}  // namespace

ReductionTrace reduce_unicast_uniprior(const IndexCodingProblem& p) {
    const ProblemClass cls = classify(p);
    if (!cls.single_unicast || !cls.uniprior)
        throw WrongClass("this reduction needs single unicast + uniprior");

    std::map<int, std::set<int>> know_of;  // want -> residual side info
    for (const Receiver& r : p.receivers)
        know_of[r.wants[0]] = std::set<int>(r.knows.begin(), r.knows.end());

    ReductionTrace trace;
    for (;;) {
        std::vector<int> empties;
        for (const auto& [w, ks] : know_of)
            if (ks.empty()) empties.push_back(w);
        if (empties.empty()) break;
        for (int w : empties) know_of.erase(w);
        for (auto& [w, ks] : know_of)
            for (int gone : empties) ks.erase(gone);
        trace.stages.push_back({empties, static_cast<int>(empties.size())});
    }

    std::map<int, int> core_map;
    trace.core.n = p.n;
    for (const auto& [w, ks] : know_of) {
        if (ks.size() != 1) throw Error("uniprior reduction did not reach a single uniprior core");
        core_map[w] = *ks.begin();
        trace.core.receivers.push_back(Receiver{{w}, {*ks.begin()}});
    }
    finish_trace(trace, core_map);
    return trace;
}

ReductionTrace reduce_uniprior_unicast(const IndexCodingProblem& p) {
    const ProblemClass cls = classify(p);
    if (!cls.single_uniprior || !cls.unicast)
        throw WrongClass("this reduction needs single uniprior + unicast");

    struct Alive {
        int know;
        std::set<int> wants;
    };
    std::vector<Alive> recv;
    for (const Receiver& r : p.receivers)
        recv.push_back({r.knows[0], std::set<int>(r.wants.begin(), r.wants.end())});

    std::set<int> active;
    for (const Receiver& r : p.receivers)
        for (int w : r.wants) active.insert(w);
    for (const Receiver& r : p.receivers) active.insert(r.knows[0]);
    // Messages neither wanted nor known constrain nothing and never enter.

    ReductionTrace trace;
    for (;;) {
        std::erase_if(recv, [](const Alive& a) { return a.wants.empty(); });
        std::set<int> known;
        for (const Alive& a : recv) known.insert(a.know);
        std::vector<int> unknown;
        std::vector<int> silent;  // unknown and wanted by nobody: just drops out
        for (int msg : active) {
            if (known.count(msg)) continue;
            const bool wanted = std::any_of(recv.begin(), recv.end(),
                                            [&](const Alive& a) { return a.wants.count(msg) > 0; });
            (wanted ? unknown : silent).push_back(msg);
        }
        for (int msg : silent) active.erase(msg);
        if (unknown.empty()) break;
        for (int msg : unknown) {
            active.erase(msg);
            for (Alive& a : recv) a.wants.erase(msg);
        }
        trace.stages.push_back({unknown, static_cast<int>(unknown.size())});
    }

    std::map<int, int> core_map;
    trace.core.n = p.n;
    for (const Alive& a : recv) {
        if (a.wants.size() != 1) throw Error("unicast reduction did not reach a single unicast core");
        core_map[*a.wants.begin()] = a.know;
        trace.core.receivers.push_back(Receiver{{*a.wants.begin()}, {a.know}});
    }
    std::sort(trace.core.receivers.begin(), trace.core.receivers.end(),
              [](const Receiver& a, const Receiver& b) { return a.wants[0] < b.wants[0]; });
    finish_trace(trace, core_map);
    return trace;
}

}  // namespace icx::optlen
