#include "icx/bersim.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

namespace icx::bersim {

std::vector<double> default_snr_grid() {
    std::vector<double> g;
    for (int db = 0; db <= 40; db += 2) g.push_back(db);
    return g;
}

double symbol_error_prob(double snr_db) {
    if (!std::isfinite(snr_db)) throw ConfigError("SNR must be finite");
    const double gamma = std::pow(10.0, snr_db / 10.0);
    return 0.5 * (1.0 - std::sqrt(gamma / (2.0 + gamma)));
}

double analytic_receiver_ber(int t_use, double p) {
    if (t_use < 0) throw ConfigError("t_use must be nonnegative");
    if (p < 0.0 || p > 0.5) throw ConfigError("flip probability must lie in [0, 0.5]");
    return 0.5 * (1.0 - std::pow(1.0 - 2.0 * p, t_use));
}

namespace {

std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// Counter-based substream: key (seed, point, trial), one draw per symbol.
std::uint64_t draw(std::uint64_t seed, std::uint64_t point, std::uint64_t trial, std::uint64_t symbol) {
    return mix64(mix64(mix64(mix64(seed) ^ point) ^ trial) ^ symbol);
}

double to_unit(std::uint64_t h) { return static_cast<double>(h >> 11) * 0x1.0p-53; }

double ci95(double ber, std::uint64_t trials) {
    return 1.96 * std::sqrt(std::max(ber * (1.0 - ber), 0.0) / static_cast<double>(trials));
}

void validate_config(const BerConfig& cfg) {
    if (cfg.trials < 1) throw ConfigError("trials must be >= 1");
    for (double s : cfg.snr_grid_db)
        if (!std::isfinite(s)) throw ConfigError("SNR grid must be finite");
    if (cfg.channel == ChannelKind::fixed_p && (cfg.fixed_p < 0.0 || cfg.fixed_p > 0.5))
        throw ConfigError("fixed flip probability must lie in [0, 0.5]");
}

}  // namespace

BerResult simulate(const IndexCodingProblem& p, const IndexCode& code,
                   const std::vector<minmax::DecodingPlan>& plans, const BerConfig& cfg) {
    validate_config(cfg);
    const int c = static_cast<int>(code.words.size());
    if (c > 63) throw ConfigError("simulation covers codes up to 63 transmissions");
    if (plans.size() != static_cast<std::size_t>(p.receiver_count()))
        throw ConfigError("need exactly one decoding plan per receiver");
    std::vector<std::uint64_t> plan_mask(plans.size(), 0);
    for (std::size_t i = 0; i < plans.size(); ++i) {
        for (int t : plans[i].transmissions) {
            if (t < 1 || t > c) throw ConfigError("plan uses a transmission outside the code");
            plan_mask[i] |= 1ull << (t - 1);
        }
    }

    BerResult res;
    res.snr_db = cfg.snr_grid_db.empty() && cfg.channel == ChannelKind::rayleigh_bpsk
                     ? default_snr_grid()
                     : cfg.snr_grid_db;
    if (res.snr_db.empty()) res.snr_db = {0.0};  // fixed_p: one degenerate point unless given
    const std::size_t m = plans.size();

    for (std::size_t pt = 0; pt < res.snr_db.size(); ++pt) {
        const double flip_p = cfg.channel == ChannelKind::fixed_p ? cfg.fixed_p
                                                                  : symbol_error_prob(res.snr_db[pt]);
        std::vector<std::uint64_t> errors(m, 0);
        for (std::uint64_t trial = 0; trial < cfg.trials; ++trial) {
            std::uint64_t flips = 0;
            for (int t = 0; t < c; ++t)
                if (to_unit(draw(cfg.seed, pt, trial, t)) < flip_p) flips |= 1ull << t;
            for (std::size_t i = 0; i < m; ++i)
                errors[i] += std::popcount(flips & plan_mask[i]) & 1;
        }
        std::vector<double> ber(m), ci(m);
        double worst = 0.0, worst_hw = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            ber[i] = static_cast<double>(errors[i]) / static_cast<double>(cfg.trials);
            ci[i] = ci95(ber[i], cfg.trials);
            if (ber[i] >= worst) {
                worst = ber[i];
                worst_hw = ci[i];
            }
        }
        res.symbol_p.push_back(flip_p);
        res.per_receiver.push_back(std::move(ber));
        res.ci_halfwidth.push_back(std::move(ci));
        res.worst_case.push_back(worst);
        res.worst_ci.push_back(worst_hw);
    }
    return res;
}

std::string BerResult::csv() const {
    std::ostringstream out;
    out << "snr_db,receiver,ber,ci_halfwidth\n";
    out.precision(10);
    for (std::size_t pt = 0; pt < snr_db.size(); ++pt) {
        for (std::size_t i = 0; i < per_receiver[pt].size(); ++i)
            out << snr_db[pt] << "," << i + 1 << "," << per_receiver[pt][i] << "," << ci_halfwidth[pt][i]
                << "\n";
        out << snr_db[pt] << ",worst," << worst_case[pt] << "," << worst_ci[pt] << "\n";
    }
    return out.str();
}

WorstCaseComparison compare_worst_case(const IndexCodingProblem& p, const std::vector<IndexCode>& codes,
                                       const BerConfig& cfg) {
    if (codes.empty()) throw ConfigError("need at least one code to compare");
    WorstCaseComparison comp;
    comp.codes = codes;
    for (std::size_t ci = 0; ci < codes.size(); ++ci) {
        std::vector<minmax::DecodingPlan> plans;
        for (int i = 1; i <= p.receiver_count(); ++i)
            plans.push_back(minmax::minimal_plans(p, codes[ci], i).front());
        comp.results.push_back(simulate(p, codes[ci], plans, cfg));
        comp.code_names.push_back(enumerate::code_to_string(codes[ci]));
    }
    comp.snr_db = comp.results.front().snr_db;
    return comp;
}

std::string WorstCaseComparison::csv() const {
    std::ostringstream out;
    out << "code,snr_db,ber,ci_halfwidth\n";
    out.precision(10);
    for (std::size_t ci = 0; ci < results.size(); ++ci)
        for (std::size_t pt = 0; pt < snr_db.size(); ++pt)
            out << "\"" << code_names[ci] << "\"," << snr_db[pt] << "," << results[ci].worst_case[pt] << ","
                << results[ci].worst_ci[pt] << "\n";
    return out.str();
}

std::string WorstCaseComparison::table() const {
    // Rank by mean worst-case BER across the grid.
    std::vector<std::pair<double, std::size_t>> order;
    for (std::size_t ci = 0; ci < results.size(); ++ci) {
        double mean = 0.0;
        for (double b : results[ci].worst_case) mean += b;
        order.emplace_back(mean / static_cast<double>(results[ci].worst_case.size()), ci);
    }
    std::stable_sort(order.begin(), order.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    std::ostringstream out;
    out << "rank  mean_worst_ber  code\n";
    out.precision(6);
    for (std::size_t r = 0; r < order.size(); ++r)
        out << r + 1 << "     " << std::scientific << order[r].first << "  " << code_names[order[r].second]
            << "\n";
    return out.str();
}

std::string WorstCaseComparison::plot_script(const std::string& csv_path) const {
    std::ostringstream out;
    out << "#!/usr/bin/env python3\n"
        << "import csv\n"
        << "import collections\n"
        << "import matplotlib.pyplot as plt\n\n"
        << "curves = collections.defaultdict(list)\n"
        << "with open(" << '"' << csv_path << '"' << ") as f:\n"
        << "    for row in csv.DictReader(f):\n"
        << "        curves[row[\"code\"]].append((float(row[\"snr_db\"]), float(row[\"ber\"])))\n\n"
        << "for name, pts in curves.items():\n"
        << "    pts.sort()\n"
        << "    plt.semilogy([s for s, _ in pts], [b for _, b in pts], marker=\"o\", label=name)\n"
        << "plt.xlabel(\"SNR (dB)\")\n"
        << "plt.ylabel(\"worst-case BER\")\n"
        << "plt.grid(True, which=\"both\")\n"
        << "plt.legend()\n"
        << "plt.show()\n";
    return out.str();
}

}  // namespace icx::bersim
