#include <doctest.h>

#include <cmath>

#include "icx/bersim.hpp"
#include "support.hpp"

using namespace icx;
using namespace icx::bersim;
using enumerate::make_code;

TEST_CASE("symbol error probability closed form") {
    CHECK(symbol_error_prob(0.0) == doctest::Approx(0.5 * (1.0 - std::sqrt(0.5 / 1.5))).epsilon(1e-12));
    CHECK(symbol_error_prob(60.0) < 1e-3);
    CHECK(symbol_error_prob(-60.0) == doctest::Approx(0.5).epsilon(1e-3));
    for (double db = -10.0; db <= 40.0; db += 1.0) {
        CHECK(symbol_error_prob(db) > 0.0);
        CHECK(symbol_error_prob(db) < 0.5);
        CHECK(symbol_error_prob(db) > symbol_error_prob(db + 1.0));
    }
}

TEST_CASE("analytic XOR-chain error probability") {
    CHECK(analytic_receiver_ber(0, 0.3) == 0.0);
    CHECK(analytic_receiver_ber(1, 0.123) == doctest::Approx(0.123));
    CHECK(analytic_receiver_ber(2, 0.1) == doctest::Approx(0.18));
    for (int t = 1; t < 6; ++t)
        CHECK(analytic_receiver_ber(t, 0.2) < analytic_receiver_ber(t + 1, 0.2));
}

namespace {
std::vector<minmax::DecodingPlan> first_plans(const IndexCodingProblem& p,
                                              const enumerate::IndexCode& code) {
    std::vector<minmax::DecodingPlan> plans;
    for (int i = 1; i <= p.receiver_count(); ++i)
        plans.push_back(minmax::minimal_plans(p, code, i).front());
    return plans;
}
}  // namespace

TEST_CASE("noise-free channel never errs") {
    const IndexCodingProblem p = testsupport::ex1();
    const enumerate::IndexCode code = make_code({0b011, 0b110});
    BerConfig cfg;
    cfg.channel = ChannelKind::fixed_p;
    cfg.fixed_p = 0.0;
    cfg.snr_grid_db = {0.0};
    cfg.trials = 2000;
    const BerResult res = simulate(p, code, first_plans(p, code), cfg);
    for (double b : res.per_receiver[0]) CHECK(b == 0.0);
    CHECK(res.worst_case[0] == 0.0);
}

TEST_CASE("fixed-p simulation matches the analytic curve within 4 sigma") {
    const IndexCodingProblem p = testsupport::ex1();
    const enumerate::IndexCode code = make_code({0b011, 0b110});
    BerConfig cfg;
    cfg.channel = ChannelKind::fixed_p;
    cfg.fixed_p = 0.1;
    cfg.snr_grid_db = {0.0};
    cfg.trials = 200000;
    cfg.seed = 7;
    const std::vector<minmax::DecodingPlan> plans = first_plans(p, code);
    const BerResult res = simulate(p, code, plans, cfg);
    for (int i = 0; i < 3; ++i) {
        const double expect = analytic_receiver_ber(plans[i].t_use, 0.1);
        const double sigma = std::sqrt(expect * (1 - expect) / static_cast<double>(cfg.trials));
        CHECK(std::abs(res.per_receiver[0][i] - expect) < 4 * sigma);
    }
}

TEST_CASE("same seed and config reproduce bit-identical results") {
    const IndexCodingProblem p = testsupport::ex4();
    const enumerate::IndexCode code = make_code({0b0110, 0b0011, 0b1000});
    BerConfig cfg;
    cfg.trials = 5000;
    cfg.seed = 99;
    cfg.snr_grid_db = {0.0, 10.0, 20.0};
    const BerResult a = simulate(p, code, first_plans(p, code), cfg);
    const BerResult b = simulate(p, code, first_plans(p, code), cfg);
    CHECK(a.per_receiver == b.per_receiver);
    CHECK(a.worst_case == b.worst_case);
}

TEST_CASE("worst-case curves are monotone in SNR within confidence") {
    const IndexCodingProblem p = testsupport::ex1();
    const enumerate::IndexCode code = make_code({0b011, 0b110});
    BerConfig cfg;
    cfg.trials = 30000;
    cfg.seed = 5;
    const BerResult res = simulate(p, code, first_plans(p, code), cfg);
    for (std::size_t pt = 0; pt + 1 < res.worst_case.size(); ++pt)
        CHECK(res.worst_case[pt + 1] <= res.worst_case[pt] + res.worst_ci[pt] + res.worst_ci[pt + 1]);
}

TEST_CASE("worked 4-message comparison: the lighter code dominates") {
    const IndexCodingProblem p = testsupport::ex4();
    const enumerate::IndexCode light = make_code({0b0110, 0b0011, 0b1000});   // worst needs 2
    const enumerate::IndexCode heavy = make_code({0b0110, 0b0011, 0b1101});   // worst needs 3
    BerConfig cfg;
    cfg.trials = 20000;
    cfg.seed = 2;
    const WorstCaseComparison comp = compare_worst_case(p, {light, heavy}, cfg);
    REQUIRE(comp.results.size() == 2);
    for (std::size_t pt = 0; pt < comp.snr_db.size(); ++pt)
        CHECK(comp.results[0].worst_case[pt] <=
              comp.results[1].worst_case[pt] + comp.results[0].worst_ci[pt] +
                  comp.results[1].worst_ci[pt]);
    // csv has a line per (code, point) plus header
    const std::string csv = comp.csv();
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 1 + 2 * comp.snr_db.size());
    CHECK(comp.table().find("rank") == 0);
    CHECK(comp.plot_script("x.csv").find("semilogy") != std::string::npos);
}

TEST_CASE("equally good codes produce indistinguishable worst-case curves") {
    const IndexCodingProblem p = testsupport::ex1();
    const std::vector<enumerate::IndexCode> codes = {
        make_code({0b011, 0b110}), make_code({0b101, 0b110}), make_code({0b101, 0b011})};
    BerConfig cfg;
    cfg.trials = 20000;
    cfg.seed = 11;
    const WorstCaseComparison comp = compare_worst_case(p, codes, cfg);
    for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = a + 1; b < 3; ++b)
            for (std::size_t pt = 0; pt < comp.snr_db.size(); ++pt)
                CHECK(std::abs(comp.results[a].worst_case[pt] - comp.results[b].worst_case[pt]) <=
                      comp.results[a].worst_ci[pt] + comp.results[b].worst_ci[pt]);
}

TEST_CASE("config validation") {
    const IndexCodingProblem p = testsupport::ex1();
    const enumerate::IndexCode code = make_code({0b011, 0b110});
    BerConfig cfg;
    cfg.trials = 0;
    CHECK_THROWS_AS(simulate(p, code, first_plans(p, code), cfg), ConfigError);
    BerConfig bad_p;
    bad_p.channel = ChannelKind::fixed_p;
    bad_p.fixed_p = 0.7;
    CHECK_THROWS_AS(simulate(p, code, first_plans(p, code), bad_p), ConfigError);
    BerConfig ok;
    CHECK_THROWS_AS(simulate(p, code, {}, ok), ConfigError);
}
