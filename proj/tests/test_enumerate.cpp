#include <doctest.h>

#include <random>
#include <set>

#include "goldens.hpp"
#include "icx/enumerate.hpp"
#include "support.hpp"

using namespace icx;
using namespace icx::enumerate;
using gf2::BigInt;

namespace {
std::set<std::vector<std::uint64_t>> as_sets(const std::vector<IndexCode>& codes) {
    std::set<std::vector<std::uint64_t>> out;
    for (const IndexCode& c : codes) out.insert(c.words);
    return out;
}
}  // namespace

TEST_CASE("closed-form code counts") {
    CHECK(count_optimal_codes(3, 1) == 28);
    CHECK(count_optimal_codes(7, 1) == BigInt("32509919232"));
    CHECK(count_optimal_codes(8, 1) == BigInt("132640470466560"));
    CHECK(count_optimal_codes(3, 2) == 56);
    CHECK(count_optimal_codes(2, 1) == 3);
}

TEST_CASE("codeword formatting and parsing") {
    CHECK(codeword_to_string(0b0011) == "x1+x2");
    CHECK(codeword_to_string(0b1000) == "x4");
    CHECK(parse_codeword("x1+x2", 4) == 0b0011);
    CHECK(parse_codeword("0110", 4) == 0b0110);
    CHECK_THROWS_AS(parse_codeword("x9", 4), ParseError);
    CHECK_THROWS_AS(parse_codeword("01", 4), ParseError);
}

TEST_CASE("enumeration of the worked instances") {
    SUBCASE("3-cycle: three codes") {
        const CodeCensus census = enumerate_optimal_codes(testsupport::ex1());
        CHECK(census.c_opt == 2);
        CHECK(census.mu == 1);
        CHECK(census.total == 3);
        REQUIRE(census.materialized);
        CHECK(as_sets(census.codes) == goldens::ex1_codes());
    }
    SUBCASE("4-cycle: twenty-eight codes, equal to the reference table") {
        const CodeCensus census = enumerate_optimal_codes(testsupport::ex3());
        CHECK(census.c_opt == 3);
        CHECK(census.mu == 1);
        CHECK(census.total == 28);
        std::set<std::vector<std::uint64_t>> expected;
        for (const goldens::Ex4Row& row : goldens::ex4_space1_rows())
            expected.insert({row.w[0], row.w[1], row.w[2]});
        CHECK(as_sets(census.codes) == expected);
    }
    SUBCASE("augmented 4-cycle: fifty-six codes across two spaces") {
        const CodeCensus census = enumerate_optimal_codes(testsupport::ex4());
        CHECK(census.c_opt == 3);
        CHECK(census.mu == 2);
        CHECK(census.count_per_space == 28);
        CHECK(census.total == 56);
        std::set<std::vector<std::uint64_t>> expected;
        for (const goldens::Ex4Row& row : goldens::ex4_space1_rows())
            expected.insert({row.w[0], row.w[1], row.w[2]});
        for (const goldens::Ex4Row& row : goldens::ex4_space2_rows())
            expected.insert({row.w[0], row.w[1], row.w[2]});
        expected.insert(goldens::ex4_space2_missing());
        CHECK(expected.size() == 56);  // table has 55 distinct rows + 1 absent basis
        CHECK(as_sets(census.codes) == expected);
    }
    SUBCASE("two-cycle 5-message instance: twenty-eight codes covering the table") {
        const CodeCensus census = enumerate_optimal_codes(testsupport::ex6());
        CHECK(census.total == 28);
        const auto got = as_sets(census.codes);
        for (const auto& row : goldens::ex6_table_rows()) CHECK(got.count(row) == 1);
        for (const auto& row : goldens::ex6_table_missing()) CHECK(got.count(row) == 1);
        CHECK(goldens::ex6_table_rows().size() + goldens::ex6_table_missing().size() == got.size());
    }
}

TEST_CASE("census-only mode beyond the materialization cap") {
    const CodeCensus census = enumerate_optimal_codes(testsupport::ex5());  // c = 7
    CHECK(census.c_opt == 7);
    CHECK(census.mu == 1);
    CHECK(census.total == BigInt("32509919232"));
    CHECK_FALSE(census.materialized);
    CHECK(census.codes.empty());
}

TEST_CASE("verify_code on hand-built cases") {
    const IndexCodingProblem p = testsupport::ex1();
    CHECK(verify_code(p, make_code({0b011, 0b110})).valid);  // {x1+x2, x2+x3}
    SUBCASE("uncoded transmission always works") {
        for (const IndexCodingProblem& q :
             {testsupport::ex2(), testsupport::ex4(), testsupport::ex9()}) {
            std::vector<std::uint64_t> units;
            for (int j = 0; j < q.n; ++j) units.push_back(1ull << j);
            CHECK(verify_code(q, make_code(std::move(units))).valid);
        }
    }
    SUBCASE("single codeword cannot serve the 3-cycle") {
        const CodeCheck chk = verify_code(p, make_code({0b011}));
        CHECK_FALSE(chk.valid);
        CHECK(chk.receiver == 2);  // first receiver that cannot decode
        CHECK(chk.want == 2);
        // receiver 3 is stuck too: e3 is not in span{x1+x2} + span{e1}
        const IndexCodingProblem only_r3 = testsupport::make_problem(3, {{{3}, {1}}});
        CHECK_FALSE(verify_code(only_r3, make_code({0b011})).valid);
    }
}

TEST_CASE("brute-force census matches the enumerated counts") {
    CHECK(brute_force_census(testsupport::ex1(), 2) == 3);
    CHECK(brute_force_census(testsupport::ex3(), 3) == 28);
    CHECK(brute_force_census(testsupport::ex4(), 3) == 56);
    CHECK(brute_force_census(testsupport::ex1(), 1) == 0);
    CHECK_THROWS_AS(brute_force_census(testsupport::ex5(), 7), CapExceeded);
}

TEST_CASE("every enumerated code passes the decodability oracle") {
    for (const IndexCodingProblem& p :
         {testsupport::ex1(), testsupport::ex2(), testsupport::ex3(), testsupport::ex4(),
          testsupport::ex6()}) {
        const CodeCensus census = enumerate_optimal_codes(p);
        REQUIRE(census.materialized);
        for (const IndexCode& code : census.codes) CHECK(verify_code(p, code).valid);
    }
}

TEST_CASE("random instances: enumeration equals brute force at the optimum") {
    std::mt19937_64 rng(31337);
    for (int it = 0; it < 40; ++it) {
        const int n = 2 + static_cast<int>(rng() % 3);
        const IndexCodingProblem p = testsupport::random_single_unicast(rng, n);
        const CodeCensus census = enumerate_optimal_codes(p);
        REQUIRE(census.materialized);
        CHECK(BigInt(census.codes.size()) == census.total);
        CHECK(brute_force_census(p, census.c_opt) == census.total);
        // no valid code exists below the optimum
        if (census.c_opt > 1) CHECK(brute_force_census(p, census.c_opt - 1) == 0);
        // Theorem-2 side of the coin: the census can never undershoot the bound
        CHECK(census.total >= count_optimal_codes(census.c_opt, 1));
    }
}
