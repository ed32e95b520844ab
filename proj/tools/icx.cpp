// Command-line front end: analyze | enumerate | minmax | ber | oracle.
//
// Exit codes: 0 ok, 2 invalid input, 3 cap exceeded, 4 internal
// cross-check mismatch (a bug sentinel, never expected).

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "icx/bersim.hpp"
#include "icx/enumerate.hpp"
#include "icx/minmax.hpp"
#include "icx/optlen.hpp"
#include "icx/problem.hpp"
#include "icx/transfer.hpp"

namespace {

using nlohmann::json;
using namespace icx;

struct Options {
    std::string format = "table";
    int cap_sprime = 24;
    std::uint64_t cap_codes = 1'000'000;
    std::uint64_t seed = 0;
    std::uint64_t trials = 100000;
    std::string snr = "0:40:2";
    double fixed_p = -1.0;  // < 0 -> rayleigh
};

std::vector<double> parse_snr(const std::string& text) {
    std::vector<double> grid;
    if (text.find(':') != std::string::npos) {
        double start = 0, stop = 0, step = 0;
        char c1 = 0, c2 = 0;
        std::istringstream in(text);
        if (!(in >> start >> c1 >> stop >> c2 >> step) || c1 != ':' || c2 != ':' || step <= 0)
            throw ConfigError("--snr expects start:stop:step or a comma list");
        for (double v = start; v <= stop + 1e-9; v += step) grid.push_back(v);
        return grid;
    }
    std::istringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) grid.push_back(std::stod(tok));
    if (grid.empty()) throw ConfigError("--snr grid is empty");
    return grid;
}

void warn_unwanted(const IndexCodingProblem& p) {
    const std::vector<int> lone = unwanted_messages(p);
    if (lone.empty()) return;
    std::cerr << "warning: messages wanted by no receiver:";
    for (int x : lone) std::cerr << " x" << x;
    std::cerr << " (treated as unconstrained)\n";
}

std::string class_string(const ProblemClass& cls) {
    std::string out;
    if (cls.single_unicast)
        out = "single_unicast";
    else if (cls.unicast)
        out = "unicast";
    else
        out = "groupcast";
    if (cls.single_uniprior)
        out += " single_uniprior";
    else if (cls.uniprior)
        out += " uniprior";
    return out;
}

struct AnalyzeOutcome {
    ProblemClass cls;
    int c_opt = 0;
    std::string mu = "?";
    std::string method;
    bool cross_checked = false;
};

AnalyzeOutcome analyze(const IndexCodingProblem& p, const Options& opt) {
    AnalyzeOutcome out;
    out.cls = classify(p);
    if (!out.cls.unicast) throw ValidationError("groupcast problems (overlapping wants) are unsupported");

    const IndexCodingProblem q = to_single_unicast(p);
    std::optional<int> minrank_c;
    std::optional<int> minrank_mu;
    if (q.side_info_total() <= opt.cap_sprime) {
        const optlen::MinrankResult mr = optlen::optimal_length_minrank(q, opt.cap_sprime);
        minrank_c = mr.c_opt;
        minrank_mu = mr.mu;
    }

    if (out.cls.single_unicast && out.cls.single_uniprior) {
        out.method = "cycle";
        out.c_opt = optlen::cycle_decomposition_length(p).c_opt;
        out.mu = "1";
    } else if (out.cls.single_unicast && out.cls.uniprior) {
        out.method = "reduction-unicast-uniprior";
        out.c_opt = optlen::reduce_unicast_uniprior(p).c_total;
        out.mu = "1";
    } else if (out.cls.single_uniprior && out.cls.unicast && !out.cls.single_unicast) {
        out.method = "reduction-uniprior-unicast";
        out.c_opt = optlen::reduce_uniprior_unicast(p).c_total;
        out.mu = minrank_mu ? std::to_string(*minrank_mu) : "n/a";
    } else {
        out.method = "minrank";
        if (!minrank_c) throw CapExceeded("side-information bit count above --cap-sprime");
        out.c_opt = *minrank_c;
        out.mu = std::to_string(*minrank_mu);
    }

    if (out.method != "minrank" && minrank_c) {
        out.cross_checked = true;
        if (*minrank_c != out.c_opt)
            throw Error("cross-check mismatch: minrank disagrees with " + out.method);
        if ((out.method == "cycle" || out.method == "reduction-unicast-uniprior") && *minrank_mu != 1)
            throw Error("cross-check mismatch: expected a single row space for " + out.method);
    }
    return out;
}

int cmd_analyze(const std::string& path, const Options& opt) {
    const IndexCodingProblem p = load_problem(path);
    warn_unwanted(p);
    const AnalyzeOutcome res = analyze(p, opt);
    if (opt.format == "json") {
        json doc;
        doc["class"] = class_string(res.cls);
        doc["c_opt"] = res.c_opt;
        if (res.mu != "?" && res.mu != "n/a") doc["mu"] = std::stoi(res.mu);
        doc["method"] = res.method;
        doc["cross_checked"] = res.cross_checked;
        std::cout << doc.dump(2) << "\n";
    } else if (opt.format == "csv") {
        std::cout << "class,c_opt,mu,method,cross_checked\n"
                  << '"' << class_string(res.cls) << "\"," << res.c_opt << "," << res.mu << ","
                  << res.method << "," << (res.cross_checked ? 1 : 0) << "\n";
    } else {
        std::cout << "class          " << class_string(res.cls) << "\n"
                  << "c_opt          " << res.c_opt << "\n"
                  << "mu             " << res.mu << "\n"
                  << "method         " << res.method << "\n"
                  << "cross_checked  " << (res.cross_checked ? "yes" : "no") << "\n";
    }
    return 0;
}

int cmd_enumerate(const std::string& path, const Options& opt) {
    const IndexCodingProblem p = load_problem(path);
    warn_unwanted(p);
    enumerate::EnumerateCaps caps{opt.cap_sprime, opt.cap_codes};
    const enumerate::CodeCensus census = enumerate::enumerate_optimal_codes(p, caps);
    if (opt.format == "json") {
        json doc;
        doc["c_opt"] = census.c_opt;
        doc["mu"] = census.mu;
        doc["count_per_space"] = census.count_per_space.str();
        doc["total"] = census.total.str();
        doc["materialized"] = census.materialized;
        if (census.materialized) {
            doc["codes"] = json::array();
            for (const auto& code : census.codes) doc["codes"].push_back(enumerate::code_to_string(code));
        }
        std::cout << doc.dump(2) << "\n";
    } else if (opt.format == "csv") {
        std::cout << "id,encoding\n";
        for (std::size_t i = 0; i < census.codes.size(); ++i)
            std::cout << i + 1 << ",\"" << enumerate::code_to_string(census.codes[i]) << "\"\n";
    } else {
        std::cout << "c_opt            " << census.c_opt << "\n"
                  << "mu               " << census.mu << "\n"
                  << "count_per_space  " << census.count_per_space.str() << "\n"
                  << "total            " << census.total.str() << "\n";
        if (census.materialized) {
            std::cout << "\ncode  encoding\n";
            for (std::size_t i = 0; i < census.codes.size(); ++i)
                std::cout << "C" << i + 1 << "    " << enumerate::code_to_string(census.codes[i]) << "\n";
        } else {
            std::cout << "(list not materialized: total above --cap-codes)\n";
        }
    }
    return 0;
}

int cmd_minmax(const std::string& path, const Options& opt, bool first_only) {
    const IndexCodingProblem p = load_problem(path);
    warn_unwanted(p);
    enumerate::EnumerateCaps caps{opt.cap_sprime, opt.cap_codes};
    const minmax::MinMaxReport rep = minmax::select_minmax(p, caps);
    if (opt.format == "json") {
        json doc;
        doc["c_opt"] = rep.c_opt;
        doc["mu"] = rep.mu;
        doc["t_minmax"] = rep.t_minmax;
        doc["codes"] = json::array();
        for (const auto& cm : rep.per_code)
            doc["codes"].push_back({{"encoding", enumerate::code_to_string(cm.code)},
                                    {"t_profile", cm.t_profile},
                                    {"t_max", cm.t_max}});
        doc["winners"] = json::array();
        for (int idx : rep.winners) {
            doc["winners"].push_back(idx + 1);
            if (first_only) break;
        }
        std::cout << doc.dump(2) << "\n";
    } else if (opt.format == "csv") {
        std::cout << "id,encoding,t_max,winner\n";
        for (std::size_t i = 0; i < rep.per_code.size(); ++i) {
            const bool win = std::find(rep.winners.begin(), rep.winners.end(), static_cast<int>(i)) !=
                             rep.winners.end();
            std::cout << i + 1 << ",\"" << enumerate::code_to_string(rep.per_code[i].code) << "\","
                      << rep.per_code[i].t_max << "," << (win ? 1 : 0) << "\n";
        }
    } else {
        std::cout << "c_opt     " << rep.c_opt << "\n"
                  << "t_minmax  " << rep.t_minmax << "\n\n"
                  << "code  t_max  encoding\n";
        for (std::size_t i = 0; i < rep.per_code.size(); ++i)
            std::cout << "C" << i + 1 << "    " << rep.per_code[i].t_max << "      "
                      << enumerate::code_to_string(rep.per_code[i].code) << "\n";
        std::cout << "\nwinners:";
        for (int idx : rep.winners) {
            std::cout << " C" << idx + 1;
            if (first_only) break;
        }
        std::cout << "\n";
    }
    return 0;
}

int cmd_ber(const std::string& path, const Options& opt, const std::vector<int>& ids,
            const std::vector<std::string>& literals, const std::string& plot_path) {
    const IndexCodingProblem p = load_problem(path);
    warn_unwanted(p);

    bersim::BerConfig cfg;
    cfg.snr_grid_db = parse_snr(opt.snr);
    cfg.trials = opt.trials;
    cfg.seed = opt.seed;
    if (opt.fixed_p >= 0.0) {
        cfg.channel = bersim::ChannelKind::fixed_p;
        cfg.fixed_p = opt.fixed_p;
    }

    std::vector<enumerate::IndexCode> codes;
    for (const std::string& lit : literals) {
        std::vector<std::uint64_t> words;
        std::istringstream in(lit);
        std::string tok;
        while (std::getline(in, tok, ',')) words.push_back(enumerate::parse_codeword(tok, p.n));
        codes.push_back(enumerate::make_code(std::move(words)));
    }
    if (!ids.empty() || codes.empty()) {
        enumerate::EnumerateCaps caps{opt.cap_sprime, opt.cap_codes};
        const minmax::MinMaxReport rep = minmax::select_minmax(p, caps);
        if (ids.empty()) {
            for (int idx : rep.winners) codes.push_back(rep.per_code[idx].code);  // default: winners
        } else {
            for (int id : ids) {
                if (id < 1 || id > static_cast<int>(rep.per_code.size()))
                    throw ValidationError("--codes id out of range");
                codes.push_back(rep.per_code[id - 1].code);
            }
        }
    }

    const IndexCodingProblem q = to_single_unicast(p);
    const bersim::WorstCaseComparison comp = bersim::compare_worst_case(q, codes, cfg);
    if (!plot_path.empty()) {
        std::ofstream out(plot_path);
        out << comp.plot_script("ber.csv");
    }
    if (opt.format == "table")
        std::cout << comp.table();
    else
        std::cout << comp.csv();
    return 0;
}

int cmd_oracle(const std::string& path, const Options& opt, int c) {
    const IndexCodingProblem p = load_problem(path);
    warn_unwanted(p);
    const IndexCodingProblem q = to_single_unicast(p);
    const transfer::Theorem1Result res = transfer::verify_optimality_by_theorem1(q, c, opt.cap_sprime);

    std::string verdict;
    switch (res.verdict) {
        case transfer::Verdict::optimal: verdict = "optimal"; break;
        case transfer::Verdict::not_optimal: verdict = "not_optimal"; break;
        case transfer::Verdict::no_solution: verdict = "no_solution"; break;
        case transfer::Verdict::cap_exceeded: verdict = "cap_exceeded"; break;
    }
    std::string census = "n/a";
    if (res.verdict != transfer::Verdict::cap_exceeded && q.n * c <= 24)
        census = enumerate::brute_force_census(q, c).str();

    if (opt.format == "json") {
        json doc;
        doc["c"] = c;
        doc["verdict"] = verdict;
        doc["sprime_count"] = res.sprime_count.str();
        doc["s_count_seen"] = res.s_count;
        if (res.witness) doc["witness_lambda"] = res.witness_lambda;
        doc["census"] = census;
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "c             " << c << "\n"
                  << "verdict       " << verdict << "\n"
                  << "|S'(c)|       " << res.sprime_count.str() << "\n"
                  << "members of S  " << res.s_count
                  << (res.verdict == transfer::Verdict::not_optimal ? "+" : "") << "\n";
        if (res.witness)
            std::cout << "witness (lambda " << res.witness_lambda << "):\n"
                      << res.witness->to_string() << "\n";
        std::cout << "census(c)     " << census << "\n";
    }
    if (res.verdict == transfer::Verdict::cap_exceeded)
        throw CapExceeded("S'(c) dimension above --cap-sprime");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"algebraic index coding toolkit"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--format", opt.format, "output format")->check(CLI::IsMember({"json", "table", "csv"}));
    app.add_option("--cap-sprime", opt.cap_sprime, "max S' dimension / side-info bits");
    app.add_option("--cap-codes", opt.cap_codes, "max codes to materialize");
    app.add_option("--seed", opt.seed, "simulation seed");
    app.add_option("--trials", opt.trials, "Monte Carlo trials per SNR point");
    app.add_option("--snr", opt.snr, "SNR grid, start:stop:step or comma list (dB)");
    app.add_option("--fixed-p", opt.fixed_p, "use a fixed flip probability instead of Rayleigh");

    std::string path;
    auto* a = app.add_subcommand("analyze", "classify and compute the optimal length");
    a->fallthrough();
    a->add_option("problem", path)->required();

    auto* e = app.add_subcommand("enumerate", "count and list all optimal codes");
    e->fallthrough();
    e->add_option("problem", path)->required();

    bool first_only = false;
    auto* m = app.add_subcommand("minmax", "score codes by worst-receiver usage");
    m->fallthrough();
    m->add_option("problem", path)->required();
    m->add_flag("--first", first_only, "print only the first winner");

    std::vector<int> ber_ids;
    std::vector<std::string> ber_literals;
    std::string plot_path;
    auto* b = app.add_subcommand("ber", "Monte Carlo worst-case BER comparison");
    b->fallthrough();
    b->add_option("problem", path)->required();
    b->add_option("--codes", ber_ids, "code ids from the enumerate order")->delimiter(',');
    b->add_option("--code", ber_literals, "explicit code, comma-separated codewords (x1+x2 or bitstring)");
    b->add_option("--plot-script", plot_path, "write a plotting script here");

    int oracle_c = 1;
    auto* o = app.add_subcommand("oracle", "exhaustive left-inverse machinery at a given length");
    o->fallthrough();
    o->add_option("problem", path)->required();
    o->add_option("--c", oracle_c, "code length to test")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (a->parsed()) return cmd_analyze(path, opt);
        if (e->parsed()) return cmd_enumerate(path, opt);
        if (m->parsed()) return cmd_minmax(path, opt, first_only);
        if (b->parsed()) return cmd_ber(path, opt, ber_ids, ber_literals, plot_path);
        if (o->parsed()) return cmd_oracle(path, opt, oracle_c);
    } catch (const CapExceeded& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 3;
    } catch (const ParseError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    } catch (const ValidationError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    } catch (const WrongClass& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    } catch (const ConfigError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    } catch (const Error& ex) {
        std::cerr << "internal: " << ex.what() << "\n";
        return 4;
    } catch (const std::exception& ex) {
        std::cerr << "unexpected: " << ex.what() << "\n";
        return 1;
    }
    return 0;
}
