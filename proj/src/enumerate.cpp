#include "icx/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace icx::enumerate {

IndexCode make_code(std::vector<std::uint64_t> words) {
    std::sort(words.begin(), words.end());
    if (std::adjacent_find(words.begin(), words.end()) != words.end())
        throw ValidationError("duplicate codeword");
    for (std::uint64_t w : words)
        if (w == 0) throw ValidationError("zero codeword");
    return IndexCode{std::move(words)};
}

std::string codeword_to_string(std::uint64_t w) {
    std::string out;
    for (int j = 0; j < 64; ++j)
        if ((w >> j) & 1) {
            if (!out.empty()) out += "+";
            out += "x" + std::to_string(j + 1);
        }
    return out.empty() ? "0" : out;
}

std::string code_to_string(const IndexCode& code) {
    std::string out;
    for (std::size_t i = 0; i < code.words.size(); ++i) {
        if (i) out += ", ";
        out += codeword_to_string(code.words[i]);
    }
    return out;
}

std::uint64_t parse_codeword(const std::string& text, int n) {
    if (n < 1 || n > 64) throw ShapeError("codewords cover 1..64 messages");
    std::uint64_t w = 0;
    if (text.find('x') == std::string::npos) {
        if (static_cast<int>(text.size()) != n) throw ParseError("codeword bitstring must have n digits");
        for (int j = 0; j < n; ++j) {
            if (text[j] == '1')
                w |= 1ull << j;
            else if (text[j] != '0')
                throw ParseError("codeword bitstring must be 0/1");
        }
        return w;
    }
    std::size_t pos = 0;
    while (pos < text.size()) {
        if (text[pos] == '+' || text[pos] == ' ') {
            ++pos;
            continue;
        }
        if (text[pos] != 'x') throw ParseError("codeword must look like x1+x2");
        std::size_t end = ++pos;
        while (end < text.size() && isdigit(static_cast<unsigned char>(text[end]))) ++end;
        if (end == pos) throw ParseError("missing message index after x");
        const int idx = std::stoi(text.substr(pos, end - pos));
        if (idx < 1 || idx > n) throw ParseError("message index out of range in codeword");
        w ^= 1ull << (idx - 1);
        pos = end;
    }
    return w;
}

BigInt count_optimal_codes(int c, int mu) {
    if (c < 1 || mu < 1) throw ShapeError("count needs c >= 1, mu >= 1");
    return gf2::count_bases(c) * mu;
}

namespace {

// xor-basis insert; returns false if w is dependent on the basis so far.
bool xb_insert(std::vector<std::uint64_t>& basis, std::uint64_t w) {
    for (std::uint64_t b : basis) {
        const std::uint64_t low = b & ~(b - 1);
        if (w & low) w ^= b;
    }
    if (w == 0) return false;
    basis.push_back(w);
    return true;
}

bool xb_contains(const std::vector<std::uint64_t>& basis, std::uint64_t w) {
    for (std::uint64_t b : basis) {
        const std::uint64_t low = b & ~(b - 1);
        if (w & low) w ^= b;
    }
    return w == 0;
}

}  // namespace

CodeCheck verify_code(const IndexCodingProblem& p, const IndexCode& code) {
    if (p.n > 64) throw ShapeError("code verification covers n <= 64");
    for (int i = 0; i < p.receiver_count(); ++i) {
        const Receiver& r = p.receivers[i];
        std::vector<std::uint64_t> basis;
        for (std::uint64_t w : code.words) xb_insert(basis, w);
        for (int k : r.knows) xb_insert(basis, 1ull << (k - 1));
        for (int w : r.wants)
            if (!xb_contains(basis, 1ull << (w - 1))) return CodeCheck{false, i + 1, w};
    }
    return CodeCheck{};
}

CodeCensus enumerate_optimal_codes(const IndexCodingProblem& p, const EnumerateCaps& caps) {
    const IndexCodingProblem q = to_single_unicast(p);
    const optlen::MinrankResult mr = optlen::optimal_length_minrank(q, caps.sideinfo_bits);

    CodeCensus census;
    census.c_opt = mr.c_opt;
    census.mu = mr.mu;
    if (mr.c_opt == 0) {
        census.count_per_space = 1;
        census.total = 1;
        census.materialized = true;
        census.codes = {IndexCode{}};
        return census;
    }
    census.count_per_space = gf2::count_bases(mr.c_opt);
    census.total = census.count_per_space * mr.mu;
    if (census.total > BigInt(caps.materialize)) return census;
    if (p.n > 64) throw ShapeError("code materialization covers n <= 64");

    std::set<IndexCode> seen;  // cross-space dedup; equal spans cannot happen, kept anyway
    for (const gf2::RowSpace& space : mr.spaces) {
        gf2::enumerate_bases(space, census.count_per_space, [&](const gf2::Gf2Matrix& basis) {
            std::vector<std::uint64_t> words(basis.rows());
            for (int r = 0; r < basis.rows(); ++r) words[r] = basis.row_mask(r);
            IndexCode code = make_code(std::move(words));
            if (seen.insert(code).second) census.codes.push_back(std::move(code));
        });
    }
    census.materialized = true;
    if (BigInt(census.codes.size()) != census.total)
        throw Error("census total does not match materialized enumeration");
    return census;
}

BigInt brute_force_census(const IndexCodingProblem& p, int c) {
    if (c < 1) throw ShapeError("census needs c >= 1");
    if (p.n * c > 24) throw CapExceeded("brute-force census above work guard");
    const std::uint64_t top = 1ull << p.n;

    BigInt count = 0;
    std::vector<std::uint64_t> chosen;
    std::vector<std::uint64_t> basis;
    std::function<void(std::uint64_t)> rec = [&](std::uint64_t start) {
        if (static_cast<int>(chosen.size()) == c) {
            if (verify_code(p, IndexCode{chosen}).valid) ++count;
            return;
        }
        const std::uint64_t remaining = c - chosen.size();
        for (std::uint64_t v = start; v + remaining <= top; ++v) {
            std::vector<std::uint64_t> saved = basis;
            if (!xb_insert(basis, v)) {
                continue;  // dependent subsets can never be codes of rank c
            }
            chosen.push_back(v);
            rec(v + 1);
            chosen.pop_back();
            basis = std::move(saved);
        }
    };
    rec(1);
    return count;
}

}  // namespace icx::enumerate
