#include "icx/problem.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

namespace icx {

namespace {

std::vector<int> sorted_unique(std::vector<int> v, const char* what) {
    std::sort(v.begin(), v.end());
    if (std::adjacent_find(v.begin(), v.end()) != v.end())
        throw ValidationError(std::string("duplicate index in ") + what);
    return v;
}

}  // namespace

int IndexCodingProblem::side_info_total() const {
    return std::accumulate(receivers.begin(), receivers.end(), 0,
                           [](int acc, const Receiver& r) { return acc + static_cast<int>(r.knows.size()); });
}

void validate(const IndexCodingProblem& p) {
    if (p.n < 0) throw ValidationError("negative message count");
    for (std::size_t i = 0; i < p.receivers.size(); ++i) {
        const Receiver& r = p.receivers[i];
        for (int x : r.wants)
            if (x < 1 || x > p.n) throw ValidationError("want index out of range");
        for (int x : r.knows)
            if (x < 1 || x > p.n) throw ValidationError("know index out of range");
        if (!std::is_sorted(r.wants.begin(), r.wants.end()) ||
            !std::is_sorted(r.knows.begin(), r.knows.end()))
            throw ValidationError("receiver sets must be sorted");
        std::vector<int> both;
        std::set_intersection(r.wants.begin(), r.wants.end(), r.knows.begin(), r.knows.end(),
                              std::back_inserter(both));
        if (!both.empty()) throw ValidationError("receiver both wants and knows a message");
    }
    if (!p.origin.empty() && p.origin.size() != p.receivers.size())
        throw ValidationError("origin labels out of sync with receivers");
}

IndexCodingProblem parse_problem(const std::string& json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("bad JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("problem file must be a JSON object");
    for (const auto& [key, _] : doc.items())
        if (key != "messages" && key != "receivers")
            throw ParseError("unknown key in problem file: " + key);
    if (!doc.contains("messages") || !doc["messages"].is_number_integer())
        throw ParseError("\"messages\" must be an integer");
    if (!doc.contains("receivers") || !doc["receivers"].is_array())
        throw ParseError("\"receivers\" must be an array");

    IndexCodingProblem p;
    p.n = doc["messages"].get<int>();
    for (const auto& jr : doc["receivers"]) {
        if (!jr.is_object()) throw ParseError("receiver entry must be an object");
        for (const auto& [key, _] : jr.items())
            if (key != "wants" && key != "knows")
                throw ParseError("unknown key in receiver entry: " + key);
        Receiver r;
        if (jr.contains("wants")) {
            if (!jr["wants"].is_array()) throw ParseError("\"wants\" must be an array");
            for (const auto& v : jr["wants"]) {
                if (!v.is_number_integer()) throw ParseError("want indices must be integers");
                r.wants.push_back(v.get<int>());
            }
        }
        if (jr.contains("knows")) {
            if (!jr["knows"].is_array()) throw ParseError("\"knows\" must be an array");
            for (const auto& v : jr["knows"]) {
                if (!v.is_number_integer()) throw ParseError("know indices must be integers");
                r.knows.push_back(v.get<int>());
            }
        }
        r.wants = sorted_unique(std::move(r.wants), "wants");
        r.knows = sorted_unique(std::move(r.knows), "knows");
        p.receivers.push_back(std::move(r));
    }
    p.origin.resize(p.receivers.size());
    std::iota(p.origin.begin(), p.origin.end(), 1);
    validate(p);
    return p;
}

IndexCodingProblem load_problem(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open problem file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_problem(buf.str());
}

std::string save_problem(const IndexCodingProblem& p) {
    nlohmann::json doc;
    doc["messages"] = p.n;
    doc["receivers"] = nlohmann::json::array();
    for (const Receiver& r : p.receivers)
        doc["receivers"].push_back({{"wants", r.wants}, {"knows", r.knows}});
    return doc.dump(2) + "\n";
}

ProblemClass classify(const IndexCodingProblem& p) {
    ProblemClass c;
    std::set<int> wanted, known;
    bool wants_disjoint = true, knows_disjoint = true;
    bool wants_single = !p.receivers.empty(), knows_single = !p.receivers.empty();
    for (const Receiver& r : p.receivers) {
        for (int x : r.wants) wants_disjoint &= wanted.insert(x).second;
        for (int x : r.knows) knows_disjoint &= known.insert(x).second;
        wants_single &= r.wants.size() == 1;
        knows_single &= r.knows.size() == 1;
    }
    c.unicast = wants_disjoint;
    c.uniprior = knows_disjoint;
    c.single_unicast = c.unicast && wants_single && static_cast<int>(wanted.size()) == p.n;
    c.single_uniprior = c.uniprior && knows_single;
    if (p.n == 0 && p.receivers.empty()) {
        c.unicast = c.uniprior = true;
        c.single_unicast = c.single_uniprior = true;
    }
    return c;
}

std::vector<int> unwanted_messages(const IndexCodingProblem& p) {
    std::vector<bool> wanted(p.n + 1, false);
    for (const Receiver& r : p.receivers)
        for (int x : r.wants) wanted[x] = true;
    std::vector<int> out;
    for (int x = 1; x <= p.n; ++x)
        if (!wanted[x]) out.push_back(x);
    return out;
}

IndexCodingProblem to_single_unicast(const IndexCodingProblem& p) {
    if (!classify(p).unicast) throw WrongClass("to_single_unicast needs a unicast problem");
    struct Row {
        int want;
        Receiver r;
        int origin;
    };
    std::vector<Row> rows;
    for (std::size_t i = 0; i < p.receivers.size(); ++i) {
        const Receiver& r = p.receivers[i];
        const int label = p.origin.empty() ? static_cast<int>(i) + 1 : p.origin[i];
        for (int w : r.wants) rows.push_back({w, Receiver{{w}, r.knows}, label});
    }
    std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) { return a.want < b.want; });
    IndexCodingProblem out;
    out.n = p.n;
    for (Row& row : rows) {
        out.receivers.push_back(std::move(row.r));
        out.origin.push_back(row.origin);
    }
    validate(out);
    return out;
}

}  // namespace icx
