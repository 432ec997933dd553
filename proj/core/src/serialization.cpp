//
// serialization.cpp
//
#include "gwcp1/serialization.hpp"

#include <cstdint>
#include <iomanip>
#include <sstream>

namespace gwcp1 {

nlohmann::json to_json(const Truncation& t) {
    nlohmann::json caps;
    caps["eps"] = t.eps_cap;
    nlohmann::json vars = nlohmann::json::object();
    for (const auto& [name, cap] : t.var_caps) vars[name] = cap;
    caps["vars"] = vars;
    if (t.total_cap) caps["total"] = *t.total_cap;
    return caps;
}

Truncation truncation_from_json(const nlohmann::json& j) {
    Truncation t;
    t.eps_cap = j.at("eps").get<int>();
    for (const auto& [name, cap] : j.at("vars").items()) t.var_caps[name] = cap.get<int>();
    if (j.contains("total")) t.total_cap = j.at("total").get<int>();
    return t;
}

nlohmann::json to_json(const MultiSeries& s) {
    nlohmann::json j;
    j["variables"] = s.variables();
    j["caps"] = to_json(s.truncation());
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : s.terms()) {
        nlohmann::json term;
        term["exp"] = e;
        term["num"] = c.numerator();
        term["den"] = c.denominator();
        terms.push_back(term);
    }
    j["terms"] = terms;
    return j;
}

MultiSeries multiseries_from_json(const nlohmann::json& j) {
    std::vector<std::string> vars = j.at("variables").get<std::vector<std::string>>();
    Truncation t = truncation_from_json(j.at("caps"));
    MultiSeries s(vars, t);
    for (const auto& term : j.at("terms")) {
        std::vector<int> e = term.at("exp").get<std::vector<int>>();
        if (e.size() != vars.size()) throw Error("series json: exponent arity mismatch");
        Rational c = Rational::from_strings(term.at("num").get<std::string>(),
                                            term.at("den").get<std::string>());
        s.add_term(e, c);
    }
    return s;
}

std::string canonical_dump(const nlohmann::json& j) {
    return j.dump();
}

std::string fnv1a_hex(const std::string& data) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : data) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

} // namespace gwcp1
