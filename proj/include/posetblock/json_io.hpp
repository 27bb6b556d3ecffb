#pragma once

// JSON and CSV reading/writing for instances, codes and tables.

#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "block_space.hpp"
#include "caps.hpp"
#include "code_analysis.hpp"
#include "distribution.hpp"
#include "errors.hpp"
#include "linear_code.hpp"
#include "poset.hpp"
#include "weight_model.hpp"

namespace posetblock {

using Json = nlohmann::json;

/// {"n": int, "relations": [[a, b], ...]} with 1-indexed a ⪯ b.
inline Poset poset_from_json(const Json& j, const Caps& caps = {}) {
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
        throw ConfigError("poset needs an integer \"n\"");
    const int n = j["n"].get<int>();
    std::vector<std::pair<int, int>> pairs;
    if (j.contains("relations")) {
        if (!j["relations"].is_array()) throw ConfigError("poset \"relations\" must be an array of pairs");
        for (const auto& r : j["relations"]) {
            if (!r.is_array() || r.size() != 2 || !r[0].is_number_integer() || !r[1].is_number_integer())
                throw ConfigError("relation " + r.dump() + " is not a pair of integers");
            pairs.emplace_back(r[0].get<int>(), r[1].get<int>());
        }
    }
    return build_poset(n, pairs, caps);
}

inline Json poset_to_json(const Poset& p) {
    Json rel = Json::array();
    for (auto [a, b] : p.relations()) rel.push_back({a, b});
    return {{"n", p.size()}, {"relations", rel}};
}

/// "lee", "hamming" or {"table": [w(0), ..., w(q-1)]}.
inline WeightModel weight_from_json(const Json& j, int q) {
    if (j.is_string()) {
        const auto name = j.get<std::string>();
        if (name == "lee") return lee_weight(q);
        if (name == "hamming") return hamming_weight(q);
        throw ConfigError("unknown weight \"" + name + "\" (expected lee, hamming or a table)");
    }
    if (j.is_object() && j.contains("table") && j["table"].is_array())
        return custom_weight(q, j["table"].get<std::vector<int>>());
    throw ConfigError("weight must be \"lee\", \"hamming\" or {\"table\": [...]}");
}

inline Json weight_to_json(const WeightModel& w) {
    if (w.name() == "lee" || w.name() == "hamming") return w.name();
    return {{"table", w.table()}};
}

inline Json code_to_json(const LinearCode& C) {
    return {{"q", C.q()}, {"generator", C.generator()}};
}

inline Method method_from_string(const std::string& m) {
    if (m == "auto") return Method::Auto;
    if (m == "general") return Method::General;
    if (m == "equal" || m == "equal-block") return Method::EqualBlock;
    if (m == "hierarchical") return Method::Hierarchical;
    if (m == "chain") return Method::Chain;
    if (m == "oracle") return Method::Oracle;
    throw ConfigError("unknown method \"" + m + "\"");
}

struct InstanceConfig {
    int q = 0;
    Poset poset;
    LabelMap pi;
    WeightModel weight;
    std::optional<Matrix> generator;
    std::optional<Mask> ideal;
    Caps caps;
    Method method = Method::Auto;
    std::string format = "json";
    std::uint64_t seed = 0;

    BlockSpace space() const { return BlockSpace(poset, pi, weight); }
    LinearCode code() const {
        if (!generator) throw ConfigError("config has no \"code\"");
        return LinearCode(q, pi.total_length(), *generator);
    }
};

/// Parses an instance. Library errors raised while building the pieces are
/// rethrown as ConfigError with the original message.
inline InstanceConfig config_from_json(const Json& j, Caps caps = Caps::from_env()) {
    try {
        if (!j.is_object()) throw ConfigError("config must be a JSON object");
        InstanceConfig c;
        if (!j.contains("q") || !j["q"].is_number_integer()) throw ConfigError("config needs an integer \"q\"");
        c.q = j["q"].get<int>();
        if (c.q < 2) throw ConfigError("q must be at least 2");
        if (j.contains("caps")) {
            const auto& cj = j["caps"];
            if (cj.contains("elements")) caps.max_elements = cj["elements"].get<int>();
            if (cj.contains("ideals")) caps.max_ideals = cj["ideals"].get<std::size_t>();
            if (cj.contains("arrangements")) caps.max_arrangements = cj["arrangements"].get<std::size_t>();
            if (cj.contains("space")) caps.max_space = cj["space"].get<std::uint64_t>();
            if (cj.contains("codewords")) caps.max_codewords = cj["codewords"].get<std::uint64_t>();
            if (cj.contains("threads")) caps.threads = cj["threads"].get<unsigned>();
        }
        c.caps = caps;
        if (!j.contains("poset")) throw ConfigError("config needs a \"poset\"");
        c.poset = poset_from_json(j["poset"], caps);
        if (!j.contains("pi") || !j["pi"].is_array()) throw ConfigError("config needs a \"pi\" array");
        c.pi = LabelMap(j["pi"].get<std::vector<int>>());
        if (c.pi.blocks() != c.poset.size())
            throw ConfigError("\"pi\" has " + std::to_string(c.pi.blocks()) + " blocks but the poset has " +
                              std::to_string(c.poset.size()) + " elements");
        c.weight = weight_from_json(j.value("weight", Json("lee")), c.q);
        if (j.contains("code")) {
            const auto& cj = j["code"];
            if (cj.contains("q") && cj["q"].get<int>() != c.q)
                throw ConfigError("code q differs from instance q");
            if (!cj.contains("generator") || !cj["generator"].is_array())
                throw ConfigError("code needs a \"generator\" matrix");
            c.generator = cj["generator"].get<Matrix>();
            for (const auto& row : *c.generator)
                if (static_cast<int>(row.size()) != c.pi.total_length())
                    throw ConfigError("generator row width " + std::to_string(row.size()) +
                                      " does not match N = " + std::to_string(c.pi.total_length()));
            if (!is_prime(c.q)) throw ConfigError("a code needs prime q, got " + std::to_string(c.q));
        }
        if (j.contains("ideal")) {
            const Mask m = mask_from_labels(j["ideal"].get<std::vector<int>>(), c.poset.size());
            if (!is_ideal(c.poset, m)) throw ConfigError("\"ideal\" " + j["ideal"].dump() + " is not a down-set");
            c.ideal = m;
        }
        c.method = method_from_string(j.value("method", std::string("auto")));
        c.format = j.value("format", std::string("json"));
        if (c.format != "json" && c.format != "csv") throw ConfigError("format must be json or csv");
        c.seed = j.value("seed", std::uint64_t{0});
        return c;
    } catch (const ConfigError&) {
        throw;
    } catch (const ExplosionError&) {
        throw;
    } catch (const Error& e) {
        throw ConfigError(e.what());
    } catch (const Json::exception& e) {
        throw ConfigError(std::string("malformed config: ") + e.what());
    }
}

inline Json table_to_json(const DistributionTable& t) {
    Json counts = Json::array();
    for (std::size_t r = 0; r < t.counts.size(); ++r)
        counts.push_back({{"r", r}, {"count", to_decimal(t.counts[r])}});
    return {{"q", t.q}, {"N", t.N}, {"method", t.method}, {"poset_class", t.poset_class}, {"counts", counts}};
}

inline DistributionTable table_from_json(const Json& j) {
    DistributionTable t;
    t.q = j.at("q").get<int>();
    t.N = j.at("N").get<int>();
    t.method = j.at("method").get<std::string>();
    t.poset_class = j.value("poset_class", std::string());
    for (const auto& e : j.at("counts")) {
        const auto r = e.at("r").get<std::size_t>();
        if (t.counts.size() <= r) t.counts.resize(r + 1);
        t.counts[r] = from_decimal(e.at("count").get<std::string>());
    }
    return t;
}

inline std::string table_to_csv(const DistributionTable& t) {
    std::ostringstream out;
    out << "r,count\n";
    for (std::size_t r = 0; r < t.counts.size(); ++r) out << r << ',' << to_decimal(t.counts[r]) << '\n';
    return out.str();
}

inline DistributionTable table_from_csv(const std::string& text, int q = 0, int N = 0) {
    DistributionTable t;
    t.q = q;
    t.N = N;
    std::istringstream in(text);
    std::string line;
    std::getline(in, line);
    if (line != "r,count") throw ConfigError("csv table must start with the header r,count");
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos) throw ConfigError("bad csv row: " + line);
        const auto r = static_cast<std::size_t>(std::stoull(line.substr(0, comma)));
        if (t.counts.size() <= r) t.counts.resize(r + 1);
        t.counts[r] = from_decimal(line.substr(comma + 1));
    }
    return t;
}

inline Json report_to_json(const CodeReport& r) {
    Json j;
    j["d_pwpi"] = r.d_pwpi ? Json(*r.d_pwpi) : Json(nullptr);
    j["d_ppi"] = r.d_ppi ? Json(*r.d_ppi) : Json(nullptr);
    j["r_wtilde"] = r.r_wtilde;
    j["singleton_lhs"] = r.singleton_lhs;
    j["singleton_rhs"] = r.singleton_rhs;
    j["ppi_singleton_lhs"] = r.ppi_lhs;
    j["is_mds_pwpi"] = r.is_mds_pwpi;
    j["is_mds_ppi"] = r.is_mds_ppi;
    return j;
}

}  // namespace posetblock
