// posetblock: weight distributions and code checks for (P,w,π) block spaces.
//
// Exit codes: 0 success, 1 oracle mismatch, 2 configuration or precondition
// error, 3 enumeration cap exceeded, 4 internal error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "posetblock/posetblock.hpp"

using namespace posetblock;

namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kConfig = 2;
constexpr int kExplosion = 3;
constexpr int kInternal = 4;

struct Options {
    std::string config_path;
    std::string format;
    std::string method;
    std::optional<int> radius;
    std::optional<unsigned> threads;
    std::optional<std::size_t> cap_ideals;
    std::optional<std::uint64_t> cap_space;
    std::string corrupt_method;
};

InstanceConfig load(const Options& o) {
    std::ifstream in(o.config_path);
    if (!in) throw ConfigError("cannot open config file " + o.config_path);
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::exception& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    InstanceConfig c = config_from_json(j);
    if (o.threads) c.caps.threads = *o.threads;
    if (o.cap_ideals) c.caps.max_ideals = *o.cap_ideals;
    if (o.cap_space) c.caps.max_space = *o.cap_space;
    if (!o.format.empty()) {
        if (o.format != "json" && o.format != "csv") throw ConfigError("--format must be json or csv");
        c.format = o.format;
    }
    if (!o.method.empty()) c.method = method_from_string(o.method);
    return c;
}

DistributionTable table_for(const InstanceConfig& c, Method m) {
    const BlockSpace s = c.space();
    if (m == Method::Oracle) return oracle_distribution(s, c.caps).table;
    return compute_distribution(s, m, c.caps);
}

int cmd_distribution(const Options& o) {
    const InstanceConfig c = load(o);
    const DistributionTable t = table_for(c, c.method);
    if (c.format == "csv")
        std::cout << table_to_csv(t);
    else
        std::cout << table_to_json(t).dump(2) << '\n';
    return kOk;
}

int cmd_ball(const Options& o) {
    if (!o.radius) throw ConfigError("ball needs --radius");
    const InstanceConfig c = load(o);
    const DistributionTable t = table_for(c, c.method);
    const BigInt v = ball_volume(t, *o.radius);
    if (c.format == "csv")
        std::cout << "r,volume\n" << *o.radius << ',' << to_decimal(v) << '\n';
    else
        std::cout << Json{{"r", *o.radius}, {"volume", to_decimal(v)}, {"method", t.method}}.dump(2) << '\n';
    return kOk;
}

int cmd_check_code(const Options& o) {
    const InstanceConfig c = load(o);
    const BlockSpace s = c.space();
    const LinearCode C = c.code();
    if (C.dimension() == 0) throw ConfigError("code has dimension 0; its distance is undefined");
    const CodeReport rep = singleton_report(C, s, c.caps);
    Json out = report_to_json(rep);
    out["N"] = s.N();
    out["k"] = C.dimension();
    const int len = s.labels.uniform_length();
    if (len != 0 && C.dimension() % len == 0) {
        const int t = s.n() - C.dimension() / len;
        Json verdicts = Json::array();
        for (const Ideal& I : enumerate_ideals(s.poset, c.caps).of_size(t))
            verdicts.push_back({{"ideal", labels_from_mask(I.members)}, {"i_perfect", is_I_perfect(C, s, I.members)}});
        out["i_perfect"] = verdicts;
    }
    if (o.radius) {
        out["radius"] = *o.radius;
        out["r_error_correcting"] = is_r_error_correcting(C, s, *o.radius, c.caps);
        out["r_perfect"] = is_r_perfect(C, s, *o.radius, c.caps);
    }
    std::cout << out.dump(2) << '\n';
    return kOk;
}

int cmd_oracle_compare(const Options& o) {
    const InstanceConfig c = load(o);
    const BlockSpace s = c.space();
    const DistributionTable truth = oracle_distribution(s, c.caps).table;

    std::vector<DistributionTable> candidates;
    candidates.push_back(distribution_general(s, c.caps));
    for (Method m : applicable_methods(s)) candidates.push_back(compute_distribution(s, m, c.caps));
    for (Specialization sp : applicable_specializations(s)) candidates.push_back(distribution_specialized(sp, s, c.caps));

    bool all_match = true;
    Json rows = Json::array();
    for (auto& t : candidates) {
        if (t.method == o.corrupt_method && t.counts.size() > 1) t.counts[1] += 1;
        bool match = t.counts.size() == truth.counts.size();
        for (std::size_t r = 0; match && r < t.counts.size(); ++r) {
            if (t.counts[r] != truth.counts[r]) {
                match = false;
                std::cerr << "mismatch: " << t.method << " differs from oracle at r=" << r << ": expected "
                          << to_decimal(truth.counts[r]) << ", got " << to_decimal(t.counts[r]) << '\n';
            }
        }
        if (t.counts.size() != truth.counts.size())
            std::cerr << "mismatch: " << t.method << " has " << t.counts.size() << " entries, oracle has "
                      << truth.counts.size() << '\n';
        all_match = all_match && match;
        rows.push_back({{"method", t.method}, {"match", match}});
    }
    std::cout << Json{{"total", to_decimal(truth.total())}, {"methods", rows}, {"agree", all_match}}.dump(2) << '\n';
    return all_match ? kOk : kMismatch;
}

int cmd_construct(const Options& o) {
    const InstanceConfig c = load(o);
    if (!c.ideal) throw ConfigError("construct needs an \"ideal\" in the config");
    if (!is_prime(c.q)) throw ConfigError("construct needs prime q");
    const LinearCode C = construct_I_perfect(c.pi, *c.ideal, c.q);
    Json out = code_to_json(C);
    out["dimension"] = C.dimension();
    out["ideal"] = labels_from_mask(*c.ideal);
    std::cout << out.dump(2) << '\n';
    return kOk;
}

int cmd_classify(const Options& o) {
    const InstanceConfig c = load(o);
    const Classification cls = classify(c.poset);
    const IdealFamily fam = enumerate_ideals(c.poset, c.caps);
    Json levels = Json::array();
    for (Mask lv : cls.levels.levels) levels.push_back(labels_from_mask(lv));
    Json families = Json::array();
    for (const auto& [key, ideals] : fam.by_card_and_max)
        families.push_back({{"size", key.first}, {"max", key.second}, {"count", ideals.size()}});
    std::cout << Json{{"n", c.poset.size()},
                      {"class", poset_class_name(cls)},
                      {"height", cls.levels.height()},
                      {"levels", levels},
                      {"ideal_count", fam.count()},
                      {"families", families}}
                     .dump(2)
              << '\n';
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Weight distributions and code checks for poset block spaces"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--config", o.config_path, "instance JSON file")->required();
    app.add_option("--format", o.format, "json or csv");
    app.add_option("--method", o.method, "auto|general|equal|hierarchical|chain|oracle");
    app.add_option("--radius", o.radius, "ball or perfectness radius");
    app.add_option("--threads", o.threads, "worker threads (0 = auto)");
    app.add_option("--cap-ideals", o.cap_ideals, "maximum number of ideals");
    app.add_option("--cap-space", o.cap_space, "maximum q^N for exhaustive sweeps");
    app.add_option("--corrupt-method", o.corrupt_method)->group("");

    int (*handler)(const Options&) = nullptr;
    auto sub = [&](const char* name, const char* help, int (*fn)(const Options&)) {
        app.add_subcommand(name, help)->callback([&handler, fn] { handler = fn; });
    };
    sub("distribution", "print the weight distribution table", cmd_distribution);
    sub("ball", "print the ball volume at --radius", cmd_ball);
    sub("check-code", "report distances, Singleton bound and perfectness of the config's code", cmd_check_code);
    sub("oracle-compare", "compare every applicable method with exhaustive enumeration", cmd_oracle_compare);
    sub("construct", "print a generator of the I-perfect code for the config's ideal", cmd_construct);
    sub("classify", "print the poset's class, levels and ideal families", cmd_classify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kConfig;
    }

    try {
        return handler(o);
    } catch (const ExplosionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExplosion;
    } catch (const InternalConsistencyError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kInternal;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kConfig;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kInternal;
    }
}
