// Command line front end: runs verification suites and prints the constants
// table, as JSON or CSV.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "holderlie/suites.hpp"

using json = nlohmann::ordered_json;
using namespace holderlie;

namespace {

Vec to_vec(const json& j) {
    Vec v(static_cast<int>(j.size()));
    for (int i = 0; i < v.size(); ++i) v[i] = j[i].get<double>();
    return v;
}

Domain parse_domain(const json& j) {
    const std::string type = j.value("type", "ball");
    if (type == "ball")
        return Domain::ball(to_vec(j.at("center")), j.at("radius").get<double>());
    if (type == "box") return Domain::box(to_vec(j.at("lower")), to_vec(j.at("upper")));
    throw ConfigInvalid("unknown domain type: " + type);
}

SamplePlan parse_plan(const json& j) {
    const std::string kind = j.value("kind", "grid");
    SamplePlan p;
    if (kind == "grid") {
        p = SamplePlan::grid(j.value("points_per_axis", 8));
    } else if (kind == "quasirandom") {
        p = SamplePlan::quasirandom(j.value("count", 100),
                                    j.value("seed", std::uint64_t{0}));
    } else {
        throw ConfigInvalid("unknown plan kind: " + kind);
    }
    if (j.contains("min_pair_separation"))
        p.min_pair_separation = j["min_pair_separation"].get<double>();
    if (j.contains("max_pairs")) p.max_pairs = j["max_pairs"].get<int>();
    return p;
}

SuiteConfig parse_config(const json& j) {
    SuiteConfig cfg;
    if (j.contains("domain")) cfg.domain = parse_domain(j["domain"]);
    if (j.contains("plan")) cfg.plan = parse_plan(j["plan"]);
    if (j.contains("corpus")) {
        const json& c = j["corpus"];
        cfg.corpus.count = c.value("count", cfg.corpus.count);
        cfg.corpus.degree = c.value("degree", cfg.corpus.degree);
        cfg.corpus.in_dim = c.value("in_dim", cfg.corpus.in_dim);
        cfg.corpus.out_dim = c.value("out_dim", cfg.corpus.out_dim);
        cfg.corpus.seed = c.value("seed", cfg.corpus.seed);
    }
    if (j.contains("indices")) {
        cfg.indices.clear();
        for (const auto& e : j["indices"])
            cfg.indices.push_back({e.at("k").get<int>(), e.at("s").get<double>()});
    }
    if (j.contains("suites"))
        cfg.suites = j["suites"].get<std::vector<std::string>>();
    cfg.tol = j.value("tol", cfg.tol);
    cfg.kmax = j.value("kmax", cfg.kmax);
    return cfg;
}

json constants_json(const ConstantsTable& t) {
    json out;
    out["eps0"] = t.eps0;
    out["rows"] = json::array();
    for (const auto& r : t.rows) {
        json row;
        row["k"] = r.k;
        row["nodes"] = r.nodes;
        row["lambda_abs_sums"] = r.lambda_abs_sums;
        if (r.l24) {
            row["lemma_constants"] = {{"eps0", r.l24->eps0}, {"c1", r.l24->c1},
                                      {"c2", r.l24->c2},     {"c3", r.l24->c3},
                                      {"c4", r.l24->c4}};
        }
        row["Dk"] = r.dk;
        row["Ck"] = r.ck;
        out["rows"].push_back(std::move(row));
    }
    return out;
}

json report_json(const Report& rep, const json& config_echo) {
    json out;
    out["schema_version"] = 1;
    out["config"] = config_echo;
    out["records"] = json::array();
    for (const auto& r : rep.records) {
        out["records"].push_back({{"id", r.id},
                                  {"anchor", r.anchor},
                                  {"lhs", r.lhs},
                                  {"rhs", r.rhs},
                                  {"margin", r.margin()},
                                  {"pass", r.pass}});
    }
    out["constants"] = constants_json(rep.constants);
    out["all_pass"] = rep.all_pass;
    return out;
}

void emit(const json& doc, const std::string& path) {
    if (path.empty()) {
        std::cout << doc.dump(2) << "\n";
        return;
    }
    std::ofstream os(path);
    if (!os) throw ConfigInvalid("cannot open output file: " + path);
    os << doc.dump(2) << "\n";
}

void emit_constants_csv(const ConstantsTable& t, const std::string& path) {
    std::ostringstream os;
    os << "k,Dk,Ck,c4,lambda_abs_sums\n";
    for (const auto& r : t.rows) {
        os << r.k << "," << r.dk << "," << r.ck << ",";
        if (r.l24) os << r.l24->c4;
        os << ",\"";
        for (std::size_t i = 0; i < r.lambda_abs_sums.size(); ++i)
            os << (i ? ";" : "") << r.lambda_abs_sums[i];
        os << "\"\n";
    }
    if (path.empty()) {
        std::cout << os.str();
    } else {
        std::ofstream f(path);
        if (!f) throw ConfigInvalid("cannot open output file: " + path);
        f << os.str();
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Holder-space norm and Lie group verification suites"};
    app.require_subcommand(1);

    std::string config_path, out_path, format = "json";
    std::vector<std::string> suites;
    std::uint64_t seed = 0;
    bool seed_set = false;
    int kmax = -1;
    double tol = -1.0;

    auto* run = app.add_subcommand("run", "run verification suites");
    run->add_option("--config", config_path, "JSON config file");
    run->add_option("--suite", suites, "suite name (repeatable); overrides config");
    run->add_option("--seed", seed, "corpus seed override")
        ->each([&](const std::string&) { seed_set = true; });
    run->add_option("--kmax", kmax, "constants table depth override");
    run->add_option("--tol", tol, "multiplicative tolerance override");
    run->add_option("--out", out_path, "write the JSON report here (default stdout)");

    auto* consts = app.add_subcommand("constants", "print the constants table");
    consts->add_option("--config", config_path, "JSON config file");
    consts->add_option("--kmax", kmax, "table depth");
    consts->add_option("--format", format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    consts->add_option("--out", out_path, "output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        json cfg_json = json::object();
        if (!config_path.empty()) {
            std::ifstream is(config_path);
            if (!is) throw ConfigInvalid("cannot read config file: " + config_path);
            try {
                is >> cfg_json;
            } catch (const json::exception& e) {
                throw ConfigInvalid(std::string("config is not valid JSON: ") + e.what());
            }
        }
        SuiteConfig cfg = parse_config(cfg_json);
        if (!suites.empty()) cfg.suites = suites;
        if (seed_set) cfg.corpus.seed = seed;
        if (kmax >= 0) cfg.kmax = kmax;
        if (tol >= 0.0) cfg.tol = tol;

        if (consts->parsed()) {
            const ConstantsTable t = constants_table(cfg.domain, cfg.kmax);
            if (format == "csv")
                emit_constants_csv(t, out_path);
            else
                emit(constants_json(t), out_path);
            return 0;
        }

        if (cfg.suites.empty())
            cfg.suites = {"taylor", "interp", "norms", "inclusions", "convexity",
                          "product", "bch", "group", "chain"};
        cfg_json["suites"] = cfg.suites;
        const Report rep = run_suite(cfg);
        emit(report_json(rep, cfg_json), out_path);
        for (const auto& r : rep.records)
            std::cerr << (r.pass ? "PASS" : "FAIL") << "  " << r.id << "\n";
        return rep.all_pass ? 0 : 1;
    } catch (const ConfigInvalid& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
