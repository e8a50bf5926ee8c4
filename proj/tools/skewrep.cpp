// skewrep: command-line front end for the skew module library.
//
//   skewrep <command> [--m M --n N --r R --lambda a,b,... --mu c,...] [options]
//
// Commands: enumerate, matrices, currents, qchar, verify, gl11, quantum.
// Exit status: 0 success, 1 a verification failed, 2 bad input.

#include "skewrep/io/json.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <unistd.h>

namespace fs = std::filesystem;
using namespace skewrep;
using io::json;

namespace {

constexpr const char* kVersion = "1.0.0";
constexpr int kCacheFormat = 1;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Config {
    std::string command;
    int m = 1, n = 1, r = 0;
    std::string lambda, mu, spec;
    std::uint64_t seed = 0x5eed2024ULL;
    int order = 6, samples = 20, window = 4;
    std::string format = "json", output, cache_dir;
    bool timing = false;
};

Weight parse_list(const std::string& s, const char* what) {
    Weight out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError(std::string("--") + what + ": not an integer: '" + item + "'");
        }
    }
    return out;
}

SkewShape shape_of(const Config& c) { return SkewShape::make(c.m, c.n, c.r, parse_list(c.lambda, "lambda"), parse_list(c.mu, "mu")); }

bool uses_shape(const std::string& cmd) { return cmd != "gl11"; }

json config_echo(const Config& c) {
    json out = {{"command", c.command}};
    if (uses_shape(c.command)) {
        out["shape"] = io::to_json(shape_of(c));
    } else {
        out["spec"] = json::parse(c.spec);
    }
    out["seed"] = c.seed;
    out["order"] = c.order;
    out["samples"] = c.samples;
    out["window"] = c.window;
    out["format"] = c.format;
    return out;
}

// --- cache ---------------------------------------------------------------

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    return h;
}

class Cache {
public:
    explicit Cache(std::string dir) : dir_(std::move(dir)) {}

    bool enabled() const { return !dir_.empty(); }

    std::optional<json> load(const std::string& key) const {
        if (!enabled()) return std::nullopt;
        std::ifstream in(path(key));
        if (!in) return std::nullopt;
        try {
            json j = json::parse(in);
            if (j.value("format", -1) != kCacheFormat || j.value("key", std::string()) != key) return std::nullopt;
            return j.at("payload");
        } catch (const std::exception&) {
            return std::nullopt;
        }
    }

    void store(const std::string& key, const json& payload) const {
        if (!enabled()) return;
        std::error_code ec;
        fs::create_directories(dir_, ec);
        const fs::path target = path(key);
        const fs::path tmp = target.string() + ".tmp." + std::to_string(::getpid());
        {
            std::ofstream out(tmp);
            if (!out) return;
            out << json{{"format", kCacheFormat}, {"key", key}, {"payload", payload}}.dump();
            if (!out) {
                fs::remove(tmp, ec);
                return;
            }
        }
        fs::rename(tmp, target, ec);
        if (ec) fs::remove(tmp, ec);
    }

private:
    fs::path path(const std::string& key) const {
        char hex[17];
        std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(fnv1a(key)));
        return fs::path(dir_) / (std::string(hex) + ".json");
    }
    std::string dir_;
};

std::string cache_key(const std::string& kind, const SkewShape& s) { return kind + " " + io::to_json(s).dump(); }

// --- commands ------------------------------------------------------------

struct Outcome {
    json payload;
    bool pass = true;
};

json check_list(const RelationReport& r, bool& pass) {
    pass = pass && r.all_pass();
    return io::to_json(r);
}

Outcome cmd_enumerate(const Config& c) {
    auto s = shape_of(c);
    auto basis = enumerate_tableaux(s);
    json tabs = json::array();
    for (const auto& t : basis) tabs.push_back({{"rows", t.rows()}, {"filling", tableau_to_ssyt(s, t).filling}});
    return {{{"count", basis.size()},
             {"ssyt_outer", s.outer()},
             {"ssyt_inner", s.inner()},
             {"ssyt_count", count_ssyt(s.outer(), s.inner(), s.m(), s.n())},
             {"tableaux", tabs}},
            true};
}

Outcome cmd_matrices(const Config& c) {
    auto g = build_generator_matrices(shape_of(c));
    Outcome o{io::to_json(g), true};
    o.payload["relations"] = check_list(check_superalgebra_relations(g), o.pass);
    return o;
}

Outcome cmd_currents(const Config& c, const Cache& cache) {
    auto s = shape_of(c);
    const auto key = cache_key("currents", s);
    if (auto hit = cache.load(key)) return {*hit, true};
    json rep = io::to_json(build_current_rep(s));
    cache.store(key, rep);
    return {rep, true};
}

Outcome cmd_qchar(const Config& c) {
    auto rep = build_current_rep(shape_of(c));
    auto weights = l_weights(rep);
    return {{{"dim", rep.dim()}, {"thin", is_thin(weights)}, {"qchar", io::to_json(q_character(weights))}}, true};
}

json verdict(bool ok) { return ok ? "pass" : "fail"; }

Outcome cmd_verify(const Config& c) {
    auto s = shape_of(c);
    Outcome o;
    auto g = build_generator_matrices(s);
    auto rep = build_current_rep(s);
    json& p = o.payload;
    p["dim"] = rep.dim();
    p["superalgebra_relations"] = check_list(check_superalgebra_relations(g), o.pass);
    p["drinfeld_relations"] = check_list(verify_drinfeld_relations(rep, {c.samples, c.order, c.seed}), o.pass);

    auto central = verify_central_series(rep, c.order);
    p["central_series"] = {{"result", verdict(central.scalar)}, {"value", io::to_json(central.value)}};
    if (!central.scalar) p["central_series"]["detail"] = central.detail;

    auto irr = is_irreducible(rep);
    p["thin"] = verdict(irr.thin);
    p["irreducible"] = {{"result", verdict(irr.irreducible)}, {"connected", irr.connected}, {"certificate_edges", irr.certificate.size()}};

    auto nv = nonvanishing_violations(s);
    p["nonvanishing"] = {{"result", verdict(nv.empty())}, {"violations", nv}};
    auto poles = pole_violations(rep);
    p["poles"] = {{"result", verdict(poles.empty())}, {"violations", poles}};

    auto oracle = compare_with_oracle(rep);
    p["oracle"] = {{"result", verdict(oracle.match)}, {"mismatches", oracle.mismatches}};

    o.pass = o.pass && central.scalar && irr.irreducible && nv.empty() && poles.empty() && oracle.match;
    return o;
}

Outcome cmd_gl11(const Config& c) {
    Gl11ModuleSpec spec;
    try {
        spec = io::gl11_spec_from_json(json::parse(c.spec));
    } catch (const json::exception& e) {
        throw UsageError(std::string("--spec: ") + e.what());
    }
    validate(spec);
    Outcome o;
    json& p = o.payload;
    p["k"] = spec.k();
    p["phi"] = io::to_json(spec.phi());
    p["psi"] = io::to_json(spec.psi());
    try {
        auto rep = tensor_rep(spec);
        p["dim"] = rep.dim();
        auto v = analyze_tameness(spec);
        auto flipped = parity_flip_tameness(spec);
        p["thin"] = v.thin;
        p["tame"] = v.tame;
        p["flipped_tame"] = flipped.tame;
        p["witness"] = v.witness ? json(*v.witness) : json(nullptr);
        json comps = json::array();
        for (const auto& z : zero_mode_highest_weights(rep))
            comps.push_back({{"weight", json::array({io::to_json(z.a), io::to_json(z.b)})}, {"multiplicity", z.multiplicity}});
        p["restricted_highest_weights"] = comps;
        p["rtt"] = check_list(verify_rtt_relation(rep, c.seed), o.pass);
    } catch (const CriterionDisagreement& e) {
        p["disagreement"] = e.what();
        o.pass = false;
    }
    return o;
}

Outcome cmd_quantum(const Config& c, const Cache& cache) {
    auto s = shape_of(c);
    Outcome o;
    json& p = o.payload;
    auto qg = build_q_generator_matrices(s);
    auto rep = build_q_current_rep(s);
    const auto key = cache_key("quantum-currents", s);
    if (auto hit = cache.load(key)) {
        p["currents"] = *hit;
    } else {
        p["currents"] = io::to_json(rep);
        cache.store(key, p["currents"]);
    }
    p["uq_relations"] = check_list(check_q_relations(qg), o.pass);
    p["classical_limit"] = check_list(compare_classical_limit(qg, build_generator_matrices(s)), o.pass);
    auto rel = verify_q_relations(rep, {c.window, c.samples, c.seed});
    p["current_relations"] = check_list(rel.report, o.pass);
    p["effective_window"] = json(std::vector<int>(rel.effective_window.begin() + (rel.effective_window.empty() ? 0 : 1),
                                                  rel.effective_window.end()));

    auto law = mode_law_violations(rep, c.window);
    p["mode_law"] = {{"result", verdict(law.empty())}, {"violations", law}};
    auto irr = is_irreducible(rep);
    p["thin"] = verdict(irr.thin);
    p["irreducible"] = {{"result", verdict(irr.irreducible)}, {"connected", irr.connected}, {"certificate_edges", irr.certificate.size()}};
    auto nv = q_nonvanishing_violations(s);
    p["nonvanishing"] = {{"result", verdict(nv.empty())}, {"violations", nv}};
    auto central = verify_q_central_series(rep);
    p["central_series"] = {{"result", verdict(central.scalar)}, {"value", io::to_json(central.value)}};
    bool oracle_ok = true;
    if (s.m() == 1 && s.n() == 1 && s.r() == 0) {
        auto cmp = compare_with_q_oracle(rep, c.window);
        oracle_ok = cmp.match;
        p["oracle"] = {{"result", verdict(cmp.match)}, {"mismatches", cmp.mismatches}};
    }
    p["yang_baxter"] = check_list(verify_yang_baxter(build_q_r_matrix(s.m(), s.n()), Rational(2), 5, c.seed), o.pass);
    o.pass = o.pass && law.empty() && irr.irreducible && nv.empty() && central.scalar && oracle_ok;
    return o;
}

// --- output --------------------------------------------------------------

void render_table(const json& j, const std::string& indent, std::ostream& os) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        const auto& v = it.value();
        if (v.is_array() && !v.empty() && v.front().is_object() && v.front().contains("pass")) {
            os << indent << it.key() << ":\n";
            for (const auto& c : v) {
                os << indent << "  " << (c["pass"].get<bool>() ? "PASS  " : "FAIL  ") << c["name"].get<std::string>();
                if (c.contains("detail")) os << "  (" << c["detail"].get<std::string>() << ")";
                os << "\n";
            }
        } else if (v.is_object()) {
            os << indent << it.key() << ":\n";
            render_table(v, indent + "  ", os);
        } else if (v.is_string()) {
            os << indent << it.key() << ": " << v.get<std::string>() << "\n";
        } else {
            os << indent << it.key() << ": " << v.dump() << "\n";
        }
    }
}

int run(const Config& c) {
    const auto start = std::chrono::steady_clock::now();
    const char* env = std::getenv("SKEWREP_CACHE_DIR");
    Cache cache(!c.cache_dir.empty() ? c.cache_dir : (env ? env : ""));

    json echo;
    try {
        echo = config_echo(c);
    } catch (const json::exception& e) {
        throw UsageError(std::string("--spec: ") + e.what());
    }

    Outcome o;
    if (c.command == "enumerate") o = cmd_enumerate(c);
    else if (c.command == "matrices") o = cmd_matrices(c);
    else if (c.command == "currents") o = cmd_currents(c, cache);
    else if (c.command == "qchar") o = cmd_qchar(c);
    else if (c.command == "verify") o = cmd_verify(c);
    else if (c.command == "gl11") o = cmd_gl11(c);
    else if (c.command == "quantum") o = cmd_quantum(c, cache);
    else throw UsageError("unknown command " + c.command);

    json env_out = {{"artifact", "skewrep"}, {"version", kVersion}, {"config", echo}, {"status", verdict(o.pass)}};
    if (c.timing) {
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        env_out["timing"] = {{"seconds", secs}};
    }
    env_out["payload"] = o.payload;

    std::ostringstream text;
    if (c.format == "table") {
        render_table(env_out, "", text);
    } else {
        text << env_out.dump(2) << "\n";
    }
    if (c.output.empty() || c.output == "-") {
        std::cout << text.str();
    } else {
        std::ofstream out(c.output);
        if (!out) throw UsageError("cannot write " + c.output);
        out << text.str();
    }
    return o.pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Skew representations of super Yangians and quantum affine superalgebras"};
    app.require_subcommand(1, 1);
    Config c;
    app.add_flag_callback("--version", [] {
        std::cout << kVersion << "\n";
        std::exit(0);
    });

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--seed", c.seed, "Sampling seed");
        sub->add_option("--order", c.order, "Series truncation order")->check(CLI::Range(1, 64));
        sub->add_option("--samples", c.samples, "Sample count per relation")->check(CLI::Range(1, 100000));
        sub->add_option("--window", c.window, "Mode window for quantum currents")->check(CLI::Range(1, 64));
        sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "table"}));
        sub->add_option("--output", c.output, "Output path; stdout when omitted");
        sub->add_option("--cache-dir", c.cache_dir, "Cache directory; default $SKEWREP_CACHE_DIR");
        sub->add_flag("--timing", c.timing, "Add wall-clock timing to the envelope");
    };
    auto add_shape = [&](CLI::App* sub) {
        sub->add_option("--m", c.m, "Even rank m")->check(CLI::NonNegativeNumber);
        sub->add_option("--n", c.n, "Odd rank n")->check(CLI::NonNegativeNumber);
        sub->add_option("--r", c.r, "Skew depth r")->check(CLI::NonNegativeNumber);
        sub->add_option("--lambda", c.lambda, "Comma list of r+m+n integers")->required();
        sub->add_option("--mu", c.mu, "Comma list of r integers");
    };

    const std::vector<std::pair<std::string, std::string>> commands{
        {"enumerate", "Gelfand-Tsetlin basis and matching tableaux"},
        {"matrices", "Generator matrices of gl(m|n) in the GT basis"},
        {"currents", "Drinfeld currents of the Yangian module"},
        {"qchar", "l-weights and q-character"},
        {"verify", "Full Yangian verification suite"},
        {"gl11", "Thinness and tameness of a gl(1|1) tensor product"},
        {"quantum", "Quantum affine currents and their verification suite"},
    };
    for (const auto& [name, help] : commands) {
        auto* sub = app.add_subcommand(name, help);
        if (name == "gl11") {
            sub->add_option("--spec", c.spec, "JSON list of [a, b] pairs, e.g. '[[\"3\",\"0\"],[\"-1\",\"0\"]]'")->required();
        } else {
            add_shape(sub);
        }
        add_common(sub);
        sub->callback([&c, name = name] { c.command = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        return run(c);
    } catch (const UsageError& e) {
        std::cerr << "skewrep: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        // InvalidShape and Gl11SpecError land here with the violation report
        std::cerr << "skewrep: invalid input: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "skewrep: invalid input: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "skewrep: " << e.what() << "\n";
        return 1;
    }
}
