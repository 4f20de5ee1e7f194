// Command-line front end: Monte Carlo FER estimation, decoding-region tables,
// and analytic bound curves, emitted as CSV or JSON.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "rsasd/bounds.hpp"
#include "rsasd/regions.hpp"
#include "rsasd/sim.hpp"

using nlohmann::json;
using namespace rsasd;

namespace {

struct CodeArg {
    int N = 255, K = 239, m = 8;
};

CodeArg parse_code(const std::string& s) {
    CodeArg c;
    if (std::sscanf(s.c_str(), "%d,%d,%d", &c.N, &c.K, &c.m) != 3)
        throw CLI::ValidationError("--code", "expected N,K,m (e.g. 255,239,8)");
    return c;
}

// "a:step:b" inclusive sweep or comma-separated values
std::vector<double> parse_grid(const std::string& s) {
    std::vector<double> out;
    if (s.find(':') != std::string::npos) {
        double a, step, b;
        if (std::sscanf(s.c_str(), "%lf:%lf:%lf", &a, &step, &b) != 3 || step <= 0)
            throw CLI::ValidationError("grid", "expected start:step:stop with step > 0");
        for (double v = a; v <= b + 1e-12; v += step) out.push_back(v);
    } else {
        std::stringstream ss(s);
        std::string tok;
        while (std::getline(ss, tok, ',')) out.push_back(std::stod(tok));
    }
    if (out.empty()) throw CLI::ValidationError("grid", "empty grid");
    return out;
}

ChannelKind parse_channel(const std::string& s) {
    if (s == "bec") return ChannelKind::Bec;
    if (s == "bsc") return ChannelKind::Bsc;
    if (s == "qec") return ChannelKind::Qec;
    if (s == "awgn") return ChannelKind::Awgn;
    throw CLI::ValidationError("--channel", "one of bec|bsc|qec|awgn");
}

DecoderKind parse_decoder(const std::string& s) {
    if (s == "bm") return DecoderKind::Bm;
    if (s == "gmd") return DecoderKind::Gmd;
    if (s == "bgmd") return DecoderKind::Bgmd;
    if (s == "asd-pmas") return DecoderKind::AsdPmas;
    if (s == "pmas-predicate") return DecoderKind::PmasPredicate;
    throw CLI::ValidationError("--decoder", "one of bm|gmd|bgmd|asd-pmas|pmas-predicate");
}

std::string channel_name(ChannelKind k) {
    switch (k) {
    case ChannelKind::Bec: return "bec";
    case ChannelKind::Bsc: return "bsc";
    case ChannelKind::Qec: return "qec";
    case ChannelKind::Awgn: return "awgn";
    }
    return "?";
}

std::string decoder_name(DecoderKind k) {
    switch (k) {
    case DecoderKind::Bm: return "bm";
    case DecoderKind::Gmd: return "gmd";
    case DecoderKind::Bgmd: return "bgmd";
    case DecoderKind::AsdPmas: return "asd-pmas";
    case DecoderKind::PmasPredicate: return "pmas-predicate";
    }
    return "?";
}

json config_echo(const SimConfig& cfg) {
    json j;
    j["code"] = {{"N", cfg.N}, {"K", cfg.K}, {"m", cfg.m}};
    j["channel"] = channel_name(cfg.channel);
    j["grid"] = cfg.grid;
    j["qec_u"] = cfg.qec_u;
    j["decoder"] = decoder_name(cfg.decoder);
    j["M"] = cfg.M;
    j["budget"] = cfg.budget;
    j["trials"] = cfg.trials;
    j["stop_at"] = cfg.stop_at;
    j["seed"] = cfg.seed;
    j["serial"] = cfg.serial;
    j["block"] = cfg.block;
    return j;
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open output file: " + path);
    f << text;
}

bool json_requested(const std::string& path, bool json_flag) {
    return json_flag || (path.size() > 5 && path.substr(path.size() - 5) == ".json");
}

void apply_config_file(const std::string& path, SimConfig& cfg, std::string& channel,
                       std::string& decoder) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open config file: " + path);
    json j = json::parse(f);
    if (j.contains("code")) {
        cfg.N = j["code"].value("N", cfg.N);
        cfg.K = j["code"].value("K", cfg.K);
        cfg.m = j["code"].value("m", cfg.m);
        if (j["code"].contains("prim_poly")) cfg.prim_poly = j["code"]["prim_poly"].get<uint32_t>();
    }
    if (j.contains("channel")) channel = j["channel"].get<std::string>();
    if (j.contains("grid")) cfg.grid = j["grid"].get<std::vector<double>>();
    cfg.qec_u = j.value("qec_u", cfg.qec_u);
    if (j.contains("decoder")) decoder = j["decoder"].get<std::string>();
    cfg.M = j.value("M", cfg.M);
    cfg.budget = j.value("budget", cfg.budget);
    cfg.trials = j.value("trials", cfg.trials);
    cfg.stop_at = j.value("stop_at", cfg.stop_at);
    cfg.seed = j.value("seed", cfg.seed);
    cfg.serial = j.value("serial", cfg.serial);
    cfg.block = j.value("block", cfg.block);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Reed-Solomon soft-decision decoding toolkit"};
    app.require_subcommand(1);

    // shared options
    std::string code_str = "255,239,8", out_path, config_path;
    bool as_json = false;

    // ---- simulate ----
    auto* sim = app.add_subcommand("simulate", "Monte Carlo frame-error-rate estimation");
    std::string channel_str = "awgn", decoder_str = "bm", grid_str;
    SimConfig cfg;
    sim->add_option("--config", config_path, "JSON config file");
    sim->add_option("--code", code_str, "N,K,m");
    sim->add_option("--channel", channel_str, "bec|bsc|qec|awgn");
    sim->add_option("--grid", grid_str, "channel parameter grid (a:step:b or v1,v2,...)");
    sim->add_option("--snr", grid_str, "alias for --grid (Eb/N0 in dB)");
    sim->add_option("--eps", grid_str, "alias for --grid (erasure/crossover probability)");
    sim->add_option("--decoder", decoder_str, "bm|gmd|bgmd|asd-pmas|pmas-predicate");
    sim->add_option("--mult", cfg.M, "multiplicity parameter M");
    sim->add_option("--budget", cfg.budget, "interpolation constraint budget");
    sim->add_option("--trials", cfg.trials, "max frames per grid point");
    sim->add_option("--stop-at", cfg.stop_at, "early stop after this many frame errors (0 = never)");
    sim->add_option("--seed", cfg.seed, "RNG seed");
    sim->add_option("--qec-u", cfg.qec_u, "symbol width for the 2^u-ary erasure channel");
    sim->add_flag("--serial", cfg.serial, "force the serial reference path");
    sim->add_option("--block", cfg.block, "frames per parallel block");
    sim->add_option("--out", out_path, "output file (default stdout)");
    sim->add_flag("--json", as_json, "emit JSON instead of CSV");

    // ---- region ----
    auto* reg = app.add_subcommand("region", "worst-case decoding-region table");
    int reg_M = 2;
    reg->add_option("--code", code_str, "N,K,m");
    reg->add_option("--mult", reg_M, "multiplicity parameter M (0 = asymptotic)");
    reg->add_option("--out", out_path, "output file (default stdout)");
    reg->add_flag("--json", as_json, "emit JSON instead of CSV");

    // ---- bound ----
    auto* bnd = app.add_subcommand("bound", "analytic FER bound curves");
    std::string bnd_channel = "awgn", bnd_grid_str = "4:0.5:7";
    int bnd_M = 2;
    bool literal = false;
    bnd->add_option("--code", code_str, "N,K,m");
    bnd->add_option("--channel", bnd_channel, "bec|awgn");
    bnd->add_option("--grid", bnd_grid_str, "epsilon grid (bec) or Eb/N0 dB grid (awgn)");
    bnd->add_option("--snr", bnd_grid_str, "alias for --grid");
    bnd->add_option("--eps", bnd_grid_str, "alias for --grid");
    bnd->add_option("--mult", bnd_M, "multiplicity parameter M");
    bnd->add_flag("--literal-form", literal, "drop the binomial factors from the AWGN bound");
    bnd->add_option("--out", out_path, "output file (default stdout)");
    bnd->add_flag("--json", as_json, "emit JSON instead of CSV");

    CLI11_PARSE(app, argc, argv);

    try {
        if (sim->parsed()) {
            if (!config_path.empty()) apply_config_file(config_path, cfg, channel_str, decoder_str);
            CodeArg c = parse_code(code_str);
            cfg.N = c.N; cfg.K = c.K; cfg.m = c.m;
            if (!grid_str.empty()) cfg.grid = parse_grid(grid_str);
            cfg.channel = parse_channel(channel_str);
            cfg.decoder = parse_decoder(decoder_str);
            SimResult res = run_simulation(cfg);
            if (json_requested(out_path, as_json)) {
                json j;
                j["version"] = RSASD_VERSION;
                j["config"] = config_echo(cfg);
                j["points"] = json::array();
                for (const SimPoint& p : res.points)
                    j["points"].push_back({{"param", p.param},
                                           {"frames", p.frames},
                                           {"frame_errors", p.frame_errors},
                                           {"fer", p.fer},
                                           {"ci_low", p.ci_low},
                                           {"ci_high", p.ci_high}});
                write_output(out_path, j.dump(2) + "\n");
            } else {
                write_output(out_path, sim_csv(res));
            }
        } else if (reg->parsed()) {
            CodeArg c = parse_code(code_str);
            DecodingRegion r = reg_M == 0 ? region_table_infinite(c.N, c.K, c.m)
                                          : region_table_finite(c.N, c.K, c.m, reg_M);
            if (json_requested(out_path, as_json)) {
                json j;
                j["version"] = RSASD_VERSION;
                j["strategy"] = r.strategy;
                j["M"] = r.M;
                j["code"] = {{"N", r.N}, {"K", r.K}, {"m", r.m}};
                j["e_max"] = r.e_max;
                write_output(out_path, j.dump(2) + "\n");
            } else {
                write_output(out_path, region_csv(r));
            }
        } else if (bnd->parsed()) {
            CodeArg c = parse_code(code_str);
            std::vector<double> grid = parse_grid(bnd_grid_str);
            std::string out = "param,fer_bound,kind,strategy,M\n";
            json jpoints = json::array();
            if (bnd_channel == "bec") {
                for (double eps : grid) {
                    BecFer b = bec_fer(c.N, c.K, c.m, eps);
                    const std::pair<const char*, double> rows[] = {
                        {"exact-predicate", b.exact}, {"upper", b.upper}, {"lower", b.lower}};
                    for (auto& [kind, v] : rows) {
                        char buf[128];
                        std::snprintf(buf, sizeof buf, "%.10g,%.10g,%s,pmas,0\n", eps, v, kind);
                        out += buf;
                        jpoints.push_back({{"param", eps}, {"fer_bound", v}, {"kind", kind},
                                           {"strategy", "pmas"}, {"M", 0}});
                    }
                }
            } else if (bnd_channel == "awgn") {
                CodeSpec spec = make_narrow_sense(c.N, c.K, c.m);
                for (double snr : grid) {
                    double n0 = snr_db_to_n0(snr, spec.rate());
                    double ub = bgmd_awgn_upper(spec, bnd_M, n0, literal);
                    double bm = bm_awgn_fer(spec, n0);
                    char buf[160];
                    std::snprintf(buf, sizeof buf, "%.10g,%.10g,upper,bgmd,%d\n%.10g,%.10g,exact-predicate,bm,0\n",
                                  snr, ub, bnd_M, snr, bm);
                    out += buf;
                    jpoints.push_back({{"param", snr}, {"fer_bound", ub}, {"kind", "upper"},
                                       {"strategy", "bgmd"}, {"M", bnd_M}});
                    jpoints.push_back({{"param", snr}, {"fer_bound", bm}, {"kind", "exact-predicate"},
                                       {"strategy", "bm"}, {"M", 0}});
                }
            } else {
                throw std::runtime_error("bound: --channel must be bec or awgn");
            }
            if (json_requested(out_path, as_json)) {
                json j;
                j["version"] = RSASD_VERSION;
                j["code"] = {{"N", c.N}, {"K", c.K}, {"m", c.m}};
                j["points"] = jpoints;
                write_output(out_path, j.dump(2) + "\n");
            } else {
                write_output(out_path, out);
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
