#include "relosc/run_config.hpp"

#include <charconv>
#include <stdexcept>

namespace relosc {

namespace {

double parse_double(const std::string& s) {
    double v = 0.0;
    const char* end = s.data() + s.size();
    const auto res = std::from_chars(s.data(), end, v);
    if (res.ec != std::errc{} || res.ptr != end)
        throw std::invalid_argument("malformed number: '" + s + "'");
    return v;
}

long long parse_int(const std::string& s) {
    long long v = 0;
    const char* end = s.data() + s.size();
    const auto res = std::from_chars(s.data(), end, v);
    if (res.ec != std::errc{} || res.ptr != end)
        throw std::invalid_argument("malformed integer: '" + s + "'");
    return v;
}

std::uint64_t parse_u64(const std::string& s) {
    std::uint64_t v = 0;
    const char* end = s.data() + s.size();
    const auto res = std::from_chars(s.data(), end, v);
    if (res.ec != std::errc{} || res.ptr != end)
        throw std::invalid_argument("malformed seed: '" + s + "'");
    return v;
}

bool parse_bool(const std::string& s) {
    if (s == "true") return true;
    if (s == "false") return false;
    throw std::invalid_argument("malformed boolean: '" + s + "'");
}

char parse_sign(const std::string& s) {
    if (s == "+" || s == "-") return s[0];
    throw std::invalid_argument("branch sign must be '+' or '-'");
}

}  // namespace

OscillatorConfig oscillator_config(const RunConfig& rc, double beta) {
    OscillatorConfig cfg;
    cfg.m = rc.m;
    cfg.omega = rc.omega;
    cfg.beta = beta;
    cfg.qn = rc.qn;
    cfg.s = rc.s;
    return cfg;
}

LadderSign run_sign(const RunConfig& rc) {
    if (rc.sign == '+') return LadderSign::raising;
    if (rc.sign == '-') return LadderSign::lowering;
    throw std::invalid_argument("branch sign must be '+' or '-'");
}

std::vector<double> resolve_beta_grid(const BetaGrid& g) {
    if (g.count < 1)
        throw std::invalid_argument("velocity grid needs at least one point");
    if (!(g.start >= 0.0 && g.start <= g.stop && g.stop < 1.0))
        throw std::invalid_argument(
            "velocity grid must satisfy 0 <= start <= stop < 1");
    std::vector<double> betas;
    betas.reserve(static_cast<std::size_t>(g.count));
    if (g.count == 1) {
        betas.push_back(g.start);
        return betas;
    }
    for (int i = 0; i < g.count; ++i)
        betas.push_back(g.start + (g.stop - g.start) * i / (g.count - 1));
    return betas;
}

BetaGrid parse_beta_grid(const std::string& text) {
    const auto c1 = text.find(':');
    const auto c2 = c1 == std::string::npos ? c1 : text.find(':', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos ||
        text.find(':', c2 + 1) != std::string::npos)
        throw std::invalid_argument(
            "velocity grid spec must look like start:stop:count");
    BetaGrid g;
    g.start = parse_double(text.substr(0, c1));
    g.stop = parse_double(text.substr(c1 + 1, c2 - c1 - 1));
    g.count = static_cast<int>(parse_int(text.substr(c2 + 1)));
    return g;
}

io::Metadata to_metadata(const RunConfig& rc) {
    io::Metadata meta;
    meta.emplace_back("command", rc.command);
    meta.emplace_back("m", io::format_double(rc.m));
    meta.emplace_back("critical", rc.critical ? "true" : "false");
    meta.emplace_back("omega", io::format_double(rc.omega));
    if (rc.beta_grid) {
        const auto& g = *rc.beta_grid;
        meta.emplace_back("beta_grid", io::format_double(g.start) + ":" +
                                           io::format_double(g.stop) + ":" +
                                           std::to_string(g.count));
    } else {
        meta.emplace_back("beta", io::format_double(rc.beta));
    }
    meta.emplace_back("u", std::to_string(rc.qn.u));
    meta.emplace_back("v", std::to_string(rc.qn.v));
    meta.emplace_back("w", std::to_string(rc.qn.w));
    meta.emplace_back("s", io::format_double(rc.s));
    meta.emplace_back("sign", std::string(1, rc.sign));
    meta.emplace_back("quad_order", std::to_string(rc.quad_order));
    meta.emplace_back("format", rc.format);
    meta.emplace_back("out", rc.out_path);
    meta.emplace_back("seed", std::to_string(rc.seed));
    meta.emplace_back("n_max", std::to_string(rc.n_max));
    meta.emplace_back("grid_points", std::to_string(rc.grid_points));
    meta.emplace_back("grid_radius", io::format_double(rc.grid_radius));
    meta.emplace_back("marginal", rc.marginal ? "true" : "false");
    meta.emplace_back("component", std::to_string(rc.component));
    meta.emplace_back("radius", io::format_double(rc.radius));
    meta.emplace_back("level", io::format_double(rc.level));
    meta.emplace_back("points", std::to_string(rc.points));
    return meta;
}

RunConfig from_metadata(const io::Metadata& meta) {
    RunConfig rc;
    bool saw_beta_grid = false;
    for (const auto& [key, value] : meta) {
        if (key == "command") rc.command = value;
        else if (key == "m") rc.m = parse_double(value);
        else if (key == "critical") rc.critical = parse_bool(value);
        else if (key == "omega") rc.omega = parse_double(value);
        else if (key == "beta") rc.beta = parse_double(value);
        else if (key == "beta_grid") {
            rc.beta_grid = parse_beta_grid(value);
            saw_beta_grid = true;
        } else if (key == "u") rc.qn.u = static_cast<int>(parse_int(value));
        else if (key == "v") rc.qn.v = static_cast<int>(parse_int(value));
        else if (key == "w") rc.qn.w = static_cast<int>(parse_int(value));
        else if (key == "s") rc.s = parse_double(value);
        else if (key == "sign") rc.sign = parse_sign(value);
        else if (key == "quad_order") rc.quad_order = static_cast<int>(parse_int(value));
        else if (key == "format") rc.format = value;
        else if (key == "out") rc.out_path = value;
        else if (key == "seed") rc.seed = parse_u64(value);
        else if (key == "n_max") rc.n_max = static_cast<int>(parse_int(value));
        else if (key == "grid_points") rc.grid_points = static_cast<int>(parse_int(value));
        else if (key == "grid_radius") rc.grid_radius = parse_double(value);
        else if (key == "marginal") rc.marginal = parse_bool(value);
        else if (key == "component") rc.component = static_cast<int>(parse_int(value));
        else if (key == "radius") rc.radius = parse_double(value);
        else if (key == "level") rc.level = parse_double(value);
        else if (key == "points") rc.points = static_cast<int>(parse_int(value));
        // unknown keys: notes appended by commands, ignored by design
    }
    if (!saw_beta_grid) rc.beta_grid.reset();
    return rc;
}

}  // namespace relosc
