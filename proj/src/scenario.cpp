// SPDX-License-Identifier: Apache-2.0
#include "rischan/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace rischan {

using nlohmann::json;

std::vector<double> FreqGrid::points() const {
    std::vector<double> out;
    out.reserve(static_cast<size_t>(n_points));
    if (n_points == 1) {
        out.push_back(start_ghz);
        return out;
    }
    const double step = (stop_ghz - start_ghz) / (n_points - 1);
    for (int i = 0; i < n_points; ++i) out.push_back(start_ghz + step * i);
    return out;
}

RisConfiguration RisConfiguration::from_bits(std::vector<int> b) {
    RisConfiguration c;
    c.kind = Kind::Bits;
    c.bits = std::move(b);
    for (int v : c.bits)
        if (v != 0 && v != 1)
            throw DomainError("RisConfiguration: bits must be 0 or 1");
    return c;
}

RisConfiguration RisConfiguration::from_analog(Vector v) {
    RisConfiguration c;
    c.kind = Kind::Analog;
    c.analog = std::move(v);
    for (Eigen::Index i = 0; i < c.analog.size(); ++i)
        if (!std::isfinite(c.analog[i].real()) || !std::isfinite(c.analog[i].imag()))
            throw DomainError("RisConfiguration: analog entries must be finite");
    return c;
}

RisConfiguration RisConfiguration::all_zero(int n_ris) {
    return from_bits(std::vector<int>(static_cast<size_t>(n_ris), 0));
}

int IndexMap::offset(Group g) const {
    switch (g) {
        case Group::T: return 0;
        case Group::R: return n_tx;
        case Group::S: return n_tx + n_rx;
        case Group::E: return n_tx + n_rx + n_ris;
        case Group::P: return 0;
        case Group::Pbar: return p();
    }
    throw DomainError("IndexMap::offset: bad group");
}

int IndexMap::count(Group g) const {
    switch (g) {
        case Group::T: return n_tx;
        case Group::R: return n_rx;
        case Group::S: return n_ris;
        case Group::E: return n_dyn_env + n_static_env;
        case Group::P: return p();
        case Group::Pbar: return s();
    }
    throw DomainError("IndexMap::count: bad group");
}

namespace {

void check_dipole(const DipoleParams& d, const std::string& path,
                  std::vector<Diagnostic>& out) {
    if (!std::isfinite(d.x) || !std::isfinite(d.y))
        out.push_back({path, "position must be finite"});
    if (!(d.f_res_ghz > 0.0) || !std::isfinite(d.f_res_ghz))
        out.push_back({path + ".f_res_ghz", "resonance frequency must be finite and > 0"});
    if (!(d.chi > 0.0) || !std::isfinite(d.chi))
        out.push_back({path + ".chi", "oscillator strength must be finite and > 0"});
    if (!(d.gamma_ghz >= 0.0) || !std::isfinite(d.gamma_ghz))
        out.push_back({path + ".gamma_ghz", "damping must be finite and >= 0"});
}

} // namespace

std::vector<Diagnostic> validate(const Scenario& sc) {
    std::vector<Diagnostic> out;

    if (sc.tx.empty()) out.push_back({"tx", "at least one transmit dipole required"});
    if (sc.rx.empty()) out.push_back({"rx", "at least one receive dipole required"});

    for (size_t i = 0; i < sc.tx.size(); ++i)
        check_dipole(sc.tx[i], "tx[" + std::to_string(i) + "]", out);
    for (size_t i = 0; i < sc.rx.size(); ++i)
        check_dipole(sc.rx[i], "rx[" + std::to_string(i) + "]", out);
    for (size_t i = 0; i < sc.ris.size(); ++i) {
        const std::string path = "ris[" + std::to_string(i) + "]";
        check_dipole(sc.ris[i].base, path, out);
        if (!(sc.ris[i].f_res_state0_ghz > 0.0))
            out.push_back({path + ".f_res_state0_ghz", "state-0 resonance must be > 0"});
        if (!(sc.ris[i].f_res_state1_ghz > 0.0))
            out.push_back({path + ".f_res_state1_ghz", "state-1 resonance must be > 0"});
        if (sc.ris[i].base.f_res_ghz != sc.ris[i].f_res_state0_ghz)
            out.push_back({path + ".f_res_ghz", "base resonance must equal f_res_state0_ghz"});
    }
    for (size_t i = 0; i < sc.env.size(); ++i)
        check_dipole(sc.env[i], "env[" + std::to_string(i) + "]", out);

    // pairwise distinct positions across all groups
    std::vector<std::pair<Position, std::string>> all;
    for (size_t i = 0; i < sc.tx.size(); ++i)
        all.push_back({sc.tx[i].position(), "tx[" + std::to_string(i) + "]"});
    for (size_t i = 0; i < sc.rx.size(); ++i)
        all.push_back({sc.rx[i].position(), "rx[" + std::to_string(i) + "]"});
    for (size_t i = 0; i < sc.ris.size(); ++i)
        all.push_back({sc.ris[i].base.position(), "ris[" + std::to_string(i) + "]"});
    for (size_t i = 0; i < sc.env.size(); ++i)
        all.push_back({sc.env[i].position(), "env[" + std::to_string(i) + "]"});
    for (size_t i = 0; i < all.size(); ++i)
        for (size_t j = i + 1; j < all.size(); ++j)
            if (all[i].first.x == all[j].first.x && all[i].first.y == all[j].first.y)
                out.push_back({all[j].second,
                               "coincident positions with " + all[i].second});

    std::set<int> seen;
    for (size_t i = 0; i < sc.dynamic_env.size(); ++i) {
        const int idx = sc.dynamic_env[i];
        const std::string path = "dynamic_env[" + std::to_string(i) + "]";
        if (idx < 0 || idx >= sc.n_env())
            out.push_back({path, "index out of range"});
        else if (!seen.insert(idx).second)
            out.push_back({path, "duplicate index"});
    }

    if (!(sc.freq_grid.start_ghz > 0.0) || !(sc.freq_grid.stop_ghz > 0.0) ||
        sc.freq_grid.start_ghz > sc.freq_grid.stop_ghz)
        out.push_back({"freq_grid", "requires 0 < start_ghz <= stop_ghz"});
    if (sc.freq_grid.n_points < 1)
        out.push_back({"freq_grid.n_points", "must be >= 1"});

    return out;
}

IndexMap build_index_map(const Scenario& sc) {
    auto diags = validate(sc);
    if (!diags.empty()) {
        std::ostringstream os;
        os << "build_index_map: invalid scenario:";
        for (const auto& d : diags) os << " [" << d.path << "] " << d.message << ";";
        throw DomainError(os.str());
    }

    IndexMap map;
    map.n_tx = sc.n_tx();
    map.n_rx = sc.n_rx();
    map.n_ris = sc.n_ris();

    std::vector<int> dyn = sc.dynamic_env;
    std::sort(dyn.begin(), dyn.end());
    std::vector<char> is_dyn(static_cast<size_t>(sc.n_env()), 0);
    for (int e : dyn) is_dyn[static_cast<size_t>(e)] = 1;

    map.env_order = dyn;
    for (int e = 0; e < sc.n_env(); ++e)
        if (!is_dyn[static_cast<size_t>(e)]) map.env_order.push_back(e);
    map.n_dyn_env = static_cast<int>(dyn.size());
    map.n_static_env = sc.n_env() - map.n_dyn_env;
    return map;
}

std::vector<DipoleParams> canonical_dipoles(const Scenario& sc, const IndexMap& map) {
    std::vector<DipoleParams> out;
    out.reserve(static_cast<size_t>(map.n()));
    out.insert(out.end(), sc.tx.begin(), sc.tx.end());
    out.insert(out.end(), sc.rx.begin(), sc.rx.end());
    for (const auto& r : sc.ris) out.push_back(r.base);
    for (int e : map.env_order) out.push_back(sc.env[static_cast<size_t>(e)]);
    return out;
}

Vector configuration_to_inverse_polarizabilities(const Scenario& sc,
                                                 const RisConfiguration& cfg,
                                                 double f_ghz) {
    if (cfg.size() != sc.n_ris())
        throw DomainError("configuration length does not match number of RIS elements");
    if (cfg.kind == RisConfiguration::Kind::Analog) return cfg.analog;

    Vector out(sc.n_ris());
    for (int k = 0; k < sc.n_ris(); ++k) {
        DipoleParams d = sc.ris[static_cast<size_t>(k)].base;
        d.f_res_ghz = cfg.bits[static_cast<size_t>(k)] == 0
                          ? sc.ris[static_cast<size_t>(k)].f_res_state0_ghz
                          : sc.ris[static_cast<size_t>(k)].f_res_state1_ghz;
        out[k] = inverse_polarizability(f_ghz, d);
    }
    return out;
}

namespace {

void reject_unknown_keys(const json& j, std::initializer_list<const char*> allowed,
                         const std::string& path) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool ok = false;
        for (const char* k : allowed)
            if (it.key() == k) { ok = true; break; }
        if (!ok)
            throw DomainError("scenario parse: unknown key '" + it.key() + "' at " + path);
    }
}

double get_num(const json& j, const char* key, const std::string& path) {
    if (!j.contains(key))
        throw DomainError("scenario parse: missing key '" + std::string(key) + "' at " + path);
    if (!j[key].is_number())
        throw DomainError("scenario parse: '" + std::string(key) + "' must be a number at " + path);
    return j[key].get<double>();
}

DipoleParams parse_dipole(const json& j, const std::string& path) {
    reject_unknown_keys(j, {"x", "y", "f_res_ghz", "chi", "gamma_ghz"}, path);
    DipoleParams d;
    d.x = get_num(j, "x", path);
    d.y = get_num(j, "y", path);
    d.f_res_ghz = get_num(j, "f_res_ghz", path);
    d.chi = get_num(j, "chi", path);
    d.gamma_ghz = get_num(j, "gamma_ghz", path);
    return d;
}

json dipole_to_json(const DipoleParams& d) {
    return {{"x", d.x}, {"y", d.y}, {"f_res_ghz", d.f_res_ghz},
            {"chi", d.chi}, {"gamma_ghz", d.gamma_ghz}};
}

} // namespace

Scenario parse_scenario(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw DomainError(std::string("scenario parse: ") + e.what());
    }
    if (!j.is_object()) throw DomainError("scenario parse: top level must be an object");
    reject_unknown_keys(j, {"freq_grid", "tx", "rx", "ris", "env", "dynamic_env"}, "$");

    Scenario sc;
    if (!j.contains("freq_grid"))
        throw DomainError("scenario parse: missing 'freq_grid'");
    const json& fg = j["freq_grid"];
    reject_unknown_keys(fg, {"start_ghz", "stop_ghz", "n_points"}, "freq_grid");
    sc.freq_grid.start_ghz = get_num(fg, "start_ghz", "freq_grid");
    sc.freq_grid.stop_ghz = get_num(fg, "stop_ghz", "freq_grid");
    sc.freq_grid.n_points = static_cast<int>(get_num(fg, "n_points", "freq_grid"));

    for (const char* grp : {"tx", "rx", "env"}) {
        if (!j.contains(grp)) continue;
        auto& dst = grp == std::string("tx") ? sc.tx
                  : grp == std::string("rx") ? sc.rx : sc.env;
        int i = 0;
        for (const json& e : j[grp])
            dst.push_back(parse_dipole(e, std::string(grp) + "[" + std::to_string(i++) + "]"));
    }
    if (j.contains("ris")) {
        int i = 0;
        for (const json& e : j["ris"]) {
            const std::string path = "ris[" + std::to_string(i++) + "]";
            reject_unknown_keys(e, {"x", "y", "chi", "gamma_ghz",
                                    "f_res_state0_ghz", "f_res_state1_ghz"}, path);
            RisElement r;
            r.base.x = get_num(e, "x", path);
            r.base.y = get_num(e, "y", path);
            r.base.chi = get_num(e, "chi", path);
            r.base.gamma_ghz = get_num(e, "gamma_ghz", path);
            r.f_res_state0_ghz = get_num(e, "f_res_state0_ghz", path);
            r.f_res_state1_ghz = get_num(e, "f_res_state1_ghz", path);
            r.base.f_res_ghz = r.f_res_state0_ghz;
            sc.ris.push_back(r);
        }
    }
    if (j.contains("dynamic_env")) {
        for (const json& e : j["dynamic_env"]) {
            if (!e.is_number_integer())
                throw DomainError("scenario parse: dynamic_env entries must be integers");
            sc.dynamic_env.push_back(e.get<int>());
        }
    }
    return sc;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("load_scenario: cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str());
}

std::string serialize_scenario(const Scenario& sc) {
    json j;
    j["freq_grid"] = {{"start_ghz", sc.freq_grid.start_ghz},
                      {"stop_ghz", sc.freq_grid.stop_ghz},
                      {"n_points", sc.freq_grid.n_points}};
    j["tx"] = json::array();
    for (const auto& d : sc.tx) j["tx"].push_back(dipole_to_json(d));
    j["rx"] = json::array();
    for (const auto& d : sc.rx) j["rx"].push_back(dipole_to_json(d));
    j["ris"] = json::array();
    for (const auto& r : sc.ris)
        j["ris"].push_back({{"x", r.base.x}, {"y", r.base.y}, {"chi", r.base.chi},
                            {"gamma_ghz", r.base.gamma_ghz},
                            {"f_res_state0_ghz", r.f_res_state0_ghz},
                            {"f_res_state1_ghz", r.f_res_state1_ghz}});
    j["env"] = json::array();
    for (const auto& d : sc.env) j["env"].push_back(dipole_to_json(d));
    j["dynamic_env"] = sc.dynamic_env;
    return j.dump(2);
}

void save_scenario(const Scenario& sc, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw DomainError("save_scenario: cannot open " + path);
    out << serialize_scenario(sc) << "\n";
}

} // namespace rischan
