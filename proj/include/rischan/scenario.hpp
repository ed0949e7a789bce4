// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "rischan/physics.hpp"
#include "rischan/types.hpp"

namespace rischan {

// A RIS element is a dipole whose resonance frequency takes one of two
// programmable values. base.f_res_ghz equals f_res_state0_ghz by convention.
struct RisElement {
    DipoleParams base;
    double f_res_state0_ghz = 1.0;
    double f_res_state1_ghz = 1.0;
};

struct FreqGrid {
    double start_ghz = 1.0;
    double stop_ghz = 1.0;
    int n_points = 1;

    std::vector<double> points() const;
};

// Grouped description of the wireless system: transmit/receive antennas,
// RIS elements, environment scatterers, and which of the latter are dynamic.
struct Scenario {
    std::vector<DipoleParams> tx;
    std::vector<DipoleParams> rx;
    std::vector<RisElement> ris;
    std::vector<DipoleParams> env;
    std::vector<int> dynamic_env; // indices into env
    FreqGrid freq_grid;

    int n_tx() const { return static_cast<int>(tx.size()); }
    int n_rx() const { return static_cast<int>(rx.size()); }
    int n_ris() const { return static_cast<int>(ris.size()); }
    int n_env() const { return static_cast<int>(env.size()); }
    int n_total() const { return n_tx() + n_rx() + n_ris() + n_env(); }
};

// RIS configuration: either one bit per element (two-state resonance table)
// or explicit complex inverse polarizabilities.
struct RisConfiguration {
    enum class Kind { Bits, Analog };

    Kind kind = Kind::Bits;
    std::vector<int> bits;
    Vector analog;

    static RisConfiguration from_bits(std::vector<int> b);
    static RisConfiguration from_analog(Vector v);
    static RisConfiguration all_zero(int n_ris);

    int size() const {
        return kind == Kind::Bits ? static_cast<int>(bits.size())
                                  : static_cast<int>(analog.size());
    }
};

struct Diagnostic {
    std::string path;
    std::string message;
};

// Dipole groups of the canonical ordering, plus the primary/secondary split.
enum class Group { T, R, S, E, P, Pbar };

// Contiguous index ranges in canonical order T, R, S, dynamic-E, static-E.
// Primary set P = T + R + S + dynamic-E, secondary set Pbar = static-E.
struct IndexMap {
    int n_tx = 0;
    int n_rx = 0;
    int n_ris = 0;
    int n_dyn_env = 0;
    int n_static_env = 0;
    // canonical position of env dipole e: env_order[e]'th slot of the E range
    std::vector<int> env_order;

    int n() const { return n_tx + n_rx + n_ris + n_dyn_env + n_static_env; }
    int p() const { return n_tx + n_rx + n_ris + n_dyn_env; }
    int s() const { return n_static_env; }

    int offset(Group g) const;
    int count(Group g) const;
    // global canonical index of RIS element k
    int ris_global(int k) const { return n_tx + n_rx + k; }
};

std::vector<Diagnostic> validate(const Scenario& sc);

// Canonical ordering with dynamic environment dipoles promoted into P.
// Rejects invalid scenarios.
IndexMap build_index_map(const Scenario& sc);

// All N dipoles in canonical order; RIS entries carry their state-0 resonance.
std::vector<DipoleParams> canonical_dipoles(const Scenario& sc, const IndexMap& map);

// diag(W_SS) for a configuration at operating frequency f: bit configurations
// evaluate the per-element Lorentzian at the selected state resonance, analog
// configurations pass through unchanged.
Vector configuration_to_inverse_polarizabilities(const Scenario& sc,
                                                 const RisConfiguration& cfg,
                                                 double f_ghz);

// JSON scenario file I/O. Unknown keys are rejected.
Scenario parse_scenario(const std::string& json_text);
Scenario load_scenario(const std::string& path);
std::string serialize_scenario(const Scenario& sc);
void save_scenario(const Scenario& sc, const std::string& path);

} // namespace rischan
