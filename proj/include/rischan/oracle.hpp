// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "rischan/channel.hpp"
#include "rischan/interaction.hpp"

namespace rischan {

// Brute-force reference: H = [W^{-1}]_RT via a pivoted LU of the full N x N
// matrix and N_T column solves. Every fast path is validated against this.
ChannelMatrix channel_full(const InteractionMatrix& wm);

struct ChannelDiff {
    double rel_frobenius = 0.0;
    double max_abs = 0.0;
};

ChannelDiff compare_channels(const ChannelMatrix& a, const ChannelMatrix& b);

} // namespace rischan
