// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "rischan/scenario.hpp"

namespace rischan {

// End-to-end channel H: N_R x N_T complex entries at one frequency point.
struct ChannelMatrix {
    Matrix h;
    double f_ghz = 0.0;
    RisConfiguration cfg;
};

} // namespace rischan
