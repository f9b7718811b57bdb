#pragma once

#include "modspace/grid.hpp"

namespace modspace {

/// Default sampling grid: d=1 covers [-16,16] with N=4096; d=2 covers [-8,8]
/// with N=128 per axis. Gaussian and bump tails are below 1e-12 at the edge.
inline Grid default_grid(int dim = 1) {
    if (dim == 1) return Grid(1, 4096, 32.0 / 4096.0);
    return Grid(2, 128, 16.0 / 128.0);
}

/// Time lattice for the STFT: same extent as the signal grid, spacing
/// oversample times coarser. oversample=1 gives the fully dense lattice.
inline Grid default_time_lattice(const Grid& signal_grid, int oversample = 8) {
    return Grid(signal_grid.dim(), signal_grid.n_per_axis() / oversample,
                signal_grid.spacing() * oversample, signal_grid.origin());
}

} // namespace modspace
