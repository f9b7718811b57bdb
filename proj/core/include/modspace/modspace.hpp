#pragma once

#include "modspace/changeofvar.hpp"
#include "modspace/defaults.hpp"
#include "modspace/errors.hpp"
#include "modspace/experiments.hpp"
#include "modspace/family.hpp"
#include "modspace/fft.hpp"
#include "modspace/function_expr.hpp"
#include "modspace/grid.hpp"
#include "modspace/maps.hpp"
#include "modspace/multiplier.hpp"
#include "modspace/norms.hpp"
#include "modspace/parallel.hpp"
#include "modspace/spectral.hpp"
#include "modspace/stft.hpp"
