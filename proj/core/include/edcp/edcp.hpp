#pragma once

// Umbrella header for the energy-divergence change-point library.

#include "edcp/errors.hpp"
#include "edcp/experiment.hpp"
#include "edcp/gram.hpp"
#include "edcp/kernel.hpp"
#include "edcp/limit.hpp"
#include "edcp/long_signal.hpp"
#include "edcp/permutation.hpp"
#include "edcp/report.hpp"
#include "edcp/rng.hpp"
#include "edcp/scan.hpp"
#include "edcp/signal.hpp"
#include "edcp/spectrum.hpp"
