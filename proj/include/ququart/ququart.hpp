// Umbrella header: the full polarization-frequency ququart toolkit.
// scenario_config.hpp (JSON parsing) is not pulled in here because it needs
// the external JSON header; include it directly where configs are parsed.
#pragma once

#include "common.hpp"
#include "matrix.hpp"
#include "eig.hpp"
#include "states.hpp"
#include "density.hpp"
#include "measures.hpp"
#include "two_qubit.hpp"
#include "scenario.hpp"
