#pragma once

#include "scatlen/approximants.hpp"
#include "scatlen/dimension.hpp"
#include "scatlen/extraction.hpp"
#include "scatlen/io.hpp"
#include "scatlen/oracles.hpp"
#include "scatlen/poles.hpp"
#include "scatlen/potentials.hpp"
#include "scatlen/radial_solver.hpp"
#include "scatlen/scan.hpp"
#include "scatlen/sensitivity.hpp"
#include "scatlen/version.hpp"
