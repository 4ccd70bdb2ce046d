#pragma once

// Umbrella header: the cos(t*theta) = c decision engine and its substrate.

#include "costheta/algebraic.hpp"
#include "costheta/continuize.hpp"
#include "costheta/engine.hpp"
#include "costheta/lattice.hpp"
#include "costheta/lrs.hpp"
#include "costheta/number_field.hpp"
#include "costheta/power_solver.hpp"
