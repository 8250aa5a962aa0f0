#pragma once

// Umbrella header for the whole library.

#include "ghcs/error.hpp"
#include "ghcs/families.hpp"
#include "ghcs/ladder.hpp"
#include "ghcs/parameters.hpp"
#include "ghcs/phase.hpp"
#include "ghcs/photstat.hpp"
#include "ghcs/quadrature.hpp"
#include "ghcs/repr.hpp"
#include "ghcs/specfun.hpp"
#include "ghcs/states.hpp"
#include "ghcs/weights.hpp"
