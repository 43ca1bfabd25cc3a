#pragma once

/// Umbrella header for the library. The CLI front end (udg/cli.hpp) is
/// excluded so library consumers never pay for the argument parser.

#include "udg/chromatic.hpp"
#include "udg/coloring.hpp"
#include "udg/density.hpp"
#include "udg/errors.hpp"
#include "udg/field.hpp"
#include "udg/fixtures.hpp"
#include "udg/graph.hpp"
#include "udg/integer.hpp"
#include "udg/point.hpp"
#include "udg/rational.hpp"
#include "udg/tiling.hpp"
#include "udg/unit_vectors.hpp"
