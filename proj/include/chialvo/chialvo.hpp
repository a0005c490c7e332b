#pragma once

#include "chialvo/bifurcation.hpp"
#include "chialvo/chialvo2d.hpp"
#include "chialvo/datasets.hpp"
#include "chialvo/errors.hpp"
#include "chialvo/fixed_points.hpp"
#include "chialvo/map_core.hpp"
#include "chialvo/misiurewicz.hpp"
#include "chialvo/orbit.hpp"
#include "chialvo/topo_chaos.hpp"
