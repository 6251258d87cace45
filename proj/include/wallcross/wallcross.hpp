#pragma once

#include "wallcross/errors.hpp"
#include "wallcross/rational.hpp"
#include "wallcross/partition.hpp"
#include "wallcross/node.hpp"
#include "wallcross/crystal.hpp"
#include "wallcross/graph.hpp"
#include "wallcross/jmmo.hpp"
#include "wallcross/symbol.hpp"
#include "wallcross/rmatrix.hpp"
#include "wallcross/walls.hpp"
#include "wallcross/highest_weight.hpp"
#include "wallcross/cherednik.hpp"
