#pragma once

#include "skelcur/bounds.hpp"
#include "skelcur/error.hpp"
#include "skelcur/experiment.hpp"
#include "skelcur/generators.hpp"
#include "skelcur/linalg.hpp"
#include "skelcur/matrix.hpp"
#include "skelcur/matrix_market.hpp"
#include "skelcur/maxvol.hpp"
#include "skelcur/skeleton.hpp"
#include "skelcur/svg_chart.hpp"
