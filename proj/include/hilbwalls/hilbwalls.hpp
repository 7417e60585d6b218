#pragma once

#include "hilbwalls/arith.hpp"
#include "hilbwalls/classify.hpp"
#include "hilbwalls/fmpartner.hpp"
#include "hilbwalls/mukai.hpp"
#include "hilbwalls/plot.hpp"
#include "hilbwalls/report.hpp"
#include "hilbwalls/surface.hpp"
#include "hilbwalls/walls.hpp"
