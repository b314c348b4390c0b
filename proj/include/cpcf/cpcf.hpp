#pragma once

#include "cpcf/bench.hpp"
#include "cpcf/counts.hpp"
#include "cpcf/errors.hpp"
#include "cpcf/histogram.hpp"
#include "cpcf/io.hpp"
#include "cpcf/lattice.hpp"
#include "cpcf/layouts.hpp"
#include "cpcf/path_oracle.hpp"
#include "cpcf/pcf.hpp"
#include "cpcf/simulation.hpp"
