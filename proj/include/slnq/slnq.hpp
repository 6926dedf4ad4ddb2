// Umbrella header.

#pragma once

#include "branching.hpp"
#include "common.hpp"
#include "kgraphs.hpp"
#include "paths.hpp"
#include "qpoly.hpp"
#include "sectors.hpp"
#include "weights.hpp"
