#pragma once

#include "grassmann/bounds.hpp"
#include "grassmann/constructions.hpp"
#include "grassmann/error.hpp"
#include "grassmann/gfq.hpp"
#include "grassmann/graph.hpp"
#include "grassmann/io.hpp"
#include "grassmann/linalg.hpp"
#include "grassmann/numeric.hpp"
#include "grassmann/rank.hpp"
#include "grassmann/search.hpp"
#include "grassmann/subspaces.hpp"
