#pragma once

// Umbrella header.

#include "sbvs/canonical.hpp"
#include "sbvs/error.hpp"
#include "sbvs/gadget.hpp"
#include "sbvs/generators.hpp"
#include "sbvs/graph.hpp"
#include "sbvs/harness.hpp"
#include "sbvs/io.hpp"
#include "sbvs/rational.hpp"
#include "sbvs/separator.hpp"
#include "sbvs/solver.hpp"
#include "sbvs/vertex_set.hpp"
