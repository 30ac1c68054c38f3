#pragma once

#include "clawbound/decomposition.hpp"
#include "clawbound/domination.hpp"
#include "clawbound/enumerate.hpp"
#include "clawbound/errors.hpp"
#include "clawbound/graph.hpp"
#include "clawbound/graph_io.hpp"
#include "clawbound/harness.hpp"
#include "clawbound/labeling.hpp"
#include "clawbound/vertex_set.hpp"
