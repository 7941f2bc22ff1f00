#pragma once

#include "gds/bench.hpp"
#include "gds/centrality.hpp"
#include "gds/community.hpp"
#include "gds/csv.hpp"
#include "gds/errors.hpp"
#include "gds/evaluation.hpp"
#include "gds/forest.hpp"
#include "gds/generators.hpp"
#include "gds/graph.hpp"
#include "gds/linkpred.hpp"
#include "gds/serialize.hpp"
#include "gds/structure_metrics.hpp"
#include "gds/traversal.hpp"
