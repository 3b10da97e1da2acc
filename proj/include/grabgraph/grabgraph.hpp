#pragma once

#include "grabgraph/base_graph.hpp"
#include "grabgraph/brute_force.hpp"
#include "grabgraph/composite.hpp"
#include "grabgraph/connectivity.hpp"
#include "grabgraph/corpus.hpp"
#include "grabgraph/document.hpp"
#include "grabgraph/dot.hpp"
#include "grabgraph/enumerate.hpp"
#include "grabgraph/errors.hpp"
#include "grabgraph/game.hpp"
#include "grabgraph/generators.hpp"
#include "grabgraph/max_first.hpp"
#include "grabgraph/parallel.hpp"
#include "grabgraph/partitioned_graph.hpp"
#include "grabgraph/playout.hpp"
#include "grabgraph/rng.hpp"
#include "grabgraph/solver.hpp"
#include "grabgraph/strategy.hpp"
#include "grabgraph/verify.hpp"
#include "grabgraph/vertex_set.hpp"
#include "grabgraph/weight.hpp"
#include "grabgraph/weighted_graph.hpp"
