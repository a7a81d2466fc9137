#pragma once

// Umbrella header.

#include "coverlab/conductance.hpp"
#include "coverlab/degree_sequence.hpp"
#include "coverlab/errors.hpp"
#include "coverlab/generator.hpp"
#include "coverlab/graph_io.hpp"
#include "coverlab/graphs.hpp"
#include "coverlab/kernel.hpp"
#include "coverlab/mixing.hpp"
#include "coverlab/multigraph.hpp"
#include "coverlab/pairing.hpp"
#include "coverlab/path_lengths.hpp"
#include "coverlab/predictor.hpp"
#include "coverlab/resistance.hpp"
#include "coverlab/returns.hpp"
#include "coverlab/rng.hpp"
#include "coverlab/spectral.hpp"
#include "coverlab/star_walks.hpp"
#include "coverlab/stats.hpp"
#include "coverlab/surrogate.hpp"
#include "coverlab/transition.hpp"
#include "coverlab/tree_like.hpp"
#include "coverlab/tree_resistance.hpp"
#include "coverlab/version.hpp"
#include "coverlab/walk.hpp"
#include "coverlab/weighted_graph.hpp"
