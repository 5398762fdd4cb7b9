#pragma once

// Umbrella header for the whole library.

#include "daglca/bitmatrix.hpp"
#include "daglca/closure.hpp"
#include "daglca/error.hpp"
#include "daglca/exact.hpp"
#include "daglca/fourpartite.hpp"
#include "daglca/graph.hpp"
#include "daglca/hypergraph.hpp"
#include "daglca/intmatrix.hpp"
#include "daglca/kernels.hpp"
#include "daglca/listing.hpp"
#include "daglca/max_witness.hpp"
#include "daglca/max_witness_via_verlca.hpp"
#include "daglca/oracle.hpp"
#include "daglca/parallel.hpp"
#include "daglca/prng.hpp"
#include "daglca/reductions.hpp"
