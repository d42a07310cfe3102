#pragma once

#include "specgraph/arith.hpp"
#include "specgraph/bitset.hpp"
#include "specgraph/claims.hpp"
#include "specgraph/error.hpp"
#include "specgraph/graph.hpp"
#include "specgraph/instance.hpp"
#include "specgraph/io.hpp"
#include "specgraph/lattice.hpp"
#include "specgraph/module.hpp"
#include "specgraph/quotient.hpp"
#include "specgraph/ring.hpp"
#include "specgraph/spec_graph.hpp"
#include "specgraph/spectrum.hpp"
#include "specgraph/submodule.hpp"
#include "specgraph/suite.hpp"
