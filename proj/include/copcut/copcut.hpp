#ifndef COPCUT_COPCUT_HPP
#define COPCUT_COPCUT_HPP

// Umbrella header.

#include "copcut/anneal.hpp"
#include "copcut/bench.hpp"
#include "copcut/clique.hpp"
#include "copcut/copositivity.hpp"
#include "copcut/cutting_plane.hpp"
#include "copcut/ellipsoid.hpp"
#include "copcut/graph.hpp"
#include "copcut/matrix.hpp"
#include "copcut/mbqp.hpp"
#include "copcut/metrics.hpp"
#include "copcut/qubo.hpp"

#endif  // COPCUT_COPCUT_HPP
