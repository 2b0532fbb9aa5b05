// Umbrella header.
#pragma once

#include "clusterkit/audit.hpp"
#include "clusterkit/automorphism.hpp"
#include "clusterkit/bigint.hpp"
#include "clusterkit/exchange_graph.hpp"
#include "clusterkit/io.hpp"
#include "clusterkit/laurent.hpp"
#include "clusterkit/matrix.hpp"
#include "clusterkit/parallel.hpp"
#include "clusterkit/seed.hpp"
