#pragma once

#include "swarm_assign/bench.hpp"
#include "swarm_assign/comm_graph.hpp"
#include "swarm_assign/errors.hpp"
#include "swarm_assign/graph.hpp"
#include "swarm_assign/greedy.hpp"
#include "swarm_assign/instance_io.hpp"
#include "swarm_assign/local.hpp"
#include "swarm_assign/model.hpp"
#include "swarm_assign/netsim.hpp"
#include "swarm_assign/nnls.hpp"
#include "swarm_assign/oracle.hpp"
#include "swarm_assign/presets.hpp"
#include "swarm_assign/random_instance.hpp"
#include "swarm_assign/rng.hpp"
#include "swarm_assign/simplex.hpp"
#include "swarm_assign/simtrack.hpp"
