#pragma once

#include "dce/cluster_graph.hpp"
#include "dce/combined.hpp"
#include "dce/common.hpp"
#include "dce/distance.hpp"
#include "dce/four_step.hpp"
#include "dce/fpt.hpp"
#include "dce/generators.hpp"
#include "dce/graph.hpp"
#include "dce/instance.hpp"
#include "dce/io.hpp"
#include "dce/kernelize.hpp"
#include "dce/mck.hpp"
#include "dce/oracle.hpp"
#include "dce/p3.hpp"
#include "dce/solve_result.hpp"
