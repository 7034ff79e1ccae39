#ifndef OCP_OCP_HPP
#define OCP_OCP_HPP

#include "ocp/bitset.hpp"
#include "ocp/cost.hpp"
#include "ocp/errors.hpp"
#include "ocp/evaluate.hpp"
#include "ocp/generate.hpp"
#include "ocp/instance.hpp"
#include "ocp/io.hpp"
#include "ocp/map_io.hpp"
#include "ocp/reduction.hpp"
#include "ocp/solvers.hpp"
#include "ocp/three_partition.hpp"
#include "ocp/verify.hpp"

#endif
