#pragma once

#include "rvdkit/audit.hpp"
#include "rvdkit/coloring.hpp"
#include "rvdkit/connectivity.hpp"
#include "rvdkit/enumerate.hpp"
#include "rvdkit/errors.hpp"
#include "rvdkit/extremal.hpp"
#include "rvdkit/families.hpp"
#include "rvdkit/graph.hpp"
#include "rvdkit/io.hpp"
#include "rvdkit/oracle.hpp"
#include "rvdkit/rainbow.hpp"
#include "rvdkit/solver.hpp"
#include "rvdkit/sparse.hpp"
#include "rvdkit/structure.hpp"
