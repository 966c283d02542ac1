#pragma once

#include "mak/solvers/auto.hpp"
#include "mak/solvers/brute_force.hpp"
#include "mak/solvers/diverse_sp.hpp"
#include "mak/solvers/fair_xp.hpp"
#include "mak/solvers/greedy.hpp"
#include "mak/solvers/ib_dp.hpp"
#include "mak/solvers/options.hpp"
#include "mak/solvers/ordered_diverse.hpp"
