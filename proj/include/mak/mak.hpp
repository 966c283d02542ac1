#pragma once

#include "mak/c1p.hpp"
#include "mak/core.hpp"
#include "mak/domains.hpp"
#include "mak/error.hpp"
#include "mak/io.hpp"
#include "mak/reductions.hpp"
#include "mak/solvers.hpp"
