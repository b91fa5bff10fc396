#pragma once

#include "dq/bound_value.hpp"
#include "dq/bounds.hpp"
#include "dq/code.hpp"
#include "dq/combinat.hpp"
#include "dq/distance_table.hpp"
#include "dq/exact_solver.hpp"
#include "dq/lower_bounds.hpp"
#include "dq/lp_bound.hpp"
#include "dq/report.hpp"
#include "dq/rs_construct.hpp"
#include "dq/upper_bounds.hpp"
#include "dq/words.hpp"
