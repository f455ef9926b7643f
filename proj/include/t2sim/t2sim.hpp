#pragma once

#include "t2sim/axiom_checks.hpp"
#include "t2sim/domain_grid.hpp"
#include "t2sim/fuzzy_sets.hpp"
#include "t2sim/interval_measures.hpp"
#include "t2sim/membership_function.hpp"
#include "t2sim/tnorm.hpp"
#include "t2sim/worked_example.hpp"
#include "t2sim/zslices_measure.hpp"
