#pragma once

#include "starfree/bits.hpp"
#include "starfree/checks.hpp"
#include "starfree/coloring.hpp"
#include "starfree/domination.hpp"
#include "starfree/enumerate.hpp"
#include "starfree/errors.hpp"
#include "starfree/families.hpp"
#include "starfree/graph.hpp"
#include "starfree/graph6.hpp"
#include "starfree/independent_set.hpp"
#include "starfree/isomorphism.hpp"
#include "starfree/planarity.hpp"
#include "starfree/predicates.hpp"
#include "starfree/ramsey.hpp"
#include "starfree/rng.hpp"
#include "starfree/sampling.hpp"
#include "starfree/solvers.hpp"
#include "starfree/sweep.hpp"
#include "starfree/tdp.hpp"
