#pragma once

#include "setopt/error.hpp"
#include "setopt/finite_set.hpp"
#include "setopt/cone.hpp"
#include "setopt/set_relations.hpp"
#include "setopt/scalarization.hpp"
#include "setopt/interval.hpp"
#include "setopt/instance.hpp"
#include "setopt/parallel.hpp"
#include "setopt/solution_sets.hpp"
#include "setopt/convexlike.hpp"
#include "setopt/contraction.hpp"
#include "setopt/generators.hpp"
#include "setopt/io.hpp"
#include "setopt/report.hpp"
