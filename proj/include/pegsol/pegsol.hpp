#pragma once

#include "lattice.hpp"
#include "position.hpp"
#include "classes.hpp"
#include "sweep.hpp"
#include "solver.hpp"
#include "construct.hpp"
#include "render.hpp"
