#pragma once

// Embedding obstructions for finite simplicial complexes and
// obstructor-dimension bounds for groups: certify m-obstructor complexes,
// compute the mod-2 van Kampen obstruction, build new obstructors with the
// cone and join constructions, and derive group dimension bounds.

#include "vko/certifier.hpp"
#include "vko/cocycle.hpp"
#include "vko/constructors.hpp"
#include "vko/deleted_product.hpp"
#include "vko/digest.hpp"
#include "vko/errors.hpp"
#include "vko/genpos.hpp"
#include "vko/gf2.hpp"
#include "vko/group_calculus.hpp"
#include "vko/json_io.hpp"
#include "vko/pair_system.hpp"
#include "vko/rational.hpp"
#include "vko/simplex.hpp"
