#pragma once

// ringlab: a workbench for the ideal and subring structure of small finite
// rings. Rings are explicit operation tables; everything downstream
// (ideal enumeration, idealizers, eigenrings, similarity classes, subring
// lattices, automorphisms, structural checks) is exhaustive computation
// over those tables.

#include "ringlab/checks.hpp"
#include "ringlab/closure.hpp"
#include "ringlab/construct.hpp"
#include "ringlab/finite_ring.hpp"
#include "ringlab/ideal_lab.hpp"
#include "ringlab/isomorphism.hpp"
#include "ringlab/json_io.hpp"
#include "ringlab/maxsub.hpp"
#include "ringlab/ring_map.hpp"
#include "ringlab/ring_spec.hpp"
#include "ringlab/subset.hpp"
