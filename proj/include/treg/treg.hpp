#pragma once

// Umbrella header: exact-arithmetic computation of equivariant weight
// polynomials and symmetric-group characters on the cohomology of
// regular elements of a maximal torus, with a finite-field counting oracle.

#include "treg/arith.hpp"
#include "treg/cli.hpp"
#include "treg/cyclotomic.hpp"
#include "treg/formulas.hpp"
#include "treg/oracle.hpp"
#include "treg/partitions.hpp"
#include "treg/psalgebra.hpp"
#include "treg/qpoly.hpp"
#include "treg/rat.hpp"
#include "treg/reps.hpp"
