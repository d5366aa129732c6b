#pragma once

// Exact-arithmetic invariants of the abelian-fibered families
// Y = (A x P^n)/H: lattice-point counts, Frobenius splitting types, Hodge and
// Betti numbers, equivariant weights, and the Hirzebruch--Riemann--Roch
// obstruction polynomial with its W_2(k) non-liftability verdict.

#include "mbf/bernoulli.hpp"
#include "mbf/cohomology.hpp"
#include "mbf/combinatorics.hpp"
#include "mbf/errors.hpp"
#include "mbf/obstruction.hpp"
#include "mbf/ppoly.hpp"
#include "mbf/rational.hpp"
#include "mbf/reference_table.hpp"
#include "mbf/series.hpp"
#include "mbf/weights.hpp"
