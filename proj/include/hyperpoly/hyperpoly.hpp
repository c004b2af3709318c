#ifndef HYPERPOLY_HYPERPOLY_HPP
#define HYPERPOLY_HYPERPOLY_HPP

#include "hyperpoly/claims.hpp"
#include "hyperpoly/combinat.hpp"
#include "hyperpoly/coregeom.hpp"
#include "hyperpoly/error.hpp"
#include "hyperpoly/graded.hpp"
#include "hyperpoly/io.hpp"
#include "hyperpoly/linalg.hpp"
#include "hyperpoly/momentmap.hpp"
#include "hyperpoly/poly.hpp"
#include "hyperpoly/presentations.hpp"
#include "hyperpoly/rational.hpp"

#endif  // HYPERPOLY_HYPERPOLY_HPP
