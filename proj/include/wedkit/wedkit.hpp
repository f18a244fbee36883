#ifndef WEDKIT_WEDKIT_HPP
#define WEDKIT_WEDKIT_HPP

#include <wedkit/rational.hpp>
#include <wedkit/matrix.hpp>
#include <wedkit/subspace.hpp>
#include <wedkit/polynomial.hpp>
#include <wedkit/algebra.hpp>
#include <wedkit/wedderburn.hpp>
#include <wedkit/quiver.hpp>
#include <wedkit/trace.hpp>
#include <wedkit/ga_reps.hpp>

#endif  // WEDKIT_WEDKIT_HPP
