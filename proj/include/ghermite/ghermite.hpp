#ifndef GHERMITE_GHERMITE_HPP
#define GHERMITE_GHERMITE_HPP

#include "ghermite/rational.hpp"
#include "ghermite/mu.hpp"
#include "ghermite/poly.hpp"
#include "ghermite/hermite.hpp"
#include "ghermite/exact.hpp"
#include "ghermite/efun.hpp"
#include "ghermite/quadrature.hpp"
#include "ghermite/transform.hpp"
#include "ghermite/heat.hpp"
#include "ghermite/translate.hpp"
#include "ghermite/oscillator.hpp"
#include "ghermite/verify.hpp"

#endif  // GHERMITE_GHERMITE_HPP
