#pragma once

#include "lagsel/error.hpp"
#include "lagsel/rational.hpp"
#include "lagsel/matrix.hpp"
#include "lagsel/subspace.hpp"
#include "lagsel/presymplectic.hpp"
#include "lagsel/schubert.hpp"
#include "lagsel/lie.hpp"
#include "lagsel/probe.hpp"
