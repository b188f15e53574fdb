#pragma once

#include "qconc/concurrence.hpp"
#include "qconc/entropy.hpp"
#include "qconc/errors.hpp"
#include "qconc/fundamental_rep.hpp"
#include "qconc/half_integer.hpp"
#include "qconc/linalg.hpp"
#include "qconc/root_system.hpp"
#include "qconc/state_io.hpp"
#include "qconc/state_space.hpp"
#include "qconc/subspace_geometry.hpp"
