#pragma once

#include "movcone/arith.hpp"
#include "movcone/cones.hpp"
#include "movcone/errors.hpp"
#include "movcone/lattice.hpp"
#include "movcone/nested.hpp"
#include "movcone/pell.hpp"
#include "movcone/seshadri.hpp"
