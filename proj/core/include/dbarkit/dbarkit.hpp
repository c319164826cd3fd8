#pragma once

#include "dbarkit/bargmann.hpp"
#include "dbarkit/cauchy.hpp"
#include "dbarkit/diff.hpp"
#include "dbarkit/error.hpp"
#include "dbarkit/field.hpp"
#include "dbarkit/grid.hpp"
#include "dbarkit/identity.hpp"
#include "dbarkit/moments.hpp"
#include "dbarkit/quadrature.hpp"
#include "dbarkit/solver.hpp"
#include "dbarkit/testfn.hpp"
#include "dbarkit/weight.hpp"
