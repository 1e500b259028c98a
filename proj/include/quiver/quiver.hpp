#pragma once

#include "quiver/arith.hpp"
#include "quiver/canonical.hpp"
#include "quiver/classification.hpp"
#include "quiver/core.hpp"
#include "quiver/error.hpp"
#include "quiver/essdim.hpp"
#include "quiver/ff_oracle.hpp"
#include "quiver/quiver_file.hpp"
#include "quiver/rational.hpp"
#include "quiver/roots.hpp"
