#pragma once

// Umbrella header for the brush library: exact brush numbers via optimal
// acyclic orientations, the cleaning process, Mycielski transforms, and the
// text/JSON tooling around them.

#include "brush/cleaning.hpp"
#include "brush/error.hpp"
#include "brush/generators.hpp"
#include "brush/graph.hpp"
#include "brush/io.hpp"
#include "brush/mycielski.hpp"
#include "brush/orientation.hpp"
#include "brush/report.hpp"
#include "brush/solver.hpp"
#include "brush/verify.hpp"
