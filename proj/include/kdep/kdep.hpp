#pragma once

// Umbrella header: the k-dependent-set approximation toolkit.

#include "kdep/approx.hpp"
#include "kdep/errors.hpp"
#include "kdep/gen.hpp"
#include "kdep/graph.hpp"
#include "kdep/io.hpp"
#include "kdep/matching.hpp"
#include "kdep/oracle.hpp"
#include "kdep/worstcase.hpp"
