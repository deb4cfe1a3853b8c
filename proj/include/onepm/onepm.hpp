#pragma once

#include "onepm/bounds.hpp"
#include "onepm/charging.hpp"
#include "onepm/embedding.hpp"
#include "onepm/error.hpp"
#include "onepm/generators.hpp"
#include "onepm/graph.hpp"
#include "onepm/io.hpp"
#include "onepm/manifest.hpp"
#include "onepm/matching.hpp"
#include "onepm/rational.hpp"
