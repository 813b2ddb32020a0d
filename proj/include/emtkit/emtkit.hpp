#pragma once

/// @file emtkit.hpp
/// @brief Umbrella header.

#include "emtkit/adjunction.hpp"
#include "emtkit/cats.hpp"
#include "emtkit/enumerate.hpp"
#include "emtkit/functors.hpp"
#include "emtkit/generator.hpp"
#include "emtkit/json_io.hpp"
#include "emtkit/space.hpp"
#include "emtkit/theorem_b.hpp"
