#pragma once

// Umbrella header for the flat maximal antichain library.

#include "flatac/error.hpp"
#include "flatac/setfam.hpp"
#include "flatac/antichain.hpp"
#include "flatac/lift.hpp"
#include "flatac/base_l2.hpp"
#include "flatac/shadow_disjoint.hpp"
#include "flatac/planner.hpp"
#include "flatac/characterize.hpp"
#include "flatac/oracle.hpp"
#include "flatac/document.hpp"
