#pragma once

// Umbrella header.

#include "fibsum/core.hpp"
#include "fibsum/format.hpp"
#include "fibsum/identities.hpp"
#include "fibsum/known_results.hpp"
#include "fibsum/power.hpp"
#include "fibsum/search.hpp"
#include "fibsum/sequence.hpp"
#include "fibsum/verify.hpp"
