#pragma once

#include "doat/graph.hpp"
#include "doat/decomposition.hpp"
#include "doat/cycle_diameter.hpp"
#include "doat/unicycle_diameter.hpp"
#include "doat/splitmix.hpp"
#include "doat/shortcut_oracle.hpp"
#include "doat/augment.hpp"
#include "doat/generate.hpp"
