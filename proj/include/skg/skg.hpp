#pragma once

#include "skg/sgcore.hpp"
#include "skg/dimacs.hpp"
#include "skg/families.hpp"
#include "skg/random.hpp"
#include "skg/solver.hpp"
#include "skg/topo.hpp"
#include "skg/constructions.hpp"
#include "skg/matching.hpp"
#include "skg/generate.hpp"
#include "skg/report.hpp"
#include "skg/campaigns.hpp"
