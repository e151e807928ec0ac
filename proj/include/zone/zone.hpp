#pragma once

#include "zone/bench.hpp"
#include "zone/canonical.hpp"
#include "zone/cell.hpp"
#include "zone/chains.hpp"
#include "zone/check.hpp"
#include "zone/engine.hpp"
#include "zone/generate.hpp"
#include "zone/geometry.hpp"
#include "zone/io.hpp"
#include "zone/oracle.hpp"
#include "zone/rational.hpp"
#include "zone/svg.hpp"
#include "zone/trace.hpp"
