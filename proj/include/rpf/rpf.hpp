#pragma once

#include "rpf/magnitude.hpp"
#include "rpf/dense.hpp"
#include "rpf/analysis.hpp"
#include "rpf/classed.hpp"
#include "rpf/catalog.hpp"
#include "rpf/events.hpp"
#include "rpf/compose.hpp"
#include "rpf/bayes.hpp"
#include "rpf/limits.hpp"
#include "rpf/document.hpp"
