#pragma once

#include "dioph/applications.hpp"
#include "dioph/birational.hpp"
#include "dioph/elliptic_curve.hpp"
#include "dioph/rational.hpp"
#include "dioph/search.hpp"
#include "dioph/solvers.hpp"
