#pragma once

#include "thdet/constants.hpp"
#include "thdet/determinants.hpp"
#include "thdet/ensemble.hpp"
#include "thdet/general_m.hpp"
#include "thdet/identities.hpp"
#include "thdet/matrix.hpp"
#include "thdet/operators.hpp"
#include "thdet/report.hpp"
#include "thdet/symbol.hpp"
