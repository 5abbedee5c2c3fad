#pragma once

#include "afrob/apx.hpp"
#include "afrob/arg_set.hpp"
#include "afrob/dot.hpp"
#include "afrob/error.hpp"
#include "afrob/framework.hpp"
#include "afrob/invariance.hpp"
#include "afrob/labelling.hpp"
#include "afrob/oracle.hpp"
#include "afrob/robustness.hpp"
#include "afrob/semantics.hpp"
