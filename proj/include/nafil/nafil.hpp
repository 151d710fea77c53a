#pragma once

#include "algebra.hpp"
#include "check_result.hpp"
#include "construct.hpp"
#include "latin.hpp"
#include "loop.hpp"
#include "properties.hpp"
#include "report.hpp"
#include "subloops.hpp"
#include "sweep.hpp"
#include "text_format.hpp"
#include "types.hpp"
