#pragma once

#include "curvedim/arith.hpp"
#include "curvedim/classify.hpp"
#include "curvedim/core.hpp"
#include "curvedim/cremona.hpp"
#include "curvedim/degen.hpp"
#include "curvedim/engine.hpp"
#include "curvedim/oracle.hpp"
#include "curvedim/system.hpp"
#include "curvedim/tables.hpp"
