#pragma once

#include "analysis.hpp"
#include "code.hpp"
#include "constructions.hpp"
#include "error.hpp"
#include "gf.hpp"
#include "io.hpp"
#include "linalg.hpp"
#include "sss.hpp"
#include "sweep.hpp"
