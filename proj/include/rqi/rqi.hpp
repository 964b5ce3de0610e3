#pragma once

#include "rqi/closed_form.hpp"
#include "rqi/complementarity.hpp"
#include "rqi/error.hpp"
#include "rqi/fermion.hpp"
#include "rqi/measures.hpp"
#include "rqi/qmat.hpp"
#include "rqi/report.hpp"
#include "rqi/sweep.hpp"
#include "rqi/unruh.hpp"
