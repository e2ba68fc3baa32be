#pragma once

#include "alpha_classes.hpp"
#include "bar.hpp"
#include "catalog.hpp"
#include "cobar.hpp"
#include "em.hpp"
#include "errors.hpp"
#include "exactness.hpp"
#include "f2.hpp"
#include "filtration.hpp"
#include "graded_algebra.hpp"
#include "json_io.hpp"
#include "report.hpp"
#include "simplicial.hpp"
#include "steenrod.hpp"
#include "unstable_module.hpp"
#include "verify.hpp"
