#pragma once

// Real orientable equipments of algebraic curves as swelling Coxeter systems:
// closed-form genus and oval counts, isomorphism testing, extremal families,
// exhaustive enumeration, and an independent surface-gluing oracle.

#include "realforms/errors.hpp"
#include "realforms/group.hpp"
#include "realforms/swelling.hpp"
#include "realforms/equipment.hpp"
#include "realforms/oracle.hpp"
#include "realforms/search.hpp"
#include "realforms/json_io.hpp"
