#pragma once

#include "uncstates/core.hpp"
#include "uncstates/special.hpp"
#include "uncstates/expm.hpp"
#include "uncstates/rep_spec.hpp"
#include "uncstates/fock.hpp"
#include "uncstates/reps.hpp"
#include "uncstates/states.hpp"
#include "uncstates/ous.hpp"
#include "uncstates/multimode.hpp"
#include "uncstates/uncertainty.hpp"
#include "uncstates/appendix_b.hpp"
#include "uncstates/complementarity.hpp"
#include "uncstates/dynamics.hpp"
