#pragma once

#include "wheel/closed_form.hpp"
#include "wheel/exact.hpp"
#include "wheel/linalg.hpp"
#include "wheel/matrix.hpp"
#include "wheel/montecarlo.hpp"
#include "wheel/multigraph.hpp"
#include "wheel/oracle.hpp"
#include "wheel/sequences.hpp"
#include "wheel/wheel_model.hpp"
