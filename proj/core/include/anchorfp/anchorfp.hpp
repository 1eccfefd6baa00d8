#pragma once

#include "anchorfp/certify.hpp"
#include "anchorfp/convex_set.hpp"
#include "anchorfp/experiment.hpp"
#include "anchorfp/matrix.hpp"
#include "anchorfp/operators.hpp"
#include "anchorfp/point.hpp"
#include "anchorfp/rng.hpp"
#include "anchorfp/schedule.hpp"
#include "anchorfp/sequence_lemmas.hpp"
#include "anchorfp/solvers.hpp"
#include "anchorfp/trace.hpp"
