#pragma once

#include "bernlab/error.hpp"
#include "bernlab/precision.hpp"

#include "bernlab/specialfn/cauchy.hpp"
#include "bernlab/specialfn/gamma.hpp"
#include "bernlab/specialfn/hilbert.hpp"
#include "bernlab/specialfn/quadrature.hpp"

#include "bernlab/remez/chebyshev.hpp"
#include "bernlab/remez/problem.hpp"
#include "bernlab/remez/solver.hpp"

#include "bernlab/conformal/maps.hpp"
#include "bernlab/conformal/profiles.hpp"

#include "bernlab/asymptotics/predict.hpp"
#include "bernlab/asymptotics/report.hpp"

#include "bernlab/curveverify/phase.hpp"
#include "bernlab/curveverify/profiles.hpp"
#include "bernlab/curveverify/signs.hpp"

#include "bernlab/conjecture/trigeq.hpp"

#include "bernlab/io/report_json.hpp"
