#ifndef CKPOLAR_CKPOLAR_HPP
#define CKPOLAR_CKPOLAR_HPP

#include "ckpolar/errors.hpp"
#include "ckpolar/rational.hpp"
#include "ckpolar/matrix.hpp"
#include "ckpolar/subspace.hpp"
#include "ckpolar/quadric.hpp"
#include "ckpolar/absolute_figure.hpp"
#include "ckpolar/polar_variety.hpp"
#include "ckpolar/tangency.hpp"
#include "ckpolar/motions.hpp"
#include "ckpolar/oracle.hpp"

#endif
