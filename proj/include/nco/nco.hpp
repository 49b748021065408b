#ifndef NCO_NCO_HPP
#define NCO_NCO_HPP

// Noncrossing-configuration operad workbench: coloured syntax trees,
// enveloping operads of coloured operads, the operad of bicoloured
// noncrossing configurations and its bubble decomposition, rewriting and
// presentation verification, and exact Hilbert-series arithmetic.

#include "nco/bubble.hpp"
#include "nco/colour.hpp"
#include "nco/dual.hpp"
#include "nco/envelope.hpp"
#include "nco/geometry.hpp"
#include "nco/model.hpp"
#include "nco/presentations.hpp"
#include "nco/report.hpp"
#include "nco/rewrite.hpp"
#include "nco/series.hpp"
#include "nco/tree.hpp"
#include "nco/util.hpp"
#include "nco/workbench.hpp"

#endif
