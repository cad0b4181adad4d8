// Umbrella header.

#ifndef NSLAB_NSLAB_HPP_
#define NSLAB_NSLAB_HPP_

#include "classify.hpp"
#include "enumerate.hpp"
#include "error.hpp"
#include "factorization.hpp"
#include "lab.hpp"
#include "linalg.hpp"
#include "polynomial.hpp"
#include "record.hpp"
#include "report.hpp"
#include "resolution.hpp"
#include "semigroup.hpp"
#include "store.hpp"
#include "tangent_cone.hpp"

#endif  // NSLAB_NSLAB_HPP_
