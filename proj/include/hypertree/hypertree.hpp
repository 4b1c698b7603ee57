#pragma once

#include "hypertree/canonical.hpp"
#include "hypertree/complex.hpp"
#include "hypertree/enumerate.hpp"
#include "hypertree/error.hpp"
#include "hypertree/io.hpp"
#include "hypertree/parallel.hpp"
#include "hypertree/reconstruct.hpp"
#include "hypertree/tree.hpp"
#include "hypertree/verify.hpp"
