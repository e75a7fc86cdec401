#pragma once

#include "octvec/array.hpp"
#include "octvec/bench.hpp"
#include "octvec/broadcast.hpp"
#include "octvec/core.hpp"
#include "octvec/elementwise.hpp"
#include "octvec/errors.hpp"
#include "octvec/format.hpp"
#include "octvec/idioms.hpp"
#include "octvec/image.hpp"
#include "octvec/indexing.hpp"
#include "octvec/linalg.hpp"
#include "octvec/rearrange.hpp"
#include "octvec/reduce.hpp"
#include "octvec/scans.hpp"
#include "octvec/shape.hpp"
