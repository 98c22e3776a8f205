#pragma once

#include "zerocycle/errors.hpp"
#include "zerocycle/poly.hpp"
#include "zerocycle/decompose.hpp"
#include "zerocycle/roots.hpp"
#include "zerocycle/permutation.hpp"
#include "zerocycle/tracking.hpp"
#include "zerocycle/linalg.hpp"
#include "zerocycle/puiseux.hpp"
#include "zerocycle/monodromy.hpp"
#include "zerocycle/cycles.hpp"
#include "zerocycle/abelian.hpp"
#include "zerocycle/laurent.hpp"
#include "zerocycle/applications.hpp"
#include "zerocycle/parse.hpp"
#include "zerocycle/serialize.hpp"
