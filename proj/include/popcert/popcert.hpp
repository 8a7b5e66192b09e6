#pragma once

#include "popcert/certify.hpp"
#include "popcert/convex.hpp"
#include "popcert/criterion.hpp"
#include "popcert/errors.hpp"
#include "popcert/families.hpp"
#include "popcert/interpolation.hpp"
#include "popcert/io.hpp"
#include "popcert/karamata.hpp"
#include "popcert/random.hpp"
#include "popcert/rational.hpp"
#include "popcert/zerosum.hpp"
