#pragma once

#include "qlab/cover.hpp"
#include "qlab/dot_io.hpp"
#include "qlab/dual.hpp"
#include "qlab/errors.hpp"
#include "qlab/graded.hpp"
#include "qlab/iso.hpp"
#include "qlab/json_io.hpp"
#include "qlab/koszul.hpp"
#include "qlab/loewy.hpp"
#include "qlab/matrix.hpp"
#include "qlab/mckay.hpp"
#include "qlab/poly.hpp"
#include "qlab/quiver.hpp"
#include "qlab/rational.hpp"
#include "qlab/trivext.hpp"

namespace qlab {
inline constexpr const char* kVersion = "0.1.0";
}
