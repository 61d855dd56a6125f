#pragma once

#include "fourpoint/error.hpp"
#include "fourpoint/forms.hpp"
#include "fourpoint/invariants.hpp"
#include "fourpoint/moebius.hpp"
#include "fourpoint/numerics.hpp"
#include "fourpoint/shape.hpp"
