#pragma once

// Umbrella header.

#include "hankel_lab/errors.hpp"
#include "hankel_lab/poly.hpp"
#include "hankel_lab/schroeder.hpp"
#include "hankel_lab/hankel.hpp"
#include "hankel_lab/lgv.hpp"
#include "hankel_lab/recurrence.hpp"
#include "hankel_lab/report.hpp"
#include "hankel_lab/io.hpp"
#include "hankel_lab/verify_all.hpp"
