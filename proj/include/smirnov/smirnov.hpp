#ifndef SMIRNOV_SMIRNOV_HPP
#define SMIRNOV_SMIRNOV_HPP

// Convenience header: everything except the CLI.
#include "polynomial.hpp"
#include "operators.hpp"
#include "roots.hpp"
#include "circle.hpp"
#include "catalog.hpp"
#include "sharpness.hpp"
#include "rng.hpp"
#include "generate.hpp"
#include "reductions.hpp"
#include "campaign.hpp"
#include "io.hpp"

#endif
