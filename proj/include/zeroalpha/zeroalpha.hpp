#pragma once

// Convenience include for the whole library.

#include "zeroalpha/bounds.hpp"
#include "zeroalpha/cli.hpp"
#include "zeroalpha/codes.hpp"
#include "zeroalpha/construction.hpp"
#include "zeroalpha/cyclotomic.hpp"
#include "zeroalpha/errors.hpp"
#include "zeroalpha/fields.hpp"
#include "zeroalpha/graph_types.hpp"
#include "zeroalpha/graphs.hpp"
#include "zeroalpha/groups.hpp"
#include "zeroalpha/linalg.hpp"
#include "zeroalpha/numeric.hpp"
#include "zeroalpha/optimality.hpp"
#include "zeroalpha/spectra.hpp"
