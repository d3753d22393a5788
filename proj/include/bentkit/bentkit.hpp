// SPDX-License-Identifier: Apache-2.0

/// Umbrella header.

#pragma once

#include "analysis.hpp"
#include "anf.hpp"
#include "boolean_function.hpp"
#include "constructions/construction2.hpp"
#include "constructions/corollaries.hpp"
#include "constructions/primary.hpp"
#include "constructions/resilient.hpp"
#include "constructions/secondary.hpp"
#include "errors.hpp"
#include "galois.hpp"
#include "oracle.hpp"
#include "random.hpp"
#include "subspace.hpp"
#include "truth_table_io.hpp"
#include "walsh.hpp"
