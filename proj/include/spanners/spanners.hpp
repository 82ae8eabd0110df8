#pragma once

#include "spanners/analysis.hpp"
#include "spanners/build.hpp"
#include "spanners/generate.hpp"
#include "spanners/geometry.hpp"
#include "spanners/io.hpp"
#include "spanners/lemmas.hpp"
#include "spanners/verify.hpp"
