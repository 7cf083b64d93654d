#pragma once

#include "dressian/error.hpp"
#include "dressian/fan.hpp"
#include "dressian/io.hpp"
#include "dressian/linalg.hpp"
#include "dressian/lp.hpp"
#include "dressian/matroid.hpp"
#include "dressian/parallel.hpp"
#include "dressian/polytope.hpp"
#include "dressian/rational.hpp"
#include "dressian/subdivision.hpp"
#include "dressian/tropical.hpp"
