#pragma once

#include <subpower/analytic.hpp>
#include <subpower/checks.hpp>
#include <subpower/core.hpp>
#include <subpower/families.hpp>
#include <subpower/finitediff.hpp>
#include <subpower/numeric.hpp>
#include <subpower/oeis.hpp>
#include <subpower/transforms.hpp>
