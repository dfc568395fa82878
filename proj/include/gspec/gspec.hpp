#pragma once

#include "gspec/campaign.hpp"
#include "gspec/enumerate.hpp"
#include "gspec/error.hpp"
#include "gspec/graph.hpp"
#include "gspec/graph6.hpp"
#include "gspec/polynomial.hpp"
#include "gspec/spectral.hpp"
#include "gspec/transforms.hpp"
