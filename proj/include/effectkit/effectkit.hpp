#pragma once

// Umbrella header.

#include "effectkit/canonical.hpp"
#include "effectkit/classify.hpp"
#include "effectkit/compress.hpp"
#include "effectkit/effect_algebra.hpp"
#include "effectkit/enumerate.hpp"
#include "effectkit/heyting.hpp"
#include "effectkit/hmv.hpp"
#include "effectkit/io.hpp"
#include "effectkit/measures.hpp"
#include "effectkit/mv.hpp"
#include "effectkit/order.hpp"
#include "effectkit/report.hpp"
#include "effectkit/unigroup.hpp"
#include "effectkit/zoo.hpp"
