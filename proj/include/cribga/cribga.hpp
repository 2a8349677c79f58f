#pragma once

#include "cribga/alphabet.hpp"
#include "cribga/corpus.hpp"
#include "cribga/crib.hpp"
#include "cribga/error.hpp"
#include "cribga/evolution.hpp"
#include "cribga/fitness.hpp"
#include "cribga/mapping.hpp"
#include "cribga/random.hpp"
#include "cribga/stats.hpp"
#include "cribga/text.hpp"
