#pragma once

#include "tempo/rational.hpp"
#include "tempo/timed_word.hpp"
#include "tempo/guard.hpp"
#include "tempo/automaton.hpp"
#include "tempo/text_format.hpp"
#include "tempo/membership.hpp"
#include "tempo/determinism.hpp"
#include "tempo/linear.hpp"
#include "tempo/stopwatch.hpp"
#include "tempo/regions.hpp"
#include "tempo/shuffle.hpp"
#include "tempo/constructions.hpp"
#include "tempo/sampling.hpp"
#include "tempo/universality.hpp"
