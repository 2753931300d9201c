#pragma once

// Word-statistics library: occurrence-count complexity (sigma), the power
// functional (lambda), prefix profiles, and an eventual-periodicity
// classifier for finite binary words.

#include "wordstat/bigcount.hpp"
#include "wordstat/classifier.hpp"
#include "wordstat/complexity.hpp"
#include "wordstat/csv.hpp"
#include "wordstat/generators.hpp"
#include "wordstat/lambda.hpp"
#include "wordstat/periodicity.hpp"
#include "wordstat/profile.hpp"
#include "wordstat/ratios.hpp"
#include "wordstat/runs.hpp"
#include "wordstat/sigma.hpp"
#include "wordstat/suffix_automaton.hpp"
#include "wordstat/svg.hpp"
#include "wordstat/word.hpp"
#include "wordstat/zfunction.hpp"
