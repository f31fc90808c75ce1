#pragma once

#include <string>
#include <utility>
#include <vector>

#include "odds/patterns.hpp"
#include "odds/rational.hpp"
#include "odds/sequence.hpp"

namespace odds {

// Accepted sequence documents:
//   {"p": ["1/2", "1/3", ...]}            explicit probabilities
//   {"iid": {"q": "100/101", "n": 1000}}  common failure probability
//   {"secretary": {"n": 100}}             records sequence, indices 2..n
// Throws std::invalid_argument on anything else.
OddsSequence sequence_from_json_text(const std::string& text);
OddsSequence sequence_from_json_file(const std::string& path);

// Schedule documents for bound reports: [{"L": 1200, "r": "1/1000"}, ...]
std::vector<std::pair<int, Rational>> schedule_from_json_text(const std::string& text);
std::vector<std::pair<int, Rational>> schedule_from_json_file(const std::string& path);

// {"k":4,"kind":"xi","vectors":[[1,0,0,0],...]} in enumeration order.
std::string pattern_set_to_json(const PatternSet& set);

// "2,5,9" outer-first, as accepted on the command line.
ThresholdVector thresholds_from_csv(const std::string& text);

std::string read_file(const std::string& path);

}  // namespace odds
