// Copyright 2026 The readacuity Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef READACUITY_SCHEDULE_HPP_
#define READACUITY_SCHEDULE_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "readacuity/condition.hpp"

namespace readacuity {

// k x k Latin square of condition indices. Even k gives the Williams
// construction (each ordered pair of neighbours appears once, balancing
// first-order carryover); odd k falls back to plain cyclic rows.
std::vector<std::vector<std::size_t>> latin_square(std::size_t k);

// Row p of the result is participant p's condition order: row p mod k of
// `latin_square(k)`, so every block of k participants is fully balanced.
// Throws ValidationError for zero participants or no conditions.
std::vector<std::vector<Condition>> build_schedule(
    std::size_t participants, const std::vector<Condition>& conditions);

// "P01", "P02", ... (zero padded to at least two digits).
std::string participant_label(std::size_t index, std::size_t participants);

// participant_id,position,language,display,resolution_level
std::string schedule_csv(const std::vector<std::vector<Condition>>& schedule);

}  // namespace readacuity

#endif  // READACUITY_SCHEDULE_HPP_
