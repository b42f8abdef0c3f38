// Copyright 2026 The mwkc Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Programme schedules: ingestion, validation and conversion to intervals.

#ifndef MWKC_SCHEDULE_HPP
#define MWKC_SCHEDULE_HPP

#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "mwkc/instance.hpp"

namespace mwkc {

//! Minutes since 00:00 on a single day, 0..1440 inclusive.
class TimePoint {
 public:
  static constexpr int kMinutesPerDay = 1440;

  constexpr TimePoint() = default;
  //! Throws std::out_of_range outside [0, 1440].
  explicit TimePoint(int minutes);

  //! Parses "HH:MM" (24-hour; "24:00" is end of day). Throws ParseError.
  static TimePoint parse(std::string_view text);

  constexpr int minutes() const { return minutes_; }
  //! Zero-padded "HH:MM".
  std::string to_string() const;

  friend constexpr auto operator<=>(TimePoint, TimePoint) = default;

 private:
  int minutes_ = 0;
};

struct ProgrammeSlot {
  std::string slot_id;
  std::string channel;
  std::string title;
  TimePoint start;
  TimePoint end;
  std::int64_t viewers = 0;

  friend bool operator==(const ProgrammeSlot&, const ProgrammeSlot&) = default;
};

struct ScheduleSet {
  std::vector<ProgrammeSlot> slots;

  //! Distinct channel names, sorted.
  std::set<std::string> channels() const;
  const ProgrammeSlot* find(std::string_view slot_id) const;

  friend bool operator==(const ScheduleSet&, const ScheduleSet&) = default;
};

enum class ScheduleFormat { kCsv, kJson };

//! "csv" / "json"; throws std::invalid_argument otherwise.
ScheduleFormat parse_format(std::string_view name);

/**
 * Reads a schedule in CSV or JSON form.
 *
 * CSV needs a header naming `channel,title,start,end,viewers` in any order,
 * optionally with a `slot_id` column. JSON is `{"slots": [...]}` with the
 * same keys. Missing slot ids become `<channel>#<n>` where n counts that
 * channel's slots from 1. Input order is preserved.
 */
ScheduleSet parse_schedule(std::string_view source, ScheduleFormat format);

//! Inverse of parse_schedule; always writes explicit slot ids.
std::string serialize_schedule(const ScheduleSet& schedule,
                               ScheduleFormat format);

enum class Severity { kWarning, kError };

struct ValidationIssue {
  Severity severity;
  std::vector<std::string> slot_ids;
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;

  bool empty() const { return issues.empty(); }
  bool has_errors() const;
  std::size_t count(Severity severity) const;
};

//! Flags zero/negative-length slots (ERROR) and same-channel overlaps
//! (WARNING). Never throws.
ValidationReport validate_schedule(const ScheduleSet& schedule);

/**
 * One vertex per slot not in `excluded`, ordered by (start, end, slot_id).
 *
 * Exclusion drops the slot entirely, which has the same optimum as giving
 * it zero weight. Throws UnknownReference for an excluded id not present in
 * the schedule and std::invalid_argument if a slot violates start < end.
 */
IntervalInstance to_intervals(const ScheduleSet& schedule,
                              const std::set<std::string>& excluded = {});

}  // namespace mwkc

#endif  // MWKC_SCHEDULE_HPP
