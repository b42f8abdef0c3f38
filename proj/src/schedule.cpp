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

#include "mwkc/schedule.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include <json.hpp>

#include "mwkc/errors.hpp"

namespace mwkc {

namespace {

using nlohmann::json;

constexpr std::array<std::string_view, 5> kRequiredColumns = {
    "channel", "title", "start", "end", "viewers"};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <typename Int>
std::optional<Int> parse_int(std::string_view s) {
  Int value{};
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (ec != std::errc() || ptr != end || s.empty()) return std::nullopt;
  return value;
}

// One CSV record with the line it starts on. Quoted fields may embed
// separators, doubled quotes and newlines.
struct CsvRecord {
  std::size_t line = 0;
  std::vector<std::string> fields;
};

std::vector<CsvRecord> split_csv(std::string_view text) {
  std::vector<CsvRecord> records;
  std::size_t line = 1;
  std::size_t i = 0;
  while (i < text.size()) {
    CsvRecord rec;
    rec.line = line;
    std::string field;
    bool quoted = false;
    bool done = false;
    bool any = false;
    while (i < text.size() && !done) {
      const char c = text[i];
      if (quoted) {
        if (c == '"') {
          if (i + 1 < text.size() && text[i + 1] == '"') {
            field.push_back('"');
            ++i;
          } else {
            quoted = false;
          }
        } else {
          if (c == '\n') ++line;
          field.push_back(c);
        }
      } else if (c == '"') {
        quoted = true;
        any = true;
      } else if (c == ',') {
        rec.fields.push_back(std::move(field));
        field.clear();
        any = true;
      } else if (c == '\n') {
        ++line;
        done = true;
      } else if (c != '\r') {
        field.push_back(c);
        any = true;
      }
      ++i;
    }
    if (quoted) throw ParseError("unterminated quoted field", rec.line);
    rec.fields.push_back(std::move(field));
    // Blank lines carry no record.
    if (any) records.push_back(std::move(rec));
  }
  return records;
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

class SlotCollector {
 public:
  void add(ProgrammeSlot slot, std::size_t line, bool explicit_id) {
    const int ordinal = ++per_channel_[slot.channel];
    if (!explicit_id) {
      slot.slot_id = slot.channel + "#" + std::to_string(ordinal);
    }
    if (slot.slot_id.empty()) throw ParseError("empty slot_id", line);
    if (!ids_.insert(slot.slot_id).second) {
      throw ParseError("duplicate slot_id '" + slot.slot_id + "'", line);
    }
    set_.slots.push_back(std::move(slot));
  }

  ScheduleSet take() { return std::move(set_); }

 private:
  ScheduleSet set_;
  std::map<std::string, int> per_channel_;
  std::unordered_set<std::string> ids_;
};

TimePoint parse_time_at(std::string_view text, std::size_t line) {
  try {
    return TimePoint::parse(text);
  } catch (const ParseError& e) {
    throw ParseError(e.what(), line);
  }
}

std::int64_t parse_viewers(std::string_view text, std::size_t line) {
  auto value = parse_int<std::int64_t>(trim(text));
  if (!value) {
    throw ParseError("viewers '" + std::string(text) + "' is not an integer",
                     line);
  }
  if (*value < 0) throw ParseError("negative viewers", line);
  return *value;
}

ScheduleSet parse_csv(std::string_view source) {
  auto records = split_csv(source);
  if (records.empty()) return {};

  const auto& header = records.front();
  std::map<std::string, std::size_t, std::less<>> column;
  for (std::size_t i = 0; i < header.fields.size(); ++i) {
    std::string name(trim(header.fields[i]));
    std::transform(name.begin(), name.end(), name.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    if (!column.emplace(name, i).second) {
      throw ParseError("duplicate column '" + name + "'", header.line);
    }
  }
  for (auto name : kRequiredColumns) {
    if (!column.contains(name)) {
      throw ParseError("header is missing column '" + std::string(name) + "'",
                       header.line);
    }
  }
  const auto id_col = column.find("slot_id");
  const bool has_ids = id_col != column.end();

  SlotCollector out;
  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto& rec = records[r];
    if (rec.fields.size() != header.fields.size()) {
      throw ParseError("expected " + std::to_string(header.fields.size()) +
                           " fields, found " +
                           std::to_string(rec.fields.size()),
                       rec.line);
    }
    auto field = [&](std::string_view name) {
      return std::string(trim(rec.fields[column.find(name)->second]));
    };
    ProgrammeSlot slot;
    if (has_ids) slot.slot_id = std::string(trim(rec.fields[id_col->second]));
    slot.channel = field("channel");
    slot.title = field("title");
    slot.start = parse_time_at(field("start"), rec.line);
    slot.end = parse_time_at(field("end"), rec.line);
    slot.viewers = parse_viewers(field("viewers"), rec.line);
    out.add(std::move(slot), rec.line, has_ids);
  }
  return out.take();
}

ScheduleSet parse_json(std::string_view source) {
  if (trim(source).empty()) return {};
  json doc;
  try {
    doc = json::parse(source);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), 0);
  }
  if (!doc.is_object() || !doc.contains("slots") || !doc["slots"].is_array()) {
    throw ParseError("expected an object with a \"slots\" array", 0);
  }
  SlotCollector out;
  std::size_t index = 0;
  for (const auto& rec : doc["slots"]) {
    const std::string where = "slot " + std::to_string(index);
    auto fail = [&](const std::string& what) -> ParseError {
      return ParseError(where + ": " + what, 0);
    };
    if (!rec.is_object()) throw fail("not an object");
    auto text = [&](const char* key) {
      if (!rec.contains(key) || !rec[key].is_string()) {
        throw fail(std::string("missing string field '") + key + "'");
      }
      return rec[key].get<std::string>();
    };
    ProgrammeSlot slot;
    const bool has_id = rec.contains("slot_id");
    if (has_id) slot.slot_id = text("slot_id");
    slot.channel = text("channel");
    slot.title = text("title");
    try {
      slot.start = TimePoint::parse(text("start"));
      slot.end = TimePoint::parse(text("end"));
    } catch (const ParseError& e) {
      throw fail(e.what());
    }
    if (!rec.contains("viewers") || !rec["viewers"].is_number_integer()) {
      throw fail("missing integer field 'viewers'");
    }
    slot.viewers = rec["viewers"].get<std::int64_t>();
    if (slot.viewers < 0) throw fail("negative viewers");
    try {
      out.add(std::move(slot), 0, has_id);
    } catch (const ParseError& e) {
      throw fail(e.what());
    }
    ++index;
  }
  return out.take();
}

}  // namespace

TimePoint::TimePoint(int minutes) : minutes_(minutes) {
  if (minutes < 0 || minutes > kMinutesPerDay) {
    throw std::out_of_range("time point outside [00:00, 24:00]");
  }
}

TimePoint TimePoint::parse(std::string_view text) {
  const auto t = trim(text);
  const auto colon = t.find(':');
  auto bad = [&] {
    return ParseError("unparseable time '" + std::string(text) + "'", 0);
  };
  if (colon == std::string_view::npos || colon == 0 || colon > 2 ||
      t.size() - colon != 3) {
    throw bad();
  }
  auto hours = parse_int<int>(t.substr(0, colon));
  auto mins = parse_int<int>(t.substr(colon + 1));
  if (!hours || !mins || *hours < 0 || *hours > 24 || *mins < 0 ||
      *mins > 59 || (*hours == 24 && *mins != 0)) {
    throw bad();
  }
  return TimePoint(*hours * 60 + *mins);
}

std::string TimePoint::to_string() const {
  std::string out(5, '0');
  const int h = minutes_ / 60;
  const int m = minutes_ % 60;
  out[0] = static_cast<char>('0' + h / 10);
  out[1] = static_cast<char>('0' + h % 10);
  out[2] = ':';
  out[3] = static_cast<char>('0' + m / 10);
  out[4] = static_cast<char>('0' + m % 10);
  return out;
}

std::set<std::string> ScheduleSet::channels() const {
  std::set<std::string> out;
  for (const auto& s : slots) out.insert(s.channel);
  return out;
}

const ProgrammeSlot* ScheduleSet::find(std::string_view slot_id) const {
  for (const auto& s : slots) {
    if (s.slot_id == slot_id) return &s;
  }
  return nullptr;
}

ScheduleFormat parse_format(std::string_view name) {
  if (name == "csv") return ScheduleFormat::kCsv;
  if (name == "json") return ScheduleFormat::kJson;
  throw std::invalid_argument("unknown schedule format '" + std::string(name) +
                              "'");
}

ScheduleSet parse_schedule(std::string_view source, ScheduleFormat format) {
  return format == ScheduleFormat::kCsv ? parse_csv(source)
                                        : parse_json(source);
}

std::string serialize_schedule(const ScheduleSet& schedule,
                               ScheduleFormat format) {
  if (format == ScheduleFormat::kJson) {
    json slots = json::array();
    for (const auto& s : schedule.slots) {
      slots.push_back({{"slot_id", s.slot_id},
                       {"channel", s.channel},
                       {"title", s.title},
                       {"start", s.start.to_string()},
                       {"end", s.end.to_string()},
                       {"viewers", s.viewers}});
    }
    return json{{"slots", slots}}.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "slot_id,channel,title,start,end,viewers\n";
  for (const auto& s : schedule.slots) {
    out << csv_escape(s.slot_id) << ',' << csv_escape(s.channel) << ','
        << csv_escape(s.title) << ',' << s.start.to_string() << ','
        << s.end.to_string() << ',' << s.viewers << '\n';
  }
  return out.str();
}

bool ValidationReport::has_errors() const {
  return count(Severity::kError) > 0;
}

std::size_t ValidationReport::count(Severity severity) const {
  return static_cast<std::size_t>(
      std::count_if(issues.begin(), issues.end(), [&](const auto& issue) {
        return issue.severity == severity;
      }));
}

ValidationReport validate_schedule(const ScheduleSet& schedule) {
  ValidationReport report;
  std::map<std::string, std::vector<const ProgrammeSlot*>> by_channel;
  for (const auto& s : schedule.slots) {
    if (!(s.start < s.end)) {
      report.issues.push_back(
          {Severity::kError,
           {s.slot_id},
           "slot " + s.slot_id + " (" + s.start.to_string() + "-" +
               s.end.to_string() +
               ") must start before it ends and may not cross midnight"});
      continue;
    }
    by_channel[s.channel].push_back(&s);
  }
  for (auto& [channel, slots] : by_channel) {
    std::stable_sort(slots.begin(), slots.end(), [](auto* a, auto* b) {
      return a->start < b->start;
    });
    for (std::size_t i = 0; i < slots.size(); ++i) {
      for (std::size_t j = i + 1;
           j < slots.size() && slots[j]->start < slots[i]->end; ++j) {
        report.issues.push_back(
            {Severity::kWarning,
             {slots[i]->slot_id, slots[j]->slot_id},
             "slots " + slots[i]->slot_id + " and " + slots[j]->slot_id +
                 " overlap on channel " + channel});
      }
    }
  }
  return report;
}

IntervalInstance to_intervals(const ScheduleSet& schedule,
                              const std::set<std::string>& excluded) {
  for (const auto& id : excluded) {
    if (schedule.find(id) == nullptr) {
      throw UnknownReference("excluded slot '" + id + "' is not in the schedule");
    }
  }
  std::vector<const ProgrammeSlot*> kept;
  for (const auto& s : schedule.slots) {
    if (!(s.start < s.end)) {
      throw std::invalid_argument("slot " + s.slot_id +
                                  " does not satisfy start < end");
    }
    if (!excluded.contains(s.slot_id)) kept.push_back(&s);
  }
  std::sort(kept.begin(), kept.end(), [](auto* a, auto* b) {
    return std::tie(a->start, a->end, a->slot_id) <
           std::tie(b->start, b->end, b->slot_id);
  });
  IntervalInstance inst;
  inst.vertices.reserve(kept.size());
  inst.slot_ids.reserve(kept.size());
  for (const auto* s : kept) {
    inst.vertices.push_back({s->start.minutes(), s->end.minutes(), s->viewers});
    inst.slot_ids.push_back(s->slot_id);
  }
  return inst;
}

}  // namespace mwkc
