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

#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "mwkc/errors.hpp"
#include "mwkc/schedule.hpp"

using namespace mwkc;
using mwkc::testing::three_channel_schedule;

TEST_CASE("time points parse HH:MM and reject garbage") {
  CHECK(TimePoint::parse("10:30").minutes() == 630);
  CHECK(TimePoint::parse("8:00").minutes() == 480);
  CHECK(TimePoint::parse("00:00").minutes() == 0);
  CHECK(TimePoint::parse("24:00").minutes() == 1440);
  CHECK(TimePoint(75).to_string() == "01:15");
  for (const char* bad : {"", "10", "10:5", "25:00", "24:01", "10:60", "-1:00",
                          "ab:cd", "10:30:00"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(TimePoint::parse(bad), ParseError);
  }
  CHECK_THROWS_AS(TimePoint(1441), std::out_of_range);
}

TEST_CASE("csv row becomes one slot") {
  const auto s = parse_schedule(
      "channel,title,start,end,viewers\nNatGeo,Mission Everest,10:00,10:30,8\n",
      ScheduleFormat::kCsv);
  REQUIRE(s.slots.size() == 1);
  const auto& slot = s.slots[0];
  CHECK(slot.channel == "NatGeo");
  CHECK(slot.title == "Mission Everest");
  CHECK(slot.start.minutes() == 600);
  CHECK(slot.end.minutes() == 630);
  CHECK(slot.viewers == 8);
  CHECK(slot.slot_id == "NatGeo#1");
}

TEST_CASE("empty input gives an empty schedule") {
  CHECK(parse_schedule("", ScheduleFormat::kCsv).slots.empty());
  CHECK(parse_schedule("", ScheduleFormat::kJson).slots.empty());
  CHECK(parse_schedule("channel,title,start,end,viewers\n", ScheduleFormat::kCsv)
            .slots.empty());
  CHECK(parse_schedule(R"({"slots": []})", ScheduleFormat::kJson).slots.empty());
}

TEST_CASE("csv header may reorder columns and quote fields") {
  const auto s = parse_schedule(
      "viewers,start,end,title,channel,slot_id\r\n"
      "4,11:00,11:30,\"Wild, Orphan \"\"II\"\"\",NatGeo,N5\r\n",
      ScheduleFormat::kCsv);
  REQUIRE(s.slots.size() == 1);
  CHECK(s.slots[0].title == "Wild, Orphan \"II\"");
  CHECK(s.slots[0].slot_id == "N5");
}

TEST_CASE("parse errors carry the offending line") {
  const std::string header = "channel,title,start,end,viewers\n";
  auto line_of = [&](const std::string& body) -> std::size_t {
    try {
      parse_schedule(header + body, ScheduleFormat::kCsv);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("a,b,10:00,11:00,1\na,b,10:00\n") == 3);
  CHECK(line_of("a,b,10:00,11:00,1\na,c,9:0x,11:00,1\n") == 3);
  CHECK(line_of("a,b,10:00,11:00,-2\n") == 2);
  CHECK(line_of("a,b,10:00,11:00,many\n") == 2);
  CHECK_THROWS_AS(parse_schedule("channel,title,start\n", ScheduleFormat::kCsv),
                  ParseError);
  CHECK_THROWS_AS(
      parse_schedule("slot_id,channel,title,start,end,viewers\n"
                     "x,a,b,10:00,11:00,1\nx,a,c,11:00,12:00,1\n",
                     ScheduleFormat::kCsv),
      ParseError);
}

TEST_CASE("json schema mirrors csv") {
  const auto s = parse_schedule(
      R"({"slots":[{"channel":"AXN","title":"Relic Hunter","start":"07:00","end":"08:00","viewers":3},
                   {"slot_id":"A12","channel":"AXN","title":"Late","start":"22:30","end":"24:00","viewers":2}]})",
      ScheduleFormat::kJson);
  REQUIRE(s.slots.size() == 2);
  CHECK(s.slots[0].slot_id == "AXN#1");
  CHECK(s.slots[1].slot_id == "A12");
  CHECK(s.slots[1].end.minutes() == 1440);
  CHECK_THROWS_AS(parse_schedule(R"({"slots":[{"channel":"A"}]})",
                                 ScheduleFormat::kJson),
                  ParseError);
  CHECK_THROWS_AS(parse_schedule(R"({"slots":[{"channel":"A","title":"t","start":"1:00","end":"2:00","viewers":-1}]})",
                                 ScheduleFormat::kJson),
                  ParseError);
  CHECK_THROWS_AS(parse_schedule("{not json", ScheduleFormat::kJson), ParseError);
}

TEST_CASE("serialize then parse reproduces random schedules") {
  std::mt19937_64 rng(20261014);
  std::uniform_int_distribution<int> minute(0, 1439);
  std::uniform_int_distribution<int> count(0, 12);
  std::uniform_int_distribution<int> viewers(0, 50);
  const std::vector<std::string> titles = {"News", "Film, late", "\"Quiz\"",
                                           "Line\nbreak", "Sport"};
  for (int trial = 0; trial < 100; ++trial) {
    ScheduleSet s;
    const int n = count(rng);
    for (int i = 0; i < n; ++i) {
      int a = minute(rng);
      int b = minute(rng) + 1;
      if (a > b) std::swap(a, b);
      s.slots.push_back({"s" + std::to_string(i), "ch" + std::to_string(i % 3),
                         titles[static_cast<std::size_t>(i) % titles.size()],
                         TimePoint(a), TimePoint(b), viewers(rng)});
    }
    for (auto fmt : {ScheduleFormat::kCsv, ScheduleFormat::kJson}) {
      CHECK(parse_schedule(serialize_schedule(s, fmt), fmt) == s);
    }
  }
}

TEST_CASE("reference three-channel schedule is clean") {
  const auto s = three_channel_schedule();
  CHECK(s.slots.size() == 54);
  CHECK(s.channels() == std::set<std::string>{"AXN", "Discovery", "NatGeo"});
  CHECK(validate_schedule(s).empty());
}

TEST_CASE("validation flags overlaps as warnings and bad slots as errors") {
  ScheduleSet s;
  s.slots.push_back({"a", "X", "t", TimePoint(540), TimePoint(600), 1});
  s.slots.push_back({"b", "X", "t", TimePoint(570), TimePoint(630), 1});
  s.slots.push_back({"c", "Y", "t", TimePoint(570), TimePoint(630), 1});
  s.slots.push_back({"d", "X", "t", TimePoint(600), TimePoint(660), 1});
  auto report = validate_schedule(s);
  REQUIRE(report.issues.size() == 2);
  CHECK(report.count(Severity::kWarning) == 2);
  CHECK_FALSE(report.has_errors());
  CHECK(report.issues[0].slot_ids == std::vector<std::string>{"a", "b"});
  CHECK(report.issues[1].slot_ids == std::vector<std::string>{"b", "d"});

  ScheduleSet zero;
  zero.slots.push_back({"z", "X", "t", TimePoint(1380), TimePoint(1380), 1});
  report = validate_schedule(zero);
  REQUIRE(report.issues.size() == 1);
  CHECK(report.issues[0].severity == Severity::kError);

  ScheduleSet wrap;
  wrap.slots.push_back({"w", "X", "t", TimePoint(1380), TimePoint(60), 1});
  CHECK(validate_schedule(wrap).has_errors());
  CHECK_THROWS_AS(to_intervals(wrap), std::invalid_argument);
}

TEST_CASE("to_intervals orders vertices and honours exclusions") {
  const auto s = three_channel_schedule();
  const auto all = to_intervals(s);
  CHECK(all.size() == 54);
  CHECK(all.total_weight() == 215);
  for (std::size_t i = 1; i < all.size(); ++i) {
    const auto& a = all.vertices[i - 1];
    const auto& b = all.vertices[i];
    CHECK((a.start < b.start || (a.start == b.start && a.finish <= b.finish)));
  }
  CHECK(all.slot_ids.front() == "A1");

  const auto without = to_intervals(s, {"A6"});
  CHECK(without.size() == 53);
  CHECK(without.total_weight() == 210);
  CHECK_FALSE(without.find_slot("A6").has_value());

  std::set<std::string> everything;
  for (const auto& slot : s.slots) everything.insert(slot.slot_id);
  CHECK(to_intervals(s, everything).empty());
  CHECK_THROWS_AS(to_intervals(s, {"Z9"}), UnknownReference);
}

TEST_CASE("conversion preserves count and weight on random clean schedules") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> len(1, 120);
  std::uniform_int_distribution<int> viewers(0, 9);
  for (int trial = 0; trial < 50; ++trial) {
    ScheduleSet s;
    std::int64_t viewers_kept = 0;
    std::set<std::string> excluded;
    for (int c = 0; c < 3; ++c) {
      int t = len(rng);
      for (int i = 0; t < 1300; ++i) {
        const int e = std::min(1440, t + len(rng));
        const std::string id = std::to_string(c) + "-" + std::to_string(i);
        const int w = viewers(rng);
        s.slots.push_back({id, "ch" + std::to_string(c), "p", TimePoint(t),
                           TimePoint(e), w});
        if (i % 4 == 1) {
          excluded.insert(id);
        } else {
          viewers_kept += w;
        }
        t = e;
      }
    }
    REQUIRE(validate_schedule(s).empty());
    const auto inst = to_intervals(s, excluded);
    CHECK(inst.size() == s.slots.size() - excluded.size());
    CHECK(inst.total_weight() == viewers_kept);
    for (const auto& v : inst.vertices) CHECK(v.start < v.finish);
  }
}
