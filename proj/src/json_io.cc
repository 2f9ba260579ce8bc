// Copyright 2026 The Authors.
//
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


#include "byzopt/json_io.h"

#include <fstream>

#include "byzopt/errors.h"

namespace byzopt {
namespace {

template <typename T>
T Field(const Json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key)) {
    throw ConfigError(std::string(what) + ": missing field \"" + key + "\"");
  }
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception& e) {
    throw ConfigError(std::string(what) + ": bad field \"" + key +
                      "\": " + e.what());
  }
}

}  // namespace

Json InstanceToJson(const Instance& instance, const ArrivalSchedule* schedule) {
  Json j;
  j["d"] = instance.d;
  j["B"] = instance.budget;
  Json items = Json::array();
  for (const Item& it : instance.items) {
    items.push_back({{"id", it.id},
                     {"value", it.value},
                     {"size", it.size},
                     {"color", it.green() ? "green" : "red"}});
  }
  j["items"] = std::move(items);
  if (schedule != nullptr) {
    Json arrivals = Json::array();
    for (const Arrival& a : schedule->arrivals) {
      arrivals.push_back(Json::array({a.time, a.id}));
    }
    j["arrivals"] = std::move(arrivals);
  }
  return j;
}

InstanceFile InstanceFromJson(const Json& j) {
  InstanceFile out;
  Instance& inst = out.instance;
  inst.d = Field<int>(j, "d", "instance");
  inst.budget = Field<double>(j, "B", "instance");
  const Json items = Field<Json>(j, "items", "instance");
  if (!items.is_array()) throw ConfigError("instance: \"items\" is not a list");
  for (const Json& ji : items) {
    Item it;
    it.id = Field<int>(ji, "id", "item");
    it.value = Field<double>(ji, "value", "item");
    it.size = Field<std::vector<double>>(ji, "size", "item");
    const std::string color = Field<std::string>(ji, "color", "item");
    if (color == "green") {
      it.color = Color::kGreen;
    } else if (color == "red") {
      it.color = Color::kRed;
    } else {
      throw ConfigError("item: color must be \"green\" or \"red\", got \"" +
                        color + "\"");
    }
    inst.items.push_back(std::move(it));
  }
  inst.Validate();
  if (j.contains("arrivals")) {
    ArrivalSchedule schedule;
    for (const Json& ja : j.at("arrivals")) {
      if (!ja.is_array() || ja.size() != 2) {
        throw ConfigError("instance: each arrival must be [time, id]");
      }
      schedule.arrivals.push_back({ja[0].get<double>(), ja[1].get<int>()});
    }
    ValidateSchedule(inst, schedule);
    out.schedule = std::move(schedule);
  }
  return out;
}

std::unique_ptr<Matroid> MatroidFromJson(const Json& j) {
  const std::string kind = Field<std::string>(j, "kind", "matroid");
  if (kind == "uniform") {
    return std::make_unique<UniformMatroid>(Field<int>(j, "r", "matroid"));
  }
  if (kind == "partition") {
    return std::make_unique<PartitionMatroid>(
        Field<std::vector<std::vector<int>>>(j, "blocks", "matroid"),
        Field<std::vector<int>>(j, "caps", "matroid"));
  }
  throw ConfigError("matroid: unknown kind \"" + kind + "\"");
}

Json ProphetToJson(const BaseProphetInstance& instance) {
  Json j;
  j["B"] = instance.budget;
  Json items = Json::array();
  for (const ProphetItem& it : instance.items) {
    Json dist = Json::array();
    for (const auto& [v, p] : it.dist) dist.push_back(Json::array({v, p}));
    items.push_back({{"size", it.size}, {"dist", std::move(dist)}});
  }
  j["items"] = std::move(items);
  return j;
}

BaseProphetInstance ProphetFromJson(const Json& j) {
  BaseProphetInstance inst;
  inst.budget = Field<double>(j, "B", "prophet instance");
  const Json items = Field<Json>(j, "items", "prophet instance");
  for (const Json& ji : items) {
    ProphetItem it;
    it.size = Field<std::vector<double>>(ji, "size", "prophet item");
    for (const Json& jd : Field<Json>(ji, "dist", "prophet item")) {
      if (!jd.is_array() || jd.size() != 2) {
        throw ConfigError("prophet item: dist entries must be [value, prob]");
      }
      it.dist.emplace_back(jd[0].get<double>(), jd[1].get<double>());
    }
    inst.items.push_back(std::move(it));
  }
  inst.d = inst.items.empty() ? 1 : static_cast<int>(inst.items[0].size.size());
  inst.Validate();
  return inst;
}

Json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ConfigError("cannot parse " + path + ": " + e.what());
  }
}

void WriteJsonFile(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write " + path);
  out << j.dump(2) << "\n";
  if (!out) throw ConfigError("write failed for " + path);
}

}  // namespace byzopt
