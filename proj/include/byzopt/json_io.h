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


// JSON encodings of instances, schedules, matroids and prophet instances.

#ifndef BYZOPT_JSON_IO_H_
#define BYZOPT_JSON_IO_H_

#include <memory>
#include <optional>
#include <string>

#include "byzopt/matroid.h"
#include "byzopt/model.h"
#include "byzopt/prophet_instance.h"
#include "json.hpp"

namespace byzopt {

using Json = nlohmann::json;

struct InstanceFile {
  Instance instance;
  std::optional<ArrivalSchedule> schedule;
};

// {"d":int,"B":float,"items":[{"id","value","size","color"}],
//  "arrivals":[[time,id],...]}; "arrivals" is omitted without a schedule.
Json InstanceToJson(const Instance& instance,
                    const ArrivalSchedule* schedule = nullptr);
InstanceFile InstanceFromJson(const Json& j);

// {"kind":"uniform","r":int} or
// {"kind":"partition","blocks":[[ids],...],"caps":[int,...]}.
std::unique_ptr<Matroid> MatroidFromJson(const Json& j);

// {"B":float,"items":[{"size":[float],"dist":[[value,prob],...]}]}
Json ProphetToJson(const BaseProphetInstance& instance);
BaseProphetInstance ProphetFromJson(const Json& j);

// Throw ConfigError on I/O or parse failure.
Json ReadJsonFile(const std::string& path);
void WriteJsonFile(const std::string& path, const Json& j);

}  // namespace byzopt

#endif  // BYZOPT_JSON_IO_H_
