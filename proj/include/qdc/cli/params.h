// Copyright 2026 The qdc Authors.
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

#ifndef QDC_CLI_PARAMS_H_
#define QDC_CLI_PARAMS_H_

#include <map>
#include <string>
#include <vector>

#include "qdc/exact/rational.h"
#include "qdc/qeuler/mode.h"

namespace qdc::cli {

// Default working precision, overridden by QDE_PRECISION.
long DefaultPrecision();

// Evaluates a q specification: a sum of terms, each an integer, a
// fraction, "p" or "p^e", e.g. "1+p", "1+3", "4", "1+p^2", "-2".
Rational ParseQSpec(const std::string& text, long p);

// "symbolic", "rational:q=n/d" or "padic:p=3,K=32,q=1+p".
CoeffMode ParseMode(const std::string& text, long default_precision);

// One parameter point: name -> value text, in name order.
using ParamPoint = std::map<std::string, std::string>;

struct ParamAxis {
  std::string name;
  std::vector<std::string> values;
};

// Parses "n<=6,alpha=1..3,x=0|1/2,d=3". A bound "name<=v" (also "≤")
// runs from `lower_bounds[name]` (0 when absent) to v.
std::vector<ParamAxis> ParseParamSpec(
    const std::string& text, const std::map<std::string, long>& lower_bounds);

// Cartesian product of the axes, axes that are missing taken from
// `defaults`. The last axis varies fastest.
std::vector<ParamPoint> ExpandGrid(const std::vector<ParamAxis>& axes,
                                   const ParamPoint& defaults);

long ParamLong(const ParamPoint& point, const std::string& name);
Rational ParamRational(const ParamPoint& point, const std::string& name);

}  // namespace qdc::cli

#endif  // QDC_CLI_PARAMS_H_
