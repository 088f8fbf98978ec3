// Copyright 2026 The PAG Survival Authors
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

#ifndef PAG_PAG_HPP
#define PAG_PAG_HPP

#include "pag/allocation.hpp"
#include "pag/analysis.hpp"
#include "pag/constructors.hpp"
#include "pag/environment.hpp"
#include "pag/equilibrium.hpp"
#include "pag/errors.hpp"
#include "pag/evaluation.hpp"
#include "pag/oracle.hpp"
#include "pag/preference.hpp"
#include "pag/rational.hpp"
#include "pag/topology.hpp"

#endif  // PAG_PAG_HPP
