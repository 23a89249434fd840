// SPDX-License-Identifier: Apache-2.0
//
// vlcsim: stochastic channel simulator for indoor visible light communication
// Copyright (C) 2026 The vlcsim authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include "vlcsim/error.hpp"
#include "vlcsim/geometry.hpp"
#include "vlcsim/optics.hpp"
#include "vlcsim/spectra.hpp"
#include "vlcsim/random.hpp"
#include "vlcsim/scene.hpp"
#include "vlcsim/channel.hpp"
#include "vlcsim/statistics.hpp"
#include "vlcsim/config.hpp"
#include "vlcsim/result_table.hpp"
#include "vlcsim/experiments.hpp"
