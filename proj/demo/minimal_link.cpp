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

// Builds one default scene and prints the L11 link: LoS tap, tap count, DC gain and
// RMS delay spread.

#include <iostream>

#include "vlcsim/vlcsim.hpp"

int main()
{
    using namespace vlcsim;
    const ScenarioParams params;
    const Scene scene = build_scene(params, 1, 0);
    const SceneSnapshot snap = positions_at(scene, 0.0);
    const Cir cir = cir_snapshot(snap, 0, 0, 0);

    if (const auto los = cir.los())
        std::cout << "LoS power " << los->power << "  delay " << los->delay * 1e9 << " ns\n";
    std::cout << "taps " << cir.taps.size() << "  clusters " << scene.tx_clusters.size() << '\n';
    std::cout << "DC gain " << cir.dc_gain() << "  RMS delay spread " << rms_delay_spread(cir) * 1e9 << " ns\n";
    std::cout << "total received power " << total_received_power(snap, 0) << " W\n";
}
