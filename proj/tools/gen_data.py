#!/usr/bin/env python3
# SPDX-License-Identifier: Apache-2.0
#
# vlcsim: stochastic channel simulator for indoor visible light communication
# Copyright (C) 2026 The vlcsim authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
# ------------------------------------------------------------------------
"""Writes the bundled spectral tables (data/spectra/*.csv), the matching
embedded header include/vlcsim/spectra_data.hpp, and the narrow-beam
luminous intensity grid (data/patterns/narrow_beam.csv).

The curves are smooth synthetic stand-ins shaped like typical LED emission
spectra and indoor material reflectances; they are not measured data.
"""

import argparse
import math
from pathlib import Path

WAVELENGTHS = list(range(380, 781))


def gauss(w, mu, sigma):
    return math.exp(-0.5 * ((w - mu) / sigma) ** 2)


def logistic(w, mid, width):
    return 1.0 / (1.0 + math.exp(-(w - mid) / width))


LEDS = {
    "white": lambda w: gauss(w, 450, 10) + 0.6 * gauss(w, 560, 50),
    "red": lambda w: gauss(w, 630, 10),
    "green": lambda w: gauss(w, 525, 15),
    "blue": lambda w: gauss(w, 465, 10),
}

MATERIALS = {
    "floor": lambda w: 0.20 + 0.35 * logistic(w, 560, 60),
    "pine_wood": lambda w: 0.15 + 0.50 * logistic(w, 550, 35),
    "plaster": lambda w: 0.75 + 0.10 * logistic(w, 500, 80) - 0.03 * gauss(w, 420, 25),
    "plate_glass": lambda w: 0.08 + 0.01 * gauss(w, 550, 120),
}


def table(fn):
    return [round(fn(w), 6) for w in WAVELENGTHS]


def write_csv(path, values):
    with open(path, "w", encoding="utf-8") as f:
        f.write("wavelength_nm,value\n")
        for w, v in zip(WAVELENGTHS, values):
            f.write(f"{w},{v:.6f}\n")


def write_header(path, leds, materials):
    lines = [
        "// SPDX-License-Identifier: Apache-2.0",
        "//",
        "// vlcsim: stochastic channel simulator for indoor visible light communication",
        "// Copyright (C) 2026 The vlcsim authors",
        "//",
        '// Licensed under the Apache License, Version 2.0 (the "License");',
        "// you may not use this file except in compliance with the License.",
        "// You may obtain a copy of the License at",
        "// http://www.apache.org/licenses/LICENSE-2.0",
        "//",
        "// Unless required by applicable law or agreed to in writing, software",
        '// distributed under the License is distributed on an "AS IS" BASIS,',
        "// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.",
        "// See the License for the specific language governing permissions and",
        "// limitations under the License.",
        "// ------------------------------------------------------------------------",
        "",
        "// Generated by tools/gen_data.py; do not edit.",
        "",
        "#pragma once",
        "",
        "#include <array>",
        "#include <cstddef>",
        "#include <string_view>",
        "",
        "namespace vlcsim::spectra_data {",
        "",
        f"inline constexpr double kFirstWavelength = {WAVELENGTHS[0]}.0;",
        f"inline constexpr std::size_t kSamples = {len(WAVELENGTHS)};",
        "",
        "struct Table",
        "{",
        "    std::string_view name;",
        "    std::array<double, kSamples> values;",
        "};",
        "",
    ]

    def emit(kind, items):
        lines.append(f"inline constexpr std::array<Table, {len(items)}> k{kind} = {{{{")
        for name, values in items.items():
            lines.append(f'    {{"{name}", {{')
            for k in range(0, len(values), 8):
                chunk = ", ".join(f"{v:.6f}" for v in values[k:k + 8])
                lines.append(f"        {chunk},")
            lines.append("    }},")
        lines.append("}};")
        lines.append("")

    emit("Leds", leds)
    emit("Materials", materials)
    lines.append("} // namespace vlcsim::spectra_data")
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def write_narrow_beam(path, half_angle_deg=20.0):
    # Same grid as vlcsim::gaussian_beam_grid(20.0): 1 degree forward hemisphere.
    with open(path, "w", encoding="utf-8") as f:
        f.write("elevation_deg,azimuth_deg,intensity\n")
        for el in range(-90, 91):
            for az in range(-90, 91):
                c = math.cos(math.radians(el)) * math.cos(math.radians(az))
                theta = math.degrees(math.acos(max(-1.0, min(1.0, c))))
                value = 1000.0 * math.exp(-math.log(2.0) * (theta / half_angle_deg) ** 2)
                f.write(f"{el},{az},{value:.6f}\n")


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--root", default=Path(__file__).resolve().parent.parent, type=Path)
    args = parser.parse_args()

    leds = {name: table(fn) for name, fn in LEDS.items()}
    materials = {name: table(fn) for name, fn in MATERIALS.items()}
    out = args.root / "data" / "spectra"
    out.mkdir(parents=True, exist_ok=True)
    for name, values in leds.items():
        write_csv(out / f"led_{name}.csv", values)
    for name, values in materials.items():
        write_csv(out / f"material_{name}.csv", values)
    write_header(args.root / "include" / "vlcsim" / "spectra_data.hpp", leds, materials)
    patterns = args.root / "data" / "patterns"
    patterns.mkdir(parents=True, exist_ok=True)
    write_narrow_beam(patterns / "narrow_beam.csv")


if __name__ == "__main__":
    main()
