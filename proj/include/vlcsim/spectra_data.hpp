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

// Generated by tools/gen_data.py; do not edit.

#pragma once

#include <array>
#include <cstddef>
#include <string_view>

namespace vlcsim::spectra_data {

inline constexpr double kFirstWavelength = 380.0;
inline constexpr std::size_t kSamples = 401;

struct Table
{
    std::string_view name;
    std::array<double, kSamples> values;
};

inline constexpr std::array<Table, 4> kLeds = {{
    {"white", {
        0.000920, 0.000989, 0.001062, 0.001140, 0.001224, 0.001312, 0.001407, 0.001509,
        0.001616, 0.001731, 0.001853, 0.001983, 0.002122, 0.002269, 0.002425, 0.002591,
        0.002767, 0.002955, 0.003154, 0.003365, 0.003589, 0.003828, 0.004082, 0.004353,
        0.004642, 0.004953, 0.005289, 0.005654, 0.006055, 0.006500, 0.007001, 0.007574,
        0.008241, 0.009030, 0.009980, 0.011140, 0.012574, 0.014363, 0.016611, 0.019443,
        0.023014, 0.027509, 0.033146, 0.040179, 0.048893, 0.059610, 0.072674, 0.088452,
        0.107318, 0.129640, 0.155764, 0.185989, 0.220548, 0.259580, 0.303109, 0.351015,
        0.403019, 0.458669, 0.517326, 0.578170, 0.640212, 0.702307, 0.763194, 0.821532,
        0.875950, 0.925100, 0.967716, 1.002669, 1.029018, 1.046059, 1.053353, 1.050754,
        1.038413, 1.016770, 0.986533, 0.948647, 0.904244, 0.854594, 0.801047, 0.744978,
        0.687732, 0.630573, 0.574646, 0.520947, 0.470297, 0.423337, 0.380524, 0.342138,
        0.308301, 0.278992, 0.254075, 0.233318, 0.216423, 0.203049, 0.192827, 0.185385,
        0.180358, 0.177401, 0.176196, 0.176457, 0.177931, 0.180401, 0.183682, 0.187619,
        0.192085, 0.196979, 0.202217, 0.207736, 0.213484, 0.219423, 0.225522, 0.231758,
        0.238114, 0.244576, 0.251132, 0.257774, 0.264496, 0.271290, 0.278151, 0.285075,
        0.292055, 0.299088, 0.306168, 0.313291, 0.320452, 0.327645, 0.334866, 0.342109,
        0.349369, 0.356641, 0.363918, 0.371196, 0.378467, 0.385727, 0.392969, 0.400186,
        0.407373, 0.414523, 0.421631, 0.428688, 0.435689, 0.442628, 0.449497, 0.456290,
        0.463001, 0.469623, 0.476148, 0.482572, 0.488886, 0.495085, 0.501162, 0.507111,
        0.512925, 0.518598, 0.524125, 0.529498, 0.534713, 0.539763, 0.544643, 0.549347,
        0.553870, 0.558207, 0.562353, 0.566303, 0.570053, 0.573598, 0.576935, 0.580059,
        0.582966, 0.585654, 0.588119, 0.590358, 0.592369, 0.594149, 0.595696, 0.597007,
        0.598083, 0.598921, 0.599520, 0.599880, 0.600000, 0.599880, 0.599520, 0.598921,
        0.598083, 0.597007, 0.595696, 0.594149, 0.592369, 0.590358, 0.588119, 0.585654,
        0.582966, 0.580059, 0.576935, 0.573598, 0.570053, 0.566303, 0.562353, 0.558207,
        0.553870, 0.549347, 0.544643, 0.539763, 0.534713, 0.529498, 0.524125, 0.518598,
        0.512925, 0.507111, 0.501162, 0.495085, 0.488886, 0.482572, 0.476148, 0.469623,
        0.463001, 0.456290, 0.449497, 0.442628, 0.435689, 0.428688, 0.421631, 0.414523,
        0.407373, 0.400186, 0.392969, 0.385727, 0.378467, 0.371196, 0.363918, 0.356641,
        0.349369, 0.342109, 0.334866, 0.327645, 0.320451, 0.313290, 0.306167, 0.299086,
        0.292051, 0.285069, 0.278141, 0.271274, 0.264470, 0.257734, 0.251069, 0.244479,
        0.237966, 0.231535, 0.225187, 0.218925, 0.212753, 0.206671, 0.200684, 0.194791,
        0.188997, 0.183301, 0.177706, 0.172213, 0.166822, 0.161536, 0.156355, 0.151280,
        0.146310, 0.141448, 0.136692, 0.132043, 0.127502, 0.123067, 0.118739, 0.114518,
        0.110402, 0.106392, 0.102486, 0.098685, 0.094986, 0.091389, 0.087894, 0.084498,
        0.081201, 0.078002, 0.074898, 0.071889, 0.068974, 0.066150, 0.063417, 0.060772,
        0.058214, 0.055742, 0.053353, 0.051046, 0.048819, 0.046671, 0.044600, 0.042603,
        0.040680, 0.038828, 0.037045, 0.035330, 0.033681, 0.032096, 0.030573, 0.029111,
        0.027708, 0.026362, 0.025071, 0.023834, 0.022649, 0.021515, 0.020428, 0.019389,
        0.018396, 0.017446, 0.016539, 0.015673, 0.014846, 0.014057, 0.013305, 0.012588,
        0.011905, 0.011254, 0.010635, 0.010046, 0.009485, 0.008952, 0.008446, 0.007966,
        0.007509, 0.007076, 0.006665, 0.006276, 0.005907, 0.005557, 0.005226, 0.004913,
        0.004617, 0.004337, 0.004072, 0.003822, 0.003586, 0.003363, 0.003152, 0.002954,
        0.002767, 0.002591, 0.002425, 0.002269, 0.002122, 0.001983, 0.001853, 0.001731,
        0.001616, 0.001509, 0.001407, 0.001312, 0.001224, 0.001140, 0.001062, 0.000989,
        0.000920, 0.000856, 0.000796, 0.000740, 0.000688, 0.000639, 0.000593, 0.000551,
        0.000511, 0.000474, 0.000439, 0.000407, 0.000377, 0.000349, 0.000323, 0.000299,
        0.000276, 0.000255, 0.000236, 0.000218, 0.000201, 0.000186, 0.000171, 0.000158,
        0.000146, 0.000134, 0.000124, 0.000114, 0.000105, 0.000096, 0.000089, 0.000081,
        0.000075, 0.000069, 0.000063, 0.000058, 0.000053, 0.000049, 0.000045, 0.000041,
        0.000038,
    }},
    {"red", {
        0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000,
        0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000,
        0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000,
        0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000,
        0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000,
        0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000,
        0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000,
        0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000,
        0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000,
        0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000,
        0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000,
        0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000,
        0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000,
        0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000,
        0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000,
        0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000,
        0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000,
        0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000,
        0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000,
        0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000,
        0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000,
        0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000,
        0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000,
        0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000,
        0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000001, 0.000001, 0.000002,
        0.000004, 0.000006, 0.000010, 0.000016, 0.000025, 0.000040, 0.000063, 0.000097,
        0.000148, 0.000224, 0.000335, 0.000498, 0.000732, 0.001065, 0.001534, 0.002187,
        0.003089, 0.004318, 0.005976, 0.008189, 0.011109, 0.014921, 0.019841, 0.026121,
        0.034047, 0.043937, 0.056135, 0.071005, 0.088922, 0.110251, 0.135335, 0.164474,
        0.197899, 0.235746, 0.278037, 0.324652, 0.375311, 0.429557, 0.486752, 0.546074,
        0.606531, 0.666977, 0.726149, 0.782705, 0.835270, 0.882497, 0.923116, 0.955997,
        0.980199, 0.995012, 1.000000, 0.995012, 0.980199, 0.955997, 0.923116, 0.882497,
        0.835270, 0.782705, 0.726149, 0.666977, 0.606531, 0.546074, 0.486752, 0.429557,
        0.375311, 0.324652, 0.278037, 0.235746, 0.197899, 0.164474, 0.135335, 0.110251,
        0.088922, 0.071005, 0.056135, 0.043937, 0.034047, 0.026121, 0.019841, 0.014921,
        0.011109, 0.008189, 0.005976, 0.004318, 0.003089, 0.002187, 0.001534, 0.001065,
        0.000732, 0.000498, 0.000335, 0.000224, 0.000148, 0.000097, 0.000063, 0.000040,
        0.000025, 0.000016, 0.000010, 0.000006, 0.000004, 0.000002, 0.000001, 0.000001,
        0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000,
        0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000,
        0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000,
        0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000,
        0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000,
        0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000,
        0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000,
        0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000,
        0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000,
        0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000,
        0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000,
        0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000,
        0.000000,
    }},
    {"green", {
        0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000,
        0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000,
        0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000,
        0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000,
        0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000,
        0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000,
        0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000,
        0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000,
        0.000000, 0.000001, 0.000001, 0.000001, 0.000002, 0.000003, 0.000004, 0.000005,
        0.000007, 0.000010, 0.000014, 0.000019, 0.000025, 0.000034, 0.000047, 0.000063,
        0.000084, 0.000111, 0.000148, 0.000195, 0.000256, 0.000335, 0.000437, 0.000567,
        0.000732, 0.000941, 0.001204, 0.001534, 0.001946, 0.002457, 0.003089, 0.003866,
        0.004817, 0.005976, 0.007381, 0.009075, 0.011109, 0.013538, 0.016426, 0.019841,
        0.023860, 0.028566, 0.034047, 0.040401, 0.047729, 0.056135, 0.065729, 0.076621,
        0.088922, 0.102740, 0.118179, 0.135335, 0.154295, 0.175131, 0.197899, 0.222635,
        0.249352, 0.278037, 0.308647, 0.341108, 0.375311, 0.411112, 0.448332, 0.486752,
        0.526122, 0.566154, 0.606531, 0.646905, 0.686908, 0.726149, 0.764228, 0.800737,
        0.835270, 0.867428, 0.896830, 0.923116, 0.945959, 0.965069, 0.980199, 0.991151,
        0.997780, 1.000000, 0.997780, 0.991151, 0.980199, 0.965069, 0.945959, 0.923116,
        0.896830, 0.867428, 0.835270, 0.800737, 0.764228, 0.726149, 0.686908, 0.646905,
        0.606531, 0.566154, 0.526122, 0.486752, 0.448332, 0.411112, 0.375311, 0.341108,
        0.308647, 0.278037, 0.249352, 0.222635, 0.197899, 0.175131, 0.154295, 0.135335,
        0.118179, 0.102740, 0.088922, 0.076621, 0.065729, 0.056135, 0.047729, 0.040401,
        0.034047, 0.028566, 0.023860, 0.019841, 0.016426, 0.013538, 0.011109, 0.009075,
        0.007381, 0.005976, 0.004817, 0.003866, 0.003089, 0.002457, 0.001946, 0.001534,
        0.001204, 0.000941, 0.000732, 0.000567, 0.000437, 0.000335, 0.000256, 0.000195,
        0.000148, 0.000111, 0.000084, 0.000063, 0.000047, 0.000034, 0.000025, 0.000019,
        0.000014, 0.000010, 0.000007, 0.000005, 0.000004, 0.000003, 0.000002, 0.000001,
        0.000001, 0.000001, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000,
        0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000,
        0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000,
        0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000,
        0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000,
        0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000,
        0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000,
        0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000,
        0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000,
        0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000,
        0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000,
        0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000,
        0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000,
        0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000,
        0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000,
        0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000,
        0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000,
        0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000,
        0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000,
        0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000,
        0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000,
        0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000,
        0.000000,
    }},
    {"blue", {
        0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000,
        0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000,
        0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000,
        0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000,
        0.000001, 0.000001, 0.000002, 0.000004, 0.000006, 0.000010, 0.000016, 0.000025,
        0.000040, 0.000063, 0.000097, 0.000148, 0.000224, 0.000335, 0.000498, 0.000732,
        0.001065, 0.001534, 0.002187, 0.003089, 0.004318, 0.005976, 0.008189, 0.011109,
        0.014921, 0.019841, 0.026121, 0.034047, 0.043937, 0.056135, 0.071005, 0.088922,
        0.110251, 0.135335, 0.164474, 0.197899, 0.235746, 0.278037, 0.324652, 0.375311,
        0.429557, 0.486752, 0.546074, 0.606531, 0.666977, 0.726149, 0.782705, 0.835270,
        0.882497, 0.923116, 0.955997, 0.980199, 0.995012, 1.000000, 0.995012, 0.980199,
        0.955997, 0.923116, 0.882497, 0.835270, 0.782705, 0.726149, 0.666977, 0.606531,
        0.546074, 0.486752, 0.429557, 0.375311, 0.324652, 0.278037, 0.235746, 0.197899,
        0.164474, 0.135335, 0.110251, 0.088922, 0.071005, 0.056135, 0.043937, 0.034047,
        0.026121, 0.019841, 0.014921, 0.011109, 0.008189, 0.005976, 0.004318, 0.003089,
        0.002187, 0.001534, 0.001065, 0.000732, 0.000498, 0.000335, 0.000224, 0.000148,
        0.000097, 0.000063, 0.000040, 0.000025, 0.000016, 0.000010, 0.000006, 0.000004,
        0.000002, 0.000001, 0.000001, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000,
        0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000,
        0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000,
        0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000,
        0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000,
        0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000,
        0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000,
        0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000,
        0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000,
        0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000,
        0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000,
        0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000,
        0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000,
        0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000,
        0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000,
        0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000,
        0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000,
        0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000,
        0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000,
        0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000,
        0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000,
        0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000,
        0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000,
        0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000,
        0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000,
        0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000,
        0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000,
        0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000,
        0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000,
        0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000,
        0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000,
        0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000,
        0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000, 0.000000,
        0.000000,
    }},
}};

inline constexpr std::array<Table, 4> kMaterials = {{
    {"floor", {
        0.216599, 0.216865, 0.217134, 0.217408, 0.217686, 0.217968, 0.218254, 0.218544,
        0.218839, 0.219138, 0.219442, 0.219751, 0.220063, 0.220381, 0.220703, 0.221030,
        0.221362, 0.221699, 0.222041, 0.222387, 0.222739, 0.223096, 0.223458, 0.223826,
        0.224198, 0.224577, 0.224960, 0.225349, 0.225744, 0.226144, 0.226550, 0.226962,
        0.227380, 0.227803, 0.228233, 0.228669, 0.229110, 0.229558, 0.230013, 0.230473,
        0.230940, 0.231413, 0.231893, 0.232379, 0.232873, 0.233372, 0.233879, 0.234392,
        0.234913, 0.235440, 0.235974, 0.236516, 0.237065, 0.237621, 0.238184, 0.238755,
        0.239333, 0.239918, 0.240512, 0.241112, 0.241721, 0.242337, 0.242962, 0.243594,
        0.244234, 0.244882, 0.245538, 0.246202, 0.246875, 0.247556, 0.248245, 0.248942,
        0.249648, 0.250362, 0.251085, 0.251817, 0.252557, 0.253305, 0.254063, 0.254829,
        0.255604, 0.256388, 0.257181, 0.257983, 0.258794, 0.259613, 0.260442, 0.261280,
        0.262127, 0.262984, 0.263849, 0.264724, 0.265607, 0.266501, 0.267403, 0.268315,
        0.269236, 0.270166, 0.271106, 0.272055, 0.273013, 0.273981, 0.274958, 0.275944,
        0.276940, 0.277945, 0.278959, 0.279983, 0.281016, 0.282059, 0.283110, 0.284171,
        0.285241, 0.286321, 0.287409, 0.288507, 0.289613, 0.290729, 0.291853, 0.292987,
        0.294129, 0.295281, 0.296441, 0.297610, 0.298787, 0.299973, 0.301168, 0.302371,
        0.303582, 0.304802, 0.306029, 0.307265, 0.308509, 0.309761, 0.311020, 0.312287,
        0.313562, 0.314845, 0.316134, 0.317431, 0.318735, 0.320046, 0.321364, 0.322689,
        0.324020, 0.325358, 0.326702, 0.328053, 0.329409, 0.330771, 0.332139, 0.333513,
        0.334892, 0.336276, 0.337666, 0.339060, 0.340459, 0.341863, 0.343271, 0.344684,
        0.346100, 0.347521, 0.348945, 0.350373, 0.351804, 0.353238, 0.354675, 0.356115,
        0.357558, 0.359003, 0.360450, 0.361900, 0.363351, 0.364803, 0.366257, 0.367713,
        0.369169, 0.370626, 0.372084, 0.373542, 0.375000, 0.376458, 0.377916, 0.379374,
        0.380831, 0.382287, 0.383743, 0.385197, 0.386649, 0.388100, 0.389550, 0.390997,
        0.392442, 0.393885, 0.395325, 0.396762, 0.398196, 0.399627, 0.401055, 0.402479,
        0.403900, 0.405316, 0.406729, 0.408137, 0.409541, 0.410940, 0.412334, 0.413724,
        0.415108, 0.416487, 0.417861, 0.419229, 0.420591, 0.421947, 0.423298, 0.424642,
        0.425980, 0.427311, 0.428636, 0.429954, 0.431265, 0.432569, 0.433866, 0.435155,
        0.436438, 0.437713, 0.438980, 0.440239, 0.441491, 0.442735, 0.443971, 0.445198,
        0.446418, 0.447629, 0.448832, 0.450027, 0.451213, 0.452390, 0.453559, 0.454719,
        0.455871, 0.457013, 0.458147, 0.459271, 0.460387, 0.461493, 0.462591, 0.463679,
        0.464759, 0.465829, 0.466890, 0.467941, 0.468984, 0.470017, 0.471041, 0.472055,
        0.473060, 0.474056, 0.475042, 0.476019, 0.476987, 0.477945, 0.478894, 0.479834,
        0.480764, 0.481685, 0.482597, 0.483499, 0.484393, 0.485276, 0.486151, 0.487016,
        0.487873, 0.488720, 0.489558, 0.490387, 0.491206, 0.492017, 0.492819, 0.493612,
        0.494396, 0.495171, 0.495937, 0.496695, 0.497443, 0.498183, 0.498915, 0.499638,
        0.500352, 0.501058, 0.501755, 0.502444, 0.503125, 0.503798, 0.504462, 0.505118,
        0.505766, 0.506406, 0.507038, 0.507663, 0.508279, 0.508888, 0.509488, 0.510082,
        0.510667, 0.511245, 0.511816, 0.512379, 0.512935, 0.513484, 0.514026, 0.514560,
        0.515087, 0.515608, 0.516121, 0.516628, 0.517127, 0.517621, 0.518107, 0.518587,
        0.519060, 0.519527, 0.519987, 0.520442, 0.520890, 0.521331, 0.521767, 0.522197,
        0.522620, 0.523038, 0.523450, 0.523856, 0.524256, 0.524651, 0.525040, 0.525423,
        0.525802, 0.526174, 0.526542, 0.526904, 0.527261, 0.527613, 0.527959, 0.528301,
        0.528638, 0.528970, 0.529297, 0.529619, 0.529937, 0.530249, 0.530558, 0.530862,
        0.531161, 0.531456, 0.531746, 0.532032, 0.532314, 0.532592, 0.532866, 0.533135,
        0.533401, 0.533662, 0.533920, 0.534174, 0.534424, 0.534670, 0.534912, 0.535151,
        0.535386, 0.535618, 0.535846, 0.536071, 0.536292, 0.536510, 0.536724, 0.536936,
        0.537144, 0.537348, 0.537550, 0.537749, 0.537944, 0.538137, 0.538326, 0.538513,
        0.538697, 0.538877, 0.539056, 0.539231, 0.539404, 0.539573, 0.539741, 0.539905,
        0.540068, 0.540227, 0.540384, 0.540539, 0.540691, 0.540841, 0.540988, 0.541134,
        0.541276,
    }},
    {"pine_wood", {
        0.153856, 0.153967, 0.154081, 0.154199, 0.154319, 0.154443, 0.154571, 0.154702,
        0.154837, 0.154976, 0.155119, 0.155265, 0.155416, 0.155572, 0.155731, 0.155895,
        0.156064, 0.156238, 0.156416, 0.156600, 0.156788, 0.156982, 0.157182, 0.157387,
        0.157598, 0.157815, 0.158037, 0.158267, 0.158502, 0.158744, 0.158993, 0.159249,
        0.159512, 0.159782, 0.160060, 0.160346, 0.160639, 0.160941, 0.161251, 0.161569,
        0.161896, 0.162233, 0.162578, 0.162934, 0.163298, 0.163673, 0.164059, 0.164454,
        0.164861, 0.165278, 0.165707, 0.166148, 0.166600, 0.167065, 0.167542, 0.168032,
        0.168536, 0.169052, 0.169583, 0.170128, 0.170687, 0.171261, 0.171850, 0.172455,
        0.173076, 0.173713, 0.174367, 0.175038, 0.175726, 0.176432, 0.177157, 0.177900,
        0.178662, 0.179444, 0.180246, 0.181068, 0.181911, 0.182775, 0.183661, 0.184569,
        0.185500, 0.186454, 0.187431, 0.188433, 0.189459, 0.190510, 0.191586, 0.192689,
        0.193818, 0.194973, 0.196157, 0.197368, 0.198607, 0.199875, 0.201173, 0.202500,
        0.203858, 0.205247, 0.206666, 0.208118, 0.209601, 0.211118, 0.212667, 0.214250,
        0.215867, 0.217518, 0.219204, 0.220926, 0.222682, 0.224475, 0.226304, 0.228170,
        0.230073, 0.232013, 0.233991, 0.236006, 0.238060, 0.240152, 0.242283, 0.244452,
        0.246661, 0.248908, 0.251195, 0.253520, 0.255885, 0.258290, 0.260733, 0.263216,
        0.265738, 0.268298, 0.270898, 0.273536, 0.276213, 0.278928, 0.281681, 0.284471,
        0.287298, 0.290162, 0.293062, 0.295998, 0.298968, 0.301974, 0.305013, 0.308085,
        0.311190, 0.314326, 0.317494, 0.320691, 0.323917, 0.327172, 0.330454, 0.333762,
        0.337095, 0.340452, 0.343832, 0.347234, 0.350656, 0.354098, 0.357558, 0.361034,
        0.364527, 0.368033, 0.371552, 0.375083, 0.378624, 0.382173, 0.385730, 0.389292,
        0.392859, 0.396429, 0.400000, 0.403571, 0.407141, 0.410708, 0.414270, 0.417827,
        0.421376, 0.424917, 0.428448, 0.431967, 0.435473, 0.438966, 0.442442, 0.445902,
        0.449344, 0.452766, 0.456168, 0.459548, 0.462905, 0.466238, 0.469546, 0.472828,
        0.476083, 0.479309, 0.482506, 0.485674, 0.488810, 0.491915, 0.494987, 0.498026,
        0.501032, 0.504002, 0.506938, 0.509838, 0.512702, 0.515529, 0.518319, 0.521072,
        0.523787, 0.526464, 0.529102, 0.531702, 0.534262, 0.536784, 0.539267, 0.541710,
        0.544115, 0.546480, 0.548805, 0.551092, 0.553339, 0.555548, 0.557717, 0.559848,
        0.561940, 0.563994, 0.566009, 0.567987, 0.569927, 0.571830, 0.573696, 0.575525,
        0.577318, 0.579074, 0.580796, 0.582482, 0.584133, 0.585750, 0.587333, 0.588882,
        0.590399, 0.591882, 0.593334, 0.594753, 0.596142, 0.597500, 0.598827, 0.600125,
        0.601393, 0.602632, 0.603843, 0.605027, 0.606182, 0.607311, 0.608414, 0.609490,
        0.610541, 0.611567, 0.612569, 0.613546, 0.614500, 0.615431, 0.616339, 0.617225,
        0.618089, 0.618932, 0.619754, 0.620556, 0.621338, 0.622100, 0.622843, 0.623568,
        0.624274, 0.624962, 0.625633, 0.626287, 0.626924, 0.627545, 0.628150, 0.628739,
        0.629313, 0.629872, 0.630417, 0.630948, 0.631464, 0.631968, 0.632458, 0.632935,
        0.633400, 0.633852, 0.634293, 0.634722, 0.635139, 0.635546, 0.635941, 0.636327,
        0.636702, 0.637066, 0.637422, 0.637767, 0.638104, 0.638431, 0.638749, 0.639059,
        0.639361, 0.639654, 0.639940, 0.640218, 0.640488, 0.640751, 0.641007, 0.641256,
        0.641498, 0.641733, 0.641963, 0.642185, 0.642402, 0.642613, 0.642818, 0.643018,
        0.643212, 0.643400, 0.643584, 0.643762, 0.643936, 0.644105, 0.644269, 0.644428,
        0.644584, 0.644735, 0.644881, 0.645024, 0.645163, 0.645298, 0.645429, 0.645557,
        0.645681, 0.645801, 0.645919, 0.646033, 0.646144, 0.646251, 0.646356, 0.646458,
        0.646557, 0.646654, 0.646747, 0.646838, 0.646927, 0.647013, 0.647096, 0.647178,
        0.647257, 0.647334, 0.647408, 0.647481, 0.647552, 0.647620, 0.647687, 0.647752,
        0.647815, 0.647876, 0.647936, 0.647994, 0.648050, 0.648105, 0.648158, 0.648210,
        0.648260, 0.648309, 0.648356, 0.648402, 0.648447, 0.648491, 0.648533, 0.648574,
        0.648614, 0.648653, 0.648691, 0.648728, 0.648764, 0.648798, 0.648832, 0.648865,
        0.648897, 0.648928, 0.648958, 0.648987, 0.649016, 0.649043, 0.649070, 0.649097,
        0.649122, 0.649147, 0.649171, 0.649194, 0.649217, 0.649239, 0.649260, 0.649281,
        0.649301,
    }},
    {"plaster", {
        0.759901, 0.759544, 0.759169, 0.758774, 0.758363, 0.757934, 0.757490, 0.757031,
        0.756558, 0.756074, 0.755579, 0.755075, 0.754564, 0.754049, 0.753530, 0.753011,
        0.752493, 0.751979, 0.751472, 0.750973, 0.750486, 0.750012, 0.749556, 0.749118,
        0.748703, 0.748313, 0.747949, 0.747615, 0.747313, 0.747046, 0.746815, 0.746623,
        0.746471, 0.746362, 0.746297, 0.746277, 0.746304, 0.746378, 0.746501, 0.746673,
        0.746894, 0.747165, 0.747484, 0.747853, 0.748270, 0.748735, 0.749246, 0.749802,
        0.750402, 0.751045, 0.751728, 0.752450, 0.753208, 0.754000, 0.754824, 0.755678,
        0.756558, 0.757463, 0.758390, 0.759336, 0.760298, 0.761274, 0.762261, 0.763256,
        0.764258, 0.765263, 0.766269, 0.767275, 0.768276, 0.769273, 0.770262, 0.771242,
        0.772211, 0.773167, 0.774110, 0.775038, 0.775949, 0.776843, 0.777719, 0.778575,
        0.779413, 0.780231, 0.781028, 0.781805, 0.782561, 0.783297, 0.784012, 0.784707,
        0.785382, 0.786037, 0.786673, 0.787291, 0.787890, 0.788471, 0.789035, 0.789583,
        0.790115, 0.790632, 0.791134, 0.791623, 0.792098, 0.792562, 0.793013, 0.793454,
        0.793884, 0.794305, 0.794716, 0.795119, 0.795515, 0.795903, 0.796284, 0.796659,
        0.797028, 0.797392, 0.797750, 0.798105, 0.798455, 0.798801, 0.799144, 0.799484,
        0.799821, 0.800155, 0.800487, 0.800816, 0.801144, 0.801469, 0.801793, 0.802116,
        0.802437, 0.802756, 0.803075, 0.803392, 0.803709, 0.804024, 0.804338, 0.804652,
        0.804965, 0.805276, 0.805588, 0.805898, 0.806208, 0.806517, 0.806825, 0.807132,
        0.807439, 0.807745, 0.808050, 0.808355, 0.808659, 0.808962, 0.809265, 0.809567,
        0.809867, 0.810168, 0.810467, 0.810766, 0.811063, 0.811360, 0.811656, 0.811951,
        0.812246, 0.812539, 0.812831, 0.813123, 0.813413, 0.813703, 0.813992, 0.814279,
        0.814566, 0.814851, 0.815135, 0.815419, 0.815701, 0.815982, 0.816262, 0.816541,
        0.816819, 0.817095, 0.817371, 0.817645, 0.817918, 0.818190, 0.818460, 0.818729,
        0.818997, 0.819264, 0.819530, 0.819794, 0.820057, 0.820318, 0.820579, 0.820837,
        0.821095, 0.821351, 0.821606, 0.821859, 0.822112, 0.822362, 0.822611, 0.822859,
        0.823106, 0.823351, 0.823595, 0.823837, 0.824077, 0.824317, 0.824555, 0.824791,
        0.825026, 0.825259, 0.825491, 0.825722, 0.825951, 0.826179, 0.826405, 0.826629,
        0.826852, 0.827074, 0.827294, 0.827513, 0.827730, 0.827946, 0.828160, 0.828372,
        0.828583, 0.828793, 0.829001, 0.829208, 0.829413, 0.829617, 0.829819, 0.830019,
        0.830218, 0.830416, 0.830612, 0.830807, 0.831000, 0.831191, 0.831382, 0.831570,
        0.831757, 0.831943, 0.832127, 0.832310, 0.832491, 0.832671, 0.832850, 0.833026,
        0.833202, 0.833376, 0.833548, 0.833719, 0.833889, 0.834057, 0.834224, 0.834390,
        0.834553, 0.834716, 0.834877, 0.835037, 0.835195, 0.835352, 0.835508, 0.835662,
        0.835815, 0.835966, 0.836117, 0.836265, 0.836413, 0.836559, 0.836704, 0.836847,
        0.836989, 0.837130, 0.837269, 0.837408, 0.837545, 0.837680, 0.837815, 0.837948,
        0.838080, 0.838210, 0.838340, 0.838468, 0.838595, 0.838720, 0.838845, 0.838968,
        0.839090, 0.839211, 0.839331, 0.839449, 0.839567, 0.839683, 0.839798, 0.839912,
        0.840025, 0.840137, 0.840247, 0.840357, 0.840465, 0.840572, 0.840679, 0.840784,
        0.840888, 0.840991, 0.841093, 0.841194, 0.841293, 0.841392, 0.841490, 0.841587,
        0.841683, 0.841778, 0.841871, 0.841964, 0.842056, 0.842147, 0.842237, 0.842326,
        0.842414, 0.842501, 0.842588, 0.842673, 0.842757, 0.842841, 0.842924, 0.843005,
        0.843086, 0.843166, 0.843245, 0.843324, 0.843401, 0.843478, 0.843554, 0.843629,
        0.843703, 0.843776, 0.843849, 0.843920, 0.843991, 0.844062, 0.844131, 0.844200,
        0.844268, 0.844335, 0.844401, 0.844467, 0.844532, 0.844596, 0.844660, 0.844723,
        0.844785, 0.844846, 0.844907, 0.844967, 0.845026, 0.845085, 0.845143, 0.845201,
        0.845257, 0.845314, 0.845369, 0.845424, 0.845478, 0.845532, 0.845585, 0.845637,
        0.845689, 0.845741, 0.845791, 0.845841, 0.845891, 0.845940, 0.845988, 0.846036,
        0.846083, 0.846130, 0.846176, 0.846222, 0.846267, 0.846312, 0.846356, 0.846400,
        0.846443, 0.846486, 0.846528, 0.846569, 0.846610, 0.846651, 0.846691, 0.846731,
        0.846770, 0.846809, 0.846848, 0.846886, 0.846923, 0.846960, 0.846997, 0.847033,
        0.847069,
    }},
    {"plate_glass", {
        0.083666, 0.083709, 0.083753, 0.083797, 0.083841, 0.083886, 0.083930, 0.083975,
        0.084020, 0.084066, 0.084111, 0.084157, 0.084203, 0.084249, 0.084296, 0.084342,
        0.084389, 0.084436, 0.084483, 0.084531, 0.084578, 0.084626, 0.084674, 0.084722,
        0.084770, 0.084819, 0.084868, 0.084916, 0.084965, 0.085014, 0.085063, 0.085113,
        0.085162, 0.085212, 0.085261, 0.085311, 0.085361, 0.085411, 0.085461, 0.085511,
        0.085561, 0.085611, 0.085662, 0.085712, 0.085762, 0.085813, 0.085863, 0.085914,
        0.085964, 0.086015, 0.086065, 0.086116, 0.086166, 0.086217, 0.086267, 0.086318,
        0.086368, 0.086419, 0.086469, 0.086519, 0.086570, 0.086620, 0.086670, 0.086720,
        0.086770, 0.086819, 0.086869, 0.086919, 0.086968, 0.087017, 0.087066, 0.087115,
        0.087164, 0.087213, 0.087261, 0.087310, 0.087358, 0.087406, 0.087454, 0.087501,
        0.087548, 0.087595, 0.087642, 0.087689, 0.087735, 0.087781, 0.087827, 0.087873,
        0.087918, 0.087963, 0.088007, 0.088052, 0.088096, 0.088139, 0.088183, 0.088226,
        0.088268, 0.088311, 0.088353, 0.088394, 0.088435, 0.088476, 0.088517, 0.088557,
        0.088596, 0.088636, 0.088674, 0.088713, 0.088751, 0.088788, 0.088825, 0.088862,
        0.088898, 0.088933, 0.088968, 0.089003, 0.089037, 0.089071, 0.089104, 0.089136,
        0.089169, 0.089200, 0.089231, 0.089262, 0.089292, 0.089321, 0.089350, 0.089378,
        0.089406, 0.089433, 0.089460, 0.089486, 0.089511, 0.089536, 0.089560, 0.089584,
        0.089607, 0.089629, 0.089651, 0.089672, 0.089692, 0.089712, 0.089731, 0.089750,
        0.089768, 0.089785, 0.089802, 0.089818, 0.089833, 0.089848, 0.089862, 0.089875,
        0.089888, 0.089900, 0.089912, 0.089922, 0.089932, 0.089941, 0.089950, 0.089958,
        0.089965, 0.089972, 0.089978, 0.089983, 0.089988, 0.089991, 0.089994, 0.089997,
        0.089999, 0.090000, 0.090000, 0.090000, 0.089999, 0.089997, 0.089994, 0.089991,
        0.089988, 0.089983, 0.089978, 0.089972, 0.089965, 0.089958, 0.089950, 0.089941,
        0.089932, 0.089922, 0.089912, 0.089900, 0.089888, 0.089875, 0.089862, 0.089848,
        0.089833, 0.089818, 0.089802, 0.089785, 0.089768, 0.089750, 0.089731, 0.089712,
        0.089692, 0.089672, 0.089651, 0.089629, 0.089607, 0.089584, 0.089560, 0.089536,
        0.089511, 0.089486, 0.089460, 0.089433, 0.089406, 0.089378, 0.089350, 0.089321,
        0.089292, 0.089262, 0.089231, 0.089200, 0.089169, 0.089136, 0.089104, 0.089071,
        0.089037, 0.089003, 0.088968, 0.088933, 0.088898, 0.088862, 0.088825, 0.088788,
        0.088751, 0.088713, 0.088674, 0.088636, 0.088596, 0.088557, 0.088517, 0.088476,
        0.088435, 0.088394, 0.088353, 0.088311, 0.088268, 0.088226, 0.088183, 0.088139,
        0.088096, 0.088052, 0.088007, 0.087963, 0.087918, 0.087873, 0.087827, 0.087781,
        0.087735, 0.087689, 0.087642, 0.087595, 0.087548, 0.087501, 0.087454, 0.087406,
        0.087358, 0.087310, 0.087261, 0.087213, 0.087164, 0.087115, 0.087066, 0.087017,
        0.086968, 0.086919, 0.086869, 0.086819, 0.086770, 0.086720, 0.086670, 0.086620,
        0.086570, 0.086519, 0.086469, 0.086419, 0.086368, 0.086318, 0.086267, 0.086217,
        0.086166, 0.086116, 0.086065, 0.086015, 0.085964, 0.085914, 0.085863, 0.085813,
        0.085762, 0.085712, 0.085662, 0.085611, 0.085561, 0.085511, 0.085461, 0.085411,
        0.085361, 0.085311, 0.085261, 0.085212, 0.085162, 0.085113, 0.085063, 0.085014,
        0.084965, 0.084916, 0.084868, 0.084819, 0.084770, 0.084722, 0.084674, 0.084626,
        0.084578, 0.084531, 0.084483, 0.084436, 0.084389, 0.084342, 0.084296, 0.084249,
        0.084203, 0.084157, 0.084111, 0.084066, 0.084020, 0.083975, 0.083930, 0.083886,
        0.083841, 0.083797, 0.083753, 0.083709, 0.083666, 0.083623, 0.083580, 0.083537,
        0.083495, 0.083453, 0.083411, 0.083370, 0.083328, 0.083287, 0.083247, 0.083206,
        0.083166, 0.083126, 0.083086, 0.083047, 0.083008, 0.082969, 0.082931, 0.082893,
        0.082855, 0.082818, 0.082780, 0.082743, 0.082707, 0.082671, 0.082635, 0.082599,
        0.082563, 0.082528, 0.082494, 0.082459, 0.082425, 0.082391, 0.082357, 0.082324,
        0.082291, 0.082259, 0.082226, 0.082194, 0.082163, 0.082131, 0.082100, 0.082069,
        0.082039, 0.082009, 0.081979, 0.081949, 0.081920, 0.081891, 0.081863, 0.081834,
        0.081806, 0.081779, 0.081751, 0.081724, 0.081697, 0.081671, 0.081645, 0.081619,
        0.081593,
    }},
}};

} // namespace vlcsim::spectra_data
