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

#include <set>
#include <stdexcept>

#include <gtest/gtest.h>

#include "vlcsim/random.hpp"

using namespace vlcsim;

TEST(Streams, SameKeySameSequence)
{
    Engine a = make_stream(42, 3, StreamPurpose::TxCluster, 7);
    Engine b = make_stream(42, 3, StreamPurpose::TxCluster, 7);
    for (int k = 0; k < 100; ++k)
        EXPECT_EQ(a(), b());
}

TEST(Streams, EveryKeyComponentMatters)
{
    std::set<std::uint64_t> first;
    first.insert(make_stream(1, 0, StreamPurpose::TxCluster, 0)());
    first.insert(make_stream(2, 0, StreamPurpose::TxCluster, 0)());
    first.insert(make_stream(1, 1, StreamPurpose::TxCluster, 0)());
    first.insert(make_stream(1, 0, StreamPurpose::RxCluster, 0)());
    first.insert(make_stream(1, 0, StreamPurpose::TxCluster, 1)());
    first.insert(make_stream(1ull << 32, 0, StreamPurpose::TxCluster, 0)());
    first.insert(make_stream(1, 1ull << 32, StreamPurpose::TxCluster, 0)());
    EXPECT_EQ(first.size(), 7u);
}

TEST(ParallelFor, VisitsEveryIndexOnce)
{
    for (unsigned threads : {1u, 3u, 8u})
    {
        std::vector<int> hits(1000, 0);
        parallel_for(hits.size(), threads, [&](std::size_t k) { ++hits[k]; });
        for (int h : hits)
            EXPECT_EQ(h, 1);
    }
    parallel_for(0, 4, [](std::size_t) { FAIL(); });
}

TEST(ParallelFor, RethrowsWorkerFailure)
{
    EXPECT_THROW(parallel_for(100, 4,
                              [](std::size_t k) {
                                  if (k == 37)
                                      throw std::runtime_error("boom");
                              }),
                 std::runtime_error);
}

TEST(CompensatedSum, RecoversCancelledTerms)
{
    CompensatedSum s;
    s.add(1.0);
    s.add(1e100);
    s.add(1.0);
    s.add(-1e100);
    EXPECT_EQ(s.value(), 2.0);

    CompensatedComplexSum c;
    for (int k = 0; k < 10; ++k)
        c.add({0.1, -0.1});
    EXPECT_NEAR(c.value().real(), 1.0, 1e-15);
    EXPECT_NEAR(c.value().imag(), -1.0, 1e-15);
}

TEST(Threads, ZeroMeansHardware)
{
    EXPECT_GE(resolve_threads(0), 1u);
    EXPECT_EQ(resolve_threads(5), 5u);
}
