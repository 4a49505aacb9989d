// Copyright 2026 The qgo Authors
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

#include "kernels_impl.hpp"

#include <atomic>
#include <cstdlib>
#include <string_view>

namespace qgo::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(QGO_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") != 0;
#else
    return false;
#endif
}

const KernelTable *initial_table() {
    if (const char *env = std::getenv("QGO_KERNELS");
        env != nullptr && std::string_view(env) == "scalar") {
        return &detail::kScalarTable;
    }
    if (const KernelTable *t = avx2_table()) {
        return t;
    }
    return &detail::kScalarTable;
}

std::atomic<const KernelTable *> &current() {
    static std::atomic<const KernelTable *> table{initial_table()};
    return table;
}

} // namespace

const KernelTable &scalar_table() { return detail::kScalarTable; }

const KernelTable *avx2_table() {
#if defined(QGO_HAVE_AVX2)
    static const bool supported = cpu_has_avx2();
    return supported ? &detail::kAvx2Table : nullptr;
#else
    return nullptr;
#endif
}

const KernelTable &active() { return *current().load(std::memory_order_acquire); }

bool select(Backend backend) {
    const KernelTable *t =
        backend == Backend::Scalar ? &detail::kScalarTable : avx2_table();
    if (t == nullptr) {
        return false;
    }
    current().store(t, std::memory_order_release);
    return true;
}

} // namespace qgo::kernels
