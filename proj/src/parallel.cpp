#include "zetalab/parallel.hpp"

#include <atomic>

namespace zetalab {

namespace {
std::atomic<int> g_partitions{0};  // 0 = not set yet, use hardware default
}

void set_partition_count(int n) {
    g_partitions.store(n > 0 ? n : 0);
}

int partition_count() {
    int n = g_partitions.load();
    if (n > 0) return n;
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

}  // namespace zetalab
