#include "pdflow/parallel.hpp"

namespace pdflow {

ParallelConfig& parallel_config() {
    static ParallelConfig cfg;
    return cfg;
}

void set_threads(int n) { parallel_config().threads = n; }

void set_deterministic(bool on) { parallel_config().deterministic = on; }

}  // namespace pdflow
