#pragma once

#include <functional>

namespace carpetdim {

/// Worker cap for internally parallel calls: CARPETDIM_THREADS when set
/// (minimum 1), otherwise the hardware concurrency.
int thread_cap();

/// Runs fn(i) for i in [0, count) on up to thread_cap() workers. Each index
/// writes only caller-owned slots, so results are deterministic regardless
/// of scheduling. Falls back to a plain loop when one worker suffices.
void parallel_for(int count, const std::function<void(int)>& fn);

}  // namespace carpetdim
