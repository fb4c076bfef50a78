#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace vislat {

/// Resolves a thread-count flag: 0 means one worker per hardware thread.
inline unsigned resolve_threads(unsigned requested) noexcept
{
	if (requested != 0) return requested;
	const unsigned hw = std::thread::hardware_concurrency();
	return hw == 0 ? 1 : hw;
}

/// Number of workers parallel_for starts for this many items.
inline unsigned worker_count(std::size_t count, unsigned threads) noexcept
{
	return static_cast<unsigned>(std::max<std::size_t>(1, std::min<std::size_t>(resolve_threads(threads), count)));
}

/// Calls fn(i, worker) for every i in [0, count), worker < worker_count().
/// Items are handed out dynamically, so callers write per-item results to
/// their own slot and reduce afterwards in index order; that keeps
/// aggregates independent of the thread count.
template <typename Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn)
{
	const unsigned workers = worker_count(count, threads);
	if (workers <= 1)
	{
		for (std::size_t i = 0; i < count; ++i) fn(i, 0u);
		return;
	}

	std::atomic<std::size_t> next{0};
	auto worker = [&](unsigned id) {
		for (std::size_t i = next.fetch_add(1, std::memory_order_relaxed); i < count;
			 i = next.fetch_add(1, std::memory_order_relaxed))
			fn(i, id);
	};
	std::vector<std::jthread> pool;
	pool.reserve(workers - 1);
	for (unsigned w = 1; w < workers; ++w) pool.emplace_back(worker, w);
	worker(0u);
}

} // namespace vislat
