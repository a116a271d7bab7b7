#pragma once

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace pptcost {

/// Thread count from PPTCOST_THREADS, or 1 when unset or malformed.
inline int env_threads() {
	const char* v = std::getenv("PPTCOST_THREADS");
	if (v == nullptr) return 1;
	try {
		return std::max(1, std::stoi(v));
	} catch (const std::exception&) {
		return 1;
	}
}

/// Evaluates fn(i) for i in [0, count) and stores results by index, so the
/// output never depends on scheduling. The first exception is rethrown.
template <typename T, typename Fn>
std::vector<T> parallel_map(int count, int threads, Fn&& fn) {
	std::vector<T> out(static_cast<std::size_t>(std::max(count, 0)));
	threads = std::clamp(threads, 1, std::max(count, 1));
	if (threads == 1) {
		for (int i = 0; i < count; ++i) out[i] = fn(i);
		return out;
	}
	std::exception_ptr error;
	std::mutex error_mutex;
	std::vector<std::thread> pool;
	for (int t = 0; t < threads; ++t) {
		pool.emplace_back([&, t] {
			for (int i = t; i < count; i += threads) {
				try {
					out[i] = fn(i);
				} catch (...) {
					std::lock_guard lock(error_mutex);
					if (!error) error = std::current_exception();
					return;
				}
			}
		});
	}
	for (auto& th : pool) th.join();
	if (error) std::rethrow_exception(error);
	return out;
}

} // namespace pptcost
