#pragma once

#include <condition_variable>
#include <cstdint>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <vector>

namespace ratiolab {

// Maps work(k) over k = 0..count-1 on a pool of `threads` workers and hands
// every result to merge(k, result) in strictly ascending k, whatever order
// the workers finish in. merge runs on the calling thread only, so the
// reduction order (and hence every floating-point result downstream) is
// identical for every thread count. A bounded claim window keeps at most a
// few results buffered. Worker or merge exceptions are rethrown here once
// the pool has drained.
template <typename Result>
void run_ordered(std::uint64_t count, int threads,
                 const std::function<Result(std::uint64_t)>& work,
                 const std::function<void(std::uint64_t, Result&&)>& merge) {
    if (threads < 1)
        throw std::invalid_argument("run_ordered: threads must be >= 1");
    if (count == 0) return;

    if (threads == 1) {
        for (std::uint64_t k = 0; k < count; ++k) merge(k, work(k));
        return;
    }

    std::mutex mtx;
    std::condition_variable can_claim, can_merge;
    std::map<std::uint64_t, Result> finished;
    std::uint64_t next_claim = 0;
    std::uint64_t next_merge = 0;
    bool stop = false;
    std::exception_ptr error;
    const std::uint64_t window = static_cast<std::uint64_t>(threads) * 2 + 2;

    auto worker_loop = [&] {
        std::unique_lock<std::mutex> lock(mtx);
        for (;;) {
            can_claim.wait(lock, [&] {
                return stop || next_claim >= count || next_claim < next_merge + window;
            });
            if (stop || next_claim >= count) return;
            const std::uint64_t k = next_claim++;
            lock.unlock();
            try {
                Result r = work(k);
                lock.lock();
                finished.emplace(k, std::move(r));
                can_merge.notify_one();
            } catch (...) {
                lock.lock();
                if (!error) error = std::current_exception();
                stop = true;
                can_merge.notify_one();
                can_claim.notify_all();
                return;
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker_loop);

    {
        std::unique_lock<std::mutex> lock(mtx);
        while (next_merge < count && !stop) {
            can_merge.wait(lock, [&] { return stop || finished.count(next_merge) != 0; });
            if (stop) break;
            auto node = finished.extract(next_merge);
            lock.unlock();
            try {
                merge(next_merge, std::move(node.mapped()));
            } catch (...) {
                lock.lock();
                if (!error) error = std::current_exception();
                stop = true;
                break;
            }
            lock.lock();
            ++next_merge;
            can_claim.notify_all();
        }
        stop = true;
        can_claim.notify_all();
        can_merge.notify_all();
    }

    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace ratiolab
