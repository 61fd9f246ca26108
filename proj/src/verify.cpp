#include "coeffkit/verify.hpp"

#include <atomic>
#include <exception>
#include <thread>

#include "coeffkit/errors.hpp"
#include "coeffkit/oracle.hpp"

namespace coeffkit::verify {
namespace {

struct Task {
    std::uint64_t power;
    std::uint64_t row;
};

std::vector<Mismatch> check_row(const Task& task, relations::G4Form form) {
    const UniqueRow closed = relations::unique_row_closed(task.power, task.row, form);
    const UniqueRow expected = oracle::unique_row_oracle(task.power, task.row);
    std::vector<Mismatch> out;
    for (std::size_t i = 0; i < closed.values.size(); ++i) {
        if (closed.values[i] != expected.values[i])
            out.push_back({task.power, task.row, i + 1, closed.values[i], expected.values[i]});
    }
    return out;
}

} // namespace

Report run(const Options& options) {
    if (options.max_row < 1)
        throw DomainError("max row must be >= 1");
    const auto started = std::chrono::steady_clock::now();

    std::vector<Task> tasks;
    for (std::uint64_t power : options.powers) {
        for (std::uint64_t row = 1; row <= options.max_row; ++row)
            tasks.push_back({power, row});
    }

    std::vector<std::vector<Mismatch>> per_task(tasks.size());
    const unsigned workers =
        std::max(1u, std::min<unsigned>(options.workers, static_cast<unsigned>(tasks.size())));

    if (workers == 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i)
            per_task[i] = check_row(tasks[i], options.g4_form);
    } else {
        std::atomic<std::size_t> cursor{0};
        std::vector<std::exception_ptr> failures(workers);
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                try {
                    for (std::size_t i = cursor.fetch_add(1); i < tasks.size();
                         i = cursor.fetch_add(1))
                        per_task[i] = check_row(tasks[i], options.g4_form);
                } catch (...) {
                    failures[w] = std::current_exception();
                    cursor.store(tasks.size()); // stop handing out work
                }
            });
        }
        for (auto& t : pool)
            t.join();
        for (const auto& failure : failures) {
            if (failure)
                std::rethrow_exception(failure);
        }
    }

    Report report;
    report.options = options;
    for (auto& found : per_task) // tasks were generated in (power, row) order
        report.mismatches.insert(report.mismatches.end(), found.begin(), found.end());
    report.elapsed = std::chrono::steady_clock::now() - started;
    return report;
}

} // namespace coeffkit::verify
