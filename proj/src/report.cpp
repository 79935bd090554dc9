#include "dpinv/report.hpp"

#include "json.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <thread>

namespace dpinv {

std::vector<Report> run_ordered(const std::vector<std::function<Report()>>& jobs, const RunOptions& options) {
    std::vector<Report> results(jobs.size());
    std::vector<std::exception_ptr> errors(jobs.size());
    std::atomic<std::size_t> next{0};

    auto worker = [&] {
        for (std::size_t k = next++; k < jobs.size(); k = next++) {
            try {
                auto start = std::chrono::steady_clock::now();
                results[k] = jobs[k]();
                if (options.timing)
                    results[k].millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                                            std::chrono::steady_clock::now() - start)
                                            .count();
                else
                    results[k].millis = 0;
            } catch (...) {
                errors[k] = std::current_exception();
            }
        }
    };

    const unsigned threads = std::max(1u, std::min<unsigned>(options.workers, static_cast<unsigned>(jobs.size())));
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back(worker);
        for (auto& t : pool)
            t.join();
    }
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
    return results;
}

std::string reports_to_json(const std::vector<Report>& reports) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
        nlohmann::ordered_json j;
        j["theorem"] = r.theorem;
        j["label"] = r.label;
        j["n"] = r.n;
        j["multidegree"] = r.multidegree;
        j["lhs_rank"] = r.lhs_rank;
        j["rhs_rank"] = r.rhs_rank;
        j["kernel_rank"] = r.kernel_rank;
        j["pass"] = r.pass;
        j["millis"] = r.millis;
        if (r.torsion_checked) {
            auto t = nlohmann::ordered_json::array();
            for (const auto& d : r.torsion)
                t.push_back(d.get_str());
            j["torsion"] = t;
        }
        out.push_back(std::move(j));
    }
    return out.dump(2) + "\n";
}

bool all_pass(const std::vector<Report>& reports) {
    return std::all_of(reports.begin(), reports.end(), [](const Report& r) { return r.pass; });
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t value) {
    // splitmix64 finalizer
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (value + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace dpinv
