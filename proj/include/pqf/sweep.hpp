#pragma once
// sweep.hpp - checkpointed multi-worker range driver with deterministic output.
//
// Work is sharded into contiguous blocks of 1024 indices handed out through
// a shared atomic counter. A single writer merges finished blocks in
// ascending order, so the output bytes are independent of the jobs count.
// The checkpoint (separate file, updated by atomic rename) stores the first
// position not yet written plus the output byte offset at that boundary;
// resume truncates the output to the offset and recomputes from the
// position onward, reproducing an uninterrupted run byte for byte. Wall
// times are kept out of the record stream for the same reason; an optional
// sidecar receives {"key","elapsed_ms"} lines instead.
//
// Record schema (one JSON object per line, big integers as decimal strings):
//   thue: {"g","status","height","precision_digits","solutions":[{"a","b","sign"}]}
//   pib:  {"m","status","height","precision_digits","admissible",
//          "reasons":[...],"generators":[{"x","y","z"}]}

#include "pqf/arith.hpp"
#include "pqf/bigint.hpp"
#include "pqf/pib.hpp"
#include "pqf/thue.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <unistd.h>

namespace pqf {

enum class SweepMode { thue, pib };

inline const char* to_string(SweepMode m) { return m == SweepMode::thue ? "thue" : "pib"; }

struct SweepConfig {
    SweepMode mode = SweepMode::thue;
    BigInt from;
    BigInt to;
    BigInt height;  // Thue height H, or generator coordinate bound H_gen
    unsigned jobs = 1;
    std::string out_path;
    std::string checkpoint_path;                // empty: no checkpointing
    std::optional<unsigned long> precision;     // fixed precision instead of the retry ladder
    bool odd_only = false;                      // restrict the range to odd indices
    bool resume = false;
    unsigned long checkpoint_every = 4096;      // records between checkpoint updates
    std::string timing_path;                    // optional elapsed_ms sidecar
    unsigned long test_stop_after = 0;          // abort after N records (crash simulation)
};

struct SweepSummary {
    unsigned long total_written = 0;
    std::map<std::string, unsigned long> by_status;
    unsigned long long wall_ms = 0;
    bool stopped_early = false;
};

namespace detail {

inline std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

inline std::string sweep_config_hash(const SweepConfig& cfg) {
    std::string canon = "v1|mode=";
    canon += to_string(cfg.mode);
    canon += "|from=" + to_dec(cfg.from);
    canon += "|to=" + to_dec(cfg.to);
    canon += "|height=" + to_dec(cfg.height);
    canon += "|precision=";
    canon += cfg.precision ? std::to_string(*cfg.precision) : std::string("auto");
    canon += "|odd=";
    canon += cfg.odd_only ? '1' : '0';
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fnv1a64(canon)));
    return buf;
}

struct ComputedRecord {
    std::string key;   // decimal index, for the timing sidecar
    std::string line;  // full JSONL line including '\n'
    std::string status;
    long elapsed_ms = 0;
};

struct SweepBatch {
    unsigned long block = 0;
    std::vector<ComputedRecord> recs;
    std::exception_ptr error;
};

inline ComputedRecord compute_sweep_record(const SweepConfig& cfg, const SquarefreeTable* table,
                                           const BigInt& idx) {
    using clock = std::chrono::steady_clock;
    const auto t0 = clock::now();

    SolveOptions opt;
    opt.precision = cfg.precision;

    nlohmann::ordered_json rec;
    std::string status;

    if (cfg.mode == SweepMode::thue) {
        rec["g"] = to_dec(idx);
        if (is_perfect_square(idx)) {
            status = to_string(ThueStatus::skipped_reducible);
            rec["status"] = status;
            rec["height"] = to_dec(cfg.height);
            rec["precision_digits"] = 0;
            rec["solutions"] = nlohmann::ordered_json::array();
        } else {
            ThueResult tr = solve_small(idx, cfg.height, opt);
            status = to_string(tr.status);
            rec["status"] = status;
            rec["height"] = to_dec(cfg.height);
            rec["precision_digits"] = tr.precision_used;
            auto sols = nlohmann::ordered_json::array();
            if (tr.status == ThueStatus::solved) {
                if (!assert_bennett(tr.solutions).ok)
                    throw std::logic_error("sweep: two positive solutions at g=" + to_dec(idx));
                for (const ThueSolution& s : tr.solutions)
                    sols.push_back({{"a", to_dec(s.a)}, {"b", to_dec(s.b)}, {"sign", s.sign}});
            }
            rec["solutions"] = std::move(sols);
        }
    } else {
        rec["m"] = to_dec(idx);
        FieldParam field = table ? classify_m(idx, *table) : classify_m_direct(idx);
        auto reasons = nlohmann::ordered_json::array();
        for (AdmissReason r : field.reasons) reasons.push_back(to_string(r));
        auto gens = nlohmann::ordered_json::array();
        unsigned long precision_digits = 0;
        if (!field.admissible) {
            status = "skipped_inadmissible";
        } else {
            GeneratorsResult gr = generators_for_m(field, cfg.height, opt);
            status = to_string(gr.status);
            precision_digits = gr.precision_used;
            if (gr.status == ThueStatus::solved) {
                if (!assert_bennett(gr.thue_solutions).ok)
                    throw std::logic_error("sweep: two positive solutions at m=" + to_dec(idx));
                for (const Generator& gen : gr.generators)
                    gens.push_back(
                        {{"x", to_dec(gen.x)}, {"y", to_dec(gen.y)}, {"z", to_dec(gen.z)}});
            }
        }
        rec["status"] = status;
        rec["height"] = to_dec(cfg.height);
        rec["precision_digits"] = precision_digits;
        rec["admissible"] = field.admissible;
        rec["reasons"] = std::move(reasons);
        rec["generators"] = std::move(gens);
    }

    ComputedRecord out;
    out.key = to_dec(idx);
    out.line = rec.dump();
    out.line += '\n';
    out.status = std::move(status);
    out.elapsed_ms = static_cast<long>(
        std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - t0).count());
    return out;
}

/// fopen wrapper that closes on scope exit.
struct File {
    std::FILE* f = nullptr;
    File() = default;
    File(const char* path, const char* mode) : f(std::fopen(path, mode)) {}
    File(const File&) = delete;
    File& operator=(const File&) = delete;
    File(File&& o) noexcept : f(o.f) { o.f = nullptr; }
    File& operator=(File&& o) noexcept {
        if (this != &o) {
            if (f) std::fclose(f);
            f = o.f;
            o.f = nullptr;
        }
        return *this;
    }
    ~File() {
        if (f) std::fclose(f);
    }
    explicit operator bool() const { return f != nullptr; }
};

inline void write_checkpoint_file(const std::string& path, const std::string& hash,
                                  unsigned long next_pos, const BigInt& next_value,
                                  unsigned long long bytes) {
    nlohmann::ordered_json ck;
    ck["config_hash"] = hash;
    ck["next_pos"] = next_pos;
    ck["next_value"] = to_dec(next_value);
    ck["bytes"] = bytes;
    std::string data = ck.dump();
    data += '\n';
    std::string tmp = path + ".tmp";
    {
        File f(tmp.c_str(), "wb");
        if (!f) throw std::runtime_error("sweep: cannot write checkpoint " + tmp);
        if (std::fwrite(data.data(), 1, data.size(), f.f) != data.size())
            throw std::runtime_error("sweep: short write on checkpoint " + tmp);
        std::fflush(f.f);
        fsync(fileno(f.f));
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::runtime_error("sweep: cannot rename checkpoint into place: " + path);
}

}  // namespace detail

/// Runs the configured sweep. Appends one record per index (ascending) to
/// cfg.out_path; returns per-status counts for this run. Throws on I/O
/// failure, on a checkpoint whose config hash does not match, and on any
/// verification violation inside a worker.
inline SweepSummary run_sweep(const SweepConfig& cfg) {
    using clock = std::chrono::steady_clock;
    const auto wall0 = clock::now();

    if (cfg.from < 2) throw std::invalid_argument("run_sweep: range must start at 2 or above");
    if (cfg.to < cfg.from) throw std::invalid_argument("run_sweep: empty range");
    if (cfg.height < 1) throw std::invalid_argument("run_sweep: height must be >= 1");
    if (cfg.jobs < 1) throw std::invalid_argument("run_sweep: jobs must be >= 1");
    if (cfg.out_path.empty()) throw std::invalid_argument("run_sweep: output path required");
    if (cfg.resume && cfg.checkpoint_path.empty())
        throw std::invalid_argument("run_sweep: resume requires a checkpoint path");

    // Index sequence: first + step*pos for pos in [0, total).
    BigInt first = cfg.from;
    const unsigned step = cfg.odd_only ? 2 : 1;
    if (cfg.odd_only && mpz_even_p(first.get_mpz_t())) first += 1;
    if (first > cfg.to) throw std::invalid_argument("run_sweep: empty range");
    BigInt total_big = (cfg.to - first) / step + 1;
    if (!total_big.fits_ulong_p()) throw std::invalid_argument("run_sweep: range too large");
    const unsigned long total = total_big.get_ui();
    const auto value_at = [&](unsigned long pos) -> BigInt { return first + BigInt(step) * pos; };

    const std::string hash = detail::sweep_config_hash(cfg);

    // Resume state.
    unsigned long start_pos = 0;
    unsigned long long start_bytes = 0;
    bool have_checkpoint = false;
    if (cfg.resume && std::filesystem::exists(cfg.checkpoint_path)) {
        std::string raw;
        {
            detail::File f(cfg.checkpoint_path.c_str(), "rb");
            if (!f) throw std::runtime_error("run_sweep: cannot read checkpoint");
            char buf[4096];
            size_t n;
            while ((n = std::fread(buf, 1, sizeof buf, f.f)) > 0) raw.append(buf, n);
        }
        nlohmann::json ck;
        try {
            ck = nlohmann::json::parse(raw);
        } catch (const nlohmann::json::exception& e) {
            throw std::runtime_error(std::string("run_sweep: malformed checkpoint: ") + e.what());
        }
        if (!ck.contains("config_hash") || ck["config_hash"].get<std::string>() != hash)
            throw std::runtime_error("run_sweep: checkpoint config hash mismatch");
        start_pos = ck.at("next_pos").get<unsigned long>();
        start_bytes = ck.at("bytes").get<unsigned long long>();
        have_checkpoint = true;
    }

    if (have_checkpoint) {
        auto sz = std::filesystem::exists(cfg.out_path)
                      ? std::filesystem::file_size(cfg.out_path)
                      : 0;
        if (sz < start_bytes)
            throw std::runtime_error("run_sweep: output shorter than checkpoint byte offset");
        if (sz > start_bytes && truncate(cfg.out_path.c_str(), static_cast<off_t>(start_bytes)) != 0)
            throw std::runtime_error("run_sweep: cannot truncate output to checkpoint offset");
    }

    detail::File out(cfg.out_path.c_str(), have_checkpoint ? "ab" : "wb");
    if (!out) throw std::runtime_error("run_sweep: cannot open output " + cfg.out_path);
    detail::File timing;
    if (!cfg.timing_path.empty()) {
        timing = detail::File(cfg.timing_path.c_str(), have_checkpoint ? "ab" : "wb");
        if (!timing) throw std::runtime_error("run_sweep: cannot open timing sidecar");
    }

    SweepSummary summary;
    if (start_pos >= total) {
        summary.wall_ms = static_cast<unsigned long long>(
            std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - wall0).count());
        return summary;
    }

    // Optional sieve shared by pib workers; direct factoring handles ranges
    // beyond it.
    std::unique_ptr<SquarefreeTable> table;
    if (cfg.mode == SweepMode::pib && cfg.to.fits_ulong_p() && cfg.to.get_ui() <= 100000000ul)
        table = std::make_unique<SquarefreeTable>(cfg.to.get_ui());

    constexpr unsigned long kBlock = 1024;
    const unsigned long first_block = start_pos / kBlock;
    const unsigned long n_blocks = (total + kBlock - 1) / kBlock;

    std::atomic<unsigned long> next_block{first_block};
    std::atomic<bool> stop{false};
    std::mutex mu;
    std::condition_variable cv;
    std::map<unsigned long, detail::SweepBatch> ready;

    auto worker = [&]() {
        for (;;) {
            if (stop.load(std::memory_order_relaxed)) return;
            unsigned long blk = next_block.fetch_add(1, std::memory_order_relaxed);
            if (blk >= n_blocks) return;
            detail::SweepBatch batch;
            batch.block = blk;
            unsigned long lo = std::max(blk * kBlock, start_pos);
            unsigned long hi = std::min((blk + 1) * kBlock, total);
            try {
                for (unsigned long pos = lo; pos < hi; ++pos)
                    batch.recs.push_back(
                        detail::compute_sweep_record(cfg, table.get(), value_at(pos)));
            } catch (...) {
                batch.error = std::current_exception();
            }
            const bool failed = static_cast<bool>(batch.error);
            {
                std::lock_guard<std::mutex> lk(mu);
                ready.emplace(blk, std::move(batch));
            }
            cv.notify_all();
            if (failed) {
                // Blocks already handed out are still pushed, so the writer
                // always reaches this one.
                stop.store(true, std::memory_order_relaxed);
                return;
            }
        }
    };

    std::vector<std::thread> threads;
    threads.reserve(cfg.jobs);
    for (unsigned i = 0; i < cfg.jobs; ++i) threads.emplace_back(worker);

    unsigned long long bytes = start_bytes;
    unsigned long since_ckpt = 0;
    std::exception_ptr failure;

    for (unsigned long expect = first_block; expect < n_blocks; ++expect) {
        detail::SweepBatch batch;
        {
            std::unique_lock<std::mutex> lk(mu);
            cv.wait(lk, [&] { return ready.count(expect) > 0; });
            batch = std::move(ready.at(expect));
            ready.erase(expect);
        }
        if (batch.error) {
            failure = batch.error;
            break;
        }
        bool hit_stop = false;
        for (const detail::ComputedRecord& rec : batch.recs) {
            if (std::fwrite(rec.line.data(), 1, rec.line.size(), out.f) != rec.line.size()) {
                failure = std::make_exception_ptr(
                    std::runtime_error("run_sweep: short write on output"));
                break;
            }
            bytes += rec.line.size();
            ++summary.total_written;
            ++summary.by_status[rec.status];
            ++since_ckpt;
            if (timing.f)
                std::fprintf(timing.f, "{\"key\":\"%s\",\"elapsed_ms\":%ld}\n", rec.key.c_str(),
                             rec.elapsed_ms);
            if (cfg.test_stop_after && summary.total_written >= cfg.test_stop_after) {
                hit_stop = true;
                break;
            }
        }
        if (failure || hit_stop) {
            summary.stopped_early = hit_stop;
            break;
        }
        if (!cfg.checkpoint_path.empty() && since_ckpt >= cfg.checkpoint_every) {
            std::fflush(out.f);
            fsync(fileno(out.f));
            unsigned long next_pos = std::min((expect + 1) * kBlock, total);
            detail::write_checkpoint_file(cfg.checkpoint_path, hash, next_pos,
                                          next_pos < total ? value_at(next_pos) : BigInt(cfg.to + 1),
                                          bytes);
            since_ckpt = 0;
        }
    }

    stop.store(true, std::memory_order_relaxed);
    for (auto& t : threads) t.join();
    if (failure) std::rethrow_exception(failure);

    std::fflush(out.f);
    fsync(fileno(out.f));
    if (!summary.stopped_early && !cfg.checkpoint_path.empty())
        detail::write_checkpoint_file(cfg.checkpoint_path, hash, total, cfg.to + 1, bytes);

    summary.wall_ms = static_cast<unsigned long long>(
        std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - wall0).count());
    return summary;
}

}  // namespace pqf
