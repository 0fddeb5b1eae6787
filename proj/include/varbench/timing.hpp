#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "varbench/errors.hpp"
#include "varbench/model.hpp"

namespace varbench {

// ---------------------------------------------------------------------------
// Clocks
// ---------------------------------------------------------------------------

// Monotonic time source in seconds. Injectable so measurements are testable
// with deterministic schedules.
class Clock {
 public:
  virtual ~Clock() = default;
  virtual double now() = 0;
  virtual double resolution() const = 0;
};

class SteadyClock final : public Clock {
 public:
  SteadyClock() : origin_(std::chrono::steady_clock::now()) {}

  double now() override {
    const auto elapsed = std::chrono::steady_clock::now() - origin_;
    return std::chrono::duration<double>(elapsed).count();
  }

  double resolution() const override {
    using period = std::chrono::steady_clock::period;
    return static_cast<double>(period::num) / static_cast<double>(period::den);
  }

 private:
  std::chrono::steady_clock::time_point origin_;
};

// Deterministic clock for tests. Timestamps live on an integer grid of
// 2^-30-second ticks, so interval arithmetic in doubles is exact and
// schedules built from doubling relations keep those relations bit-exact
// through subtraction and division. Each scheduled interval is consumed by
// one (start, end) pair of now() calls; consecutive intervals abut.
class ScriptedClock final : public Clock {
 public:
  static constexpr std::int64_t ticks_per_second = std::int64_t{1} << 30;

  explicit ScriptedClock(std::vector<std::int64_t> interval_ticks,
                         std::int64_t resolution_ticks = 1)
      : intervals_(std::move(interval_ticks)),
        resolution_ticks_(resolution_ticks) {
    if (resolution_ticks_ < 1)
      throw contract_error("scripted clock: resolution must be >= 1 tick");
    for (auto t : intervals_)
      if (t < 0) throw contract_error("scripted clock: negative interval");
  }

  static std::int64_t ms_to_ticks(double ms) {
    return static_cast<std::int64_t>(
        std::floor(ms * (static_cast<double>(ticks_per_second) / 1000.0)));
  }

  static double ticks_to_seconds(std::int64_t ticks) {
    return static_cast<double>(ticks) / static_cast<double>(ticks_per_second);
  }

  // Convenience: schedule built from per-run totals in milliseconds.
  static ScriptedClock from_run_totals_ms(const std::vector<double>& totals_ms) {
    std::vector<std::int64_t> ticks;
    ticks.reserve(totals_ms.size());
    for (double ms : totals_ms) ticks.push_back(ms_to_ticks(ms));
    return ScriptedClock(std::move(ticks));
  }

  double now() override {
    if (!interval_open_) {
      interval_open_ = true;
      return ticks_to_seconds(cursor_ticks_);
    }
    if (next_ >= intervals_.size())
      throw contract_error("scripted clock: schedule exhausted");
    cursor_ticks_ += intervals_[next_++];
    interval_open_ = false;
    return ticks_to_seconds(cursor_ticks_);
  }

  double resolution() const override {
    return ticks_to_seconds(resolution_ticks_);
  }

  std::size_t intervals_consumed() const { return next_; }

 private:
  std::vector<std::int64_t> intervals_;
  std::int64_t resolution_ticks_;
  std::int64_t cursor_ticks_ = 0;
  std::size_t next_ = 0;
  bool interval_open_ = false;
};

// ---------------------------------------------------------------------------
// Measurement errors
// ---------------------------------------------------------------------------

// A unit raised during warmup or a timed run. Aborts the measurement;
// measure_pair attaches the item id and the records completed so far.
class measurement_error : public std::runtime_error {
 public:
  measurement_error(std::string unit_id, const std::string& cause)
      : std::runtime_error("unit " + unit_id + " failed during measurement: " +
                           cause),
        unit_id_(std::move(unit_id)) {}

  const std::string& unit_id() const noexcept { return unit_id_; }
  const std::string& item_id() const noexcept { return item_id_; }
  const std::vector<MeasurementRecord>& partial_records() const noexcept {
    return partial_;
  }

  void set_context(std::string item_id, std::vector<MeasurementRecord> partial) {
    item_id_ = std::move(item_id);
    partial_ = std::move(partial);
  }

 private:
  std::string unit_id_;
  std::string item_id_;
  std::vector<MeasurementRecord> partial_;
};

// ---------------------------------------------------------------------------
// Min-of-repeats timing
// ---------------------------------------------------------------------------

struct TimedRun {
  std::vector<double> totals;       // one wall-time total per repeat
  double t = 0.0;                   // min of totals
  bool resolution_limited = false;  // some raw total was clamped up
};

// Times spec.number consecutive invocations, spec.repeat times. The timed
// region contains only the invocation loop; warmup, payload access, and
// bookkeeping all happen outside it. Raw totals below the clock's
// resolution are clamped up to it and flagged.
inline TimedRun time_unit(const ExecutableUnit& unit, const Payload& payload,
                          const TimingSpec& spec, Clock& clock) {
  spec.validate();
  if (!unit.run_timed)
    throw contract_error("unit " + unit.id + " has no timed surface");

  if (spec.warmup) {
    try {
      unit.run_timed(payload);
    } catch (const std::exception& e) {
      throw measurement_error(unit.id, std::string("warmup: ") + e.what());
    }
  }

  TimedRun run;
  run.totals.reserve(static_cast<std::size_t>(spec.repeat));
  const double resolution = clock.resolution();
  for (std::int64_t r = 0; r < spec.repeat; ++r) {
    const double start = clock.now();
    try {
      for (std::int64_t n = 0; n < spec.number; ++n) unit.run_timed(payload);
    } catch (const std::exception& e) {
      throw measurement_error(unit.id, e.what());
    }
    const double end = clock.now();
    double total = end - start;
    if (total < resolution) {
      total = resolution;
      run.resolution_limited = true;
    }
    run.totals.push_back(total);
  }
  run.t = min_total(run.totals);
  return run;
}

// Global run lock: at most one measurement in progress per process.
inline std::mutex& run_lock() {
  static std::mutex lock;
  return lock;
}

// Measures baseline then candidate, back to back, for every dataset item.
// An empty dataset (legal only for payload-free pairs) yields one record
// under the synthetic item id "∅". Each unit receives its own fresh copy of
// the payload.
inline std::vector<MeasurementRecord> measure_pair(const VariantPair& pair,
                                                   const Dataset& dataset,
                                                   const TimingSpec& spec,
                                                   Clock& clock) {
  spec.validate();
  std::lock_guard<std::mutex> guard(run_lock());

  std::vector<MeasurementRecord> records;
  auto measure_item = [&](const std::string& item_id, const Payload& payload) {
    try {
      Payload fresh_baseline = payload;
      const TimedRun baseline = time_unit(pair.baseline, fresh_baseline, spec, clock);
      Payload fresh_candidate = payload;
      const TimedRun candidate = time_unit(pair.candidate, fresh_candidate, spec, clock);
      records.push_back(MeasurementRecord::make(
          pair.id, item_id, spec, baseline.totals, candidate.totals,
          baseline.resolution_limited || candidate.resolution_limited));
    } catch (measurement_error& e) {
      e.set_context(item_id, std::move(records));
      throw;
    }
  };

  if (dataset.items.empty()) {
    if (pair.dataset_hint != schema::none)
      throw contract_error("pair " + pair.id + " expects payload schema '" +
                           pair.dataset_hint + "' but the dataset is empty");
    measure_item(no_item_id, std::monostate{});
    return records;
  }

  if (dataset.schema != pair.dataset_hint)
    throw contract_error("pair " + pair.id + " expects payload schema '" +
                         pair.dataset_hint + "' but the dataset has '" +
                         dataset.schema + "'");
  for (const auto& item : dataset.items) measure_item(item.id, item.payload);
  return records;
}

}  // namespace varbench
