#pragma once

// Bounds-checked sequence views over histogram storage.
//
// The catalog algorithms were written against a runtime whose sequences
// raise an index error when read past the end instead of invoking
// undefined behaviour, and whose slices clamp instead of throwing.  The
// views here reproduce exactly those semantics so that the transliterated
// algorithms keep their original control flow, including the error paths.

#include <cstdint>

#include "varbench/errors.hpp"

namespace varbench::corpus {

// Non-owning view of a run of int64 bins.  operator[] performs a bounds
// check and throws the sequence index error on violation.  An optional
// read counter makes bin inspections observable for instrumented checks;
// timed runs pass no counter.
class band_view {
 public:
  band_view(const std::int64_t* data, std::int64_t size,
            std::int64_t* reads = nullptr)
      : data_(data), size_(size), reads_(reads) {}

  std::int64_t operator[](std::int64_t i) const {
    if (i < 0 || i >= size_) {
      throw harness_error(errclass::index_error, "list index out of range");
    }
    if (reads_ != nullptr) {
      ++*reads_;
    }
    return data_[i];
  }

  std::int64_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  // h[from:] — open-ended tail slice; clamps like a slice expression.
  band_view tail(std::int64_t from) const {
    const std::int64_t start = clamp_index(from);
    return band_view(data_ + start, size_ - start, reads_);
  }

  // h[from:from+count] — clamped window slice.
  band_view slice(std::int64_t from, std::int64_t count) const {
    const std::int64_t start = clamp_index(from);
    const std::int64_t stop = clamp_index(from + count);
    return band_view(data_ + start, stop > start ? stop - start : 0, reads_);
  }

 private:
  std::int64_t clamp_index(std::int64_t i) const {
    if (i < 0) return 0;
    if (i > size_) return size_;
    return i;
  }

  const std::int64_t* data_;
  std::int64_t size_;
  std::int64_t* reads_;
};

}  // namespace varbench::corpus
