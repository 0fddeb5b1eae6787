#pragma once

// Stored source listings for the variant catalog.
//
// The catalog algorithms are transliterations of code originally written
// in Python; the listings below are those originals, kept verbatim.  They
// are the input for size analysis (codesize.hpp) and for textual diffs
// between a pair's variants (export-diff).  Keys match the executable
// unit ids where a unit exists; a few listings are documentation-only
// records of intermediate or abandoned rewrites.
//
// Nested definitions are stored as child listings so that size analysis
// can attribute tokens to the enclosing scope and the inner function
// separately.

#include <string>

#include "varbench/codesize.hpp"

namespace varbench::corpus {

inline ListingStore catalog_listings() {
  ListingStore store;
  auto put = [&store](std::string name, std::string text,
                      std::vector<SourceListing> nested = {}) {
    SourceListing listing;
    listing.name = name;
    listing.text = std::move(text);
    listing.nested = std::move(nested);
    store.emplace(std::move(name), std::move(listing));
  };

  // -------------------------------------------------------------------
  // Per-band extrema family.
  // -------------------------------------------------------------------

  const std::string original_minmax =
      R"PY(    def minmax(histogram):
        n = 255
        x = 0
        for i in range(256):
            if histogram[i]:
                n = min(n, i)
                x = max(x, i)
        return n, x  # returns (255, 0) if there's no data in the histogram
)PY";
  put("getextrema/original",
      "def _getextrema(self):\n"
      "    \"\"\"Get min/max values for each band in the image\"\"\"\n"
      "\n" +
          original_minmax +
          "\n"
          "    v = []\n"
          "    for i in range(0, len(self.h), 256):\n"
          "        v.append(minmax(self.h[i:]))\n"
          "    return v\n",
      {SourceListing{"minmax", original_minmax, {}}});

  const std::string merged_minmax =
      R"PY(    def minmax(histogram):
        res_min, res_max = 255, 0
        for i in range(256):
            if histogram[i]:
                res_min = i
                break
        for i in range(255, -1, -1):
            if histogram[i]:
                res_max = i
                break
        return res_min, res_max
)PY";
  put("getextrema/final",
      "def _getextrema(self):\n"
      "    \"\"\"Get min/max values for each band in the image\"\"\"\n"
      "\n" +
          merged_minmax +
          "\n"
          "    return [minmax(self.h[i:]) for i in range(0, len(self.h), "
          "256)]\n",
      {SourceListing{"minmax", merged_minmax, {}}});

  put("getextrema/oneliner",
      R"PY(    def _getextrema(self):
        return [(min(h), max(h)) for h in (self.h[i:i + 256] for i in range(0, len(self.h), 256))]
)PY");

  put("getextrema/wholescan",
      R"PY(def minmax(histogram):
    n, x = 255, 0
    for i, val in enumerate(histogram):
        if val:
            n = min(n, i)
            x = max(x, i)
    return n, x
)PY");

  put("getextrema/valuefilter",
      R"PY(def minmax_optimized(histogram):
    # Filter out zeros and find the minimum and maximum values.
    filtered_histogram = [i for i in histogram if i]
    if not filtered_histogram:
        return (255, 0)
    return min(filtered_histogram), max(filtered_histogram)
)PY");

  const std::string islice_minmax =
      R"PY(    def minmax(h):
        res_min = next((i for i, x in islice(enumerate(h), 256) if x), None)
        if res_min is None:
            return 255, 0
        res_max = 255 - next((i for i, x in enumerate(reversed(h[:256])) if x), None)
        return res_min, res_max
)PY";
  put("getextrema/islice",
      "def _getextrema(self):\n"
      "    \"\"\"Get min/max values for each band in the image\"\"\"\n"
      "\n"
      "    from itertools import islice\n"
      "\n" +
          islice_minmax +
          "\n"
          "    v = []\n"
          "    for i in range(0, len(self.h), 256):\n"
          "        v.append(minmax(self.h[i:]))\n"
          "    return v\n",
      {SourceListing{"minmax", islice_minmax, {}}});

  const std::string draft_minmax =
      R"PY(    def minmax(h):
        res_min, res_max = 255, 0
        for i in range(256):
            if h[i]:
                res_min = i
                break
        for i in range(255, -1, -1):
            if h[i]:
                res_max = i
                break
        return res_min, res_max if res_max >= res_min else 0
)PY";
  put("getextrema/early-exit-draft",
      "def _getextrema(h):\n" + draft_minmax +
          "\n"
          "    v = []\n"
          "    for i in range(0, len(h), 256):\n"
          "        v.append(minmax(h[i:i+256]))\n"
          "    return v\n",
      {SourceListing{"minmax", draft_minmax, {}}});

  const std::string explicit_minmax =
      R"PY(    def minmax(h):
        res_min, res_max = 255, 0
        for i in range(256):
            if h[i]:
                res_min = i
                break
        for i in range(255, -1, -1):
            if h[i]:
                res_max = i
                break
        if res_max >= res_min:
            return res_min, res_max
        else:
            return (255, 0)
)PY";
  put("getextrema/early-exit-explicit",
      "def _getextrema(h):\n" + explicit_minmax +
          "\n"
          "    v = []\n"
          "    for i in range(0, len(h), 256):\n"
          "        v.append(minmax(h[i:i+256]))\n"
          "    return v\n",
      {SourceListing{"minmax", explicit_minmax, {}}});

  const std::string arraylib_minmax =
      R"PY(    def minmax_np(h):
        res_min = np.min(np.nonzero(h))
        res_max = 255 - np.min(np.nonzero(h[::-1]))
        return res_min, res_max
)PY";
  put("getextrema/arraylib",
      "import numpy as np\n"
      "\n"
      "def _getextrema(self):\n"
      "\n" +
          arraylib_minmax +
          "\n"
          "    v = []\n"
          "    for i in range(0, len(self.h), 256):\n"
          "        v.append(minmax_np(np.array(self.h[i:i+256])))\n"
          "\n"
          "    return v\n",
      {SourceListing{"minmax_np", arraylib_minmax, {}}});

  // -------------------------------------------------------------------
  // Per-band totals.
  // -------------------------------------------------------------------

  put("getcount/original",
      R"PY(def _getcount(self):
    """Get total number of pixels in each layer"""

    v = []
    for i in range(0, len(self.h), 256):
        v.append(functools.reduce(operator.add, self.h[i : i + 256]))
    return v
)PY");

  put("getcount/sum",
      R"PY(def _getcount(self):
    """Get total number of pixels in each layer"""
    return [sum(self.h[i: i + 256]) for i in range(0, len(self.h), 256)]
)PY");

  // -------------------------------------------------------------------
  // Coefficient-list validation.
  // -------------------------------------------------------------------

  put("as_series/original",
      R"PY(def as_series(alist, trim=True):
    arrays = [np.array(a, ndmin=1, copy=False) for a in alist]
    if min([a.size for a in arrays]) == 0:
        raise ValueError("Coefficient array is empty")
    if any(a.ndim != 1 for a in arrays):
        raise ValueError("Coefficient array is not 1-d")
)PY");

  put("as_series/earlyexit",
      R"PY(def as_series_opt(alist, trim=True):
    arrays = [np.array(a, ndmin=1, copy=False) for a in alist]
    for a in arrays:
        if a.size == 0:
            raise ValueError("Coefficient array is empty")
    if any(a.ndim != 1 for a in arrays):
        raise ValueError("Coefficient array is not 1-d")
)PY");

  // -------------------------------------------------------------------
  // Counter loops.
  // -------------------------------------------------------------------

  put("micro/loop-family/range",
      R"PY(def for_repeat():
    for i in range(10000):
        pass
)PY");

  put("micro/loop-family/while",
      R"PY(def while_impl():
    i = 0
    while i < 10000:
        i += 1
)PY");

  put("micro/loop-family/boxed-scalar",
      R"PY(import numpy as np

def numpy_impl():
    i = np.ushort(0)
    while i < 10000:
        i += 1
)PY");

  put("micro/loop-family/boxed-fixed",
      R"PY(import fixedint

def fixedint_impl():
    i = fixedint.UInt16(0)
    while i < 10000:
        i += 1
)PY");

  put("micro/loop-family/unrolled",
      R"PY(def range_unroll():
    for i in range(0, 10000, 2):
        j = i
        j += 1
)PY");

  put("micro/loop-family/iter-counter",
      R"PY(import itertools

def itertools_impl():
    c = itertools.count(0)
    while next(c) < 10000:
        pass
)PY");

  // -------------------------------------------------------------------
  // First set bin.
  // -------------------------------------------------------------------

  put("micro/first-nonzero/loop",
      R"PY(def loop(h):
    for i in range(256):
        if h[i]:
            return i
)PY");

  put("micro/first-nonzero/generator",
      R"PY(from itertools import islice

def generator(h):
    return next((i for i, x in islice(enumerate(h), 256) if x), None)
)PY");

  // -------------------------------------------------------------------
  // Assignment shapes.
  // -------------------------------------------------------------------

  put("micro/assignment/sequential",
      R"PY(def linebyline():
    a = 0
    b = 1
    c = 2
    d = 3
    e = 4
    f = 5
    g = 6
    h = 7
    i = 8
    j = 9
)PY");

  put("micro/assignment/tuple",
      R"PY(def tuple_impl():
    a, b, c, d, e, f, g, h, i, j = 0, 1, 2, 3, 4, 5, 6, 7, 8, 9
)PY");

  // -------------------------------------------------------------------
  // Conditional shapes.
  // -------------------------------------------------------------------

  put("micro/conditional/ternary",
      R"PY(def ternary(res_min, res_max):
    return res_min, res_max if res_max >= res_min else (255, 0)
)PY");

  put("micro/conditional/if-else",
      R"PY(def explicit_if(res_min, res_max):
    if res_max >= res_min:
        return (255, 0)
    else:
        return res_min, res_max
)PY");

  // -------------------------------------------------------------------
  // List building.
  // -------------------------------------------------------------------

  const std::string append_some_data =
      R"PY(    def some_data(i):
        return (i, i+1)
)PY";
  put("micro/build/append",
      "def append():\n" + append_some_data +
          "\n"
          "    v = []\n"
          "    for i in range(0, 100):\n"
          "        v.append(some_data(i))\n"
          "    return v\n",
      {SourceListing{"some_data", append_some_data, {}}});

  put("micro/build/comprehension",
      "def generator():\n" + append_some_data +
          "\n"
          "    return [some_data(i) for i in range(0, 100)]\n",
      {SourceListing{"some_data", append_some_data, {}}});

  return store;
}

// Shared immutable instance.
inline const ListingStore& listings() {
  static const ListingStore store = catalog_listings();
  return store;
}

}  // namespace varbench::corpus
