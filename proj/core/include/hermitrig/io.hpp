#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "hermitrig/hermite.hpp"
#include "hermitrig/spectral.hpp"

namespace hermitrig {

// File formats are small JSON documents: human-writable, diff-friendly, and
// deterministic on write (fixed field order, numbers at 17 significant
// digits so binary64 values survive a round trip exactly).

class io_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct SampleFile {
    HermiteSamples samples;
    BuildMode mode = BuildMode::paper_H_terms;
    bool has_mode = false;  // whether the document carried a mode field
};

struct PolyFile {
    HermiteTrigPoly poly;
    BuildMode mode = BuildMode::paper_H_terms;
};

// Sample documents: {"family": 0|1, "n": ... (or "N"), "p": ...,
// "rows": [[...], ...], "mode": "strict"|"paper" (optional)}.
SampleFile parse_sample_text(const std::string& text, const std::string& origin);
SampleFile read_sample_file(const std::string& path);
std::string sample_to_text(const SampleFile& file);
void write_sample_file(const SampleFile& file, const std::string& path);

// Coefficient documents: grid, p, mode, const_term, the (frequency,
// coefficient) pairs of both families in ascending frequency, mean_terms.
std::string poly_to_text(const HermiteTrigPoly& poly, BuildMode mode);
void write_poly_file(const HermiteTrigPoly& poly, BuildMode mode, const std::string& path);
PolyFile parse_poly_text(const std::string& text, const std::string& origin);
PolyFile read_poly_file(const std::string& path);

// Evaluation points: either a comma-separated list ("0,1.5,2") or a range
// spec "start:stop:count" with both endpoints included.
std::vector<double> parse_points_spec(const std::string& spec);

// Shortest text that still round-trips binary64 exactly: %.17g.
std::string format_double(double v);

std::string mode_name(BuildMode mode);          // "strict" | "paper"
BuildMode mode_from_name(const std::string& s);  // inverse, throws io_error

}  // namespace hermitrig
