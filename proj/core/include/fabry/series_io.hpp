#pragma once

#include <iosfwd>
#include <string>

#include "fabry/coeff_seq.hpp"
#include "fabry/trig_poly.hpp"

namespace fabry {

// Coefficient file formats.
//
// JSON lines: one object per line, fields `n` (integer >= 0), `re`, `im`.
// Lines with a duplicate `n` are an error; indices not mentioned are zero.
// CSV: header `n,re,im`, one coefficient per row, same rules.
//
// Trigonometric polynomials use the same two shapes with field `k`, which
// may be negative (header `k,re,im`).

enum class SeriesFormat { auto_detect, jsonl, csv };

CoeffSeq read_coeff_seq(const std::string& path,
                        SeriesFormat format = SeriesFormat::auto_detect);
CoeffSeq read_coeff_seq(std::istream& in, SeriesFormat format);

TrigPoly read_trig_poly(const std::string& path,
                        SeriesFormat format = SeriesFormat::auto_detect);
TrigPoly read_trig_poly(std::istream& in, SeriesFormat format);

}  // namespace fabry
