#ifndef MANDELROOTS_SERIALIZE_HPP
#define MANDELROOTS_SERIALIZE_HPP

// Persistence formats.
//
// Binary ("MROOT1"): 6-byte magic, u64 little-endian point count, u8
// precision tag (0 = double), then one little-endian IEEE-754 double pair
// (re, im) per point in index order. Round-trips bit-exactly.
//
// CSV: one "re,im" row per point with 17 significant digits; a non-numeric
// first line (header) is skipped on load. High-precision sets are exported
// as CSV only, with the requested digit count.

#include <string>

#include "mandelroots/rootset.hpp"

namespace mandelroots {

enum class RootSetFormat { Binary, Csv };

void save_rootset(const RootSet& rs, const std::string& path, RootSetFormat format);

/// Detects binary vs CSV by the magic bytes. Loaded points are marked
/// Converged; neighbor distances are unset (the formats persist points only).
RootSet load_rootset(const std::string& path);

/// CSV export of a high-precision set with `digits` significant digits.
void save_rootset_csv(const RootSetHP& rs, const std::string& path, int digits);

/// CSV load parsed in double-double arithmetic.
RootSetHP load_rootset_csv_hp(const std::string& path);

}  // namespace mandelroots

#endif
