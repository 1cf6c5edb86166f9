#ifndef SEAWEED_RATIONAL_HPP
#define SEAWEED_RATIONAL_HPP

#include <gmpxx.h>
#include <string>
#include <vector>

namespace seaweed {

/// Exact rational scalar. All core arithmetic is exact; no floating point.
using Rat = mpq_class;

using QVec = std::vector<Rat>;

inline std::string rat_str(const Rat& x) { return x.get_str(); }

inline bool is_zero(const Rat& x) { return sgn(x) == 0; }

inline QVec qvec_zero(std::size_t n) { return QVec(n, Rat(0)); }

} // namespace seaweed

#endif
