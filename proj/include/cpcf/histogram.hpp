#pragma once

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "cpcf/lattice.hpp"

namespace cpcf {

// Integer counts indexed by distance m >= 1. Reads past the end yield zero.
class DistanceHistogram {
 public:
  DistanceHistogram() = default;
  explicit DistanceHistogram(int m_max) : counts_(static_cast<std::size_t>(std::max(m_max, 0)), 0) {}
  explicit DistanceHistogram(std::vector<Count> counts) : counts_(std::move(counts)) {}

  int m_max() const { return static_cast<int>(counts_.size()); }
  Count operator[](int m) const {
    return m >= 1 && m <= m_max() ? counts_[static_cast<std::size_t>(m - 1)] : 0;
  }
  void add(int m, Count value) {
    if (m < 1) throw DomainError("histogram distance must be >= 1");
    if (m > m_max()) counts_.resize(static_cast<std::size_t>(m), 0);
    counts_[static_cast<std::size_t>(m - 1)] += value;
  }
  void resize(int m_max) { counts_.resize(static_cast<std::size_t>(std::max(m_max, 0)), 0); }

  Count total() const { return std::accumulate(counts_.begin(), counts_.end(), Count{0}); }
  const std::vector<Count>& counts() const { return counts_; }

  DistanceHistogram trimmed() const {
    auto last = std::find_if(counts_.rbegin(), counts_.rend(), [](Count c) { return c != 0; });
    return DistanceHistogram(std::vector<Count>(counts_.begin(), last.base()));
  }

  DistanceHistogram& operator+=(const DistanceHistogram& other) {
    if (other.m_max() > m_max()) resize(other.m_max());
    for (int m = 1; m <= other.m_max(); ++m) counts_[static_cast<std::size_t>(m - 1)] += other[m];
    return *this;
  }

  // Entrywise equality ignoring trailing zeros.
  friend bool operator==(const DistanceHistogram& a, const DistanceHistogram& b) {
    const int n = std::max(a.m_max(), b.m_max());
    for (int m = 1; m <= n; ++m) {
      if (a[m] != b[m]) return false;
    }
    return true;
  }

  friend std::ostream& operator<<(std::ostream& os, const DistanceHistogram& h) {
    os << "[";
    for (int m = 1; m <= h.m_max(); ++m) os << (m > 1 ? " " : "") << h[m];
    return os << "]";
  }

 private:
  std::vector<Count> counts_;
};

// "m,count" with one row for every 1 <= m <= m_max, zeros included.
inline void write_histogram_csv(std::ostream& os, const DistanceHistogram& h) {
  os << "m,count\n";
  for (int m = 1; m <= h.m_max(); ++m) os << m << ',' << h[m] << '\n';
}

inline std::string histogram_csv(const DistanceHistogram& h) {
  std::ostringstream os;
  write_histogram_csv(os, h);
  return os.str();
}

}  // namespace cpcf
