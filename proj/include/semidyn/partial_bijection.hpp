#pragma once

#include <vector>

#include "semidyn/error.hpp"
#include "semidyn/util.hpp"

namespace semidyn {

/// Injective partial map on points 0..m-1, stored as an image vector with -1
/// marking "undefined". Composition and inversion stay inside the class.
class PartialBijection {
 public:
  PartialBijection() = default;

  /// Validates range and injectivity (error NotInjective / BadMap).
  static PartialBijection from_images(std::vector<int> img);

  static PartialBijection empty_map(int m) {
    return from_images(std::vector<int>(m, -1));
  }

  static PartialBijection identity_on(int m, const IndexSet& pts);

  int space_size() const { return static_cast<int>(img_.size()); }

  bool defined_at(int p) const { return img_[p] >= 0; }

  /// image of p, or -1 when undefined
  int apply(int p) const { return img_[p]; }

  IndexSet domain() const;
  IndexSet image() const;

  PartialBijection inverse() const;

  /// apply g first, then f, on the largest domain where that makes sense
  static PartialBijection compose(const PartialBijection& f,
                                  const PartialBijection& g);

  /// graph inclusion: defined wherever this is, with equal values
  bool restriction_of(const PartialBijection& t) const;

  bool operator==(const PartialBijection&) const = default;

  const std::vector<int>& images() const { return img_; }

 private:
  std::vector<int> img_;
};

}  // namespace semidyn
