#pragma once

#include <utility>

#include "semidyn/groupoid.hpp"
#include "semidyn/partial_action.hpp"
#include "semidyn/recurrence.hpp"
#include "semidyn/report.hpp"

namespace semidyn {

/// Groupoid of germs of a partial action. Arrows are the pointwise
/// equivalence classes of applicable (element, point) pairs; the unit over a
/// point is the class of any applicable idempotent there. Independence of the
/// multiplication, inversion, source/range and unit data from the chosen
/// representatives is verified exhaustively during construction.
struct GermGroupoid {
  PartialAction base;
  std::vector<GermClassTable> tables;  // one per point
  std::vector<int> arrow_base;         // first arrow id of each point
  FiniteGroupoid gpd;
  std::vector<int> unit_of_point;  // point -> unit arrow
  std::vector<int> point_of_unit;  // arrow -> point, -1 for non-units

  int size() const { return gpd.size(); }

  /// arrow of the pair (s, sigma); -1 when s is not applicable to sigma
  int germ_index(int s, int sigma) const {
    int c = tables[sigma].class_of(s);
    return c < 0 ? -1 : arrow_base[sigma] + c;
  }

  int source_point(int arrow) const;
  int target_point(int arrow) const;

  /// minimal representative, ordered by (element, point)
  std::pair<int, int> representative(int arrow) const;
};

GermGroupoid germ_groupoid(const PartialAction& a);

/// (theta_s(sigma), sigma) for an applicable pair / for a germ (the latter
/// is representative-independent by construction).
std::pair<int, int> theta_pair(const PartialAction& a, int s, int sigma);
std::pair<int, int> theta_hat(const GermGroupoid& g, int arrow);

/// Germ arrows from M into N are exactly the preimage of N x M under the
/// endpoint map, and the naive recurrence set is the first-component
/// projection of the pair-level preimage. Also records whether the
/// minimal-representative section maps the arrow set to a proper subset of
/// the naive recurrence set.
CheckReport check_aha(const GermGroupoid& g, const IndexSet& m,
                      const IndexSet& n, const std::string& instance_id);

/// Orbits and invariant sets of the canonical action of the germ groupoid on
/// its unit space agree with those of the underlying partial action
/// (exhaustive over subsets up to 6 points, sampled above).
CheckReport check_enoeno(const GermGroupoid& g, uint64_t seed,
                         const std::string& instance_id);

/// Bijection between arrows out of sigma and pointwise classes at sigma.
struct GammaSigma {
  int sigma = -1;
  std::vector<std::pair<int, int>> arrow_to_class;  // (arrow, class id)
};

GammaSigma gamma_sigma(const GermGroupoid& g, int sigma);

/// The arrow-to-class bijection restricts to a bijection between arrows from
/// sigma into N and the pointwise recurrence classes at sigma.
CheckReport check_bucuros(const GermGroupoid& g, int sigma, const IndexSet& n,
                          const std::string& instance_id);

/// All germs of elements of R: {<s, sigma> : s in R, sigma in dom theta_s}.
IndexSet germ_closure(const GermGroupoid& g, const IndexSet& r);

/// Arrows from M into N sit inside the germ closure of the naive recurrence
/// set, with equality when M is a single point; a strictness witness is
/// recorded when the inclusion is proper.
CheckReport check_ohanesian(const GermGroupoid& g, const IndexSet& m,
                            const IndexSet& n, const std::string& instance_id);

/// The subset maps agree: closing R ⊆ applicable(sigma) into germs equals
/// pulling the class set of R back along the arrow-to-class bijection
/// (exhaustive when applicable(sigma) has at most 12 elements, 4096 seeded
/// samples above).
CheckReport check_cuci(const GermGroupoid& g, int sigma, uint64_t seed,
                       const std::string& instance_id);

/// Germ -> class of the global common-lower-bound congruence.
/// Well-definedness is asserted; surjectivity is reported per instance, not
/// asserted.
struct GammaGlobal {
  Congruence congruence;
  std::vector<int> class_of_germ;
  bool onto = false;
  CheckReport report;
};

GammaGlobal gamma_global(const GermGroupoid& g, const std::string& instance_id);

}  // namespace semidyn
