#include "semidyn/partial_bijection.hpp"

namespace semidyn {

PartialBijection PartialBijection::from_images(std::vector<int> img) {
  const int m = static_cast<int>(img.size());
  std::vector<char> hit(m, 0);
  for (int p = 0; p < m; ++p) {
    int q = img[p];
    if (q < -1 || q >= m) fail("BadMap", str("image ", q, " out of range"));
    if (q >= 0) {
      if (hit[q]) fail("NotInjective", str("two points map to ", q));
      hit[q] = 1;
    }
  }
  PartialBijection b;
  b.img_ = std::move(img);
  return b;
}

PartialBijection PartialBijection::identity_on(int m, const IndexSet& pts) {
  std::vector<int> img(m, -1);
  for (int p : pts) img[p] = p;
  return from_images(std::move(img));
}

IndexSet PartialBijection::domain() const {
  IndexSet out;
  for (int p = 0; p < space_size(); ++p)
    if (img_[p] >= 0) out.push_back(p);
  return out;
}

IndexSet PartialBijection::image() const {
  IndexSet out;
  for (int p = 0; p < space_size(); ++p)
    if (img_[p] >= 0) out.push_back(img_[p]);
  canonicalize(out);
  return out;
}

PartialBijection PartialBijection::inverse() const {
  std::vector<int> img(img_.size(), -1);
  for (int p = 0; p < space_size(); ++p)
    if (img_[p] >= 0) img[img_[p]] = p;
  return from_images(std::move(img));
}

PartialBijection PartialBijection::compose(const PartialBijection& f,
                                           const PartialBijection& g) {
  internal_check(f.space_size() == g.space_size(),
                 "composing maps on different spaces");
  std::vector<int> img(g.img_.size(), -1);
  for (int p = 0; p < g.space_size(); ++p) {
    int q = g.img_[p];
    if (q >= 0 && f.img_[q] >= 0) img[p] = f.img_[q];
  }
  return from_images(std::move(img));
}

bool PartialBijection::restriction_of(const PartialBijection& t) const {
  for (int p = 0; p < space_size(); ++p)
    if (img_[p] >= 0 && t.img_[p] != img_[p]) return false;
  return true;
}

}  // namespace semidyn
