#include <algorithm>
#include <map>

#include "zdlab/enumerate.hpp"

namespace zdlab {

std::vector<ElementSignature> element_signatures(const FiniteRing& ring) {
  const std::size_t n = ring.order();
  std::vector<ElementSignature> sig(n);
  std::vector<std::uint32_t> order(n);
  for (std::size_t x = 0; x < n; ++x) {
    order[x] = static_cast<std::uint32_t>(additive_order(ring, static_cast<Element>(x)));
  }
  for (std::size_t x = 0; x < n; ++x) {
    const auto e = static_cast<Element>(x);
    ElementSignature& s = sig[x];
    s.additive_order = order[x];
    const Element sq = ring.mul(e, e);
    s.square_order = order[sq];
    s.square_zero = sq == 0;
    s.idempotent = sq == e;
    bool left_id = x != 0;
    bool right_id = x != 0;
    for (std::size_t y = 0; y < n; ++y) {
      const auto f = static_cast<Element>(y);
      if (ring.mul(f, e) == 0) ++s.left_annihilator;
      if (ring.mul(e, f) == 0) ++s.right_annihilator;
      if (ring.mul(e, f) != y) left_id = false;
      if (ring.mul(f, e) != y) right_id = false;
    }
    s.left_identity = left_id;
    s.right_identity = right_id;
  }
  return sig;
}

namespace {

class IsomorphismSearch {
 public:
  IsomorphismSearch(const FiniteRing& a, const FiniteRing& b)
      : a_(a), b_(b), n_(a.order()) {}

  std::optional<std::vector<Element>> run() {
    if (b_.order() != n_) return std::nullopt;
    sig_a_ = element_signatures(a_);
    sig_b_ = element_signatures(b_);
    {
      auto sa = sig_a_;
      auto sb = sig_b_;
      std::sort(sa.begin(), sa.end());
      std::sort(sb.begin(), sb.end());
      if (sa != sb) return std::nullopt;
    }
    choose_generators();
    for (const Element g : generators_) {
      std::vector<Element> cands;
      for (std::size_t y = 0; y < n_; ++y) {
        if (sig_b_[y] == sig_a_[g]) cands.push_back(static_cast<Element>(y));
      }
      candidates_.push_back(std::move(cands));
    }
    phi_.assign(n_, kUnset);
    used_.assign(n_, 0);
    phi_[0] = 0;
    used_[0] = 1;
    domain_ = {0};
    if (!extend(0)) return std::nullopt;
    std::vector<Element> out(n_);
    for (std::size_t x = 0; x < n_; ++x) out[x] = static_cast<Element>(phi_[x]);
    return out;
  }

 private:
  static constexpr std::uint32_t kUnset = 0xffffffffu;

  // Greedy additive generating set: repeatedly take the element of largest
  // additive order outside the current span.
  void choose_generators() {
    std::vector<char> span(n_, 0);
    std::vector<Element> members{0};
    span[0] = 1;
    while (members.size() < n_) {
      Element pick = 0;
      std::uint32_t best = 0;
      for (std::size_t x = 1; x < n_; ++x) {
        if (!span[x] && sig_a_[x].additive_order > best) {
          best = sig_a_[x].additive_order;
          pick = static_cast<Element>(x);
        }
      }
      generators_.push_back(pick);
      std::vector<Element> grown = members;
      for (Element multiple = pick; !span[multiple]; multiple = a_.add(multiple, pick)) {
        for (Element h : members) {
          const Element x = a_.add(h, multiple);
          if (!span[x]) {
            span[x] = 1;
            grown.push_back(x);
          }
        }
      }
      members = std::move(grown);
    }
  }

  bool extend(std::size_t t) {
    if (t == generators_.size()) return multiplicative_everywhere();
    const Element gen = generators_[t];
    for (const Element image : candidates_[t]) {
      if (used_[image]) continue;
      std::vector<Element> added;
      if (assign_coset(gen, image, added) && multiplicative_on(added) &&
          extend(t + 1)) {
        return true;
      }
      for (Element x : added) {
        used_[phi_[x]] = 0;
        phi_[x] = kUnset;
      }
      domain_.resize(domain_.size() - added.size());
    }
    return false;
  }

  // phi(h + s gen) = phi(h) + s image over the current domain H.
  bool assign_coset(Element gen, Element image, std::vector<Element>& added) {
    const std::vector<Element> base = domain_;
    Element multiple = gen;
    Element target = image;
    while (phi_[multiple] == kUnset) {
      for (Element h : base) {
        const Element x = a_.add(h, multiple);
        const auto y = static_cast<Element>(b_.add(static_cast<Element>(phi_[h]), target));
        if (phi_[x] != kUnset || used_[y] || !(sig_a_[x] == sig_b_[y])) return false;
        phi_[x] = y;
        used_[y] = 1;
        added.push_back(x);
        domain_.push_back(x);
      }
      multiple = a_.add(multiple, gen);
      target = b_.add(target, image);
    }
    // multiple now lies in the old span; the relation must carry over.
    return phi_[multiple] == target;
  }

  bool multiplicative_on(const std::vector<Element>& added) const {
    for (Element x : added) {
      for (Element y : domain_) {
        const Element xy = a_.mul(x, y);
        if (phi_[xy] != kUnset &&
            phi_[xy] != b_.mul(static_cast<Element>(phi_[x]), static_cast<Element>(phi_[y]))) {
          return false;
        }
        const Element yx = a_.mul(y, x);
        if (phi_[yx] != kUnset &&
            phi_[yx] != b_.mul(static_cast<Element>(phi_[y]), static_cast<Element>(phi_[x]))) {
          return false;
        }
      }
    }
    return true;
  }

  bool multiplicative_everywhere() const {
    for (std::size_t x = 0; x < n_; ++x) {
      for (std::size_t y = 0; y < n_; ++y) {
        const Element xy = a_.mul(static_cast<Element>(x), static_cast<Element>(y));
        if (phi_[xy] != b_.mul(static_cast<Element>(phi_[x]), static_cast<Element>(phi_[y]))) {
          return false;
        }
      }
    }
    return true;
  }

  const FiniteRing& a_;
  const FiniteRing& b_;
  std::size_t n_;
  std::vector<ElementSignature> sig_a_, sig_b_;
  std::vector<Element> generators_;
  std::vector<std::vector<Element>> candidates_;
  std::vector<std::uint32_t> phi_;
  std::vector<char> used_;
  std::vector<Element> domain_;
};

}  // namespace

std::optional<std::vector<Element>> find_isomorphism(const FiniteRing& a,
                                                     const FiniteRing& b) {
  return IsomorphismSearch(a, b).run();
}

bool is_isomorphic(const FiniteRing& a, const FiniteRing& b) {
  return find_isomorphism(a, b).has_value();
}

}  // namespace zdlab
