#include "zdlab/builders.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

namespace zdlab {

namespace {

void check_cap(std::size_t order, const SizeCaps& caps, const std::string& what) {
  if (order > caps.builder || order > 65536) {
    throw RingError(ErrorKind::TooLarge,
                    what + " has order " + std::to_string(order) +
                        ", above the builder cap " +
                        std::to_string(caps.builder));
  }
}

// Checked integer power; returns 0 on overflow past `limit`.
std::size_t bounded_pow(std::size_t base, std::size_t exp, std::size_t limit) {
  std::size_t result = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (result > limit / base) return 0;
    result *= base;
  }
  return result;
}

using BinaryOp = std::function<std::size_t(std::size_t, std::size_t)>;

FiniteRing tabulate(std::size_t n, const BinaryOp& add, const BinaryOp& mul,
                    std::string label, std::vector<std::string> names = {}) {
  std::vector<Element> a(n * n), m(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      a[i * n + j] = static_cast<Element>(add(i, j));
      m[i * n + j] = static_cast<Element>(mul(i, j));
    }
  }
  return validate_ring(n, std::move(a), std::move(m), std::move(label),
                       std::move(names));
}

// Base-`radix` digits of x, most significant first.
std::vector<std::size_t> digits(std::size_t x, std::size_t radix,
                                std::size_t count) {
  std::vector<std::size_t> d(count);
  for (std::size_t i = count; i-- > 0;) {
    d[i] = x % radix;
    x /= radix;
  }
  return d;
}

std::size_t undigits(const std::vector<std::size_t>& d, std::size_t radix) {
  std::size_t x = 0;
  for (std::size_t v : d) x = x * radix + v;
  return x;
}

std::string join(const std::vector<std::size_t>& v, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

}  // namespace

bool is_prime(std::size_t q) {
  if (q < 2) return false;
  for (std::size_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) return false;
  }
  return true;
}

std::size_t totient(std::size_t n) {
  std::size_t count = 0;
  for (std::size_t a = 1; a <= n; ++a) {
    if (std::gcd(a, n) == 1) ++count;
  }
  return count;
}

FiniteRing cyclic_ring(std::size_t n, const SizeCaps& caps) {
  if (n == 0) throw RingError(ErrorKind::BadDimensions, "modulus must be >= 1");
  check_cap(n, caps, "Z/" + std::to_string(n));
  return tabulate(
      n, [n](std::size_t a, std::size_t b) { return (a + b) % n; },
      [n](std::size_t a, std::size_t b) { return (a * b) % n; },
      "Z/" + std::to_string(n));
}

FiniteRing null_ring(const std::vector<std::size_t>& factors,
                     const SizeCaps& caps) {
  if (factors.empty()) {
    throw RingError(ErrorKind::EmptyFactorList, "null ring needs >= 1 factor");
  }
  std::size_t n = 1;
  for (std::size_t d : factors) {
    if (d < 2) throw RingError(ErrorKind::BadDimensions, "factor must be >= 2");
    if (n > caps.builder / d) {
      throw RingError(ErrorKind::TooLarge, "null ring above the builder cap");
    }
    n *= d;
  }
  check_cap(n, caps, "null ring");
  const std::size_t k = factors.size();
  auto coords = [&](std::size_t x) {
    std::vector<std::size_t> c(k);
    for (std::size_t i = k; i-- > 0;) {
      c[i] = x % factors[i];
      x /= factors[i];
    }
    return c;
  };
  auto index = [&](const std::vector<std::size_t>& c) {
    std::size_t x = 0;
    for (std::size_t i = 0; i < k; ++i) x = x * factors[i] + c[i];
    return x;
  };
  std::vector<std::string> names;
  if (k > 1) {
    for (std::size_t x = 0; x < n; ++x) names.push_back("(" + join(coords(x), ",") + ")");
  }
  return tabulate(
      n,
      [&](std::size_t a, std::size_t b) {
        auto ca = coords(a);
        const auto cb = coords(b);
        for (std::size_t i = 0; i < k; ++i) ca[i] = (ca[i] + cb[i]) % factors[i];
        return index(ca);
      },
      [](std::size_t, std::size_t) { return std::size_t{0}; },
      "null[" + join(factors, ",") + "]", std::move(names));
}

FiniteRing first_row_ring(std::size_t k, std::size_t n, const SizeCaps& caps) {
  if (k < 2 || n < 2) {
    throw RingError(ErrorKind::BadDimensions,
                    "first-row ring needs k >= 2 and n >= 2");
  }
  const std::size_t order = bounded_pow(n, k, caps.builder);
  if (order == 0) {
    throw RingError(ErrorKind::TooLarge, "first-row ring above the builder cap");
  }
  check_cap(order, caps, "first-row ring");
  std::vector<std::string> names;
  for (std::size_t x = 0; x < order; ++x) {
    std::string name = "[" + join(digits(x, n, k), " ");
    const std::string zero_row = ";" + join(std::vector<std::size_t>(k, 0), " ");
    for (std::size_t r = 1; r < k; ++r) name += zero_row;
    names.push_back(name + "]");
  }
  return tabulate(
      order,
      [&](std::size_t a, std::size_t b) {
        auto da = digits(a, n, k);
        const auto db = digits(b, n, k);
        for (std::size_t i = 0; i < k; ++i) da[i] = (da[i] + db[i]) % n;
        return undigits(da, n);
      },
      [&](std::size_t a, std::size_t b) {
        const std::size_t lead = digits(a, n, k)[0];
        auto db = digits(b, n, k);
        for (auto& v : db) v = (lead * v) % n;
        return undigits(db, n);
      },
      "first_row(" + std::to_string(k) + "," + std::to_string(n) + ")",
      std::move(names));
}

FiniteRing full_matrix_ring(std::size_t k, std::size_t q, const SizeCaps& caps) {
  if (k < 2) throw RingError(ErrorKind::BadDimensions, "matrix size must be >= 2");
  if (!is_prime(q)) {
    throw RingError(ErrorKind::NotPrime,
                    std::to_string(q) + " is not prime; only prime fields");
  }
  const std::size_t order = bounded_pow(q, k * k, caps.builder);
  if (order == 0) {
    throw RingError(ErrorKind::TooLarge, "M_" + std::to_string(k) + "(F_" +
                                             std::to_string(q) +
                                             ") above the builder cap");
  }
  check_cap(order, caps, "full matrix ring");
  const std::size_t kk = k * k;
  std::vector<std::string> names;
  for (std::size_t x = 0; x < order; ++x) {
    const auto d = digits(x, q, kk);
    std::string name = "[";
    for (std::size_t r = 0; r < k; ++r) {
      if (r) name += ";";
      for (std::size_t c = 0; c < k; ++c) {
        if (c) name += " ";
        name += std::to_string(d[r * k + c]);
      }
    }
    names.push_back(name + "]");
  }
  return tabulate(
      order,
      [&](std::size_t a, std::size_t b) {
        auto da = digits(a, q, kk);
        const auto db = digits(b, q, kk);
        for (std::size_t i = 0; i < kk; ++i) da[i] = (da[i] + db[i]) % q;
        return undigits(da, q);
      },
      [&](std::size_t a, std::size_t b) {
        const auto da = digits(a, q, kk);
        const auto db = digits(b, q, kk);
        std::vector<std::size_t> prod(kk, 0);
        for (std::size_t r = 0; r < k; ++r) {
          for (std::size_t c = 0; c < k; ++c) {
            std::size_t s = 0;
            for (std::size_t t = 0; t < k; ++t) s += da[r * k + t] * db[t * k + c];
            prod[r * k + c] = s % q;
          }
        }
        return undigits(prod, q);
      },
      "M_" + std::to_string(k) + "(F_" + std::to_string(q) + ")",
      std::move(names));
}

FiniteRing direct_product(const FiniteRing& a, const FiniteRing& b,
                          const SizeCaps& caps) {
  const std::size_t na = a.order();
  const std::size_t nb = b.order();
  if (na > caps.builder / nb) {
    throw RingError(ErrorKind::TooLarge, "direct product above the builder cap");
  }
  check_cap(na * nb, caps, "direct product");
  std::vector<std::string> names;
  if (!a.names().empty() || !b.names().empty() || na > 1 || nb > 1) {
    for (std::size_t x = 0; x < na * nb; ++x) {
      names.push_back("(" + a.element_name(static_cast<Element>(x / nb)) + "," +
                      b.element_name(static_cast<Element>(x % nb)) + ")");
    }
  }
  return tabulate(
      na * nb,
      [&](std::size_t x, std::size_t y) {
        return a.add(static_cast<Element>(x / nb), static_cast<Element>(y / nb)) * nb +
               b.add(static_cast<Element>(x % nb), static_cast<Element>(y % nb));
      },
      [&](std::size_t x, std::size_t y) {
        return a.mul(static_cast<Element>(x / nb), static_cast<Element>(y / nb)) * nb +
               b.mul(static_cast<Element>(x % nb), static_cast<Element>(y % nb));
      },
      a.label() + " x " + b.label(), std::move(names));
}

FiniteRing subring(const FiniteRing& ring, const ElementSet& elements) {
  if (elements.empty() || elements.front() != 0 ||
      !std::is_sorted(elements.begin(), elements.end())) {
    throw RingError(ErrorKind::NotASubring, "subset must be sorted and contain 0");
  }
  std::vector<long> position(ring.order(), -1);
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (elements[i] >= ring.order()) {
      throw RingError(ErrorKind::IndexOutOfRange, "subset element out of range");
    }
    position[elements[i]] = static_cast<long>(i);
  }
  auto locate = [&](Element x, Element a, Element b) -> std::size_t {
    if (position[x] < 0) {
      throw RingError(ErrorKind::NotASubring,
                      "subset not closed at " + std::to_string(a) + "," +
                          std::to_string(b),
                      {a, b});
    }
    return static_cast<std::size_t>(position[x]);
  };
  std::vector<std::string> names;
  if (!ring.names().empty()) {
    for (Element x : elements) names.push_back(ring.element_name(x));
  }
  for (Element x : elements) locate(ring.neg(x), x, x);
  return tabulate(
      elements.size(),
      [&](std::size_t i, std::size_t j) {
        return locate(ring.add(elements[i], elements[j]), elements[i], elements[j]);
      },
      [&](std::size_t i, std::size_t j) {
        return locate(ring.mul(elements[i], elements[j]), elements[i], elements[j]);
      },
      "sub(" + ring.label() + ")", std::move(names));
}

std::vector<Element> coset_indices(const FiniteRing& ring,
                                   const ElementSet& ideal) {
  const std::size_t n = ring.order();
  std::vector<char> member(n, 0);
  for (Element i : ideal) {
    if (i >= n) throw RingError(ErrorKind::IndexOutOfRange, "ideal element out of range");
    member[i] = 1;
  }
  if (ideal.empty() || !member[0]) {
    throw RingError(ErrorKind::NotAnIdeal, "ideal must contain 0");
  }
  for (Element a : ideal) {
    for (Element b : ideal) {
      if (!member[ring.sub(a, b)]) {
        throw RingError(ErrorKind::NotAnIdeal, "not an additive subgroup", {a, b});
      }
    }
    for (std::size_t r = 0; r < n; ++r) {
      const auto re = static_cast<Element>(r);
      if (!member[ring.mul(re, a)] || !member[ring.mul(a, re)]) {
        throw RingError(ErrorKind::NotAnIdeal,
                        "not absorbing at " + std::to_string(r) + "," +
                            std::to_string(a),
                        {re, a});
      }
    }
  }
  std::vector<Element> rep(n);
  for (std::size_t r = 0; r < n; ++r) {
    Element best = static_cast<Element>(r);
    for (Element i : ideal) best = std::min(best, ring.add(static_cast<Element>(r), i));
    rep[r] = best;
  }
  std::vector<Element> reps(rep);
  std::sort(reps.begin(), reps.end());
  reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
  std::vector<Element> index(n);
  for (std::size_t r = 0; r < n; ++r) {
    index[r] = static_cast<Element>(
        std::lower_bound(reps.begin(), reps.end(), rep[r]) - reps.begin());
  }
  return index;
}

FiniteRing quotient_ring(const FiniteRing& ring, const ElementSet& ideal) {
  const std::vector<Element> index = coset_indices(ring, ideal);
  std::vector<Element> reps;
  for (std::size_t r = 0; r < ring.order(); ++r) {
    if (index[r] == reps.size()) reps.push_back(static_cast<Element>(r));
  }
  std::vector<std::string> names;
  if (!ring.names().empty()) {
    for (Element r : reps) names.push_back(ring.element_name(r) + "+I");
  }
  return tabulate(
      reps.size(),
      [&](std::size_t i, std::size_t j) { return index[ring.add(reps[i], reps[j])]; },
      [&](std::size_t i, std::size_t j) { return index[ring.mul(reps[i], reps[j])]; },
      ring.label() + "/I", std::move(names));
}

LeftIdentityDecomposition decompose(const FiniteRing& ring, Element e) {
  if (e >= ring.order()) {
    throw RingError(ErrorKind::IndexOutOfRange, "element out of range", {e});
  }
  if (e == 0 || !is_left_identity(ring, e)) {
    throw RingError(ErrorKind::NotLeftIdentity,
                    std::to_string(e) + " is not a left identity", {e});
  }
  auto violated = [&](const std::string& what) {
    return RingError(ErrorKind::InternalInvariantViolation,
                     "decomposition at e=" + std::to_string(e) + ": " + what, {e});
  };
  LeftIdentityDecomposition d{e, {}, {}, {}};
  const std::size_t n = ring.order();
  for (std::size_t a = 0; a < n; ++a) {
    const auto ae = ring.mul(static_cast<Element>(a), e);
    if (ae == 0) d.ideal.push_back(static_cast<Element>(a));
    if (ae == a) d.corner.push_back(static_cast<Element>(a));
  }

  // I_e is a two-sided ideal, nontrivial when e is not a right identity.
  try {
    (void)coset_indices(ring, d.ideal);
  } catch (const RingError&) {
    throw violated("I_e is not a two-sided ideal");
  }
  if (!is_right_identity(ring, e) && d.ideal.size() < 2) {
    throw violated("I_e is trivial for a proper left identity");
  }

  // R_e is a subring with two-sided identity e.
  FiniteRing corner_ring = [&] {
    try {
      return subring(ring, d.corner);
    } catch (const RingError&) {
      throw violated("R_e is not a subring");
    }
  }();
  for (Element x : d.corner) {
    if (ring.mul(e, x) != x || ring.mul(x, e) != x) {
      throw violated("e is not an identity of R_e");
    }
  }

  // r = re + (r - re) is the unique splitting.
  d.splitting.resize(n);
  std::vector<char> hit(n, 0);
  for (std::size_t r = 0; r < n; ++r) {
    const auto x = ring.mul(static_cast<Element>(r), e);
    const auto y = ring.sub(static_cast<Element>(r), x);
    if (!contains(d.corner, x) || !contains(d.ideal, y)) {
      throw violated("splitting leaves R_e x I_e");
    }
    d.splitting[r] = {x, y};
  }
  for (Element x : d.corner) {
    for (Element y : d.ideal) {
      const auto s = ring.add(x, y);
      if (hit[s]) throw violated("R_e + I_e is not direct");
      hit[s] = 1;
    }
  }
  if (d.corner.size() * d.ideal.size() != n) {
    throw violated("|R| != |R_e| |I_e|");
  }

  // x -> x + I_e is an isomorphism R_e -> R/I_e.
  const std::vector<Element> coset = coset_indices(ring, d.ideal);
  const FiniteRing quotient = quotient_ring(ring, d.ideal);
  if (quotient.order() != corner_ring.order()) {
    throw violated("|R/I_e| != |R_e|");
  }
  std::vector<char> image(quotient.order(), 0);
  for (Element x : d.corner) {
    if (image[coset[x]]) throw violated("R_e -> R/I_e is not injective");
    image[coset[x]] = 1;
    for (Element y : d.corner) {
      if (coset[ring.add(x, y)] != quotient.add(coset[x], coset[y]) ||
          coset[ring.mul(x, y)] != quotient.mul(coset[x], coset[y])) {
        throw violated("R_e -> R/I_e is not a homomorphism");
      }
    }
  }
  return d;
}

}  // namespace zdlab
