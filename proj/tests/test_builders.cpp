#include <algorithm>
#include <functional>

#include "doctest.h"
#include "oracle.hpp"
#include "support.hpp"
#include "zdlab/builders.hpp"

using namespace zdlab;
using support::set;

namespace {

// Product table of the k x k matrices over Z/m (all of them, or only those
// vanishing outside the first row) in increasing order of row-major code.
oracle::Flat matrix_table(int k, int m, bool first_row_only) {
  int total = 1;
  for (int i = 0; i < k * k; ++i) total *= m;
  std::vector<int> codes;
  for (int x = 0; x < total; ++x) {
    const auto e = oracle::decode_matrix(x, k, m);
    bool ok = true;
    for (int i = k; i < k * k && first_row_only; ++i) ok = ok && e[i] == 0;
    if (ok) codes.push_back(x);
  }
  const int n = static_cast<int>(codes.size());
  auto position = [&](int code) {
    return static_cast<int>(std::lower_bound(codes.begin(), codes.end(), code) - codes.begin());
  };
  oracle::Flat mul(static_cast<std::size_t>(n * n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const auto p = oracle::matrix_product(oracle::decode_matrix(codes[a], k, m),
                                            oracle::decode_matrix(codes[b], k, m), k, m);
      mul[a * n + b] = position(oracle::encode_matrix(p, m));
    }
  }
  return mul;
}

oracle::Flat flat(std::span<const Element> t) { return {t.begin(), t.end()}; }

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const RingError& e) {
    return e.kind();
  }
  FAIL("no RingError thrown");
  return ErrorKind::InternalInvariantViolation;
}

}  // namespace

TEST_CASE("cyclic rings") {
  const FiniteRing r = cyclic_ring(7);
  for (Element a = 0; a < 7; ++a) {
    for (Element b = 0; b < 7; ++b) {
      CHECK(r.add(a, b) == (a + b) % 7);
      CHECK(r.mul(a, b) == (a * b) % 7);
    }
  }
  CHECK(r.label() == "Z/7");
  CHECK(cyclic_ring(1).order() == 1);
  CHECK(kind_of([] { cyclic_ring(0); }) == ErrorKind::BadDimensions);
  SizeCaps small;
  small.builder = 10;
  CHECK(kind_of([&] { cyclic_ring(11, small); }) == ErrorKind::TooLarge);
}

TEST_CASE("null rings") {
  const FiniteRing r = null_ring({2, 4});
  CHECK(r.order() == 8);
  CHECK(flat(r.add_table()) == oracle::product_group({2, 4}));
  for (int v : flat(r.mul_table())) CHECK(v == 0);
  CHECK(r.element_name(5) == "(1,1)");
  CHECK(null_ring({3}).names().empty());
  CHECK(kind_of([] { null_ring({}); }) == ErrorKind::EmptyFactorList);
  CHECK(kind_of([] { null_ring({2, 1}); }) == ErrorKind::BadDimensions);
}

TEST_CASE("first-row rings match matrix multiplication") {
  for (auto [k, n] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}, {4, 2}}) {
    CAPTURE(k);
    CAPTURE(n);
    const FiniteRing r = first_row_ring(k, n);
    int order = 1;
    for (int i = 0; i < k; ++i) order *= n;
    CHECK(r.order() == static_cast<std::size_t>(order));
    CHECK(flat(r.mul_table()) == matrix_table(k, n, true));
  }
  const FiniteRing t2 = support::t2();
  CHECK(t2.element_name(1) == "[0 1;0 0]");
  CHECK(t2.element_name(2) == "[1 0;0 0]");
  CHECK(first_row_ring(3, 2).element_name(6) == "[1 1 0;0 0 0;0 0 0]");
  CHECK(t2.label() == "first_row(2,2)");
}

TEST_CASE("first-row ring errors") {
  CHECK(kind_of([] { first_row_ring(1, 3); }) == ErrorKind::BadDimensions);
  CHECK(kind_of([] { first_row_ring(2, 1); }) == ErrorKind::BadDimensions);
  CHECK(kind_of([] { first_row_ring(2, 100); }) == ErrorKind::TooLarge);
  CHECK(kind_of([] { first_row_ring(40, 2); }) == ErrorKind::TooLarge);
}

TEST_CASE("full matrix rings match matrix multiplication") {
  const FiniteRing m2 = full_matrix_ring(2, 2);
  CHECK(m2.order() == 16);
  CHECK(flat(m2.mul_table()) == matrix_table(2, 2, false));
  CHECK(flat(full_matrix_ring(2, 3).mul_table()) == matrix_table(2, 3, false));
  CHECK(m2.label() == "M_2(F_2)");
  CHECK(kind_of([] { full_matrix_ring(2, 4); }) == ErrorKind::NotPrime);
  CHECK(kind_of([] { full_matrix_ring(1, 2); }) == ErrorKind::BadDimensions);
  CHECK(kind_of([] { full_matrix_ring(3, 3); }) == ErrorKind::TooLarge);
}

TEST_CASE("direct products are componentwise") {
  const FiniteRing a = cyclic_ring(2);
  const FiniteRing b = cyclic_ring(3);
  const FiniteRing p = direct_product(a, b);
  CHECK(p.order() == 6);
  for (Element x = 0; x < 6; ++x) {
    for (Element y = 0; y < 6; ++y) {
      CHECK(p.mul(x, y) == a.mul(x / 3, y / 3) * 3 + b.mul(x % 3, y % 3));
    }
  }
  CHECK(p.label() == "Z/2 x Z/3");
  CHECK(p.element_name(4) == "(1,1)");
  // Z/2 x Z/3 is Z/6.
  CHECK(is_isomorphic(p, cyclic_ring(6)));
}

TEST_CASE("subrings and quotients") {
  const FiniteRing z6 = cyclic_ring(6);
  const FiniteRing evens = subring(z6, set({0, 2, 4}));
  CHECK(evens.order() == 3);
  CHECK(is_isomorphic(evens, cyclic_ring(3)));
  CHECK(kind_of([&] { subring(z6, set({0, 1})); }) == ErrorKind::NotASubring);
  CHECK(kind_of([&] { subring(z6, set({1, 2})); }) == ErrorKind::NotASubring);

  CHECK(coset_indices(z6, set({0, 3})) == std::vector<Element>{0, 1, 2, 0, 1, 2});
  CHECK(is_isomorphic(quotient_ring(z6, set({0, 3})), cyclic_ring(3)));
  CHECK(is_isomorphic(quotient_ring(z6, set({0, 2, 4})), cyclic_ring(2)));
  CHECK(kind_of([&] { quotient_ring(z6, set({0, 1})); }) == ErrorKind::NotAnIdeal);
  // {0, e11} is a subgroup of T2 but e11 * e12 = e12 leaves it.
  CHECK(kind_of([&] { quotient_ring(support::t2(), set({0, 2})); }) == ErrorKind::NotAnIdeal);
}

TEST_CASE("decomposition along a left identity") {
  const FiniteRing t2 = support::t2();
  const auto d = decompose(t2, 2);
  CHECK(d.identity == 2);
  CHECK(d.ideal == set({0, 1}));
  CHECK(d.corner == set({0, 2}));
  REQUIRE(d.splitting.size() == 4);
  CHECK(d.splitting[3] == std::pair<Element, Element>{2, 1});
  CHECK(kind_of([&] { decompose(t2, 1); }) == ErrorKind::NotLeftIdentity);
  CHECK(kind_of([&] { decompose(t2, 9); }) == ErrorKind::IndexOutOfRange);

  const auto u = decompose(support::u3(), 3);
  CHECK(u.ideal.size() == 3);
  CHECK(u.corner.size() == 3);
  CHECK(is_isomorphic(subring(support::u3(), u.corner), cyclic_ring(3)));
}

TEST_CASE("number theory helpers") {
  CHECK(is_prime(2));
  CHECK(is_prime(13));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(9));
  CHECK(totient(1) == 1);
  CHECK(totient(6) == 2);
  CHECK(totient(5) == 4);
  CHECK(totient(12) == 4);
}
