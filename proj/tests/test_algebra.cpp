#include <catch2/catch_amalgamated.hpp>

#include <bfc/congruence.hpp>
#include <bfc/corpus.hpp>

#include "support.hpp"

using namespace bfc;

namespace {

AlgebraPtr two_chain() { return corpus::chain_semilattice(2); }
AlgebraPtr three_chain() { return corpus::chain_semilattice(3); }

Term mul(Term a, Term b) { return Term::app("*", {std::move(a), std::move(b)}); }

}  // namespace

TEST_CASE("algebra construction validates tables") {
  Signature sig({{"*", 2}});
  FiniteAlgebra::Table bad;
  bad.entries = {0, 0, 0};  // should be 4 entries
  CHECK_THROWS_AS(make_algebra(sig, 2, {}, {bad}), ValidationError);

  FiniteAlgebra::Table oob;
  oob.entries = {0, 0, 0, 5};
  CHECK_THROWS_AS(make_algebra(sig, 2, {}, {oob}), ValidationError);

  CHECK_THROWS_AS(Signature({{"*", 2}, {"*", 1}}), ValidationError);
  CHECK_THROWS_AS(make_algebra(sig, 2, {"p"}, {FiniteAlgebra::Table{{0, 0, 0, 0}}}), ValidationError);
}

TEST_CASE("eval_term on the bundled 4-element algebra") {
  const AlgebraPtr A = corpus::band0_algebra_a();
  const Element a = *A->element_by_name("a");
  const Element c = *A->element_by_name("c");

  // a * c = a, read straight off the table
  CHECK(eval_term(*A, mul(Term::var("x"), Term::var("y")), {{"x", a}, {"y", c}}) == a);

  // variables evaluate to their binding
  CHECK(eval_term(*A, Term::var("x"), {{"x", 2}}) == 2);

  // constants resolve with or without explicit application syntax
  CHECK(eval_term(*A, Term::app("0", {}), {}) == 0);
  CHECK(eval_term(*A, Term::var("0"), {}) == 0);

  CHECK_THROWS_AS(eval_term(*A, Term::var("q"), {{"x", 0}}), ValidationError);
  CHECK_THROWS_AS(eval_term(*A, Term::app("missing", {}), {}), ValidationError);
}

TEST_CASE("eval_term walks nested applications") {
  const AlgebraPtr chain = three_chain();
  // meet chain 0 < 1 < 2: (x*y)*z at (2,1,0) is min = 0
  const Term t = mul(mul(Term::var("x"), Term::var("y")), Term::var("z"));
  CHECK(eval_term(*chain, t, {{"x", 2}, {"y", 1}, {"z", 0}}) == 0);
}

TEST_CASE("direct product acts coordinatewise") {
  const AlgebraPtr A = corpus::band0_algebra_a();
  const AlgebraPtr AA = direct_product({A, A});
  REQUIRE(AA->size() == 16);

  const Element a = 1, c = 3;
  const std::vector<int> sizes{4, 4};
  // (a,c) * (c,a) = (a*c, c*a) = (a, c)
  const Element left = static_cast<Element>(product_index(std::array<Element, 2>{a, c}, sizes));
  const Element right = static_cast<Element>(product_index(std::array<Element, 2>{c, a}, sizes));
  const std::size_t star = *AA->signature().index_of("*");
  CHECK(AA->apply(star, {left, right}) == static_cast<Element>(product_index(std::array<Element, 2>{a, c}, sizes)));

  // product of two 2-chains: coordinatewise meet
  const AlgebraPtr P = direct_product({two_chain(), two_chain()});
  const std::size_t meet_op = *P->signature().index_of("*");
  for (Element e = 0; e < 4; ++e)
    for (Element f = 0; f < 4; ++f) {
      const auto ce = product_coords(static_cast<std::size_t>(e), std::vector<int>{2, 2});
      const auto cf = product_coords(static_cast<std::size_t>(f), std::vector<int>{2, 2});
      const Element expect = static_cast<Element>(
          product_index(std::array<Element, 2>{std::min(ce[0], cf[0]), std::min(ce[1], cf[1])}, std::vector<int>{2, 2}));
      CHECK(P->apply(meet_op, {e, f}) == expect);
    }
}

TEST_CASE("one-factor product is the factor under the identity encoding") {
  const AlgebraPtr A = corpus::band0_algebra_a();
  const AlgebraPtr P = direct_product({A});
  CHECK(*P == *A);
}

TEST_CASE("product refuses mixed signatures") {
  CHECK_THROWS_AS(direct_product({two_chain(), corpus::band0_algebra_a()}), ValidationError);
}

TEST_CASE("check_identity matches the defining identities of the 4-element algebra") {
  const AlgebraPtr A = corpus::band0_algebra_a();
  const Term x = Term::var("x"), y = Term::var("y");

  CHECK(check_identity(*A, mul(x, x), x));                       // idempotent
  CHECK_FALSE(check_identity(*A, mul(x, y), mul(y, x)));         // not commutative
  CHECK(check_identity(*A, x, x));                               // reflexivity

  // witness for non-commutativity: a*c = a but c*a = c
  const Element a = 1, c = 3;
  const std::size_t star = *A->signature().index_of("*");
  CHECK(A->apply(star, {a, c}) == a);
  CHECK(A->apply(star, {c, a}) == c);
}

TEST_CASE("check_identity is symmetric in its sides") {
  const AlgebraPtr A = corpus::band0_algebra_a();
  const Term x = Term::var("x"), y = Term::var("y");
  const Term lhs = mul(x, y), rhs = mul(y, x);
  CHECK(check_identity(*A, lhs, rhs) == check_identity(*A, rhs, lhs));
  CHECK(check_identity(*A, mul(x, x), x) == check_identity(*A, x, mul(x, x)));
}

TEST_CASE("find_isomorphism maps an algebra onto itself") {
  const AlgebraPtr A = corpus::band0_algebra_a();
  const auto iso = find_isomorphism(*A, *A);
  REQUIRE(iso.has_value());
  CHECK(is_isomorphism(*A, *A, *iso));
}

TEST_CASE("find_isomorphism distinguishes the 2-chain from a projection table") {
  const AlgebraPtr chain = two_chain();
  FiniteAlgebra::Table left_proj;
  left_proj.entries = {0, 0, 1, 1};  // x*y = x
  const AlgebraPtr proj = make_algebra(corpus::semilattice_signature(), 2, {}, {left_proj});
  CHECK_FALSE(find_isomorphism(*chain, *proj).has_value());
}

TEST_CASE("quotient by delta is isomorphic to the algebra, by nabla is trivial") {
  const AlgebraPtr A = corpus::band0_algebra_a();
  const QuotientResult by_delta = quotient(Congruence::delta(A));
  CHECK(by_delta.algebra->size() == A->size());
  const auto iso = find_isomorphism(*by_delta.algebra, *A);
  REQUIRE(iso.has_value());
  CHECK(is_isomorphism(*by_delta.algebra, *A, *iso));

  const QuotientResult by_nabla = quotient(Congruence::nabla(A));
  CHECK(by_nabla.algebra->size() == 1);
}

TEST_CASE("quotient of the 4-element algebra by cg(a,b), blocks fixed by the oracle") {
  const AlgebraPtr A = corpus::band0_algebra_a();
  const Element a = 1, b = 2;

  // oracle first: least congruence above {(a,b)} by partition filtering
  const Partition expected = testsupport::least_congruence_above(*A, {{a, b}});
  CHECK(expected.labels() == std::vector<int>{0, 1, 1, 1});

  const Congruence theta = cg(A, {{a, b}});
  CHECK(theta.partition() == expected);

  const QuotientResult q = quotient(theta);
  CHECK(q.algebra->size() == 2);
  CHECK(q.canonical_map == std::vector<Element>{0, 1, 1, 1});
}

TEST_CASE("products reconstruct their factors through projection kernels") {
  const auto semis = corpus::enumerate_semilattices(4);
  // every ordered pair of small semilattices
  for (const auto& A : semis)
    for (const auto& B : semis) {
      const AlgebraPtr P = direct_product({A, B});
      const std::vector<int> sizes{A->size(), B->size()};
      const QuotientResult qa = quotient(projection_kernel(P, sizes, 0));
      const auto iso = find_isomorphism(*qa.algebra, *A);
      REQUIRE(iso.has_value());
      CHECK(is_isomorphism(*qa.algebra, *A, *iso));
      const QuotientResult qb = quotient(projection_kernel(P, sizes, 1));
      const auto iso_b = find_isomorphism(*qb.algebra, *B);
      REQUIRE(iso_b.has_value());
    }
}

TEST_CASE("size guard trips on oversized enumerations") {
  Limits tiny;
  tiny.max_cells = 10;
  CHECK_THROWS_AS(direct_product({corpus::band0_algebra_a(), corpus::band0_algebra_a()}, tiny), SizeGuardError);

  Limits few;
  few.max_assignments = 3;
  const AlgebraPtr A = corpus::band0_algebra_a();
  const Term x = Term::var("x"), y = Term::var("y");
  CHECK_THROWS_AS(check_identity(*A, mul(x, y), mul(y, x), few), SizeGuardError);
}

TEST_CASE("term s-expressions round trip") {
  const Term t = mul(mul(Term::var("x"), Term::var("y1")), Term::var("w"));
  CHECK(t.to_sexpr() == "(* (* x y1) w)");
  CHECK(parse_term(t.to_sexpr()) == t);
  CHECK_THROWS_AS(parse_term("(* x"), ValidationError);
  CHECK_THROWS_AS(parse_term("(* x y) z"), ValidationError);
}
