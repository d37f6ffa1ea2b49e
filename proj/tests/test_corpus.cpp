#include <catch2/catch_amalgamated.hpp>

#include <bfc/corpus.hpp>

#include "support.hpp"

using namespace bfc;

namespace {

Term mul(Term a, Term b) { return Term::app("*", {std::move(a), std::move(b)}); }

}  // namespace

TEST_CASE("every builtin loads and validates") {
  for (const auto& name : corpus::builtin_names()) {
    const corpus::BuiltinEntry entry = corpus::load_builtin(name);
    CHECK(entry.name == name);
    CHECK_FALSE(entry.provenance.empty());
  }
  CHECK_THROWS_AS(corpus::load_builtin("no.such.entry"), ValidationError);
}

TEST_CASE("the bundled 4-element algebra matches its defining table") {
  const auto entry = corpus::load_builtin("band0.algebraA");
  const AlgebraPtr A = std::get<AlgebraPtr>(entry.payload);
  REQUIRE(A->size() == 4);
  const std::size_t star = *A->signature().index_of("*");

  const Element b = *A->element_by_name("b");
  const Element c = *A->element_by_name("c");
  CHECK(A->apply(star, {b, c}) == c);

  // full row/column audit against the defining description
  CHECK(A->table(star).entries == std::vector<Element>{0, 0, 0, 0, 0, 1, 1, 1, 0, 1, 2, 3, 0, 3, 3, 3});
  CHECK(A->apply(*A->signature().index_of("0"), {}) == 0);
}

TEST_CASE("the bundled algebra satisfies exactly its defining identities") {
  const AlgebraPtr A = corpus::band0_algebra_a();
  const Term x = Term::var("x"), y = Term::var("y"), z = Term::var("z");
  const Term zero = Term::app("0", {});

  CHECK(check_identity(*A, mul(mul(x, y), z), mul(x, mul(y, z))));  // associative
  CHECK(check_identity(*A, mul(x, x), x));                          // idempotent
  CHECK(check_identity(*A, mul(x, zero), zero));                    // right zero
  CHECK(check_identity(*A, mul(zero, x), zero));                    // left zero
  CHECK_FALSE(check_identity(*A, mul(x, y), mul(y, x)));            // not commutative
}

TEST_CASE("the bundled scheme terms are the expected word tables") {
  const WitnessScheme s = std::get<WitnessScheme>(corpus::load_builtin("band0.scheme").payload);
  CHECK(s.n == 2);
  CHECK(s.k == 1);
  CHECK(s.s[0].to_sexpr() == "x");
  CHECK(s.s[1].to_sexpr() == "y");
  CHECK(s.t[0].to_sexpr() == "0");
  CHECK(s.t[1].to_sexpr() == "0");
  CHECK(s.L.at("1").to_sexpr() == "(* x y1)");
  CHECK(s.R.at("1").to_sexpr() == "(* y y1)");
  CHECK(s.L.at("11").to_sexpr() == "(* z y1)");
  CHECK(s.R.at("11").to_sexpr() == "(* w y1)");
  CHECK(s.L.at("12").to_sexpr() == "(* y y1)");
  CHECK(s.R.at("12").to_sexpr() == "(* y y1)");
  CHECK(s.L.at("2").to_sexpr() == "(* y2 x)");
  CHECK(s.R.at("2").to_sexpr() == "(* y2 y)");
  CHECK(s.L.at("21").to_sexpr() == "(* y2 z)");
  CHECK(s.R.at("21").to_sexpr() == "(* y2 w)");
  CHECK(s.L.at("22").to_sexpr() == "(* y2 y)");
  CHECK(s.R.at("22").to_sexpr() == "(* y2 y)");

  const WitnessScheme sl = std::get<WitnessScheme>(corpus::load_builtin("semilattice.scheme").payload);
  CHECK(sl.t[0].to_sexpr() == "(* z w)");
  CHECK(sl.t[1].to_sexpr() == "(* z w)");
  CHECK(sl.L == s.L);
  CHECK(sl.R == s.R);
  CHECK(sl.s == s.s);
}

TEST_CASE("builtin formulas coincide with the builders") {
  const Formula phi1 = std::get<Formula>(corpus::load_builtin("band0.phi1").payload);
  const Formula phi2 = std::get<Formula>(corpus::load_builtin("band0.phi2").payload);
  CHECK(phi1 == build_phi1(corpus::band0_scheme()));
  CHECK(phi2 == build_phi2(corpus::band0_scheme()));

  const Formula pi_s = std::get<Formula>(corpus::load_builtin("semilattice.pi_s").payload);
  CHECK(pi_s.to_sexpr() == "(forall u (implies (= (* z u) (* w u)) (= (* x u) (* y u))))");
}

TEST_CASE("semilattice enumeration counts and determinism") {
  const auto upto3 = corpus::enumerate_semilattices(3);
  std::vector<int> sizes;
  for (const auto& a : upto3) sizes.push_back(a->size());
  CHECK(sizes == std::vector<int>{1, 2, 3, 3});  // one each at 1 and 2, two at 3

  // two generators, one answer
  const auto oracle = corpus::enumerate_semilattices_by_tables(3);
  REQUIRE(oracle.size() == upto3.size());
  for (std::size_t i = 0; i < oracle.size(); ++i) CHECK(*oracle[i] == *upto3[i]);

  // deterministic across calls
  const auto again = corpus::enumerate_semilattices(3);
  for (std::size_t i = 0; i < again.size(); ++i) CHECK(*again[i] == *upto3[i]);
}

TEST_CASE("generators refuse out-of-range requests") {
  CHECK_THROWS_AS(corpus::enumerate_semilattices(7), ValidationError);
  CHECK_THROWS_AS(corpus::enumerate_semilattices_by_tables(4), ValidationError);
  CHECK_THROWS_AS(corpus::chain_semilattice(0), ValidationError);
}

TEST_CASE("semilattice enumeration is irredundant and complete-looking at size 5") {
  const auto all = corpus::enumerate_semilattices(5);
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      if (all[i]->size() != all[j]->size()) continue;
      CHECK_FALSE(find_isomorphism(*all[i], *all[j]).has_value());
    }
  // every output really is a meet-semilattice
  const Term x = Term::var("x"), y = Term::var("y"), z = Term::var("z");
  for (const auto& A : all) {
    CHECK(check_identity(*A, mul(x, y), mul(y, x)));
    CHECK(check_identity(*A, mul(x, x), x));
    CHECK(check_identity(*A, mul(mul(x, y), z), mul(x, mul(y, z))));
  }
}

TEST_CASE("random variety members are reproducible and valid") {
  // size 1 always exists, immediately
  const auto one = corpus::random_member_band0(1, 7);
  REQUIRE(one.has_value());
  CHECK((*one)->size() == 1);

  // size 2 is forced: e*e = e and everything else 0
  const auto two = corpus::random_member_band0(2, 7);
  REQUIRE(two.has_value());
  CHECK((*two)->table(1).entries == std::vector<Element>{0, 0, 0, 1});

  // size 4: found, valid, and deterministic per seed
  const auto m1 = corpus::random_member_band0(4, 12345);
  const auto m2 = corpus::random_member_band0(4, 12345);
  REQUIRE(m1.has_value());
  REQUIRE(m2.has_value());
  CHECK(**m1 == **m2);
  const Term x = Term::var("x"), y = Term::var("y"), z = Term::var("z");
  CHECK(check_identity(**m1, mul(mul(x, y), z), mul(x, mul(y, z))));
  CHECK(check_identity(**m1, mul(x, x), x));
  CHECK(check_identity(**m1, mul(x, Term::app("0", {})), Term::app("0", {})));

  CHECK_THROWS_AS(corpus::random_member_band0(9, 1), ValidationError);
}

TEST_CASE("the seeded recipe yields twenty members") {
  const auto members = testsupport::seeded_band0_members();
  CHECK(members.size() == 20);
  for (const auto& m : members) CHECK(m->size() <= 4);
}

TEST_CASE("the counterexample report recomputes every clause") {
  const corpus::CounterexampleReport r = corpus::reproduce_counterexample();
  CHECK(r.pi_abab);
  CHECK(r.pi_ccab);
  CHECK(r.ac == 1);   // a*c = a
  CHECK(r.bc == 3);   // b*c = c
  CHECK(r.aa == 1);
  CHECK(r.ba == 1);   // a*a = b*a
  CHECK(r.aca == 1);  // (a*c)*a = a
  CHECK(r.bca == 3);  // (b*c)*a = c
  CHECK(r.table_facts);
  CHECK(r.phi2_separation);
  CHECK(r.gamma_separation);
  CHECK(r.all());
}

TEST_CASE("pi_s is its own factor-congruence-style closure on semilattices") {
  const Formula pi_s = corpus::pi_s();
  for (const auto& A : corpus::enumerate_semilattices(4)) {
    const int n = A->size();
    // theta_{z,w} = {(x,y) : pi_s(x,y,z,w)} is a congruence for every z,w
    std::map<std::pair<Element, Element>, Congruence> thetas;
    for (Element z = 0; z < n; ++z)
      for (Element w = 0; w < n; ++w) {
        UnionFind uf(n);
        for (Element x = 0; x < n; ++x)
          for (Element y = 0; y < n; ++y)
            if (eval_formula(A, pi_s, {{"x", x}, {"y", y}, {"z", z}, {"w", w}})) uf.merge(x, y);
        const Partition part = uf.to_partition();
        // relation is already transitive and symmetric: merging is harmless,
        // but verify it agrees with the raw predicate before trusting it
        for (Element x = 0; x < n; ++x)
          for (Element y = 0; y < n; ++y)
            CHECK(part.related(x, y) ==
                  eval_formula(A, pi_s, {{"x", x}, {"y", y}, {"z", z}, {"w", w}}));
        CHECK(is_compatible(*A, part));
        thetas.emplace(std::make_pair(z, w), Congruence(A, part));
      }

    // pi_s(x,y,z,w) holds iff (x,y) lies in every theta containing (z,w)
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y)
        for (Element z = 0; z < n; ++z)
          for (Element w = 0; w < n; ++w) {
            bool closure = true;
            for (const auto& [key, theta] : thetas)
              if (theta.contains(z, w) && !theta.contains(x, y)) closure = false;
            CHECK(eval_formula(A, pi_s, {{"x", x}, {"y", y}, {"z", z}, {"w", w}}) == closure);
          }
  }
}
