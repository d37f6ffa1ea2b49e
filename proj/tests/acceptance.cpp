// Acceptance suite: one line per criterion, [PASS]/[FAIL], nonzero exit on
// any failure. argv[1] is the path to the CLI binary (used by criterion 1).

#include <chrono>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <sys/wait.h>

#include <bfc/io.hpp>

#include "support.hpp"

using namespace bfc;
using Clock = std::chrono::steady_clock;

namespace {

std::string g_cli_path;

// Wide limits for the checks whose worst-case assignment counts exceed the
// conservative defaults (the CLI exposes the same knobs).
const Limits kWide{.max_cells = 10'000'000, .max_assignments = 4'000'000'000ULL};

struct CommandResult {
  int exit_code = -1;
  std::string output;
};

CommandResult run_command(const std::string& command) {
  CommandResult result;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return result;
  char buffer[4096];
  while (std::size_t got = fread(buffer, 1, sizeof buffer, pipe)) result.output.append(buffer, got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

// Criterion 1: the CLI recomputes the bundled separation, exactly, quickly.
bool criterion_golden_counterexample(std::string& detail) {
  const auto start = Clock::now();
  const CommandResult r = run_command(g_cli_path + " corpus counterexample --json");
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (r.exit_code != 0) {
    detail = "CLI exit code " + std::to_string(r.exit_code);
    return false;
  }
  io::json j;
  try {
    j = io::json::parse(r.output);
  } catch (const std::exception& e) {
    detail = std::string("unparseable report: ") + e.what();
    return false;
  }
  const bool clauses = j.at("pi_abab").get<bool>() && j.at("pi_ccab").get<bool>() &&
                       j.at("ac").get<int>() == 1 && j.at("bc").get<int>() == 3 &&
                       j.at("aa").get<int>() == 1 && j.at("ba").get<int>() == 1 &&
                       j.at("aca").get<int>() == 1 && j.at("bca").get<int>() == 3 &&
                       j.at("table_facts").get<bool>() && j.at("phi2_separation").get<bool>() &&
                       j.at("gamma_separation").get<bool>() && j.at("all").get<bool>();
  if (!clauses) {
    detail = "clause mismatch: " + j.dump();
    return false;
  }
  if (secs >= 1.0) {
    detail = "too slow: " + std::to_string(secs) + "s";
    return false;
  }
  return true;
}

// Criterion 2: scheme identity verification across the bundled algebras.
bool criterion_scheme_identities(std::string& detail) {
  const auto start = Clock::now();
  const WitnessScheme band0 = corpus::band0_scheme();
  if (!verify_scheme_identities(band0, corpus::band0_algebra_a(), kWide).all_pass) {
    detail = "band0 scheme fails on the bundled 4-element algebra";
    return false;
  }
  const auto members = testsupport::seeded_band0_members();
  if (members.size() != 20) {
    detail = "generator produced " + std::to_string(members.size()) + " members, wanted 20";
    return false;
  }
  for (std::size_t i = 0; i < members.size(); ++i)
    if (!verify_scheme_identities(band0, members[i], kWide).all_pass) {
      detail = "band0 scheme fails on seeded member #" + std::to_string(i + 1);
      return false;
    }
  const WitnessScheme semi = corpus::semilattice_scheme();
  for (const auto& A : corpus::enumerate_semilattices(4))
    if (!verify_scheme_identities(semi, A, kWide).all_pass) {
      detail = "semilattice scheme fails on a semilattice of size " + std::to_string(A->size());
      return false;
    }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (secs >= 60.0) {
    detail = "too slow: " + std::to_string(secs) + "s";
    return false;
  }
  return true;
}

// Criterion 3: Boolean factor congruences across semilattices and Z6.
bool criterion_bfc_suite(std::string& detail) {
  for (const auto& A : corpus::enumerate_semilattices(5)) {
    const BfcReport r = check_bfc(A, kWide);
    if (!r.pass()) {
      detail = "semilattice of size " + std::to_string(A->size()) + " failed";
      return false;
    }
  }
  const BfcReport z6 = check_bfc(corpus::z6_ring(), kWide);
  if (!z6.pass()) {
    detail = "Z6 failed";
    return false;
  }
  return true;
}

// Criterion 4: the property-(*) ground conditions.
bool criterion_star_conditions(std::string& detail) {
  const Formula pi_semi = build_pi(corpus::semilattice_scheme());
  const Formula pi_s = corpus::pi_s();
  for (const auto& A : corpus::enumerate_semilattices(5)) {
    if (!check_star_conditions(A, pi_semi, kWide).pass()) {
      detail = "built pi fails on a semilattice of size " + std::to_string(A->size());
      return false;
    }
    if (!check_star_conditions(A, pi_s, kWide).pass()) {
      detail = "pi_s fails on a semilattice of size " + std::to_string(A->size());
      return false;
    }
  }
  const Formula pi_band0 = build_pi(corpus::band0_scheme());
  if (!check_star_conditions(corpus::band0_algebra_a(), pi_band0, kWide).pass()) {
    detail = "band0 pi fails on the bundled algebra";
    return false;
  }
  for (const auto& M : testsupport::seeded_band0_members())
    if (!check_star_conditions(M, pi_band0, kWide).pass()) {
      detail = "band0 pi fails on a seeded member of size " + std::to_string(M->size());
      return false;
    }
  return true;
}

// Criterion 5: preservation and kernel characterization.
bool criterion_preservation(std::string& detail) {
  const auto start = Clock::now();
  const Formula pi_s = corpus::pi_s();
  const auto semis = corpus::enumerate_semilattices(6);
  for (const auto& A : semis)
    for (const auto& B : semis) {
      if (A->size() * B->size() > 12) continue;
      if (!check_factor_preservation(A, B, pi_s, kWide).pass) {
        detail = "pi_s preservation fails at sizes " + std::to_string(A->size()) + "x" +
                 std::to_string(B->size());
        return false;
      }
      if (!check_kernel_characterization(A, B, pi_s, kWide).pass) {
        detail = "pi_s kernel characterization fails at sizes " + std::to_string(A->size()) + "x" +
                 std::to_string(B->size());
        return false;
      }
    }
  const Formula pi = build_pi(corpus::band0_scheme());
  const AlgebraPtr A = corpus::band0_algebra_a();
  const AlgebraPtr two = testsupport::all_band0_members(2).at(0);
  if (!check_factor_preservation(A, two, pi, kWide).pass) {
    detail = "band0 pi preservation fails on algebraA x 2-element member";
    return false;
  }
  if (!check_kernel_characterization(A, two, pi, kWide).pass) {
    detail = "band0 pi kernel characterization fails on algebraA x 2-element member";
    return false;
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (secs >= 600.0) {
    detail = "too slow: " + std::to_string(secs) + "s";
    return false;
  }
  return true;
}

// Criterion 6: the closure predicate's ground properties.
bool criterion_gamma_suite(std::string& detail) {
  std::vector<AlgebraPtr> pool{corpus::band0_algebra_a()};
  for (auto& s : corpus::enumerate_semilattices(4)) pool.push_back(s);
  for (const auto& A : pool) {
    const auto fc = factor_congruences(A, kWide);
    const int n = A->size();
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b) {
        if (!gamma(fc, a, b, a, b)) {
          detail = "reflexive-pair clause failed";
          return false;
        }
        for (Element c = 0; c < n; ++c) {
          if (!gamma(fc, a, a, b, c)) {
            detail = "equal-pair clause failed";
            return false;
          }
          if (gamma(fc, a, b, c, c) != (a == b)) {
            detail = "collapse clause failed";
            return false;
          }
        }
      }
    // compatibility with the basic operations
    for (std::size_t op = 0; op < A->signature().size(); ++op) {
      const int arity = A->signature().at(op).arity;
      if (arity == 0) continue;
      std::vector<Element> as(2), bs(2);
      for (Element c = 0; c < n; ++c)
        for (Element d = 0; d < n; ++d)
          for (as[0] = 0; as[0] < n; ++as[0])
            for (bs[0] = 0; bs[0] < n; ++bs[0]) {
              if (!gamma(fc, as[0], bs[0], c, d)) continue;
              for (as[1] = 0; as[1] < n; ++as[1])
                for (bs[1] = 0; bs[1] < n; ++bs[1]) {
                  if (!gamma(fc, as[1], bs[1], c, d)) continue;
                  if (!gamma(fc, A->apply(op, as), A->apply(op, bs), c, d)) {
                    detail = "operation-compatibility clause failed";
                    return false;
                  }
                }
            }
    }
  }
  // componentwise behavior on small semilattice products
  const auto semis = corpus::enumerate_semilattices(4);
  for (const auto& A : semis)
    for (const auto& B : semis) {
      if (A->size() * B->size() > 9) continue;
      const AlgebraPtr P = direct_product({A, B});
      const std::vector<int> sizes{A->size(), B->size()};
      const auto fc_a = factor_congruences(A, kWide);
      const auto fc_b = factor_congruences(B, kWide);
      const auto fc_p = factor_congruences(P, kWide);
      for (Element a = 0; a < A->size(); ++a)
        for (Element b = 0; b < A->size(); ++b)
          for (Element c = 0; c < A->size(); ++c)
            for (Element d = 0; d < A->size(); ++d)
              for (Element ap = 0; ap < B->size(); ++ap)
                for (Element bp = 0; bp < B->size(); ++bp)
                  for (Element cp = 0; cp < B->size(); ++cp)
                    for (Element dp = 0; dp < B->size(); ++dp) {
                      auto enc = [&](Element u, Element v) {
                        const Element coords[2] = {u, v};
                        return static_cast<Element>(product_index(coords, sizes));
                      };
                      const bool lhs = gamma(fc_p, enc(a, ap), enc(b, bp), enc(c, cp), enc(d, dp));
                      if (lhs != (gamma(fc_a, a, b, c, d) && gamma(fc_b, ap, bp, cp, dp))) {
                        detail = "componentwise clause failed at sizes " + std::to_string(A->size()) +
                                 "x" + std::to_string(B->size());
                        return false;
                      }
                    }
    }
  return true;
}

// The corpus pool for criteria 7-9.
std::vector<AlgebraPtr> corpus_pool(int max_size) {
  std::vector<AlgebraPtr> pool;
  if (max_size >= 4) pool.push_back(corpus::band0_algebra_a());
  for (auto& s : corpus::enumerate_semilattices(std::min(max_size, 4))) pool.push_back(s);
  for (int n = 1; n <= std::min(max_size, 3); ++n)
    for (auto& m : testsupport::all_band0_members(n)) pool.push_back(m);
  if (max_size >= 4)
    for (const auto& m : testsupport::seeded_band0_members())
      if (m->size() <= max_size) pool.push_back(m);
  return pool;
}

// Criterion 7: oracle equivalences.
bool criterion_oracles(std::string& detail) {
  for (const auto& A : corpus_pool(4)) {
    for (Element a = 0; a < A->size(); ++a)
      for (Element b = a + 1; b < A->size(); ++b)
        if (cg(A, {{a, b}}).partition() != testsupport::least_congruence_above(*A, {{a, b}})) {
          detail = "cg disagrees with the brute-force oracle";
          return false;
        }
    auto fast = con_lattice(A);
    auto oracle = testsupport::congruences_by_filter(*A);
    if (fast.size() != oracle.size()) {
      detail = "con_lattice count disagrees with the partition filter";
      return false;
    }
    std::sort(oracle.begin(), oracle.end());
    std::vector<Partition> got;
    for (const auto& c : fast) got.push_back(c.partition());
    std::sort(got.begin(), got.end());
    if (got != oracle) {
      detail = "con_lattice contents disagree with the partition filter";
      return false;
    }
  }
  const auto by_poset = corpus::enumerate_semilattices(3);
  const auto by_tables = corpus::enumerate_semilattices_by_tables(3);
  if (by_poset.size() != by_tables.size()) {
    detail = "semilattice generators disagree on the count at size 3";
    return false;
  }
  for (std::size_t i = 0; i < by_poset.size(); ++i)
    if (*by_poset[i] != *by_tables[i]) {
      detail = "semilattice generators disagree at index " + std::to_string(i);
      return false;
    }
  return true;
}

// Criterion 8: monotonicity and the collapse of the relation recursion.
bool criterion_delta_epsilon(std::string& detail) {
  for (const auto& A : corpus_pool(3)) {
    if (A->size() > 3) continue;
    const auto lattice = con_lattice(A);
    for (const auto& th : lattice)
      for (const auto& ths : lattice)
        for (const auto& ph : lattice)
          for (const auto& phs : lattice) {
            BinaryRelation prev_d = BinaryRelation::identity(A->size());
            BinaryRelation prev_e = BinaryRelation::identity(A->size());
            for (int n = 1; n <= 6; ++n) {
              const auto [dn, en] = delta_epsilon(th, ths, ph, phs, n);
              if (!prev_d.subset_of(dn) || !prev_e.subset_of(en)) {
                detail = "monotonicity failed";
                return false;
              }
              prev_d = dn;
              prev_e = en;
            }
            if (meet(th, ths).is_delta() && meet(ph, phs).is_delta()) {
              const auto [d6, e6] = delta_epsilon(th, ths, ph, phs, 6);
              if (!(d6 == BinaryRelation::identity(A->size()))) {
                detail = "collapse failed";
                return false;
              }
            }
          }
  }
  return true;
}

// Criterion 9: chains replay; the named example has a valid chain.
bool criterion_chains(std::string& detail) {
  for (const auto& A : corpus_pool(4)) {
    for (Element g1 = 0; g1 < A->size(); ++g1)
      for (Element g2 = g1 + 1; g2 < A->size(); ++g2) {
        const std::vector<std::pair<Element, Element>> gens{{g1, g2}};
        const Congruence theta = cg(A, gens);
        for (Element a = 0; a < A->size(); ++a)
          for (Element b = 0; b < A->size(); ++b) {
            const MalcevChain r = malcev_chain(A, gens, a, b);
            if (theta.contains(a, b)) {
              if (r.status != MalcevChain::Status::found || !replay_chain(*A, gens, r)) {
                detail = "chain missing or failed to replay";
                return false;
              }
            } else if (r.status != MalcevChain::Status::not_in_congruence) {
              detail = "false positive chain";
              return false;
            }
          }
      }
  }
  const AlgebraPtr chain3 = corpus::chain_semilattice(3);
  const MalcevChain named = malcev_chain(chain3, {{0, 2}}, 0, 1);
  if (named.status != MalcevChain::Status::found || !replay_chain(*chain3, {{0, 2}}, named)) {
    detail = "the 3-chain (0,1) query has no valid chain";
    return false;
  }
  return true;
}

// Criterion 10: strict refinement across all small decomposition systems of
// 2-chain powers.
bool criterion_strict_refinement(std::string& detail) {
  const AlgebraPtr two = corpus::chain_semilattice(2);
  for (int factors = 1; factors <= 3; ++factors) {
    std::vector<AlgebraPtr> fs(static_cast<std::size_t>(factors), two);
    const AlgebraPtr P = direct_product(fs);
    const auto fc = factor_congruences(P, kWide);

    // every valid system with at most three components drawn from FC(A)
    std::vector<DecompositionSystem> systems;
    const std::size_t m = fc.size();
    for (std::size_t i = 0; i < m; ++i) {
      DecompositionSystem s1{fc[i].theta};
      try {
        validate_decomposition_system(P, s1);
        systems.push_back(s1);
      } catch (const ValidationError&) {
      }
      for (std::size_t j = i + 1; j < m; ++j) {
        DecompositionSystem s2{fc[i].theta, fc[j].theta};
        try {
          validate_decomposition_system(P, s2);
          systems.push_back(s2);
        } catch (const ValidationError&) {
        }
        for (std::size_t k = j + 1; k < m; ++k) {
          DecompositionSystem s3{fc[i].theta, fc[j].theta, fc[k].theta};
          try {
            validate_decomposition_system(P, s3);
            systems.push_back(s3);
          } catch (const ValidationError&) {
          }
        }
      }
    }
    if (systems.empty()) {
      detail = "no decomposition systems found at " + std::to_string(factors) + " factors";
      return false;
    }
    for (const auto& D : systems)
      for (const auto& E : systems) {
        const RefinementReport r = strict_refinement(P, D, E, kWide);
        if (!r.pass) {
          detail = "refinement failed at " + std::to_string(factors) + " factors: " + r.failure;
          return false;
        }
      }
  }
  return true;
}

struct Criterion {
  int id;
  const char* name;
  std::function<bool(std::string&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  g_cli_path = argc > 1 ? argv[1] : "./bfc";

  const std::vector<Criterion> criteria{
      {1, "golden counterexample via the CLI", criterion_golden_counterexample},
      {2, "scheme identity verification", criterion_scheme_identities},
      {3, "Boolean factor congruences across semilattices and Z6", criterion_bfc_suite},
      {4, "property-(*) ground conditions", criterion_star_conditions},
      {5, "preservation and kernel characterization", criterion_preservation},
      {6, "closure-predicate ground properties", criterion_gamma_suite},
      {7, "oracle equivalences", criterion_oracles},
      {8, "relation recursion: monotonicity and collapse", criterion_delta_epsilon},
      {9, "element chains replay", criterion_chains},
      {10, "strict refinement of small decompositions", criterion_strict_refinement},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    std::string detail;
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    std::ostringstream line;
    line << (ok ? "[PASS]" : "[FAIL]") << " " << c.id << ". " << c.name << " (" << std::fixed
         << std::setprecision(2) << secs << "s)";
    if (!ok && !detail.empty()) line << " -- " << detail;
    std::cout << line.str() << std::endl;
    if (!ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
