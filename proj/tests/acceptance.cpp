// Acceptance suite: runs every published-table criterion at zero tolerance
// (all arithmetic is exact) and prints one PASS/FAIL line per criterion.

#include "suzree/case_io.hpp"
#include "suzree/disconnected.hpp"
#include "suzree/verify.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

using namespace suzree;
namespace fs = std::filesystem;

namespace {

std::string g_data_dir = SUZREE_DATA_DIR;
int g_failures = 0;

void criterion(int number, const std::string& what, const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << number << ": " << what;
    if (!detail.empty()) std::cout << " -- " << detail;
    std::cout << "\n";
    if (!ok) ++g_failures;
}

lusztig::CaseBundle load(const std::string& name) {
    return io::load_case(g_data_dir + "/" + name + ".json");
}

bool checks_pass(const lusztig::LusztigResult& r) {
    return r.verdict.pass && r.omega_check && r.omega_check->pass && r.p_check &&
           r.p_check->pass && r.lambda_check && r.lambda_check->pass;
}

Poly ipoly(std::initializer_list<long> coeffs, int d) {
    std::vector<QuadRational> c;
    for (long v : coeffs) c.emplace_back(v, d);
    return Poly(std::move(c), d);
}

}  // namespace

int main(int argc, char** argv) {
    if (argc > 1) g_data_dir = argv[1];

    lusztig::LusztigResult b2, g2, f4;

    criterion(1, "B2 pipeline: Omega/P/Lambda equal the theorem matrices, X equals the target "
                 "table (12 cells), < 1 s",
              [&](std::string& detail) {
                  b2 = lusztig::run_case(load("b2"));
                  char buf[64];
                  std::snprintf(buf, sizeof buf, "%zu cells, %.3fs", b2.verdict.cells, b2.seconds);
                  detail = buf;
                  return checks_pass(b2) && b2.verdict.cells == 12 && b2.seconds < 1.0;
              });

    criterion(2, "G2 pipeline: Omega/P/Lambda match with Lambda = diag(1, p1, q^2 p1, q^4 p1), "
                 "X equals the target table (28 cells), < 1 s",
              [&](std::string& detail) {
                  g2 = lusztig::run_case(load("g2"));
                  char buf[64];
                  std::snprintf(buf, sizeof buf, "%zu cells, %.3fs", g2.verdict.cells, g2.seconds);
                  detail = buf;
                  const Poly p1 = ipoly({-1, 0, 0, 0, 1}, 3) * ipoly({1, 0, -1, 0, 1}, 3);
                  const bool lambda_shape =
                      g2.lambda_matrix.at(0, 0) == RatFunc(Poly::one(3)) &&
                      g2.lambda_matrix.at(1, 1) == RatFunc(p1) &&
                      g2.lambda_matrix.at(2, 2) == RatFunc(p1.shifted_up(2)) &&
                      g2.lambda_matrix.at(3, 3) == RatFunc(p1.shifted_up(4));
                  return checks_pass(g2) && g2.verdict.cells == 28 && lambda_shape &&
                         g2.seconds < 1.0;
              });

    criterion(3, "F4 pipeline: X equals the target table (209 cells), Lambda and P equal the "
                 "theorem matrices (misprints resolved), tP Lambda P = Omega, < 10 s",
              [&](std::string& detail) {
                  f4 = lusztig::run_case(load("f4"));
                  char buf[64];
                  std::snprintf(buf, sizeof buf, "%zu cells, %.3fs", f4.verdict.cells, f4.seconds);
                  detail = buf;
                  const bool residual_zero =
                      (f4.p_matrix.transpose() * f4.lambda_matrix * f4.p_matrix - f4.omega)
                          .is_zero();
                  // the two resolved misprints: p1 = (q^4-1)(q^6+1) in P[1][2] and P[1][10],
                  // p12 = -q^6+q^2-1 in P[2][9] (1-based)
                  const Poly p1 = ipoly({-1, 0, 0, 0, 1}, 2) * ipoly({1, 0, 0, 0, 0, 0, 1}, 2);
                  const Poly p12 = ipoly({-1, 0, 1, 0, 0, 0, -1}, 2);
                  const bool misprints_resolved = f4.p_matrix.at(0, 1) == RatFunc(p1) &&
                                                  f4.p_matrix.at(0, 9) == RatFunc(p1) &&
                                                  f4.p_matrix.at(1, 8) == RatFunc(p12);
                  return f4.verdict.pass && f4.verdict.cells == 209 && f4.p_check &&
                         f4.p_check->pass && f4.lambda_check && f4.lambda_check->pass &&
                         residual_zero && misprints_resolved && f4.seconds < 10.0;
              });

    criterion(4, "torus orders: the determinant formula reproduces all 3 + 4 + 11 published "
                 "polynomials as exact multisets matched bijectively to F-classes",
              [&](std::string& detail) {
                  std::size_t matched = 0;
                  for (const std::string name : {"b2", "g2", "f4"}) {
                      const auto bundle = load(name);
                      const auto group = weyl::generate_weyl(bundle.datum);
                      auto classes = weyl::f_classes(group, bundle.datum);
                      // throws unless the match is a bijection
                      weyl::match_fclasses_to_columns(classes,
                                                      bundle.coset_chars.column_torus_orders);
                      std::set<int> used;
                      for (const auto& cl : classes) used.insert(cl.column_index);
                      if (used.size() != classes.size()) return false;
                      matched += classes.size();
                  }
                  detail = std::to_string(matched) + " torus orders matched";
                  return matched == 3u + 4u + 11u;
              });

    criterion(5, "coset orthogonality of the three extension tables; column-derived F-class "
                 "sizes equal brute-force sizes",
              [&](std::string& detail) {
                  const std::size_t orders[3] = {8, 12, 1152};
                  const char* names[3] = {"b2", "g2", "f4"};
                  for (int i = 0; i < 3; ++i) {
                      const auto bundle = load(names[i]);
                      const auto group = weyl::generate_weyl(bundle.datum);
                      auto classes = weyl::f_classes(group, bundle.datum);
                      weyl::match_fclasses_to_columns(classes,
                                                      bundle.coset_chars.column_torus_orders);
                      std::vector<std::size_t> brute(classes.size(), 0);
                      for (const auto& cl : classes)
                          brute[static_cast<std::size_t>(cl.column_index)] = cl.size;
                      const auto derived =
                          coset::derive_sizes_from_columns(bundle.coset_chars, orders[i]);
                      if (derived != brute) return false;
                      const auto defect =
                          coset::coset_orthogonality_defect(bundle.coset_chars, brute, orders[i]);
                      for (const auto& row : defect)
                          for (const auto& v : row)
                              if (!v.is_zero()) return false;
                  }
                  // spot value pinned by the second orthogonality: F4 first column -> 72
                  const auto f4b = load("f4");
                  const auto derived = coset::derive_sizes_from_columns(f4b.coset_chars, 1152);
                  detail = "f4 column w1F0 size " + std::to_string(derived.front());
                  return derived.front() == 72;
              });

    criterion(6, "structure sanity: trivial-pair X row is identically 1; sign-pair X row is "
                 "(q^N, 0, ...) with N = 4, 6, 24",
              [&](std::string&) {
                  const lusztig::LusztigResult* results[3] = {&b2, &g2, &f4};
                  const std::size_t tops[3] = {4, 6, 24};
                  const int ds[3] = {2, 3, 2};
                  for (int i = 0; i < 3; ++i) {
                      const auto& x = results[i]->x_table;
                      for (std::size_t j = 0; j < x.cols(); ++j) {
                          if (x.at(x.rows() - 1, j) != RatFunc(Poly::one(ds[i]))) return false;
                          const RatFunc expect =
                              j == 0 ? RatFunc(Poly::q_power(tops[i], ds[i])) : RatFunc::zero(ds[i]);
                          if (x.at(0, j) != expect) return false;
                      }
                  }
                  return true;
              });

    criterion(7, "coset model suite (Z4, S3, D8, Q8, A4 with two twists each) and the Sp4(2) "
                 "model: 720 / fixed subgroup 20 with 5 classes / 5 outer-coset classes",
              [&](std::string& detail) {
                  const auto suite =
                      models::run_model_suite({"z4", "s3", "d8", "q8", "a4", "sp42"});
                  if (!suite.all_ok || suite.coset_reports.size() != 10 || !suite.sp42_ran)
                      return false;
                  for (const auto& rep : suite.coset_reports)
                      if (!rep.all_ok()) return false;
                  const auto& sp = suite.sp42;
                  const std::multiset<std::size_t> sizes(sp.fixed_class_sizes.begin(),
                                                         sp.fixed_class_sizes.end());
                  detail = "|Sp4(2)|=" + std::to_string(sp.group_order) + ", |Sz(2)|=" +
                           std::to_string(sp.fixed_subgroup_order) + ", outer classes " +
                           std::to_string(sp.outer_coset_class_count);
                  return sp.group_order == 720 && sp.fixed_subgroup_order == 20 &&
                         sp.fixed_class_count == 5 &&
                         sizes == std::multiset<std::size_t>{1, 4, 5, 5, 5} &&
                         sp.outer_coset_class_count == 5;
              });

    criterion(8, "disconnected B2: numerically identical to connected B2 under relabeled "
                 "columns and passing against the target table",
              [&](std::string&) {
                  const auto disc = disconnected::run_disconnected(load("b2"));
                  return disc.verdict.pass && !disc.conjectural && disc.omega == b2.omega &&
                         disc.p_matrix == b2.p_matrix && disc.lambda_matrix == b2.lambda_matrix &&
                         disc.x_table == b2.x_table &&
                         disc.column_labels.front() == "(1,sigma)";
              });

    criterion(9, "disconnected F4: emits the conjectural 11x19 table equal to the connected F4 "
                 "X table, flagged CONJECTURAL, never failing",
              [&](std::string& detail) {
                  const auto disc = disconnected::run_disconnected(load("f4"));
                  std::ostringstream os;
                  io::emit(disc, io::Format::Text, os);
                  detail = "flag line: " + os.str().substr(0, os.str().find('\n'));
                  return disc.conjectural && disc.x_table == f4.x_table &&
                         disc.x_table.rows() == 11 && disc.x_table.cols() == 19 &&
                         os.str().find("CONJECTURAL") != std::string::npos &&
                         disc.column_labels.front() == "N(u0)";
              });

    criterion(10, "property suites: exact field axioms on 10^4 random instances, zero "
                  "factorization residual, solver uniqueness under permutation, fault injection "
                  "flips verify to exit 1",
              [&](std::string&) {
                  // field axioms, 10^4 instances across d = 1, 2, 3
                  std::mt19937_64 rng(424242);
                  std::uniform_int_distribution<int> num(-9, 9), den(1, 9), dpick(1, 3);
                  auto rnd = [&](int d) {
                      return QuadRational(Rational(num(rng), den(rng)),
                                          Rational(num(rng), den(rng)), d);
                  };
                  for (int iter = 0; iter < 10000; ++iter) {
                      const int d = dpick(rng);
                      const auto x = rnd(d), y = rnd(d), z = rnd(d);
                      if ((x + y) + z != x + (y + z)) return false;
                      if ((x * y) * z != x * (y * z)) return false;
                      if (x * (y + z) != x * y + x * z) return false;
                      if (!x.is_zero() && x * x.inverse() != QuadRational::one(d)) return false;
                  }
                  // residuals
                  for (const auto* r : {&b2, &g2, &f4})
                      if (!(r->p_matrix.transpose() * r->lambda_matrix * r->p_matrix - r->omega)
                               .is_zero())
                          return false;
                  // solver uniqueness under intra-block permutation (F4 has the one 2x2 block)
                  {
                      const auto bundle = load("f4");
                      std::vector<std::size_t> order(bundle.springer.size());
                      for (std::size_t i = 0; i < order.size(); ++i)
                          order[i] = order.size() - 1 - i;
                      const auto alt =
                          lusztig::solve_block_factorization(f4.omega, bundle.block_ids(), order);
                      if (alt.first != f4.p_matrix || alt.second != f4.lambda_matrix) return false;
                  }
                  // fault injection: perturb one target cell in a copied data dir
                  const fs::path tmp =
                      fs::temp_directory_path() / "suzree-acceptance-fault";
                  fs::remove_all(tmp);
                  fs::create_directories(tmp);
                  for (const char* name : {"b2.json", "g2.json", "f4.json"})
                      fs::copy_file(fs::path(g_data_dir) / name, tmp / name);
                  {
                      std::ifstream in(tmp / "b2.json");
                      io::Json j;
                      in >> j;
                      in.close();
                      j["target_table"]["rows"][1]["values"][1] =
                          io::Json::array({io::Json::array({"1", "0"})});
                      std::ofstream out(tmp / "b2.json");
                      out << j.dump(1);
                  }
                  cli::RunConfig config;
                  config.data_dir = tmp.string();
                  config.models = {"z4"};
                  std::ostringstream log;
                  const int status = cli::verify_all(config, log);
                  fs::remove_all(tmp);
                  if (status != 1) return false;
                  if (log.str().find("R_chi / u4") == std::string::npos) return false;
                  // and a missing file flips it to exit 2
                  const fs::path tmp2 = fs::temp_directory_path() / "suzree-acceptance-missing";
                  fs::remove_all(tmp2);
                  fs::create_directories(tmp2);
                  fs::copy_file(fs::path(g_data_dir) / "b2.json", tmp2 / "b2.json");
                  cli::RunConfig config2;
                  config2.data_dir = tmp2.string();
                  config2.models = {"z4"};
                  std::ostringstream log2;
                  const int status2 = cli::verify_all(config2, log2);
                  fs::remove_all(tmp2);
                  return status2 == 2;
              });

    std::cout << (g_failures == 0 ? "ACCEPTANCE: all 10 criteria passed\n"
                                  : "ACCEPTANCE: " + std::to_string(g_failures) +
                                        " criteria FAILED\n");
    return g_failures == 0 ? 0 : 1;
}
