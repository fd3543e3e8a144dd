// Command-line front end: every library capability with machine-readable
// output. Exit codes: 0 success / true verdict, 1 false verdict, 2 usage
// error, 3 unsupported input (e.g. even L).
#include <CLI11.hpp>

#include <atomic>
#include <fstream>
#include <iostream>
#include <mutex>
#include <numeric>
#include <random>
#include <thread>

#include "cuspidal/analysis.hpp"
#include "cuspidal/classgroup.hpp"
#include "cuspidal/criterion.hpp"
#include "cuspidal/serialize.hpp"

using namespace cuspidal;

namespace {

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUnsupported = 3;

void emit(const std::string& text, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << text << "\n";
  } else {
    std::ofstream os(output_path);
    if (!os) throw std::runtime_error("cannot open " + output_path);
    os << text << "\n";
  }
}

ExponentVector load_vector(long N, const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::invalid_argument("cannot open " + path);
  json j = json::parse(is);
  ExponentVector f = exponent_from_json(j);
  if (f.N != N)
    throw std::invalid_argument("vector level does not match --N");
  return f;
}

int cmd_cusps(long N, bool orbits, const std::string& format,
              const std::string& output) {
  if (format == "json") {
    json j;
    j["N"] = N;
    j["cusps"] = json::array();
    for (const auto& P : enumerate_cusps(N)) j["cusps"].push_back(cusp_to_json(P));
    if (orbits) {
      j["orbits"] = json::array();
      for (const auto& orb : galois_orbits(N)) {
        json o = json::array();
        for (const auto& P : orb) o.push_back(cusp_to_json(P));
        j["orbits"].push_back(std::move(o));
      }
    }
    emit(j.dump(2), output);
  } else if (format == "csv") {
    std::string s = "c,a,z\n";
    for (const auto& P : enumerate_cusps(N))
      s += std::to_string(P.c) + "," + std::to_string(P.a) + "," +
           std::to_string(P.z) + "\n";
    emit(s.substr(0, s.size() - 1), output);
  } else {
    std::string s;
    for (const auto& P : enumerate_cusps(N))
      s += "(" + std::to_string(P.a) + " : " + std::to_string(P.c) + ")\n";
    emit(s.substr(0, s.size() - 1), output);
  }
  return kExitTrue;
}

int cmd_divisor(long N, long m, long h, const std::string& file,
                const std::string& output) {
  ExponentVector f;
  if (!file.empty()) {
    f = load_vector(N, file);
  } else {
    f.N = N;
    f.set(m, h, Rat(1));
  }
  emit(divisor_to_json(divisor_of(N, f)).dump(2), output);
  return kExitTrue;
}

int cmd_criterion(long N, const std::string& file, const std::string& output) {
  ExponentVector f = file.empty() ? ExponentVector{N, {}} : load_vector(N, file);
  auto rep = check_criterion(N, f);
  emit(criterion_report_to_json(rep).dump(2), output);
  return rep.verdict ? kExitTrue : kExitFalse;
}

int cmd_relation(long N, long m, long h, long p, bool all,
                 const std::string& output) {
  if (!all) {
    auto rc = verify_relation(N, m, h, p);
    emit(relation_to_json(rc).dump(2), output);
    return rc.ok ? kExitTrue : kExitFalse;
  }
  LevelCache cache(N);
  bool ok = true;
  json cases = json::array();
  for (long mm : divisors(N)) {
    if (mm == N) continue;
    long l = level_data(N, mm).ell;
    if (l <= 1) continue;
    for (auto [pp, e] : factorize(l))
      for (long hh = 1; hh <= l; ++hh) {
        auto rc = verify_relation(N, mm, hh, pp, &cache);
        ok = ok && rc.ok;
        cases.push_back(json{{"m", mm}, {"h", hh}, {"p", pp}, {"verdict", rc.ok}});
      }
  }
  json j;
  j["N"] = N;
  j["verdict"] = ok;
  j["cases"] = std::move(cases);
  emit(j.dump(2), output);
  return ok ? kExitTrue : kExitFalse;
}

int cmd_psi_matrix(long N, long d, int i, const std::string& ordering,
                   const std::string& format, const std::string& output) {
  Ordering ord = ordering == "lex" ? Ordering::lex : Ordering::colex;
  LinearOperator op = psi_full_op(N, d, i, ord);
  if (format == "csv")
    emit(operator_to_csv(op), output);
  else
    emit(operator_to_json(op).dump(2), output);
  return kExitTrue;
}

int cmd_vanishing(long N, long d, int iota, long a, const std::string& mode,
                  long x, long b, int trials, const std::string& output) {
  json j;
  j["N"] = N;
  bool verdict = false;
  if (mode == "kernel") {
    verdict = check_vanishing_kernel(N, d, iota, a);
    j["check"] = "kernel";
    j["d"] = d;
    j["iota"] = iota;
    j["a"] = a;
  } else if (mode == "partial-phi1" || mode == "partial-phi-star") {
    auto which = mode == "partial-phi1" ? PartialVanishing::phi1 : PartialVanishing::phi_star;
    verdict = check_partial_vanishing(N, d, which, x, b);
    j["check"] = mode;
    j["d"] = d;
    j[mode == "partial-phi1" ? "x" : "y"] = x;
    j[mode == "partial-phi1" ? "b" : "a"] = b;
  } else if (mode == "blocks") {
    verdict = verify_block_formulas(N, d, trials);
    j["check"] = "blocks";
    j["d"] = d;
    j["trials"] = trials;
  } else if (mode == "elementary") {
    verdict = check_elementary_lemmas(N);
    j["check"] = "elementary";
  } else {
    throw std::invalid_argument("unknown --check mode: " + mode);
  }
  j["verdict"] = verdict;
  emit(j.dump(2), output);
  return verdict ? kExitTrue : kExitFalse;
}

int cmd_conjecture_a(long N, bool divisor_rows, const std::string& output) {
  auto cert = verify_conjecture_A(N, divisor_rows);
  emit(certificate_to_json(cert).dump(2), output);
  return cert.verdict ? kExitTrue : kExitFalse;
}

int cmd_classgroup(long N, const std::string& format,
                   const std::string& output) {
  auto g = compute_groups(N);
  if (format == "csv")
    emit("N,order_C_N,C_N,C_of_N,C_N_Q,yoo\n" + classgroup_to_csv(g), output);
  else
    emit(classgroup_to_json(g).dump(2), output);
  return kExitTrue;
}

int cmd_verify_yoo(long N, const std::string& output) {
  auto res = verify_conjecture_yoo(N);
  json j;
  j["N"] = N;
  j["verdict"] = res.verdict;
  if (res.witness) j["witness"] = divisor_to_json(*res.witness);
  emit(j.dump(2), output);
  return res.verdict ? kExitTrue : kExitFalse;
}

// full invariant battery for one level; returns failure descriptions
std::vector<std::string> selftest_level(long N) {
  std::vector<std::string> bad;
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) bad.push_back("N=" + std::to_string(N) + ": " + what);
  };
  // cusp count
  long count = 0;
  for (long c : divisors(N)) count += euler_phi(std::gcd(c, N / c));
  auto cs = enumerate_cusps(N);
  expect((long)cs.size() == count, "cusp count");
  for (const auto& orb : galois_orbits(N))
    expect(orb.size() == (std::size_t)euler_phi(orb[0].z), "orbit size");
  if (N < 2) return bad;

  LevelCache cache(N);
  // orders: degree zero, special-cusp agreement, representative independence
  for (long m : divisors(N)) {
    if (m == N) continue;
    long l = level_data(N, m).ell;
    for (long h = 0; h < l; ++h) {
      FIndex idx{m, h};
      const auto& ords = cache.orders(idx);
      Rat deg(0);
      for (const auto& o : ords) deg += o;
      expect(deg == 0, "degree zero");
      expect(order_at_cusp(N, idx, cusp_infinity(N)) ==
                 order_special(N, idx, SpecialCusp::infinity),
             "special infinity");
      expect(order_at_cusp(N, idx, cusp_zero(N)) ==
                 order_special(N, idx, SpecialCusp::zero),
             "special zero");
      if (N % 2 == 0 && (N / 2) % 2 == 1)
        expect(order_at_cusp(N, idx, cusp_half(N)) ==
                   order_special(N, idx, SpecialCusp::half_N0),
               "special half");
    }
    // replacement relations
    if (l > 1)
      for (auto [p, e] : factorize(l))
        for (long h = 1; h <= l; ++h)
          expect(verify_relation(N, m, h, p, &cache).ok, "relation");
  }
  // eta identity
  for (long d : divisors(N)) {
    if (d == N) continue;
    ExponentVector f;
    f.N = N;
    for (long m : divisors(N))
      if (m != N && m % d == 0) f.set(m, 0, Rat(1));
    std::map<long, Int> r{{d, Int(1)}, {N, Int(-1)}};
    expect(divisor_of(N, f, &cache) == eta_quotient_divisor(N, r), "eta identity");
  }
  // criterion lattice (L odd)
  if (sqrt_part(N) % 2 == 1) {
    for (const auto& v : unit_lattice_basis(N)) {
      expect(check_criterion(N, v).verdict, "criterion basis");
      Divisor D = divisor_of(N, v, &cache);
      expect(D.is_integral() && D.degree() == 0, "unit divisor integral");
    }
  }
  // psi properties where defined
  long L = sqrt_part(N);
  if (L > 1 && factorize(L).size() <= 2) {
    std::mt19937_64 rng(N);
    std::uniform_int_distribution<long> num(-9, 9), den(1, 4);
    ExponentVector f;
    f.N = N;
    for (auto [m, h] : index_sets(N).S) f.set(m, h, make_rat(num(rng), den(rng)));
    ExponentVector g = apply_psi(N, f);
    for (auto [m, h] : index_sets(N).S_red)
      expect(g.get(m, h) == 0, "psi vanishing on S_red");
    expect(apply_psi(N, g) == g, "psi idempotent");
    expect(apply_psi(N, f, Ordering::lex) == g, "psi ordering");
    expect(divisor_of(N, g, &cache) == divisor_of(N, f, &cache),
           "psi divisor preservation");
  }
  return bad;
}

int cmd_selftest(long max_N, int jobs, const std::string& output) {
  std::vector<long> levels;
  for (long N = 1; N <= max_N; ++N) levels.push_back(N);
  std::vector<std::vector<std::string>> failures(levels.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= levels.size()) return;
      failures[i] = selftest_level(levels[i]);
    }
  };
  int nt = std::max(1, jobs);
  std::vector<std::thread> pool;
  for (int t = 1; t < nt; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  json j;
  j["max_N"] = max_N;
  j["failures"] = json::array();
  std::size_t nfail = 0;
  for (const auto& f : failures)
    for (const auto& s : f) {
      j["failures"].push_back(s);
      ++nfail;
    }
  j["verdict"] = nfail == 0;
  emit(j.dump(2), output);
  return nfail == 0 ? kExitTrue : kExitFalse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations for modular units and cuspidal class groups on X_0(N)"};
  app.require_subcommand(1);
  app.set_help_flag("--help", "print help");  // frees -h / --h for indices
  std::string output, format = "json", ordering = "colex", file, mode = "kernel";
  long N = 1, m = 1, h = 0, p = 2, d = 1, a = 1, x = 0, b = 1;
  int iota = 2, i_stratum = 2, trials = 20, jobs = 1;
  long max_N = 60;
  bool orbits = false, all = false, divisor_rows = false;

  auto add_common = [&](CLI::App* sub, bool with_format = true) {
    sub->set_help_flag("--help", "print help");
    sub->add_option("--output", output, "write to file instead of stdout");
    if (with_format)
      sub->add_option("--format", format, "json|csv|text")
          ->check(CLI::IsMember({"json", "csv", "text"}));
  };

  auto* c_cusps = app.add_subcommand("cusps", "enumerate cusps (and orbits)");
  c_cusps->add_option("--N", N, "level")->required();
  c_cusps->add_flag("--orbits", orbits, "include Galois orbits");
  add_common(c_cusps);

  auto* c_div = app.add_subcommand("divisor", "divisor of F_{m,h} or of a vector");
  c_div->add_option("--N", N)->required();
  c_div->add_option("--m", m);
  c_div->add_option("--h", h);
  c_div->add_option("--file", file, "exponent vector JSON");
  add_common(c_div, false);

  auto* c_crit = app.add_subcommand("criterion", "modular-unit criterion report");
  c_crit->add_option("--N", N)->required();
  c_crit->add_option("--file", file, "exponent vector JSON (default: zero)");
  add_common(c_crit, false);

  auto* c_rel = app.add_subcommand("relation", "replacement-relation divisor identity");
  c_rel->add_option("--N", N)->required();
  c_rel->add_option("--m", m);
  c_rel->add_option("--h", h);
  c_rel->add_option("--p", p);
  c_rel->add_flag("--all", all, "sweep all admissible (m, h, p) at level N");
  add_common(c_rel, false);

  auto* c_psi = app.add_subcommand("psi-matrix", "matrix of Psi on a stratum");
  c_psi->add_option("--N", N)->required();
  c_psi->add_option("--d", d, "divisor of M");
  c_psi->add_option("--i", i_stratum, "stratum index 0|1|2");
  c_psi->add_option("--ordering", ordering)->check(CLI::IsMember({"lex", "colex"}));
  add_common(c_psi);

  auto* c_van = app.add_subcommand("vanishing", "vanishing and block-formula checks");
  c_van->add_option("--N", N)->required();
  c_van->add_option("--d", d);
  c_van->add_option("--check", mode,
                    "kernel|partial-phi1|partial-phi-star|blocks|elementary");
  c_van->add_option("--iota", iota);
  c_van->add_option("--a", a);
  c_van->add_option("--x", x, "x (i1) or y (i2)");
  c_van->add_option("--b", b, "b (i1) or a (i2)");
  c_van->add_option("--trials", trials);
  add_common(c_van, false);

  auto* c_conj = app.add_subcommand("conjecture-a", "divisibility conjecture at level N");
  c_conj->add_option("--N", N)->required();
  c_conj->add_flag("--with-divisor-rows", divisor_rows,
                   "also impose the scaled cusp-order congruences");
  add_common(c_conj, false);

  auto* c_cg = app.add_subcommand("classgroup", "C_N, C(N), C_N(Q) at level N");
  c_cg->add_option("--N", N)->required();
  add_common(c_cg);

  auto* c_yoo = app.add_subcommand("verify-yoo", "C(N) = C_N(Q) verdict");
  c_yoo->add_option("--N", N)->required();
  add_common(c_yoo, false);

  auto* c_self = app.add_subcommand("selftest", "invariant battery over a level range");
  c_self->add_option("--max-N", max_N, "largest level (default 60)");
  c_self->add_option("--jobs", jobs, "parallel workers");
  add_common(c_self, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (app.got_subcommand(c_cusps)) return cmd_cusps(N, orbits, format, output);
    if (app.got_subcommand(c_div)) return cmd_divisor(N, m, h, file, output);
    if (app.got_subcommand(c_crit)) return cmd_criterion(N, file, output);
    if (app.got_subcommand(c_rel)) return cmd_relation(N, m, h, p, all, output);
    if (app.got_subcommand(c_psi))
      return cmd_psi_matrix(N, d, i_stratum, ordering, format, output);
    if (app.got_subcommand(c_van))
      return cmd_vanishing(N, d, iota, a, mode, x, b, trials, output);
    if (app.got_subcommand(c_conj)) return cmd_conjecture_a(N, divisor_rows, output);
    if (app.got_subcommand(c_cg)) return cmd_classgroup(N, format, output);
    if (app.got_subcommand(c_yoo)) return cmd_verify_yoo(N, output);
    if (app.got_subcommand(c_self)) return cmd_selftest(max_N, jobs, output);
  } catch (const unsupported_error& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return kExitUnsupported;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
