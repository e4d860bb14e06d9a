// Command-line harness: compute <task> over instance files, verify <task>
// against the exact oracles, bench <task> fast-vs-naive.

#include <CLI11.hpp>
#include <cinttypes>
#include <cstdio>
#include <string>
#include <vector>

#include "smat/checks.hpp"
#include "smat/drivers.hpp"
#include "smat/errors.hpp"
#include "smat/instances.hpp"
#include "smat/interp.hpp"
#include "smat/io.hpp"
#include "smat/oracle.hpp"

using namespace smat;

namespace {

struct ComputeArgs {
  std::string task;
  std::vector<std::string> inputs;
  std::string out = "out.smat";
  std::string rem_out;
  long ell = 64;
  bool strict = false;
};

InstanceFile expect_kind(const std::string& path, const std::string& kind) {
  InstanceFile f = read_instance(path);
  if (f.kind != kind)
    throw ParseError(path + ": expected kind '" + kind + "', found '" + f.kind + "'");
  return f;
}

ApproxPoly poly_of(const InstanceFile& f) { return ApproxPoly(f.entries, f.lambda); }
VecApprox vec_of(const InstanceFile& f) { return VecApprox(f.entries, f.lambda); }

ToeplitzMatrix toeplitz_of(const InstanceFile& f) {
  long n = (f.n + 1) / 2;
  if (f.n != 2 * n - 1) throw ParseError("toeplitz entry count must be odd (col + row)");
  std::vector<ComplexApprox> col(f.entries.begin(), f.entries.begin() + n);
  std::vector<ComplexApprox> row;
  row.push_back(col[0]);
  row.insert(row.end(), f.entries.begin() + n, f.entries.end());
  return ToeplitzMatrix(std::move(col), std::move(row), f.lambda);
}

HankelMatrix hankel_of(const InstanceFile& f) {
  if (f.n % 2 == 0) throw ParseError("hankel entry count must be 2n-1");
  return HankelMatrix(f.entries, f.lambda);
}

CauchySpec cauchy_of(const InstanceFile& f) {
  if (f.n % 2 != 0) throw ParseError("cauchy entry count must be 2n (s then t)");
  long n = f.n / 2;
  std::vector<ComplexApprox> s(f.entries.begin(), f.entries.begin() + n);
  std::vector<ComplexApprox> t(f.entries.begin() + n, f.entries.end());
  return CauchySpec{NodeSet(std::move(s), f.lambda), NodeSet(std::move(t), f.lambda)};
}

void write_result(const std::string& path, const std::string& kind,
                  const std::vector<ComplexApprox>& entries, long ell,
                  const PrecisionPlan& plan) {
  InstanceFile f;
  f.kind = kind;
  f.n = static_cast<long>(entries.size());
  f.lambda = ell;
  f.entries = entries;
  f.info.emplace_back("ell", std::to_string(ell));
  f.info.emplace_back("plan", std::string("formula=") + formula_name(plan.formula) +
                                  " lambda=" + std::to_string(plan.lambda) +
                                  " working_p=" + std::to_string(plan.working_p));
  write_instance(path, f);
  std::fprintf(stderr, "wrote %s (%s, %ld entries); plan %s lambda=%ld working_p=%ld\n",
               path.c_str(), kind.c_str(), f.n, formula_name(plan.formula), plan.lambda,
               plan.working_p);
}

int run_compute(const ComputeArgs& a) {
  const long ell = a.ell;
  FftOptions fopt;
  fopt.strict = a.strict;
  ToeplitzOptions topt;
  topt.strict = a.strict;
  PlanParams pp;
  pp.ell = ell;

  if (a.task == "mul") {
    ApproxPoly A = poly_of(expect_kind(a.inputs.at(0), "poly"));
    ApproxPoly B = poly_of(expect_kind(a.inputs.at(1), "poly"));
    pp.tau1 = A.tau;
    pp.tau2 = B.tau;
    pp.d = std::max({A.degree, B.degree, 1L});
    pp.k = lgc(std::max(A.degree + B.degree + 1, 2L));
    ApproxPoly C = poly_mul(A, B, ell, fopt);
    write_result(a.out, "poly", C.coeffs, ell,
                 plan_precision(a.strict ? Formula::MulStrict : Formula::Mul, pp));
    return 0;
  }
  if (a.task == "divide") {
    ApproxPoly s = poly_of(expect_kind(a.inputs.at(0), "poly"));
    ApproxPoly t = poly_of(expect_kind(a.inputs.at(1), "poly"));
    DivisionResult dr = poly_divide(s, t, ell, topt);
    write_result(a.out, "poly", dr.quotient.coeffs, ell, dr.plan);
    std::string rpath = a.rem_out.empty() ? a.out + ".rem" : a.rem_out;
    write_result(rpath, "poly", dr.remainder.coeffs, ell, dr.plan);
    return 0;
  }
  if (a.task == "tri-inverse") {
    InstanceFile f = expect_kind(a.inputs.at(0), "vector");
    TriToeplitz T{ApproxPoly(f.entries, f.lambda), true};
    std::vector<ComplexApprox> sub(f.entries.begin() + (f.entries.empty() ? 0 : 1),
                                   f.entries.end());
    pp.tau = VecApprox(sub).tau();
    pp.n = std::max<long>(1, f.n - 1);
    TriToeplitz inv = tri_toeplitz_inverse(T, ell, topt);
    write_result(a.out, "vector", inv.col.coeffs, ell, plan_precision(Formula::TriInverse, pp));
    return 0;
  }
  if (a.task == "toeplitz" || a.task == "hankel") {
    VecApprox v = vec_of(expect_kind(a.inputs.at(1), "vector"));
    std::vector<ComplexApprox> out;
    long d;
    if (a.task == "toeplitz") {
      ToeplitzMatrix T = toeplitz_of(expect_kind(a.inputs.at(0), "toeplitz"));
      out = toeplitz_vec_mul(T, v, ell, topt);
      d = std::max(2 * T.n() - 2, 1L);
    } else {
      HankelMatrix H = hankel_of(expect_kind(a.inputs.at(0), "hankel"));
      out = hankel_vec_mul(H, v, ell, topt);
      d = std::max(2 * H.n() - 2, 1L);
    }
    pp.d = d;
    pp.k = lgc(std::max(d + static_cast<long>(v.size()), 2L));
    write_result(a.out, "vector", out, ell,
                 plan_precision(a.strict ? Formula::MulStrict : Formula::Mul, pp));
    return 0;
  }
  if (a.task == "multipoint" || a.task == "vandermonde") {
    ApproxPoly p = a.task == "multipoint" ? poly_of(expect_kind(a.inputs.at(0), "poly"))
                                          : ApproxPoly(expect_kind(a.inputs.at(0), "vector").entries,
                                                       read_instance(a.inputs.at(0)).lambda);
    NodeSet ns(expect_kind(a.inputs.at(1), "nodeset").entries,
               read_instance(a.inputs.at(1)).lambda);
    pp.tau1 = p.tau;
    pp.rho = ns.rho();
    pp.n = ns.size();
    auto vals = multipoint_eval(p, ns, ell);
    write_result(a.out, "vector", vals, ell, plan_precision(Formula::FanOut, pp));
    return 0;
  }
  if (a.task == "interp") {
    InstanceFile nf = expect_kind(a.inputs.at(0), "nodeset");
    InstanceFile yf = expect_kind(a.inputs.at(1), "vector");
    NodeSet ns(nf.entries, nf.lambda);
    pp.tau1 = ns.tau();
    pp.n = ns.size();
    pp.lg_prod_delta = ns.size() >= 2 ? ns.separations().lg_prod : 0.0;
    InterpProblem prob(std::move(ns), VecApprox(yf.entries, yf.lambda));
    pp.tau2 = prob.tau2;
    ApproxPoly A = lagrange_interpolate(prob, ell);
    write_result(a.out, "poly", A.coeffs, ell, plan_precision(Formula::Interpolate, pp));
    return 0;
  }
  if (a.task == "trummer") {
    InstanceFile nf = expect_kind(a.inputs.at(0), "nodeset");
    InstanceFile vf = expect_kind(a.inputs.at(1), "vector");
    NodeSet ns(nf.entries, nf.lambda);
    VecApprox v(vf.entries, vf.lambda);
    pp.tau1 = ns.tau();
    pp.tau3 = v.tau();
    pp.n = ns.size();
    pp.lg_prod_delta_s = ns.size() >= 2 ? ns.separations().lg_prod : 0.0;
    auto out = trummer(ns, v, ell);
    write_result(a.out, "vector", out, ell, plan_precision(Formula::Trummer, pp));
    return 0;
  }
  if (a.task == "cauchy" || a.task == "cauchy-solve") {
    CauchySpec spec = cauchy_of(expect_kind(a.inputs.at(0), "cauchy"));
    VecApprox v = vec_of(expect_kind(a.inputs.at(1), "vector"));
    pp.tau1 = spec.s.tau();
    pp.tau2 = spec.t.tau();
    pp.tau3 = v.tau();
    pp.n = spec.n();
    pp.lg_delta_st = spec.lg_delta_st;
    pp.lg_prod_delta_s = spec.n() >= 2 ? spec.s.separations().lg_prod : 0.0;
    pp.lg_prod_delta_t = spec.n() >= 2 ? spec.t.separations().lg_prod : 0.0;
    if (a.task == "cauchy") {
      auto out = cauchy_vec_mul(spec, v, ell);
      write_result(a.out, "vector", out, ell, plan_precision(Formula::CauchyMul, pp));
    } else {
      auto out = cauchy_solve(spec, v, ell);
      write_result(a.out, "vector", out, ell, plan_precision(Formula::CauchySolve, pp));
    }
    return 0;
  }
  throw ParseError("unknown compute task '" + a.task + "'");
}

int run_verify(const std::string& task, long n, long tau, long ell, long trials,
               std::uint64_t seed, bool strict) {
  checks::reset();
  auto res = drivers::verify_task(task, n, tau, ell, trials, seed, strict);
  if (res.trials == 0) {
    std::printf("verify %s: 0 trials (vacuous pass)\n", task.c_str());
    return 0;
  }
  std::printf(
      "verify %s: trials=%ld seed=%" PRIu64
      " max_err=2^%.1f worst_margin=2^%.1f (tol 2^-ell per trial) bound_violations=%" PRIu64
      " -> %s\n",
      task.c_str(), res.trials, seed, res.max_lg_err, res.worst_margin, res.bound_violations,
      res.pass ? "PASS" : "FAIL");
  if (!res.note.empty()) std::printf("  note: %s\n", res.note.c_str());
  return res.pass ? 0 : 4;
}

int run_bench(const std::string& task, const std::vector<long>& ns, long ell, long tau,
              std::uint64_t seed) {
  long prec = 0;
  auto rows = drivers::bench_task(task, ns, ell, tau, seed, &prec);
  std::printf("# bench task=%s ell=%ld tau=%ld seed=%" PRIu64 " rng=mt19937_64 prec=%ld\n",
              task.c_str(), ell, tau, seed, prec);
  std::printf("%8s %14s %14s %10s %18s\n", "n", "fast_ms", "naive_ms", "ratio", "digest");
  for (const auto& r : rows)
    std::printf("%8ld %14.3f %14.3f %10.2f %018" PRIx64 "\n", r.n, r.fast_ms, r.naive_ms,
                r.naive_ms > 0 ? r.naive_ms / std::max(r.fast_ms, 1e-9) : 0.0, r.digest);
  for (const auto& r : rows)
    std::printf("#data task=%s n=%ld fast_ms=%.3f naive_ms=%.3f digest=%018" PRIx64 " prec=%ld\n",
                task.c_str(), r.n, r.fast_ms, r.naive_ms, r.digest, prec);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"certified-precision structured matrix computations"};
  app.require_subcommand(1);

  ComputeArgs ca;
  auto* compute = app.add_subcommand("compute", "run a task over instance files");
  compute->add_option("task", ca.task, "mul|divide|tri-inverse|toeplitz|hankel|vandermonde|multipoint|interp|trummer|cauchy|cauchy-solve")->required();
  compute->add_option("inputs", ca.inputs, "input instance files")->required();
  compute->add_option("--ell", ca.ell, "output accuracy (2^-ell)");
  compute->add_option("--out", ca.out, "output file");
  compute->add_option("--rem-out", ca.rem_out, "remainder output file (divide)");
  compute->add_flag("--strict", ca.strict, "exact certificate formulas instead of simplified ones");

  std::string vtask;
  long vn = 16, vtau = 4, vell = 0, vtrials = 50;
  std::uint64_t vseed = 1;
  bool vstrict = false;
  auto* verify = app.add_subcommand("verify", "oracle-equivalence trials");
  verify->add_option("task", vtask)->required();
  verify->add_option("--n", vn, "max instance size");
  verify->add_option("--tau", vtau, "max magnitude exponent");
  verify->add_option("--ell", vell, "accuracy (0 cycles 32/64/96)");
  verify->add_option("--trials", vtrials);
  verify->add_option("--seed", vseed);
  verify->add_flag("--strict", vstrict);

  std::string btask;
  std::vector<long> bns;
  long bell = 32, btau = 4;
  std::uint64_t bseed = 1;
  auto* bench = app.add_subcommand("bench", "fast vs naive timing table");
  bench->add_option("task", btask)->required();
  bench->add_option("--n-list", bns, "sizes")->delimiter(',');
  bench->add_option("--ell", bell);
  bench->add_option("--tau", btau);
  bench->add_option("--seed", bseed);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*compute) return run_compute(ca);
    if (*verify) return run_verify(vtask, vn, vtau, vell, vtrials, vseed, vstrict);
    if (*bench) return run_bench(btask, bns, bell, btau, bseed);
  } catch (const InsufficientInputAccuracy& e) {
    std::fprintf(stderr, "error: %s\n(required input accuracy: lambda >= %ld)\n", e.what(),
                 e.required_lambda);
    return 2;
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return static_cast<int>(e.code());
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
