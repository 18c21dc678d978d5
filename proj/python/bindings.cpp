#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "yamabe/bubble.hpp"
#include "yamabe/classify.hpp"
#include "yamabe/constants.hpp"
#include "yamabe/curvature.hpp"
#include "yamabe/energy.hpp"
#include "yamabe/oracle.hpp"
#include "yamabe/saddle.hpp"
#include "yamabe/verify.hpp"

namespace py = pybind11;
using namespace yamabe;

namespace {

Mat mat_from_rows(const std::vector<std::vector<double>>& rows) {
  const int n = static_cast<int>(rows.size());
  Mat A(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n)
      throw std::invalid_argument("matrix rows must form a square matrix");
    for (int j = 0; j < n; ++j) A(i, j) = rows[i][j];
  }
  return A;
}

std::vector<std::vector<double>> mat_to_rows(const Mat& A) {
  std::vector<std::vector<double>> rows(A.n, std::vector<double>(A.n));
  for (int i = 0; i < A.n; ++i)
    for (int j = 0; j < A.n; ++j) rows[i][j] = A(i, j);
  return rows;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "reduced-energy toolkit for sign-changing Yamabe blow-up analysis";

  // constants
  m.def("sphere_volume", &sphere_volume, py::arg("n"));
  m.def("sobolev_mass", &sobolev_mass, py::arg("n"));
  m.def("lambda_constant", &lambda_constant, py::arg("n"));
  m.def("pohozaev_constant", &pohozaev_constant, py::arg("n"));
  m.def("conformal_coefficient", &conformal_coefficient, py::arg("n"));
  m.def(
      "radial_integral",
      [](int p2, int q2) { return radial_integral(Half(p2), Half(q2)); },
      py::arg("twice_p"), py::arg("twice_q"),
      "I_p^q for half-integers given as twice their values");
  m.def(
      "radial_integral_exact_str",
      [](int p2, int q2) { return radial_integral_exact(Half(p2), Half(q2)).to_string(); },
      py::arg("twice_p"), py::arg("twice_q"));
  m.def("radial_integral_numeric", &radial_integral_numeric, py::arg("p"), py::arg("q"));
  m.def("constants_bundle", [](int n) {
    const ConstantsBundle b = constants_bundle(n);
    py::dict d;
    d["n"] = b.n;
    d["omega"] = b.omega;
    d["kn_pow"] = b.kn_pow;
    d["lambda_n"] = b.lambda_n;
    d["cn"] = b.cn;
    d["an"] = b.an ? py::cast(*b.an) : py::none();
    d["omega_exact"] = b.omega_exact.to_string();
    d["kn_pow_exact"] = b.kn_pow_exact.to_string();
    return d;
  });

  // weyl algebra
  py::class_<WeylForm>(m, "WeylForm")
      .def_property_readonly("n", [](const WeylForm& w) { return w.n; })
      .def("norm_sq", &WeylForm::norm_sq)
      .def("entry", [](const WeylForm& w, int i, int j, int k, int l) {
        return w.w(i, j, k, l);
      });
  m.def("diagonal_weyl",
        [](const std::vector<std::vector<double>>& rows) {
          return diagonal_weyl(mat_from_rows(rows));
        },
        py::arg("A"));
  m.def("canonical_diagonal_matrix",
        [](int n) { return mat_to_rows(canonical_diagonal_matrix(n)); }, py::arg("n"));
  m.def("random_weyl", &random_weyl, py::arg("n"), py::arg("seed"));
  m.def("validate_weyl", [](const WeylForm& W) {
    const WeylValidation v = validate_weyl(W);
    py::dict d;
    d["antisym_first"] = v.antisym_first;
    d["antisym_second"] = v.antisym_second;
    d["pair_sym"] = v.pair_sym;
    d["bianchi"] = v.bianchi;
    d["trace"] = v.trace;
    d["norm_sq"] = v.norm_sq;
    d["accepted"] = v.accepted;
    d["trivial"] = v.trivial;
    return d;
  });
  m.def("contraction", [](const WeylForm& W) { return mat_to_rows(contraction(W).T); });
  m.def("h_eval",
        [](const WeylForm& W, const Vec& x) { return mat_to_rows(h_eval(W, x)); },
        py::arg("weyl"), py::arg("x"));
  m.def("h_norm_sq", &h_norm_sq, py::arg("weyl"), py::arg("x"));
  m.def(
      "coercivity_check",
      [](const WeylForm& W, int samples, int starts, std::uint64_t seed) {
        const CoercivityResult r = coercivity_check(W, samples, starts, seed);
        py::dict d;
        d["minimum"] = r.minimum;
        d["sweep_minimum"] = r.sweep_minimum;
        d["minimizer"] = r.minimizer;
        return d;
      },
      py::arg("weyl"), py::arg("samples") = 100000, py::arg("starts") = 64,
      py::arg("seed") = 1234);

  // bubble and corrector
  py::class_<BubbleParams>(m, "BubbleParams")
      .def(py::init<int, double, Vec, double>(), py::arg("n"), py::arg("t"), py::arg("z"),
           py::arg("box_bound") = 10.0)
      .def_readonly("n", &BubbleParams::n)
      .def_readonly("t", &BubbleParams::t)
      .def_readonly("z", &BubbleParams::z);
  m.def("bubble_eval", &bubble_eval, py::arg("params"), py::arg("x"));
  m.def("bubble_gradient", &bubble_gradient, py::arg("params"), py::arg("x"));
  m.def("kernel_z", &kernel_z, py::arg("j"), py::arg("params"), py::arg("x"));
  m.def("corrector_eval", &corrector_eval, py::arg("weyl"), py::arg("a"), py::arg("b"),
        py::arg("x"));
  m.def("corrector_residual", &corrector_residual, py::arg("weyl"), py::arg("a"),
        py::arg("b"), py::arg("x"));
  m.def("corrector_pairing", &corrector_pairing, py::arg("weyl"), py::arg("a"),
        py::arg("b"), py::arg("c"), py::arg("d"));
  m.def(
      "corrector_pairing_oracle",
      [](const WeylForm& W, int a, int b, int c, int d, std::uint64_t budget,
         std::uint64_t seed) {
        const PairingOracle r = corrector_pairing_oracle(W, a, b, c, d, budget, seed);
        py::dict out;
        out["value"] = r.total.value;
        out["standard_error"] = r.total.standard_error;
        out["samples_used"] = r.total.samples_used;
        return out;
      },
      py::arg("weyl"), py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"),
      py::arg("budget") = 300000, py::arg("seed") = 1);

  // reduced energy and saddle
  py::class_<ModelData>(m, "ModelData")
      .def(py::init<WeylForm, double>(), py::arg("weyl"), py::arg("u0x0") = 1.0)
      .def_readonly("n", &ModelData::n)
      .def_readonly("u0x0", &ModelData::u0x0)
      .def_readonly("trace_T", &ModelData::trace_T);
  m.def("profile_t", &profile_t, py::arg("model"), py::arg("t"));
  m.def("quartic_z", &quartic_z, py::arg("model"), py::arg("e"));
  m.def("energy_coefficients", [](const ModelData& md) {
    const EnergyCoefficients c = energy_coefficients(md);
    py::dict d;
    d["c4"] = c.c4;
    d["clambda"] = c.clambda;
    d["fourth_order"] = c.fourth_order;
    d["f1_quartic"] = c.f1_quartic;
    d["f3_quartic"] = c.f3_quartic;
    d["hess2_scale"] = c.hess2_scale;
    return d;
  });
  m.def(
      "f_assembled",
      [](const ModelData& md, double t, const Vec& z, std::uint64_t budget,
         std::uint64_t seed) {
        const AssembledEnergy a = f_assembled(md, t, z, budget, seed);
        py::dict d;
        d["value"] = a.value;
        d["standard_error"] = a.standard_error;
        d["remainder_flagged"] = a.remainder_flagged;
        return d;
      },
      py::arg("model"), py::arg("t"), py::arg("z"), py::arg("budget") = 100000,
      py::arg("seed") = 1);
  m.def("minimize_profile", [](const ModelData& md) {
    const ProfileMinimum p = minimize_profile(md);
    py::dict d;
    d["t0"] = p.t0;
    d["f_at_min"] = p.f_at_min;
    d["hess_t"] = p.hess_t;
    return d;
  });
  py::class_<SaddleCertificate>(m, "SaddleCertificate")
      .def_readonly("t0", &SaddleCertificate::t0)
      .def_readonly("f_at_min", &SaddleCertificate::f_at_min)
      .def_readonly("hess_t", &SaddleCertificate::hess_t)
      .def_readonly("eta", &SaddleCertificate::eta)
      .def_readonly("eps_box", &SaddleCertificate::eps_box)
      .def_readonly("edge_min", &SaddleCertificate::edge_min)
      .def_readonly("rim_max", &SaddleCertificate::rim_max)
      .def_readonly("margin", &SaddleCertificate::margin)
      .def_readonly("pass_", &SaddleCertificate::pass)
      .def_readonly("violated", &SaddleCertificate::violated);
  m.def("certify_saddle_auto", &certify_saddle_auto, py::arg("model"),
        py::arg("seed") = 2024, py::arg("oracle_budget") = 60000);
  m.def(
      "locate_critical_point",
      [](const ModelData& md, const SaddleCertificate& cert,
         const std::function<double(double, const Vec&)>& pert, double delta,
         std::uint64_t seed) {
        const CriticalPoint cp = locate_critical_point(
            md, cert, pert ? Perturbation(pert) : Perturbation(nullptr), delta, seed);
        py::dict d;
        d["t"] = cp.t;
        d["z"] = cp.z;
        d["residual"] = cp.residual;
        d["value"] = cp.value;
        return d;
      },
      py::arg("model"), py::arg("certificate"), py::arg("perturbation") = nullptr,
      py::arg("delta") = 0.0, py::arg("seed") = 99);

  // curvature
  py::class_<MetricField>(m, "MetricField")
      .def(py::init<WeylForm, double, double, Vec>(), py::arg("weyl"), py::arg("eps"),
           py::arg("cutoff_radius") = 1.0, py::arg("center") = Vec{})
      .def_readonly("n", &MetricField::n)
      .def_readonly("eps", &MetricField::eps);
  m.def("metric_eval",
        [](const MetricField& mf, const Vec& x) { return mat_to_rows(metric_eval(mf, x)); });
  m.def("metric_det", [](const MetricField& mf, const Vec& x) {
    return mat_det(metric_eval(mf, x));
  });
  m.def("scalar_curvature", [](const MetricField& mf, const Vec& x, double step) {
    return curvature(mf, x, step).scalar;
  }, py::arg("metric"), py::arg("x"), py::arg("step") = 1e-3);
  m.def("weyl_linearization", &weyl_linearization, py::arg("metric"),
        py::arg("step") = 1e-3);
  m.def("inverse_expansion_remainder", &inverse_expansion_remainder, py::arg("metric"),
        py::arg("x"));
  m.def("christoffel_expansion_remainder", &christoffel_expansion_remainder,
        py::arg("metric"), py::arg("x"), py::arg("step") = 1e-3);
  m.def("scalar_expansion_remainder", &scalar_expansion_remainder, py::arg("metric"),
        py::arg("x"), py::arg("step") = 1e-3);

  // regimes
  m.def(
      "classify",
      [](int n, bool lcf, bool weyl_nonzero, const std::string& u0_vs,
         const std::string& pert) {
        GeometrySpec spec;
        spec.n = n;
        spec.lcf = lcf;
        spec.weyl_everywhere_nonzero = weyl_nonzero;
        spec.u0_vs_threshold = threshold_relation_from_string(u0_vs);
        spec.perturbation_sign = perturbation_sign_from_string(pert);
        const ClassifiedRegime r = classify(spec);
        py::dict d;
        d["verdict"] = to_string(r.verdict);
        d["rule"] = r.rule;
        return d;
      },
      py::arg("n"), py::arg("lcf") = false, py::arg("weyl_nonzero") = false,
      py::arg("u0_vs_threshold") = "unknown", py::arg("perturbation") = "none");
  m.def(
      "balance",
      [](int n, double u0, double weyl_norm_sq, double mu) {
        return balance({n, u0, weyl_norm_sq, mu});
      },
      py::arg("n"), py::arg("u0"), py::arg("weyl_norm_sq"), py::arg("mu"));
  m.def("minimal_energy_gap", &minimal_energy_gap, py::arg("n"), py::arg("yamabe_m"));

  // oracle
  m.def(
      "integrate_rn",
      [](int n, double decay, const std::function<double(const Vec&)>& f,
         std::uint64_t budget, std::uint64_t seed) {
        const OracleResult r = integrate_rn(Integrand(n, decay, f), budget, seed);
        py::dict d;
        d["value"] = r.value;
        d["standard_error"] = r.standard_error;
        d["samples_used"] = r.samples_used;
        d["method"] = r.method;
        return d;
      },
      py::arg("n"), py::arg("decay"), py::arg("f"), py::arg("budget") = 100000,
      py::arg("seed") = 1);
  m.def("integrate_sphere_poly", &integrate_sphere_poly, py::arg("alpha"));

  // verification battery
  m.def(
      "verify_all",
      [](int n, std::uint64_t seed, std::uint64_t budget) {
        VerifyConfig config;
        config.n = n;
        config.seed = seed;
        config.mc_budget = budget;
        const VerifyReport r = run_verify_all(config);
        py::list checks;
        for (const auto& c : r.checks) {
          py::dict d;
          d["name"] = c.name;
          d["pass"] = c.pass;
          d["detail"] = c.detail;
          d["seconds"] = c.seconds;
          checks.append(d);
        }
        py::dict out;
        out["all_pass"] = r.all_pass;
        out["checks"] = checks;
        return out;
      },
      py::arg("n") = 11, py::arg("seed") = 12345, py::arg("budget") = 1000000);
}
