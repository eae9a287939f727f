// pybind11 bindings for the rigidbody core. Vec3/Mat3 accept plain python
// sequences (lists/tuples) wherever they appear as arguments.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "rigidbody/charts.hpp"
#include "rigidbody/dynamics.hpp"
#include "rigidbody/identities.hpp"
#include "rigidbody/integrate.hpp"
#include "rigidbody/lin3.hpp"
#include "rigidbody/quat.hpp"
#include "rigidbody/sim_io.hpp"

namespace py = pybind11;
using namespace rigidbody;

namespace {

Vec3 vec3_from_seq(const std::vector<double>& v) {
  if (v.size() != 3) throw py::value_error("expected a sequence of 3 numbers");
  return {v[0], v[1], v[2]};
}

Mat3 mat3_from_rows(const std::vector<std::vector<double>>& rows) {
  if (rows.size() != 3) throw py::value_error("expected 3 rows of 3 numbers");
  Mat3 m;
  for (int i = 0; i < 3; ++i) {
    if (rows[static_cast<std::size_t>(i)].size() != 3)
      throw py::value_error("expected 3 rows of 3 numbers");
    for (int j = 0; j < 3; ++j) m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  return m;
}

std::vector<double> vec3_list(const Vec3& v) { return {v.x, v.y, v.z}; }

std::vector<std::vector<double>> mat3_list(const Mat3& m) {
  return {{m(0, 0), m(0, 1), m(0, 2)}, {m(1, 0), m(1, 1), m(1, 2)}, {m(2, 0), m(2, 1), m(2, 2)}};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Rigid-body attitude dynamics in generalized coordinates";
  m.attr("__version__") = kToolVersion;
  m.attr("GIMBAL_TOL") = kGimbalTol;
  m.attr("SINGULAR_TOL") = kSingularTol;

  // Exceptions. Derived classes are registered after their bases so their
  // translators run first.
  auto err = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<SingularMatrix>(m, "SingularMatrix", err);
  auto domain = py::register_exception<DomainError>(m, "DomainError", err);
  auto gimbal = py::register_exception<GimbalLock>(m, "GimbalLock", err);
  py::register_exception<InvalidInertia>(m, "InvalidInertia", err);
  py::register_exception<GridMismatch>(m, "GridMismatch", err);
  py::register_exception<NonFiniteDerivative>(m, "NonFiniteDerivative", err);
  py::register_exception<ConfigError>(m, "ConfigError", err);
  py::register_exception<AmbiguousAttitude>(m, "AmbiguousAttitude", gimbal);
  (void)domain;

  py::class_<Vec3>(m, "Vec3")
      .def(py::init<>())
      .def(py::init<double, double, double>())
      .def(py::init(&vec3_from_seq))
      .def_readwrite("x", &Vec3::x)
      .def_readwrite("y", &Vec3::y)
      .def_readwrite("z", &Vec3::z)
      .def("__getitem__", [](const Vec3& v, int i) {
        if (i < 0 || i > 2) throw py::index_error();
        return v[i];
      })
      .def("__len__", [](const Vec3&) { return 3; })
      .def("tolist", &vec3_list)
      .def("__repr__", [](const Vec3& v) {
        std::ostringstream os;
        os << "Vec3(" << v.x << ", " << v.y << ", " << v.z << ")";
        return os.str();
      });
  py::implicitly_convertible<py::sequence, Vec3>();

  py::class_<Mat3>(m, "Mat3")
      .def(py::init<>())
      .def(py::init(&mat3_from_rows))
      .def_static("identity", &Mat3::identity)
      .def_static("diag", &Mat3::diag)
      .def("__getitem__",
           [](const Mat3& a, std::pair<int, int> ij) {
             if (ij.first < 0 || ij.first > 2 || ij.second < 0 || ij.second > 2)
               throw py::index_error();
             return a(ij.first, ij.second);
           })
      .def("tolist", &mat3_list)
      .def("__repr__", [](const Mat3& a) {
        std::ostringstream os;
        os << "Mat3([";
        for (int i = 0; i < 3; ++i) {
          os << (i ? ", [" : "[");
          for (int j = 0; j < 3; ++j) os << (j ? ", " : "") << a(i, j);
          os << "]";
        }
        os << "])";
        return os.str();
      });
  py::implicitly_convertible<py::sequence, Mat3>();

  py::class_<Quat>(m, "Quat")
      .def(py::init<>())
      .def(py::init<double, double, double, double>())
      .def_static("from_axis_angle", &Quat::from_axis_angle)
      .def_readwrite("w", &Quat::w)
      .def_readwrite("x", &Quat::x)
      .def_readwrite("y", &Quat::y)
      .def_readwrite("z", &Quat::z)
      .def("vec", &Quat::vec)
      .def("__repr__", [](const Quat& q) {
        std::ostringstream os;
        os << "Quat(" << q.w << ", " << q.x << ", " << q.y << ", " << q.z << ")";
        return os.str();
      });

  py::enum_<ChartKind>(m, "ChartKind")
      .value("Euler321", ChartKind::Euler321)
      .value("Euler313", ChartKind::Euler313)
      .value("QuatReduced", ChartKind::QuatReduced);

  py::enum_<IdentityId>(m, "IdentityId")
      .value("Prop1a", IdentityId::Prop1a)
      .value("Prop1b", IdentityId::Prop1b)
      .value("Prop1c", IdentityId::Prop1c)
      .value("IdentShort", IdentityId::IdentShort)
      .value("Coriolis", IdentityId::Coriolis)
      .value("QuatMS", IdentityId::QuatMS);

  py::class_<GenCoords>(m, "GenCoords")
      .def(py::init<>())
      .def(py::init([](ChartKind chart, const Vec3& q) { return GenCoords{chart, q}; }),
           py::arg("chart"), py::arg("q"))
      .def_readwrite("chart", &GenCoords::chart)
      .def_readwrite("q", &GenCoords::q);

  py::class_<KinematicsEval>(m, "KinematicsEval")
      .def_readonly("S", &KinematicsEval::S)
      .def_property_readonly("dS",
                             [](const KinematicsEval& e) {
                               return std::vector<Mat3>{e.dS[0], e.dS[1], e.dS[2]};
                             })
      .def_readonly("detS", &KinematicsEval::detS);

  // lin3
  m.def("skew", &skew);
  m.def("cross", &cross);
  m.def("dot", static_cast<double (*)(const Vec3&, const Vec3&)>(&dot));
  m.def("det3", &det3);
  m.def("transpose3", &transpose3);
  m.def("matmul3", &matmul3);
  m.def("matvec3", &matvec3);
  m.def("solve3", &solve3);
  m.def("lemma1_residual", &lemma1_residual);
  m.def("cofactor_columns", &cofactor_columns);

  // charts
  m.def("s_matrix", &s_matrix);
  m.def("s_partials",
        [](const GenCoords& c) {
          const auto d = s_partials(c);
          return std::vector<Mat3>{d[0], d[1], d[2]};
        });
  m.def("s_det", &s_det);
  m.def("kinematics_eval", &kinematics_eval);
  m.def("omega_from", &omega_from);
  m.def("qdot_from_omega", &qdot_from_omega);
  m.def("rotation_matrix", &rotation_matrix);
  m.def("quat_lift", &quat_lift);
  m.def("attitude_of", &attitude_of);
  m.def("coords_from_rotation", &coords_from_rotation);
  m.def("coords_from_attitude", &coords_from_attitude);
  m.def("chart_convert", &chart_convert);
  m.def("to_rotation", &to_rotation);
  m.def("from_rotation", &from_rotation);

  // identities
  m.def("residual_prop1a",
        static_cast<Mat3 (*)(const GenCoords&, const Vec3&)>(&residual_prop1a));
  m.def("residual_prop1b",
        static_cast<Mat3 (*)(const GenCoords&, const Vec3&)>(&residual_prop1b));
  m.def("residual_prop1c",
        [](const GenCoords& c) {
          const auto r = residual_prop1c(c);
          return std::vector<Vec3>{r[0], r[1], r[2]};
        });
  m.def("residual_identshort",
        static_cast<Mat3 (*)(const GenCoords&)>(&residual_identshort));
  m.def("residual_coriolis",
        static_cast<Vec3 (*)(const GenCoords&, const Vec3&, const Mat3&)>(&residual_coriolis));
  m.def("quat_m_matrix", &quat_m_matrix);
  m.def("finite_diff_partials", [](const GenCoords& c, double h) {
    const auto d = finite_diff_partials(c, h);
    return std::vector<Mat3>{d[0], d[1], d[2]};
  });

  py::class_<IdentityReport>(m, "IdentityReport")
      .def_readonly("identity", &IdentityReport::identity)
      .def_readonly("chart", &IdentityReport::chart)
      .def_readonly("samples", &IdentityReport::samples)
      .def_readonly("max_residual", &IdentityReport::max_residual)
      .def_readonly("tolerance", &IdentityReport::tolerance)
      .def_readonly("passed", &IdentityReport::passed)
      .def_readonly("worst_case_q", &IdentityReport::worst_case_q)
      .def_readonly("worst_case_qdot", &IdentityReport::worst_case_qdot)
      .def("__repr__", [](const IdentityReport& r) {
        std::ostringstream os;
        os << "IdentityReport(" << to_string(r.identity) << ", " << to_string(r.chart)
           << ", max_residual=" << r.max_residual << ", passed=" << (r.passed ? "True" : "False")
           << ")";
        return os.str();
      });

  m.def("run_identity_suite", &run_identity_suite, py::arg("charts"), py::arg("samples"),
        py::arg("seed") = 42, py::arg("tol") = 1e-9);

  // dynamics
  py::class_<TorqueZero>(m, "TorqueZero").def(py::init<>());
  py::class_<TorqueConstant>(m, "TorqueConstant")
      .def(py::init([](const Vec3& v) { return TorqueConstant{v}; }), py::arg("value"))
      .def_readwrite("value", &TorqueConstant::value);
  py::class_<TorquePiecewiseLinear>(m, "TorquePiecewiseLinear")
      .def(py::init([](const std::vector<std::pair<double, Vec3>>& pts) {
             return TorquePiecewiseLinear{pts};
           }),
           py::arg("points"));
  py::class_<TorqueSpinUp>(m, "TorqueSpinUp")
      .def(py::init([](const Vec3& axis, double magnitude, double t_on, double t_off) {
             return TorqueSpinUp{axis, magnitude, t_on, t_off};
           }),
           py::arg("axis"), py::arg("magnitude"), py::arg("t_on"), py::arg("t_off"));

  py::class_<RigidBodyParams>(m, "RigidBodyParams")
      .def(py::init([](const Mat3& J, const TorqueProfile& torque) {
             return RigidBodyParams{J, torque};
           }),
           py::arg("J"), py::arg("torque") = TorqueProfile{TorqueZero{}})
      .def_readwrite("J", &RigidBodyParams::J);

  m.def("torque_at", &torque_at);
  m.def("validate_inertia", &validate_inertia);
  m.def("inertia_triangle_ok", &inertia_triangle_ok);
  m.def("euler_rhs", &euler_rhs);
  m.def("kinetic_energy", &kinetic_energy);
  m.def("generalized_force", &generalized_force);
  m.def("generalized_accel",
        static_cast<Vec3 (*)(const GenCoords&, const Vec3&, const RigidBodyParams&, double)>(
            &generalized_accel),
        py::arg("coords"), py::arg("qdot"), py::arg("params"), py::arg("t") = 0.0);
  m.def(
      "generalized_accel_at",
      [](const GenCoords& c, const Vec3& qdot, const Mat3& J, const Vec3& tau) {
        return generalized_accel(kinematics_eval(c), qdot, J, tau);
      },
      py::arg("coords"), py::arg("qdot"), py::arg("J"), py::arg("tau"));

  py::class_<AngularMomentum>(m, "AngularMomentum")
      .def_readonly("body", &AngularMomentum::body)
      .def_readonly("inertial", &AngularMomentum::inertial);
  m.def("angular_momentum", &angular_momentum);

  // integrate
  py::class_<SimState>(m, "SimState")
      .def(py::init([](double t, const GenCoords& c, const Vec3& qdot) {
             return SimState{t, c, qdot};
           }),
           py::arg("t"), py::arg("coords"), py::arg("qdot"))
      .def_readwrite("t", &SimState::t)
      .def_readwrite("coords", &SimState::coords)
      .def_readwrite("qdot", &SimState::qdot);

  py::class_<BodyState>(m, "BodyState")
      .def(py::init([](double t, const Quat& attitude, const Vec3& omega) {
             return BodyState{t, attitude, omega};
           }),
           py::arg("t"), py::arg("attitude"), py::arg("omega"))
      .def_readwrite("t", &BodyState::t)
      .def_readwrite("attitude", &BodyState::attitude)
      .def_readwrite("omega", &BodyState::omega);

  py::class_<TrajectorySample>(m, "TrajectorySample")
      .def_readonly("t", &TrajectorySample::t)
      .def_readonly("q", &TrajectorySample::q)
      .def_readonly("qdot", &TrajectorySample::qdot)
      .def_readonly("omega", &TrajectorySample::omega)
      .def_readonly("R", &TrajectorySample::R)
      .def_readonly("energy", &TrajectorySample::energy)
      .def_readonly("h_inertial", &TrajectorySample::h_inertial);

  py::class_<SimAbort>(m, "SimAbort")
      .def_readonly("t", &SimAbort::t)
      .def_readonly("reason", &SimAbort::reason);

  py::class_<SimResult>(m, "SimResult")
      .def_readonly("samples", &SimResult::samples)
      .def_readonly("abort", &SimResult::abort);

  m.def("simulate_generalized", &simulate_generalized, py::arg("initial"), py::arg("params"),
        py::arg("dt"), py::arg("t_final"));
  m.def("simulate_body", &simulate_body, py::arg("initial"), py::arg("params"), py::arg("dt"),
        py::arg("t_final"));

  py::class_<CompareReport>(m, "CompareReport")
      .def_readonly("max_rotation_angle_rad", &CompareReport::max_rotation_angle_rad)
      .def_readonly("t_at_max_angle", &CompareReport::t_at_max_angle)
      .def_readonly("max_omega_diff", &CompareReport::max_omega_diff)
      .def_readonly("t_at_max_omega", &CompareReport::t_at_max_omega)
      .def_readonly("samples", &CompareReport::samples);

  m.def("compare_trajectories", &compare_trajectories);
  m.def("geodesic_angle", &geodesic_angle);
}
