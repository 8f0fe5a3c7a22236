#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "heckedn/cyclotomic.hpp"
#include "heckedn/dn.hpp"
#include "heckedn/hecke_algebra.hpp"
#include "heckedn/schur.hpp"
#include "heckedn/typea.hpp"

namespace py = pybind11;
using namespace heckedn;

namespace {

Partition to_partition(const std::vector<int>& parts) { return Partition(parts); }

Bipartition to_bipartition(const std::vector<int>& first, const std::vector<int>& second) {
    return {Partition(first), Partition(second)};
}

py::dict typea_dict(const TypeADecompositionMatrix& mat) {
    py::dict out;
    out["m"] = mat.m;
    out["e"] = mat.e;
    py::list rows, cols;
    for (const auto& r : mat.rows) rows.append(r.str());
    for (const auto& c : mat.cols) cols.append(c.str());
    out["rows"] = rows;
    out["cols"] = cols;
    out["entries"] = mat.entries;
    return out;
}

py::dict dn_dict(const DnDecompositionMatrix& mat) {
    py::dict out;
    out["n"] = mat.n;
    out["e"] = mat.e;
    out["sqrt_sign"] = mat.sqrt_sign_minus ? "-leading" : "+leading";
    py::list rows, cols;
    for (const auto& r : mat.rows) rows.append(r.str());
    for (const auto& c : mat.cols) cols.append(c.str());
    out["rows"] = rows;
    out["cols"] = cols;
    out["entries"] = mat.entries;
    return out;
}

}  // namespace

PYBIND11_MODULE(heckedn, m) {
    m.doc() = "Exact decomposition matrices of the Iwahori-Hecke algebra of type D_n "
              "in the separated case";

    py::register_exception<SeparationFailedError>(m, "SeparationFailed");
    py::register_exception<ViolatedTheoremError>(m, "ViolatedTheorem");

    m.def(
        "quantum_integer", [](long k) { return quantum_integer(k).str(); },
        "The quantum integer [k]_v as canonical text", py::arg("k"));
    m.def(
        "cyclotomic_polynomial",
        [](int e) {
            LaurentPoly p;
            const auto& coeffs = cyclotomic_polynomial(e);
            for (size_t i = 0; i < coeffs.size(); ++i) p.add_term(static_cast<int>(i), 0, coeffs[i]);
            return p.str();
        },
        "Phi_e as canonical text", py::arg("e"));
    m.def(
        "schur_type_a",
        [](const std::vector<int>& la) { return schur_type_a(to_partition(la)).str(); },
        "Type A Schur element s_la(v)", py::arg("partition"));
    m.def(
        "schur_bipartition",
        [](const std::vector<int>& f, const std::vector<int>& s) {
            return schur_bipartition(to_bipartition(f, s)).str();
        },
        "Two-parameter Schur element s_la(v,u)", py::arg("first"), py::arg("second"));
    m.def(
        "f_poly",
        [](const std::vector<int>& f, const std::vector<int>& s, bool one_param) {
            const auto la = to_bipartition(f, s);
            return (one_param ? f_poly_one_param(la) : f_poly(la)).str();
        },
        "The Laurent polynomial f_la", py::arg("first"), py::arg("second"),
        py::arg("one_param") = false);
    m.def(
        "g_poly", [](const std::vector<int>& beta) { return g_poly(to_partition(beta)).str(); },
        "The fixed square root of f_{(beta,beta)}(v)", py::arg("beta"));
    m.def("separation_check", &separation_check, py::arg("n"), py::arg("e"));
    m.def(
        "typea_matrix",
        [](int m_, int e, const std::string& cache_dir) {
            return typea_dict(decomposition_matrix_type_a(m_, e, cache_dir));
        },
        "Type A decomposition matrix in the dual Specht convention", py::arg("m"), py::arg("e"),
        py::arg("cache_dir") = std::string());
    m.def(
        "dn_matrix",
        [](int n, int e, const std::string& sqrt_sign, const std::string& cache_dir) {
            return dn_dict(full_matrix(n, e, sqrt_sign == "minus", cache_dir));
        },
        "Full decomposition matrix of H_q(D_n) in the separated case", py::arg("n"), py::arg("e"),
        py::arg("sqrt_sign") = "plus", py::arg("cache_dir") = std::string());
    m.def(
        "dn_matrix_json",
        [](int n, int e, const std::string& sqrt_sign, const std::string& cache_dir) {
            return render_json(full_matrix(n, e, sqrt_sign == "minus", cache_dir));
        },
        py::arg("n"), py::arg("e"), py::arg("sqrt_sign") = "plus",
        py::arg("cache_dir") = std::string());
    m.def(
        "oracle_f",
        [](const std::vector<int>& f, const std::vector<int>& s) {
            return oracle_f(to_bipartition(f, s)).str();
        },
        "Brute-force central eigenvalue f_la(v,u) from the word-basis engine", py::arg("first"),
        py::arg("second"));
    m.def(
        "verify_specht_scalar",
        [](const std::vector<int>& mu) { return verify_specht_scalar(to_partition(mu)); },
        py::arg("mu"));
    m.def(
        "verify_trace_identity",
        [](const std::vector<int>& f, const std::vector<int>& s) {
            return verify_trace_identity(to_bipartition(f, s));
        },
        py::arg("first"), py::arg("second"));
    m.def("gram_rank_dim_simple",
          [](const std::vector<int>& alpha, int e) {
              return gram_rank_dim_simple(to_partition(alpha), e);
          },
          py::arg("alpha"), py::arg("e"));
    m.def("verify_dimension_consistency", &verify_dimension_consistency, py::arg("m"),
          py::arg("e"));
}
