// Python bindings. Rationals cross the boundary as "p/q" strings so no
// precision is lost; parameter files use the same JSON text as the CLI.

#include <sstream>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tpkit/compound.hpp"
#include "tpkit/condensation.hpp"
#include "tpkit/hankel.hpp"
#include "tpkit/io.hpp"
#include "tpkit/netfact.hpp"
#include "tpkit/positivity.hpp"
#include "tpkit/verify.hpp"

namespace py = pybind11;
using namespace tpkit;

namespace {

using PyMatrix = std::vector<std::vector<std::string>>;

ExactMatrix toMatrix(const PyMatrix& data) {
    if (data.empty() || data.front().empty()) throw ShapeError("empty matrix");
    const int rows = static_cast<int>(data.size());
    const int cols = static_cast<int>(data.front().size());
    ExactMatrix a(rows, cols);
    for (int i = 0; i < rows; ++i) {
        if (static_cast<int>(data[static_cast<size_t>(i)].size()) != cols) {
            throw ShapeError("ragged row at index " + std::to_string(i + 1));
        }
        for (int j = 0; j < cols; ++j) {
            a.at(i + 1, j + 1) =
                parseRational(data[static_cast<size_t>(i)][static_cast<size_t>(j)]);
        }
    }
    return a;
}

PyMatrix fromMatrix(const ExactMatrix& a) {
    PyMatrix out(static_cast<size_t>(a.rows()));
    for (int i = 1; i <= a.rows(); ++i) {
        out[static_cast<size_t>(i - 1)].reserve(static_cast<size_t>(a.cols()));
        for (int j = 1; j <= a.cols(); ++j) {
            out[static_cast<size_t>(i - 1)].push_back(toString(a.at(i, j)));
        }
    }
    return out;
}

IndexSet toIndexSet(const std::vector<int>& v, int bound) { return IndexSet(v, bound); }

py::dict verdictDict(const PositivityVerdict& v) {
    py::dict out;
    out["holds"] = v.holds;
    out["order"] = v.order;
    out["description"] = describe(v);
    if (v.witness) {
        py::dict w;
        w["rows"] = v.witness->rowSet.indices();
        w["cols"] = v.witness->colSet.indices();
        w["value"] = toString(v.witness->value);
        out["witness"] = w;
    } else {
        out["witness"] = py::none();
    }
    return out;
}

FactorizationParams paramsFromJson(const std::string& text) {
    std::istringstream in(text);
    return parseParams(in);
}

} // namespace

PYBIND11_MODULE(_tpkit, m) {
    m.doc() = "exact total-positivity toolkit";

    // Translators run newest-first, so the derived class goes last.
    py::register_exception<Error>(m, "TpkitError", PyExc_RuntimeError);
    py::register_exception<ParseError>(m, "TpkitParseError", PyExc_ValueError);

    m.def("determinant",
          [](const PyMatrix& a) { return toString(determinant(toMatrix(a))); });
    m.def("minor",
          [](const PyMatrix& a, const std::vector<int>& rows, const std::vector<int>& cols) {
              ExactMatrix mat = toMatrix(a);
              return toString(minorOf(mat, toIndexSet(rows, mat.rows()),
                                      toIndexSet(cols, mat.cols())));
          });
    m.def("is_tp", [](const PyMatrix& a, int k) { return verdictDict(isTPk(toMatrix(a), k)); });
    m.def("is_tn", [](const PyMatrix& a, int k) { return verdictDict(isTNk(toMatrix(a), k)); });
    m.def("is_tp2c", [](const PyMatrix& a, const std::string& c) {
        return verdictDict(isTP2c(toMatrix(a), parseRational(c)));
    });
    m.def("tp2c_threshold", [](int n, int precisionBits) {
        Tp2cThreshold t = tp2cThreshold(n, precisionBits);
        return py::make_tuple(toString(t.lower), toString(t.upper));
    }, py::arg("n"), py::arg("precision_bits") = 128);

    m.def("compound", [](const PyMatrix& a, int k) { return fromMatrix(compound(toMatrix(a), k)); });
    m.def("condense", [](const PyMatrix& a, int k) { return fromMatrix(condense(toMatrix(a), k)); });
    m.def("condensation_sequence", [](const PyMatrix& a) {
        CondensationSequence seq = condensationSequence(toMatrix(a));
        py::list stages;
        for (const auto& s : seq.stages) stages.append(fromMatrix(s));
        py::list fallback;
        for (size_t s = 0; s < seq.fallbackFlags.size(); ++s) {
            for (const auto& [i, j] : seq.fallbackFlags[s]) {
                fallback.append(py::make_tuple(s + 1, i, j));
            }
        }
        py::dict out;
        out["stages"] = stages;
        out["determinant"] = toString(seq.finalScalar());
        out["fallback"] = fallback;
        return out;
    });
    m.def("sylvester_check", [](const PyMatrix& a, const std::vector<int>& alpha,
                                const std::vector<int>& delta, const std::vector<int>& gamma) {
        ExactMatrix mat = toMatrix(a);
        SylvesterResult r = sylvesterCheck(mat, toIndexSet(alpha, mat.rows()),
                                           toIndexSet(delta, mat.rows()),
                                           toIndexSet(gamma, mat.rows()));
        py::dict out;
        out["lhs"] = toString(r.lhs);
        out["rhs"] = toString(r.rhs);
        out["holds"] = r.holds;
        return out;
    });

    m.def("factorize",
          [](const PyMatrix& a) { return emitParams(factorize(toMatrix(a))); });
    m.def("assemble",
          [](const std::string& paramsJson) { return fromMatrix(assemble(paramsFromJson(paramsJson))); });
    m.def("generate_tp", [](int n, std::uint64_t seed, std::uint64_t magnitude) {
        return fromMatrix(generateTP(n, seed, magnitude));
    }, py::arg("n"), py::arg("seed"), py::arg("magnitude") = 9);
    m.def("generate_tn_params", [](int n, std::uint64_t seed, std::uint64_t magnitude) {
        return emitParams(generateTNParams(n, seed, magnitude));
    }, py::arg("n"), py::arg("seed"), py::arg("magnitude") = 9);
    m.def("lindstrom_minor", [](const std::string& paramsJson, const std::vector<int>& rows,
                                const std::vector<int>& cols) {
        FactorizationParams params = paramsFromJson(paramsJson);
        PlanarNetwork net = networkFromParams(params);
        return toString(lindstromMinor(net, toIndexSet(rows, params.n),
                                       toIndexSet(cols, params.n)));
    });

    m.def("hankel_from_sequence", [](const std::vector<std::string>& seq) {
        HankelSpec spec;
        for (const auto& s : seq) spec.sequence.push_back(parseRational(s));
        return fromMatrix(hankelFromSequence(spec));
    });
    m.def("is_tp_hankel",
          [](const PyMatrix& a) { return verdictDict(isTPHankel(toMatrix(a))); });
    m.def("moment_sequence", [](int nodes, std::uint64_t seed, std::uint64_t magnitude) {
        std::vector<std::string> out;
        for (const auto& v : momentSequence(nodes, seed, magnitude).sequence) {
            out.push_back(toString(v));
        }
        return out;
    }, py::arg("nodes"), py::arg("seed"), py::arg("magnitude") = 9);

    m.def("verify_paper", [](const std::string& caseName, std::uint64_t seed, int trials) {
        Report r = verifyPaper(caseName, seed, trials);
        py::dict out;
        out["case"] = r.caseName;
        out["pass"] = r.status == ReportStatus::Pass;
        out["text"] = r.toText();
        out["json"] = r.toJson();
        return out;
    }, py::arg("case_name"), py::arg("seed") = 1, py::arg("trials") = 0);
    m.def("verify_paper_cases", []() { return verifyPaperCases(); });
}
