// Python bindings for the main pipeline operations: the tree catalog, Newick
// handling, per-entry computation, database builds, and verification.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "phylotoric/database.hpp"
#include "phylotoric/version.hpp"

namespace py = pybind11;
using namespace phylotoric;

namespace {

py::dict record_to_dict(const InvariantRecord& r) {
    py::dict d;
    d["tree_id"] = r.tree_id;
    d["model_id"] = r.model_id;
    d["newick"] = r.newick;
    d["group"] = r.group;
    d["n_leaves"] = r.n_leaves;
    d["np"] = r.np;
    d["nq"] = r.nq;
    d["distinct_p_classes"] = r.distinct_p_classes;
    d["dim_cone"] = r.dim_cone;
    d["dim_projective"] = r.dim_projective;
    d["degree"] = py::int_(py::str(r.degree.get_str()));
    py::dict profile;
    for (const auto& [deg, count] : r.degree_profile)
        profile[py::int_(deg)] = py::int_(count);
    d["degree_profile"] = profile;
    if (r.volume_degree) d["volume_degree"] = py::int_(py::str(r.volume_degree->get_str()));
    d["computed_by"] = r.computed_by;
    py::dict conv;
    for (const auto& [k, v] : r.conventions) conv[py::str(k)] = v;
    d["conventions"] = conv;
    py::dict ref;
    for (const auto& [k, v] : r.reference_only) {
        py::dict entry;
        entry["value"] = v.value;
        entry["source"] = v.source;
        ref[py::str(k)] = entry;
    }
    d["reference_only"] = ref;
    return d;
}

PipelineResult compute_for(const std::string& newick, const std::string& model_id,
                           std::optional<std::uint64_t> step_budget) {
    PhyloTree tree = parse_newick(newick);
    PipelineOptions options;
    options.step_budget = step_budget;
    return compute_entry(tree, model_by_id(model_id), options);
}

} // namespace

PYBIND11_MODULE(_phylotoric, m) {
    m.doc() = "algebraic invariants of group-based phylogenetic models";
    m.attr("__version__") = kToolVersion;

    py::register_exception<ParseError>(m, "PhyloParseError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "PhyloDomainError", PyExc_ValueError);
    py::register_exception<BudgetExceeded>(m, "PhyloBudgetExceeded", PyExc_RuntimeError);

    m.def("catalog", [](int max_leaves) {
        py::list out;
        for (const auto& entry : catalog(max_leaves)) {
            py::dict d;
            d["tree_id"] = entry.tree_id;
            d["n_leaves"] = entry.shape.n_leaves();
            d["n_edges"] = entry.shape.n_edges();
            d["newick"] = entry.newick;
            out.append(d);
        }
        return out;
    }, py::arg("max_leaves") = 5, "catalog of unrooted tree shapes, 3..max_leaves leaves");

    m.def("canonical_newick", [](const std::string& s) { return to_newick(parse_newick(s)); },
          py::arg("newick"), "parse and reprint in the canonical form");

    m.def("models", [] {
        py::list out;
        for (const auto& model : builtin_models()) {
            py::dict d;
            d["model_id"] = model.id;
            d["group"] = model.group.label();
            d["classes"] = model.n_classes;
            d["fourier_classes"] = model.n_fourier_classes;
            d["state_map"] = model.state_map_description();
            out.append(d);
        }
        return out;
    }, "the four built-in group-based substitution models");

    m.def("compute", [](const std::string& newick, const std::string& model_id,
                        std::optional<std::uint64_t> step_budget) {
        return record_to_dict(compute_for(newick, model_id, step_budget).record);
    }, py::arg("newick"), py::arg("model") = "JC", py::arg("step_budget") = py::none(),
       "full pipeline for one tree and model; returns the invariant record");

    m.def("fourier_ideal", [](const std::string& newick, const std::string& model_id) {
        PipelineResult r = compute_for(newick, model_id, std::nullopt);
        py::list gens;
        for (const auto& g : r.ideal.basis()->elements) gens.append(g.str());
        return gens;
    }, py::arg("newick"), py::arg("model") = "JC",
       "reduced degrevlex basis of the toric ideal in Fourier coordinates");

    m.def("parametrizations", [](const std::string& newick, const std::string& model_id) {
        PipelineResult r = compute_for(newick, model_id, std::nullopt);
        py::dict d;
        py::list p, q;
        for (const auto& c : r.pm.coords) p.append(c.str());
        for (const auto& c : r.fm.coords)
            q.append(c ? Polynomial::from_monomial(r.fm.ring, *c).str() : std::string("0"));
        d["probability"] = p;
        d["fourier"] = q;
        return d;
    }, py::arg("newick"), py::arg("model") = "JC",
       "coordinate lists of both parametrizations, as polynomial text");

    m.def("verify_commutes", [](const std::string& newick, const std::string& model_id) {
        return verify_commutes(parse_newick(newick), model_by_id(model_id));
    }, py::arg("newick"), py::arg("model") = "JC");

    m.def("emit_entry", [](const std::string& newick, const std::string& model_id,
                           const std::string& out_dir) {
        return emit_entry(compute_for(newick, model_id, std::nullopt), out_dir);
    }, py::arg("newick"), py::arg("model"), py::arg("out_dir"),
       "write the per-entry database files; returns the file names");

    m.def("build_db", [](int max_leaves, const std::string& out_dir, int jobs) {
        BuildReport report = build_database(max_leaves, {}, out_dir, jobs);
        py::list out;
        for (const auto& e : report.entries) {
            py::dict d;
            d["tree_id"] = e.tree_id;
            d["model_id"] = e.model_id;
            d["status"] = e.status;
            if (!e.error.empty()) d["error"] = e.error;
            out.append(d);
        }
        return out;
    }, py::arg("max_leaves") = 4, py::arg("out_dir"), py::arg("jobs") = 1);

    m.def("verify", [](const std::string& db_dir, const std::string& reference) {
        VerifyReport report = verify_reference(db_dir, reference);
        py::dict d;
        d["ok"] = !report.any_mismatch;
        d["text"] = report.text();
        return d;
    }, py::arg("db_dir"), py::arg("reference"));
}
