// hyperinc: exact incidence-matrix analyses of hypergraphs from the command line.
//
// Exit status: 0 when every check passes, 1 when a check fails (the failures
// are listed in the report), 2 on usage, parse or domain errors.

#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "hyperinc/generate.hpp"
#include "hyperinc/io.hpp"
#include "hyperinc/kernel.hpp"
#include "hyperinc/labels.hpp"
#include "hyperinc/spectra.hpp"

using namespace hyperinc;

namespace {

struct Report {
    Json json;
    std::ostringstream text;
    std::vector<std::string> failures;

    void check(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
};

std::string render(const VertexVector& x) {
    if (x.is_zero()) return "0";
    std::string out;
    for (const auto& [label, value] : x.entries()) {
        if (!out.empty()) out += ", ";
        out += label + ": " + to_string(value);
    }
    return "{" + out + "}";
}

std::string render(const CyclotomicVector& x) {
    if (x.is_zero()) return "0";
    std::string out;
    for (const auto& [label, value] : x.entries()) {
        if (!out.empty()) out += ", ";
        out += label + ": " + value.to_string();
    }
    return "{" + out + "}";
}

std::string render(const Partition& p) {
    std::string out;
    for (const auto& c : p) {
        if (!out.empty()) out += " ";
        out += "{" + join_labels(c, ",") + "}";
    }
    return out;
}

Json dense_basis(const NullspaceBasis& b) {
    Json out = Json::array();
    for (const auto& v : b.vectors) out.push_back(to_json(v, b.column_labels));
    return out;
}

bool all_in_kernel(const RationalMatrix& m, const NullspaceBasis& b) {
    return std::all_of(b.vectors.begin(), b.vectors.end(), [&](const auto& v) { return matvec(m, v).is_zero(); });
}

void cmd_rank(const Hypergraph& h, Report& r) {
    const RationalMatrix b = edge_vertex_incidence(h);
    const RationalMatrix i = vertex_edge_incidence(h);
    const NullspaceBasis kb = rank_and_nullspace(b);
    const NullspaceBasis ki = rank_and_nullspace(i);
    const std::size_t modular = rank_modular_oracle(b);

    r.check(kb.dimension_check() && ki.dimension_check(), "rank + nullity != column count");
    r.check(modular == kb.rank, "rational rank " + std::to_string(kb.rank) + " != modular rank " + std::to_string(modular));
    r.check(kb.rank == ki.rank, "rank(B_H) != rank(I_H)");
    r.check(all_in_kernel(b, kb), "a basis vector of ker B_H does not vanish");
    r.check(all_in_kernel(i, ki), "a basis vector of ker I_H does not vanish");

    r.json["vertices"] = h.vertex_count();
    r.json["edges"] = h.edge_count();
    r.json["rank"] = kb.rank;
    r.json["nullity"] = kb.nullity();
    r.json["modular_rank"] = modular;
    r.json["kernel_B"] = dense_basis(kb);
    r.json["nullity_I"] = ki.nullity();
    r.json["kernel_I"] = dense_basis(ki);

    r.text << "vertices: " << h.vertex_count() << "  edges: " << h.edge_count() << "\n";
    r.text << "rank B_H: " << kb.rank << "  nullity: " << kb.nullity() << "  (modular check: " << modular << ")\n";
    r.text << "ker B_H basis:\n";
    for (const auto& v : kb.vectors) r.text << "  " << render(v) << "\n";
    r.text << "nullity I_H: " << ki.nullity() << "\nker I_H basis:\n";
    for (const auto& v : ki.vectors) r.text << "  " << render(v) << "\n";
}

void nullity_section(const NullityReport& n, Report& r) {
    r.check(n.ranks_equal(), "rank(B_H) = " + std::to_string(n.rank) + " but rank of the contraction is " +
                                 std::to_string(n.contraction_rank));
    r.check(n.decomposition_holds(), "nullity decomposition fails");
    r.json["nullity"] = to_json(n);
    r.text << "rank B_H = " << n.rank << ", rank of contraction = " << n.contraction_rank << "\n";
    r.text << "nullity " << n.nullity << " = " << n.contraction_nullity << " + (" << n.vertex_count << " - "
           << n.unit_count << ")" << (n.decomposition_holds() ? "" : "  FAILS") << "\n";
}

void cmd_units(const Hypergraph& h, Report& r) {
    const UnitPartition units = compute_units(h);
    Json list = Json::array();
    r.text << units.units.size() << " units\n";
    for (std::size_t u = 0; u < units.units.size(); ++u) {
        LabelList gen;
        for (auto e : units.units[u].generator) gen.push_back(h.edge_name(e));
        const LabelList members = units.member_labels(h, u);
        Json j;
        j["members"] = members;
        j["generator"] = gen;
        list.push_back(std::move(j));
        r.text << "  {" << join_labels(members, ",") << "}  star {" << join_labels(gen, ",") << "}\n";
    }
    r.json["units"] = std::move(list);
    nullity_section(nullity_decomposition(h), r);
}

void cmd_contract(const Hypergraph& h, Report& r) {
    const Contraction c = unit_contraction(h);
    r.json["contracted"] = to_json(c.hypergraph);
    r.text << "contracted hypergraph (" << c.hypergraph.vertex_count() << " vertices, " << c.hypergraph.edge_count()
           << " edges):\n"
           << to_text(c.hypergraph);
    if (c.hypergraph.vertex_count() == h.vertex_count()) {
        // No unit has two members, so H is its own contraction up to relabelling.
        const std::size_t bound = isomorphism_bound_from_env();
        if (h.vertex_count() <= bound) {
            const bool iso = are_isomorphic(h, c.hypergraph, bound).has_value();
            r.check(iso, "non-contractible hypergraph is not isomorphic to its contraction");
            r.json["isomorphic_to_original"] = iso;
            r.text << "not contractible; contraction isomorphic to H: " << (iso ? "yes" : "no") << "\n";
        } else {
            r.json["isomorphic_to_original"] = nullptr;
            r.text << "not contractible; isomorphism check skipped (more than " << bound << " vertices)\n";
        }
    }
    nullity_section(nullity_decomposition(h), r);
}

void add_certificate(const Hypergraph& h, const KernelCertificate& c, const std::string& tag, Report& r, Json& list) {
    const VerificationResult v = verify_certificate(h, c);
    r.check(v.valid, tag + " (" + std::string(to_string(c.kind)) + ") is not in ker " + std::string(to_string(c.side)));
    list.push_back(to_json(h, c, v));
    r.text << tag << " " << to_string(c.kind) << " on " << to_string(c.side) << ": " << (v.valid ? "valid" : "INVALID")
           << "\n";
    const auto names = set_names(c);
    for (std::size_t i = 0; i < c.sets.size(); ++i) r.text << "  " << names[i] << " = {" << join_labels(c.sets[i], ",") << "}\n";
    if (c.kind == CertificateKind::RatioEdgePartition || c.kind == CertificateKind::RatioVertexPartition ||
        c.kind == CertificateKind::ThreeSetRelation)
        r.text << "  r = " << to_string(c.ratio) << "\n";
    if (c.kind == CertificateKind::RootOfUnityCycle) r.text << "  omega = zeta_" << c.order << "^" << c.power << "\n";
    r.text << "  vector " << std::visit([](const auto& x) { return render(x); }, c.induced_vector) << "\n";
    if (!v.valid) r.text << "  residual " << std::visit([](const auto& x) { return render(x); }, v.residual) << "\n";
}

void cmd_verify(const Hypergraph& h, const std::string& cert_path, Report& r) {
    Json j;
    const std::string text = read_file(cert_path);
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw Error(ErrorCode::ParseError, cert_path + ": " + e.what());
    }
    if (!j.is_array()) j = Json::array({j});
    Json list = Json::array();
    for (std::size_t i = 0; i < j.size(); ++i)
        add_certificate(h, certificate_from_json(h, j[i]), "certificate " + std::to_string(i + 1), r, list);
    r.json["certificates"] = std::move(list);
}

void cmd_find(const Hypergraph& h, CertificateKind kind, const FinderBounds& bounds, Report& r) {
    const auto found = find_certificates_exhaustive(h, kind, bounds);
    Json list = Json::array();
    r.text << found.size() << " certificate(s) of kind " << to_string(kind) << "\n";
    for (std::size_t i = 0; i < found.size(); ++i) add_certificate(h, found[i], "#" + std::to_string(i + 1), r, list);
    r.json["kind"] = std::string(to_string(kind));
    r.json["count"] = found.size();
    r.json["certificates"] = std::move(list);
}

void eigen_section(const Hypergraph& h, const std::vector<PredictedEigenpair>& pairs, const std::string& key,
                   Report& r) {
    Json list = Json::array();
    for (const auto& p : pairs) {
        r.check(p.verified, "A x != lambda x for class {" + join_labels(p.class_members, ",") + "}");
        r.check(p.independent, "eigenvectors of class {" + join_labels(p.class_members, ",") + "} are dependent");
        list.push_back(to_json(p));
        r.text << "  lambda = " << to_string(p.eigenvalue) << "  multiplicity >= " << p.multiplicity_lower_bound
               << "  class {" << join_labels(p.class_members, ",") << "}  " << (p.verified ? "verified" : "NOT VERIFIED")
               << "\n";
    }
    r.json[key] = std::move(list);
    Json summary = Json::array();
    for (const auto& b : summarize_eigenvalues(h, pairs)) {
        r.check(b.classes_independent, "eigenvectors for " + to_string(b.eigenvalue) + " are dependent across classes");
        summary.push_back(to_json(b));
        r.text << "  total: lambda = " << to_string(b.eigenvalue) << "  multiplicity >= " << b.multiplicity_lower_bound
               << "\n";
    }
    r.json[key + "_summary"] = std::move(summary);
}

void cmd_spectra(const Hypergraph& h, const std::string& weighting, bool print_matrix, Report& r) {
    EdgeWeighting w;
    if (weighting == "unit") w = EdgeWeighting::unit(h);
    else if (weighting == "banerjee") w = EdgeWeighting::banerjee(h);
    else {
        auto weights = parse_weights(read_file(weighting));
        for (const auto& [name, value] : weights)
            if (!h.find_edge(name)) throw Error(ErrorCode::BadWeightFile, "weight given for unknown edge '" + name + "'");
        for (const auto& name : h.edge_names())
            if (!weights.count(name)) throw Error(ErrorCode::BadWeightFile, "no weight for edge '" + name + "'");
        w = EdgeWeighting::custom(h, weights);
    }
    const WeightedAdjacency a = weighted_adjacency(h, w);
    const Partition classes = matrix_equivalence(a.matrix);
    const Partition units = unit_partition(h);
    const bool finer = is_finer(units, classes);
    r.check(finer, "unit partition does not refine R_A");

    r.json["weighting"] = std::string(to_string(w.preset));
    Json weights = Json::object();
    for (std::size_t e = 0; e < h.edge_count(); ++e) weights[h.edge_name(e)] = to_string(w.weights[e]);
    r.json["weights"] = std::move(weights);
    if (print_matrix) r.json["adjacency"] = to_json(a.matrix);
    r.json["equivalence_classes"] = to_json(classes);
    r.json["units_finer"] = finer;

    r.text << "weighting: " << to_string(w.preset) << "\n";
    if (print_matrix) {
        r.text << "adjacency matrix (rows/columns " << join_labels(h.vertices(), " ") << "):\n";
        for (std::size_t i = 0; i < a.matrix.rows(); ++i) {
            r.text << " ";
            for (std::size_t j = 0; j < a.matrix.cols(); ++j) r.text << " " << to_string(a.matrix(i, j));
            r.text << "\n";
        }
    }
    r.text << "R_A classes: " << render(classes) << "\n";
    r.text << "units refine R_A: " << (finer ? "yes" : "no") << "\n";
    r.text << "unit eigenpairs:\n";
    eigen_section(h, predict_unit_eigenpairs(h, w), "unit_eigenpairs", r);
    r.text << "class eigenpairs:\n";
    eigen_section(h, predict_class_eigenpairs(h, w, classes), "class_eigenpairs", r);
}

int emit(const std::string& command, Report& r, bool json) {
    if (json) {
        Json out;
        out["command"] = command;
        for (auto& [key, value] : r.json.items()) out[key] = value;
        out["ok"] = r.failures.empty();
        out["failures"] = r.failures;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << r.text.str();
        for (const auto& f : r.failures) std::cout << "FAILED: " << f << "\n";
    }
    return r.failures.empty() ? 0 : 1;
}

int fail(const std::string& code, const std::string& message, bool json) {
    if (json) {
        Json out;
        out["error"] = {{"code", code}, {"message", message}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cerr << "hyperinc: " << message << "\n";
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact incidence-matrix analyses of hypergraphs"};
    app.require_subcommand(1);
    app.fallthrough();
    bool json = false;
    app.add_flag("--json", json, "Emit a JSON report");

    std::string file;
    auto* rank = app.add_subcommand("rank", "Rank, nullity and kernel bases of B_H and I_H");
    rank->add_option("file", file, "Hypergraph file")->required();
    auto* units = app.add_subcommand("units", "Units, their stars and the nullity decomposition");
    units->add_option("file", file, "Hypergraph file")->required();
    auto* contract = app.add_subcommand("contract", "Unit contraction and rank comparison");
    contract->add_option("file", file, "Hypergraph file")->required();

    std::string cert;
    auto* verify = app.add_subcommand("verify", "Check kernel certificates given as JSON");
    verify->add_option("file", file, "Hypergraph file")->required();
    verify->add_option("certificate", cert, "Certificate JSON (object or array)")->required();

    std::string kind_name;
    std::size_t max_size = 12;
    std::size_t limit = 0;
    auto* find = app.add_subcommand("find", "Enumerate certificates of one kind");
    find->add_option("file", file, "Hypergraph file")->required();
    find->add_option("--kind", kind_name, "Certificate kind")->required();
    find->add_option("--max-size", max_size, "Refuse ground sets larger than this")->capture_default_str();
    find->add_option("--limit", limit, "Stop after this many certificates (0: no limit)");

    std::string weighting = "unit";
    bool print_matrix = false;
    auto* spectra = app.add_subcommand("spectra", "Predicted adjacency eigenpairs, verified exactly");
    spectra->add_option("file", file, "Hypergraph file")->required();
    spectra->add_option("--weighting", weighting, "unit, banerjee, or a weight file")->capture_default_str();
    spectra->add_flag("--matrix", print_matrix, "Include the adjacency matrix");

    std::vector<std::string> gen_args;
    std::uint64_t seed = 1;
    auto* generate = app.add_subcommand("generate", "cycle N K | random N M MAXSIZE");
    generate->add_option("args", gen_args, "Family and parameters")->required()->expected(3, 4);
    generate->add_option("--seed", seed, "Seed for random")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        if (command == "generate") {
            auto num = [&](std::size_t i) -> std::size_t {
                try {
                    std::size_t pos = 0;
                    const auto v = std::stoull(gen_args.at(i), &pos);
                    if (pos == gen_args[i].size()) return v;
                } catch (const std::exception&) {
                }
                throw Error(ErrorCode::InvalidParameters, "expected a non-negative integer, got '" + gen_args.at(i) + "'");
            };
            Hypergraph h = [&] {
                if (gen_args[0] == "cycle" && gen_args.size() == 3) return uniform_cycle(num(1), num(2));
                if (gen_args[0] == "random" && gen_args.size() == 4) return random_hypergraph(num(1), num(2), num(3), seed);
                throw Error(ErrorCode::InvalidParameters, "usage: generate cycle N K | generate random N M MAXSIZE [--seed S]");
            }();
            std::cout << (json ? to_json(h).dump(2) + "\n" : to_text(h));
            return 0;
        }

        const Hypergraph h = read_hypergraph_file(file);
        Report r;
        if (command == "rank") cmd_rank(h, r);
        else if (command == "units") cmd_units(h, r);
        else if (command == "contract") cmd_contract(h, r);
        else if (command == "verify") cmd_verify(h, cert, r);
        else if (command == "find") {
            const auto kind = parse_certificate_kind(kind_name);
            if (!kind) throw Error(ErrorCode::InvalidParameters, "unknown kind '" + kind_name + "'");
            FinderBounds bounds;
            bounds.max_vertices = bounds.max_edges = max_size;
            if (limit > 0) bounds.max_results = limit;
            cmd_find(h, *kind, bounds, r);
        } else if (command == "spectra") cmd_spectra(h, weighting, print_matrix, r);
        return emit(command, r, json);
    } catch (const Error& e) {
        return fail(std::string(to_string(e.code())), e.what(), json);
    } catch (const std::logic_error& e) {
        return fail("InternalInconsistency", e.what(), json);
    }
}
