#include "hyperinc/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "hyperinc/labels.hpp"

namespace hyperinc {

namespace {

bool is_blank(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

struct Token {
    std::string text;
    std::size_t column;
};

std::vector<Token> split_tokens(std::string_view s, std::size_t first_column) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && is_blank(s[i])) ++i;
        const std::size_t start = i;
        while (i < s.size() && !is_blank(s[i])) ++i;
        if (i > start) out.push_back({std::string(s.substr(start, i - start)), first_column + start});
    }
    return out;
}

std::pair<std::size_t, std::size_t> position_of(std::string_view text, std::size_t offset) {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

}  // namespace

Hypergraph parse_hypergraph_text(std::string_view text) {
    std::optional<LabelList> header;
    LabelList names;
    std::vector<LabelList> edges;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t end = std::min(text.find('\n', pos), text.size());
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (std::all_of(line.begin(), line.end(), is_blank)) continue;

        const std::size_t colon = line.find(':');
        if (colon == std::string_view::npos) {
            const auto first = std::find_if_not(line.begin(), line.end(), is_blank) - line.begin();
            throw ParseFailure(line_no, first + 1, "expected 'name: v1 v2 ...'");
        }
        const auto head = split_tokens(line.substr(0, colon), 1);
        if (head.size() != 1) throw ParseFailure(line_no, head.empty() ? colon + 1 : head[1].column, "expected a single name before ':'");
        const auto body = split_tokens(line.substr(colon + 1), colon + 2);
        for (const auto& t : body)
            if (t.text.find(':') != std::string::npos)
                throw ParseFailure(line_no, t.column + t.text.find(':'), "unexpected ':'");

        LabelList labels;
        for (const auto& t : body) labels.push_back(t.text);
        if (head[0].text == "vertices") {
            if (header) throw ParseFailure(line_no, head[0].column, "second 'vertices:' line");
            header = std::move(labels);
            continue;
        }
        if (labels.empty()) throw ParseFailure(line_no, colon + 2, "edge '" + head[0].text + "' has no vertices");
        names.push_back(head[0].text);
        edges.push_back(std::move(labels));
    }

    LabelList vertices = header.value_or(LabelList{});
    for (const auto& e : edges) vertices.insert(vertices.end(), e.begin(), e.end());
    return Hypergraph::build(canonical_labels(std::move(vertices)), edges, std::move(names));
}

namespace {

std::string label_from_json(const Json& j, const std::string& where) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number_integer()) return j.dump();
    throw Error(ErrorCode::ParseError, where + ": labels must be strings or integers");
}

LabelList labels_from_json(const Json& j, const std::string& where) {
    if (!j.is_array()) throw Error(ErrorCode::ParseError, where + ": expected an array of labels");
    LabelList out;
    for (const auto& x : j) out.push_back(label_from_json(x, where));
    return out;
}

Json parse_json(std::string_view text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        const auto [line, column] = position_of(text, e.byte == 0 ? 0 : e.byte - 1);
        throw ParseFailure(line, column, "malformed JSON");
    }
}

}  // namespace

Hypergraph parse_hypergraph_json(std::string_view text) {
    const Json j = parse_json(text);
    if (!j.is_object()) throw ParseFailure(1, 1, "expected a JSON object");
    LabelList vertices;
    if (j.contains("vertices")) vertices = labels_from_json(j.at("vertices"), "vertices");
    LabelList names;
    std::vector<LabelList> edges;
    if (!j.contains("edges")) throw Error(ErrorCode::ParseError, "missing \"edges\"");
    const Json& e = j.at("edges");
    if (e.is_object()) {
        for (const auto& [name, members] : e.items()) {
            names.push_back(name);
            edges.push_back(labels_from_json(members, "edge '" + name + "'"));
        }
    } else if (e.is_array()) {
        for (std::size_t i = 0; i < e.size(); ++i) edges.push_back(labels_from_json(e[i], "edge " + std::to_string(i + 1)));
    } else {
        throw Error(ErrorCode::ParseError, "\"edges\" must be an object or an array");
    }
    if (!j.contains("vertices")) {
        for (const auto& x : edges) vertices.insert(vertices.end(), x.begin(), x.end());
        vertices = canonical_labels(std::move(vertices));
    }
    return Hypergraph::build(std::move(vertices), edges, std::move(names));
}

Hypergraph parse_hypergraph(std::string_view text) {
    const auto first = std::find_if_not(text.begin(), text.end(), is_blank);
    if (first != text.end() && *first == '{') return parse_hypergraph_json(text);
    return parse_hypergraph_text(text);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Hypergraph read_hypergraph_file(const std::string& path) { return parse_hypergraph(read_file(path)); }

std::string to_text(const Hypergraph& h) {
    std::string out = "vertices: " + join_labels(h.vertices(), " ") + "\n";
    for (std::size_t e = 0; e < h.edge_count(); ++e)
        out += h.edge_name(e) + ": " + join_labels(h.edge_labels(e), " ") + "\n";
    return out;
}

Json to_json(const Hypergraph& h) {
    Json j;
    j["vertices"] = h.vertices();
    Json edges = Json::object();
    for (std::size_t e = 0; e < h.edge_count(); ++e) edges[h.edge_name(e)] = h.edge_labels(e);
    j["edges"] = std::move(edges);
    return j;
}

namespace {

Rational weight_value(const std::string& name, const std::string& text) {
    Rational q;
    try {
        q = parse_rational(text);
    } catch (const Error&) {
        throw Error(ErrorCode::BadWeightFile, "weight of '" + name + "' is not a rational: '" + text + "'");
    }
    if (q <= 0) throw Error(ErrorCode::BadWeightFile, "weight of '" + name + "' is not positive: " + text);
    return q;
}

}  // namespace

std::map<std::string, Rational> parse_weights(std::string_view text) {
    std::map<std::string, Rational> out;
    auto add = [&](const std::string& name, const std::string& value) {
        if (!out.emplace(name, weight_value(name, value)).second)
            throw Error(ErrorCode::BadWeightFile, "weight of '" + name + "' given twice");
    };
    const auto first = std::find_if_not(text.begin(), text.end(), is_blank);
    if (first != text.end() && *first == '{') {
        Json j;
        try {
            j = Json::parse(text);
        } catch (const Json::parse_error&) {
            throw Error(ErrorCode::BadWeightFile, "malformed JSON");
        }
        for (const auto& [name, value] : j.items()) {
            if (value.is_string()) add(name, value.get<std::string>());
            else if (value.is_number()) add(name, value.dump());
            else throw Error(ErrorCode::BadWeightFile, "weight of '" + name + "' must be a string or number");
        }
        return out;
    }
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        for (auto& c : line)
            if (c == ':') c = ' ';
        const auto tokens = split_tokens(line, 1);
        if (tokens.empty()) continue;
        if (tokens.size() != 2)
            throw Error(ErrorCode::BadWeightFile, "line " + std::to_string(line_no) + ": expected 'edge: weight'");
        add(tokens[0].text, tokens[1].text);
    }
    return out;
}

Json to_json(const VertexVector& x, const LabelList& order) {
    Json j = Json::object();
    for (const auto& label : order) j[label] = to_string(x[label]);
    return j;
}

Json to_json(const CyclotomicVector& x, const LabelList& order) {
    Json j = Json::object();
    for (const auto& label : order) j[label] = x[label].to_string();
    return j;
}

namespace {

Rational rational_from_json(const Json& j, const std::string& what) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_number()) return parse_rational(j.dump());
    throw Error(ErrorCode::InvalidParameters, what + " must be a fraction string or a number");
}

std::size_t count_from_json(const Json& j, const std::string& what) {
    if (!j.is_number_unsigned()) throw Error(ErrorCode::InvalidParameters, what + " must be a non-negative integer");
    return j.get<std::size_t>();
}

const Json& require(const Json& j, const std::string& key) {
    if (!j.contains(key)) throw Error(ErrorCode::InvalidParameters, "certificate is missing \"" + key + "\"");
    return j.at(key);
}

}  // namespace

KernelCertificate certificate_from_json(const Hypergraph& h, const Json& j) {
    if (!j.is_object()) throw Error(ErrorCode::InvalidParameters, "certificate must be a JSON object");
    const Json& kind_json = require(j, "kind");
    if (!kind_json.is_string()) throw Error(ErrorCode::InvalidParameters, "\"kind\" must be a string");
    const auto kind = parse_certificate_kind(kind_json.get<std::string>());
    if (!kind) throw Error(ErrorCode::InvalidParameters, "unknown certificate kind '" + kind_json.get<std::string>() + "'");

    if (*kind == CertificateKind::RootOfUnityCycle)
        return root_of_unity_cycle_certificate(h, count_from_json(require(j, "order"), "order"),
                                               count_from_json(require(j, "power"), "power"));

    std::vector<LabelList> sets;
    const Json& sj = require(j, "sets");
    if (sj.is_array()) {
        for (std::size_t i = 0; i < sj.size(); ++i) sets.push_back(labels_from_json(sj[i], "set " + std::to_string(i + 1)));
    } else if (sj.is_object()) {
        for (const auto& [name, labels] : sj.items()) sets.push_back(labels_from_json(labels, "set " + name));
    } else {
        throw Error(ErrorCode::InvalidParameters, "\"sets\" must be an array or an object");
    }

    auto expect_sets = [&](std::size_t n) {
        if (sets.size() != n)
            throw Error(ErrorCode::InvalidParameters, std::string(to_string(*kind)) + " takes " + std::to_string(n) +
                                                          " sets, got " + std::to_string(sets.size()));
    };
    auto ratio = [&] { return rational_from_json(require(j, "ratio"), "ratio"); };

    switch (*kind) {
        case CertificateKind::EqualEdgePartition:
            expect_sets(2);
            return equal_edge_partition_certificate(h, sets[0], sets[1]);
        case CertificateKind::RatioEdgePartition:
            expect_sets(2);
            return ratio_edge_partition_certificate(h, sets[0], sets[1], ratio());
        case CertificateKind::ThreeSetRelation:
            expect_sets(3);
            return three_set_certificate(h, sets[0], sets[1], sets[2], ratio());
        case CertificateKind::UnitPair:
            expect_sets(2);
            if (sets[0].size() != 1 || sets[1].size() != 1)
                throw Error(ErrorCode::InvalidParameters, "UnitPair sets are single vertices");
            return unit_pair_certificate(h, sets[0][0], sets[1][0]);
        case CertificateKind::EqualVertexPartition:
            expect_sets(2);
            return dual_side_certificates(h, sets[0], sets[1], Rational(1));
        case CertificateKind::RatioVertexPartition: {
            expect_sets(2);
            auto c = dual_side_certificates(h, sets[0], sets[1], ratio());
            c.kind = CertificateKind::RatioVertexPartition;
            return c;
        }
        case CertificateKind::GeneralCombination: {
            const Json& cj = require(j, "coefficients");
            if (!cj.is_array() || cj.size() != sets.size())
                throw Error(ErrorCode::InvalidParameters, "one coefficient per set is required");
            std::vector<std::pair<LabelList, Rational>> parts;
            for (std::size_t i = 0; i < sets.size(); ++i) parts.emplace_back(sets[i], rational_from_json(cj[i], "coefficient"));
            return general_combination_certificate(h, parts);
        }
        case CertificateKind::RootOfUnityCycle: break;
    }
    throw std::logic_error("unhandled certificate kind");
}

Json to_json(const Hypergraph& h, const KernelCertificate& c, const std::optional<VerificationResult>& result) {
    Json j;
    j["kind"] = std::string(to_string(c.kind));
    j["matrix"] = std::string(to_string(c.side));
    const LabelList order = c.side == MatrixSide::EdgeVertex ? h.vertices() : h.edge_names();
    if (c.kind == CertificateKind::RootOfUnityCycle) {
        j["order"] = c.order;
        j["power"] = c.power;
    } else {
        Json sets = Json::object();
        const auto names = set_names(c);
        for (std::size_t i = 0; i < c.sets.size(); ++i) sets[names[i]] = c.sets[i];
        j["sets"] = std::move(sets);
        Json coefficients = Json::array();
        for (const auto& q : c.coefficients) coefficients.push_back(to_string(q));
        j["coefficients"] = std::move(coefficients);
        j["ratio"] = to_string(c.ratio);
    }
    j["vector"] = std::visit([&](const auto& x) { return to_json(x, order); }, c.induced_vector);
    if (result) {
        j["valid"] = result->valid;
        j["combinatorial"] = result->combinatorial;
        j["residual"] = std::visit(
            [&](const auto& x) {
                const LabelList rows = c.side == MatrixSide::EdgeVertex ? h.edge_names() : h.vertices();
                return to_json(x, rows);
            },
            result->residual);
    }
    return j;
}

Json to_json(const PredictedEigenpair& p) {
    Json j;
    j["eigenvalue"] = to_string(p.eigenvalue);
    j["source"] = std::string(to_string(p.source));
    j["class"] = p.class_members;
    j["multiplicity_lower_bound"] = p.multiplicity_lower_bound;
    j["verified"] = p.verified;
    j["independent"] = p.independent;
    Json vectors = Json::array();
    for (const auto& x : p.eigenvectors) {
        Json v = Json::object();
        for (const auto& [label, value] : x.entries()) v[label] = to_string(value);
        vectors.push_back(std::move(v));
    }
    j["eigenvectors"] = std::move(vectors);
    return j;
}

Json to_json(const EigenvalueBound& b) {
    Json j;
    j["eigenvalue"] = to_string(b.eigenvalue);
    j["multiplicity_lower_bound"] = b.multiplicity_lower_bound;
    j["classes_independent"] = b.classes_independent;
    return j;
}

Json to_json(const NullityReport& r) {
    Json j;
    j["vertices"] = r.vertex_count;
    j["units"] = r.unit_count;
    j["rank"] = r.rank;
    j["nullity"] = r.nullity;
    j["contraction_rank"] = r.contraction_rank;
    j["contraction_nullity"] = r.contraction_nullity;
    j["decomposition_holds"] = r.decomposition_holds();
    j["ranks_equal"] = r.ranks_equal();
    return j;
}

Json to_json(const Partition& p) {
    Json j = Json::array();
    for (const auto& c : p) j.push_back(c);
    return j;
}

Json to_json(const RationalMatrix& m) {
    Json j;
    j["rows"] = m.row_labels();
    j["columns"] = m.col_labels();
    Json data = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
        data.push_back(std::move(row));
    }
    j["entries"] = std::move(data);
    return j;
}

}  // namespace hyperinc
